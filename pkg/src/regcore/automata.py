"""NFA algebra over the five-letter encoding alphabet.

Automata are immutable after construction; every operation returns a fresh
automaton.  States are dense integers 0..n-1.  All public operations assume
(and produce) epsilon-free automata; the regex compiler eliminates epsilon
transitions before handing automata out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

# Fixed alphabet, listed in shortlex tie-break order (= ASCII order).
SIGMA = ("#", "$", "1", ">", "a")
_SIGMA_SET = frozenset(SIGMA)


class AutomatonError(ValueError):
    """Malformed automaton or invalid state reference."""


class DeterminizationGuardError(RuntimeError):
    """Raised when a subset construction would exceed the state bound."""


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA over SIGMA with dense integer states."""

    n_states: int
    initial: int
    finals: frozenset[int]
    transitions: frozenset[tuple[int, str, int]]
    _adj: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.n_states < 1:
            raise AutomatonError("automaton needs at least one state")
        if not (0 <= self.initial < self.n_states):
            raise AutomatonError(f"initial state {self.initial} out of range")
        for q in self.finals:
            if not (0 <= q < self.n_states):
                raise AutomatonError(f"final state {q} out of range")
        adj: dict[tuple[int, str], list[int]] = {}
        for (src, sym, dst) in self.transitions:
            if sym not in _SIGMA_SET:
                raise AutomatonError(f"unknown symbol {sym!r}")
            if not (0 <= src < self.n_states and 0 <= dst < self.n_states):
                raise AutomatonError(f"transition ({src},{sym},{dst}) out of range")
            adj.setdefault((src, sym), []).append(dst)
        frozen = {k: tuple(sorted(v)) for k, v in adj.items()}
        object.__setattr__(self, "_adj", frozen)

    def step(self, states: Iterable[int], sym: str) -> frozenset[int]:
        """Set of states reachable from `states` by one `sym` transition."""
        out: set[int] = set()
        adj = self._adj
        for q in states:
            out.update(adj.get((q, sym), ()))
        return frozenset(out)

    def run(self, word: str) -> frozenset[int]:
        states: frozenset[int] = frozenset((self.initial,))
        for sym in word:
            states = self.step(states, sym)
            if not states:
                break
        return states

    def out_edges(self, q: int) -> list[tuple[str, int]]:
        return [(sym, dst) for (src, sym, dst) in self.transitions if src == q]


def make_nfa(n_states: int, initial: int, finals: Iterable[int],
             transitions: Iterable[tuple[int, str, int]]) -> Nfa:
    return Nfa(n_states, initial, frozenset(finals), frozenset(transitions))


def empty_nfa() -> Nfa:
    """The canonical automaton for the empty language."""
    return Nfa(1, 0, frozenset(), frozenset())


def from_word(word: str) -> Nfa:
    """Chain automaton accepting exactly `word`."""
    trans = [(i, sym, i + 1) for i, sym in enumerate(word)]
    return make_nfa(len(word) + 1, 0, [len(word)], trans)


def contains(m: Nfa, w: str) -> bool:
    """Membership by state-set simulation."""
    return bool(m.run(w) & m.finals)


def _reachable(m: Nfa) -> set[int]:
    seen = {m.initial}
    stack = [m.initial]
    fwd: dict[int, list[int]] = {}
    for (src, _, dst) in m.transitions:
        fwd.setdefault(src, []).append(dst)
    while stack:
        q = stack.pop()
        for dst in fwd.get(q, ()):
            if dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return seen


def _coreachable(m: Nfa) -> set[int]:
    back: dict[int, list[int]] = {}
    for (src, _, dst) in m.transitions:
        back.setdefault(dst, []).append(src)
    seen = set(m.finals)
    stack = list(m.finals)
    while stack:
        q = stack.pop()
        for src in back.get(q, ()):
            if src not in seen:
                seen.add(src)
                stack.append(src)
    return seen


def trim(m: Nfa) -> Nfa:
    """Restrict to states both reachable and co-reachable; language unchanged.

    The result is relabeled densely in BFS order from the initial state, so
    repeated trimming is stable up to isomorphism.  An empty language yields
    the one-state automaton with a non-accepting initial state.
    """
    keep = _reachable(m) & _coreachable(m)
    if m.initial not in keep:
        return empty_nfa()
    # BFS order for deterministic dense relabeling.
    order = [m.initial]
    seen = {m.initial}
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for sym in SIGMA:
            for dst in m._adj.get((q, sym), ()):
                if dst in keep and dst not in seen:
                    seen.add(dst)
                    order.append(dst)
    label = {q: i for i, q in enumerate(order)}
    trans = [(label[s], sym, label[d]) for (s, sym, d) in m.transitions
             if s in label and d in label]
    finals = [label[q] for q in m.finals if q in label]
    return make_nfa(len(order), 0, finals, trans)


def sub_automaton(m: Nfa, p: int, q: int) -> Nfa:
    """Same transition structure, initial p, finals {q}."""
    if not (0 <= p < m.n_states and 0 <= q < m.n_states):
        raise AutomatonError(f"unknown state id in ({p},{q})")
    return Nfa(m.n_states, p, frozenset((q,)), m.transitions)


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Trimmed product automaton with L = L(a) ∩ L(b)."""
    start = (a.initial, b.initial)
    index = {start: 0}
    order = [start]
    trans: list[tuple[int, str, int]] = []
    i = 0
    while i < len(order):
        (pa, pb) = order[i]
        i += 1
        for sym in SIGMA:
            da = a._adj.get((pa, sym))
            if not da:
                continue
            db = b._adj.get((pb, sym))
            if not db:
                continue
            for qa in da:
                for qb in db:
                    key = (qa, qb)
                    if key not in index:
                        index[key] = len(order)
                        order.append(key)
                    trans.append((index[(pa, pb)], sym, index[key]))
    finals = [index[(qa, qb)] for (qa, qb) in order
              if qa in a.finals and qb in b.finals]
    return trim(make_nfa(len(order), 0, finals, trans))


def is_empty(m: Nfa) -> bool:
    return not (_reachable(m) & set(m.finals))


def is_finite(m: Nfa) -> bool:
    """True iff L(m) is finite: the trimmed automaton has no cycle."""
    t = trim(m)
    # Iterative DFS cycle detection on the transition graph.
    fwd: dict[int, list[int]] = {}
    for (src, _, dst) in t.transitions:
        fwd.setdefault(src, []).append(dst)
    color = [0] * t.n_states  # 0 new, 1 on stack, 2 done
    for root in range(t.n_states):
        if color[root]:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        color[root] = 1
        while stack:
            q, idx = stack[-1]
            succ = fwd.get(q, ())
            if idx < len(succ):
                stack[-1] = (q, idx + 1)
                nxt = succ[idx]
                if color[nxt] == 1:
                    return False
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, 0))
            else:
                color[q] = 2
                stack.pop()
    return True


def min_dist_to_final(m: Nfa) -> list[int | None]:
    """Per state, the length of a shortest path into a final state."""
    back: dict[int, list[int]] = {}
    for (src, _, dst) in m.transitions:
        back.setdefault(dst, []).append(src)
    dist: list[int | None] = [None] * m.n_states
    frontier = list(m.finals)
    for q in frontier:
        dist[q] = 0
    d = 0
    while frontier:
        d += 1
        nxt = []
        for q in frontier:
            for src in back.get(q, ()):
                if dist[src] is None:
                    dist[src] = d
                    nxt.append(src)
        frontier = nxt
    return dist


def words_up_to(m: Nfa, max_len: int) -> Iterator[str]:
    """All words of L(m) with length <= max_len, in shortlex order.

    Explores only prefixes completable within the budget, so the cost is
    proportional to the words actually emitted.
    """
    t = trim(m)
    if is_empty(t):
        return
    dist = min_dist_to_final(t)
    for length in range(max_len + 1):
        yield from _words_exact(t, dist, length)


def _words_exact(t: Nfa, dist: list[int | None], length: int) -> Iterator[str]:
    # DFS in symbol order; prune branches that cannot reach a final in budget.
    start: frozenset[int] = frozenset((t.initial,))
    path: list[str] = []

    def rec(states: frozenset[int], remaining: int) -> Iterator[str]:
        if remaining == 0:
            if states & t.finals:
                yield "".join(path)
            return
        for sym in SIGMA:
            nxt = t.step(states, sym)
            if not nxt:
                continue
            if not any(dist[q] is not None and dist[q] <= remaining - 1 for q in nxt):
                continue
            path.append(sym)
            yield from rec(nxt, remaining - 1)
            path.pop()

    yield from rec(start, length)


def shortlex_iter(m: Nfa) -> Iterator[str]:
    """Yield L(m) in shortlex order; terminates iff the language is finite."""
    t = trim(m)
    if is_empty(t):
        return
    dist = min_dist_to_final(t)
    finite = is_finite(t)
    # A trimmed finite language has no cycle, so words are shorter than n_states.
    length = 0
    while True:
        if finite and length >= t.n_states:
            return
        yield from _words_exact(t, dist, length)
        length += 1


def strip_suffix(m: Nfa, k: int) -> Nfa:
    """L(result) = { w : exists u with |u| = k and wu in L(m) }."""
    if k < 0:
        raise AutomatonError("suffix length must be >= 0")
    layer = set(m.finals)
    for _ in range(k):
        back: set[int] = set()
        for (src, _, dst) in m.transitions:
            if dst in layer:
                back.add(src)
        layer = back
        if not layer:
            return empty_nfa()
    return trim(Nfa(m.n_states, m.initial, frozenset(layer), m.transitions))


def determinize(m: Nfa, max_states: int = 4096) -> Nfa:
    """Subset construction; complete over SIGMA (includes a sink)."""
    start = frozenset((m.initial,))
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for sym in SIGMA:
            nxt = m.step(s, sym)
            if nxt not in index:
                if len(index) >= max_states:
                    raise DeterminizationGuardError(
                        f"determinization exceeds {max_states} states")
                index[nxt] = len(order)
                order.append(nxt)
            trans.append((index[s], sym, index[nxt]))
    finals = [index[s] for s in order if s & m.finals]
    return make_nfa(len(order), 0, finals, trans)


def is_subset(a: Nfa, b: Nfa, max_states: int = 12) -> bool:
    """L(a) ⊆ L(b), via emptiness of a ∩ complement(b).

    Refuses right operands beyond `max_states` states: the subset construction
    may blow up and desk-scale inputs stay small.
    """
    if b.n_states > max_states:
        raise DeterminizationGuardError(
            f"is_subset right operand has {b.n_states} states (bound {max_states})")
    d = determinize(b, max_states=2 ** max_states)
    comp = Nfa(d.n_states, d.initial,
               frozenset(range(d.n_states)) - d.finals, d.transitions)
    return is_empty(intersect(a, comp))


# --- JSON wire format -------------------------------------------------------
#
# {"states": n, "initial": 0, "finals": [..], "transitions": [[src,"a",dst],..]}

def nfa_to_json(m: Nfa) -> dict:
    return {
        "states": m.n_states,
        "initial": m.initial,
        "finals": sorted(m.finals),
        "transitions": sorted([s, sym, d] for (s, sym, d) in m.transitions),
    }


def nfa_from_json(obj: dict) -> Nfa:
    try:
        return make_nfa(obj["states"], obj["initial"], obj["finals"],
                        [(s, sym, d) for (s, sym, d) in obj["transitions"]])
    except (KeyError, TypeError) as exc:
        raise AutomatonError(f"malformed automaton JSON: {exc}") from exc


def load_nfa(path: str) -> Nfa:
    with open(path, "r", encoding="utf-8") as fh:
        return nfa_from_json(json.load(fh))
