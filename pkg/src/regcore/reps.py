"""Representative functions and the finite core.

Token sets per state pair, the three pick functions (threshold / merge /
separate), condensed automata, the finite-core computation, and the
deletion-based word reduction.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from . import automata
from .automata import Nfa, intersect, is_empty, is_finite, sub_automaton, trim
from .encoding import (
    EncodingError, Token, TokenKind, characteristic_factorization,
    left_token_nfa, render, right_token_nfa, threshold_token_nfa, tokenize,
    vertex_token_nfa, left_vertex, right_vertex, threshold,
)
from .graphs import Graph, RedBlueGraph, red_blue_graph


class SearchBudgetError(RuntimeError):
    """A fixed-point or enumeration exceeded its configured node budget."""


# --- unary structure of token languages ---------------------------------------
#
# Every token language lives inside >x*c for a body letter x and close letters
# c.  After reading '>', the state-set sequence under repeated x is eventually
# periodic; from that cycle the whole set of accepted magnitudes falls out.

@dataclass(frozen=True)
class UnaryStructure:
    """Accepted magnitudes of a token language, by closing symbol.

    accept[i] is the set of close symbols accepted at magnitude i, for
    0 <= i < loop_end; for i >= loop_start the pattern repeats with period
    (loop_end - loop_start).  A degenerate language has loop_end == loop_start.
    """

    accept: tuple[frozenset[str], ...]
    loop_start: int
    loop_end: int

    def accepts(self, i: int) -> frozenset[str]:
        if i < self.loop_end:
            return self.accept[i]
        if self.loop_end == self.loop_start:
            return frozenset()
        period = self.loop_end - self.loop_start
        return self.accept[self.loop_start + (i - self.loop_start) % period]

    @property
    def infinite(self) -> bool:
        return any(self.accept[i] for i in range(self.loop_start, self.loop_end))

    def magnitudes(self):
        """Ascending magnitudes with a nonempty accept set; may be infinite."""
        i = 0
        while True:
            if i >= self.loop_end and not self.infinite:
                return
            if self.accepts(i):
                yield i
            i += 1

    def smallest_at_least(self, bound: int) -> int | None:
        """Smallest accepted magnitude >= bound, or None."""
        for i in range(min(bound, 0), self.loop_end):
            if i >= bound and self.accepts(i):
                return i
        if not self.infinite:
            return None
        period = self.loop_end - self.loop_start
        best = None
        for i in range(self.loop_start, self.loop_end):
            if not self.accepts(i):
                continue
            if i >= bound:
                cand = i
            else:
                cand = i + ((bound - i + period - 1) // period) * period
            best = cand if best is None else min(best, cand)
        return best


def unary_structure(m: Nfa, body: str, closes: str) -> UnaryStructure:
    """Cycle-detected acceptance pattern of L(m) ∩ >body*({closes})."""
    final_set = set(m.finals)
    state = m.step((m.initial,), ">")
    seen: dict[frozenset[int], int] = {}
    accept: list[frozenset[str]] = []
    states_at: list[frozenset[int]] = []
    i = 0
    while state not in seen:
        seen[state] = i
        states_at.append(state)
        accept.append(frozenset(
            c for c in closes if m.step(state, c) & final_set))
        state = m.step(state, body)
        i += 1
    loop_start = seen[state]
    return UnaryStructure(tuple(accept), loop_start, i)


# --- token sets ----------------------------------------------------------------

@dataclass(frozen=True)
class TokenSets:
    """Per-state-pair token languages of an automaton over the encoding.

    K[(q0, p)] holds threshold tokens, V[(p, q)] vertex tokens, and
    VG[(p, q)] the vertex stems (V with the closing symbol stripped), all as
    trimmed automata.  Entries absent from the maps are empty languages.
    """

    n_states: int
    initial: int
    K: dict[tuple[int, int], Nfa]
    V: dict[tuple[int, int], Nfa]
    VG: dict[tuple[int, int], Nfa]
    K_infinite: frozenset[tuple[int, int]]
    V_infinite: frozenset[tuple[int, int]]


def token_sets(m: Nfa) -> TokenSets:
    """All K/V/V^G entries of a trimmed automaton over the encoding."""
    thresh, vert = threshold_token_nfa(), vertex_token_nfa()
    K: dict[tuple[int, int], Nfa] = {}
    V: dict[tuple[int, int], Nfa] = {}
    VG: dict[tuple[int, int], Nfa] = {}
    k_inf, v_inf = set(), set()
    for p in range(m.n_states):
        for q in range(m.n_states):
            sub = sub_automaton(m, p, q)
            if p == m.initial:
                kt = intersect(sub, thresh)
                if not is_empty(kt):
                    K[(p, q)] = kt
                    if not is_finite(kt):
                        k_inf.add((p, q))
            vt = intersect(sub, vert)
            if not is_empty(vt):
                V[(p, q)] = vt
                VG[(p, q)] = automata.strip_suffix(vt, 1)
                if not is_finite(vt):
                    v_inf.add((p, q))
    return TokenSets(m.n_states, m.initial, K, V, VG,
                     frozenset(k_inf), frozenset(v_inf))


def split_by_close(V: dict[tuple[int, int], Nfa], close: str) -> dict:
    """Restrict each vertex token entry to tokens ending with `close`."""
    pattern = left_token_nfa() if close == "#" else right_token_nfa()
    out = {}
    for pair, nfa in V.items():
        r = intersect(nfa, pattern)
        if not is_empty(r):
            out[pair] = r
    return out


# --- representative functions ----------------------------------------------------

@dataclass(frozen=True)
class RepFunction:
    """Finite ordered token sets per state pair, each inside L(M[p, q])."""

    table: dict[tuple[int, int], tuple[Token, ...]] = field(default_factory=dict)

    def tokens(self, p: int, q: int) -> tuple[Token, ...]:
        return self.table.get((p, q), ())

    def pairs(self):
        return sorted(self.table)

    def all_tokens(self) -> list[Token]:
        return [t for pair in self.pairs() for t in self.table[pair]]

    def total(self) -> int:
        return sum(len(v) for v in self.table.values())

    def max_token_length(self) -> int:
        lengths = [t.length for ts in self.table.values() for t in ts]
        return max(lengths, default=0)

    def to_json(self) -> dict:
        return {f"({p},{q})": [t.word for t in ts]
                for (p, q), ts in sorted(self.table.items())}


def _fragment(entries: dict[tuple[int, int], list[Token]]) -> RepFunction:
    table = {}
    for pair, toks in entries.items():
        if not toks:
            continue
        seen = set()
        ordered = []
        for t in toks:
            if t not in seen:
                seen.add(t)
                ordered.append(t)
        table[pair] = tuple(sorted(ordered))
    return RepFunction(table)


def union_reps(*fragments: RepFunction) -> RepFunction:
    """Pointwise union with order-preserving dedup."""
    entries: dict[tuple[int, int], list[Token]] = {}
    for frag in fragments:
        for pair, toks in frag.table.items():
            entries.setdefault(pair, []).extend(toks)
    return _fragment(entries)


def pick_threshold(entry: Nfa, k: int) -> list[Token]:
    """Whole set if finite; otherwise the single smallest token of length >= k.

    Works on one K entry.  Length jumps directly to the required magnitude,
    so cutoffs far beyond native ranges stay cheap.
    """
    st = unary_structure(entry, "1", "$")
    if not st.infinite:
        return [threshold(i) for i in st.magnitudes()]
    magnitude = st.smallest_at_least(max(0, k - 2))
    assert magnitude is not None
    return [threshold(magnitude)]


def _vertex_tokens_at(st: UnaryStructure, i: int) -> list[Token]:
    toks = []
    for close in sorted(st.accepts(i)):
        toks.append(left_vertex(i) if close == "#" else right_vertex(i))
    return toks


def pick_merge(V: dict[tuple[int, int], Nfa]) -> RepFunction:
    """Intersection-respecting vertex representatives.

    Definitionally, for every subset A of state pairs whose stem languages
    intersect, the shortlex-least common stem joins every pair in A; a pair's
    representatives are its tokens over the stems it received.  Computed here
    over realized stem types: the membership pattern of stems across entries
    is eventually periodic, so scanning one combined cycle finds, for every
    realized type S, the least stem f(S) of exactly that type; f(S) serves a
    pair iff the pair is in S and no realized strict superset has a smaller
    f-value.
    """
    pairs = sorted(V)
    structures = {pair: unary_structure(V[pair], "a", "#$") for pair in pairs}
    # Combined cycle of the per-entry acceptance patterns.
    loop_end = 1
    for st in structures.values():
        period = max(1, st.loop_end - st.loop_start)
        start = st.loop_start
        loop_end = max(loop_end, start + period)
    horizon = 1
    for st in structures.values():
        horizon = max(horizon, st.loop_end)
    period_lcm = 1
    for st in structures.values():
        p = max(1, st.loop_end - st.loop_start)
        g = _gcd(period_lcm, p)
        period_lcm = period_lcm // g * p
    scan_end = horizon + period_lcm
    first_of_type: dict[frozenset, int] = {}
    for i in range(scan_end):
        t = frozenset(pair for pair in pairs if structures[pair].accepts(i))
        if t and t not in first_of_type:
            first_of_type[t] = i
    # Keep f(S) for a pair only if no realized strict superset is smaller.
    chosen_stems: dict[tuple[int, int], set[int]] = {pair: set() for pair in pairs}
    for s_type, stem in first_of_type.items():
        if any(other > s_type and first_of_type[other] < stem
               for other in first_of_type):
            continue
        for pair in s_type:
            chosen_stems[pair].add(stem)
    entries = {}
    for pair in pairs:
        toks = []
        for stem in sorted(chosen_stems[pair]):
            toks.extend(_vertex_tokens_at(structures[pair], stem))
        entries[pair] = toks
    return _fragment(entries)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def pick_separate(V: dict[tuple[int, int], Nfa], s: int, t: int) -> RepFunction:
    """Pairwise-fresh vertex representatives.

    Entries are processed in ascending (p, q) order.  Finite entries are
    copied whole; each infinite entry contributes its first s tokens (in its
    shortlex order) of length >= t whose stems are fresh: distinct from every
    stem of every finite entry and from every stem picked so far.  Stem
    freshness against all finite entries (not only previously processed ones)
    closes the length-t collision window.
    """
    if s < 1:
        raise ValueError("pick_separate needs s >= 1")
    pairs = sorted(V)
    structures = {pair: unary_structure(V[pair], "a", "#$") for pair in pairs}
    finite_stems: set[int] = set()
    for pair in pairs:
        if not structures[pair].infinite:
            finite_stems.update(structures[pair].magnitudes())
    used = set(finite_stems)
    entries = {}
    for pair in pairs:
        st = structures[pair]
        if not st.infinite:
            toks = []
            for i in st.magnitudes():
                toks.extend(_vertex_tokens_at(st, i))
            entries[pair] = toks
            continue
        toks = []
        i = 0
        guard = 0
        while len(toks) < s:
            guard += 1
            if guard > 10_000_000:
                raise SearchBudgetError("pick_separate scan did not converge")
            if i + 2 >= t and i not in used and st.accepts(i):
                fresh = _vertex_tokens_at(st, i)[:s - len(toks)]
                toks.extend(fresh)
                used.add(i)
            i += 1
        entries[pair] = toks
    return _fragment(entries)


# --- validation helpers ------------------------------------------------------------

def rep_is_valid(ts: TokenSets, rep: RepFunction) -> bool:
    """Every representative is a token of its own K/V entry."""
    for (p, q), toks in rep.table.items():
        for t in toks:
            if t.kind is TokenKind.THRESHOLD:
                entry = ts.K.get((p, q))
            else:
                entry = ts.V.get((p, q))
            if entry is None or not automata.contains(entry, t.word):
                return False
    return True


# --- condensed automata -------------------------------------------------------------

@dataclass(frozen=True)
class CondensedAutomaton:
    """Transitions labeled by representative-set ids, plus the substitution
    mapping each id back to its word set."""

    base: Nfa
    edges: tuple[tuple[int, int, int], ...]  # (src, set_id, dst)
    substitution: tuple[tuple[Token, ...], ...]  # set_id -> tokens

    def successors(self, q: int):
        return [(set_id, dst) for (src, set_id, dst) in self.edges if src == q]

    def as_nfa(self, max_expand: int = 100_000) -> Nfa:
        """Expand every representative into a letter chain (the hat automaton).

        Refuses expansions beyond `max_expand` states; astronomically long
        representatives cannot be materialized.
        """
        n = self.base.n_states
        trans: list[tuple[int, str, int]] = []
        for (src, set_id, dst) in self.edges:
            for tok in self.substitution[set_id]:
                word = tok.word
                if tok.magnitude + 2 != len(word):
                    raise SearchBudgetError("token too long to expand")
                prev = src
                for sym in word[:-1]:
                    trans.append((prev, sym, n))
                    prev = n
                    n += 1
                    if n > max_expand:
                        raise SearchBudgetError(
                            f"hat-automaton expansion exceeds {max_expand} states")
                trans.append((prev, word[-1], dst))
        return trim(automata.make_nfa(n, self.base.initial, self.base.finals, trans))


def build_condensed(m: Nfa, rep: RepFunction) -> CondensedAutomaton:
    """One condensed edge per nonempty representative set."""
    edges = []
    subst = []
    for (p, q) in rep.pairs():
        set_id = len(subst)
        subst.append(rep.table[(p, q)])
        edges.append((p, set_id, q))
    return CondensedAutomaton(m, tuple(edges), tuple(subst))


def edge_factor_words(rep: RepFunction) -> set[tuple[Token, Token]]:
    """All left-right token concatenations realizable through a middle state."""
    out = set()
    by_src: dict[int, list[tuple[int, tuple[Token, ...]]]] = {}
    for (p, q), toks in rep.table.items():
        by_src.setdefault(p, []).append((q, toks))
    for (p, q), toks in rep.table.items():
        lefts = [t for t in toks if t.kind is TokenKind.LEFT]
        if not lefts:
            continue
        for (r, toks2) in by_src.get(q, ()):
            rights = [t for t in toks2 if t.kind is TokenKind.RIGHT]
            for lt in lefts:
                for rt in rights:
                    out.add((lt, rt))
    return out


def core_length_bound(m: Nfa, rep: RepFunction) -> int:
    """Word length beyond which the condensed language adds no new instances."""
    n_tok = rep.max_token_length()
    m_factors = len(edge_factor_words(rep))
    q = m.n_states
    return q * q * (m_factors + 2) * m_factors * 2 * n_tok + n_tok


# --- finite core ----------------------------------------------------------------------

@dataclass(frozen=True)
class CoreInstance:
    """One decoded instance with a shortest witness."""

    instance: object  # (Graph, k) or (RedBlueGraph, k)
    word_tokens: tuple[Token, ...]
    state_path: tuple[int, ...]


@dataclass(frozen=True)
class FiniteCore:
    instances: tuple[CoreInstance, ...]

    def __len__(self):
        return len(self.instances)


def _word_sort_key(tokens: tuple[Token, ...]) -> tuple:
    return (sum(t.length for t in tokens), tuple(t.sort_key() for t in tokens))


def iter_core(m: Nfa, rep: RepFunction, red_blue: bool = False,
              max_nodes: int = 1 << 21):
    """Lazily yield the decoded instances of the condensed language.

    Configurations are (state, threshold token, set of ordered stem pairs,
    pending left token); the fixed point over them is exact because the
    representative sets are finite.  Witnesses come out shortest first.
    """
    cond = build_condensed(m, rep)
    start_heap: list = []
    counter = 0
    # (sort key, tie, state, k-token, factor pair set, pending, tokens, path)
    init = (m.initial, None, frozenset(), None)
    best: set = set()
    heap = []

    def push(state, ktok, pairs, pending, tokens, path):
        nonlocal counter
        key = (state, ktok, pairs, pending)
        if key in best:
            return
        best.add(key)
        if len(best) > max_nodes:
            raise SearchBudgetError(
                f"finite-core fixed point exceeds {max_nodes} configurations")
        counter += 1
        heapq.heappush(heap, (_word_sort_key(tokens), counter,
                              state, ktok, pairs, pending, tokens, path))

    push(*init, (), (m.initial,))
    emitted: set = set()
    while heap:
        _, _, state, ktok, pairs, pending, tokens, path = heapq.heappop(heap)
        if ktok is not None and pending is None and state in m.finals:
            if red_blue:
                g = red_blue_graph(
                    edges={(f"r{i}", f"b{j}") for (i, j) in pairs})
                inst = (g, ktok.magnitude)
                dedup = (g.canonical(), ktok.magnitude)
            else:
                vertices = {v for p in pairs for v in p}
                edges = {(min(i, j), max(i, j)) for (i, j) in pairs if i != j}
                g = Graph(frozenset(vertices), frozenset(edges))
                inst = (g, ktok.magnitude)
                dedup = (g.canonical(), ktok.magnitude)
            if dedup not in emitted:
                emitted.add(dedup)
                yield CoreInstance(inst, tokens, path)
        for (set_id, dst) in cond.successors(state):
            for tok in cond.substitution[set_id]:
                if ktok is None:
                    if tok.kind is not TokenKind.THRESHOLD:
                        continue
                    push(dst, tok, pairs, None, tokens + (tok,), path + (dst,))
                elif pending is None:
                    if tok.kind is not TokenKind.LEFT:
                        continue
                    push(dst, ktok, pairs, tok.magnitude,
                         tokens + (tok,), path + (dst,))
                else:
                    if tok.kind is not TokenKind.RIGHT:
                        continue
                    new_pairs = pairs | {(pending, tok.magnitude)}
                    push(dst, ktok, new_pairs, None,
                         tokens + (tok,), path + (dst,))


def finite_core(m: Nfa, rep: RepFunction, red_blue: bool = False,
                max_nodes: int = 1 << 21) -> FiniteCore:
    """The exact set of decoded instances of the condensed language."""
    return FiniteCore(tuple(iter_core(m, rep, red_blue, max_nodes)))


# --- deletion-based reduction ------------------------------------------------------

def reduce_by_deletion(m: Nfa, w: str) -> str:
    """Shrink w inside L(m) to at most 2|Q|-1 tokens by cutting the factor
    between two visits of the same left-vertex state.

    The decoded graph of the result arises from decode(w)'s graph by edge and
    vertex deletions; the threshold token is untouched.  Words already within
    the bound are returned unchanged.
    """
    factors, states = characteristic_factorization(m, w)
    bound = 2 * m.n_states - 1
    while len(factors) > bound:
        # Occurrence lists of states at odd positions (left-vertex slots).
        occurrences: dict[int, list[int]] = {}
        for idx in range(1, len(states), 2):
            occurrences.setdefault(states[idx], []).append(idx)
        repeated = [(occ[0], occ) for occ in occurrences.values() if len(occ) > 1]
        if not repeated:
            raise EncodingError("internal: no repeated left-vertex state to cut")
        _, occ = min(repeated)
        j = occ[1] if len(occ) > 2 else occ[0]
        j_last = occ[-1]
        del factors[j:j_last]
        del states[j + 1:j_last + 1]
    out = "".join(factors)
    if not automata.contains(m, out):
        raise EncodingError("internal: reduced word left the language")
    return out
