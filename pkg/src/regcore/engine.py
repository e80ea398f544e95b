"""End-to-end decision: normalize the automaton, build the representative
function mandated by the problem's case, search the finite core, solve, and
certify.

Merge-based recipes enumerate the literal finite core.  Separate-based
recipes fan out into astronomically many core instances, so they search the
decision-equivalent subset in which every representative picked from an
infinite token set occurs at most once: any positive word reduces into that
subset through the deletion cut (which the edit-closed cases absorb) or
through the interchange construction, whose fresh picks are pairwise distinct
by construction.  Fresh stems never collide with any other stem, so
configurations track them anonymously and the searched space stays small.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Optional

from . import automata, problems, reps
from .automata import Nfa
from .encoding import (
    Token, TokenKind, contains_tokens, decode_red_blue_tokens, decode_tokens,
    normalize, render, tokenize, validate_tokens, word_length,
)
from .graphs import Graph, graph_to_json, red_blue_to_json
from .problems import Case, ProblemSpec, Role, UnsupportedProblemError, Verdict
from .reps import RepFunction, SearchBudgetError, TokenSets


@dataclass(frozen=True)
class Recipe:
    kind: str  # "merge" | "separate" | "red-blue"
    threshold_cutoff: int
    s: Optional[int] = None
    t: Optional[int] = None


def recipe_for(spec: ProblemSpec, n_states: int) -> Recipe:
    """The representative recipe mandated by a problem's classification."""
    n = n_states
    if not spec.supported:
        raise UnsupportedProblemError(f"{spec.name}: {spec.reason}")
    if spec.name == "vertex-cover":
        return Recipe("merge", 2 ** (n * n))
    if spec.case in (Case.A, Case.SPECIAL_CONNECTED_A):
        if spec.param_role is Role.UPPER:
            return Recipe("merge", 2 ** (2 * n * n) + 2 ** (n * n))
        return Recipe("merge", 0)
    if spec.case is Case.B:
        return Recipe("separate", 0, spec.leaf_fn(n) + 1, n)
    if spec.case is Case.C:
        cutoff = 4 * n ** 6 + 2 * n ** 3 if spec.param_role is Role.UPPER else 0
        return Recipe("separate", cutoff, 2 * n, n)
    if spec.case is Case.SPECIAL_MINCUT:
        c = spec.leaf_fn(0)
        return Recipe("separate", ((n + c) * n * n) ** 2, c, n)
    if spec.case is Case.RED_BLUE_A:
        return Recipe("red-blue", 2 ** (n * n))
    raise UnsupportedProblemError(f"{spec.name}: no recipe")


def choose_rep(m: Nfa, spec: ProblemSpec,
               ts: Optional[TokenSets] = None) -> RepFunction:
    """Representative function for a trimmed automaton over the encoding."""
    if ts is None:
        ts = reps.token_sets(m)
    recipe = recipe_for(spec, m.n_states)
    thresholds = reps.RepFunction({
        pair: tuple(reps.pick_threshold(entry, recipe.threshold_cutoff))
        for pair, entry in ts.K.items()
    })
    if recipe.kind == "merge":
        return reps.union_reps(thresholds, reps.pick_merge(ts.V))
    if recipe.kind == "separate":
        return reps.union_reps(
            thresholds, reps.pick_separate(ts.V, recipe.s, recipe.t))
    red = reps.split_by_close(ts.V, "#")
    blue = reps.split_by_close(ts.V, "$")
    return reps.union_reps(thresholds, reps.pick_merge(red),
                           reps.pick_merge(blue))


# --- decision data -----------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    tokens: tuple[Token, ...]
    instance: tuple  # (Graph, k) or (RedBlueGraph, k)
    certificate: object

    @property
    def word(self) -> str:
        return render(self.tokens)


@dataclass(frozen=True)
class Stats:
    core_size: int
    ell: int
    rep_tokens: int


@dataclass(frozen=True)
class Decision:
    answer: str  # "nonempty" | "empty"
    witness: Optional[Witness]
    stats: Stats

    def to_json(self) -> dict:
        obj = {"answer": self.answer, "witness": None,
               "stats": {"core_size": self.stats.core_size,
                         "ell": self.stats.ell,
                         "rep_tokens": self.stats.rep_tokens}}
        if self.witness is not None:
            g, k = self.witness.instance
            gjson = (red_blue_to_json(g, k) if not isinstance(g, Graph)
                     else graph_to_json(g, k))
            obj["witness"] = {
                "word": self.witness.word,
                "graph": gjson,
                "k": k,
                "certificate": self.witness.certificate,
            }
        return obj


# --- the once-per-fresh-representative slice search ----------------------------------

def _slice_instances(m: Nfa, ts: TokenSets, rep: RepFunction,
                     max_nodes: int) -> Iterator[tuple]:
    """Instances of the core subset where infinite-set picks occur at most once.

    Yields (instance, materialize) pairs, where materialize() reconstructs a
    concrete witness token sequence.  Fresh vertices are anonymous in the
    configuration (their stems are globally unique and unrepeatable), so a
    configuration is the current state, the threshold, the edge set over
    anchored stems, the counts of anonymous edges and of pendants per
    anchored stem, and the per-pair usage of fresh picks.
    """
    fresh_pairs = sorted(p for p in rep.table
                         if p in ts.V_infinite)
    fresh_index = {pair: i for i, pair in enumerate(fresh_pairs)}
    fresh_tokens = {pair: tuple(sorted(rep.table[pair])) for pair in fresh_pairs}
    anchored_stems = sorted({
        t.magnitude for pair, toks in rep.table.items()
        if pair not in fresh_index for t in toks
        if t.kind is not TokenKind.THRESHOLD})
    stem_base = max(anchored_stems, default=0) + 1

    cond_succ: dict[int, list[tuple[int, tuple[Token, ...], bool]]] = {}
    for (p, q), toks in rep.table.items():
        cond_succ.setdefault(p, []).append((q, toks, (p, q) in fresh_index))

    # Config: (state, kmag, anch frozenset[(i,j)], anon int,
    #          pendants tuple[(stem,count)...], usage tuple[int,...], pending)
    # pending: None | ("a", stem) | ("f",)
    start = (m.initial, None, frozenset(), 0, (), (0,) * len(fresh_pairs), None)
    backptr: dict[tuple, tuple] = {start: None}
    counter = 0
    heap: list = [((0, 0), 0, start)]
    emitted: set = set()

    def push(cfg, prev, step, tokens_count, length_est):
        nonlocal counter
        if cfg in backptr:
            return
        if len(backptr) >= max_nodes:
            raise SearchBudgetError(
                f"decision search exceeds {max_nodes} configurations")
        backptr[cfg] = (prev, step)
        counter += 1
        heapq.heappush(heap, ((tokens_count, length_est), counter, cfg))

    def materialize(cfg) -> tuple[Token, ...]:
        steps = []
        cur = cfg
        while backptr[cur] is not None:
            prev, step = backptr[cur]
            steps.append(step)
            cur = prev
        steps.reverse()
        used = {pair: 0 for pair in fresh_pairs}
        out = []
        for step in steps:
            if step[0] == "tok":
                out.append(step[1])
            else:
                _, pair, kind = step
                options = [t for t in fresh_tokens[pair] if t.kind is kind]
                out.append(options[used[pair]])
                used[pair] += 1
        return tuple(out)

    while heap:
        (tok_count, _), _, cfg = heapq.heappop(heap)
        (state, kmag, anch, anon, pend, usage, pending) = cfg
        if kmag is not None and pending is None and state in m.finals:
            vertices = set()
            edges = set()
            for (i, j) in anch:
                vertices.add(i)
                vertices.add(j)
                if i != j:
                    edges.add((min(i, j), max(i, j)))
            nxt = stem_base
            for (stem, count) in pend:
                vertices.add(stem)
                for _ in range(count):
                    vertices.add(nxt)
                    edges.add((min(stem, nxt), max(stem, nxt)))
                    nxt += 1
            for _ in range(anon):
                vertices.add(nxt)
                vertices.add(nxt + 1)
                edges.add((nxt, nxt + 1))
                nxt += 2
            g = Graph(frozenset(vertices), frozenset(edges))
            key = (g.canonical(), kmag)
            if key not in emitted:
                emitted.add(key)
                yield (g, kmag), (lambda c=cfg: materialize(c))
        for (dst, toks, is_fresh) in cond_succ.get(state, ()):
            if kmag is None:
                for tok in toks:
                    if tok.kind is TokenKind.THRESHOLD:
                        push((dst, tok.magnitude, anch, anon, pend, usage, None),
                             cfg, ("tok", tok), tok_count + 1, 0)
                continue
            if is_fresh:
                idx = fresh_index[(state, dst)]
                kinds = {t.kind for t in toks}
                remaining = len(fresh_tokens[(state, dst)]) - usage[idx]
                if remaining <= 0:
                    continue
                new_usage = usage[:idx] + (usage[idx] + 1,) + usage[idx + 1:]
                if pending is None and TokenKind.LEFT in kinds:
                    push((dst, kmag, anch, anon, pend, new_usage, ("f",)),
                         cfg, ("fresh", (state, dst), TokenKind.LEFT),
                         tok_count + 1, 0)
                elif pending is not None and TokenKind.RIGHT in kinds:
                    if pending == ("f",):
                        push((dst, kmag, anch, anon + 1, pend, new_usage, None),
                             cfg, ("fresh", (state, dst), TokenKind.RIGHT),
                             tok_count + 1, 0)
                    else:
                        stem = pending[1]
                        pmap = dict(pend)
                        pmap[stem] = pmap.get(stem, 0) + 1
                        push((dst, kmag, anch, anon, tuple(sorted(pmap.items())),
                              new_usage, None),
                             cfg, ("fresh", (state, dst), TokenKind.RIGHT),
                             tok_count + 1, 0)
            else:
                for tok in toks:
                    if pending is None and tok.kind is TokenKind.LEFT:
                        push((dst, kmag, anch, anon, pend, usage,
                              ("a", tok.magnitude)),
                             cfg, ("tok", tok), tok_count + 1, 0)
                    elif pending is not None and tok.kind is TokenKind.RIGHT:
                        if pending == ("f",):
                            pmap = dict(pend)
                            pmap[tok.magnitude] = pmap.get(tok.magnitude, 0) + 1
                            push((dst, kmag, anch, anon,
                                  tuple(sorted(pmap.items())), usage, None),
                                 cfg, ("tok", tok), tok_count + 1, 0)
                        else:
                            pair = (pending[1], tok.magnitude)
                            push((dst, kmag, anch | {pair}, anon, pend, usage,
                                  None),
                                 cfg, ("tok", tok), tok_count + 1, 0)


# --- decide ---------------------------------------------------------------------------

def decide(m_raw: Nfa, spec: ProblemSpec, max_nodes: int = 1 << 21) -> Decision:
    """Decide whether L(m_raw) contains a positive instance of the problem.

    Nonempty answers carry a witness word that is re-verified against the raw
    automaton and the solver before returning.  The search is deterministic:
    instances are examined in a fixed order and the first positive one wins.
    """
    if not spec.supported:
        raise UnsupportedProblemError(f"{spec.name}: {spec.reason}")
    m = normalize(m_raw)
    if automata.is_empty(m):
        return Decision("empty", None, Stats(0, 0, 0))
    ts = reps.token_sets(m)
    rep = choose_rep(m, spec, ts)
    recipe = recipe_for(spec, m.n_states)
    ell = reps.core_length_bound(m, rep)
    examined = 0

    def finish_positive(tokens, verdict: Verdict) -> Decision:
        instance = (decode_red_blue_tokens(tokens) if spec.red_blue
                    else decode_tokens(tokens))
        check = problems.solve(spec, instance)
        witness = Witness(tuple(tokens), instance, check.certificate)
        if not (check.positive and verify_witness(m_raw, spec, tokens)):
            raise AssertionError("witness failed re-verification")
        return Decision("nonempty", witness,
                        Stats(examined, ell, rep.total()))

    if recipe.kind in ("merge", "red-blue"):
        for core_inst in reps.iter_core(m, rep, red_blue=spec.red_blue,
                                        max_nodes=max_nodes):
            examined += 1
            verdict = problems.solve(spec, core_inst.instance)
            if verdict.positive:
                return finish_positive(core_inst.word_tokens, verdict)
    else:
        for instance, materialize in _slice_instances(m, ts, rep, max_nodes):
            examined += 1
            verdict = problems.solve(spec, instance)
            if verdict.positive:
                return finish_positive(materialize(), verdict)
    return Decision("empty", None, Stats(examined, ell, rep.total()))


def verify_witness(m_raw: Nfa, spec: ProblemSpec, w) -> bool:
    """Independent certification: membership plus decode plus solver only."""
    try:
        tokens = tuple(tokenize(w)) if isinstance(w, str) else tuple(w)
        validate_tokens(tokens)
    except Exception:
        return False
    if not contains_tokens(m_raw, tokens):
        return False
    instance = (decode_red_blue_tokens(tokens) if spec.red_blue
                else decode_tokens(tokens))
    return problems.solve(spec, instance).positive
