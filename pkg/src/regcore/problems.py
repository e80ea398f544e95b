"""Graph problem registry and exact solvers.

Each registry entry carries its interchange-argument classification (which
rewrite operations preserve positive instances), the parameter's role, a leaf
function where the leaf property applies, and an exact solver sized for
finite-core instances.  Solvers are brute force with component decomposition
and fast paths for trivially large parameters; they must stay exact for
arbitrarily large k (big integers included), so no loop ever ranges over k
itself.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .graphs import (
    Graph, RedBlueGraph, connected_components, is_connected,
)
from .reps import SearchBudgetError

SEARCH_NODE_LIMIT = 1 << 24


class Case(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    SPECIAL_MINCUT = "special-mincut"
    SPECIAL_CONNECTED_A = "special-connected-a"
    RED_BLUE_A = "red-blue-a"


class Role(enum.Enum):
    LOWER = "lower-bound"
    UPPER = "upper-bound"
    NONE = "not-participating"


@dataclass(frozen=True)
class Verdict:
    positive: bool
    certificate: object = None


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    case: Optional[Case]
    param_role: Optional[Role]
    solver: Optional[Callable]
    leaf_fn: Optional[Callable[[int], int]] = None
    red_blue: bool = False
    # Whether "k >= |V|+|E| implies positive" holds unconditionally; relaxed
    # entries satisfy it only when some structural condition holds and their
    # solvers test that condition directly.
    strict_upper: bool = True
    supported: bool = True
    reason: Optional[str] = None


class UnsupportedProblemError(ValueError):
    pass


# --- indexed view of a graph ---------------------------------------------------

class _Idx:
    """Bitmask adjacency view used by the subset searches."""

    def __init__(self, g: Graph):
        self.verts = sorted(g.vertices)
        self.pos = {v: i for i, v in enumerate(self.verts)}
        self.n = len(self.verts)
        self.adj = [0] * self.n
        self.edges = []
        for (u, v) in sorted(g.edges):
            i, j = self.pos[u], self.pos[v]
            self.adj[i] |= 1 << j
            self.adj[j] |= 1 << i
            self.edges.append((i, j))
        self.full = (1 << self.n) - 1

    def names(self, mask: int) -> list:
        return [self.verts[i] for i in range(self.n) if mask >> i & 1]


def _guard_combinations(n: int, size: int):
    total = 1
    for i in range(size):
        total = total * (n - i) // (i + 1)
        if total > SEARCH_NODE_LIMIT:
            raise SearchBudgetError(
                f"subset search C({n},{size}) exceeds the node limit")


def _guard_power(n: int):
    if n > 24:
        raise SearchBudgetError(f"2^{n} subset search exceeds the node limit")


def _subsets_upto(idx: _Idx, max_size, ordered_small_first=True):
    """Vertex masks by ascending size up to max_size (clamped to n)."""
    limit = min(max_size, idx.n)
    for size in range(limit + 1):
        _guard_combinations(idx.n, size)
        for combo in itertools.combinations(range(idx.n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            yield mask


def _covers(idx: _Idx, mask: int) -> bool:
    return all(mask >> i & 1 or mask >> j & 1 for (i, j) in idx.edges)


def _dominates(idx: _Idx, mask: int) -> bool:
    covered = mask
    for i in range(idx.n):
        if mask >> i & 1:
            covered |= idx.adj[i]
    return covered == idx.full


def _mask_connected(idx: _Idx, mask: int) -> bool:
    if mask == 0:
        return True
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = [start]
    while frontier:
        q = frontier.pop()
        reach = idx.adj[q] & mask & ~seen
        while reach:
            low = reach & -reach
            seen |= low
            frontier.append(low.bit_length() - 1)
            reach ^= low
    return seen == mask


def _components(idx: _Idx) -> list[int]:
    comps = []
    unseen = idx.full
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = [start]
        while frontier:
            q = frontier.pop()
            reach = idx.adj[q] & ~seen
            while reach:
                low = reach & -reach
                seen |= low
                frontier.append(low.bit_length() - 1)
                reach ^= low
        comps.append(seen)
        unseen &= ~seen
    return comps


def _subgraph(g: Graph, keep: set) -> Graph:
    return Graph(frozenset(keep),
                 frozenset(e for e in g.edges if e[0] in keep and e[1] in keep))


def _per_component(g: Graph):
    for comp in connected_components(g):
        yield _subgraph(g, set(comp))


# --- minimum / maximum helpers (used as oracles by the test suite too) -----------

def min_vertex_cover_size(g: Graph) -> int:
    total = 0
    for sub in _per_component(g):
        idx = _Idx(sub)
        total += next(bin(m).count("1") for m in _subsets_upto(idx, idx.n)
                      if _covers(idx, m))
    return total


def max_independent_set_size(g: Graph) -> int:
    total = 0
    for sub in _per_component(g):
        idx = _Idx(sub)
        best = 0
        _guard_power(idx.n)
        for mask in range(1 << idx.n):
            if any(idx.adj[i] & mask and mask >> i & 1 for i in range(idx.n)):
                continue
            best = max(best, bin(mask).count("1"))
        total += best
    return total


def min_dominating_set_size(g: Graph) -> int:
    total = 0
    for sub in _per_component(g):
        idx = _Idx(sub)
        total += next(bin(m).count("1") for m in _subsets_upto(idx, idx.n)
                      if _dominates(idx, m))
    return total


def max_cut_size(g: Graph) -> int:
    total = 0
    for sub in _per_component(g):
        idx = _Idx(sub)
        _guard_power(max(0, idx.n - 1))
        best = 0
        for mask in range(1 << max(0, idx.n - 1)):
            cut = sum(1 for (i, j) in idx.edges
                      if (mask >> i & 1) != (mask >> j & 1))
            best = max(best, cut)
        total += best
    return total


def min_rbds_size(g: RedBlueGraph) -> Optional[int]:
    """Smallest red set dominating all blue vertices; None if impossible."""
    blue_adj = {b: {r for (r, bb) in g.edges if bb == b} for b in g.blue}
    if any(not nb for nb in blue_adj.values()):
        return None
    reds = sorted(g.red)
    needed_blues = sorted(g.blue)
    _guard_combinations(len(reds), len(reds) // 2)
    for size in range(len(reds) + 1):
        for combo in itertools.combinations(reds, size):
            chosen = set(combo)
            if all(blue_adj[b] & chosen for b in needed_blues):
                return size
    return None


def cycle_rank(g: Graph) -> int:
    return len(g.edges) - len(g.vertices) + len(connected_components(g))


def is_forest(g: Graph) -> bool:
    return cycle_rank(g) == 0


def is_bipartite(g: Graph) -> bool:
    color: dict = {}
    for v in g.vertices:
        if v in color:
            continue
        color[v] = 0
        stack = [v]
        while stack:
            x = stack.pop()
            for y in _neighbors_fast(g, x):
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def _neighbors_fast(g: Graph, v):
    for (a, b) in g.edges:
        if a == v:
            yield b
        elif b == v:
            yield a


def _distances(g: Graph, source) -> dict:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in _neighbors_fast(g, x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


# --- solvers ---------------------------------------------------------------------

def _solve_vertex_cover(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, sorted(g.vertices))
    cover: list = []
    budget = k
    for sub in _per_component(g):
        idx = _Idx(sub)
        found = None
        for mask in _subsets_upto(idx, min(budget, idx.n)):
            if _covers(idx, mask):
                found = mask
                break
        if found is None:
            return Verdict(False)
        cover.extend(idx.names(found))
        budget -= bin(found).count("1")
        if budget < 0:
            return Verdict(False)
    return Verdict(True, sorted(cover))


def _solve_independent_set(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.vertices):
        return Verdict(False)
    chosen: list = []
    for sub in _per_component(g):
        if len(chosen) >= k:
            break
        idx = _Idx(sub)
        _guard_power(idx.n)
        best_mask = 0
        for mask in range(1 << idx.n):
            if bin(mask).count("1") <= bin(best_mask).count("1"):
                continue
            if any(idx.adj[i] & mask and mask >> i & 1 for i in range(idx.n)):
                continue
            best_mask = mask
        chosen.extend(idx.names(best_mask))
    if len(chosen) >= k:
        return Verdict(True, sorted(chosen[:len(chosen)]))
    return Verdict(False)


def _solve_dominating_set(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, sorted(g.vertices))
    chosen: list = []
    for sub in _per_component(g):
        idx = _Idx(sub)
        found = next(m for m in _subsets_upto(idx, idx.n) if _dominates(idx, m))
        chosen.extend(idx.names(found))
    if len(chosen) <= k:
        return Verdict(True, sorted(chosen))
    return Verdict(False)


def _solve_connectedness(instance) -> Verdict:
    g, _ = instance
    return Verdict(is_connected(g))


def _solve_emptiness(instance) -> Verdict:
    g, _ = instance
    return Verdict(not g.edges)


def _solve_diameter(instance) -> Verdict:
    g, d = instance
    for v in g.vertices:
        dist = _distances(g, v)
        if len(dist) < len(g.vertices):
            return Verdict(False)
        if max(dist.values()) > d:
            return Verdict(False)
    return Verdict(True)


def _solve_radius(instance) -> Verdict:
    g, r = instance
    for c in sorted(g.vertices):
        dist = _distances(g, c)
        if len(dist) == len(g.vertices) and max(dist.values(), default=0) <= r:
            return Verdict(True, c)
    return Verdict(False)


def _solve_partition_into_cc(instance) -> Verdict:
    g, k = instance
    comps = connected_components(g)
    if len(comps) <= k:
        return Verdict(True, [sorted(c) for c in comps])
    return Verdict(False)


def _solve_nearly_connected(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, sorted(g.vertices))
    idx = _Idx(g)
    for mask in _subsets_upto(idx, min(k, idx.n)):
        if _mask_connected(idx, idx.full & ~mask):
            return Verdict(True, idx.names(mask))
    return Verdict(False)


def _has_any_connected_cover(g: Graph):
    """All edges within one component -> that component's vertex set."""
    if not g.edges:
        return []
    comps = [c for c in connected_components(g)
             if any(e[0] in c for e in g.edges)]
    if len(comps) == 1:
        return sorted(comps[0])
    return None


def _solve_connected_vertex_cover(instance) -> Verdict:
    g, k = instance
    if not g.edges:
        return Verdict(True, [])
    if k >= len(g.vertices):
        cover = _has_any_connected_cover(g)
        return Verdict(cover is not None, cover)
    idx = _Idx(g)
    for mask in _subsets_upto(idx, min(k, idx.n)):
        if _covers(idx, mask) and _mask_connected(idx, mask):
            return Verdict(True, idx.names(mask))
    return Verdict(False)


def _solve_connected_dominating_set(instance) -> Verdict:
    g, k = instance
    if not g.vertices:
        return Verdict(True, [])
    if k >= len(g.vertices):
        return Verdict(is_connected(g), sorted(g.vertices) if is_connected(g) else None)
    idx = _Idx(g)
    for mask in _subsets_upto(idx, min(k, idx.n)):
        if _dominates(idx, mask) and _mask_connected(idx, mask):
            return Verdict(True, idx.names(mask))
    return Verdict(False)


def _make_r_dominating_solver(r: int):
    def solver(instance) -> Verdict:
        g, k = instance
        if k >= len(g.vertices):
            return Verdict(True, sorted(g.vertices))
        balls = {}
        for v in g.vertices:
            dist = _distances(g, v)
            balls[v] = {u for u, d in dist.items() if d <= r}
        verts = sorted(g.vertices)
        for size in range(min(k, len(verts)) + 1):
            _guard_combinations(len(verts), size)
            for combo in itertools.combinations(verts, size):
                covered = set()
                for v in combo:
                    covered |= balls[v]
                if len(covered) == len(g.vertices):
                    return Verdict(True, list(combo))
        return Verdict(False)
    return solver


def _solve_forest(instance) -> Verdict:
    g, _ = instance
    return Verdict(is_forest(g))


def _solve_bipartiteness(instance) -> Verdict:
    g, _ = instance
    return Verdict(is_bipartite(g))


def _proper_coloring(g: Graph, colors: int):
    """Exact backtracking k-coloring; None when impossible."""
    verts = sorted(g.vertices, key=lambda v: -len([e for e in g.edges if v in e]))
    adj = {v: set() for v in verts}
    for (u, v) in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    assignment: dict = {}

    def rec(i: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        used = {assignment[u] for u in adj[v] if u in assignment}
        # Try at most one previously unused color to break symmetry.
        tried_new = False
        for c in range(colors):
            if c in used:
                continue
            is_new = c not in assignment.values()
            if is_new and tried_new:
                break
            if is_new:
                tried_new = True
            assignment[v] = c
            if rec(i + 1):
                return True
            del assignment[v]
        return False

    if rec(0):
        return dict(assignment)
    return None


def _make_k_coloring_solver(colors: int):
    def solver(instance) -> Verdict:
        g, _ = instance
        coloring = _proper_coloring(g, colors)
        return Verdict(coloring is not None, coloring)
    return solver


def _solve_coloring(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, {v: i for i, v in enumerate(sorted(g.vertices))})
    coloring = _proper_coloring(g, min(k, len(g.vertices)))
    return Verdict(coloring is not None, coloring)


def _solve_fvs(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, sorted(g.vertices))
    idx = _Idx(g)
    for mask in _subsets_upto(idx, min(k, idx.n)):
        keep = {idx.verts[i] for i in range(idx.n) if not mask >> i & 1}
        if is_forest(_subgraph(g, keep)):
            return Verdict(True, idx.names(mask))
    return Verdict(False)


def _solve_fes(instance) -> Verdict:
    g, k = instance
    rank = cycle_rank(g)
    if rank > k:
        return Verdict(False)
    # Remove the non-forest edges of a greedy spanning forest as certificate.
    kept: set = set()
    comp: dict = {v: v for v in g.vertices}

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    removed = []
    for e in sorted(g.edges):
        ru, rv = find(e[0]), find(e[1])
        if ru == rv:
            removed.append(list(e))
        else:
            comp[ru] = rv
            kept.add(e)
    return Verdict(True, removed)


def _solve_edge_bipartization(instance) -> Verdict:
    g, k = instance
    return Verdict(len(g.edges) - max_cut_size(g) <= k)


def _solve_oct(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, sorted(g.vertices))
    idx = _Idx(g)
    for mask in _subsets_upto(idx, min(k, idx.n)):
        keep = {idx.verts[i] for i in range(idx.n) if not mask >> i & 1}
        if is_bipartite(_subgraph(g, keep)):
            return Verdict(True, idx.names(mask))
    return Verdict(False)


def _solve_maxcut(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.edges):
        return Verdict(False)
    return Verdict(max_cut_size(g) >= k)


def _solve_mincut(instance) -> Verdict:
    g, k = instance
    if k < 1 or len(g.vertices) < 2:
        return Verdict(False)
    if not is_connected(g):
        return Verdict(True, [])
    idx = _Idx(g)
    _guard_power(max(0, idx.n - 1))
    best, best_mask = None, None
    for mask in range(1, 1 << (idx.n - 1)):
        cut = sum(1 for (i, j) in idx.edges
                  if (mask >> i & 1) != (mask >> j & 1))
        if best is None or cut < best:
            best, best_mask = cut, mask
    if best is not None and best <= k:
        cut_edges = [[idx.verts[i], idx.verts[j]] for (i, j) in idx.edges
                     if (best_mask >> i & 1) != (best_mask >> j & 1)]
        return Verdict(True, cut_edges)
    return Verdict(False)


def _solve_monochromatic_triangle(instance) -> Verdict:
    g, _ = instance
    edges = sorted(g.edges)
    epos = {e: i for i, e in enumerate(edges)}
    triangles = []
    for (a, b, c) in itertools.combinations(sorted(g.vertices), 3):
        es = [tuple(sorted(p)) for p in ((a, b), (a, c), (b, c))]
        if all(e in epos for e in es):
            triangles.append(tuple(epos[e] for e in es))
    colors: list = [None] * len(edges)

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        for c in (0, 1):
            colors[i] = c
            mono = any(all(colors[x] == c for x in tri)
                       for tri in triangles
                       if i in tri and all(colors[x] is not None for x in tri))
            if not mono and rec(i + 1):
                return True
        colors[i] = None
        return False

    if rec(0):
        return Verdict(True, [[list(e), colors[i]] for i, e in enumerate(edges)])
    return Verdict(False)


def _solve_small_vertex_degree(instance) -> Verdict:
    g, k = instance
    for v in sorted(g.vertices):
        if g.degree(v) <= k + 1:
            return Verdict(True, v)
    return Verdict(False)


def _solve_acyclic_subgraph(instance) -> Verdict:
    g, k = instance
    return Verdict(len(g.vertices) - len(connected_components(g)) >= k)


def _solve_acyclic_induced_subgraph(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.vertices):
        return Verdict(False)
    total = []
    for sub in _per_component(g):
        idx = _Idx(sub)
        _guard_power(idx.n)
        best_mask = 0
        for mask in range(1 << idx.n):
            if bin(mask).count("1") <= bin(best_mask).count("1"):
                continue
            keep = {idx.verts[i] for i in range(idx.n) if mask >> i & 1}
            if is_forest(_subgraph(sub, keep)):
                best_mask = mask
        total.extend(idx.names(best_mask))
    return Verdict(len(total) >= k, sorted(total) if len(total) >= k else None)


def _solve_bipartite_subgraph(instance) -> Verdict:
    g, k = instance
    return Verdict(max_cut_size(g) >= k)


def _solve_bipartite_induced_subgraph(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.vertices):
        return Verdict(False)
    total = []
    for sub in _per_component(g):
        idx = _Idx(sub)
        _guard_power(idx.n)
        best_mask = 0
        for mask in range(1 << idx.n):
            if bin(mask).count("1") <= bin(best_mask).count("1"):
                continue
            keep = {idx.verts[i] for i in range(idx.n) if mask >> i & 1}
            if is_bipartite(_subgraph(sub, keep)):
                best_mask = mask
        total.extend(idx.names(best_mask))
    return Verdict(len(total) >= k, sorted(total) if len(total) >= k else None)


def _is_irredundant(g: Graph, chosen: set) -> bool:
    closed = {v: {v} | set(_neighbors_fast(g, v)) for v in g.vertices}
    for v in chosen:
        if not any(closed[u] & chosen == {v} for u in closed[v]):
            return False
    return True


def _solve_irredundant_set(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.vertices):
        return Verdict(False)
    total = []
    for sub in _per_component(g):
        idx = _Idx(sub)
        _guard_power(idx.n)
        best: set = set()
        for mask in range(1 << idx.n):
            if bin(mask).count("1") <= len(best):
                continue
            chosen = set(idx.names(mask))
            if _is_irredundant(sub, chosen):
                best = chosen
        total.extend(best)
    return Verdict(len(total) >= k, sorted(total) if len(total) >= k else None)


def _solve_nonblocker(instance) -> Verdict:
    g, k = instance
    if k == 0:
        return Verdict(True, [])
    if k > len(g.vertices):
        return Verdict(False)
    if min_dominating_set_size(g) <= len(g.vertices) - k:
        return Verdict(True)
    return Verdict(False)


def _solve_rbds(instance) -> Verdict:
    g, k = instance
    blue_adj = {b: {r for (r, bb) in g.edges if bb == b} for b in g.blue}
    if any(not nb for nb in blue_adj.values()):
        return Verdict(False)
    if k >= len(g.red):
        return Verdict(True, sorted(g.red))
    reds = sorted(g.red)
    for size in range(min(k, len(reds)) + 1):
        _guard_combinations(len(reds), size)
        for combo in itertools.combinations(reds, size):
            chosen = set(combo)
            if all(blue_adj[b] & chosen for b in g.blue):
                return Verdict(True, sorted(chosen))
    return Verdict(False)


def _swap_colors(g: RedBlueGraph) -> RedBlueGraph:
    return RedBlueGraph(g.blue, g.red, frozenset((b, r) for (r, b) in g.edges))


def _solve_set_cover(instance) -> Verdict:
    g, k = instance
    return _solve_rbds((_swap_colors(g), k))


def _solve_partition_into_forests(instance) -> Verdict:
    g, k = instance
    if k >= len(g.vertices):
        return Verdict(True, [[v] for v in sorted(g.vertices)])
    if k == 0:
        return Verdict(not g.vertices, [] if not g.vertices else None)
    verts = sorted(g.vertices)
    parts: list[set] = []

    def rec(i: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        for part in parts:
            part.add(v)
            if is_forest(_subgraph(g, part)) and rec(i + 1):
                return True
            part.remove(v)
        if len(parts) < min(k, len(verts)):
            parts.append({v})
            if rec(i + 1):
                return True
            parts.pop()
        return False

    if rec(0):
        return Verdict(True, [sorted(p) for p in parts])
    return Verdict(False)


# --- registry ----------------------------------------------------------------------

def _identity(k: int) -> int:
    return k


def _one(_: int) -> int:
    return 1


def registry() -> list[ProblemSpec]:
    specs = [
        # case (a): preserved under merge
        ProblemSpec("connectedness", Case.A, Role.NONE, _solve_connectedness),
        ProblemSpec("emptiness", Case.A, Role.NONE, _solve_emptiness),
        ProblemSpec("vertex-cover", Case.A, Role.UPPER, _solve_vertex_cover),
        ProblemSpec("dominating-set", Case.A, Role.UPPER, _solve_dominating_set),
        ProblemSpec("partition-into-connected-components", Case.A, Role.UPPER,
                    _solve_partition_into_cc),
        ProblemSpec("nearly-connected", Case.A, Role.UPPER, _solve_nearly_connected),
        ProblemSpec("2-dominating-set", Case.A, Role.UPPER,
                    _make_r_dominating_solver(2)),
        ProblemSpec("diameter", Case.A, Role.UPPER, _solve_diameter,
                    strict_upper=False),
        ProblemSpec("radius", Case.A, Role.UPPER, _solve_radius,
                    strict_upper=False),
        ProblemSpec("connected-vertex-cover", Case.SPECIAL_CONNECTED_A, Role.UPPER,
                    _solve_connected_vertex_cover, strict_upper=False),
        ProblemSpec("connected-dominating-set", Case.SPECIAL_CONNECTED_A, Role.UPPER,
                    _solve_connected_dominating_set, strict_upper=False),
        # case (b): preserved under separate/add-leaf, lower bound, leaf property
        ProblemSpec("independent-set", Case.B, Role.LOWER, _solve_independent_set,
                    leaf_fn=_identity),
        ProblemSpec("max-cut", Case.B, Role.LOWER, _solve_maxcut, leaf_fn=_identity),
        ProblemSpec("acyclic-subgraph", Case.B, Role.LOWER, _solve_acyclic_subgraph,
                    leaf_fn=_identity),
        ProblemSpec("acyclic-induced-subgraph", Case.B, Role.LOWER,
                    _solve_acyclic_induced_subgraph, leaf_fn=_identity),
        ProblemSpec("bipartite-subgraph", Case.B, Role.LOWER,
                    _solve_bipartite_subgraph, leaf_fn=_identity),
        ProblemSpec("bipartite-induced-subgraph", Case.B, Role.LOWER,
                    _solve_bipartite_induced_subgraph, leaf_fn=_identity),
        ProblemSpec("irredundant-set", Case.B, Role.LOWER, _solve_irredundant_set,
                    leaf_fn=_identity),
        ProblemSpec("nonblocker", Case.B, Role.LOWER, _solve_nonblocker,
                    leaf_fn=_identity),
        # case (c): preserved under separate/add-leaf/edge-deletion/vertex-deletion
        ProblemSpec("bipartiteness", Case.C, Role.NONE, _solve_bipartiteness),
        ProblemSpec("forest", Case.C, Role.NONE, _solve_forest),
        ProblemSpec("2-coloring", Case.C, Role.NONE, _make_k_coloring_solver(2)),
        ProblemSpec("3-coloring", Case.C, Role.NONE, _make_k_coloring_solver(3)),
        ProblemSpec("monochromatic-triangle", Case.C, Role.NONE,
                    _solve_monochromatic_triangle),
        ProblemSpec("coloring", Case.C, Role.UPPER, _solve_coloring),
        ProblemSpec("edge-bipartization", Case.C, Role.UPPER,
                    _solve_edge_bipartization),
        ProblemSpec("feedback-edge-set", Case.C, Role.UPPER, _solve_fes),
        ProblemSpec("feedback-vertex-set", Case.C, Role.UPPER, _solve_fvs),
        ProblemSpec("odd-cycle-transversal", Case.C, Role.UPPER, _solve_oct),
        ProblemSpec("partition-into-forests", Case.C, Role.UPPER,
                    _solve_partition_into_forests),
        # special adaptations
        ProblemSpec("min-cut", Case.SPECIAL_MINCUT, Role.UPPER, _solve_mincut,
                    leaf_fn=_one, strict_upper=False),
        ProblemSpec("small-vertex-degree", Case.SPECIAL_MINCUT, Role.UPPER,
                    _solve_small_vertex_degree, leaf_fn=_one, strict_upper=False),
        # red-blue interpretation
        ProblemSpec("red-blue-dominating-set", Case.RED_BLUE_A, Role.UPPER,
                    _solve_rbds, red_blue=True, strict_upper=False),
        ProblemSpec("hitting-set", Case.RED_BLUE_A, Role.UPPER, _solve_rbds,
                    red_blue=True, strict_upper=False),
        ProblemSpec("set-cover", Case.RED_BLUE_A, Role.UPPER, _solve_set_cover,
                    red_blue=True, strict_upper=False),
        # listed but out of reach for the interchange arguments
        ProblemSpec("large-vertex-degree", None, None, None, supported=False,
                    reason="not preserved under merge or separate; open"),
        ProblemSpec("tree", None, None, None, supported=False,
                    reason="combines properties broken by both merge and separate"),
        ProblemSpec("3-path-cover", None, None, None, supported=False,
                    reason="merging and leaves can create longer paths"),
        ProblemSpec("max-leaf-spanning-tree", None, None, None, supported=False,
                    reason="not amenable to the rewrite arguments"),
    ]
    return specs


_BY_NAME: dict[str, ProblemSpec] = {}


def by_name(name: str) -> ProblemSpec:
    global _BY_NAME
    if not _BY_NAME:
        _BY_NAME = {spec.name: spec for spec in registry()}
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnsupportedProblemError(f"unknown problem {name!r}") from None


def solve(spec: ProblemSpec, instance) -> Verdict:
    """Exact decision; the solvers carry their own large-parameter fast paths,
    so arbitrarily large k never drives a search."""
    if not spec.supported:
        raise UnsupportedProblemError(f"{spec.name}: {spec.reason}")
    return spec.solver(instance)


def solve_red_blue(spec: ProblemSpec, instance) -> Verdict:
    if not spec.red_blue:
        raise UnsupportedProblemError(f"{spec.name} is not a red-blue problem")
    return solve(spec, instance)
