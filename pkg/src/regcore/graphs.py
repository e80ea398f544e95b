"""Simple undirected graphs, red-blue graphs, and the rewrite operations
used by the interchange arguments (merge, rename, separate, add-leaf,
deletions).  All operations are pure: each returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    pass


def _edge(u, v) -> tuple:
    if u == v:
        raise GraphError(f"loop edge on {u!r}")
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: no loops, no parallel edges."""

    vertices: frozenset
    edges: frozenset  # of sorted 2-tuples

    def __post_init__(self):
        for (u, v) in self.edges:
            if u == v:
                raise GraphError(f"loop edge on {u!r}")
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge ({u},{v}) outside vertex set")

    def neighbors(self, v) -> set:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")
        out = set()
        for (a, b) in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def canonical(self) -> tuple:
        """Sorted (vertices, edges) pair usable as a set-level key."""
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))


def graph(vertices: Iterable = (), edges: Iterable[tuple] = ()) -> Graph:
    vs = set(vertices)
    es = set()
    for (u, v) in edges:
        vs.add(u)
        vs.add(v)
        es.add(_edge(u, v))
    return Graph(frozenset(vs), frozenset(es))


def merge(g: Graph, u, v) -> Graph:
    """Identify u and v; the merged vertex reuses min(u, v) as its id.

    Former edges {u,w} and {v,w} become {[uv],w}; an edge {u,v} vanishes
    (edge contraction is the adjacent special case).
    """
    if u not in g.vertices or v not in g.vertices:
        raise GraphError(f"unknown vertex in merge({u!r},{v!r})")
    if u == v:
        raise GraphError("merge needs two distinct vertices")
    m = min(u, v)
    vs = (set(g.vertices) - {u, v}) | {m}
    es = set()
    for (a, b) in g.edges:
        a2 = m if a in (u, v) else a
        b2 = m if b in (u, v) else b
        if a2 != b2:
            es.add(_edge(a2, b2))
    return Graph(frozenset(vs), frozenset(es))


def rename(g: Graph, u, v) -> Graph:
    """Relabel u as v; if v already exists this coincides with merge(u, v)."""
    if u not in g.vertices:
        raise GraphError(f"unknown vertex {u!r}")
    if u == v:
        return g
    if v in g.vertices:
        return merge(g, u, v)
    vs = (set(g.vertices) - {u}) | {v}
    es = {_edge(v if a == u else a, v if b == u else b) for (a, b) in g.edges}
    return Graph(frozenset(vs), frozenset(es))


def fresh_vertex(g: Graph):
    """Smallest unused non-negative integer id."""
    i = 0
    while i in g.vertices:
        i += 1
    return i


def add_leaf(g: Graph, v) -> Graph:
    """Attach a fresh degree-one vertex to v."""
    if v not in g.vertices:
        raise GraphError(f"unknown vertex {v!r}")
    leaf = fresh_vertex(g)
    return Graph(g.vertices | {leaf}, g.edges | {_edge(v, leaf)})


def separate(g: Graph, v, w) -> Graph:
    """Remove the edge {v,w} and hang a fresh leaf on v instead."""
    if v not in g.vertices or w not in g.vertices:
        raise GraphError(f"unknown vertex in separate({v!r},{w!r})")
    if _edge(v, w) not in g.edges:
        raise GraphError(f"separate on non-adjacent pair ({v!r},{w!r})")
    fresh = fresh_vertex(g)
    return Graph(g.vertices | {fresh},
                 (g.edges - {_edge(v, w)}) | {_edge(v, fresh)})


def delete_vertex(g: Graph, v) -> Graph:
    if v not in g.vertices:
        raise GraphError(f"unknown vertex {v!r}")
    return Graph(g.vertices - {v},
                 frozenset(e for e in g.edges if v not in e))


def delete_edge(g: Graph, e: tuple) -> Graph:
    u, v = e
    key = _edge(u, v)
    if key not in g.edges:
        raise GraphError(f"unknown edge {e!r}")
    return Graph(g.vertices, g.edges - {key})


# --- connectivity helpers ----------------------------------------------------

def connected_components(g: Graph) -> list[frozenset]:
    seen: set = set()
    comps = []
    adj: dict = {v: set() for v in g.vertices}
    for (a, b) in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    for v in sorted(g.vertices, key=repr):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """Empty and single-vertex graphs count as connected."""
    return len(connected_components(g)) <= 1


# --- red-blue graphs ----------------------------------------------------------

@dataclass(frozen=True)
class RedBlueGraph:
    """Bipartite graph with a fixed 2-coloring; every edge joins red to blue."""

    red: frozenset
    blue: frozenset
    edges: frozenset  # of (red, blue) pairs

    def __post_init__(self):
        if self.red & self.blue:
            raise GraphError("red and blue classes overlap")
        for (r, b) in self.edges:
            if r not in self.red or b not in self.blue:
                raise GraphError(f"edge ({r!r},{b!r}) not red-to-blue")

    def canonical(self) -> tuple:
        return (tuple(sorted(self.red)), tuple(sorted(self.blue)),
                tuple(sorted(self.edges)))


def red_blue_graph(red: Iterable = (), blue: Iterable = (),
                   edges: Iterable[tuple] = ()) -> RedBlueGraph:
    rs, bs = set(red), set(blue)
    es = set()
    for (r, b) in edges:
        rs.add(r)
        bs.add(b)
        es.add((r, b))
    return RedBlueGraph(frozenset(rs), frozenset(bs), frozenset(es))


def rb_merge(g: RedBlueGraph, u, v) -> RedBlueGraph:
    """Color-preserving merge; cross-color merges are rejected."""
    in_red = u in g.red and v in g.red
    in_blue = u in g.blue and v in g.blue
    if not (in_red or in_blue):
        if (u in g.red | g.blue) and (v in g.red | g.blue):
            raise GraphError(f"cross-color merge of {u!r} and {v!r}")
        raise GraphError(f"unknown vertex in rb_merge({u!r},{v!r})")
    if u == v:
        raise GraphError("rb_merge needs two distinct vertices")
    m = min(u, v)
    sub = lambda x: m if x in (u, v) else x
    red = frozenset(sub(x) for x in g.red)
    blue = frozenset(sub(x) for x in g.blue)
    edges = frozenset((sub(r), sub(b)) for (r, b) in g.edges)
    return RedBlueGraph(red, blue, edges)


def rb_cleanup_delete(g: RedBlueGraph, x) -> RedBlueGraph:
    """Delete x, its incident edges, and any neighbor left isolated."""
    if x not in g.red | g.blue:
        raise GraphError(f"unknown vertex {x!r}")
    edges = frozenset(e for e in g.edges if x not in e)
    survivors = {v for e in edges for v in e}
    swept = {v for v in (g.red | g.blue) - {x}
             if v not in survivors and any(x in e and v in e for e in g.edges)}
    red = g.red - {x} - swept
    blue = g.blue - {x} - swept
    return RedBlueGraph(red, blue, edges)


# --- serialization -----------------------------------------------------------

def graph_to_json(g: Graph, k=None) -> dict:
    obj = {"vertices": sorted(g.vertices), "edges": [list(e) for e in sorted(g.edges)]}
    if k is not None:
        obj["k"] = k
    return obj


def graph_from_json(obj: dict) -> Graph:
    return graph(obj.get("vertices", ()), [tuple(e) for e in obj.get("edges", ())])


def red_blue_to_json(g: RedBlueGraph, k=None) -> dict:
    obj = {
        "vertices": sorted(g.red | g.blue, key=repr),
        "red": sorted(g.red),
        "blue": sorted(g.blue),
        "edges": [list(e) for e in sorted(g.edges)],
    }
    if k is not None:
        obj["k"] = k
    return obj


def red_blue_from_json(obj: dict) -> RedBlueGraph:
    return red_blue_graph(obj.get("red", ()), obj.get("blue", ()),
                          [tuple(e) for e in obj.get("edges", ())])


def to_dot(g: Graph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  "{v}";')
    for (u, v) in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines)
