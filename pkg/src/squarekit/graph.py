"""Finite simple graphs and the metric primitives of median graphs.

Vertices are opaque string ids.  A :class:`Graph` is immutable once built;
expensive derived data (index maps, the distance matrix, the interval
tensor and the median table) is computed on first use and cached on the
instance.

The median-graph test enumerates all vertex triples, so it is cubic in
the number of vertices (the inner loop is vectorized with numpy).  That is
comfortable up to a few hundred vertices and is the intended scale.
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import DisconnectedGraphError, NotMedianError, UnknownVertexError

Vertex = str


def _edge(u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
    return (u, v) if u <= v else (v, u)


class Graph:
    """A finite simple undirected graph with stable vertex ids."""

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple[Vertex, Vertex]] = ()):
        verts: list[Vertex] = []
        adj: dict[Vertex, set[Vertex]] = {}
        for v in vertices:
            v = str(v)
            if v in adj:
                raise ValueError(f"duplicate vertex id {v!r}")
            adj[v] = set()
            verts.append(v)
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"loop at {u!r}")
            for w in (u, v):
                if w not in adj:
                    raise UnknownVertexError(f"edge endpoint {w!r} is not a vertex", vertex=w)
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(verts)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    # -- basic structure ---------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @cached_property
    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        return tuple(sorted({_edge(u, v) for u in self._adj for v in self._adj[u]}))

    def neighbors(self, v: Vertex) -> frozenset[Vertex]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}", vertex=v) from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, ())

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={len(self.edges)})"

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    def idx(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}", vertex=v) from None

    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        keep = set(keep)
        for v in keep:
            self.idx(v)
        verts = [v for v in self._vertices if v in keep]
        return Graph(verts, [(u, v) for u, v in self.edges if u in keep and v in keep])

    def relabel(self, mapping: dict[Vertex, Vertex]) -> "Graph":
        return Graph([mapping[v] for v in self._vertices], [(mapping[u], mapping[v]) for u, v in self.edges])

    def components(self) -> list[list[Vertex]]:
        seen: set[Vertex] = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self._vertices) <= 1 or len(self.components()) == 1

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from(self.edges)
        return h

    # -- metric caches -----------------------------------------------------

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        n = len(self._vertices)
        dist = np.full((n, n), -1, dtype=np.int64)
        nbrs = [[self.index[w] for w in self._adj[v]] for v in self._vertices]
        for s in range(n):
            row = dist[s]
            row[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                du = row[u] + 1
                for w in nbrs[u]:
                    if row[w] < 0:
                        row[w] = du
                        queue.append(w)
        if n and (dist < 0).any():
            i, j = map(int, np.argwhere(dist < 0)[0])
            raise DisconnectedGraphError(
                f"graph is disconnected: {self._vertices[i]!r} cannot reach {self._vertices[j]!r}",
                vertices=[self._vertices[i], self._vertices[j]],
            )
        dist.setflags(write=False)
        return dist

    @cached_property
    def interval_tensor(self) -> np.ndarray:
        """Boolean ``T[u, v, x]``: x lies on a shortest u-v path."""
        d = self.distance_matrix
        # d[u, x] + d[x, v] == d[u, v]
        t = (d[:, None, :] + d.T[None, :, :]) == d[:, :, None]
        t.setflags(write=False)
        return t

    @cached_property
    def median_table(self) -> np.ndarray:
        """``M[a, b, c]`` = index of the unique median, or -1 if not unique."""
        n = len(self._vertices)
        med = np.full((n, n, n), -1, dtype=np.int32)
        if n == 0:
            return med
        # intervals packed into 64-bit words so the triple intersections stay cheap
        words = (n + 63) // 64
        bits = np.zeros((n, n, words * 64), dtype=bool)
        bits[:, :, :n] = self.interval_tensor
        packed = np.packbits(bits, axis=2, bitorder="little").view(np.uint64)
        for a in range(n):
            pa = packed[a]
            common = pa[:, None, :] & pa[None, :, :] & packed
            counts = np.bitwise_count(common).sum(axis=2)
            word = (common != 0).argmax(axis=2)
            val = np.take_along_axis(common, word[:, :, None], axis=2)[:, :, 0]
            pos = word * 64 + np.log2(np.maximum(val, 1).astype(np.float64)).astype(np.int64)
            med[a] = np.where(counts == 1, pos, -1)
        med.setflags(write=False)
        return med

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"vertices": sorted(self._vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["vertices"], [tuple(e) for e in data["edges"]])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# -- metric operations ---------------------------------------------------------


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Shortest-path distances, indexed by ``g.index``."""
    return g.distance_matrix


def distance(g: Graph, u: Vertex, v: Vertex) -> int:
    return int(g.distance_matrix[g.idx(u), g.idx(v)])


def interval(g: Graph, u: Vertex, v: Vertex) -> frozenset[Vertex]:
    i, j = g.idx(u), g.idx(v)
    row = g.interval_tensor[i, j]
    return frozenset(g.vertices[k] for k in np.flatnonzero(row))


def median(g: Graph, a: Vertex, b: Vertex, c: Vertex) -> Vertex | None:
    """The unique vertex common to the three pairwise intervals, else None."""
    m = int(g.median_table[g.idx(a), g.idx(b), g.idx(c)])
    return None if m < 0 else g.vertices[m]


def median_witness(g: Graph) -> tuple[Vertex, Vertex, Vertex] | None:
    """A triple without a unique median, or None when ``g`` is median."""
    bad = np.argwhere(g.median_table < 0)
    if len(bad) == 0:
        return None
    a, b, c = (g.vertices[int(i)] for i in bad[0])
    return a, b, c


def is_median_graph(g: Graph) -> bool:
    if len(g) == 0:
        return False
    if not g.is_connected():
        return False
    return median_witness(g) is None


def require_median(g: Graph) -> None:
    if not g.is_connected():
        g.distance_matrix  # raises with a naming pair
    triple = median_witness(g)
    if triple is not None:
        raise NotMedianError(f"triple {triple} has no unique median", triple=list(triple))


def _mask(g: Graph, s: Iterable[Vertex]) -> np.ndarray:
    m = np.zeros(len(g), dtype=bool)
    for v in s:
        m[g.idx(v)] = True
    return m


def _verts(g: Graph, mask: np.ndarray) -> frozenset[Vertex]:
    return frozenset(g.vertices[i] for i in np.flatnonzero(mask))


def is_convex(g: Graph, s: Iterable[Vertex]) -> bool:
    m = _mask(g, s)
    idx = np.flatnonzero(m)
    covered = g.interval_tensor[np.ix_(idx, idx)].any(axis=(0, 1))
    return not (covered & ~m).any()


def convex_hull(g: Graph, s: Iterable[Vertex]) -> frozenset[Vertex]:
    """Smallest vertex set containing ``s`` and closed under intervals."""
    m = _mask(g, s)
    t = g.interval_tensor
    while True:
        idx = np.flatnonzero(m)
        grown = m | t[np.ix_(idx, idx)].any(axis=(0, 1))
        if (grown == m).all():
            return _verts(g, m)
        m = grown


def gate(g: Graph, x: Vertex, s: Iterable[Vertex]) -> Vertex | None:
    """The vertex of ``s`` lying on a shortest path from x to every member of s."""
    members = [g.idx(v) for v in s]
    if not members:
        raise ValueError("gate needs a nonempty set")
    i = g.idx(x)
    t = g.interval_tensor
    for cand in members:
        if all(t[i, y, cand] for y in members):
            return g.vertices[cand]
    return None


def is_gated(g: Graph, s: Iterable[Vertex]) -> bool:
    s = list(s)
    return all(gate(g, x, s) is not None for x in g.vertices)


def median_closure(g: Graph, x: Iterable[Vertex]) -> frozenset[Vertex]:
    """Fixpoint of adjoining medians of triples from the current set."""
    med = g.median_table
    current = {g.idx(v) for v in x}
    frontier = set(current)
    while frontier:
        members = sorted(current)
        new = sorted(frontier)
        # every triple touching at least one newly added element
        sub = med[np.ix_(new, members, members)]
        vals = np.unique(sub[sub >= 0])
        fresh = {int(v) for v in vals} - current
        current |= fresh
        frontier = fresh
    return frozenset(g.vertices[i] for i in current)


def is_median_generating(g: Graph, x: Iterable[Vertex]) -> bool:
    return len(median_closure(g, x)) == len(g)


def eccentricity(g: Graph, v: Vertex) -> int:
    return int(g.distance_matrix[g.idx(v)].max())


def ball(g: Graph, v: Vertex, r: int) -> frozenset[Vertex]:
    row = g.distance_matrix[g.idx(v)]
    return frozenset(g.vertices[i] for i in np.flatnonzero(row <= r))
