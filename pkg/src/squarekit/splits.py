"""Splits, split systems, Djokovic classes, halfspaces and zones."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidSplitSystemError, NotMedianError, NotSquaregraphError
from .graph import Graph, Vertex, median_witness


@dataclass(frozen=True)
class Split:
    """An unordered bipartition; ``a`` is the lexicographically smaller side."""

    a: frozenset
    b: frozenset

    def __post_init__(self):
        if not self.a or not self.b:
            raise InvalidSplitSystemError("split sides must be nonempty")
        if self.a & self.b:
            raise InvalidSplitSystemError("split sides must be disjoint")
        if sorted(self.b) < sorted(self.a):
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @classmethod
    def of(cls, a: Iterable, b: Iterable) -> "Split":
        return cls(frozenset(a), frozenset(b))

    @property
    def ground(self) -> frozenset:
        return self.a | self.b

    def side_of(self, x) -> frozenset:
        return self.a if x in self.a else self.b

    def separates(self, x, y) -> bool:
        return (x in self.a) != (y in self.a)

    def compatible(self, other: "Split") -> bool:
        return not (
            self.a & other.a and self.a & other.b and self.b & other.a and self.b & other.b
        )

    def restrict(self, x: frozenset) -> "Split | None":
        a, b = self.a & x, self.b & x
        if not a or not b:
            return None
        return Split(a, b)

    def to_json(self) -> list:
        return [sorted(self.a), sorted(self.b)]

    def __repr__(self) -> str:
        return f"Split({sorted(self.a)}|{sorted(self.b)})"


@dataclass(frozen=True)
class SplitSystem:
    ground: tuple
    splits: tuple = ()

    def __post_init__(self):
        ground = tuple(self.ground)
        if len(set(ground)) != len(ground):
            raise InvalidSplitSystemError("ground set has repeated elements")
        gset = frozenset(ground)
        seen = set()
        for s in self.splits:
            if s.ground != gset:
                raise InvalidSplitSystemError(
                    "split does not partition the ground set", split=s.to_json()
                )
            if s in seen:
                raise InvalidSplitSystemError("duplicate split", split=s.to_json())
            seen.add(s)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "splits", tuple(self.splits))

    def __len__(self) -> int:
        return len(self.splits)

    def __iter__(self):
        return iter(self.splits)

    def unseparated_pair(self):
        """A pair of ground elements no split separates, or None."""
        for x, y in combinations(self.ground, 2):
            if not any(s.separates(x, y) for s in self.splits):
                return x, y
        return None

    @property
    def separates_points(self) -> bool:
        return self.unseparated_pair() is None

    def restrict(self, x: Iterable) -> "SplitSystem":
        """Trace on ``x``: restrict every split, drop trivial ones, deduplicate."""
        xs = frozenset(x)
        order = [g for g in self.ground if g in xs]
        if len(order) != len(xs):
            raise InvalidSplitSystemError("trace set is not a subset of the ground set")
        out: list[Split] = []
        seen = set()
        for s in self.splits:
            r = s.restrict(xs)
            if r is not None and r not in seen:
                seen.add(r)
                out.append(r)
        return SplitSystem(tuple(order), tuple(out))

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "splits": [s.to_json() for s in self.splits]}

    @classmethod
    def from_json(cls, data: dict) -> "SplitSystem":
        return cls(tuple(data["ground"]), tuple(Split.of(a, b) for a, b in data["splits"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class ThetaClasses:
    """Edge classes of the Djokovic relation and their halfspace pairs.

    ``classes[i]`` lists the edges of class i; ``halfspaces[i]`` is
    ``(W(u, v), W(v, u))`` for the representative edge ``reps[i] = (u, v)``.
    """

    classes: tuple
    reps: tuple
    halfspaces: tuple
    edge_class: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class Zone:
    class_id: int
    side_uv: tuple  # P(u, v), in path order
    side_vu: tuple  # P(v, u), matched position by position
    rungs: tuple

    def vertices(self) -> frozenset:
        return frozenset(self.side_uv) | frozenset(self.side_vu)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def _halfspace(g: Graph, u: Vertex, v: Vertex) -> frozenset:
    d = g.distance_matrix
    closer = d[g.idx(u)] < d[g.idx(v)]
    return frozenset(g.vertices[i] for i in np.flatnonzero(closer))


def _require_median(g: Graph) -> None:
    if not g.is_connected():
        g.distance_matrix
    triple = median_witness(g)
    if triple is not None:
        raise NotMedianError(
            f"Djokovic classes need a median graph; triple {triple} has no unique median",
            triple=list(triple),
        )


def theta_classes(g: Graph) -> ThetaClasses:
    """Classes of the transitive closure of 'opposite edges of a 4-cycle'."""
    _require_median(g)
    uf = _UnionFind(g.edges)
    for u, v in g.edges:
        for x in g.neighbors(u):
            if x == v:
                continue
            for y in g.neighbors(v):
                if y != u and g.has_edge(x, y):
                    uf.union((u, v), (min(x, y), max(x, y)))
    groups: dict = {}
    for e in g.edges:
        groups.setdefault(uf.find(e), []).append(e)
    classes = sorted((tuple(sorted(es)) for es in groups.values()), key=lambda es: es[0])
    reps = tuple(es[0] for es in classes)
    halfspaces = tuple((_halfspace(g, u, v), _halfspace(g, v, u)) for u, v in reps)
    edge_class = {e: i for i, es in enumerate(classes) for e in es}
    return ThetaClasses(tuple(classes), reps, halfspaces, edge_class)


def theta_classes_by_definition(g: Graph) -> list[frozenset]:
    """Oracle: group edges by the Djokovic condition on distances directly.

    Edges xy and uv are related when x, y fall on opposite sides of the
    uv split, i.e. d(u,x) + d(v,y) != d(u,y) + d(v,x).
    """
    d = g.distance_matrix
    ix = g.idx
    edges = list(g.edges)
    classes: list[frozenset] = []
    assigned: set = set()
    for e in edges:
        if e in assigned:
            continue
        u, v = ix(e[0]), ix(e[1])
        cls = frozenset(
            f for f in edges if d[u, ix(f[0])] + d[v, ix(f[1])] != d[u, ix(f[1])] + d[v, ix(f[0])]
        )
        assigned |= cls
        classes.append(cls)
    return classes


def halfspace_system(g: Graph) -> SplitSystem:
    theta = theta_classes(g)
    return SplitSystem(tuple(g.vertices), tuple(Split(a, b) for a, b in theta.halfspaces))


def _path_order(g: Graph, verts: frozenset) -> list | None:
    if len(verts) == 1:
        return list(verts)
    deg = {v: sum(1 for w in g.neighbors(v) if w in verts) for v in verts}
    ends = sorted(v for v, k in deg.items() if k == 1)
    if len(ends) != 2 or any(k > 2 for k in deg.values()):
        return None
    path = [ends[0]]
    prev = None
    while len(path) < len(verts):
        nxt = [w for w in g.neighbors(path[-1]) if w in verts and w != prev]
        if len(nxt) != 1:
            return None
        prev = path[-1]
        path.append(nxt[0])
    return path if path[-1] == ends[1] else None


def zone(g: Graph, e: tuple, theta: ThetaClasses | None = None) -> Zone:
    """The ladder formed by the Djokovic class of edge ``e``."""
    theta = theta or theta_classes(g)
    u, v = e
    key = (min(u, v), max(u, v))
    if key not in theta.edge_class:
        raise NotSquaregraphError(f"{e} is not an edge", edge=list(e))
    cid = theta.edge_class[key]
    wuv = _halfspace(g, u, v)
    rungs = theta.classes[cid]
    mate = {}
    for x, y in rungs:
        a, b = (x, y) if x in wuv else (y, x)
        mate[a] = b
    order = _path_order(g, frozenset(mate))
    if order is None:
        raise NotSquaregraphError(
            "zone boundary is not a path", edge=list(e), boundary=sorted(mate)
        )
    other = [mate[a] for a in order]
    if _path_order(g, frozenset(other)) is None or any(
        not g.has_edge(other[i], other[i + 1]) for i in range(len(other) - 1)
    ):
        raise NotSquaregraphError("zone sides are not matched paths", edge=list(e))
    return Zone(cid, tuple(order), tuple(other), tuple(zip(order, other)))


def incompatibility_graph(s: SplitSystem) -> Graph:
    """Vertex ``str(i)`` per split i; edges join incompatible splits."""
    ids = [str(i) for i in range(len(s.splits))]
    edges = [
        (ids[i], ids[j])
        for i, j in combinations(range(len(s.splits)), 2)
        if not s.splits[i].compatible(s.splits[j])
    ]
    return Graph(ids, edges)


def compatibility_graph(s: SplitSystem) -> Graph:
    ids = [str(i) for i in range(len(s.splits))]
    edges = [
        (ids[i], ids[j])
        for i, j in combinations(range(len(s.splits)), 2)
        if s.splits[i].compatible(s.splits[j])
    ]
    return Graph(ids, edges)


def find_triangle(g: Graph):
    for u, v in g.edges:
        common = g.neighbors(u) & g.neighbors(v)
        if common:
            return u, v, min(common)
    return None


def is_two_compatible(s: SplitSystem) -> bool:
    return find_triangle(incompatibility_graph(s)) is None


def is_circular(s: SplitSystem, order: Sequence) -> bool:
    if sorted(map(str, order)) != sorted(map(str, s.ground)) or len(set(order)) != len(order):
        raise InvalidSplitSystemError("order is not a permutation of the ground set")
    for sp in s.splits:
        inside = [x in sp.a for x in order]
        changes = sum(1 for i in range(len(order)) if inside[i] != inside[i - 1])
        if changes != 2:
            return False
    return True
