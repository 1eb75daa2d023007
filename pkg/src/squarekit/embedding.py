"""Exact colouring of split incompatibility and embeddings into tree products."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ColoringCapExceeded, InvalidSplitSystemError, SquareKitError
from .graph import Graph
from .recognition import (
    COGWHEEL_HUB,
    _iso,
    classify_rims,
    outer_walk,
    require_squaregraph,
)
from .generators import cogwheel
from .splits import halfspace_system, incompatibility_graph

TREE_CAP = 5


@dataclass(frozen=True)
class Coloring:
    colors: dict  # vertex -> colour in 0..k-1
    k: int

    def classes(self) -> list[list]:
        out = [[] for _ in range(self.k)]
        for v, c in self.colors.items():
            out[c].append(v)
        return [sorted(c, key=_id_key) for c in out]

    def to_json(self) -> dict:
        return {"k": self.k, "colors": {v: self.colors[v] for v in sorted(self.colors, key=_id_key)}}


def _id_key(v):
    # split ids are decimal strings; order them numerically when possible
    return (0, int(v), "") if str(v).isdigit() else (1, 0, str(v))


def _k_color(order_adj: dict, verts: list, k: int) -> dict | None:
    """Backtracking DSATUR search for a proper k-colouring, or None."""
    colors: dict = {}
    sat = {v: set() for v in verts}
    deg = {v: len(order_adj[v]) for v in verts}

    def pick():
        best = None
        for v in verts:
            if v in colors:
                continue
            key = (-len(sat[v]), -deg[v], _id_key(v))
            if best is None or key < best[0]:
                best = (key, v)
        return best[1]

    def search(used: int) -> bool:
        if len(colors) == len(verts):
            return True
        v = pick()
        # a fresh colour is only tried once, as the next unused index
        for c in range(min(used + 1, k)):
            if c in sat[v]:
                continue
            colors[v] = c
            touched = [w for w in order_adj[v] if w not in colors and c not in sat[w]]
            for w in touched:
                sat[w].add(c)
            if search(max(used, c + 1)):
                return True
            for w in touched:
                sat[w].discard(c)
            del colors[v]
        return False

    return dict(colors) if search(0) else None


def min_coloring(inc: Graph, cap: int = TREE_CAP) -> Coloring:
    """Proper colouring with the fewest colours, by exact search up to ``cap``."""
    if cap < 1:
        raise SquareKitError("cap must be at least 1", cap=cap)
    if len(inc) == 0:
        return Coloring({}, 0)
    adj = {v: inc.neighbors(v) for v in inc}
    total: dict = {}
    k = 1
    # components are independent; the chromatic number is their maximum
    for comp in inc.components():
        comp = sorted(comp, key=_id_key)
        for kk in range(1, cap + 1):
            found = _k_color(adj, comp, kk)
            if found is not None:
                total.update(found)
                k = max(k, kk)
                break
        else:
            raise ColoringCapExceeded(
                f"graph needs more than {cap} colours", cap=cap, component=comp
            )
    return Coloring(total, k)


def is_proper(inc: Graph, coloring: Coloring) -> bool:
    return all(coloring.colors[u] != coloring.colors[v] for u, v in inc.edges)


# -- tree factors --------------------------------------------------------------------


def tree_factor(g: Graph, splits) -> tuple[Graph, dict]:
    """Quotient of g by a pairwise compatible set of splits.

    Vertices separated by no split of the class are identified; a quotient
    node is named after its least vertex.  Two nodes are adjacent when
    exactly one split separates them.
    """
    splits = list(splits)
    for s, t in combinations(splits, 2):
        if not s.compatible(t):
            raise InvalidSplitSystemError(
                "tree factor needs pairwise compatible splits", splits=[s.to_json(), t.to_json()]
            )
    sig = {v: tuple(v in s.a for s in splits) for v in g}
    rep: dict = {}
    for v in g:
        rep.setdefault(sig[v], v)
    nodes = sorted(rep.values())
    node_sig = {rep[k]: k for k in rep}
    edges = []
    for x, y in combinations(nodes, 2):
        if sum(a != b for a, b in zip(node_sig[x], node_sig[y])) == 1:
            edges.append((x, y))
    tree = Graph(nodes, edges)
    if len(edges) != len(splits) or not tree.is_connected():
        raise SquareKitError(
            "quotient is not a tree with one edge per split", nodes=len(nodes), edges=len(edges)
        )
    return tree, {v: rep[sig[v]] for v in g}


@dataclass(frozen=True)
class TreeEmbedding:
    factors: tuple  # Graphs
    coords: dict  # vertex -> tuple of factor nodes
    coloring: Coloring

    def distance(self, u, v) -> int:
        total = 0
        for t, a, b in zip(self.factors, self.coords[u], self.coords[v]):
            total += int(t.distance_matrix[t.idx(a), t.idx(b)])
        return total

    def to_json(self) -> dict:
        return {
            "factors": [t.to_json() for t in self.factors],
            "coords": {v: list(self.coords[v]) for v in sorted(self.coords)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "TreeEmbedding":
        factors = tuple(Graph.from_json(f) for f in data["factors"])
        coords = {v: tuple(c) for v, c in data["coords"].items()}
        return cls(factors, coords, Coloring({}, len(factors)))


def verify_isometry(g: Graph, emb: TreeEmbedding) -> bool:
    d = g.distance_matrix
    total = np.zeros_like(d)
    for c, t in enumerate(emb.factors):
        td = t.distance_matrix
        ix = np.array([t.idx(emb.coords[v][c]) for v in g.vertices])
        total = total + td[np.ix_(ix, ix)]
    return bool(np.array_equal(total, d))


def embed_in_trees(g: Graph, cap: int = TREE_CAP) -> TreeEmbedding:
    """Isometric embedding of a squaregraph into a product of few trees."""
    require_squaregraph(g)
    s = halfspace_system(g)
    coloring = min_coloring(incompatibility_graph(s), cap)
    factors = []
    projections = []
    for cls in coloring.classes():
        tree, proj = tree_factor(g, [s.splits[int(i)] for i in cls])
        factors.append(tree)
        projections.append(proj)
    if not factors:
        # a single vertex sits in the one-point tree
        factors.append(Graph(g.vertices))
        projections.append({v: v for v in g})
    coords = {v: tuple(p[v] for p in projections) for v in g}
    emb = TreeEmbedding(tuple(factors), coords, coloring)
    if not verify_isometry(g, emb):
        raise SquareKitError("tree product embedding failed the isometry check")
    return emb


# -- number of trees and its witnesses --------------------------------------------


def find_induced_c4(inc: Graph):
    """Four vertices inducing a 4-cycle, or None."""
    for a, c in combinations(inc.vertices, 2):
        if inc.has_edge(a, c):
            continue
        common = sorted((inc.neighbors(a) & inc.neighbors(c)), key=_id_key)
        for b, d in combinations(common, 2):
            if not inc.has_edge(b, d):
                return (a, b, c, d)
    return None


def odd_cogwheels(g: Graph) -> list:
    """Hubs of induced cogwheels with an odd number of spokes."""
    rims = classify_rims(g)
    out = []
    for v in g:
        r = rims.rims[v]
        if r.kind != COGWHEEL_HUB:
            continue
        k = len(r.order) // 2
        if k % 2 == 1 and _iso(g, {v, *r.order}, cogwheel(k)):
            out.append(v)
    return out


def inner_vertices(g: Graph) -> frozenset:
    if len(g) == 1:
        return frozenset()
    return frozenset(g.vertices) - frozenset(outer_walk(g))


def is_tree(g: Graph) -> bool:
    return g.is_connected() and len(g.edges) == len(g) - 1


@dataclass(frozen=True)
class MinTrees:
    value: int
    coloring: Coloring
    odd_cogwheel: object  # hub vertex or None
    induced_c4: object  # four split ids or None
    inner_degrees_even: bool

    def to_json(self) -> dict:
        return {
            "min_trees": self.value,
            "coloring": self.coloring.to_json(),
            "odd_cogwheel": self.odd_cogwheel,
            "induced_c4": list(self.induced_c4) if self.induced_c4 else None,
            "inner_degrees_even": self.inner_degrees_even,
        }


def min_trees(g: Graph) -> MinTrees:
    """Least number of trees whose product hosts g isometrically.

    This is the chromatic number of the incompatibility graph, taken to be 1
    for a single vertex.
    """
    require_squaregraph(g)
    inc = incompatibility_graph(halfspace_system(g))
    even = all(g.degree(v) % 2 == 0 for v in inner_vertices(g))
    hubs = odd_cogwheels(g)
    c4 = find_induced_c4(inc)
    if is_tree(g):
        coloring = Coloring({v: 0 for v in inc}, 1 if len(inc) else 0)
        value = 1
    else:
        coloring = min_coloring(inc, TREE_CAP)
        value = coloring.k
    return MinTrees(value, coloring, hubs[0] if hubs else None, c4, even)
