"""Median-generating sets, hull numbers, split statistics and boundary forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx
import numpy as np

from .embedding import _id_key, min_coloring
from .errors import NotMedianError, SizeLimitError, SquareKitError
from .graph import Graph, convex_hull, median_closure, require_median
from .recognition import _find_cube, require_squaregraph
from .splits import compatibility_graph, halfspace_system, theta_classes

BRUTE_MAX_VERTICES = 14
STATS_MAX_SPLITS = 24


# -- matching ------------------------------------------------------------------------


def max_matching(g: Graph) -> list[tuple]:
    """Maximum cardinality matching as sorted vertex pairs."""
    m = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return sorted(tuple(sorted(e)) for e in m)


def brute_matching_size(g: Graph) -> int:
    """Exhaustive oracle for small graphs."""
    edges = list(g.edges)

    def best(i: int, used: frozenset) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        skip = best(i + 1, used)
        if u in used or v in used:
            return skip
        return max(skip, 1 + best(i + 1, used | {u, v}))

    return best(0, frozenset())


# -- inner lines and generating sets ---------------------------------------------------


@dataclass(frozen=True)
class InnerLine:
    path: tuple
    halfspaces: tuple  # two vertex sets whose intersection is the line

    def to_json(self) -> dict:
        return {"path": list(self.path), "halfspaces": [sorted(h) for h in self.halfspaces]}


def _as_path(g: Graph, verts: frozenset):
    ends = [v for v in verts if sum(w in verts for w in g.neighbors(v)) == 1]
    if len(verts) < 2 or len(ends) != 2:
        return None
    if any(sum(w in verts for w in g.neighbors(v)) > 2 for v in verts):
        return None
    start = min(ends)
    order = [start]
    while len(order) < len(verts):
        nxt = [w for w in g.neighbors(order[-1]) if w in verts and w not in order]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
    return tuple(order)


def inner_lines(g: Graph) -> list[InnerLine]:
    """Paths between boundary degree-3 vertices through inner degree-4 vertices
    that are intersections of two halfspaces."""
    from .embedding import inner_vertices

    require_squaregraph(g)
    inner = inner_vertices(g)
    theta = theta_classes(g)
    halves = [h for pair in theta.halfspaces for h in pair]
    found: dict = {}
    for h1, h2 in combinations(halves, 2):
        common = h1 & h2
        if len(common) < 2 or common in found:
            continue
        path = _as_path(g, common)
        if path is None:
            continue
        ends_ok = all(v not in inner and g.degree(v) == 3 for v in (path[0], path[-1]))
        mid_ok = all(v in inner and g.degree(v) == 4 for v in path[1:-1])
        if ends_ok and mid_ok:
            found[common] = InnerLine(path, tuple(sorted((h1, h2), key=sorted)))
    return sorted(found.values(), key=lambda line: line.path)


def cross_graph(lines: list[InnerLine]) -> Graph:
    ids = [str(i) for i in range(len(lines))]
    edges = [
        (ids[i], ids[j])
        for i, j in combinations(range(len(lines)), 2)
        if set(lines[i].path) & set(lines[j].path)
    ]
    return Graph(ids, edges)


def min_generating_set(g: Graph) -> frozenset:
    """Smallest set whose median closure is all of g.

    Vertices of degree at most two are forced; every inner line must be met,
    and a maximum matching of crossing lines lets one vertex meet two lines.
    """
    require_squaregraph(g)
    if len(g) == 1:
        return frozenset(g.vertices)
    out = {v for v in g if g.degree(v) <= 2}
    lines = inner_lines(g)
    matched = set()
    for a, b in max_matching(cross_graph(lines)):
        la, lb = lines[int(a)], lines[int(b)]
        out.add(min(set(la.path) & set(lb.path)))
        matched |= {int(a), int(b)}
    for i, line in enumerate(lines):
        if i not in matched:
            out.add(line.path[0])
    result = frozenset(out)
    if median_closure(g, result) != frozenset(g.vertices):
        raise SquareKitError("generating set failed the median closure check", size=len(result))
    return result


def forced_vertices(g: Graph) -> frozenset:
    """Vertices that are not the median of any three other vertices.

    Every median-generating set must contain them.
    """
    med = g.median_table
    n = len(g)
    out = []
    for v in range(n):
        others = np.arange(n) != v
        sub = med[np.ix_(others, others, others)]
        if not (sub == v).any():
            out.append(g.vertices[v])
    return frozenset(out)


def brute_min_genset(g: Graph, bound: int = BRUTE_MAX_VERTICES) -> frozenset:
    """Exhaustive minimum median-generating set, by increasing subset size."""
    require_median(g)
    if len(g) > bound:
        raise SizeLimitError(f"{len(g)} vertices exceed the oracle bound {bound}", bound=bound)
    everything = frozenset(g.vertices)
    forced = forced_vertices(g)
    rest = sorted(everything - forced)
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            x = forced | set(extra)
            if median_closure(g, x) == everything:
                return frozenset(x)
    return everything


def satisfies_halfspace_criterion(g: Graph, x) -> bool:
    """Every pair of intersecting halfspaces also intersects inside x."""
    x = frozenset(x)
    theta = theta_classes(g)
    halves = [h for pair in theta.halfspaces for h in pair]
    if any(not (h & x) for h in halves):
        return False
    return all(not (h1 & h2) or (h1 & h2 & x) for h1, h2 in combinations(halves, 2))


# -- hull and star contraction numbers ------------------------------------------------


@dataclass(frozen=True)
class HullReport:
    minimal_halfspaces: tuple
    intersection_graph: Graph
    h: int
    s: int
    shape: str  # "cycle", "paths" or "point"

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "s": self.s,
            "shape": self.shape,
            "minimal_halfspaces": [sorted(m) for m in self.minimal_halfspaces],
            "intersection_graph": self.intersection_graph.to_json(),
        }


def minimal_halfspaces(g: Graph) -> list[frozenset]:
    theta = theta_classes(g)
    halves = sorted({h for pair in theta.halfspaces for h in pair}, key=lambda h: (len(h), sorted(h)))
    return [h for h in halves if not any(o < h for o in halves)]


def hull_report(g: Graph) -> HullReport:
    require_squaregraph(g)
    mins = minimal_halfspaces(g)
    ids = [str(i) for i in range(len(mins))]
    inter = Graph(ids, [(ids[i], ids[j]) for i, j in combinations(range(len(mins)), 2) if mins[i] & mins[j]])
    if not mins:
        return HullReport((), inter, 1, 0, "point")
    comps = inter.components()
    is_cycle = (
        len(comps) == 1 and len(mins) >= 3 and all(inter.degree(v) == 2 for v in inter)
    )
    if is_cycle:
        n = len(mins)
        return HullReport(tuple(mins), inter, (n + 1) // 2, n // 2, "cycle")
    for comp in comps:
        sub = inter.subgraph(comp)
        if len(sub.edges) != len(comp) - 1 or any(sub.degree(v) > 2 for v in comp):
            raise SquareKitError("intersection graph is neither a cycle nor a union of paths")
    total = sum((len(c) + 1) // 2 for c in comps)
    return HullReport(tuple(mins), inter, total, total, "paths")


def brute_hull_number(g: Graph, bound: int = BRUTE_MAX_VERTICES) -> int:
    if len(g) > bound:
        raise SizeLimitError(f"{len(g)} vertices exceed the oracle bound {bound}", bound=bound)
    everything = frozenset(g.vertices)
    for k in range(1, len(g) + 1):
        for x in combinations(g.vertices, k):
            if convex_hull(g, x) == everything:
                return k
    return len(g)


def brute_independence(g: Graph) -> int:
    verts = list(g.vertices)
    for k in range(len(verts), 0, -1):
        for x in combinations(verts, k):
            if not any(g.has_edge(u, v) for u, v in combinations(x, 2)):
                return k
    return 0


# -- compatibility statistics --------------------------------------------------------


def compatibility_stats(g: Graph) -> tuple[int, int]:
    """Clique and chromatic numbers of the split compatibility graph."""
    require_median(g)
    s = halfspace_system(g)
    if len(s.splits) > STATS_MAX_SPLITS:
        raise SizeLimitError(
            f"{len(s.splits)} splits exceed the cap of {STATS_MAX_SPLITS}", cap=STATS_MAX_SPLITS
        )
    if not s.splits:
        return 0, 0
    comp = compatibility_graph(s)
    t = max(len(c) for c in nx.find_cliques(comp.to_networkx()))
    c = min_coloring(comp, cap=len(s.splits)).k
    return t, c


# -- parity forms --------------------------------------------------------------------


@dataclass(frozen=True)
class ParityReport:
    ok: bool
    anchors: tuple
    failure: object = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "anchors": list(self.anchors), "failure": self.failure}


def parity_form_check(g: Graph) -> ParityReport:
    """Boundary-distance forms of all vertices are distinct, valid and minimal.

    Forms f = d(v, .) restricted to the vertices of degree at most two.  Any
    feasible form below f differs from f by all-even or all-odd amounts, so
    minimality needs two tests: no single coordinate drops by 2 and the
    whole form does not drop by 1.
    """
    require_median(g)
    cube = _find_cube(g)
    if cube is not None:
        raise NotMedianError("graph contains a cube", cube=sorted(cube))
    anchors = tuple(sorted((v for v in g if g.degree(v) <= 2), key=_id_key))
    ix = [g.idx(x) for x in anchors]
    d = g.distance_matrix
    dx = d[np.ix_(ix, ix)]
    forms = d[:, ix]
    seen: dict = {}
    for v, f in zip(g.vertices, forms):
        key = tuple(int(x) for x in f)
        if key in seen:
            return ParityReport(False, anchors, {"collision": [seen[key], v]})
        seen[key] = v
    sums = forms[:, :, None] + forms[:, None, :]
    if (sums < dx).any() or ((sums + dx) % 2).any():
        return ParityReport(False, anchors, {"invalid_form": True})
    for row, v in zip(forms, g.vertices):
        # lowering coordinate i by 2 breaks some pair constraint
        slack = row[:, None] + row[None, :] - dx
        for i in range(len(anchors)):
            low = slack[i].copy()
            low -= 2
            low[i] -= 2
            if (low >= 0).all():
                return ParityReport(False, anchors, {"not_minimal": v, "coordinate": anchors[i]})
        if len(anchors) and (slack - 2 >= 0).all():
            return ParityReport(False, anchors, {"not_minimal": v, "shift": -1})
    return ParityReport(True, anchors)
