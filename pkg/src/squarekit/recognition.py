"""Squaregraph recognition, rims, boundary cycles, balls and curvature.

Recognition runs the forbidden-subgraph test (median, then no cube, no
K2 x K1,3, no suspended cogwheel), anchoring every search at a vertex or an
edge and its rim, so it stays polynomial.  The block-wise rim test is run
alongside as an independent cross-check and reported as ``rim_check``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from . import generators as gen
from .errors import NotSquaregraphError, NotTwoConnectedError
from .graph import Graph, Vertex, ball, is_median_graph, median_witness

COGWHEEL_HUB = "cogwheel-hub"
COGFAN = "cogfan"
ARTICULATION = "articulation-rim"
IRREGULAR = "irregular"


@dataclass(frozen=True)
class Rim:
    kind: str
    order: tuple  # rim vertices in traversal order (components concatenated)
    components: tuple = ()


@dataclass(frozen=True)
class RimClassification:
    rims: dict

    def kind(self, v: Vertex) -> str:
        return self.rims[v].kind

    def vertices_of_kind(self, kind: str) -> list:
        return sorted(v for v, r in self.rims.items() if r.kind == kind)

    def to_json(self) -> dict:
        return {v: {"kind": r.kind, "rim": list(r.order)} for v, r in sorted(self.rims.items())}


@dataclass(frozen=True)
class RecognitionReport:
    verdict: bool
    witness_kind: str | None = None
    witness: tuple = ()
    rims: RimClassification | None = field(default=None, repr=False)
    boundary: tuple | None = None
    rim_check: bool | None = None

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "witness_kind": self.witness_kind,
            "witness": list(self.witness),
            "boundary": list(self.boundary) if self.boundary is not None else None,
            "rim_check": self.rim_check,
        }
        if self.verdict and self.rims is not None:
            out["rims"] = {v: r["kind"] for v, r in self.rims.to_json().items()}
        return out


@dataclass(frozen=True)
class CurvatureMap:
    values: dict  # vertex -> Fraction
    inner: frozenset
    boundary_length: int

    @property
    def nonpositive(self) -> bool:
        return all(x <= 0 for x in self.values.values())

    @property
    def zeros(self) -> list:
        return sorted(v for v, x in self.values.items() if x == 0)

    def to_json(self) -> dict:
        return {
            "curvature": {v: str(x) for v, x in sorted(self.values.items())},
            "inner": sorted(self.inner),
            "boundary_length": self.boundary_length,
            "nonpositive": self.nonpositive,
            "zeros": self.zeros,
        }


# -- rims -----------------------------------------------------------------------


def rim_vertices(g: Graph, u: Vertex) -> frozenset:
    nbrs = g.neighbors(u)
    second = set()
    for x in nbrs:
        for y in g.neighbors(x):
            if y != u and y not in nbrs and len(g.neighbors(y) & nbrs) >= 2:
                second.add(y)
    return frozenset(nbrs) | frozenset(second)


def _walk(adj: dict, start) -> list:
    order = [start]
    seen = {start}
    while True:
        nxt = sorted(w for w in adj[order[-1]] if w not in seen)
        if not nxt:
            return order
        order.append(nxt[0])
        seen.add(nxt[0])


def classify_rim(g: Graph, u: Vertex) -> Rim:
    rim = rim_vertices(g, u)
    adj = {x: {y for y in g.neighbors(x) if y in rim} for x in rim}
    if any(len(ns) > 2 for ns in adj.values()):
        return Rim(IRREGULAR, tuple(sorted(rim)))
    sub = Graph(sorted(rim), [(x, y) for x in rim for y in adj[x] if x < y])
    comps = []
    has_cycle = False
    for comp in sub.components():
        ends = sorted(x for x in comp if len(adj[x]) <= 1)
        if ends:
            comps.append(tuple(_walk(adj, ends[0])))
        else:
            has_cycle = True
            comps.append(tuple(_walk(adj, min(comp))))
    comps.sort()
    order = tuple(x for c in comps for x in c)
    if has_cycle:
        if len(comps) == 1 and len(comps[0]) >= 8:
            return Rim(COGWHEEL_HUB, order, tuple(comps))
        return Rim(IRREGULAR, order, tuple(comps))
    if len(comps) <= 1:
        return Rim(COGFAN, order, tuple(comps))
    return Rim(ARTICULATION, order, tuple(comps))


def classify_rims(g: Graph) -> RimClassification:
    return RimClassification({u: classify_rim(g, u) for u in g.vertices})


# -- witness search ---------------------------------------------------------------


def _iso(g: Graph, verts, ref: Graph) -> bool:
    return nx.is_isomorphic(g.subgraph(verts).to_networkx(), ref.to_networkx())


def _find_k23(g: Graph):
    ref = gen.complete_bipartite(2, 3)
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v):
            continue
        common = sorted(g.neighbors(u) & g.neighbors(v))
        for trio in combinations(common, 3):
            if _iso(g, (u, v) + trio, ref):
                return (u, v) + trio
    return None


def _find_cube(g: Graph):
    ref = gen.cube()
    for w in g.vertices:
        for a, b, c in combinations(sorted(g.neighbors(w)), 3):
            for x in sorted((g.neighbors(a) & g.neighbors(b)) - {w}):
                for y in sorted((g.neighbors(a) & g.neighbors(c)) - {w}):
                    for z in sorted((g.neighbors(b) & g.neighbors(c)) - {w}):
                        for t in sorted(g.neighbors(x) & g.neighbors(y) & g.neighbors(z)):
                            verts = (w, a, b, c, x, y, z, t)
                            if len(set(verts)) == 8 and _iso(g, verts, ref):
                                return verts
    return None


def _find_k2xk13(g: Graph):
    ref = gen.k2_times_k13()
    for u, x in g.edges:
        for hub, twin in ((u, x), (x, u)):
            squares = []
            for n in sorted(g.neighbors(hub) - {twin}):
                for y in sorted(g.neighbors(twin) - {hub}):
                    if g.has_edge(n, y):
                        squares.append((n, y))
            for trio in combinations(squares, 3):
                verts = (hub, twin) + tuple(v for sq in trio for v in sq)
                if len(set(verts)) == 8 and _iso(g, verts, ref):
                    return verts
    return None


def _find_suspended_cogwheel(g: Graph, rims: RimClassification):
    for u in g.vertices:
        rim = rims.rims[u]
        for comp in rim.components:
            cyc = set(comp)
            if len(comp) < 8 or not all(
                len(g.neighbors(x) & cyc) == 2 for x in comp
            ):
                continue
            for p in sorted(g.neighbors(u) - cyc):
                verts = (u,) + tuple(comp) + (p,)
                if _iso(g, verts, gen.suspended_cogwheel(len(comp) // 2)):
                    return verts
    return None


# -- recognition ----------------------------------------------------------------


def blocks(g: Graph) -> list[frozenset]:
    if len(g) == 1:
        return [frozenset(g.vertices)]
    return sorted(
        (frozenset(b) for b in nx.biconnected_components(g.to_networkx())), key=lambda b: sorted(b)
    )


def articulation_points(g: Graph) -> frozenset:
    if len(g) <= 2:
        return frozenset()
    return frozenset(nx.articulation_points(g.to_networkx()))


def is_two_connected(g: Graph) -> bool:
    return len(g) >= 3 and g.is_connected() and not articulation_points(g)


def blockwise_rim_check(g: Graph) -> bool:
    """Median and every block's closed rims are cogfans or cogwheels.

    Articulation points must be boundary (cogfan) vertices of each block
    they lie in.
    """
    if not is_median_graph(g):
        return False
    cut = articulation_points(g)
    for b in blocks(g):
        if len(b) < 3:
            continue
        sub = g.subgraph(b)
        for v in sub.vertices:
            kind = classify_rim(sub, v).kind
            if kind == COGFAN:
                continue
            if kind == COGWHEEL_HUB and v not in cut:
                continue
            return False
    return True


def is_squaregraph(g: Graph) -> RecognitionReport:
    g.distance_matrix  # connectivity precondition
    rim_ok = blockwise_rim_check(g)
    triple = median_witness(g)
    if triple is not None:
        k23 = _find_k23(g)
        if k23 is not None:
            return RecognitionReport(False, "K23", k23, rim_check=rim_ok)
        return RecognitionReport(False, "non-median", triple, rim_check=rim_ok)
    cube = _find_cube(g)
    if cube is not None:
        return RecognitionReport(False, "cube", cube, rim_check=rim_ok)
    k2k13 = _find_k2xk13(g)
    if k2k13 is not None:
        return RecognitionReport(False, "K2xK13", k2k13, rim_check=rim_ok)
    rims = classify_rims(g)
    sus = _find_suspended_cogwheel(g, rims)
    if sus is not None:
        return RecognitionReport(False, "suspended-cogwheel", sus, rims=rims, rim_check=rim_ok)
    boundary = boundary_cycle(g, rims) if is_two_connected(g) else None
    return RecognitionReport(True, None, (), rims=rims, boundary=boundary, rim_check=rim_ok)


def witness_matches(g: Graph, report: RecognitionReport) -> bool:
    """Check that a negative report's witness induces the claimed pattern."""
    kind, verts = report.witness_kind, report.witness
    if kind == "K23":
        return _iso(g, verts, gen.complete_bipartite(2, 3))
    if kind == "cube":
        return _iso(g, verts, gen.cube())
    if kind == "K2xK13":
        return _iso(g, verts, gen.k2_times_k13())
    if kind == "suspended-cogwheel":
        return _iso(g, verts, gen.suspended_cogwheel((len(verts) - 2) // 2))
    if kind == "non-median":
        a, b, c = verts
        from .graph import median

        return median(g, a, b, c) is None
    return False


def require_squaregraph(g: Graph) -> RecognitionReport:
    report = is_squaregraph(g)
    if not report.verdict:
        raise NotSquaregraphError(
            f"not a squaregraph (witness: {report.witness_kind})",
            witness_kind=report.witness_kind,
            witness=list(report.witness),
        )
    return report


# -- boundary -----------------------------------------------------------------------


def boundary_cycle(g: Graph, rims: RimClassification | None = None) -> tuple:
    """Boundary vertices of a 2-connected squaregraph in cyclic order.

    A boundary vertex's rim is a path whose two ends are its neighbours along
    the outer face, so the outer face is walked by always leaving through the
    rim end we did not arrive from.  The start is the least boundary vertex and
    the walk heads to its lesser boundary neighbour.
    """
    if not is_two_connected(g):
        raise NotTwoConnectedError(
            "boundary cycle needs a 2-connected squaregraph; decompose into blocks first"
        )
    rims = rims or classify_rims(g)
    bad = [v for v, r in rims.rims.items() if r.kind not in (COGFAN, COGWHEEL_HUB)]
    if bad:
        raise NotSquaregraphError("vertex rims are not cogfans or cogwheels", vertices=bad)
    ends = {}
    for v, r in rims.rims.items():
        if r.kind == COGFAN:
            ends[v] = (r.order[0], r.order[-1])
    start = min(ends)
    cyc = [start, min(ends[start])]
    while True:
        here = cyc[-1]
        a, b = ends[here]
        nxt = b if a == cyc[-2] else a
        if nxt == start:
            break
        if nxt in cyc or len(cyc) > len(ends):
            raise NotSquaregraphError("outer face walk does not close into a simple cycle")
        cyc.append(nxt)
    if len(cyc) != len(ends):
        raise NotSquaregraphError("outer face misses boundary vertices", boundary=cyc)
    return tuple(cyc)


def outer_walk(g: Graph) -> tuple:
    """Closed walk around the outer face of a squaregraph.

    2-connected blocks contribute their boundary cycles; bridges are walked
    both ways.  Blocks are glued at articulation points by inserting the
    child's walk right after one occurrence of the shared vertex.
    """
    if len(g) == 1:
        return tuple(g.vertices)
    bl = blocks(g)
    walks = []
    for b in bl:
        if len(b) == 2:
            walks.append(tuple(sorted(b)))
        else:
            walks.append(boundary_cycle(g.subgraph(b)))
    placed = [False] * len(bl)
    placed[0] = True
    walk = list(walks[0])
    changed = True
    while changed:
        changed = False
        for i, w in enumerate(walks):
            if placed[i]:
                continue
            shared = [pos for pos, v in enumerate(walk) if v in bl[i]]
            if not shared:
                continue
            pos = shared[0]
            x = walk[pos]
            k = w.index(x)
            rotated = list(w[k:]) + list(w[:k])
            walk = walk[: pos + 1] + rotated[1:] + [x] + walk[pos + 1 :]
            placed[i] = True
            changed = True
    return tuple(walk)


# -- curvature and balls -------------------------------------------------------------


def curvature(g: Graph) -> CurvatureMap:
    """Exact vertex curvatures of a 2-connected squaregraph."""
    if not is_two_connected(g):
        raise NotTwoConnectedError("curvature is defined here for 2-connected squaregraphs only")
    report = require_squaregraph(g)
    rims = report.rims
    cyc = report.boundary
    inner = frozenset(v for v in g if rims.kind(v) == COGWHEEL_HUB)
    values = {}
    for v in g:
        deg = g.degree(v)
        if v in inner:
            values[v] = 1 - Fraction(deg, 4)
        else:
            values[v] = Fraction(1, 4) - Fraction(deg, 4) + Fraction(1, len(cyc))
    return CurvatureMap(values, inner, len(cyc))


def ball_is_squaregraph(g: Graph, v: Vertex, r: int) -> bool:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return is_squaregraph(g.subgraph(ball(g, v, r))).verdict
