"""Constructors for test corpora and named small graphs.

Generator spec strings (used by the CLI)::

    grid:3x4            m x n vertices
    cogwheel:5          hub plus a 2k-cycle, every second rim vertex a spoke
    polyomino:0,0;1,0;1,1   unit cells by lower-left corner
    cycle:6, path:4, star:3, cube, k23, k2xk13, suspended:5, tunnel:3
    random:seed=7,steps=20[,connected=1]

``random`` uses :class:`Lcg64`, a 64-bit linear congruential generator with
Knuth's MMIX constants (multiplier 6364136223846793005, increment
1442695040888963407); draws take the high 32 bits of the state and reject
to avoid modulo bias.  The same seed yields the same graph everywhere.
"""

from __future__ import annotations

import os
from itertools import combinations

from .errors import InvalidParameterError, NotSquaregraphError
from .graph import Graph, Vertex, is_convex

MMIX_MULTIPLIER = 6364136223846793005
MMIX_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64
        self.next_u32()

    def next_u32(self) -> int:
        self.state = (MMIX_MULTIPLIER * self.state + MMIX_INCREMENT) & _MASK64
        return self.state >> 32

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs n > 0")
        limit = (1 << 32) - ((1 << 32) % n)
        while True:
            x = self.next_u32()
            if x < limit:
                return x % n


# -- deterministic families ---------------------------------------------------


def grid(m: int, n: int) -> Graph:
    """The m x n grid graph (m rows, n columns of vertices)."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"grid needs m, n >= 1, got {m}x{n}", m=m, n=n)
    name = lambda i, j: f"{i}_{j}"  # noqa: E731
    verts = [name(i, j) for i in range(m) for j in range(n)]
    edges = [(name(i, j), name(i, j + 1)) for i in range(m) for j in range(n - 1)]
    edges += [(name(i, j), name(i + 1, j)) for i in range(m - 1) for j in range(n)]
    return Graph(verts, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("path needs at least one vertex", n=n)
    return Graph([str(i) for i in range(n)], [(str(i), str(i + 1)) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycle needs at least 3 vertices", n=n)
    return Graph([str(i) for i in range(n)], [(str(i), str((i + 1) % n)) for i in range(n)])


def star(k: int) -> Graph:
    return Graph(["c"] + [f"l{i}" for i in range(k)], [("c", f"l{i}") for i in range(k)])


def complete_bipartite(p: int, q: int) -> Graph:
    left = [f"a{i}" for i in range(p)]
    right = [f"b{j}" for j in range(q)]
    return Graph(left + right, [(a, b) for a in left for b in right])


def product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (x, y) is named ``x|y``."""
    verts = [f"{x}|{y}" for x in g for y in h]
    edges = [(f"{x}|{a}", f"{x}|{b}") for x in g for a, b in h.edges]
    edges += [(f"{a}|{y}", f"{b}|{y}") for a, b in g.edges for y in h]
    return Graph(verts, edges)


def cube() -> Graph:
    verts = [format(i, "03b") for i in range(8)]
    edges = [(u, v) for u, v in combinations(verts, 2) if sum(a != b for a, b in zip(u, v)) == 1]
    return Graph(verts, edges)


def k2_times_k13() -> Graph:
    return product(path(2), star(3))


def domino() -> Graph:
    return grid(2, 3)


def cogwheel(k: int) -> Graph:
    """Hub ``h`` plus the cycle r0..r(2k-1); even-indexed rim vertices are spokes."""
    if k < 4:
        raise InvalidParameterError(f"cogwheel needs k >= 4 (rim cycle longer than 6), got {k}", k=k)
    rim = [f"r{i}" for i in range(2 * k)]
    edges = [(rim[i], rim[(i + 1) % (2 * k)]) for i in range(2 * k)]
    edges += [("h", rim[i]) for i in range(0, 2 * k, 2)]
    return Graph(["h"] + rim, edges)


def suspended_cogwheel(k: int) -> Graph:
    base = cogwheel(k)
    return Graph(list(base.vertices) + ["p"], list(base.edges) + [("h", "p")])


def tunnel(rings: int) -> Graph:
    """Finite piece of the concentric 'tunnel': a 4-cycle times a path."""
    if rings < 1:
        raise InvalidParameterError("tunnel needs at least one ring", rings=rings)
    return product(path(rings), cycle(4))


def polyomino(cells) -> Graph:
    """Union of unit squares, given by lower-left corners, as a plane graph."""
    cells = sorted({(int(x), int(y)) for x, y in cells})
    if not cells:
        raise InvalidParameterError("polyomino needs at least one cell")
    cellset = set(cells)
    # edge-connected
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cells):
        raise InvalidParameterError("polyomino cells are not edge-connected")
    corner = lambda x, y: f"{x}_{y}"  # noqa: E731
    verts, edges = set(), set()
    for x, y in cells:
        pts = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        for p in pts:
            verts.add(corner(*p))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            u, v = corner(*a), corner(*b)
            edges.add((min(u, v), max(u, v)))
    # pinch points: a corner where exactly two diagonal cells meet
    for x in range(min(c[0] for c in cells), max(c[0] for c in cells) + 2):
        for y in range(min(c[1] for c in cells), max(c[1] for c in cells) + 2):
            around = [(x - 1, y - 1) in cellset, (x, y - 1) in cellset, (x, y) in cellset, (x - 1, y) in cellset]
            if around in ([True, False, True, False], [False, True, False, True]):
                raise InvalidParameterError(f"polyomino boundary pinches at corner {x},{y}")
    if len(verts) - len(edges) + len(cells) != 1:
        raise InvalidParameterError("polyomino has a hole; its boundary is not a simple cycle")
    return Graph(sorted(verts), sorted(edges))


# -- simplex graphs -----------------------------------------------------------


def cliques(f: Graph) -> list[tuple[Vertex, ...]]:
    """All cliques of ``f`` (including the empty one), each as a sorted tuple."""
    out: list[tuple] = [()]
    order = sorted(f.vertices)

    def extend(clique: tuple, cands: list):
        for i, v in enumerate(cands):
            grown = clique + (v,)
            out.append(grown)
            extend(grown, [w for w in cands[i + 1 :] if f.has_edge(v, w)])

    extend((), order)
    return out


def clique_name(c) -> str:
    return "{" + ",".join(sorted(c)) + "}"


def simplex_graph(f: Graph) -> Graph:
    """Cliques of ``f`` as vertices; two are adjacent when they differ in one vertex."""
    cs = cliques(f)
    big = next((c for c in cs if len(c) >= 5), None)
    if big is not None:
        raise InvalidParameterError(f"input contains a clique of size {len(big)}: {list(big)}", clique=list(big))
    members = {frozenset(c) for c in cs}
    edges = []
    for c in cs:
        fc = frozenset(c)
        for v in c:
            smaller = fc - {v}
            if smaller in members:
                edges.append((clique_name(c), clique_name(smaller)))
    return Graph([clique_name(c) for c in cs], edges)


def with_pendants(f: Graph) -> Graph:
    """``f`` with a new degree-one vertex ``v'`` hung on every vertex v."""
    extra = [f"{v}'" for v in f.vertices]
    return Graph(list(f.vertices) + extra, list(f.edges) + [(v, f"{v}'") for v in f.vertices])


def kappa_reduction(f: Graph, k: int) -> tuple[Graph, int]:
    """Instance of the clique-cover reduction: (simplex graph of f plus pendants, 2n + k).

    The simplex graph has a median-generating set of size 2n + k exactly when the
    edges of ``f`` can be covered by k cliques.  Each pendant singleton {p} lies
    in just one edge simplex, so it is never a median of other simplices and is
    forced alongside the n pendant edges.
    """
    return simplex_graph(with_pendants(f)), 2 * len(f) + k


# -- expansion ----------------------------------------------------------------


def _copy_name(v: Vertex, taken) -> Vertex:
    name = v + "'"
    while name in taken:
        name += "'"
    return name


def expand(g: Graph, p, side=None) -> Graph:
    """Pull ``g`` apart along the convex path ``p`` and rejoin by a new ladder.

    ``g`` must be the union of two subgraphs meeting exactly in ``p``; ``side``
    names the vertices (off ``p``) of the part that keeps the original path.
    Without ``side`` the split is inferred when ``g - p`` has at most two
    components; with one component the new ladder is glued onto ``p``.
    The result is checked to be a squaregraph.
    """
    from .recognition import is_squaregraph

    p = [str(v) for v in p]
    pset = set(p)
    if not p or len(pset) != len(p):
        raise InvalidParameterError("expansion path must be a nonempty simple path")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise InvalidParameterError(f"{a}-{b} is not an edge", path=p)
    if not is_convex(g, pset):
        raise InvalidParameterError("expansion path is not convex", path=p)
    rest = g.subgraph([v for v in g if v not in pset])
    comps = rest.components() if len(rest) else []
    if side is None:
        if len(comps) == 0:
            keep: set = set()
        elif len(comps) == 1:
            keep = set(comps[0])
        elif len(comps) == 2:
            keep = set(min(comps, key=lambda c: min(c)))
        else:
            raise InvalidParameterError(
                "path leaves more than two pieces; pass side= to choose the split", pieces=len(comps)
            )
    else:
        keep = {str(v) for v in side}
        if keep & pset:
            raise InvalidParameterError("side must not contain path vertices")
    other = set(g.vertices) - pset - keep
    for u, v in g.edges:
        if (u in keep and v in other) or (u in other and v in keep):
            raise InvalidParameterError("path does not separate the chosen sides", edge=[u, v])
    if side is None and len(comps) == 1:
        keep, other = set(), keep
    copy = {}
    taken = set(g.vertices)
    for v in p:
        copy[v] = _copy_name(v, taken)
        taken.add(copy[v])
    verts = list(g.vertices) + [copy[v] for v in p]
    edges = []
    for u, v in g.edges:
        if u in pset and v in pset:
            edges.append((u, v))
            edges.append((copy[u], copy[v]))
        elif u in pset and v in other:
            edges.append((copy[u], v))
        elif v in pset and u in other:
            edges.append((u, copy[v]))
        else:
            edges.append((u, v))
    edges += [(v, copy[v]) for v in p]
    out = Graph(verts, edges)
    report = is_squaregraph(out)
    if not report.verdict:
        raise NotSquaregraphError(
            "expansion along this path does not give a squaregraph",
            path=p,
            witness=report.witness_kind,
        )
    return out


# -- random squaregraphs ------------------------------------------------------


def random_diagram(seed: int, steps: int, two_connected: bool = False) -> list[int]:
    """Grow a triangle-free chord diagram from two crossing chords.

    Each step inserts one chord whose endpoints are drawn uniformly among
    the gap pairs that keep the diagram triangle-free (rejection sampling on
    :class:`Lcg64`).  With ``two_connected`` the new chord must cross at
    least one existing chord, which keeps the dual squaregraph 2-connected.
    """
    if steps < 0:
        raise InvalidParameterError("steps must be nonnegative", steps=steps)
    rng = Lcg64(seed)
    seq = [0, 1, 0, 1]
    crosses = {0: {1}, 1: {0}}
    for label in range(2, steps + 2):
        n_gaps = len(seq)
        pairs = n_gaps * (n_gaps + 1) // 2
        for _attempt in range(20000):
            k = rng.randbelow(pairs)
            i = 0
            while k >= n_gaps - i:
                k -= n_gaps - i
                i += 1
            j = i + k
            inside = seq[i:j]
            crossed = {x for x in set(inside) if inside.count(x) == 1}
            if two_connected and not crossed:
                continue
            if any(b in crosses[a] for a, b in combinations(crossed, 2)):
                continue
            break
        else:  # pragma: no cover - sampling space always contains a same-gap insertion
            i = j = 0
            crossed = set()
        seq = seq[:i] + [label] + seq[i:j] + [label] + seq[j:]
        crosses[label] = set(crossed)
        for x in crossed:
            crosses[x].add(label)
    return seq


def random_squaregraph(seed: int, steps: int, two_connected: bool = False) -> Graph:
    """Deterministic random squaregraph with exactly ``steps + 2`` zones."""
    from .chords import ChordDiagram, squaregraph_from_diagram

    g = squaregraph_from_diagram(ChordDiagram(random_diagram(seed, steps, two_connected)))
    mapping = {v: f"v{i}" for i, v in enumerate(sorted(g.vertices))}
    return g.relabel(mapping)


# -- spec strings ---------------------------------------------------------------


def _kv(text: str) -> dict:
    out = {}
    for part in filter(None, text.split(",")):
        if "=" not in part:
            raise InvalidParameterError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        out[key.strip()] = int(value)
    return out


def generate(spec: str) -> Graph:
    """Build a graph from a generator spec string such as ``grid:3x4``."""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "grid":
            m, n = (int(t) for t in arg.lower().split("x"))
            return grid(m, n)
        if kind == "cogwheel":
            return cogwheel(int(arg))
        if kind == "suspended":
            return suspended_cogwheel(int(arg))
        if kind == "polyomino":
            cells = [tuple(c.split(",")) for c in arg.split(";") if c]
            return polyomino(cells)
        if kind == "cycle":
            return cycle(int(arg))
        if kind == "path":
            return path(int(arg))
        if kind == "star":
            return star(int(arg))
        if kind == "tunnel":
            return tunnel(int(arg))
        if kind == "cube":
            return cube()
        if kind == "k23":
            return complete_bipartite(2, 3)
        if kind == "k2xk13":
            return k2_times_k13()
        if kind == "domino":
            return domino()
        if kind == "random":
            params = _kv(arg)
            seed = params.get("seed", 0)
            if os.environ.get("SQUAREKIT_SEED"):
                seed = int(os.environ["SQUAREKIT_SEED"])
            return random_squaregraph(seed, params.get("steps", 10), bool(params.get("connected", 0)))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, InvalidParameterError):
            raise
        raise InvalidParameterError(f"malformed generator spec {spec!r}: {exc}", spec=spec) from exc
    raise InvalidParameterError(f"unknown generator {kind!r}", spec=spec)
