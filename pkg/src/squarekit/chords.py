"""Chord diagrams and their duality with squaregraphs.

A diagram is the cyclic sequence of chord labels met while walking around
the circle; every label occurs exactly twice.  The squaregraph of a
triangle-free diagram has one vertex per cell of the chorded disk.  The
reverse map reads off zone labels along the outer face of a squaregraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidDiagramError
from .graph import Graph
from .helly import hellyfy
from .recognition import outer_walk, require_squaregraph
from .splits import Split, SplitSystem, find_triangle, theta_classes


@dataclass(frozen=True)
class ChordDiagram:
    seq: tuple

    def __init__(self, seq):
        seq = tuple(str(x).strip() for x in seq)
        counts: dict = {}
        for x in seq:
            counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x, c in counts.items() if c != 2)
        if bad:
            raise InvalidDiagramError(
                f"every chord label must occur exactly twice; offending labels {bad}", labels=bad
            )
        object.__setattr__(self, "seq", seq)

    @classmethod
    def parse(cls, text: str) -> "ChordDiagram":
        text = text.strip()
        return cls([t for t in text.split(",")] if text else [])

    def __str__(self) -> str:
        return ",".join(self.seq)

    def __len__(self) -> int:
        return len(self.seq) // 2

    @property
    def labels(self) -> list:
        out = []
        for x in self.seq:
            if x not in out:
                out.append(x)
        return out

    def positions(self) -> dict:
        pos: dict = {}
        for i, x in enumerate(self.seq):
            pos.setdefault(x, []).append(i)
        return pos

    def crossing(self, x, y) -> bool:
        pos = self.positions()
        (a1, a2), (b1, b2) = pos[x], pos[y]
        return (a1 < b1 < a2) != (a1 < b2 < a2)

    def canonical(self) -> tuple:
        """Least relabelled sequence over all rotations and both orientations."""
        best = None
        n = len(self.seq)
        for base in (self.seq, self.seq[::-1]):
            for r in range(max(n, 1)):
                rot = base[r:] + base[:r]
                relabel: dict = {}
                key = tuple(relabel.setdefault(x, len(relabel)) for x in rot)
                if best is None or key < best:
                    best = key
        return best or ()

    def same_as(self, other: "ChordDiagram") -> bool:
        return self.canonical() == other.canonical()


def circle_graph(d: ChordDiagram) -> Graph:
    labels = d.labels
    return Graph(labels, [(x, y) for x, y in combinations(labels, 2) if d.crossing(x, y)])


def find_chord_triangle(d: ChordDiagram):
    return find_triangle(circle_graph(d))


def is_triangle_free(d: ChordDiagram) -> bool:
    return find_chord_triangle(d) is None


def boundary_split_system(d: ChordDiagram) -> SplitSystem:
    """Splits of the boundary cells induced by the chords.

    Gap i lies between positions i and i+1.  Gaps not separated by any chord
    belong to the same cell and are merged; a cell is named ``c<i>`` after its
    first gap.
    """
    n = len(d.seq)
    if n == 0:
        return SplitSystem(("c0",), ())
    pos = d.positions()
    labels = d.labels
    member = {}
    for x in labels:
        p, q = pos[x]
        member[x] = frozenset(range(p, q))
    cell_of = {}
    cells = []
    for gap in range(n):
        sig = tuple(gap in member[x] for x in labels)
        if sig not in cell_of:
            cell_of[sig] = f"c{gap}"
            cells.append((sig, f"c{gap}"))
    ground = tuple(name for _, name in cells)
    splits = []
    for i, x in enumerate(labels):
        inside = frozenset(name for sig, name in cells if sig[i])
        splits.append(Split(inside, frozenset(ground) - inside))
    return SplitSystem(ground, tuple(splits))


def squaregraph_from_diagram(d: ChordDiagram) -> Graph:
    tri = find_chord_triangle(d)
    if tri is not None:
        raise InvalidDiagramError(f"chords {list(tri)} pairwise cross", triangle=list(tri))
    s = boundary_split_system(d)
    if not s.splits:
        return Graph(s.ground)
    return hellyfy(s).graph


def diagram_from_squaregraph(g: Graph) -> ChordDiagram:
    """Zone labels of the edges met along the outer face walk.

    For 2-connected inputs the walk is the boundary cycle; otherwise blocks
    are glued at articulation points, so only the block-wise structure is
    canonical.
    """
    require_squaregraph(g)
    if len(g) == 1:
        return ChordDiagram([])
    walk = outer_walk(g)
    theta = theta_classes(g)
    seq = []
    for i in range(len(walk)):
        u, v = walk[i], walk[(i + 1) % len(walk)]
        seq.append(theta.edge_class[(min(u, v), max(u, v))])
    return ChordDiagram(seq)
