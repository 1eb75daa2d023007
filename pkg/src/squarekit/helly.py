"""Copair hypergraphs, the Helly triplet test and Hellyfication.

Hellyfication turns a point-separating split system into a median graph:
its vertices are the transversals (one side chosen per split) whose chosen
sides pairwise intersect.  A transversal with a nonempty intersection is a
ground element; the others become new vertices.  Two vertices are adjacent
when their transversals differ in exactly one split.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameterError, InvalidSplitSystemError, SizeLimitError
from .graph import Graph
from .splits import Split, SplitSystem

DEFAULT_MAX_SPLITS = 64


@dataclass(frozen=True)
class CopairHypergraph:
    ground: tuple
    pairs: tuple  # ((A, B), ...) complementary hyperedges, one pair per split

    @classmethod
    def from_splits(cls, s: SplitSystem) -> "CopairHypergraph":
        return cls(tuple(s.ground), tuple((sp.a, sp.b) for sp in s.splits))

    @property
    def hyperedges(self) -> list[frozenset]:
        return [h for pair in self.pairs for h in pair]

    def to_splits(self) -> SplitSystem:
        return SplitSystem(self.ground, tuple(Split(a, b) for a, b in self.pairs))


def is_helly(h: CopairHypergraph) -> bool:
    """Triplet criterion: for all u, v, w the hyperedges holding two of them meet."""
    edges = h.hyperedges
    ground = frozenset(h.ground)
    for u, v, w in combinations(h.ground, 3):
        common = ground
        for e in edges:
            if (u in e) + (v in e) + (w in e) >= 2:
                common = common & e
                if not common:
                    return False
    return True


@dataclass(frozen=True)
class HellyfiedGraph:
    graph: Graph
    origin: dict  # ground element -> vertex
    transversal: dict  # every vertex -> tuple of 'a'/'b' choices, one per split
    added: tuple  # vertices not coming from the ground set

    def to_json(self) -> dict:
        return {
            **self.graph.to_json(),
            "origin": dict(sorted(self.origin.items())),
            "added": {v: "".join(self.transversal[v]) for v in sorted(self.added)},
        }


def transversal_name(choice: tuple) -> str:
    return "[" + ",".join(f"{i}{c}" for i, c in enumerate(choice)) + "]"


def hellyfy(s: SplitSystem, max_splits: int = DEFAULT_MAX_SPLITS) -> HellyfiedGraph:
    """Median graph of the Hellyfication of a point-separating split system.

    Transversals are enumerated by backtracking over the splits, keeping only
    pairwise-intersecting partial choices.  Every such partial choice extends
    to a full transversal, so the search never dead-ends and its cost is
    proportional to the output size.
    """
    if len(s.splits) > max_splits:
        raise SizeLimitError(
            f"{len(s.splits)} splits exceed the cap of {max_splits}", splits=len(s.splits), cap=max_splits
        )
    pair = s.unseparated_pair()
    if pair is not None:
        raise InvalidSplitSystemError(
            f"split system does not separate {pair[0]!r} and {pair[1]!r}", pair=list(pair)
        )
    ground = list(s.ground)
    bit = {x: 1 << i for i, x in enumerate(ground)}
    sides = []
    for sp in s.splits:
        a = sum(bit[x] for x in sp.a)
        b = sum(bit[x] for x in sp.b)
        sides.append((a, b))
    k = len(sides)
    full = (1 << len(ground)) - 1

    found: list[tuple[tuple, int]] = []
    chosen_masks: list[int] = []
    choice: list[str] = []

    def extend(i: int, inter: int):
        if i == k:
            found.append((tuple(choice), inter))
            return
        for tag, mask in zip("ab", sides[i]):
            if all(mask & m for m in chosen_masks):
                chosen_masks.append(mask)
                choice.append(tag)
                extend(i + 1, inter & mask)
                chosen_masks.pop()
                choice.pop()

    extend(0, full)

    names = {}
    origin = {}
    added = []
    for ch, inter in found:
        if inter:
            (idx,) = [i for i in range(len(ground)) if inter >> i & 1]
            names[ch] = ground[idx]
            origin[ground[idx]] = ground[idx]
        else:
            names[ch] = transversal_name(ch)
            added.append(names[ch])
    edges = []
    for ch in names:
        for i in range(k):
            if ch[i] == "a":
                other = ch[:i] + ("b",) + ch[i + 1 :]
                if other in names:
                    edges.append((names[ch], names[other]))
    verts = list(ground) + sorted(added)
    graph = Graph(verts, edges)
    transversal = {names[ch]: ch for ch in names}
    return HellyfiedGraph(graph, origin, transversal, tuple(sorted(added)))


def trace_splits(s: SplitSystem, x) -> SplitSystem:
    """Restriction of every split to ``x``, dropping empty sides and duplicates."""
    return s.restrict(x)


# -- extremal circular systems ------------------------------------------------------


def circular_splits(n: int) -> SplitSystem:
    """All n(n-1)/2 splits of 1..n into two arcs of the cyclic order."""
    pts = [str(i) for i in range(1, n + 1)]
    seen = []
    for length in range(1, n):
        for start in range(n):
            arc = frozenset(pts[(start + t) % n] for t in range(length))
            sp = Split(arc, frozenset(pts) - arc)
            if sp not in seen:
                seen.append(sp)
    return SplitSystem(tuple(pts), tuple(seen))


def _max_triangle_free(adj: list[int]) -> int:
    """Bitmask of a maximum vertex subset inducing a triangle-free graph."""
    n = len(adj)
    best = [0, 0]  # size, mask

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def search(chosen: int, size: int, cand: int):
        if size + popcount(cand) <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # branch on the candidate with most candidate neighbours
        v = max((i for i in range(n) if cand >> i & 1), key=lambda i: popcount(adj[i] & cand))
        vb = 1 << v
        blocked = 0
        nb_chosen = adj[v] & chosen
        while nb_chosen:
            w = nb_chosen & -nb_chosen
            blocked |= adj[w.bit_length() - 1]
            nb_chosen ^= w
        search(chosen | vb, size + 1, cand & ~vb & ~(adj[v] & blocked))
        search(chosen, size, cand & ~vb)

    search(0, 0, (1 << n) - 1)
    return best[1]


def max_two_compatible_circular(n: int) -> tuple[int, SplitSystem]:
    """Largest 2-compatible subsystem of the circular splits on n points (3 <= n <= 9)."""
    if not 3 <= n <= 9:
        raise InvalidParameterError(f"n must lie in 3..9, got {n}", n=n)
    allsplits = circular_splits(n)
    sp = allsplits.splits
    adj = [0] * len(sp)
    for i, j in combinations(range(len(sp)), 2):
        if not sp[i].compatible(sp[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    mask = _max_triangle_free(adj)
    chosen = tuple(sp[i] for i in range(len(sp)) if mask >> i & 1)
    return len(chosen), SplitSystem(allsplits.ground, chosen)
