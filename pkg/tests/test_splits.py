
import networkx as nx
import pytest
from hypothesis import given, strategies as st

from squarekit import generators as gen
from squarekit.errors import InvalidSplitSystemError, NotMedianError
from squarekit.graph import is_convex
from squarekit.recognition import boundary_cycle
from squarekit.splits import (
    Split,
    SplitSystem,
    compatibility_graph,
    find_triangle,
    halfspace_system,
    incompatibility_graph,
    is_circular,
    is_two_compatible,
    theta_classes,
    theta_classes_by_definition,
    zone,
)

squaregraphs = st.builds(gen.random_squaregraph, st.integers(0, 10**6), st.integers(0, 12), st.booleans())


def iso(g, h):
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


class TestSplit:
    def test_canonical_side_order(self):
        s = Split.of({"c", "d"}, {"a", "b"})
        assert s.a == {"a", "b"} and s == Split.of({"a", "b"}, {"c", "d"})

    def test_empty_or_overlapping_sides_rejected(self):
        with pytest.raises(InvalidSplitSystemError):
            Split.of(set(), {"a"})
        with pytest.raises(InvalidSplitSystemError):
            Split.of({"a", "b"}, {"b"})

    def test_compatibility(self):
        a = Split.of("12", "34")
        assert not a.compatible(Split.of("13", "24"))
        assert a.compatible(Split.of("1", "234"))

    def test_system_rejects_duplicates_and_partial_splits(self):
        with pytest.raises(InvalidSplitSystemError):
            SplitSystem(("1", "2", "3"), (Split.of("1", "23"), Split.of("23", "1")))
        with pytest.raises(InvalidSplitSystemError):
            SplitSystem(("1", "2", "3"), (Split.of("1", "2"),))

    def test_restrict_drops_trivial_and_duplicate(self):
        s = SplitSystem(tuple("1234"), (Split.of("12", "34"), Split.of("1", "234"), Split.of("123", "4")))
        r = s.restrict({"1", "2", "3"})
        assert set(r.splits) == {Split.of("12", "3"), Split.of("1", "23")}

    def test_json_round_trip(self):
        s = halfspace_system(gen.domino())
        assert SplitSystem.from_json(s.to_json()) == s


class TestTheta:
    def test_c4(self):
        th = theta_classes(gen.cycle(4))
        assert sorted(len(c) for c in th.classes) == [2, 2]

    def test_tree_classes_are_singletons(self):
        th = theta_classes(gen.star(4))
        assert len(th) == 4 and all(len(c) == 1 for c in th.classes)

    def test_grid33(self):
        th = theta_classes(gen.grid(3, 3))
        assert sorted(len(c) for c in th.classes) == [3, 3, 3, 3]

    def test_cube(self):
        assert sorted(len(c) for c in theta_classes(gen.cube()).classes) == [4, 4, 4]

    def test_non_median_rejected(self):
        with pytest.raises(NotMedianError):
            theta_classes(gen.cycle(6))

    @given(squaregraphs)
    def test_psi_closure_matches_distance_definition(self, g):
        fast = {frozenset(c) for c in theta_classes(g).classes}
        assert fast == set(theta_classes_by_definition(g))

    @given(squaregraphs)
    def test_halfspaces_are_convex_complements(self, g):
        for a, b in theta_classes(g).halfspaces:
            assert a | b == frozenset(g.vertices) and not a & b
            assert is_convex(g, a) and is_convex(g, b)


class TestHalfspaceSystem:
    def test_c4(self):
        s = halfspace_system(gen.cycle(4))
        assert len(s) == 2 and all(len(sp.a) == 2 == len(sp.b) for sp in s)

    def test_star(self):
        s = halfspace_system(gen.star(3))
        assert len(s) == 3 and all(sorted((len(sp.a), len(sp.b))) == [1, 3] for sp in s)

    def test_cogwheel5(self):
        g = gen.cogwheel(5)
        assert len(g) == 11 and len(halfspace_system(g)) == 5

    def test_incompatibility_examples(self):
        assert not incompatibility_graph(halfspace_system(gen.star(4))).edges
        assert iso(incompatibility_graph(halfspace_system(gen.grid(3, 3))), gen.cycle(4))
        assert iso(incompatibility_graph(halfspace_system(gen.cogwheel(5))), gen.cycle(5))

    def test_compatibility_graph_is_complement(self):
        s = halfspace_system(gen.cogwheel(5))
        inc, comp = incompatibility_graph(s), compatibility_graph(s)
        assert len(inc.edges) + len(comp.edges) == 10 and not set(inc.edges) & set(comp.edges)

    def test_two_compatibility(self):
        assert is_two_compatible(halfspace_system(gen.path(4)))
        assert not is_two_compatible(halfspace_system(gen.cube()))
        assert find_triangle(incompatibility_graph(halfspace_system(gen.cube()))) is not None

    @given(squaregraphs)
    def test_squaregraph_splits_are_two_compatible(self, g):
        assert is_two_compatible(halfspace_system(g))


class TestCircular:
    def test_arcs(self):
        s = SplitSystem(tuple("1234"), (Split.of("12", "34"), Split.of("1", "234")))
        assert is_circular(s, list("1234"))

    def test_non_arc(self):
        s = SplitSystem(tuple("1234"), (Split.of("13", "24"),))
        assert not is_circular(s, list("1234"))

    def test_bad_order(self):
        s = SplitSystem(tuple("12"), (Split.of("1", "2"),))
        with pytest.raises(InvalidSplitSystemError):
            is_circular(s, ["1", "1"])

    def test_grid_trace_on_boundary(self):
        g = gen.grid(3, 3)
        cyc = boundary_cycle(g)
        assert is_circular(halfspace_system(g).restrict(cyc), cyc)

    @given(st.builds(gen.random_squaregraph, st.integers(0, 10**6), st.integers(0, 12), st.just(True)))
    def test_two_connected_traces_are_circular(self, g):
        cyc = boundary_cycle(g)
        assert is_circular(halfspace_system(g).restrict(cyc), cyc)


class TestZones:
    def test_c4_zone(self):
        z = zone(gen.cycle(4), ("0", "1"))
        assert len(z.rungs) == 2

    def test_grid_middle_column(self):
        g = gen.grid(3, 3)
        z = zone(g, ("0_1", "1_1"))
        assert len(z.rungs) == 3
        assert z.vertices() == {"0_0", "0_1", "0_2", "1_0", "1_1", "1_2"}

    def test_ladder_rung_spans_graph(self):
        g = gen.grid(2, 5)
        assert zone(g, ("0_2", "1_2")).vertices() == frozenset(g.vertices)

    @given(squaregraphs)
    def test_zone_sides_are_matched_paths(self, g):
        th = theta_classes(g)
        for rep in th.reps:
            z = zone(g, rep, th)
            for (a, b), (c, d) in zip(z.rungs, z.rungs[1:]):
                assert g.has_edge(a, c) and g.has_edge(b, d)
            assert len(z.rungs) == len(th.classes[z.class_id])
