from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from squarekit import generators as gen
from squarekit.errors import NotSquaregraphError, NotTwoConnectedError
from squarekit.graph import Graph, is_median_graph
from squarekit.recognition import (
    COGFAN,
    COGWHEEL_HUB,
    IRREGULAR,
    ball_is_squaregraph,
    boundary_cycle,
    classify_rims,
    curvature,
    is_squaregraph,
    outer_walk,
    require_squaregraph,
    witness_matches,
)

squaregraphs = st.builds(gen.random_squaregraph, st.integers(0, 10**6), st.integers(0, 15), st.booleans())
two_connected = st.builds(gen.random_squaregraph, st.integers(0, 10**6), st.integers(0, 15), st.just(True))
small_graphs = st.integers(1, 6).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])).map(
        lambda es: Graph(range(n), es)
    )
)


class TestRims:
    def test_c4_all_cogfans(self):
        rims = classify_rims(gen.cycle(4))
        assert rims.vertices_of_kind(COGFAN) == ["0", "1", "2", "3"]

    def test_cogwheel_hub(self):
        r = classify_rims(gen.cogwheel(5)).rims["h"]
        assert r.kind == COGWHEEL_HUB and len(r.order) == 10

    def test_k2xk13_center_irregular(self):
        g = gen.k2_times_k13()
        kinds = classify_rims(g)
        centers = [v for v in g if g.degree(v) == 4]
        assert centers and all(kinds.kind(v) == IRREGULAR for v in centers)


class TestRecognition:
    @pytest.mark.parametrize(
        "g,kind",
        [
            (gen.cube(), "cube"),
            (gen.k2_times_k13(), "K2xK13"),
            (gen.complete_bipartite(2, 3), "K23"),
            (gen.suspended_cogwheel(5), "suspended-cogwheel"),
            (gen.suspended_cogwheel(6), "suspended-cogwheel"),
            (gen.tunnel(3), "cube"),
        ],
    )
    def test_forbidden_witnesses(self, g, kind):
        rep = is_squaregraph(g)
        assert not rep.verdict and rep.witness_kind == kind
        assert witness_matches(g, rep)
        assert rep.rim_check is False

    def test_non_median_without_k23(self):
        rep = is_squaregraph(gen.cycle(6))
        assert not rep.verdict and rep.witness_kind == "non-median"
        assert witness_matches(gen.cycle(6), rep)

    def test_named_squaregraphs(self, named):
        _, g = named
        rep = is_squaregraph(g)
        assert rep.verdict and rep.rim_check

    def test_polyominoes(self):
        for cells in ([(0, 0)], [(0, 0), (1, 0), (2, 0), (1, 1)], [(0, 0), (1, 0), (1, 1), (1, 2), (0, 2)]):
            assert is_squaregraph(gen.polyomino(cells)).verdict

    def test_require_raises(self):
        with pytest.raises(NotSquaregraphError) as exc:
            require_squaregraph(gen.cube())
        assert exc.value.details["witness_kind"] == "cube"

    @given(squaregraphs)
    def test_generated_graphs_are_planar_squaregraphs(self, g):
        rep = is_squaregraph(g)
        assert rep.verdict and rep.rim_check
        assert nx.check_planarity(g.to_networkx())[0]

    @given(small_graphs)
    def test_rim_check_agrees_with_forbidden_subgraphs(self, g):
        if not g.is_connected():
            return
        rep = is_squaregraph(g)
        assert rep.verdict == rep.rim_check
        if not rep.verdict:
            assert witness_matches(g, rep)

    @given(small_graphs)
    def test_simplex_graphs(self, f):
        # simplex graphs are median; the squaregraph verdict must match the rim test
        if any(len(c) >= 5 for c in gen.cliques(f)):
            return
        g = gen.simplex_graph(f)
        assert is_median_graph(g)
        rep = is_squaregraph(g)
        assert rep.verdict == rep.rim_check
        if not rep.verdict:
            assert witness_matches(g, rep)


class TestBoundary:
    def test_c4(self):
        assert boundary_cycle(gen.cycle(4)) == ("0", "1", "2", "3")

    def test_grid33(self):
        assert boundary_cycle(gen.grid(3, 3)) == ("0_0", "0_1", "0_2", "1_2", "2_2", "2_1", "2_0", "1_0")

    def test_domino(self):
        assert boundary_cycle(gen.domino()) == ("0_0", "0_1", "0_2", "1_2", "1_1", "1_0")

    def test_not_two_connected(self):
        with pytest.raises(NotTwoConnectedError):
            boundary_cycle(gen.path(3))

    def test_outer_walk_of_tree_visits_every_edge_twice(self):
        g = gen.star(3)
        w = outer_walk(g)
        steps = [frozenset((w[i], w[(i + 1) % len(w)])) for i in range(len(w))]
        assert len(w) == 2 * len(g.edges)
        assert all(steps.count(frozenset(e)) == 2 for e in g.edges)

    @given(two_connected)
    def test_boundary_length_from_euler(self, g):
        # all inner faces are squares: 2E = 4(F - 1) + |C| with F = E - V + 2
        cyc = boundary_cycle(g)
        assert len(cyc) == 4 * len(g) - 2 * len(g.edges) - 4
        assert len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i], cyc[i - 1]) for i in range(len(cyc)))


class TestCurvature:
    def test_c4_is_flat(self):
        assert set(curvature(gen.cycle(4)).values.values()) == {0}

    def test_inner_degree_four_is_flat(self):
        assert curvature(gen.grid(3, 3)).values["1_1"] == 0

    def test_cogwheel_hub(self):
        assert curvature(gen.cogwheel(5)).values["h"] == Fraction(-1, 4)

    def test_boundary_values(self):
        cm = curvature(gen.grid(3, 3))
        assert cm.values["0_0"] == Fraction(1, 4) - Fraction(2, 4) + Fraction(1, 8)
        assert cm.to_json()["curvature"]["0_0"] == "-1/8"

    def test_not_two_connected(self):
        with pytest.raises(NotTwoConnectedError):
            curvature(gen.path(3))

    @given(two_connected)
    def test_nonpositive(self, g):
        assert curvature(g).nonpositive


class TestBalls:
    def test_radius_zero(self):
        assert ball_is_squaregraph(gen.cube(), "000", 0)

    def test_tunnel_balls(self):
        # C4 x P4: radius 0 and 1 are fine, larger balls are not squaregraphs
        t = gen.tunnel(4)
        assert [ball_is_squaregraph(t, "0|0", r) for r in range(6)] == [True, True, False, False, False, False]

    @given(squaregraphs, st.integers(0, 4), st.data())
    def test_balls_of_squaregraphs(self, g, r, data):
        v = data.draw(st.sampled_from(g.vertices))
        assert ball_is_squaregraph(g, v, r)


@given(two_connected)
def test_two_connected_squaregraphs_have_four_corners(g):
    assert sum(1 for v in g if g.degree(v) == 2) >= 4
