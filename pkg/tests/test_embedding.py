import json
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from squarekit import generators as gen
from squarekit.embedding import (
    Coloring,
    TreeEmbedding,
    embed_in_trees,
    find_induced_c4,
    inner_vertices,
    is_proper,
    is_tree,
    min_coloring,
    min_trees,
    odd_cogwheels,
    tree_factor,
    verify_isometry,
)
from squarekit.errors import ColoringCapExceeded, InvalidSplitSystemError, NotSquaregraphError, SquareKitError
from squarekit.graph import Graph
from squarekit.splits import halfspace_system, incompatibility_graph


def iso(g, h):
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def brute_chromatic(g):
    vs = list(g.vertices)
    for k in range(1, len(vs) + 1):
        for assign in product(range(k), repeat=len(vs)):
            col = dict(zip(vs, assign))
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return 0


small_graphs = st.integers(1, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])).map(
        lambda es: Graph(range(n), es)
    )
)
squaregraphs = st.builds(gen.random_squaregraph, st.integers(0, 10**6), st.integers(0, 15), st.booleans())


class TestColoring:
    def test_edgeless(self):
        assert min_coloring(Graph(range(4))).k == 1

    def test_odd_cycle(self):
        assert min_coloring(gen.cycle(5)).k == 3

    def test_even_cycle(self):
        c = min_coloring(gen.cycle(4))
        assert c.k == 2 and is_proper(gen.cycle(4), c)

    def test_empty_graph(self):
        assert min_coloring(Graph([])).k == 0

    def test_cap(self):
        k4 = Graph(range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)])
        with pytest.raises(ColoringCapExceeded):
            min_coloring(k4, cap=3)
        with pytest.raises(SquareKitError):
            min_coloring(k4, cap=0)

    def test_deterministic_least_colouring(self):
        # lowest id first gets colour 0
        c = min_coloring(gen.cycle(4))
        assert c.colors["0"] == 0 and c.colors["1"] == 1

    @given(small_graphs)
    def test_matches_brute_chromatic_number(self, g):
        c = min_coloring(g, cap=7)
        assert is_proper(g, c) and c.k == brute_chromatic(g)
        assert sorted(v for cls in c.classes() for v in cls) == sorted(g.vertices)


class TestTreeFactor:
    def test_tree_gives_itself(self):
        t = gen.star(3)
        tree, proj = tree_factor(t, halfspace_system(t).splits)
        assert tree == t and all(proj[v] == v for v in t)

    def test_grid_rows(self):
        g = gen.grid(3, 3)
        s = halfspace_system(g)
        # splits whose sides are unions of whole rows
        horizontal = [sp for sp in s if all(len({v.split("_")[0] for v in side}) == len(side) // 3 for side in (sp.a, sp.b))]
        assert len(horizontal) == 2
        tree, _ = tree_factor(g, horizontal)
        assert iso(tree, gen.path(3))

    def test_c4_single_split(self):
        g = gen.cycle(4)
        tree, proj = tree_factor(g, halfspace_system(g).splits[:1])
        assert len(tree) == 2 and len(tree.edges) == 1
        assert len(set(proj.values())) == 2

    def test_incompatible_class_rejected(self):
        g = gen.cycle(4)
        with pytest.raises(InvalidSplitSystemError):
            tree_factor(g, halfspace_system(g).splits)


class TestEmbedding:
    def test_tree(self):
        t = gen.path(5)
        emb = embed_in_trees(t)
        assert len(emb.factors) == 1 and emb.factors[0] == t

    def test_grid(self):
        emb = embed_in_trees(gen.grid(3, 3))
        assert len(emb.factors) == 2 and all(iso(f, gen.path(3)) for f in emb.factors)

    def test_cogwheel(self):
        assert len(embed_in_trees(gen.cogwheel(5)).factors) == 3

    def test_single_vertex(self):
        emb = embed_in_trees(Graph(["a"]))
        assert len(emb.factors) == 1 and emb.distance("a", "a") == 0

    def test_rejects_non_squaregraph(self):
        with pytest.raises(NotSquaregraphError):
            embed_in_trees(gen.cube())

    def test_json_round_trip(self):
        emb = embed_in_trees(gen.cogwheel(5))
        back = TreeEmbedding.from_json(json.loads(json.dumps(emb.to_json())))
        assert back.factors == emb.factors and back.coords == emb.coords

    def test_tampered_embedding_fails_isometry(self):
        g = gen.grid(3, 3)
        emb = embed_in_trees(g)
        coords = dict(emb.coords)
        coords["1_1"] = coords["0_0"]
        assert not verify_isometry(g, TreeEmbedding(emb.factors, coords, Coloring({}, 2)))

    @given(squaregraphs)
    def test_isometry_and_factor_shape(self, g):
        emb = embed_in_trees(g)
        assert 1 <= len(emb.factors) <= 5
        assert all(is_tree(f) for f in emb.factors)
        dist = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
        vs = g.vertices[:8]
        assert all(emb.distance(u, v) == dist[u][v] for u in vs for v in vs)
        cls_sizes = sorted(len(c) for c in emb.coloring.classes())
        if cls_sizes:
            assert sorted(len(f.edges) for f in emb.factors) == cls_sizes


class TestMinTrees:
    @pytest.mark.parametrize("g,k", [(gen.grid(3, 4), 2), (gen.cogwheel(5), 3), (gen.cycle(4), 2), (gen.star(4), 1),
                                     (gen.cogwheel(6), 2), (Graph(["a"]), 1)])
    def test_examples(self, g, k):
        assert min_trees(g).value == k

    def test_witnesses(self):
        m = min_trees(gen.cogwheel(5))
        assert m.odd_cogwheel == "h" and not m.inner_degrees_even
        assert find_induced_c4(incompatibility_graph(halfspace_system(gen.grid(3, 3)))) is not None
        assert min_trees(gen.grid(3, 3)).to_json()["min_trees"] == 2

    def test_inner_vertices(self):
        assert inner_vertices(gen.grid(3, 3)) == {"1_1"}
        assert inner_vertices(gen.cogwheel(5)) == {"h"}
        assert not inner_vertices(gen.star(3))

    @given(squaregraphs)
    def test_two_tree_equivalence(self, g):
        m = min_trees(g)
        assert m.value <= 5
        if not is_tree(g):
            assert (m.value == 2) == m.inner_degrees_even == (not odd_cogwheels(g))
        if m.induced_c4 is None:
            assert m.value <= 3
