import pytest
from hypothesis import given

from pymostar import graph, operators
from pymostar.families import complete_bipartite_graph, complete_graph, cycle_graph, empty_graph, path_graph
from pymostar.invariants import mostar
from pymostar.operators import Operation
from test.pymostar.strategies import connected_graphs, graphs

K1 = complete_graph(1)
K2 = complete_graph(2)
P3 = path_graph(3)
C3 = cycle_graph(3)


class TestCorona:

    def test_k2_k1_is_p4(self):
        g = operators.corona(K2, K1)
        assert (g.order, g.size) == (4, 3)
        assert sorted(g.degrees) == [1, 1, 2, 2]

    def test_k2_k2(self):
        g = operators.corona(K2, K2)
        assert (g.order, g.size) == (6, 7)
        # copy 1 of K2 occupies ids 4 and 5
        assert g.adjacency[1] == (0, 4, 5)

    def test_caterpillar(self):
        g = operators.corona(P3, empty_graph(2))
        assert (g.order, g.size) == (9, 8)
        assert graph.is_connected(g)

    @given(graphs(4), graphs(4))
    def test_order_size(self, g, h):
        result = operators.corona(g, h)
        assert result.order == g.order * (1 + h.order)
        assert result.size == g.size + g.order * h.size + g.order * h.order


class TestThorn:

    def test_k2(self):
        assert operators.thorn(K2, 1) == operators.corona(K2, K1)

    def test_triangle(self):
        g = operators.thorn(C3, 2)
        assert (g.order, g.size) == (9, 9)

    def test_star(self):
        assert operators.thorn(K1, 5) == complete_bipartite_graph(1, 5)

    def test_no_pendants(self):
        with pytest.raises(graph.GraphError):
            operators.thorn(K2, 0)


class TestCartesian:

    def test_grid(self):
        g = operators.cartesian(path_graph(2), P3)
        assert (g.order, g.size) == (6, 7)

    def test_square(self):
        g = operators.cartesian(K2, K2)
        assert g.regularity == 2 and g.size == 4

    def test_triangles(self):
        g = operators.cartesian(C3, C3)
        assert (g.order, g.size, g.regularity) == (9, 18, 4)

    def test_vertex_ids(self):
        # (a, b) lives at a * s2 + b
        g = operators.cartesian(K2, P3)
        assert g.has_edge(1, 4)
        assert g.has_edge(3, 4)
        assert not g.has_edge(0, 4)

    def test_fold(self):
        assert operators.cartesian_n([K2]) == K2
        assert operators.cartesian_n([K2, K2, P3]).order == 12
        assert operators.cartesian_power(K2, 3).regularity == 3

    def test_empty_fold(self):
        with pytest.raises(graph.GraphError):
            operators.cartesian_n([])
        with pytest.raises(graph.GraphError):
            operators.cartesian_power(K2, 0)

    @given(connected_graphs(4), connected_graphs(4))
    def test_commutative_invariants(self, g, h):
        gh, hg = operators.cartesian(g, h), operators.cartesian(h, g)
        assert (gh.order, gh.size) == (hg.order, hg.size)
        assert sorted(gh.degrees) == sorted(hg.degrees)
        assert mostar(gh) == mostar(hg)


class TestJoin:

    def test_star(self):
        assert operators.join(K1, empty_graph(4)) == complete_bipartite_graph(1, 4)

    def test_wheel(self):
        g = operators.join(K1, cycle_graph(5))
        assert (g.order, g.size, g.degree(0)) == (6, 10, 5)

    def test_cone(self):
        g = operators.join(C3, empty_graph(2))
        assert (g.order, g.size) == (5, 9)

    @given(graphs(5), graphs(5))
    def test_diameter_at_most_two(self, g, h):
        result = operators.join(g, h)
        assert result.size == g.size + h.size + g.order * h.order
        assert graph.all_pairs_distances(result).diameter <= 2


class TestLexicographic:

    def test_k4(self):
        assert operators.lexicographic(K2, K2) == complete_graph(4)

    def test_fence(self):
        g = operators.lexicographic(path_graph(4), K2)
        assert (g.order, g.size) == (8, 4 + 3 * 4)

    def test_blown_up_triangle(self):
        g = operators.lexicographic(C3, empty_graph(2))
        assert (g.order, g.size) == (6, 12)

    @given(graphs(4), graphs(4))
    def test_size(self, g, h):
        assert operators.lexicographic(g, h).size == g.order * h.size + g.size * h.order ** 2


class TestInduBala:

    def test_k1_k1_is_p4(self):
        g = operators.indu_bala(K1, K1)
        assert g == graph.build(4, [(0, 1), (1, 3), (2, 3)])
        assert sorted(g.degrees) == [1, 1, 2, 2]

    def test_paths(self):
        g = operators.indu_bala(P3, path_graph(2))
        assert (g.order, g.size) == (10, 20)

    def test_empty_factors(self):
        g = operators.indu_bala(K1, empty_graph(2))
        assert (g.order, g.size) == (6, 6)

    def test_matching(self):
        g = operators.indu_bala(K2, P3)
        # copy-1 h-vertex j (id 2 + j) meets copy-2 h-vertex j (id 7 + j)
        assert all(g.has_edge(2 + j, 7 + j) for j in range(3))
        assert not g.has_edge(0, 5)

    @given(graphs(4), graphs(4))
    def test_diameter_at_most_three(self, g, h):
        result = operators.indu_bala(g, h)
        assert result.size == 2 * g.size + 2 * h.size + 2 * g.order * h.order + h.order
        assert graph.all_pairs_distances(result).diameter <= 3


class TestSubdivision:

    def test_k2(self):
        assert operators.subdivision(K2) == graph.build(3, [(0, 2), (1, 2)])

    def test_triangle(self):
        g = operators.subdivision(C3)
        assert (g.order, g.size, g.regularity) == (6, 6, 2)
        assert graph.is_connected(g)

    def test_k4(self):
        g = operators.subdivision(complete_graph(4))
        assert (g.order, g.size) == (10, 12)

    def test_inserted_ids_follow_edge_order(self):
        g = operators.subdivision(P3)
        assert g.adjacency[3] == (0, 1)
        assert g.adjacency[4] == (1, 2)


class TestSveJoin:

    def test_k2_k1_k1(self):
        g = operators.sve_join(K2, K1, K1)
        assert (g.order, g.size) == (5, 5)

    def test_triangle(self):
        g = operators.sve_join(C3, K1, K1)
        assert (g.order, g.size) == (8, 12)

    def test_absent_factors(self):
        assert operators.sve_join(C3) == operators.subdivision(C3)
        g = operators.sve_join(C3, None, K1)
        assert (g.order, g.size) == (7, 9)
        assert g.adjacency[6] == (3, 4, 5)

    @given(graphs(4), graphs(3), graphs(3))
    def test_order_size(self, g1, g2, g3):
        result = operators.sve_join(g1, g2, g3)
        assert result.order == g1.order + g1.size + g2.order + g3.order
        assert result.size == 2 * g1.size + g2.size + g3.size + g1.order * g2.order + g1.size * g3.order


class TestLayoutDefinitions:
    """Each product against its definition, read through the documented id layout."""

    @given(graphs(4), graphs(3))
    def test_corona(self, g, h):
        s1, s2 = g.order, h.order
        result = operators.corona(g, h)
        for i in range(s1):
            base = s1 + i * s2
            assert all(result.has_edge(i, base + v) for v in range(s2))
            assert all(result.has_edge(base + a, base + b) for a, b in h.edges)
        assert all(result.has_edge(u, v) for u, v in g.edges)
        assert result.size == g.size + s1 * h.size + s1 * s2

    @given(graphs(4), graphs(4))
    def test_cartesian(self, g, h):
        s2 = h.order
        result = operators.cartesian(g, h)
        for x in range(result.order):
            for y in range(x + 1, result.order):
                (a, b), (c, d) = divmod(x, s2), divmod(y, s2)
                expected = (a == c and h.has_edge(b, d)) or (b == d and g.has_edge(a, c))
                assert result.has_edge(x, y) == expected

    @given(graphs(4), graphs(3))
    def test_lexicographic(self, g, h):
        s2 = h.order
        result = operators.lexicographic(g, h)
        for x in range(result.order):
            for y in range(x + 1, result.order):
                (a, b), (c, d) = divmod(x, s2), divmod(y, s2)
                expected = g.has_edge(a, c) or (a == c and h.has_edge(b, d))
                assert result.has_edge(x, y) == expected

    @given(graphs(4), graphs(4))
    def test_join(self, g, h):
        s1 = g.order
        result = operators.join(g, h)
        assert all(result.has_edge(u, s1 + v) for u in range(s1) for v in range(h.order))
        assert [(u, v) for u, v in result.edges if v < s1] == list(g.edges)
        assert [(u - s1, v - s1) for u, v in result.edges if u >= s1] == list(h.edges)

    def test_corona_p2_p2(self):
        assert operators.corona(path_graph(2), path_graph(2)).edges == \
            ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (4, 5))

    def test_cartesian_p2_p3(self):
        assert operators.cartesian(path_graph(2), P3).edges == ((0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5))


class TestLayout:

    @pytest.mark.parametrize("op, factors, build", [
        (Operation.corona, (P3, K2), operators.corona),
        (Operation.thorn, (P3, 2), operators.thorn),
        (Operation.cartesian, (P3, C3), operators.cartesian),
        (Operation.join, (C3, K2), operators.join),
        (Operation.lexicographic, (K2, P3), operators.lexicographic),
        (Operation.indu_bala, (P3, K2), operators.indu_bala),
        (Operation.subdivision, (C3,), operators.subdivision),
        (Operation.sve_join, (P3, K2, K1), operators.sve_join),
    ])
    def test_blocks_tile_result(self, op, factors, build):
        product = operators.layout(op, *factors)
        assert product.order == build(*factors).order
        assert product.blocks[0].start == 0
        for before, after in zip(product.blocks, product.blocks[1:]):
            assert before.stop == after.start

    def test_named_blocks(self):
        product = operators.layout(Operation.sve_join, C3, None, K2)
        assert [block.label for block in product.blocks] == ["primary", "inserted", "G3"]
        assert product.block("G3").start == 6
        with pytest.raises(KeyError):
            product.block("G2")

    def test_corona_copies(self):
        product = operators.layout(Operation.corona, K2, P3)
        assert product.block("H1").start == 2 + 3

    def test_thorn_takes_pendant_count(self):
        product = operators.layout(Operation.thorn, P3, 2)
        assert product.order == operators.thorn(P3, 2).order
        assert [(block.label, block.start, block.size) for block in product.blocks[:3]] == \
            [("G", 0, 3), ("H0", 3, 2), ("H1", 5, 2)]

    def test_thorn_without_pendants(self):
        with pytest.raises(graph.GraphError):
            operators.layout(Operation.thorn, P3, 0)
