import random
from time import perf_counter

import pytest
from hypothesis import given, strategies as st

from pymostar import graph, invariants
from pymostar.families import Family, FamilySpec, complete_bipartite_graph, complete_graph, cycle_graph, \
    empty_graph, generate, path_graph
from pymostar.formulas import total_irregularity_bound
from pymostar.operators import corona, join
from test.pymostar.strategies import connected_graphs, graphs


def _brute_mostar(g: graph.Graph) -> int:
    d = graph.all_pairs_distances(g)
    total = 0
    for u, v in g.edges:
        n_u = sum(1 for w in range(g.order) if d[w, u] < d[w, v])
        n_v = sum(1 for w in range(g.order) if d[w, v] < d[w, u])
        total += abs(n_u - n_v)
    return total


class TestEdgeContributions:

    def test_path_endpoint(self):
        first = invariants.edge_contributions_of(path_graph(3))[0]
        assert (first.edge, first.n_u, first.n_v, first.contribution) == ((0, 1), 1, 2, 1)

    def test_square_balanced(self):
        assert all(c.contribution == 0 for c in invariants.edge_contributions_of(cycle_graph(4)))

    def test_star_spokes(self):
        contributions = invariants.edge_contributions_of(complete_bipartite_graph(1, 3))
        assert [c.contribution for c in contributions] == [2, 2, 2]

    def test_serialize(self):
        first = invariants.edge_contributions_of(path_graph(4))[0]
        assert first.serialize() == {"u": 0, "v": 1, "n_u": 1, "n_v": 3, "contribution": 2}
        assert str(first) == "0 1 1 3 2"

    def test_edgeless(self):
        g = complete_graph(1)
        assert invariants.edge_contributions(g, graph.all_pairs_distances(g)) == []

    @given(connected_graphs())
    def test_counts_bounded(self, g):
        for c in invariants.edge_contributions_of(g):
            assert c.n_u >= 1 and c.n_v >= 1
            assert c.n_u + c.n_v <= g.order


class TestMostar:

    def test_p4(self):
        assert invariants.mostar(path_graph(4)) == 4

    def test_k33(self):
        assert invariants.mostar(complete_bipartite_graph(3, 3)) == 0

    def test_w6(self):
        assert invariants.mostar(join(complete_graph(1), cycle_graph(5))) == 10

    def test_corona_k2_k2(self):
        assert invariants.mostar(corona(complete_graph(2), complete_graph(2))) == 12

    def test_single_vertex(self):
        assert invariants.mostar(complete_graph(1)) == 0

    def test_disconnected(self):
        with pytest.raises(graph.DisconnectedError):
            invariants.mostar(empty_graph(2))

    @pytest.mark.parametrize("s", range(2, 51))
    def test_paths(self, s):
        assert invariants.mostar(path_graph(s)) == (s - 1) ** 2 // 2

    @pytest.mark.parametrize("spec", [
        *(FamilySpec(Family.cycle, (s,)) for s in range(3, 13)),
        *(FamilySpec(Family.complete, (s,)) for s in range(2, 9)),
        *(FamilySpec(Family.complete_bipartite, (s, s)) for s in range(2, 6)),
        *(FamilySpec(Family.hypercube, (k,)) for k in range(1, 7)),
        FamilySpec(Family.hamming, (2, 3)), FamilySpec(Family.hamming, (3, 4)), FamilySpec(Family.hamming, (2, 3, 3)),
    ], ids=str)
    def test_vertex_transitive(self, spec):
        assert invariants.mostar(generate(spec)) == 0

    @given(connected_graphs(), st.integers(min_value=1, max_value=5))
    def test_block_size_irrelevant(self, g, block_size):
        assert invariants.mostar(g, block_size) == invariants.mostar(g)

    @given(connected_graphs())
    def test_matches_brute_force(self, g):
        assert invariants.mostar(g) == _brute_mostar(g)
        assert invariants.mostar(g) == sum(c.contribution for c in invariants.edge_contributions_of(g))

    @given(connected_graphs(), st.randoms(use_true_random=False))
    def test_relabel_invariant(self, g, rnd: random.Random):
        permutation = list(range(g.order))
        rnd.shuffle(permutation)
        assert invariants.mostar(graph.relabel(g, permutation)) == invariants.mostar(g)

    @pytest.mark.slow
    def test_grid_100_within_budget(self):
        g = generate(FamilySpec(Family.grid, (100, 100)))
        start = perf_counter()
        assert invariants.mostar(g) == 98_000_000
        assert perf_counter() - start < 30


class TestIrregularity:

    @pytest.mark.parametrize("g", [cycle_graph(5), complete_graph(4), generate(FamilySpec(Family.hypercube, (3,)))],
                             ids=["C5", "K4", "Q3"])
    def test_regular(self, g):
        assert invariants.albertson_irregularity(g) == 0
        assert invariants.total_irregularity(g) == 0

    def test_p3(self):
        assert invariants.albertson_irregularity(path_graph(3)) == 2
        assert invariants.total_irregularity(path_graph(3)) == 2

    def test_p4(self):
        assert invariants.total_irregularity(path_graph(4)) == 4

    @pytest.mark.parametrize("s", range(1, 8))
    def test_star(self, s):
        assert invariants.albertson_irregularity(complete_bipartite_graph(1, s)) == s * (s - 1)

    def test_disconnected_allowed(self):
        g = graph.disjoint_union(path_graph(3), complete_graph(1))
        assert invariants.albertson_irregularity(g) == 2
        # degrees 1, 2, 1, 0
        assert invariants.total_irregularity(g) == 1 + 0 + 1 + 1 + 2 + 1

    @given(graphs())
    def test_total_matches_pairs(self, g):
        d = g.degrees
        expected = sum(abs(int(d[u]) - int(d[v])) for u in range(g.order) for v in range(u + 1, g.order))
        assert invariants.total_irregularity(g) == expected

    @given(graphs())
    def test_total_dominates_albertson(self, g):
        assert invariants.total_irregularity(g) >= invariants.albertson_irregularity(g)

    @given(graphs())
    def test_total_bound(self, g):
        assert invariants.total_irregularity(g) <= total_irregularity_bound(g.order).value
