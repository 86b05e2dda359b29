import pytest

from mostarcheck import MostarCheckError
from mostarcheck import corpus as corpus_module
from mostarcheck.corpus import XorShift64Star, corpus, order_stream, random_connected_graph, splitmix64
from pymostar.families import Family, cycle_graph
from pymostar.graph import is_connected


class TestGenerator:

    def test_splitmix_reference(self):
        assert splitmix64(0) == 0xE220A8397B1DCDAF

    def test_xorshift_step(self):
        rng = XorShift64Star(1)
        value = rng.next_u64()
        assert rng.state == 0x2000001
        assert value == (0x2000001 * corpus_module.XORSHIFT_MULTIPLIER) & ((1 << 64) - 1)

    def test_zero_seed(self):
        assert XorShift64Star(0).state != 0

    def test_unit_interval(self):
        rng = order_stream(42, 5)
        draws = [rng.next_unit() for _ in range(1000)]
        assert all(0.0 <= x < 1.0 for x in draws)
        assert 0.4 < sum(draws) / len(draws) < 0.6

    def test_streams_per_order(self):
        assert order_stream(42, 5).next_u64() == order_stream(42, 5).next_u64()
        assert order_stream(42, 5).next_u64() != order_stream(42, 6).next_u64()

    def test_random_graphs_connected(self):
        rng = order_stream(3, 7)
        assert all(is_connected(random_connected_graph(rng, 7, 0.3)) for _ in range(10))

    def test_certain_edges(self):
        g = random_connected_graph(order_stream(1, 4), 4, 1.0)
        assert g.size == 6


class TestCorpus:

    def test_small(self):
        c = corpus(2, 7)
        assert not c.family_graphs(Family.cycle)
        assert "path(2)" in c.by_name
        assert all(entry.order <= 2 for entry in c.graphs)

    def test_families_max_4(self):
        c = corpus(4, 42, random_per_order=2)
        names = set(c.by_name)
        assert {"path(4)", "cycle(4)", "complete_bipartite(2,2)", "wheel(3)", "hypercube(2)", "hamming(2,2)",
                "grid(2,2)", "ladder(1)", "friendship(1)", "cone(3,1)", "bridge_cycle(1,4)"} <= names
        assert "hypercube(3)" not in names
        assert "wheel(4)" not in names
        assert [entry.name for entry in c.graphs if entry.is_random] == \
            [f"er({n},{i})" for n in range(2, 5) for i in range(2)]

    def test_deterministic(self):
        first, second = corpus(6, 42, random_per_order=5), corpus(6, 42, random_per_order=5)
        assert [entry.name for entry in first.graphs] == [entry.name for entry in second.graphs]
        assert [entry.graph for entry in first.graphs] == [entry.graph for entry in second.graphs]

    def test_seed_changes_random_graphs(self):
        first, second = corpus(6, 1, random_per_order=5), corpus(6, 2, random_per_order=5)
        assert [e.graph for e in first.graphs if e.is_random] != [e.graph for e in second.graphs if e.is_random]

    def test_too_small(self):
        with pytest.raises(MostarCheckError):
            corpus(1, 42)

    def test_pair_pool(self):
        c = corpus(5, 42, random_per_order=4, pair_max_n=3, pair_random_per_order=1)
        pool = c.pair_pool
        assert all(entry.order <= 3 for entry in pool)
        assert len({entry.graph for entry in pool}) == len(pool)
        # K2 first appears as path(2)
        assert "path(2)" in {entry.name for entry in pool}
        assert "complete(2)" not in {entry.name for entry in pool}
        assert all(not entry.is_random or entry.name.endswith(",0)") for entry in pool)

    def test_triple_pool(self):
        c = corpus(5, 42, triple_max_n=2)
        assert [entry.name for entry in c.triple_pool] == ["path(1)", "path(2)", "empty(2)"]

    def test_cartesian_pool(self):
        c = corpus(4, 42, random_per_order=6)
        names = [entry.name for entry in c.cartesian_pool]
        assert {"cycle(6)", "star(4)", "path(5)", "complete(4)"} <= set(names)
        # K2 and K3 already appear as path(2) and cycle(3)
        assert "complete(2)" not in names and "complete(3)" not in names
        randoms = [entry for entry in c.cartesian_pool if entry.is_random]
        assert randoms and all(entry.order <= 4 and int(entry.name[:-1].split(",")[1]) < 4 for entry in randoms)

    def test_regular_pool(self):
        pool = corpus(4, 42, random_per_order=1).regular_pool
        assert {"hypercube(3)", "empty(4)", "complete(5)", "cycle(6)"} <= {entry.name for entry in pool}
        assert all(entry.graph.regularity is not None for entry in pool)

    def test_partner_pools(self):
        c = corpus(3, 42, random_per_order=1)
        assert [entry.name for entry in c.partner_pool] == list(corpus_module.PARTNER_NAMED)
        assert [entry.name for entry in c.sve_partner_pool] == ["complete(1)", "complete(2)"]

    def test_named_beyond_max_n(self):
        c = corpus(3, 42, random_per_order=1)
        (entry,) = c.named(["cycle(7)"])
        assert (entry.name, entry.family, entry.graph) == ("cycle(7)", Family.cycle, cycle_graph(7))
        assert c.named(["path(2)"])[0] is c.by_name["path(2)"]

    def test_resolve(self):
        c = corpus(4, 42, random_per_order=1)
        assert c.resolve("er(3,0)") == c.by_name["er(3,0)"].graph
        assert c.resolve("cycle(7)") == cycle_graph(7)
        with pytest.raises(MostarCheckError):
            c.resolve("tree(3)")
        with pytest.raises(MostarCheckError):
            c.resolve("cycle(2)")

    def test_serialize(self):
        c = corpus(3, 5, random_per_order=1)
        data = c.serialize()
        assert (data["max_n"], data["seed"], data["graphs"]) == (3, 5, len(c.graphs))
        assert str(c) == f"corpus (max_n 3, seed 5, {len(c.graphs)} graphs)"
