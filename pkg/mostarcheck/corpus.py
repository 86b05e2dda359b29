"""Deterministic graph corpus for the verify harness.

Random graphs come from a xorshift64* stream seeded per order through
splitmix64, so a corpus reproduces across runs and implementations. The
constants are listed in README.md.
"""
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from logging import getLogger

from frozendict import frozendict

from mostarcheck import MostarCheckError
from pymostar.families import Family, FamilySpec, family_order, generate, parse_spec
from pymostar.graph import Graph, GraphError, build, is_connected

_log = getLogger(__name__)

_MASK = (1 << 64) - 1
SPLITMIX_INCREMENT = 0x9E3779B97F4A7C15
SPLITMIX_MIX1 = 0xBF58476D1CE4E5B9
SPLITMIX_MIX2 = 0x94D049BB133111EB
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D
RANDOM_PREFIX = "er"

# fixed operand sets every corpus carries, whatever its max_n
CARTESIAN_NAMED = ("path(2)", "path(3)", "path(4)", "path(5)", "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)",
                   "complete(2)", "complete(3)", "complete(4)", "star(4)")
CARTESIAN_RANDOM_MAX_N = 6
CARTESIAN_RANDOM_PER_ORDER = 4
REGULAR_JOIN_NAMED = ("cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "complete(2)", "complete(3)", "complete(4)",
                      "complete(5)", "empty(1)", "empty(2)", "empty(3)", "empty(4)", "hypercube(3)")
PARTNER_NAMED = ("complete(1)", "complete(2)", "path(3)", "cycle(3)", "empty(2)")
SVE_PARTNER_NAMED = ("complete(1)", "complete(2)")


def splitmix64(x: int) -> int:
    z = (x + SPLITMIX_INCREMENT) & _MASK
    z = ((z ^ (z >> 30)) * SPLITMIX_MIX1) & _MASK
    z = ((z ^ (z >> 27)) * SPLITMIX_MIX2) & _MASK
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        # an all-zero state is a fixed point of the shifts
        self.state = (seed & _MASK) or SPLITMIX_INCREMENT

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & _MASK

    def next_unit(self) -> float:
        """Uniform draw in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53


def order_stream(seed: int, n: int) -> XorShift64Star:
    return XorShift64Star(splitmix64((seed ^ n) & _MASK))


def random_connected_graph(rng: XorShift64Star, n: int, p: float) -> Graph:
    """Draw G(n, p) over the pairs u < v in lexicographic order until one is connected."""
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.next_unit() < p]
        g = build(n, edges)
        if is_connected(g):
            return g


def random_name(n: int, index: int) -> str:
    return f"{RANDOM_PREFIX}({n},{index})"


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    family: Family | None
    graph: Graph = field(compare=False)

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def is_random(self) -> bool:
        return self.family is None

    def __str__(self) -> str:
        return f"{self.name}: {self.graph}"


def family_params(family: Family, max_n: int) -> Iterator[tuple[int, ...]]:
    """Parameter bindings of `family` whose graph has at most `max_n` vertices, ascending."""
    n = max_n
    match family:
        case Family.path | Family.complete | Family.empty:
            yield from ((s,) for s in range(1, n + 1))
        case Family.cycle:
            yield from ((s,) for s in range(3, n + 1))
        case Family.complete_bipartite:
            yield from ((r, s) for r in range(1, n + 1) for s in range(r, n + 1 - r))
        case Family.star | Family.fan:
            yield from ((s,) for s in range(1, n))
        case Family.wheel:
            yield from ((s,) for s in range(3, n))
        case Family.hypercube:
            yield from ((k,) for k in range(1, n.bit_length()) if 2 ** k <= n)
        case Family.hamming:
            for length in (2, 3):
                for sizes in combinations_with_replacement(range(2, n + 1), length):
                    if family_order(FamilySpec(family, sizes)) <= n:
                        yield sizes
        case Family.grid:
            yield from ((a, b) for a in range(2, n + 1) for b in range(a, n + 1) if a * b <= n)
        case Family.ladder:
            yield from ((a,) for a in range(1, n) if 2 * a + 2 <= n)
        case Family.friendship:
            yield from ((g,) for g in range(1, n) if 2 * g + 1 <= n)
        case Family.cone:
            yield from ((f, g) for f in range(3, n + 1) for g in range(1, n + 1 - f))
        case Family.bridge_path:
            yield from ((k,) for k in range(1, n + 1) if 3 * k <= n)
        case Family.bridge_cycle:
            yield from ((k, c) for k in range(1, n + 1) for c in range(3, n + 1) if k * c <= n)


@dataclass(frozen=True)
class Corpus:
    max_n: int
    seed: int
    random_per_order: int
    edge_probability: float
    pair_max_n: int
    pair_random_per_order: int
    triple_max_n: int
    graphs: tuple[CorpusGraph, ...] = field(repr=False)

    @cached_property
    def by_name(self) -> frozendict[str, CorpusGraph]:
        return frozendict({entry.name: entry for entry in self.graphs})

    def family_graphs(self, *families: Family) -> list[CorpusGraph]:
        return [entry for entry in self.graphs if entry.family in families]

    def resolve(self, name: str) -> Graph:
        """Corpus name first, then a family name like "cycle(5)"."""
        if name in self.by_name:
            return self.by_name[name].graph
        try:
            return generate(parse_spec(name))
        except GraphError as err:
            raise MostarCheckError(f"cannot resolve graph {name!r}: {err}") from err

    @cached_property
    def pair_pool(self) -> tuple[CorpusGraph, ...]:
        limit = min(self.pair_max_n, self.max_n)
        return distinct_entries(entry for entry in self.graphs if entry.order <= limit and (
            not entry.is_random or _random_index(entry.name) < self.pair_random_per_order))

    @cached_property
    def triple_pool(self) -> tuple[CorpusGraph, ...]:
        limit = min(self.triple_max_n, self.max_n)
        return distinct_entries(entry for entry in self.graphs if entry.order <= limit and not entry.is_random)

    def named(self, names: Iterable[str]) -> tuple[CorpusGraph, ...]:
        """Corpus entries by family name; members beyond max_n are generated on demand."""
        entries = []
        for name in names:
            if name in self.by_name:
                entries.append(self.by_name[name])
                continue
            spec = parse_spec(name)
            entries.append(CorpusGraph(spec.name, spec.family, generate(spec)))
        return distinct_entries(entries)

    @cached_property
    def cartesian_pool(self) -> tuple[CorpusGraph, ...]:
        """Named small factors and the first random draws of every order up to CARTESIAN_RANDOM_MAX_N."""
        randoms = [entry for entry in self.graphs if entry.is_random and entry.order <= CARTESIAN_RANDOM_MAX_N
                   and _random_index(entry.name) < CARTESIAN_RANDOM_PER_ORDER]
        return distinct_entries(list(self.named(CARTESIAN_NAMED)) + randoms)

    @cached_property
    def regular_pool(self) -> tuple[CorpusGraph, ...]:
        return self.named(REGULAR_JOIN_NAMED)

    @cached_property
    def partner_pool(self) -> tuple[CorpusGraph, ...]:
        return self.named(PARTNER_NAMED)

    @cached_property
    def sve_partner_pool(self) -> tuple[CorpusGraph, ...]:
        return self.named(SVE_PARTNER_NAMED)

    def serialize(self) -> dict:
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "random_per_order": self.random_per_order,
            "edge_probability": self.edge_probability,
            "pair_max_n": self.pair_max_n,
            "pair_random_per_order": self.pair_random_per_order,
            "triple_max_n": self.triple_max_n,
            "graphs": len(self.graphs),
        }

    def __str__(self) -> str:
        return f"corpus (max_n {self.max_n}, seed {self.seed}, {len(self.graphs)} graphs)"


def _random_index(name: str) -> int:
    return int(name[len(RANDOM_PREFIX) + 1:-1].split(",")[1])


def distinct_entries(entries: Iterable[CorpusGraph]) -> tuple[CorpusGraph, ...]:
    # labelled duplicates such as path(2) and complete(2) keep their first name
    seen: set[Graph] = set()
    kept = []
    for entry in entries:
        if entry.graph not in seen:
            seen.add(entry.graph)
            kept.append(entry)
    return tuple(kept)


def corpus(max_n: int, seed: int, random_per_order: int = 20, edge_probability: float = 0.5, pair_max_n: int = 5,
           pair_random_per_order: int = 3, triple_max_n: int = 3) -> Corpus:
    _log.debug(f"build corpus: max_n {max_n}, seed {seed}, {random_per_order} random graphs per order")
    if max_n < 2:
        raise MostarCheckError(f"the corpus needs max_n >= 2, got {max_n}")
    entries: list[CorpusGraph] = []
    for family in Family:
        for params in family_params(family, max_n):
            spec = FamilySpec(family, params)
            entries.append(CorpusGraph(spec.name, family, generate(spec)))
    for n in range(2, max_n + 1):
        rng = order_stream(seed, n)
        for index in range(random_per_order):
            entries.append(CorpusGraph(random_name(n, index), None, random_connected_graph(rng, n, edge_probability)))
    return Corpus(max_n, seed, random_per_order, edge_probability, pair_max_n, pair_random_per_order, triple_max_n,
                  tuple(entries))
