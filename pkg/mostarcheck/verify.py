"""Claim checks: every registered formula against the Mostar oracle.

Each claim has one registered check made of a parameter enumerator over the
corpus and a binder that turns a single parameter binding into the graph
under test plus the formula value.
"""
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from logging import getLogger

from frozendict import frozendict

from mostarcheck import MostarCheckError
from mostarcheck.corpus import Corpus, CorpusGraph, distinct_entries
from mostarcheck.info import ClaimOutcome, Status, VerificationReport, classify, tally
from pymostar import formulas, operators
from pymostar.families import Family, FamilySpec, complete_graph, copies, cycle_graph, generate, path_graph
from pymostar.formulas import CLAIMS, Claim, FactorStats, FormulaError, FormulaValue, Suite, factor_stats, get_claim, \
    UnknownClaimError
from pymostar.graph import DEFAULT_BLOCK_SIZE, DisconnectedError, Graph, GraphError
from pymostar.invariants import mostar, total_irregularity

_log = getLogger(__name__)

DISCONNECTED = "disconnected"

# sweeps that reach past max_n; their graphs are cheap
BASIC_FAMILY_MIN_SWEEP = frozendict({
    formulas.BasicFamily.path: 50,
    formulas.BasicFamily.cycle: 12,
    formulas.BasicFamily.complete: 8,
    formulas.BasicFamily.balanced_bipartite: 5,
})
LADDER_MIN_SWEEP = 10
HYPERCUBE_MIN_SWEEP = 6


class Oracle:
    """Memoized Mostar index and factor statistics, keyed by graph."""

    def __init__(self, block_size: int = DEFAULT_BLOCK_SIZE):
        self.block_size = block_size
        self._mostar: dict[Graph, int] = {}
        self._stats: dict[Graph, FactorStats] = {}

    def mostar(self, g: Graph) -> int:
        if g not in self._mostar:
            self._mostar[g] = mostar(g, self.block_size)
        return self._mostar[g]

    def stats(self, g: Graph) -> FactorStats:
        if g not in self._stats:
            self._stats[g] = factor_stats(g, self.block_size)
        return self._stats[g]


@dataclass
class Context:
    corpus: Corpus
    oracle: Oracle = field(default_factory=Oracle)

    def graph(self, name: str) -> Graph:
        return self.corpus.resolve(name)

    def stats(self, name: str) -> FactorStats:
        return self.oracle.stats(self.graph(name))


@dataclass(frozen=True)
class Binding:
    subject: Graph
    formula: FormulaValue
    # the index the formula speaks about, the Mostar index unless given
    measure: Callable[[Graph], int] | None = None


Params = dict
Enumerator = Callable[[Context], Iterable[Params]]
Binder = Callable[[Context, Params], Binding]


@dataclass(frozen=True)
class Check:
    claim_id: str
    enumerate: Enumerator
    bind: Binder


_CHECKS: dict[str, Check] = {}


def _check(claim_id: str, enumerator: Enumerator):
    def register(binder: Binder) -> Binder:
        if claim_id not in CLAIMS:
            raise UnknownClaimError(claim_id)
        _CHECKS[claim_id] = Check(claim_id, enumerator, binder)
        return binder
    return register


# --- parameter enumerators ---

def _names(entries: Iterable[CorpusGraph]) -> list[str]:
    return [entry.name for entry in entries]


def _corpus_graphs(ctx: Context) -> Iterator[Params]:
    yield from ({"G": name} for name in _names(ctx.corpus.graphs))


def _regular_graphs(ctx: Context) -> Iterator[Params]:
    yield from ({"G": entry.name} for entry in ctx.corpus.graphs if entry.graph.regularity is not None)


def _pool_graphs(ctx: Context) -> Iterator[Params]:
    yield from ({"G": name} for name in _names(ctx.corpus.pair_pool))


def _pairs_of(pool: list[str]) -> Iterator[Params]:
    yield from ({"G": g, "H": h} for g in pool for h in pool)


def _pairs(ctx: Context) -> Iterator[Params]:
    yield from _pairs_of(_names(ctx.corpus.pair_pool))


def _cartesian_pairs(ctx: Context) -> Iterator[Params]:
    yield from _pairs_of(_names(distinct_entries(ctx.corpus.pair_pool + ctx.corpus.cartesian_pool)))


def _full_pairs(ctx: Context) -> Iterator[Params]:
    """Pool pairs, then every corpus graph against each partner on either side."""
    seen: set[tuple[str, str]] = set()
    partners = _names(ctx.corpus.partner_pool)
    every = _names(ctx.corpus.graphs)
    candidates = [(p["G"], p["H"]) for p in _pairs(ctx)]
    candidates += [(g, h) for g in every for h in partners] + [(g, h) for g in partners for h in every]
    for pair in candidates:
        if pair not in seen:
            seen.add(pair)
            yield {"G": pair[0], "H": pair[1]}


def _regular_pairs(ctx: Context) -> Iterator[Params]:
    pool = [entry.name for entry in distinct_entries(ctx.corpus.pair_pool + ctx.corpus.regular_pool)
            if entry.graph.regularity is not None]
    yield from _pairs_of(pool)


def _triples(ctx: Context) -> Iterator[Params]:
    pool = _names(ctx.corpus.triple_pool)
    yield from ({"G1": a, "G2": b, "G3": c} for a in pool for b in pool for c in pool)


def _full_triples(ctx: Context) -> Iterator[Params]:
    """Pool triples, then every corpus graph subdivided and joined to the small partners."""
    seen: set[tuple[str, str, str]] = set()
    partners = _names(ctx.corpus.sve_partner_pool)
    candidates = [(p["G1"], p["G2"], p["G3"]) for p in _triples(ctx)]
    candidates += [(g, a, b) for g in _names(ctx.corpus.graphs) for a in partners for b in partners]
    for triple in candidates:
        if triple not in seen:
            seen.add(triple)
            yield {"G1": triple[0], "G2": triple[1], "G3": triple[2]}


def _span(start: int, stop: int) -> range:
    """start..stop inclusive, never empty."""
    return range(start, max(start, stop) + 1)


def _one(name: str, start: int, least_stop: int = 0) -> Enumerator:
    """start..max(max_n, least_stop) under `name`."""
    def enumerate_one(ctx: Context) -> Iterator[Params]:
        yield from ({name: value} for value in _span(start, max(ctx.corpus.max_n, least_stop)))
    return enumerate_one


def _two(first: str, first_start: int, second: str, second_start: int) -> Enumerator:
    def enumerate_two(ctx: Context) -> Iterator[Params]:
        n = ctx.corpus.max_n
        yield from ({first: a, second: b} for a in _span(first_start, n) for b in _span(second_start, n))
    return enumerate_two


# --- general facts ---

def _basic_family_params(ctx: Context) -> Iterator[Params]:
    for family in formulas.BasicFamily:
        start = 3 if family == formulas.BasicFamily.cycle else 1
        stop = max(ctx.corpus.max_n, BASIC_FAMILY_MIN_SWEEP[family])
        yield from ({"family": family.value, "s": s} for s in _span(start, stop))


@_check("prop.families", _basic_family_params)
def _basic_family(ctx: Context, p: Params) -> Binding:
    family = formulas.BasicFamily(p["family"])
    s = p["s"]
    match family:
        case formulas.BasicFamily.complete:
            subject = complete_graph(s)
        case formulas.BasicFamily.cycle:
            subject = cycle_graph(s)
        case formulas.BasicFamily.balanced_bipartite:
            subject = generate(FamilySpec(Family.complete_bipartite, (s, s)))
        case _:
            subject = path_graph(s)
    return Binding(subject, formulas.basic_family(family, s))


@_check("prop.irr_t.bound", _corpus_graphs)
def _irr_t_bound(ctx: Context, p: Params) -> Binding:
    g = ctx.graph(p["G"])
    return Binding(g, formulas.total_irregularity_bound(g.order), total_irregularity)


_VERTEX_TRANSITIVE = (Family.complete, Family.cycle, Family.hypercube, Family.hamming)


def _vertex_transitive_graphs(ctx: Context) -> Iterator[Params]:
    for entry in ctx.corpus.graphs:
        balanced = entry.family == Family.complete_bipartite and entry.order % 2 == 0 \
            and entry.graph.regularity is not None
        if entry.family in _VERTEX_TRANSITIVE or balanced:
            yield {"G": entry.name}


@_check("fact.vertex_transitive", _vertex_transitive_graphs)
def _vertex_transitive(ctx: Context, p: Params) -> Binding:
    g = ctx.graph(p["G"])
    return Binding(g, formulas.vertex_transitive(g))


# --- corona ---

@_check("thm.corona.bound", _full_pairs)
def _corona_bound(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.corona(g, h), formulas.corona_bound(ctx.stats(p["G"]), ctx.stats(p["H"])))


@_check("derived.corona.exact", _full_pairs)
def _corona_exact(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.corona(g, h), formulas.corona_exact(ctx.stats(p["G"]), ctx.stats(p["H"])))


def _thorn_params(ctx: Context) -> Iterator[Params]:
    for params in _corpus_graphs(ctx):
        yield from ({**params, "m": m} for m in range(1, 4))


@_check("cor.thorn.bound", _thorn_params)
def _thorn_bound(ctx: Context, p: Params) -> Binding:
    return Binding(operators.thorn(ctx.graph(p["G"]), p["m"]), formulas.thorn_bound(ctx.stats(p["G"]), p["m"]))


@_check("ex.bottleneck", _pool_graphs)
def _bottleneck(ctx: Context, p: Params) -> Binding:
    return Binding(operators.corona(complete_graph(2), ctx.graph(p["G"])), formulas.bottleneck(ctx.stats(p["G"])))


@_check("ex.bridge.path", _one("k", 1))
def _bridge_path(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.bridge_path, (p["k"],)))
    return Binding(subject, formulas.bridge(formulas.BridgeKind.path, p["k"]))


@_check("ex.bridge.triangle", _one("k", 1))
def _bridge_triangle(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.bridge_cycle, (p["k"], 3)))
    return Binding(subject, formulas.bridge(formulas.BridgeKind.triangle, p["k"]))


def _bridge_wheel_params(ctx: Context) -> Iterator[Params]:
    n = ctx.corpus.max_n
    yield from ({"j": j, "k": k} for j in _span(1, n // 2) for k in _span(3, n - 2))


@_check("ex.bridge.wheel", _bridge_wheel_params)
def _bridge_wheel(ctx: Context, p: Params) -> Binding:
    subject = operators.corona(path_graph(p["j"]), cycle_graph(p["k"]))
    return Binding(subject, formulas.bridge(formulas.BridgeKind.wheel, p["j"], p["k"]))


# --- cartesian ---

def _factor_lists(ctx: Context) -> Iterator[Params]:
    yield from ({"factors": (params["G"], params["H"])} for params in _cartesian_pairs(ctx))
    yield from ({"factors": (params["G1"], params["G2"], params["G3"])} for params in _triples(ctx))


@_check("thm.cartesian", _factor_lists)
def _cartesian(ctx: Context, p: Params) -> Binding:
    names = list(p["factors"])
    subject = operators.cartesian_n([ctx.graph(name) for name in names])
    return Binding(subject, formulas.cartesian_exact([ctx.stats(name) for name in names]))


def _power_params(ctx: Context) -> Iterator[Params]:
    bases = [entry.name for entry in ctx.corpus.pair_pool if not entry.is_random and entry.order <= 4]
    yield from ({"G": name, "k": k} for name in bases for k in range(1, 4))


@_check("cor.cartesian.power", _power_params)
def _cartesian_power(ctx: Context, p: Params) -> Binding:
    subject = operators.cartesian_power(ctx.graph(p["G"]), p["k"])
    return Binding(subject, formulas.cartesian_power(ctx.stats(p["G"]), p["k"]))


@_check("ex.nanotorus", _two("a", 3, "b", 3))
def _nanotorus(ctx: Context, p: Params) -> Binding:
    subject = operators.cartesian(cycle_graph(p["a"]), cycle_graph(p["b"]))
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.nanotorus, p["a"], p["b"]))


@_check("ex.nanotube", _two("a", 1, "b", 3))
def _nanotube(ctx: Context, p: Params) -> Binding:
    subject = operators.cartesian(path_graph(p["a"]), cycle_graph(p["b"]))
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.nanotube, p["a"], p["b"]))


@_check("ex.grid", _two("a", 1, "b", 1))
def _grid(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.grid, (p["a"], p["b"])))
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.grid, p["a"], p["b"]))


@_check("ex.ladder", _one("a", 1, LADDER_MIN_SWEEP))
def _ladder(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.ladder, (p["a"],)))
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.ladder, p["a"]))


def _hamming_params(ctx: Context) -> Iterator[Params]:
    n = ctx.corpus.max_n
    for first in _span(2, n):
        yield {"sizes": (first,)}
        for second in range(first, n + 1):
            if first * second <= 4 * n:
                yield {"sizes": (first, second)}
            for third in range(second, n + 1):
                if first * second * third <= 4 * n:
                    yield {"sizes": (first, second, third)}


@_check("ex.hamming", _hamming_params)
def _hamming(ctx: Context, p: Params) -> Binding:
    sizes = tuple(p["sizes"])
    subject = operators.cartesian_n([complete_graph(s) for s in sizes])
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.hamming, *sizes))


@_check("ex.hypercube", _one("k", 1, HYPERCUBE_MIN_SWEEP))
def _hypercube(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.hypercube, (p["k"],)))
    return Binding(subject, formulas.cartesian_family(formulas.CartesianFamily.hypercube, p["k"]))


# --- join ---

@_check("thm.join.bound", _full_pairs)
def _join_bound(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.join(g, h), formulas.join_bound(ctx.stats(p["G"]), ctx.stats(p["H"])))


@_check("derived.join.exact", _full_pairs)
def _join_exact(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.join(g, h), formulas.join_exact(g, h))


@_check("cor.join.regular", _regular_pairs)
def _join_regular(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    if g.regularity is None or h.regularity is None:
        raise FormulaError("both factors must be regular")
    return Binding(operators.join(g, h), formulas.join_regular(g.order, g.regularity, h.order, h.regularity))


@_check("ex.cone", _two("f", 3, "g", 1))
def _cone(ctx: Context, p: Params) -> Binding:
    subject = generate(FamilySpec(Family.cone, (p["f"], p["g"])))
    return Binding(subject, formulas.cone_claimed(p["f"], p["g"]))


@_check("ex.suspension.bound", _corpus_graphs)
def _suspension_bound(ctx: Context, p: Params) -> Binding:
    return Binding(operators.join(complete_graph(1), ctx.graph(p["G"])), formulas.suspension_bound(ctx.stats(p["G"])))


@_check("ex.suspension.regular", _regular_graphs)
def _suspension_regular(ctx: Context, p: Params) -> Binding:
    g = ctx.graph(p["G"])
    if g.regularity is None:
        raise FormulaError(f"{p['G']} is not regular")
    return Binding(operators.join(complete_graph(1), g), formulas.suspension_regular(g.order, g.regularity))


@_check("ex.star", _one("s", 1))
def _star(ctx: Context, p: Params) -> Binding:
    return Binding(generate(FamilySpec(Family.star, (p["s"],))), formulas.star(p["s"]))


@_check("ex.wheel", _one("s", 3))
def _wheel(ctx: Context, p: Params) -> Binding:
    return Binding(generate(FamilySpec(Family.wheel, (p["s"],))), formulas.wheel(p["s"]))


@_check("ex.fan.bound", _one("s", 1))
def _fan_bound(ctx: Context, p: Params) -> Binding:
    return Binding(generate(FamilySpec(Family.fan, (p["s"],))), formulas.fan_bound(p["s"]))


@_check("ex.flower.bound", _one("g", 1))
def _flower_bound(ctx: Context, p: Params) -> Binding:
    subject = operators.join(complete_graph(1), copies(complete_graph(2), p["g"]))
    return Binding(subject, formulas.flower_bound(p["g"]))


# --- lexicographic ---

@_check("thm.lex.bound", _full_pairs)
def _lex_bound(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.lexicographic(g, h), formulas.lex_bound(ctx.stats(p["G"]), ctx.stats(p["H"])))


@_check("derived.lex.exact", _full_pairs)
def _lex_exact(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.lexicographic(g, h), formulas.lex_exact(g, h))


@_check("ex.fence.closed", _one("g", 3))
def _fence_closed(ctx: Context, p: Params) -> Binding:
    return Binding(operators.lexicographic(cycle_graph(p["g"]), path_graph(2)), formulas.fence_closed(p["g"]))


@_check("ex.fence.bound", _one("g", 1))
def _fence_bound(ctx: Context, p: Params) -> Binding:
    return Binding(operators.lexicographic(path_graph(p["g"]), path_graph(2)), formulas.fence_bound(p["g"]))


@_check("ex.lex.paths.bound", _two("g", 1, "h", 1))
def _lex_paths_bound(ctx: Context, p: Params) -> Binding:
    subject = operators.lexicographic(path_graph(p["g"]), path_graph(p["h"]))
    return Binding(subject, formulas.lex_paths_bound(p["g"], p["h"]))


# --- Indu-Bala ---

@_check("thm.indu_bala.bound", _full_pairs)
def _indu_bala_bound(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.indu_bala(g, h), formulas.indu_bala_bound(ctx.stats(p["G"]), ctx.stats(p["H"])))


@_check("derived.indu_bala.exact", _full_pairs)
def _indu_bala_exact(ctx: Context, p: Params) -> Binding:
    g, h = ctx.graph(p["G"]), ctx.graph(p["H"])
    return Binding(operators.indu_bala(g, h), formulas.indu_bala_exact(g, h))


@_check("ex.indu_bala.paths", _two("g", 1, "h", 1))
def _indu_bala_paths(ctx: Context, p: Params) -> Binding:
    subject = operators.indu_bala(path_graph(p["g"]), path_graph(p["h"]))
    return Binding(subject, formulas.indu_bala_example(formulas.InduBalaKind.paths, p["g"], p["h"]))


@_check("ex.indu_bala.path_cycle", _two("g", 1, "h", 3))
def _indu_bala_path_cycle(ctx: Context, p: Params) -> Binding:
    subject = operators.indu_bala(path_graph(p["g"]), cycle_graph(p["h"]))
    return Binding(subject, formulas.indu_bala_example(formulas.InduBalaKind.path_cycle, p["g"], p["h"]))


@_check("ex.indu_bala.cycle_path", _two("g", 3, "h", 1))
def _indu_bala_cycle_path(ctx: Context, p: Params) -> Binding:
    subject = operators.indu_bala(cycle_graph(p["g"]), path_graph(p["h"]))
    return Binding(subject, formulas.indu_bala_example(formulas.InduBalaKind.cycle_path, p["g"], p["h"]))


# --- subdivision vertex-edge join ---

@_check("thm.sve.bound", _full_triples)
def _sve_bound(ctx: Context, p: Params) -> Binding:
    names = (p["G1"], p["G2"], p["G3"])
    subject = operators.sve_join(*(ctx.graph(name) for name in names))
    return Binding(subject, formulas.sve_bound(*(ctx.stats(name) for name in names)))


@_check("derived.sve.exact", _full_triples)
def _sve_exact(ctx: Context, p: Params) -> Binding:
    graphs = [ctx.graph(name) for name in (p["G1"], p["G2"], p["G3"])]
    return Binding(operators.sve_join(*graphs), formulas.sve_exact(*graphs))


# --- running ---

def _freeze(params: Params) -> frozendict:
    return frozendict({key: tuple(value) if isinstance(value, list) else value for key, value in params.items()})


def _outcome(ctx: Context, claim: Claim, params: Params) -> ClaimOutcome:
    frozen = _freeze(params)
    try:
        binding = _CHECKS[claim.claim_id].bind(ctx, frozen)
        oracle = ctx.oracle.mostar(binding.subject) if binding.measure is None else binding.measure(binding.subject)
    except DisconnectedError:
        return ClaimOutcome(claim.claim_id, frozen, None, None, claim.kind, Status.skipped, DISCONNECTED)
    except FormulaError as err:
        return ClaimOutcome(claim.claim_id, frozen, None, None, claim.kind, Status.skipped, str(err))
    except KeyError as err:
        raise MostarCheckError(f"{claim.claim_id}: missing parameter {err}") from err
    except GraphError as err:
        raise MostarCheckError(f"{claim.claim_id}: {err}") from err
    formula = binding.formula.value
    return ClaimOutcome(claim.claim_id, frozen, oracle, formula, claim.kind, classify(claim.kind, oracle, formula))


def _sorted(outcomes: Iterable[ClaimOutcome]) -> list[ClaimOutcome]:
    return sorted(outcomes, key=lambda outcome: outcome.sort_key)


def check_claim(claim_id: str, corpus: Corpus, params: Params | None = None,
                oracle: Oracle | None = None) -> list[ClaimOutcome]:
    _log.debug(f"check claim: {claim_id} ({params if params is not None else 'all bindings'})")
    try:
        claim = get_claim(claim_id)
    except UnknownClaimError as err:
        raise MostarCheckError(str(err)) from err
    ctx = Context(corpus, oracle if oracle is not None else Oracle())
    bindings = [params] if params is not None else _CHECKS[claim_id].enumerate(ctx)
    outcomes = _sorted(_outcome(ctx, claim, binding) for binding in bindings)
    if not outcomes:
        outcomes = [ClaimOutcome(claim_id, frozendict(), None, None, claim.kind, Status.skipped, "no operands")]
    return outcomes


ALL_SUITES = "all"
SUITE_CHOICES = tuple(suite.value for suite in Suite) + (ALL_SUITES,)


def suite_claims(suite: str) -> list[Claim]:
    if suite not in SUITE_CHOICES:
        raise MostarCheckError(f"unknown suite: {suite!r} (choose from {', '.join(SUITE_CHOICES)})")
    return [claim for claim in CLAIMS.values() if suite == ALL_SUITES or claim.suite.value == suite]


def run_suite(suite: str, corpus: Corpus, block_size: int = DEFAULT_BLOCK_SIZE) -> VerificationReport:
    _log.debug(f"run suite: {suite} over {corpus}")
    claims = suite_claims(suite)
    oracle = Oracle(block_size)
    outcomes: list[ClaimOutcome] = []
    summary = {}
    for claim in claims:
        claim_outcomes = check_claim(claim.claim_id, corpus, oracle=oracle)
        outcomes += claim_outcomes
        summary[claim.claim_id] = tally(claim_outcomes)
    report = VerificationReport(frozendict(corpus.serialize()), tuple(_sorted(outcomes)), frozendict(sorted(summary.items())))
    totals = tally(list(report.outcomes))
    _log.info(f"suite {suite}: {len(claims)} claims, {len(report.outcomes)} outcomes ({totals})")
    return report


def gate_violations(report: VerificationReport) -> list[ClaimOutcome]:
    return [outcome for outcome in report.violations() if CLAIMS[outcome.claim_id].gating]


def unchecked_claims() -> list[str]:
    return sorted(set(CLAIMS) - set(_CHECKS))
