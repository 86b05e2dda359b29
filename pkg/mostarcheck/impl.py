from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from logging import getLogger
from pathlib import Path
from time import perf_counter

from frozendict import frozendict

from mostarcheck import MostarCheckError
from mostarcheck.config import Config
from mostarcheck.info import BenchRow, IndexValues
from pymostar import formulas, operators
from pymostar.edgelist import EdgeListError, format_edge_list, read_edge_list, write_edge_list
from pymostar.families import Family, FamilySpec, family_order, generate
from pymostar.graph import DisconnectedError, Graph, GraphError, all_pairs_distances
from pymostar.invariants import albertson_irregularity, edge_contributions, mostar, total_irregularity
from pymostar.operators import Operation

_log = getLogger(__name__)

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3


class Index(Enum):
    mostar = "mostar"
    irr = "irr"
    irr_t = "irr-t"
    all = "all"


@dataclass(frozen=True)
class BenchFamily:
    spec: Callable[[int], FamilySpec]
    formula: Callable[[int], formulas.FormulaValue] | None
    note: str

    def order(self, n: int) -> int:
        return family_order(self.spec(n))

    def build(self, n: int) -> Graph:
        return generate(self.spec(n))


def _family(family: Family, arity: int = 1) -> Callable[[int], FamilySpec]:
    return lambda n: FamilySpec(family, (n,) * arity)


BENCH_FAMILIES: frozendict[str, BenchFamily] = frozendict({
    "grid": BenchFamily(_family(Family.grid, 2), lambda n: formulas.cartesian_family(formulas.CartesianFamily.grid, n, n),
                        "n x n grid"),
    "ladder": BenchFamily(_family(Family.ladder), lambda n: formulas.cartesian_family(formulas.CartesianFamily.ladder, n),
                          "ladder with n squares"),
    "path": BenchFamily(_family(Family.path), lambda n: formulas.basic_family(formulas.BasicFamily.path, n), "path on n"),
    "cycle": BenchFamily(_family(Family.cycle), lambda n: formulas.basic_family(formulas.BasicFamily.cycle, n),
                         "cycle on n"),
    "hypercube": BenchFamily(_family(Family.hypercube),
                             lambda n: formulas.cartesian_family(formulas.CartesianFamily.hypercube, n), "n-cube"),
    "star": BenchFamily(_family(Family.star), formulas.star, "star with n leaves"),
    "wheel": BenchFamily(_family(Family.wheel), formulas.wheel, "wheel with rim n"),
})


def _check_order(order: int, cfg: Config, what: str):
    if order > cfg.max_order:
        raise MostarCheckError(f"{what} has {order} vertices, above the configured limit of {cfg.max_order}")


def load_graph(path: str, cfg: Config) -> Graph:
    _log.debug(f"load graph: {path}")
    try:
        g = read_edge_list(path, cfg.max_order)
    except EdgeListError as err:
        raise MostarCheckError(f"could not parse {path}: {err}", EXIT_USAGE) from err
    except GraphError as err:
        raise MostarCheckError(f"invalid graph in {path}: {err}", EXIT_USAGE) from err
    except OSError as err:
        raise MostarCheckError(f"could not read graph file: {Path(path).absolute()}", EXIT_USAGE) from err
    return g


def save_graph(g: Graph, path: str | None) -> str | None:
    """Write `g` to `path`, or return its edge-list text when no path is given."""
    if path is None:
        return format_edge_list(g)
    _log.debug(f"save graph ({g}) to: {path}")
    try:
        write_edge_list(g, path)
    except OSError as err:
        raise MostarCheckError(f"could not write graph file: {Path(path).absolute()}", EXIT_USAGE) from err
    return None


def compute_indices(g: Graph, index: Index, with_edges: bool, cfg: Config) -> IndexValues:
    _log.debug(f"compute {index.value} on {g} (edges: {with_edges})")
    values = {}
    edges = None
    try:
        if index in (Index.mostar, Index.all):
            if with_edges:
                edges = tuple(edge_contributions(g, all_pairs_distances(g)))
                values[Index.mostar.value] = sum(edge.contribution for edge in edges)
            else:
                values[Index.mostar.value] = mostar(g, cfg.block_size)
        if index in (Index.irr, Index.all):
            values[Index.irr.value] = albertson_irregularity(g)
        if index in (Index.irr_t, Index.all):
            values[Index.irr_t.value] = total_irregularity(g)
    except DisconnectedError as err:
        raise MostarCheckError(str(err), EXIT_DISCONNECTED) from err
    return IndexValues(frozendict(values), edges)


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(item) for item in text.replace(" ", "").split(",") if item]
    except ValueError as err:
        raise MostarCheckError(f"{what} must be a comma separated list of integers, got {text!r}") from err
    if not values:
        raise MostarCheckError(f"{what} must not be empty")
    return values


def generate_family(name: str, params: Sequence[int], cfg: Config) -> Graph:
    _log.debug(f"generate family: {name} {list(params)}")
    try:
        family = Family(name)
    except ValueError as err:
        raise MostarCheckError(
            f"{name} is not a valid family.\nValid families are: {', '.join(f.value for f in Family)}") from err
    spec = FamilySpec(family, tuple(params))
    try:
        _check_order(family_order(spec), cfg, spec.name)
        return generate(spec)
    except GraphError as err:
        raise MostarCheckError(str(err)) from err


def build_product(op: Operation, lhs: Graph, rhs: Graph | None, third: Graph | None, cfg: Config) -> Graph:
    _log.debug(f"build product: {op.value}")
    binary = {
        Operation.corona: operators.corona,
        Operation.cartesian: operators.cartesian,
        Operation.join: operators.join,
        Operation.lexicographic: operators.lexicographic,
        Operation.indu_bala: operators.indu_bala,
    }
    match op:
        case Operation.subdivision:
            factors = (lhs,)
            constructor = operators.subdivision
        case Operation.sve_join:
            factors = (lhs, rhs, third)
            constructor = operators.sve_join
        case _ if op in binary:
            if rhs is None:
                raise MostarCheckError(f"{op.value} needs a second operand (--rhs)")
            factors = (lhs, rhs)
            constructor = binary[op]
        case _:
            raise MostarCheckError(f"unsupported operation: {op.value}")
    _check_order(operators.layout(op, *factors).order, cfg, f"the {op.value} result")
    return constructor(*factors)


def bench(family: str, sizes: Sequence[int], cfg: Config) -> list[BenchRow]:
    """Times the oracle and the closed form on each size; a row whose formula disagrees is logged and marked."""
    _log.debug(f"bench {family}: {list(sizes)}")
    if family not in BENCH_FAMILIES:
        raise MostarCheckError(f"{family} is not a benchmark family. Valid families are: {', '.join(BENCH_FAMILIES)}")
    target = BENCH_FAMILIES[family]
    rows = []
    for n in sizes:
        try:
            _check_order(target.order(n), cfg, f"{family}({n})")
            g = target.build(n)
            start = perf_counter()
            value = mostar(g, cfg.block_size)
            oracle_ms = (perf_counter() - start) * 1000
            formula_ms = None
            formula_value = None
            if target.formula is not None:
                start = perf_counter()
                formula_value = target.formula(n).value
                formula_ms = (perf_counter() - start) * 1000
        except GraphError as err:
            raise MostarCheckError(f"{family}({n}): {err}") from err
        row = BenchRow(family, n, g.order, g.size, oracle_ms, formula_ms, value, formula_value)
        if not row.matches:
            _log.warning(f"bench {family}({n}): the closed form gives {formula_value}, the oracle {value}")
        rows.append(row)
    return rows
