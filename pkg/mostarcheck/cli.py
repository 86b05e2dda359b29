import sys
from argparse import ArgumentParser
from collections.abc import Sequence
from logging import getLogger
from pathlib import Path

from mostarcheck import MostarCheckError
from mostarcheck.config import Config, get_config
from mostarcheck.corpus import corpus
from mostarcheck.impl import BENCH_FAMILIES, EXIT_USAGE, EXIT_VIOLATION, Index, bench, build_product, \
    compute_indices, generate_family, load_graph, parse_int_list, save_graph
from mostarcheck.output import OutputFormat, bench_output, claims_output, compute_output, report_output
from mostarcheck.verify import SUITE_CHOICES, gate_violations, run_suite
from pymostar.families import Family
from pymostar.formulas import CLAIMS
from pymostar.operators import Operation

_log = getLogger(__name__)

_PRODUCT_OPS = [op.value for op in Operation if op != Operation.thorn]
_FORMATS = [fmt.value for fmt in OutputFormat]


def _emit(text: str | None, path: str | None = None):
    if text is None:
        return
    if path is None:
        print(text)
        return
    try:
        with open(path, "w", encoding="utf8", newline="\n") as file:
            file.write(text + "\n")
    except OSError as err:
        raise MostarCheckError(f"could not write output file: {Path(path).absolute()}") from err


def _compute(args, cfg: Config) -> int:
    _log.debug(f"compute: {args}")
    g = load_graph(args.input, cfg)
    values = compute_indices(g, Index(args.index), args.edges, cfg)
    _emit(compute_output(values, OutputFormat(args.format), cfg.indent))
    return 0


def _generate(args, cfg: Config) -> int:
    _log.debug(f"generate: {args}")
    g = generate_family(args.family, parse_int_list(args.params, "--params"), cfg)
    _emit(save_graph(g, args.out))
    return 0


def _product(args, cfg: Config) -> int:
    _log.debug(f"product: {args}")
    op = Operation(args.op)
    lhs = load_graph(args.lhs, cfg)
    rhs = load_graph(args.rhs, cfg) if args.rhs is not None else None
    third = load_graph(args.third, cfg) if args.third is not None else None
    if op == Operation.subdivision and (rhs is not None or third is not None):
        raise MostarCheckError("subdivision takes only --lhs")
    if third is not None and op != Operation.sve_join:
        raise MostarCheckError(f"{op.value} takes no --third operand")
    _emit(save_graph(build_product(op, lhs, rhs, third, cfg), args.out))
    return 0


def _verify(args, cfg: Config) -> int:
    _log.debug(f"verify: {args}")
    max_n = args.max_n if args.max_n is not None else cfg.max_n
    seed = args.seed if args.seed is not None else cfg.seed
    graphs = corpus(max_n, seed, cfg.random_per_order, cfg.edge_probability, cfg.pair_max_n,
                    cfg.pair_random_per_order, cfg.triple_max_n)
    report = run_suite(args.suite, graphs, cfg.block_size)
    _emit(report_output(report, cfg.indent), args.report)
    gated = gate_violations(report)
    ungated = len(report.violations()) - len(gated)
    _log.info(f"verify {args.suite} (max_n {max_n}, seed {seed}): {len(report.outcomes)} outcomes, "
              f"{len(gated)} gating violations, {ungated} reported discrepancies")
    for outcome in gated:
        _log.error(f"gating violation: {outcome}")
    return EXIT_VIOLATION if gated else 0


def _bench(args, cfg: Config) -> int:
    _log.debug(f"bench: {args}")
    rows = bench(args.family, parse_int_list(args.sizes, "--sizes"), cfg)
    _emit(bench_output(rows, OutputFormat(args.format), cfg.indent))
    return 0 if all(row.matches for row in rows) else EXIT_VIOLATION


def _claims(args, cfg: Config) -> int:
    _log.debug(f"claims: {args}")
    _emit(claims_output(list(CLAIMS.values()), OutputFormat(args.format), cfg.indent))
    return 0


text = "Commands for computing and checking Mostar indices"
parser = ArgumentParser(prog="mostarcheck",
                        description="Compute the Mostar index of graphs and check closed forms for graph operations.")
parser.add_argument("--config", type=str, help="the config file path to use")

subparsers = parser.add_subparsers(title="commands", help=text, dest="subcommand", required=True)

text = "Compute the Mostar index and the degree irregularity indices of a graph"
compute_parser = subparsers.add_parser("compute", help=text, description=text)
compute_parser.set_defaults(func=_compute)
compute_parser.add_argument("--input", type=str, required=True, help="the edge-list file to read")
compute_parser.add_argument("--index", type=str, choices=[index.value for index in Index], default=Index.mostar.value,
                            help="the index to compute")
compute_parser.add_argument("--edges", action='store_true', help="also emit the per-edge contribution table")
compute_parser.add_argument("--format", type=str, choices=_FORMATS, default=OutputFormat.text.value,
                            help="the output format")

text = "Write a named graph family member as an edge list"
description = ("Write a member of a graph family as an edge list. Parameters follow the family names, e.g. "
               "star takes the number of leaves, wheel and fan the rim size, ladder the number of squares.")
generate_parser = subparsers.add_parser("generate", help=text, description=description)
generate_parser.set_defaults(func=_generate)
generate_parser.add_argument("--family", type=str, required=True, choices=[family.value for family in Family],
                             help="the family to generate")
generate_parser.add_argument("--params", type=str, required=True, help="comma separated family parameters, e.g. 2,3")
generate_parser.add_argument("--out", type=str, help="the file to write (standard output if omitted)")

text = "Build a graph operation from edge-list operands"
description = ("Build a graph operation from edge-list operands. subdivision takes only --lhs; sve treats --rhs and "
               "--third as optional, an absent operand is left out of the join.")
product_parser = subparsers.add_parser("product", help=text, description=description)
product_parser.set_defaults(func=_product)
product_parser.add_argument("--op", type=str, required=True, choices=_PRODUCT_OPS, help="the operation to apply")
product_parser.add_argument("--lhs", type=str, required=True, help="the first operand")
product_parser.add_argument("--rhs", type=str, help="the second operand")
product_parser.add_argument("--third", type=str, help="the third operand (sve only)")
product_parser.add_argument("--out", type=str, help="the file to write (standard output if omitted)")

text = "Check every registered formula against the Mostar oracle"
description = ("Check registered formulas against the Mostar oracle over a seeded corpus and write the claims report. "
               "Exits with 1 if a proven equality or proven bound is violated; discrepancies in worked-example "
               "values are reported but do not change the exit code.")
verify_parser = subparsers.add_parser("verify", help=text, description=description)
verify_parser.set_defaults(func=_verify)
verify_parser.add_argument("--suite", type=str, choices=SUITE_CHOICES, default="all", help="the claims to check")
verify_parser.add_argument("--max-n", type=int, help="the largest corpus graph order (config default if omitted)")
verify_parser.add_argument("--seed", type=int, help="the corpus seed (config default if omitted)")
verify_parser.add_argument("--report", type=str, help="the report file to write (standard output if omitted)")

text = "Time the Mostar oracle and the matching formula on a family"
description = ("Time the Mostar oracle and the matching closed form on members of a family. Exits with 1 if a closed "
               "form disagrees with the oracle value.")
bench_parser = subparsers.add_parser("bench", help=text, description=description)
bench_parser.set_defaults(func=_bench)
bench_parser.add_argument("--family", type=str, required=True, choices=list(BENCH_FAMILIES),
                          help="; ".join(f"{name}: {family.note}" for name, family in BENCH_FAMILIES.items()))
bench_parser.add_argument("--sizes", type=str, required=True, help="comma separated sizes, e.g. 10,50")
bench_parser.add_argument("--format", type=str, choices=_FORMATS, default=OutputFormat.text.value,
                          help="the output format")

text = "List the registered claims"
claims_parser = subparsers.add_parser("claims", help=text, description=text)
claims_parser.set_defaults(func=_claims)
claims_parser.add_argument("--format", type=str, choices=_FORMATS, default=OutputFormat.text.value,
                           help="the output format")

# We're done with the subparsers
del text
del description


def get_help_texts():
    return {'': parser.format_help()} | {name: subparser.format_help() for name, subparser in
                                         subparsers.choices.items()}


def run(args: str | Sequence[str] | None = None) -> int:
    _log.debug(f"run CLI: {args}")
    if isinstance(args, str):
        args = args.split()
    try:
        args = parser.parse_args(args)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    try:
        cfg = get_config(args.config)
        return args.func(args, cfg)
    except MostarCheckError as err:
        print(f"{parser.prog}: error: {err}", file=sys.stderr)
        return err.exit_code
