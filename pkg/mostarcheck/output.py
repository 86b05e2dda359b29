import csv
import io
import json
from enum import Enum
from logging import getLogger

from mostarcheck.info import BenchRow, IndexValues, VerificationReport
from pymostar.formulas import Claim

_log = getLogger(__name__)


class OutputFormat(Enum):
    text = "text"
    json = "json"
    csv = "csv"


def _csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def compute_output(values: IndexValues, fmt: OutputFormat, indent: int | None) -> str:
    if fmt == OutputFormat.json:
        return json.dumps(values.serialize(), indent=indent)
    if fmt == OutputFormat.csv:
        if values.edges is not None:
            return _csv(["u", "v", "n_u", "n_v", "contribution"],
                        [[e.edge[0], e.edge[1], e.n_u, e.n_v, e.contribution] for e in values.edges])
        return _csv(["index", "value"], [[name, value] for name, value in values.values.items()])

    return str(values)


def report_output(report: VerificationReport, indent: int | None) -> str:
    return json.dumps(report.serialize(), indent=indent)


def bench_output(rows: list[BenchRow], fmt: OutputFormat, indent: int | None) -> str:
    if fmt == OutputFormat.json:
        return json.dumps({"bench": [row.serialize() for row in rows]}, indent=indent)
    if fmt == OutputFormat.csv:
        header = ["family", "param", "order", "size", "oracle_ms", "formula_ms", "value", "formula_value", "matches"]
        return _csv(header, [[row.serialize()[key] for key in header] for row in rows])

    return "\n".join(map(str, rows))


def claims_output(claims: list[Claim], fmt: OutputFormat, indent: int | None) -> str:
    if fmt == OutputFormat.json:
        return json.dumps({"claims": [claim.serialize() for claim in claims]}, indent=indent)
    if fmt == OutputFormat.csv:
        return _csv(["claim_id", "kind", "suite", "gating", "statement"],
                    [[c.claim_id, c.kind.value, c.suite.value, c.gating, c.statement] for c in claims])

    return "\n".join(map(str, claims))
