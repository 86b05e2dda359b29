import json
import textwrap
from dataclasses import dataclass
from enum import Enum

from frozendict import frozendict

from mostarcheck import indentation
from pymostar.formulas import ClaimKind
from pymostar.invariants import EdgeContribution

SPEC_VERSION = "1.0"


class Status(Enum):
    exact_match = "ExactMatch"
    bound_holds = "BoundHolds"
    bound_tight = "BoundTight"
    violated = "Violated"
    skipped = "Skipped"


def classify(kind: ClaimKind, oracle: int, formula: int) -> Status:
    if kind == ClaimKind.upper_bound:
        if oracle == formula:
            return Status.bound_tight
        return Status.bound_holds if oracle < formula else Status.violated
    return Status.exact_match if oracle == formula else Status.violated


def params_key(params) -> str:
    return json.dumps(params, sort_keys=True)


@dataclass(frozen=True)
class ClaimOutcome:
    claim_id: str
    params: frozendict
    oracle: int | None
    formula: int | None
    kind: ClaimKind
    status: Status
    reason: str | None = None

    @property
    def sort_key(self) -> tuple[str, str]:
        return self.claim_id, params_key(dict(self.params))

    def serialize(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "oracle": self.oracle,
            "formula": self.formula,
            "kind": self.kind.value,
            "status": self.status.value,
            **({"reason": self.reason} if self.reason else {}),
        }

    def __str__(self) -> str:
        binding = ", ".join(f"{key}={value}" for key, value in self.params.items())
        if self.status == Status.skipped:
            return f"{self.claim_id} ({binding}): {self.status.value} ({self.reason})"
        return f"{self.claim_id} ({binding}): {self.status.value} (oracle {self.oracle}, formula {self.formula})"


@dataclass(frozen=True)
class ClaimTally:
    exact: int = 0
    tight: int = 0
    holds: int = 0
    violated: int = 0
    skipped: int = 0

    def serialize(self) -> dict:
        return {
            "exact": self.exact,
            "tight": self.tight,
            "holds": self.holds,
            "violated": self.violated,
            "skipped": self.skipped,
        }

    def __str__(self) -> str:
        return ", ".join(f"{key} {value}" for key, value in self.serialize().items() if value)


_TALLY_FIELD = frozendict({
    Status.exact_match: "exact",
    Status.bound_tight: "tight",
    Status.bound_holds: "holds",
    Status.violated: "violated",
    Status.skipped: "skipped",
})


def tally(outcomes: list[ClaimOutcome]) -> ClaimTally:
    counts = {name: 0 for name in _TALLY_FIELD.values()}
    for outcome in outcomes:
        counts[_TALLY_FIELD[outcome.status]] += 1
    return ClaimTally(**counts)


@dataclass(frozen=True)
class VerificationReport:
    corpus: frozendict
    outcomes: tuple[ClaimOutcome, ...]
    summary: frozendict[str, ClaimTally]
    spec_version: str = SPEC_VERSION

    def serialize(self) -> dict:
        return {
            "spec_version": self.spec_version,
            "corpus": dict(self.corpus),
            "outcomes": [outcome.serialize() for outcome in self.outcomes],
            "summary": {claim_id: counts.serialize() for claim_id, counts in self.summary.items()},
        }

    def violations(self) -> list[ClaimOutcome]:
        return [outcome for outcome in self.outcomes if outcome.status == Status.violated]

    def __str__(self) -> str:
        lines = [f"{claim_id}: {counts}" for claim_id, counts in self.summary.items()]
        violations = self.violations()
        if violations:
            lines.append("Violations:\n" + textwrap.indent("\n".join(map(str, violations)), indentation))
        return "\n".join(lines)


@dataclass(frozen=True)
class IndexValues:
    values: frozendict[str, int]
    edges: tuple[EdgeContribution, ...] | None = None

    def serialize(self) -> dict:
        return {
            **dict(self.values),
            **({"edges": [edge.serialize() for edge in self.edges]} if self.edges is not None else {}),
        }

    def __str__(self) -> str:
        if len(self.values) == 1 and self.edges is None:
            return str(next(iter(self.values.values())))
        lines = [f"{name} {value}" for name, value in self.values.items()]
        if self.edges is not None:
            lines += map(str, self.edges)
        return "\n".join(lines)


@dataclass(frozen=True)
class BenchRow:
    family: str
    param: int
    order: int
    size: int
    oracle_ms: float
    formula_ms: float | None
    value: int
    formula_value: int | None = None

    @property
    def matches(self) -> bool:
        return self.formula_value is None or self.formula_value == self.value

    def serialize(self) -> dict:
        return {
            "family": self.family,
            "param": self.param,
            "order": self.order,
            "size": self.size,
            "oracle_ms": round(self.oracle_ms, 3),
            "formula_ms": round(self.formula_ms, 3) if self.formula_ms is not None else None,
            "value": self.value,
            "formula_value": self.formula_value,
            "matches": self.matches,
        }

    def __str__(self) -> str:
        formula = f"{self.formula_ms:.3f}" if self.formula_ms is not None else "-"
        formula_value = self.formula_value if self.formula_value is not None else "-"
        mismatch = "" if self.matches else " MISMATCH"
        return (f"{self.family} {self.param} {self.order} {self.size} {self.oracle_ms:.3f} {formula} {self.value} "
                f"{formula_value}{mismatch}")
