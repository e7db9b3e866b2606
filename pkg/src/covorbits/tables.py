"""Exceptional-group orbit tables and their degree-set recomputation.

Each record stores one orbit of E6, E7 or E8: Bala-Carter label, flags, the
invariant pairs (Q1, Q2) of the stabilizer factors, the admissible-degree set
as published, a raisability descriptor, and, where available, the weighted
Dynkin diagram with the stated graded dimensions.  The consistency checker
recomputes every degree set from the invariant pairs and re-derives the
grading from the root system, so a transcription error in any load-bearing
field is caught mechanically.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd

from .degrees import DegreeSet, degree_set_from_json
from .errors import DataError
from .roots import (
    CartanSpec,
    WeightedDiagram,
    algebra_dim,
    center_dim,
    graded_dims,
    levi_semisimple_dim,
)

GROUPS = ("E6", "E7", "E8")
EXPECTED_ROW_COUNTS = {"E6": 21, "E7": 45, "E8": 70}
DATA_ENV_VAR = "COVORBITS_DATA"

_RECORD_FIELDS = {
    "label", "special", "even", "stabilizer", "pairs", "criterion",
    "qa", "raisable", "tau_same_pair", "diagram", "graded_dims",
}
_CRITERIA = ("standard", "so_lemma", "direct")
_RAISABLE_KINDS = ("na", "all", "excluding")


@dataclass(frozen=True)
class Raisability:
    kind: str  # "na", "all", or "excluding"
    members: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "na":
            return "n.a."
        if self.kind == "all":
            return "all"
        return "n not in {" + ",".join(str(m) for m in self.members) + "}"

    def to_json(self) -> dict:
        if self.kind == "excluding":
            return {"kind": "excluding", "members": list(self.members)}
        return {"kind": self.kind}


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    group: str
    label: str
    special: bool
    even: bool
    stabilizer: str
    pairs: tuple[tuple[int, int], ...]
    criterion: str
    qa: DegreeSet
    raisable: Raisability
    tau_same_pair: bool
    diagram: tuple[int, ...] | None
    graded: dict[int, int] | None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "special": self.special,
            "even": self.even,
            "stabilizer": self.stabilizer,
            "pairs": [list(p) for p in self.pairs],
            "criterion": self.criterion,
            "qa": self.qa.to_json(),
            "raisable": self.raisable.to_json(),
            "tau_same_pair": self.tau_same_pair,
            "diagram": list(self.diagram) if self.diagram is not None else None,
            "graded_dims": (
                {str(k): v for k, v in sorted(self.graded.items())}
                if self.graded is not None
                else None
            ),
        }


def qa_set_from_pair(q1: int, q2: int) -> DegreeSet:
    """Admissible degrees for one invariant pair.

    Even Q2 admits exactly the divisors of Q1; odd Q2 admits the n with
    n / gcd(n, Q1) = 2, all of which lie below 2*Q1.
    """
    if q1 < 1:
        raise DataError(f"Q1 must be positive, got {q1}")
    if q2 % 2 == 0:
        return DegreeSet.finite([n for n in range(1, q1 + 1) if q1 % n == 0], q1)
    bound = 2 * q1
    members = [n for n in range(1, bound + 1) if n // gcd(n, q1) == 2 and n % gcd(n, q1) == 0]
    return DegreeSet.finite(members, bound)


def qa_set_for_record(rec: ExceptionalOrbitRecord) -> DegreeSet:
    """Recompute the admissible-degree set from the stored invariant pairs."""
    if rec.criterion == "direct":
        return rec.qa
    if not rec.pairs:
        raise DataError(f"{rec.group} {rec.label}: {rec.criterion} row without pairs")
    if rec.criterion == "so_lemma":
        if len(rec.pairs) != 1:
            raise DataError(f"{rec.group} {rec.label}: so_lemma rows carry one pair")
        q1 = rec.pairs[0][0]
        return DegreeSet.finite([n for n in range(1, q1 + 1) if q1 % n == 0], q1)
    result = qa_set_from_pair(*rec.pairs[0])
    for pair in rec.pairs[1:]:
        result = result.intersect(qa_set_from_pair(*pair))
    return result


def _parse_record(group: str, obj: dict) -> ExceptionalOrbitRecord:
    if not isinstance(obj, dict):
        raise DataError(f"{group}: record is not an object: {obj!r}")
    unknown = set(obj) - _RECORD_FIELDS
    if unknown:
        raise DataError(f"{group} {obj.get('label')!r}: unknown fields {sorted(unknown)}")
    missing = _RECORD_FIELDS - set(obj)
    if missing:
        raise DataError(f"{group} {obj.get('label')!r}: missing fields {sorted(missing)}")
    label = obj["label"]
    if obj["criterion"] not in _CRITERIA:
        raise DataError(f"{group} {label}: bad criterion {obj['criterion']!r}")
    pairs = tuple((int(a), int(b)) for a, b in obj["pairs"])
    if any(a < 1 or b < 0 for a, b in pairs):
        raise DataError(f"{group} {label}: bad invariant pair in {pairs}")
    qa = degree_set_from_json(obj["qa"])
    if qa.is_all != (obj["criterion"] == "direct" and not pairs):
        raise DataError(
            f"{group} {label}: 'all' degree sets belong exactly to pair-free direct rows"
        )
    r = obj["raisable"]
    if not isinstance(r, dict) or r.get("kind") not in _RAISABLE_KINDS:
        raise DataError(f"{group} {label}: bad raisability {r!r}")
    raisable = Raisability(
        kind=r["kind"], members=tuple(sorted(r.get("members", [])))
    )
    if raisable.kind != "excluding" and r.get("members"):
        raise DataError(f"{group} {label}: members only belong to 'excluding'")
    diagram = obj["diagram"]
    if diagram is not None:
        diagram = tuple(int(v) for v in diagram)
    graded = obj["graded_dims"]
    if graded is not None:
        if diagram is None:
            raise DataError(f"{group} {label}: graded dims without a diagram")
        graded = {int(k): int(v) for k, v in graded.items()}
    return ExceptionalOrbitRecord(
        group=group,
        label=label,
        special=bool(obj["special"]),
        even=bool(obj["even"]),
        stabilizer=obj["stabilizer"],
        pairs=pairs,
        criterion=obj["criterion"],
        qa=qa,
        raisable=raisable,
        tau_same_pair=bool(obj["tau_same_pair"]),
        diagram=diagram,
        graded=graded,
    )


def _data_path() -> str | None:
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        path = os.path.join(override, "exceptional_orbits.json")
        if not os.path.exists(path):
            raise DataError(f"{DATA_ENV_VAR} points at {override!r} but {path} is missing")
        return path
    return None


@lru_cache(maxsize=4)
def load_tables(path: str | None = None) -> dict[str, tuple[ExceptionalOrbitRecord, ...]]:
    """Load and validate the bundled (or overridden) orbit tables."""
    try:
        if path is None:
            path = _data_path()
        if path is not None:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        else:
            raw = json.loads(
                resources.files("covorbits.data")
                .joinpath("exceptional_orbits.json")
                .read_text(encoding="utf-8")
            )
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot load exceptional orbit data: {exc}") from exc
    if set(raw) != set(GROUPS):
        raise DataError(f"data file must carry exactly groups {GROUPS}, got {sorted(raw)}")
    tables = {}
    for group in GROUPS:
        records = tuple(_parse_record(group, obj) for obj in raw[group])
        labels = [r.label for r in records]
        if len(set(labels)) != len(labels):
            raise DataError(f"{group}: duplicate orbit labels")
        tables[group] = records
    return tables


def get_records(group: str) -> tuple[ExceptionalOrbitRecord, ...]:
    if group not in GROUPS:
        raise DataError(f"unknown exceptional group {group!r}")
    return load_tables()[group]


@dataclass(frozen=True)
class RowIssue:
    label: str
    field: str
    detail: str


@dataclass(frozen=True)
class ConsistencyReport:
    group: str
    rows: int
    expected_rows: int
    issues: tuple[RowIssue, ...]

    @property
    def clean(self) -> bool:
        return self.rows == self.expected_rows and not self.issues


def _check_diagram(rec: ExceptionalOrbitRecord, issues: list[RowIssue]) -> None:
    spec = CartanSpec.parse(rec.group)
    wd = WeightedDiagram(spec, rec.diagram)
    dims = graded_dims(wd)
    total = algebra_dim(spec)
    if sum(dims.values()) != total:
        issues.append(RowIssue(rec.label, "diagram", f"graded dims sum to {sum(dims.values())}, expected {total}"))
    if any(dims.get(i, 0) != dims.get(-i, 0) for i in range(1, max(dims) + 1)):
        issues.append(RowIssue(rec.label, "diagram", "grading is not symmetric"))
    expected_zero = center_dim(wd) + levi_semisimple_dim(wd)
    if dims[0] != expected_zero:
        issues.append(RowIssue(
            rec.label, "diagram",
            f"dim g[0] = {dims[0]} but centre + Levi gives {expected_zero}",
        ))
    if rec.even != all(v % 2 == 0 for v in rec.diagram):
        issues.append(RowIssue(rec.label, "even", "even flag contradicts diagram labels"))
    if rec.graded:
        for layer, stated in rec.graded.items():
            got = dims.get(layer, 0)
            if got != stated:
                issues.append(RowIssue(
                    rec.label, "graded_dims",
                    f"dim g[{layer}] = {got} from the root system, table states {stated}",
                ))


def check_table_consistency(group: str) -> ConsistencyReport:
    """Recompute every row's degree set and grading; report all mismatches."""
    records = get_records(group)
    issues: list[RowIssue] = []
    for rec in records:
        recomputed = qa_set_for_record(rec)
        if recomputed.to_json() != rec.qa.to_json():
            issues.append(RowIssue(
                rec.label, "qa",
                f"recomputed {recomputed} from pairs {rec.pairs}, stored {rec.qa}",
            ))
        if (
            rec.tau_same_pair
            and rec.qa.kind == "finite"
            and rec.raisable.kind == "excluding"
            and rec.raisable.members != rec.qa.members
        ):
            issues.append(RowIssue(
                rec.label, "raisable",
                f"shared-pair row excludes {rec.raisable.members} but is admissible at {rec.qa.members}",
            ))
        if rec.diagram is not None:
            _check_diagram(rec, issues)
    return ConsistencyReport(
        group=group,
        rows=len(records),
        expected_rows=EXPECTED_ROW_COUNTS[group],
        issues=tuple(issues),
    )


def n0_qa_exceptional(group: str) -> tuple[str, ...]:
    """Labels of orbits admissible at no degree, in table order."""
    return tuple(r.label for r in get_records(group) if r.qa.is_empty)
