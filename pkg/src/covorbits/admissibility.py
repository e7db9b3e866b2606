"""Quasi-admissibility of classical nilpotent orbits and the duality sweep.

An orbit is quasi-admissible at cover degree n when divisibility and parity
conditions on its repeated part values hold.  The conditions bound n by a
multiple of the largest part, so the full admissible-degree set is exactly
computable.  The sweep checks that every covering-duality image is
quasi-admissible at its own degree, and the never-sets collect orbits that are
admissible at no degree or never hit by the duality.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd

from .degrees import DegreeSet
from .duality import d_bv, dual_group, full_image_of_bv, image_degree_cap
from .errors import DomainError
from .partitions import (
    ClassicalType,
    Partition,
    enumerate_orbits,
    is_valid_orbit_partition,
)


def count_above(p: Partition, v: int) -> int:
    """Total multiplicity of parts above v with parity opposite to v."""
    return sum(1 for part in p if part > v and (part - v) % 2 == 1)


def count_below(p: Partition, v: int) -> int:
    """Total multiplicity of parts below v with parity opposite to v."""
    return sum(1 for part in p if part < v and (part - v) % 2 == 1)


def _even_part_condition(p: Partition, v: int, n: int, parity_count: int) -> bool:
    """Divisibility bullet for a repeated part v governed by a parity count.

    In types B/D the parity count is the opposite-parity multiplicity below an
    even v; in type C it is the one above an odd v.  Odd n additionally
    requires the count itself to be even.
    """
    if n % 2 == 1:
        return v % n == 0 and parity_count % 2 == 0
    if parity_count % 2 == 0:
        return v % n == 0
    return gcd(n, v) == n // 2


def _multiplicity_condition(v: int, mult: int, n: int) -> bool:
    """Divisibility bullet for the parity class constrained only through n."""
    if n % 2 == 1:
        return v % n == 0
    if mult >= 4:
        return (2 * v) % n == 0
    return (4 * v) % n == 0  # mult == 3


def is_quasi_admissible(t: ClassicalType, p: Partition, n: int) -> bool:
    """Quasi-admissibility of the orbit p of type t at cover degree n."""
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    if not is_valid_orbit_partition(t, p):
        raise DomainError(f"{p} is not a valid orbit partition for {t}")
    counts = Counter(p)
    if t.family == "A":
        return all(v % n == 0 for v, c in counts.items() if c >= 2)
    if t.family in ("B", "D"):
        for v, c in counts.items():
            if v % 2 == 0 and c >= 2:
                if not _even_part_condition(p, v, n, count_below(p, v)):
                    return False
            if v % 2 == 1 and c >= 3:
                if not _multiplicity_condition(v, c, n):
                    return False
        return True
    # type C: roles of the parity classes swap
    for v, c in counts.items():
        if v % 2 == 1 and c >= 2:
            if not _even_part_condition(p, v, n, count_above(p, v)):
                return False
        if v % 2 == 0 and c >= 3:
            if not _multiplicity_condition(v, c, n):
                return False
    return True


def _has_triggered_condition(t: ClassicalType, p: Partition) -> bool:
    counts = Counter(p)
    if t.family == "A":
        return any(c >= 2 for c in counts.values())
    if t.family in ("B", "D"):
        return any(
            (v % 2 == 0 and c >= 2) or (v % 2 == 1 and c >= 3)
            for v, c in counts.items()
        )
    return any(
        (v % 2 == 1 and c >= 2) or (v % 2 == 0 and c >= 3)
        for v, c in counts.items()
    )


def qa_degree_set(t: ClassicalType, p: Partition, bound: int | None = None) -> DegreeSet:
    """Exact set of degrees at which p is quasi-admissible.

    Vacuous conditions give the full set.  Otherwise every triggered condition
    has the shape n | v, n | 2v, n | 4v or gcd(n, v) = n/2, so degrees beyond
    four times the largest part never qualify and enumeration up to that bound
    is complete.
    """
    if not is_valid_orbit_partition(t, p):
        raise DomainError(f"{p} is not a valid orbit partition for {t}")
    if not _has_triggered_condition(t, p):
        return DegreeSet.all_degrees()
    cap = bound if bound is not None else 4 * max(p)
    members = [n for n in range(1, cap + 1) if is_quasi_admissible(t, p, n)]
    return DegreeSet.finite(members, cap)


def is_special(t: ClassicalType, p: Partition) -> bool:
    """Quasi-admissibility at the trivial cover."""
    return is_quasi_admissible(t, p, 1)


@dataclass(frozen=True)
class Violation:
    dual_partition: Partition
    image_partition: Partition
    description: str


@dataclass(frozen=True)
class VerificationReport:
    family: str
    rank: int
    degree: int
    total_orbits_checked: int
    violations: tuple[Violation, ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def verify_theorem(t: ClassicalType, n: int) -> VerificationReport:
    """Check every duality image at degree n for quasi-admissibility."""
    violations = []
    dual = dual_group(t, n)
    orbits = enumerate_orbits(dual)
    for p in orbits:
        image = d_bv(t, n, p)
        if not is_quasi_admissible(t, image, n):
            violations.append(
                Violation(
                    dual_partition=p,
                    image_partition=image,
                    description=(
                        f"image of {p} under degree-{n} duality is not "
                        f"quasi-admissible for {t}"
                    ),
                )
            )
    return VerificationReport(
        family=t.family,
        rank=t.rank,
        degree=n,
        total_orbits_checked=len(orbits),
        violations=tuple(violations),
    )


def n0_qa_set(t: ClassicalType) -> tuple[Partition, ...]:
    """Orbits quasi-admissible at no degree, decreasing lex order."""
    out = [
        p
        for p in enumerate_orbits(t)
        if qa_degree_set(t, p).is_empty
    ]
    return tuple(sorted(out, reverse=True))


def n0_bv_set(t: ClassicalType, degree_cap: int | None = None) -> tuple[Partition, ...]:
    """Orbits never appearing as duality images, decreasing lex order."""
    hit = set(full_image_of_bv(t, degree_cap))
    out = [p for p in enumerate_orbits(t) if p not in hit]
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class ScanRow:
    rank: int
    n0_qa: tuple[Partition, ...]
    n0_bv: tuple[Partition, ...]

    @property
    def equal(self) -> bool:
        return self.n0_qa == self.n0_bv

    @property
    def difference(self) -> tuple[Partition, ...]:
        return tuple(sorted(set(self.n0_bv) - set(self.n0_qa), reverse=True))


@dataclass(frozen=True)
class ScanReport:
    family: str
    rank_max: int
    rows: tuple[ScanRow, ...]

    @property
    def first_divergence_rank(self) -> int | None:
        for row in self.rows:
            if not row.equal:
                return row.rank
        return None


def conjecture_scan(family: str, rank_max: int, degree_cap: int | None = None) -> ScanReport:
    """Compare the two never-sets rank by rank for one family."""
    if family not in ("B", "C", "D"):
        raise DomainError(f"conjecture scan applies to B, C, D; got {family!r}")
    if rank_max < 1:
        raise DomainError(f"rank_max must be positive, got {rank_max}")
    rows = []
    for rank in range(1, rank_max + 1):
        t = ClassicalType(family, rank)
        rows.append(
            ScanRow(
                rank=rank,
                n0_qa=n0_qa_set(t),
                n0_bv=n0_bv_set(t, degree_cap),
            )
        )
    return ScanReport(family=family, rank_max=rank_max, rows=tuple(rows))
