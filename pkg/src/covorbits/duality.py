"""Covering Barbasch-Vogan duality maps for classical groups.

For an n-fold cover of a classical group the duality sends nilpotent orbits of
the dual group (which depends on the parity of n) to orbits of the group
itself.  The core ingredient is a componentwise sum of division-ladder
partitions, post-composed with a collapse or decorated collapse specific to
the family.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import DomainError
from .partitions import (
    ClassicalType,
    Partition,
    collapse,
    enumerate_orbits,
    is_valid_orbit_partition,
    minus,
    minus_C,
    plus,
    plus_B,
    plus_minus_C,
)


def half_degree(n: int) -> int:
    """n divided by gcd(n, 2): the effective degree in types B and D."""
    return n // gcd(n, 2)


def s_partition(m: int, n: int) -> Partition:
    """Division ladder of m by n: [n, ..., n, remainder], remainder dropped if 0."""
    if m < 1:
        raise DomainError(f"s_partition needs m >= 1, got {m}")
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    a, b = divmod(m, n)
    return (n,) * a + ((b,) if b else ())


def d_com_A(n: int, p: Partition) -> Partition:
    """Componentwise sum of the division ladders of the parts of p."""
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    acc: list[int] = []
    for part in p:
        ladder = s_partition(part, n)
        if len(ladder) > len(acc):
            acc.extend([0] * (len(ladder) - len(acc)))
        for i, v in enumerate(ladder):
            acc[i] += v
    return tuple(acc)


def dual_group(t: ClassicalType, n: int) -> ClassicalType:
    """Classification type of the dual group's nilpotent orbits."""
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    if t.family == "A":
        return t
    if t.family == "B":
        return ClassicalType("C" if half_degree(n) % 2 == 1 else "B", t.rank)
    if t.family == "C":
        return ClassicalType("B" if n % 2 == 1 else "C", t.rank)
    return ClassicalType("D", t.rank)


def d_bv(t: ClassicalType, n: int, p: Partition) -> Partition:
    """Covering duality image of the dual-group orbit p at degree n."""
    dual = dual_group(t, n)
    if not is_valid_orbit_partition(dual, p):
        raise DomainError(
            f"{p} is not a valid orbit partition for the dual group {dual}"
        )
    if t.family == "A":
        return d_com_A(n, p)
    if t.family == "B":
        ns = half_degree(n)
        img = d_com_A(ns, p)
        return plus_B(img) if ns % 2 == 1 else collapse("B", img)
    if t.family == "C":
        if n % 2 == 1:
            return minus_C(d_com_A(n, p))
        img = d_com_A(n // 2, p)
        if (n // 2) % 2 == 1:
            if sum(1 for v in img if v % 2 == 1) >= 2:
                return plus_minus_C(img)
            # all-even intermediate partitions carry no odd parts to decorate;
            # apply the defining composite directly
            return collapse("C", minus(plus(img)))
        return collapse("C", img)
    return collapse("D", d_com_A(half_degree(n), p))


def image_degree_cap(t: ClassicalType) -> int:
    """Degree beyond which every duality map repeats an earlier parity regime."""
    return 2 * t.rank + 3


@lru_cache(maxsize=None)
def image_of_bv(t: ClassicalType, n: int) -> tuple[Partition, ...]:
    """Deduplicated duality image over all dual orbits, decreasing lex order."""
    if t.rank < 1:
        raise DomainError(f"rank must be positive, got {t.rank}")
    images = {d_bv(t, n, p) for p in enumerate_orbits(dual_group(t, n))}
    return tuple(sorted(images, reverse=True))


def full_image_of_bv(t: ClassicalType, degree_cap: int | None = None) -> tuple[Partition, ...]:
    """Union of duality images over degrees 1 .. degree_cap."""
    cap = degree_cap if degree_cap is not None else image_degree_cap(t)
    union: set[Partition] = set()
    for n in range(1, cap + 1):
        union.update(image_of_bv(t, n))
    return tuple(sorted(union, reverse=True))
