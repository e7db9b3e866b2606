"""Integer partition arithmetic for nilpotent orbits of classical groups.

A partition is stored as a plain tuple of positive integers in non-increasing
order, so values are hashable and cheap to compare.  Jordan types of nilpotent
orbits in types B, C, D are partitions constrained by the usual parity rules
on multiplicities; the collapse and decorated-collapse operations below move an
arbitrary partition to the dominance-largest one satisfying those rules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BadSequence, DomainError, InvalidPartition

Partition = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class ClassicalType:
    """A classical family A/B/C/D together with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown classical family {self.family!r}")
        if self.rank < 1:
            raise DomainError(f"rank must be positive, got {self.rank}")

    @property
    def orbit_weight(self) -> int:
        """Size of the partitions labelling nilpotent orbits of this group."""
        if self.family == "A":
            return self.rank
        if self.family == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def make_partition(values: Iterable[int]) -> Partition:
    """Sort non-increasingly and strip zeros; reject negative entries."""
    parts = sorted(values, reverse=True)
    if parts and parts[-1] < 0:
        raise InvalidPartition(f"negative entry in {parts}")
    return tuple(v for v in parts if v > 0)


def weight(p: Partition) -> int:
    return sum(p)


def transpose(p: Partition) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff p and q have equal weight and p is dominated by q."""
    if sum(p) != sum(q):
        return False
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


def is_valid_orbit_partition(t: ClassicalType, p: Partition) -> bool:
    """Jordan-type test: weight and the parity-multiplicity rule for t."""
    if sum(p) != t.orbit_weight:
        return False
    if t.family == "A":
        return True
    counts = Counter(p)
    if t.family == "C":
        return all(c % 2 == 0 for v, c in counts.items() if v % 2 == 1)
    return all(c % 2 == 0 for v, c in counts.items() if v % 2 == 0)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order."""
    if n == 0:
        yield ()
        return
    first_max = min(n, max_part) if max_part is not None else n
    for first in range(first_max, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_orbits(t: ClassicalType) -> tuple[Partition, ...]:
    """All orbit partitions for t, in decreasing lexicographic order."""
    return tuple(
        p for p in partitions_of(t.orbit_weight) if is_valid_orbit_partition(t, p)
    )


def star(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Pairwise averaging rule on a non-increasing sequence of even length.

    Each adjacent pair (s1, s2) with s1 > s2 becomes (s1 - 1, s2 + 1); the
    result is re-sorted non-increasingly.
    """
    if len(seq) % 2 != 0:
        raise BadSequence(f"sequence {seq} has odd length")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise BadSequence(f"sequence {seq} is not non-increasing")
    out = list(seq)
    for i in range(0, len(out), 2):
        if out[i] > out[i + 1]:
            out[i] -= 1
            out[i + 1] += 1
    return tuple(sorted(out, reverse=True))


def _split_parity(p: Partition, keep_even: bool) -> tuple[list[int], list[int]]:
    kept = [v for v in p if v % 2 == (0 if keep_even else 1)]
    rest = [v for v in p if v % 2 == (1 if keep_even else 0)]
    return kept, rest


def collapse(target: str, p: Partition) -> Partition:
    """X-collapse for X in {B, C, D}.

    For B and D the even parts (zero-padded to even count) go through the
    pairing rule; for C the odd parts do.  The result is the dominance-largest
    partition of the same weight in which the adjusted parity class has even
    multiplicities, whenever the weight admits one.
    """
    if target not in ("B", "C", "D"):
        raise DomainError(f"collapse target must be B, C or D, not {target!r}")
    kept, rest = _split_parity(p, keep_even=target in ("B", "D"))
    if len(kept) % 2 == 1:
        kept.append(0)
    adjusted = star(tuple(kept))
    return make_partition(list(adjusted) + rest)


def plus(p: Partition) -> Partition:
    """Add 1 to the largest part; the empty partition becomes [1]."""
    if not p:
        return (1,)
    return (p[0] + 1,) + p[1:]


def minus(p: Partition) -> Partition:
    """Subtract 1 from the smallest part, dropping it if it vanishes."""
    if not p:
        raise InvalidPartition("minus needs a non-empty partition")
    return make_partition(p[:-1] + (p[-1] - 1,))


def plus_B(p: Partition) -> Partition:
    """Weight-raising B-decorated collapse.

    The even parts, zero-padded to odd length, are arranged as
    (e0, e1, ..., e_{2m}); the pairing rule is applied to the tail and e0 is
    incremented.  Equals collapse(B, plus(p)) on the duality domain.
    """
    evens, odds = _split_parity(p, keep_even=True)
    if len(evens) % 2 == 0:
        evens.append(0)
    head, tail = evens[0], tuple(evens[1:])
    return make_partition([head + 1] + list(star(tail)) + odds)


def minus_C(p: Partition) -> Partition:
    """Weight-lowering C-decorated collapse.

    With an odd number of odd parts (o1, ..., o_{2m}, o_{2m+1}) the pairing
    rule is applied to the first 2m entries and the last one is decremented.
    Partitions with an even number of odd parts (possible only at even weight,
    outside the duality domain of this map) fall back to the composite
    collapse(C, minus(p)), which agrees with the direct form wherever both
    apply.
    """
    if not p:
        raise InvalidPartition("minus_C needs a non-empty partition")
    odds, evens = _split_parity(p, keep_even=False)
    if len(odds) % 2 == 0:
        return collapse("C", minus(p))
    body, last = tuple(odds[:-1]), odds[-1]
    return make_partition(list(star(body)) + [last - 1] + evens)


def plus_minus_C(p: Partition) -> Partition:
    """Weight-preserving C-decorated collapse.

    The odd parts (o0, o1, ..., o_{2m}, o_{2m+1}) lose 1 at the bottom and
    gain 1 at the top, with the pairing rule applied in between.  Requires at
    least two odd parts; an odd count (odd weight) falls back to the composite
    collapse(C, minus(plus(p))).
    """
    odds, evens = _split_parity(p, keep_even=False)
    if len(odds) < 2:
        raise DomainError(
            f"plus_minus_C needs at least two odd parts, got {p}"
        )
    if len(odds) % 2 == 1:
        return collapse("C", minus(plus(p)))
    head, last = odds[0], odds[-1]
    middle = tuple(odds[1:-1])
    return make_partition([head + 1] + list(star(middle)) + [last - 1] + evens)


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(v) for v in p) + "]"


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list such as '4,2,1' or '[4,2,1]'."""
    body = text.strip().strip("[]")
    if not body:
        return ()
    try:
        values = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise InvalidPartition(f"cannot parse partition {text!r}") from exc
    return make_partition(values)
