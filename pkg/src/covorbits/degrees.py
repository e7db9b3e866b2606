"""Exact descriptions of sets of cover degrees.

Every admissibility criterion in the toolkit either imposes no constraint at
all ("all n") or pins the admissible degrees inside a finite range; a
DegreeSet records which case holds, the members, and the bound that witnesses
completeness of the enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class DegreeSet:
    kind: str  # "all" or "finite"
    members: tuple[int, ...] = ()
    completeness_bound: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("all", "finite"):
            raise DomainError(f"bad DegreeSet kind {self.kind!r}")
        if self.kind == "finite":
            if any(m > self.completeness_bound for m in self.members):
                raise DomainError(
                    f"member beyond completeness bound: {self.members} > {self.completeness_bound}"
                )
            if list(self.members) != sorted(set(self.members)):
                raise DomainError(f"members must be sorted and distinct: {self.members}")

    @staticmethod
    def all_degrees() -> "DegreeSet":
        return DegreeSet(kind="all")

    @staticmethod
    def finite(members, bound: int) -> "DegreeSet":
        return DegreeSet(kind="finite", members=tuple(sorted(set(members))), completeness_bound=bound)

    @property
    def is_all(self) -> bool:
        return self.kind == "all"

    @property
    def is_empty(self) -> bool:
        return self.kind == "finite" and not self.members

    def contains(self, n: int) -> bool:
        if self.kind == "all":
            return True
        return n in self.members

    def intersect(self, other: "DegreeSet") -> "DegreeSet":
        if self.is_all:
            return other
        if other.is_all:
            return self
        bound = min(self.completeness_bound, other.completeness_bound)
        members = sorted(set(self.members) & set(other.members))
        return DegreeSet.finite(members, bound)

    def __str__(self) -> str:
        if self.is_all:
            return "all"
        return "{" + ",".join(str(m) for m in self.members) + "}"

    def to_json(self) -> dict:
        if self.is_all:
            return {"kind": "all"}
        return {"kind": "finite", "members": list(self.members)}


def degree_set_from_json(obj: dict, bound_hint: int = 0) -> DegreeSet:
    """Decode {"kind": "all"} / {"kind": "finite", "members": [...]}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DomainError(f"bad degree-set payload {obj!r}")
    if obj["kind"] == "all":
        if set(obj) - {"kind"}:
            raise DomainError(f"unexpected fields in degree set {obj!r}")
        return DegreeSet.all_degrees()
    if obj["kind"] == "finite":
        if set(obj) - {"kind", "members"}:
            raise DomainError(f"unexpected fields in degree set {obj!r}")
        members = obj.get("members", [])
        bound = max([bound_hint] + list(members)) if (members or bound_hint) else 0
        return DegreeSet.finite(members, bound)
    raise DomainError(f"bad degree-set kind {obj['kind']!r}")
