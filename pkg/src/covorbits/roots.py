"""Root systems, weighted Dynkin diagrams, and graded dimensions.

Roots are integer coefficient vectors in the simple-root basis, generated from
the Cartan matrix by repeated root-string extension.  A weighted diagram with
labels in {0, 1, 2} grades the Lie algebra by the label-weighted coefficient
sum of each root; the zero layer picks up the Cartan subalgebra.

E-series nodes follow the Bourbaki numbering: the chain is 1-3-4-5-6(-7-8)
with node 2 attached to node 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvalidDiagram

Root = tuple[int, ...]
CartanMatrix = tuple[tuple[int, ...], ...]

KINDS = ("A", "B", "C", "D", "E")
EXCEPTIONAL_DIMS = {"E6": 78, "E7": 133, "E8": 248}


@dataclass(frozen=True)
class CartanSpec:
    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown Cartan kind {self.kind!r}")
        if self.rank < 1:
            raise DomainError(f"rank must be positive, got {self.rank}")
        if self.kind == "D" and self.rank < 2:
            raise DomainError("type D needs rank >= 2")
        if self.kind == "E" and self.rank not in (6, 7, 8):
            raise DomainError("type E exists for ranks 6, 7, 8 only")

    @staticmethod
    def parse(text: str) -> "CartanSpec":
        text = text.strip().upper()
        if len(text) < 2 or text[0] not in KINDS or not text[1:].isdigit():
            raise DomainError(f"cannot parse Cartan type {text!r}")
        return CartanSpec(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def cartan_matrix(spec: CartanSpec) -> CartanMatrix:
    """Cartan matrix in the Bourbaki convention, a_ij = <alpha_j, alpha_i^vee>."""
    r = spec.rank
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, down: int = -1, up: int = -1) -> None:
        m[i][j] = down
        m[j][i] = up

    if spec.kind in ("A", "B", "C"):
        for i, j in _chain_edges(r):
            link(i, j)
        if spec.kind == "B" and r >= 2:
            # last simple root is short
            m[r - 1][r - 2] = -2
        if spec.kind == "C" and r >= 2:
            m[r - 2][r - 1] = -2
    elif spec.kind == "D":
        for i, j in _chain_edges(r - 1):
            link(i, j)
        if r >= 3:
            link(r - 3, r - 1)
        else:  # D2 = A1 x A1, no edges
            pass
    else:  # E series, branch node 2 hangs off node 4
        chain = [0] + list(range(2, r))
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    return tuple(tuple(row) for row in m)


def _positive_roots_from_cartan(matrix: CartanMatrix) -> tuple[Root, ...]:
    """Closure algorithm: extend roots by simple roots along root strings."""
    rank = len(matrix)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        fresh: list[Root] = []
        for alpha in frontier:
            for i in range(rank):
                # pairing <alpha, alpha_i^vee>
                pairing = sum(matrix[i][j] * alpha[j] for j in range(rank))
                down = 0
                beta = list(alpha)
                while True:
                    beta[i] -= 1
                    if tuple(beta) not in known:
                        break
                    down += 1
                if down - pairing > 0:
                    up = list(alpha)
                    up[i] += 1
                    candidate = tuple(up)
                    if candidate not in known:
                        known.add(candidate)
                        fresh.append(candidate)
        frontier = fresh
    return tuple(sorted(known, key=lambda a: (sum(a), a)))


@lru_cache(maxsize=None)
def positive_roots(spec: CartanSpec) -> tuple[Root, ...]:
    """All positive roots, ordered by height then lexicographically."""
    return _positive_roots_from_cartan(cartan_matrix(spec))


def algebra_dim(spec: CartanSpec) -> int:
    return spec.rank + 2 * len(positive_roots(spec))


@dataclass(frozen=True)
class WeightedDiagram:
    spec: CartanSpec
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.spec.rank:
            raise InvalidDiagram(
                f"{self.spec} needs {self.spec.rank} labels, got {len(self.labels)}"
            )
        if any(v not in (0, 1, 2) for v in self.labels):
            raise InvalidDiagram(f"labels must lie in {{0,1,2}}: {self.labels}")


def graded_dims(wd: WeightedDiagram) -> dict[int, int]:
    """Dimensions of the grading layers induced by the diagram labels.

    A root contributes to the layer given by its label-weighted coefficient
    sum; layer zero also holds the full Cartan subalgebra.
    """
    dims: dict[int, int] = {0: wd.spec.rank}
    for alpha in positive_roots(wd.spec):
        w = sum(m * l for m, l in zip(alpha, wd.labels))
        dims[w] = dims.get(w, 0) + 1
        dims[-w] = dims.get(-w, 0) + 1
    return dict(sorted(dims.items()))


def levi_nodes(wd: WeightedDiagram) -> tuple[int, ...]:
    """1-based indices of the zero-labelled nodes (the Levi sub-diagram)."""
    return tuple(i + 1 for i, v in enumerate(wd.labels) if v == 0)


def center_dim(wd: WeightedDiagram) -> int:
    """Dimension of the centre of the zero layer: the nonzero-label count."""
    return sum(1 for v in wd.labels if v != 0)


def _induced_cartan(spec: CartanSpec, nodes: tuple[int, ...]) -> CartanMatrix:
    full = cartan_matrix(spec)
    idx = [i - 1 for i in nodes]
    return tuple(tuple(full[a][b] for b in idx) for a in idx)


def levi_semisimple_dim(wd: WeightedDiagram) -> int:
    """Dimension of the semisimple algebra on the zero-labelled nodes."""
    nodes = levi_nodes(wd)
    if not nodes:
        return 0
    sub = _induced_cartan(wd.spec, nodes)
    return len(nodes) + 2 * len(_positive_roots_from_cartan(sub))


def _component_label(sub: CartanMatrix, nodes: list[int]) -> str:
    """Classify one connected simply-laced component by its shape."""
    k = len(nodes)
    degrees = {
        a: sum(1 for b in nodes if b != a and sub[a][b] != 0) for a in nodes
    }
    branch = [a for a in nodes if degrees[a] >= 3]
    if not branch:
        return f"A{k}"
    if len(branch) > 1 or degrees[branch[0]] > 3:
        return f"rank-{k} diagram"
    hub = branch[0]
    arms = []
    for start in (b for b in nodes if sub[hub][b] != 0 and b != hub):
        length = 1
        prev, cur = hub, start
        while True:
            nxt = [b for b in nodes if b not in (prev,) and b != cur and sub[cur][b] != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{k}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    return f"rank-{k} diagram"


def levi_type(wd: WeightedDiagram) -> str:
    """Human-readable type of the Levi sub-diagram, e.g. 'A5' or 'D6+A1'."""
    nodes = levi_nodes(wd)
    if not nodes:
        return "trivial"
    sub = _induced_cartan(wd.spec, nodes)
    k = len(nodes)
    seen: set[int] = set()
    labels = []
    for start in range(k):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            a = queue.pop()
            for b in range(k):
                if b not in seen and sub[a][b] != 0:
                    seen.add(b)
                    comp.append(b)
                    queue.append(b)
        labels.append(_component_label(sub, sorted(comp)))

    def sort_key(lbl: str):
        if len(lbl) > 1 and lbl[1:].isdigit():
            return (lbl[0], -int(lbl[1:]))
        return (lbl, 0)

    labels.sort(key=sort_key)
    return "+".join(labels)
