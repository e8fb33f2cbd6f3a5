"""The ordinal category: finite ordinals [n] = {0, ..., n} and monotone maps.

Maps are stored as explicit value vectors so that every operator identity
can be checked by pointwise evaluation, which is the ground truth used
throughout.  The elementary generators are the cofaces delta_i (injections
skipping i) and the codegeneracies sigma_j (surjections repeating j);
every monotone map factors canonically as codegeneracies followed by
cofaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import DimensionMismatchError

COFACE = "coface"
CODEGENERACY = "codegeneracy"


class ElementaryKind(str, Enum):
    COFACE = COFACE
    CODEGENERACY = CODEGENERACY


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving map [m] -> [n]; dom_size = m+1, cod_size = n+1."""

    dom_size: int
    cod_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.dom_size < 1 or self.cod_size < 1:
            raise ValueError("ordinals are nonempty: sizes must be >= 1")
        if len(self.values) != self.dom_size:
            raise ValueError(
                f"expected {self.dom_size} values, got {len(self.values)}"
            )
        for k, v in enumerate(self.values):
            if not 0 <= v < self.cod_size:
                raise ValueError(f"value {v} at position {k} outside [0, {self.cod_size - 1}]")
            if k > 0 and v < self.values[k - 1]:
                raise ValueError(f"values not non-decreasing at position {k}")

    def __call__(self, j: int) -> int:
        return self.values[j]

    @property
    def dom(self) -> int:
        """The m of the domain ordinal [m]."""
        return self.dom_size - 1

    @property
    def cod(self) -> int:
        return self.cod_size - 1

    def is_identity(self) -> bool:
        return self.dom_size == self.cod_size and all(
            v == k for k, v in enumerate(self.values)
        )

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.dom_size

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod_size

    def to_text(self) -> str:
        """Serialize as `m n : v0 v1 ... vm`."""
        vals = " ".join(str(v) for v in self.values)
        return f"{self.dom} {self.cod} : {vals}"

    @staticmethod
    def from_text(text: str) -> "MonotoneMap":
        head, _, tail = text.partition(":")
        try:
            m, n = (int(tok) for tok in head.split())
            values = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise ValueError(f"bad monotone-map text {text!r}") from exc
        return MonotoneMap(m + 1, n + 1, values)


def identity(n: int) -> MonotoneMap:
    """The identity on [n]."""
    return MonotoneMap(n + 1, n + 1, tuple(range(n + 1)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """g after f; requires cod(f) = dom(g)."""
    if f.cod_size != g.dom_size:
        raise DimensionMismatchError(
            f"cannot compose: f has codomain [{f.cod}], g has domain [{g.dom}]"
        )
    return MonotoneMap(f.dom_size, g.cod_size, tuple(g.values[v] for v in f.values))


def all_monotone_maps(m: int, n: int):
    """All monotone maps [m] -> [n] in lexicographic order of value vectors."""
    for values in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield MonotoneMap(m + 1, n + 1, values)


@dataclass(frozen=True)
class ElementaryMap:
    """A coface delta_i : [dim-1] -> [dim] or codegeneracy sigma_j : [dim+1] -> [dim]."""

    kind: ElementaryKind
    index: int
    dim: int

    def __post_init__(self):
        if not 0 <= self.index <= self.dim:
            raise ValueError(f"index {self.index} outside [0, {self.dim}]")
        if self.kind is ElementaryKind.COFACE and self.dim < 1:
            raise ValueError("coface needs dim >= 1")


def coface(i: int, n: int) -> ElementaryMap:
    return ElementaryMap(ElementaryKind.COFACE, i, n)


def codegeneracy(j: int, n: int) -> ElementaryMap:
    return ElementaryMap(ElementaryKind.CODEGENERACY, j, n)


def as_map(e: ElementaryMap) -> MonotoneMap:
    """Realize an elementary generator as a concrete monotone map.

    Coface(i, n) is the injection [n-1] -> [n] whose image skips i;
    Codegeneracy(j, n) is the surjection [n+1] -> [n] sending both j and
    j+1 to j.
    """
    if e.kind is ElementaryKind.COFACE:
        n, i = e.dim, e.index
        return MonotoneMap(n, n + 1, tuple(j if j < i else j + 1 for j in range(n)))
    n, j = e.dim, e.index
    return MonotoneMap(n + 2, n + 1, tuple(k if k <= j else k - 1 for k in range(n + 2)))


def decompose(f: MonotoneMap) -> tuple[ElementaryMap, ...]:
    """Canonical factorization of f into elementary maps, applied in order.

    The sequence applies all codegeneracies first and then all cofaces.
    The codegeneracy indices are the repeated positions {j : f(j) = f(j+1)}
    (applied largest first) and the coface indices are the values missing
    from the image (applied smallest first); with those application orders
    the raw index sets compose back to f without any index shifting.
    The identity decomposes to the empty sequence.
    """
    repeats = [j for j in range(f.dom) if f.values[j] == f.values[j + 1]]
    image = set(f.values)
    missing = [i for i in range(f.cod_size) if i not in image]
    seq = []
    card = f.dom_size
    for j in reversed(repeats):
        seq.append(codegeneracy(j, card - 2))
        card -= 1
    for i in missing:
        seq.append(coface(i, card))
        card += 1
    return tuple(seq)


def recompose(seq, dom: int) -> MonotoneMap:
    """Fold a sequence of elementary maps, first element applied first."""
    acc = identity(dom)
    for e in seq:
        acc = compose(as_map(e), acc)
    return acc


@dataclass(frozen=True)
class RelationViolation:
    family: str
    n: int
    i: int
    j: int
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]


@dataclass(frozen=True)
class RelationReport:
    max_n: int
    checked: int
    violations: tuple[RelationViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_simplicial_relations(max_n: int) -> RelationReport:
    """Check the coface/codegeneracy identity families pointwise up to max_n.

    Families, with delta_i = coface and sigma_j = codegeneracy:
      delta_j . delta_i = delta_i . delta_{j-1}            for i < j
      sigma_j . sigma_i = sigma_i . sigma_{j+1}            for i <= j
      sigma_j . delta_i = delta_i . sigma_{j-1}            for i < j
                        = identity                          for i = j, j+1
                        = delta_{i-1} . sigma_j             for i > j + 1
    Both sides of every instance are evaluated pointwise; nothing is taken
    from a printed relation table.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    checked = 0
    violations = []

    def record(family, n, i, j, lhs, rhs):
        nonlocal checked
        checked += 1
        if lhs.values != rhs.values:
            violations.append(
                RelationViolation(family, n, i, j, lhs.values, rhs.values)
            )

    # delta_j . delta_i : [n-2] -> [n]
    for n in range(2, max_n + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = compose(as_map(coface(j, n)), as_map(coface(i, n - 1)))
                rhs = compose(as_map(coface(i, n)), as_map(coface(j - 1, n - 1)))
                record("delta-delta", n, i, j, lhs, rhs)

    # sigma_j . sigma_i : [n+2] -> [n]
    for n in range(max_n + 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = compose(as_map(codegeneracy(j, n)), as_map(codegeneracy(i, n + 1)))
                rhs = compose(as_map(codegeneracy(i, n)), as_map(codegeneracy(j + 1, n + 1)))
                record("sigma-sigma", n, i, j, lhs, rhs)

    # sigma_j . delta_i : [n] -> [n]
    for n in range(max_n + 1):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = compose(as_map(codegeneracy(j, n)), as_map(coface(i, n + 1)))
                if i < j:
                    rhs = compose(as_map(coface(i, n)), as_map(codegeneracy(j - 1, n - 1)))
                elif i in (j, j + 1):
                    rhs = identity(n)
                else:
                    rhs = compose(as_map(coface(i - 1, n)), as_map(codegeneracy(j, n - 1)))
                record("sigma-delta", n, i, j, lhs, rhs)

    return RelationReport(max_n, checked, tuple(violations))
