"""Integer homology of finite truncated simplicial sets.

The chain complex is normalized: bases are the nondegenerate simplices
and degenerate faces are dropped from the alternating boundary sum.
Homology groups come from Smith normal form computed with arbitrary-
precision integers and pivot-magnitude minimization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceededError, TruncationError
from .fincat import FiniteCategory, nerve, _thin_category
from .sset import SimplicialSet


@dataclass(frozen=True)
class ChainComplex:
    top_dim: int
    ranks: tuple[int, ...]
    boundaries: tuple  # boundaries[n] = rows of the rank(n-1) x rank(n) matrix

    def boundary_shape(self, n: int) -> tuple[int, int]:
        return self.ranks[n - 1], self.ranks[n]

    def validate(self) -> list[str]:
        """The composite of consecutive boundaries must vanish."""
        bad = []
        for n in range(2, self.top_dim + 1):
            rows_hi = self.boundaries[n]
            rows_lo = self.boundaries[n - 1]
            r_out, r_mid = self.boundary_shape(n - 1)
            _, r_in = self.boundary_shape(n)
            for j in range(r_in):
                col = [rows_hi[i][j] for i in range(r_mid)]
                for i in range(r_out):
                    if sum(rows_lo[i][k] * col[k] for k in range(r_mid)) != 0:
                        bad.append(f"d.d != 0 at dimension {n}, column {j}, row {i}")
                        break
        return bad


def chain_complex(x: SimplicialSet) -> ChainComplex:
    """Normalized chains: nondegenerate bases, degenerate faces dropped."""
    basis = []
    back = []
    for n in range(x.trunc_dim + 1):
        nd = x.nondegenerate(n)
        basis.append(nd)
        back.append({amb: k for k, amb in enumerate(nd)})
    ranks = tuple(len(b) for b in basis)
    boundaries = [()]
    for n in range(1, x.trunc_dim + 1):
        rows = [[0] * ranks[n] for _ in range(ranks[n - 1])]
        for col, amb in enumerate(basis[n]):
            for i in range(n + 1):
                face = x.face(n, amb, i)
                row = back[n - 1].get(face)
                if row is not None:
                    rows[row][col] += -1 if i % 2 else 1
        boundaries.append(tuple(tuple(r) for r in rows))
    return ChainComplex(x.trunc_dim, ranks, tuple(boundaries))


def smith_invariant_factors(rows, shape=None) -> list[int]:
    """Invariant factors (a divisibility chain) of an integer matrix.

    Classic row/column reduction with the smallest-magnitude nonzero
    entry as pivot; Python integers keep every intermediate exact.
    """
    a = [list(r) for r in rows]
    if shape is not None:
        m, n = shape
    else:
        m = len(a)
        n = len(a[0]) if a else 0
    if m == 0 or n == 0:
        return []
    factors = []
    t = 0
    while t < min(m, n):
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v != 0 and (pos is None or abs(v) < abs(a[pos[0]][pos[1]])):
                    pos = (i, j)
        if pos is None:
            break
        i0, j0 = pos
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:  # remainder strictly smaller: promote it
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            col_clear = all(a[i][t] == 0 for i in range(t + 1, m))
            row_clear = all(a[t][j] == 0 for j in range(t + 1, n))
            if not dirty and col_clear and row_clear:
                break
        pivot = a[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        factors.append(abs(pivot))
        t += 1
    return factors


@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    free_rank: int
    torsion: tuple[int, ...]
    truncation_caveat: bool = False

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        body = " ⊕ ".join(parts) if parts else "0"
        flag = " (needs higher truncation for kernel completeness)" if self.truncation_caveat else ""
        return f"H_{self.dim} = {body}{flag}"


def homology(cc: ChainComplex, dim: int) -> HomologyGroup:
    """ker/im over Z via Smith normal form.

    free_rank = nullity of the outgoing boundary minus the rank of the
    incoming one; torsion collects the incoming invariant factors above 1.
    The verdict at dim = top_dim - 1 carries a truncation caveat flag.
    """
    if not 0 <= dim < cc.top_dim:
        raise TruncationError(
            f"homology needs 0 <= dim < top_dim = {cc.top_dim}, got {dim}"
        )
    if dim == 0:
        nullity = cc.ranks[0]
    else:
        out_rank = len(
            smith_invariant_factors(cc.boundaries[dim], cc.boundary_shape(dim))
        )
        nullity = cc.ranks[dim] - out_rank
    incoming = smith_invariant_factors(
        cc.boundaries[dim + 1], cc.boundary_shape(dim + 1)
    )
    free_rank = nullity - len(incoming)
    torsion = tuple(d for d in incoming if d > 1)
    return HomologyGroup(dim, free_rank, torsion, dim == cc.top_dim - 1)


def classifying_space_homology(
    cat: FiniteCategory, trunc: int, dim: int
) -> HomologyGroup:
    """Homology of the nerve, the combinatorial stand-in for the classifying space."""
    if dim >= trunc - 1:
        raise TruncationError(
            f"classifying-space homology needs dim < trunc - 1 (got dim {dim}, trunc {trunc})"
        )
    return homology(chain_complex(nerve(cat, trunc)), dim)


def subset_lattice_category(n_vars: int, var_names=None) -> FiniteCategory:
    """The subset lattice of the variable set under inclusion, as a thin category."""
    if var_names is None:
        var_names = tuple(chr(ord("a") + i) for i in range(n_vars))
    names = []
    for mask in range(1 << n_vars):
        inner = "".join(var_names[i] for i in range(n_vars) if mask & (1 << i))
        names.append("{" + inner + "}")
    return _thin_category(tuple(names), lambda a, b: a & b == a)


def discrete_category(n_objects: int, prefix: str = "p") -> FiniteCategory:
    return _thin_category(
        tuple(f"{prefix}{i}" for i in range(n_objects)), lambda a, b: a == b
    )


def imset_poset_homology(n_vars: int, dim: int, reading: str = "order") -> HomologyGroup:
    """Homology of the imset carrier over n_vars variables.

    reading="order" treats the subset lattice as a poset category and
    takes its classifying space; reading="discrete" treats the lattice
    points as a discrete space (2^n components, nothing higher).
    """
    if n_vars > 4:
        raise BoundExceededError("imset_poset_homology guarded at n_vars <= 4")
    trunc = dim + 2
    if reading == "order":
        cat = subset_lattice_category(n_vars)
    elif reading == "discrete":
        cat = discrete_category(1 << n_vars, prefix="s")
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return classifying_space_homology(cat, trunc, dim)
