"""Finite, dimension-truncated simplicial sets.

A simplicial set carries explicit per-dimension simplex tables together
with face and degeneracy tables; nothing above trunc_dim is ever
materialized.  Degenerate simplices are stored explicitly, with
degeneracy detected from the stored tables.  Constructors cover the
standard simplex, its boundary, and its horns, all indexed in
lexicographic order of the underlying monotone maps so output is stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import delta
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class SimplexId:
    dim: int
    index: int


@dataclass(frozen=True)
class SimplicialSet:
    trunc_dim: int
    labels: tuple[tuple[str, ...], ...]
    # faces[n][x] = (d_0 x, ..., d_n x) for 1 <= n <= trunc_dim; faces[0] = ()
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    # degeneracies[n][x] = (s_0 x, ..., s_n x) for 0 <= n < trunc_dim
    degeneracies: tuple[tuple[tuple[int, ...], ...], ...]

    def size(self, n: int) -> int:
        if not 0 <= n <= self.trunc_dim:
            return 0
        return len(self.labels[n])

    def simplex_id(self, n: int, x: int) -> SimplexId:
        if not 0 <= x < self.size(n):
            raise ValueError(f"no simplex {x} in dimension {n}")
        return SimplexId(n, x)

    def face(self, n: int, x: int, i: int) -> int:
        return self.faces[n][x][i]

    def degeneracy(self, n: int, x: int, i: int) -> int:
        return self.degeneracies[n][x][i]

    def label(self, n: int, x: int) -> str:
        return self.labels[n][x]

    def degenerate_flags(self, n: int) -> tuple[bool, ...]:
        """True where the n-simplex is an image of some degeneracy map."""
        if n == 0 or n > self.trunc_dim:
            return tuple(False for _ in range(self.size(n)))
        hit = [False] * self.size(n)
        for x in range(self.size(n - 1)):
            for y in self.degeneracies[n - 1][x]:
                hit[y] = True
        return tuple(hit)

    def is_degenerate(self, n: int, x: int) -> bool:
        return self.degenerate_flags(n)[x]

    def nondegenerate(self, n: int) -> tuple[int, ...]:
        flags = self.degenerate_flags(n)
        return tuple(x for x in range(self.size(n)) if not flags[x])

    def degeneracy_preimage(self, n: int, y: int):
        """Some (x, i) with s_i x = y for a degenerate n-simplex y, else None."""
        if n == 0:
            return None
        for x in range(self.size(n - 1)):
            row = self.degeneracies[n - 1][x]
            for i, img in enumerate(row):
                if img == y:
                    return x, i
        return None

    def validate(self) -> list[str]:
        """All simplicial identities that fit inside the truncation; empty list means valid."""
        bad = []
        N = self.trunc_dim
        for n in range(N + 1):
            count = self.size(n)
            if n >= 1 and len(self.faces[n]) != count:
                bad.append(f"dim {n}: face table size mismatch")
            if n < N and len(self.degeneracies[n]) != count:
                bad.append(f"dim {n}: degeneracy table size mismatch")

        # d_i d_j = d_{j-1} d_i  for i < j
        for n in range(2, N + 1):
            for x in range(self.size(n)):
                for j in range(1, n + 1):
                    for i in range(j):
                        lhs = self.face(n - 1, self.face(n, x, j), i)
                        rhs = self.face(n - 1, self.face(n, x, i), j - 1)
                        if lhs != rhs:
                            bad.append(f"d{i} d{j} != d{j-1} d{i} at dim {n} simplex {x}")
        # s_i s_j = s_{j+1} s_i  for i <= j
        for n in range(N - 1):
            for x in range(self.size(n)):
                for j in range(n + 1):
                    for i in range(j + 1):
                        lhs = self.degeneracy(n + 1, self.degeneracy(n, x, j), i)
                        rhs = self.degeneracy(n + 1, self.degeneracy(n, x, i), j + 1)
                        if lhs != rhs:
                            bad.append(f"s{i} s{j} != s{j+1} s{i} at dim {n} simplex {x}")
        # d_i s_j mixed identities (includes the round-trip d_i s_i = d_{i+1} s_i = id)
        for n in range(N):
            for x in range(self.size(n)):
                for j in range(n + 1):
                    sx = self.degeneracy(n, x, j)
                    for i in range(n + 2):
                        lhs = self.face(n + 1, sx, i)
                        if i == j or i == j + 1:
                            rhs = x
                        elif i < j:
                            rhs = self.degeneracy(n - 1, self.face(n, x, i), j - 1)
                        else:
                            rhs = self.degeneracy(n - 1, self.face(n, x, i - 1), j)
                        if lhs != rhs:
                            bad.append(f"d{i} s{j} identity fails at dim {n} simplex {x}")
        return bad


def standard_simplex(n: int, trunc: int) -> SimplicialSet:
    """The standard simplex as monotone maps into [n], truncated at trunc."""
    if n < 0 or trunc < n:
        raise ValueError("need n >= 0 and trunc >= n")
    tables = []
    index_of = []
    for m in range(trunc + 1):
        maps = list(delta.all_monotone_maps(m, n))
        tables.append(maps)
        index_of.append({f.values: k for k, f in enumerate(maps)})

    labels = tuple(
        tuple(",".join(str(v) for v in f.values) for f in tables[m])
        for m in range(trunc + 1)
    )
    faces = [()]
    for m in range(1, trunc + 1):
        rows = []
        for f in tables[m]:
            row = []
            for i in range(m + 1):
                df = delta.compose(f, delta.as_map(delta.coface(i, m)))
                row.append(index_of[m - 1][df.values])
            rows.append(tuple(row))
        faces.append(tuple(rows))
    degeneracies = []
    for m in range(trunc):
        rows = []
        for f in tables[m]:
            row = []
            for i in range(m + 1):
                sf = delta.compose(f, delta.as_map(delta.codegeneracy(i, m)))
                row.append(index_of[m + 1][sf.values])
            rows.append(tuple(row))
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    return SimplicialSet(trunc, labels, tuple(faces), tuple(degeneracies))


def _simplex_map_tables(n: int, trunc: int):
    """Monotone maps [m] -> [n] per dimension, matching standard_simplex indexing."""
    return [list(delta.all_monotone_maps(m, n)) for m in range(trunc + 1)]


@dataclass(frozen=True)
class SimplicialSubset:
    ambient: SimplicialSet
    members: tuple[tuple[int, ...], ...]

    def size(self, n: int) -> int:
        return len(self.members[n])

    def contains(self, n: int, x: int) -> bool:
        return x in set(self.members[n])


def boundary(n: int, trunc: int) -> SimplicialSubset:
    """The non-surjective monotone maps into [n], as a subset of the standard simplex."""
    if n < 1 or trunc < n:
        raise ValueError("need n >= 1 and trunc >= n")
    ambient = standard_simplex(n, trunc)
    tables = _simplex_map_tables(n, trunc)
    members = tuple(
        tuple(k for k, f in enumerate(tables[m]) if not f.is_surjective())
        for m in range(trunc + 1)
    )
    return SimplicialSubset(ambient, members)


def horn(n: int, k: int, trunc: int) -> SimplicialSubset:
    """The k-horn of the standard n-simplex: maps whose image plus {k} misses a vertex."""
    if n < 1 or trunc < n:
        raise ValueError("need n >= 1 and trunc >= n")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} outside [0, {n}]")
    ambient = standard_simplex(n, trunc)
    tables = _simplex_map_tables(n, trunc)
    full = set(range(n + 1))
    members = tuple(
        tuple(
            idx
            for idx, f in enumerate(tables[m])
            if not full <= (set(f.values) | {k})
        )
        for m in range(trunc + 1)
    )
    return SimplicialSubset(ambient, members)


def is_closed_subset(s: SimplicialSubset) -> bool:
    """Closure under every face and degeneracy map within the truncation."""
    sets = [set(level) for level in s.members]
    amb = s.ambient
    for n in range(amb.trunc_dim + 1):
        for x in sets[n]:
            if not 0 <= x < amb.size(n):
                raise ValueError(f"member {x} not a dim-{n} simplex of the ambient set")
            if n >= 1:
                for i in range(n + 1):
                    if amb.face(n, x, i) not in sets[n - 1]:
                        return False
            if n < amb.trunc_dim:
                for i in range(n + 1):
                    if amb.degeneracy(n, x, i) not in sets[n + 1]:
                        return False
    return True


def subset_as_sset(s: SimplicialSubset) -> tuple[SimplicialSet, tuple[tuple[int, ...], ...]]:
    """Reindex a closed subset as a standalone simplicial set.

    Returns the new set plus, per dimension, the tuple sending each new
    index to its ambient index (the inclusion map data).
    """
    if not is_closed_subset(s):
        raise ValueError("subset is not closed under faces and degeneracies")
    amb = s.ambient
    inclusion = tuple(tuple(level) for level in s.members)
    back = [
        {a: k for k, a in enumerate(level)}
        for level in inclusion
    ]
    labels = tuple(
        tuple(amb.label(n, a) for a in inclusion[n]) for n in range(amb.trunc_dim + 1)
    )
    faces = [()]
    for n in range(1, amb.trunc_dim + 1):
        rows = []
        for a in inclusion[n]:
            rows.append(tuple(back[n - 1][amb.face(n, a, i)] for i in range(n + 1)))
        faces.append(tuple(rows))
    degeneracies = []
    for n in range(amb.trunc_dim):
        rows = []
        for a in inclusion[n]:
            rows.append(tuple(back[n + 1][amb.degeneracy(n, a, i)] for i in range(n + 1)))
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    new = SimplicialSet(amb.trunc_dim, labels, tuple(faces), tuple(degeneracies))
    return new, inclusion


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    assignment: tuple[tuple[int, ...], ...]

    def apply(self, n: int, x: int) -> int:
        return self.assignment[n][x]

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self):
        return hash(self.assignment)


def identity_map(x: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(
        x, x, tuple(tuple(range(x.size(n))) for n in range(x.trunc_dim + 1))
    )


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    if g.source is not f.target and g.source != f.target:
        raise DimensionMismatchError("composing simplicial maps with mismatched middle object")
    assignment = tuple(
        tuple(g.assignment[n][y] for y in f.assignment[n])
        for n in range(f.source.trunc_dim + 1)
    )
    return SimplicialMap(f.source, g.target, assignment)


def check_simplicial_map(f: SimplicialMap) -> list[str]:
    """Every (simplex, operator) pair where f fails to commute; empty means valid."""
    bad = []
    src, tgt = f.source, f.target
    if tgt.trunc_dim < src.trunc_dim:
        bad.append("target truncation below source truncation")
        return bad
    if len(f.assignment) != src.trunc_dim + 1:
        bad.append("assignment does not cover every dimension")
        return bad
    for n in range(src.trunc_dim + 1):
        if len(f.assignment[n]) != src.size(n):
            bad.append(f"dim {n}: assignment not total")
            return bad
        for y in f.assignment[n]:
            if not 0 <= y < tgt.size(n):
                bad.append(f"dim {n}: image {y} out of range")
                return bad
    for n in range(1, src.trunc_dim + 1):
        for x in range(src.size(n)):
            for i in range(n + 1):
                if f.apply(n - 1, src.face(n, x, i)) != tgt.face(n, f.apply(n, x), i):
                    bad.append(f"face d{i} not preserved at dim {n} simplex {x}")
    for n in range(src.trunc_dim):
        for x in range(src.size(n)):
            for i in range(n + 1):
                if f.apply(n + 1, src.degeneracy(n, x, i)) != tgt.degeneracy(n, f.apply(n, x), i):
                    bad.append(f"degeneracy s{i} not preserved at dim {n} simplex {x}")
    return bad


def disjoint_union(x: SimplicialSet, y: SimplicialSet) -> SimplicialSet:
    if x.trunc_dim != y.trunc_dim:
        raise DimensionMismatchError("disjoint union needs equal truncations")
    N = x.trunc_dim
    labels = tuple(x.labels[n] + y.labels[n] for n in range(N + 1))
    faces = [()]
    for n in range(1, N + 1):
        off = x.size(n - 1)
        rows = list(x.faces[n]) + [
            tuple(v + off for v in row) for row in y.faces[n]
        ]
        faces.append(tuple(rows))
    degeneracies = []
    for n in range(N):
        off = x.size(n + 1)
        rows = list(x.degeneracies[n]) + [
            tuple(v + off for v in row) for row in y.degeneracies[n]
        ]
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    return SimplicialSet(N, labels, tuple(faces), tuple(degeneracies))


def permute_simplices(x: SimplicialSet, perms) -> SimplicialSet:
    """Reindex each dimension by the given permutations (new index = perms[n][old])."""
    N = x.trunc_dim
    inv = []
    for n in range(N + 1):
        p = perms[n]
        if sorted(p) != list(range(x.size(n))):
            raise ValueError(f"dim {n}: not a permutation")
        q = [0] * len(p)
        for old, new in enumerate(p):
            q[new] = old
        inv.append(q)
    labels = tuple(
        tuple(x.labels[n][inv[n][k]] for k in range(x.size(n))) for n in range(N + 1)
    )
    faces = [()]
    for n in range(1, N + 1):
        rows = []
        for k in range(x.size(n)):
            old = inv[n][k]
            rows.append(tuple(perms[n - 1][v] for v in x.faces[n][old]))
        faces.append(tuple(rows))
    degeneracies = []
    for n in range(N):
        rows = []
        for k in range(x.size(n)):
            old = inv[n][k]
            rows.append(tuple(perms[n + 1][v] for v in x.degeneracies[n][old]))
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    return SimplicialSet(N, labels, tuple(faces), tuple(degeneracies))
