"""Causal DAG models: imsets, Markov equivalence, d-separation, separoids.

Variable subsets are bitmasks over the ordered variable list, so imsets
are sparse (mask, value) tables with canonical equality, d-separation is
bit arithmetic over the moralized ancestral graph, and the lifted
conditional-independence relation lives on the full subset lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceededError


def find_cycle(n_vars: int, edges) -> list[int] | None:
    """A directed cycle as a vertex list, or None when acyclic."""
    children = [[] for _ in range(n_vars)]
    for a, b in edges:
        children[a].append(b)
    color = [0] * n_vars  # 0 fresh, 1 on stack, 2 done
    stack = []

    def visit(v):
        color[v] = 1
        stack.append(v)
        for w in children[v]:
            if color[w] == 1:
                return stack[stack.index(w):] + [w]
            if color[w] == 0:
                cyc = visit(w)
                if cyc:
                    return cyc
        stack.pop()
        color[v] = 2
        return None

    for v in range(n_vars):
        if color[v] == 0:
            cyc = visit(v)
            if cyc:
                return cyc
    return None


@dataclass(frozen=True)
class Dag:
    vars: tuple[str, ...]
    edges: frozenset  # ordered (parent, child) index pairs

    def __post_init__(self):
        n = len(self.vars)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self loop on variable {self.vars[a]}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError("edge endpoint out of range")
        cyc = find_cycle(n, self.edges)
        if cyc:
            names = " -> ".join(self.vars[v] for v in cyc)
            raise ValueError(f"cycle: {names}")

    @property
    def n(self) -> int:
        return len(self.vars)

    def parent_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for a, b in self.edges:
            masks[b] |= 1 << a
        return tuple(masks)

    def adjacent(self, a: int, b: int) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges


def dag(var_names, edge_pairs) -> Dag:
    names = tuple(var_names)
    index = {v: i for i, v in enumerate(names)}
    edges = frozenset((index[a], index[b]) for a, b in edge_pairs)
    return Dag(names, edges)


@dataclass(frozen=True)
class Imset:
    """Sparse integer-valued function on subsets of the variable set."""

    vars: tuple[str, ...]
    entries: tuple  # ((mask, value), ...) sorted by mask, zero values dropped

    def value(self, mask: int):
        for m, v in self.entries:
            if m == mask:
                return v
        return 0

    def total(self):
        return sum(v for _, v in self.entries)


def make_imset(var_names, table) -> Imset:
    entries = tuple(sorted((m, v) for m, v in table.items() if v != 0))
    return Imset(tuple(var_names), entries)


def standard_imset(g: Dag) -> Imset:
    """u_G = delta_V - delta_empty + sum_i (delta_{Pa_i} - delta_{i u Pa_i})."""
    table = {}

    def bump(mask, v):
        table[mask] = table.get(mask, 0) + v

    full = (1 << g.n) - 1
    bump(full, 1)
    bump(0, -1)
    for i, pa in enumerate(g.parent_masks()):
        bump(pa, 1)
        bump(pa | (1 << i), -1)
    return make_imset(g.vars, table)


def markov_equivalent(g1: Dag, g2: Dag) -> bool:
    if g1.vars != g2.vars:
        raise ValueError("variable sets differ")
    return standard_imset(g1) == standard_imset(g2)


def skeleton_vstructures(g: Dag):
    """The classical equivalence signature: skeleton plus v-structures."""
    skeleton = frozenset(frozenset(e) for e in g.edges)
    vees = set()
    for c in range(g.n):
        parents = [a for a, b in g.edges if b == c]
        for a, b in itertools.combinations(sorted(parents), 2):
            if not g.adjacent(a, b):
                vees.add((a, b, c))
    return skeleton, frozenset(vees)


def all_dags(n_vars: int):
    """Every labeled DAG on n_vars variables, deterministic order."""
    names = tuple(chr(ord("a") + i) for i in range(n_vars))
    pairs = list(itertools.combinations(range(n_vars), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        edges = set()
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                edges.add((a, b))
            elif c == 2:
                edges.add((b, a))
        if find_cycle(n_vars, edges) is None:
            yield Dag(names, frozenset(edges))


@dataclass(frozen=True)
class ClassesReport:
    n_vars: int
    n_dags: int
    n_classes: int
    class_sizes: tuple[int, ...]
    oracle_agrees: bool
    disagreement: tuple | None  # (imset partition key mismatch witness)


def equivalence_classes(n_vars: int) -> ClassesReport:
    """Partition all labeled DAGs by imset equality, cross-checked against
    the skeleton + v-structure oracle."""
    if n_vars > 5:
        raise BoundExceededError("equivalence_classes guarded at n_vars <= 5")
    by_imset = {}
    by_oracle = {}
    count = 0
    for idx, g in enumerate(all_dags(n_vars)):
        count += 1
        by_imset.setdefault(standard_imset(g).entries, []).append(idx)
        by_oracle.setdefault(skeleton_vstructures(g), []).append(idx)
    imset_parts = sorted(tuple(v) for v in by_imset.values())
    oracle_parts = sorted(tuple(v) for v in by_oracle.values())
    agrees = imset_parts == oracle_parts
    witness = None
    if not agrees:
        for a, b in zip(imset_parts, oracle_parts):
            if a != b:
                witness = (a, b)
                break
    sizes = tuple(sorted((len(p) for p in imset_parts), reverse=True))
    return ClassesReport(n_vars, count, len(imset_parts), sizes, agrees, witness)


# --- d-separation -----------------------------------------------------------

def _ancestor_closure(parent_masks, seed: int) -> int:
    out = seed
    changed = True
    while changed:
        changed = False
        acc = out
        for i, pa in enumerate(parent_masks):
            if out & (1 << i):
                acc |= pa
        if acc != out:
            out = acc
            changed = True
    return out


def d_separation(g: Dag, x: int, y: int, z: int) -> bool:
    """Standard d-separation of variable sets given as bitmasks.

    True when every path between x and y is blocked by z; decided on the
    moralized ancestral graph.  Empty x or y is vacuously separated.
    """
    if x & y or x & z or y & z:
        raise ValueError("argument sets must be pairwise disjoint")
    if x == 0 or y == 0:
        return True
    parent_masks = g.parent_masks()
    keep = _ancestor_closure(parent_masks, x | y | z)
    adj = [0] * g.n
    for a, b in g.edges:
        if keep & (1 << a) and keep & (1 << b):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    for c in range(g.n):
        if not keep & (1 << c):
            continue
        pa = parent_masks[c] & keep
        ps = [i for i in range(g.n) if pa & (1 << i)]
        for a, b in itertools.combinations(ps, 2):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    # z removed, then reachability from x
    live = keep & ~z
    reached = x & live
    frontier = reached
    while frontier:
        nxt = 0
        for i in range(g.n):
            if frontier & (1 << i):
                nxt |= adj[i] & live
        frontier = nxt & ~reached
        reached |= frontier
    return not reached & y


@dataclass(frozen=True)
class TernaryRelation:
    """Triples over a join-semilattice of variable subsets (bitmasks)."""

    vars: tuple[str, ...]
    carrier: tuple[int, ...]
    triples: frozenset  # (x, y, z) bitmask triples

    def __post_init__(self):
        members = set(self.carrier)
        for triple in self.triples:
            if any(part not in members for part in triple):
                raise ValueError(f"triple {triple} references non-carrier elements")

    def holds(self, x: int, y: int, z: int) -> bool:
        return (x, y, z) in self.triples


def dsep_relation(g: Dag) -> TernaryRelation:
    """d-separation lifted to the full subset lattice.

    Overlaps are handled by shrinking both sides away from the
    conditioning set: (x, y, z) holds iff x\\z and y\\z are disjoint and
    d-separated given z.
    """
    n = g.n
    masks = tuple(range(1 << n))
    singles = list(range(n))
    pair_tab = {}
    for a, b in itertools.combinations(singles, 2):
        rest = [i for i in singles if i not in (a, b)]
        for bits in range(1 << len(rest)):
            zmask = 0
            for j, i in enumerate(rest):
                if bits & (1 << j):
                    zmask |= 1 << i
            pair_tab[(a, b, zmask)] = d_separation(g, 1 << a, 1 << b, zmask)

    def sep(x, y, z):
        a_side = x & ~z
        b_side = y & ~z
        if a_side & b_side:
            return False
        if a_side == 0 or b_side == 0:
            return True
        for a in singles:
            if not a_side & (1 << a):
                continue
            for b in singles:
                if not b_side & (1 << b):
                    continue
                key = (a, b, z) if a < b else (b, a, z)
                if not pair_tab[key]:
                    return False
        return True

    triples = frozenset(
        (x, y, z)
        for x in masks
        for y in masks
        for z in masks
        if sep(x, y, z)
    )
    return TernaryRelation(g.vars, masks, triples)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    holds: bool
    witness: tuple | None


@dataclass(frozen=True)
class SeparoidReport:
    results: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    def failed(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.results if not r.holds)


def _submasks(y: int):
    w = y
    while True:
        yield w
        if w == 0:
            return
        w = (w - 1) & y


def check_separoid(rel: TernaryRelation, strong: bool = False) -> SeparoidReport:
    """Exhaustive check of the separoid axioms over the carrier.

    S1 asks the carrier to be a join semi-lattice (here: closed under
    union, with inclusion as the order); P1-P5 are the separoid laws and
    P6 (strong only) additionally needs meets.
    """
    carrier = set(rel.carrier)
    results = []

    def axiom(name, holds, witness):
        results.append(AxiomResult(name, holds, witness))

    witness = None
    for x, y in itertools.product(rel.carrier, repeat=2):
        if x | y not in carrier:
            witness = (x, y)
            break
    axiom("S1", witness is None, witness)
    if strong:
        for x, y in itertools.product(rel.carrier, repeat=2):
            if x & y not in carrier:
                raise ValueError(
                    f"strong separoid needs a lattice carrier: meet of {x} and {y} missing"
                )

    witness = None
    for x, y in itertools.product(rel.carrier, repeat=2):
        if not rel.holds(x, y, x):
            witness = (x, y, x)
            break
    axiom("P1", witness is None, witness)

    witness = None
    for (x, y, z) in sorted(rel.triples):
        if not rel.holds(y, x, z):
            witness = (x, y, z)
            break
    axiom("P2", witness is None, witness)

    witness = None
    for (x, y, z) in sorted(rel.triples):
        for w in _submasks(y):
            if not rel.holds(x, w, z):
                witness = (x, y, z, w)
                break
        if witness:
            break
    axiom("P3", witness is None, witness)

    witness = None
    for (x, y, z) in sorted(rel.triples):
        for w in _submasks(y):
            if not rel.holds(x, y, z | w):
                witness = (x, y, z, w)
                break
        if witness:
            break
    axiom("P4", witness is None, witness)

    witness = None
    for (x, y, z) in sorted(rel.triples):
        for w in rel.carrier:
            if rel.holds(x, w, y | z) and not rel.holds(x, y | w, z):
                witness = (x, y, z, w)
                break
        if witness:
            break
    axiom("P5", witness is None, witness)

    if strong:
        witness = None
        for (x, y, z) in sorted(rel.triples):
            if witness:
                break
            for w in rel.carrier:
                if z | y == y and w | y == y:  # z <= y and w <= y
                    if rel.holds(x, y, w) and not rel.holds(x, y, z & w):
                        witness = (x, y, z, w)
                        break
        axiom("P6", witness is None, witness)

    return SeparoidReport(tuple(results))


# --- causal horns -----------------------------------------------------------

def horn_edge_set(n: int, k: int) -> tuple[tuple[int, int], ...]:
    """The vertex pairs (i, j), i < j, carried by the horn of the n-simplex."""
    full = set(range(n + 1))
    return tuple(
        (i, j)
        for i, j in itertools.combinations(range(n + 1), 2)
        if not full <= ({i, j} | {k})
    )


@dataclass(frozen=True)
class CausalHorn:
    """Partial orientation data on the edges of a horn."""

    n: int
    k: int
    pattern: tuple  # ((i, j, mark), ...) with mark in {"->", "<-", "?"}

    def __post_init__(self):
        expected = set(horn_edge_set(self.n, self.k))
        got = {(i, j) for i, j, _ in self.pattern}
        if got != expected:
            raise ValueError(
                f"pattern edges {sorted(got)} differ from horn edges {sorted(expected)}"
            )
        for i, j, mark in self.pattern:
            if mark not in ("->", "<-", "?"):
                raise ValueError(f"bad orientation mark {mark!r}")


def causal_fillers(h: CausalHorn, ci: TernaryRelation) -> list[Dag]:
    """All DAG completions of the horn pattern consistent with the
    conditional-independence relation.

    Consistency is exact over singleton-variable pairs: for every pair
    (a, b) and every conditioning subset z, d-separation in the
    completion holds iff the triple is in ci.
    """
    if h.n > 4:
        raise BoundExceededError("causal horns guarded at n <= 4")
    n_vertices = h.n + 1
    names = tuple(str(i) for i in range(n_vertices))
    fixed = []
    free = []
    for i, j, mark in sorted(h.pattern):
        if mark == "->":
            fixed.append((i, j))
        elif mark == "<-":
            fixed.append((j, i))
        else:
            free.append((i, j))
    for pair in itertools.combinations(range(n_vertices), 2):
        if pair not in {(i, j) for i, j, _ in h.pattern}:
            free.append(pair)
    free.sort()

    fillers = []
    for choice in itertools.product((0, 1, 2), repeat=len(free)):
        edges = set(fixed)
        for (i, j), c in zip(free, choice):
            if c == 1:
                edges.add((i, j))
            elif c == 2:
                edges.add((j, i))
        if find_cycle(n_vertices, edges) is not None:
            continue
        g = Dag(names, frozenset(edges))
        if _ci_consistent(g, ci):
            fillers.append(g)
    fillers.sort(key=lambda g: tuple(sorted(g.edges)))
    return fillers


def _ci_consistent(g: Dag, ci: TernaryRelation) -> bool:
    for a, b in itertools.combinations(range(g.n), 2):
        rest = [i for i in range(g.n) if i not in (a, b)]
        for bits in range(1 << len(rest)):
            z = 0
            for pos, i in enumerate(rest):
                if bits & (1 << pos):
                    z |= 1 << i
            separated = d_separation(g, 1 << a, 1 << b, z)
            declared = ci.holds(1 << a, 1 << b, z) or ci.holds(1 << b, 1 << a, z)
            if separated != declared:
                return False
    return True


def singleton_ci(var_names, triples) -> TernaryRelation:
    """Relation from (a, b, z-iterable) name triples, symmetrically closed."""
    names = tuple(var_names)
    index = {v: i for i, v in enumerate(names)}
    out = set()
    for a, b, zs in triples:
        x = 1 << index[a]
        y = 1 << index[b]
        z = 0
        for v in zs:
            z |= 1 << index[v]
        out.add((x, y, z))
        out.add((y, x, z))
    return TernaryRelation(names, tuple(range(1 << len(names))), frozenset(out))


# --- elementary imsets ------------------------------------------------------

def elementary_imsets(n_vars: int):
    """u_{(a,b|A)} = d_{abA} + d_A - d_{aA} - d_{bA} over all pairs and contexts."""
    out = []
    for a, b in itertools.combinations(range(n_vars), 2):
        rest = [i for i in range(n_vars) if i not in (a, b)]
        for bits in range(1 << len(rest)):
            amask = 0
            for pos, i in enumerate(rest):
                if bits & (1 << pos):
                    amask |= 1 << i
            table = {
                amask | (1 << a) | (1 << b): 1,
                amask: 1,
            }
            table[amask | (1 << a)] = table.get(amask | (1 << a), 0) - 1
            table[amask | (1 << b)] = table.get(amask | (1 << b), 0) - 1
            out.append(((a, b, amask), table))
    return out


def elementary_decomposition(u: Imset, max_coeff: int = 4):
    """A nonnegative integer combination of elementary imsets equal to u,
    or None if the bounded search finds none."""
    n_vars = len(u.vars)
    elems = elementary_imsets(n_vars)
    target = {m: v for m, v in u.entries}

    def residual_zero(res):
        return all(v == 0 for v in res.values())

    def search(k, res):
        if residual_zero(res):
            return [0] * (len(elems) - k)
        if k == len(elems):
            return None
        for coeff in range(max_coeff + 1):
            trial = dict(res)
            _, table = elems[k]
            ok = True
            if coeff:
                for m, v in table.items():
                    trial[m] = trial.get(m, 0) - coeff * v
            rest = search(k + 1, trial)
            if rest is not None:
                return [coeff] + rest
        return None

    coeffs = search(0, dict(target))
    if coeffs is None:
        return None
    return [
        (key, c) for (key, _), c in zip(elems, coeffs) if c
    ]


def parse_value(raw):
    """Imset entry values: integers, or rationals for structural imsets."""
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, float):
        return Fraction(raw).limit_denominator(10**9)
    raise ValueError(f"bad imset value {raw!r}")
