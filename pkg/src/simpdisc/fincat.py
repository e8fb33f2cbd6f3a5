"""Finite categories with explicit composition tables and their nerves.

The nerve of a category is the simplicial set of composable morphism
chains: outer faces drop an end object, inner faces compose adjacent
morphisms, degeneracies insert identities.  The lossy inverse direction
is homotopy_category, which rebuilds a category from vertices, edges and
the composition constraints carried by 2-simplices via bounded
congruence closure over edge words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundExceededError
from .sset import SimplicialSet


@dataclass(frozen=True)
class Morphism:
    name: str
    dom: int
    cod: int


@dataclass
class FiniteCategory:
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identities: tuple[int, ...]
    comp: dict

    def compose(self, g: int, f: int) -> int:
        """g after f; defined when cod(f) = dom(g)."""
        return self.comp[(g, f)]

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(
            k for k, m in enumerate(self.morphisms) if m.dom == x and m.cod == y
        )

    def is_identity(self, f: int) -> bool:
        return f in set(self.identities)

    def validate(self) -> list[str]:
        bad = []
        if len(self.identities) != len(self.objects):
            bad.append("one identity required per object")
            return bad
        for x, i in enumerate(self.identities):
            m = self.morphisms[i]
            if m.dom != x or m.cod != x:
                bad.append(f"identity of object {x} has wrong endpoints")
        n = len(self.morphisms)
        for g in range(n):
            for f in range(n):
                composable = self.morphisms[f].cod == self.morphisms[g].dom
                if composable != ((g, f) in self.comp):
                    bad.append(f"composition table wrong domain at ({g}, {f})")
                    continue
                if composable:
                    gf = self.comp[(g, f)]
                    if (
                        self.morphisms[gf].dom != self.morphisms[f].dom
                        or self.morphisms[gf].cod != self.morphisms[g].cod
                    ):
                        bad.append(f"composite of ({g}, {f}) has wrong endpoints")
        for f, m in enumerate(self.morphisms):
            if self.comp.get((f, self.identities[m.dom])) != f:
                bad.append(f"right identity law fails for morphism {f}")
            if self.comp.get((self.identities[m.cod], f)) != f:
                bad.append(f"left identity law fails for morphism {f}")
        for h in range(n):
            for g in range(n):
                if (h, g) not in self.comp:
                    continue
                for f in range(n):
                    if (g, f) not in self.comp:
                        continue
                    left = self.comp.get((h, self.comp[(g, f)]))
                    right = self.comp.get((self.comp[(h, g)], f))
                    if left is None or right is None or left != right:
                        bad.append(f"associativity fails at ({h}, {g}, {f})")
        return bad

    def is_groupoid(self) -> bool:
        for f, m in enumerate(self.morphisms):
            has_inverse = any(
                self.comp.get((g, f)) == self.identities[m.dom]
                and self.comp.get((f, g)) == self.identities[m.cod]
                for g in self.hom(m.cod, m.dom)
            )
            if not has_inverse:
                return False
        return True


@dataclass(frozen=True)
class Chain:
    """A composable chain; length-0 chains are a bare object."""

    start: int
    morphisms: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.morphisms)


def chain_objects(cat: FiniteCategory, chain: Chain) -> tuple[int, ...]:
    objs = [chain.start]
    for f in chain.morphisms:
        objs.append(cat.morphisms[f].cod)
    return tuple(objs)


def is_degenerate_chain(cat: FiniteCategory, chain: Chain) -> bool:
    ids = set(cat.identities)
    return any(f in ids for f in chain.morphisms)


def _chains_of_length(cat: FiniteCategory, n: int) -> list[Chain]:
    if n == 0:
        return [Chain(x, ()) for x in range(len(cat.objects))]
    chains = []

    def extend(prefix, cursor):
        if len(prefix) == n:
            chains.append(Chain(cat.morphisms[prefix[0]].dom, tuple(prefix)))
            return
        for f in range(len(cat.morphisms)):
            if cat.morphisms[f].dom == cursor:
                extend(prefix + [f], cat.morphisms[f].cod)

    for f in range(len(cat.morphisms)):
        extend([f], cat.morphisms[f].cod)
    chains.sort(key=lambda c: c.morphisms)
    return chains


def nerve_detailed(cat: FiniteCategory, trunc: int) -> tuple[SimplicialSet, list[list[Chain]]]:
    """The nerve truncated at trunc, plus the chain behind every simplex."""
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    chains = [_chains_of_length(cat, n) for n in range(trunc + 1)]
    index = [
        {(c.start, c.morphisms): k for k, c in enumerate(level)} for level in chains
    ]

    def chain_index(c: Chain) -> int:
        return index[c.length][(c.start, c.morphisms)]

    labels = []
    labels.append(tuple(cat.objects[c.start] for c in chains[0]))
    for n in range(1, trunc + 1):
        labels.append(
            tuple(";".join(cat.morphisms[f].name for f in c.morphisms) for c in chains[n])
        )

    faces = [()]
    for n in range(1, trunc + 1):
        rows = []
        for c in chains[n]:
            row = []
            objs = chain_objects(cat, c)
            for i in range(n + 1):
                if i == 0:
                    face = Chain(objs[1], c.morphisms[1:])
                elif i == n:
                    face = Chain(objs[0], c.morphisms[:-1])
                else:
                    merged = cat.compose(c.morphisms[i], c.morphisms[i - 1])
                    face = Chain(
                        objs[0],
                        c.morphisms[: i - 1] + (merged,) + c.morphisms[i + 1 :],
                    )
                row.append(chain_index(face))
            rows.append(tuple(row))
        faces.append(tuple(rows))

    degeneracies = []
    for n in range(trunc):
        rows = []
        for c in chains[n]:
            row = []
            objs = chain_objects(cat, c)
            for i in range(n + 1):
                ident = cat.identities[objs[i]]
                degen = Chain(objs[0], c.morphisms[:i] + (ident,) + c.morphisms[i:])
                row.append(chain_index(degen))
            rows.append(tuple(row))
        degeneracies.append(tuple(rows))
    degeneracies.append(())

    sset = SimplicialSet(trunc, tuple(labels), tuple(faces), tuple(degeneracies))
    return sset, chains


def nerve(cat: FiniteCategory, trunc: int) -> SimplicialSet:
    return nerve_detailed(cat, trunc)[0]


@dataclass(frozen=True)
class Functor:
    object_map: tuple[int, ...]
    morphism_map: tuple[int, ...]


def check_functor(src: FiniteCategory, dst: FiniteCategory, fun: Functor) -> list[str]:
    bad = []
    for x in range(len(src.objects)):
        if fun.morphism_map[src.identities[x]] != dst.identities[fun.object_map[x]]:
            bad.append(f"identity of object {x} not preserved")
    for f, m in enumerate(src.morphisms):
        fm = dst.morphisms[fun.morphism_map[f]]
        if fm.dom != fun.object_map[m.dom] or fm.cod != fun.object_map[m.cod]:
            bad.append(f"endpoints of morphism {f} not preserved")
    for (g, f), gf in src.comp.items():
        img = dst.comp.get((fun.morphism_map[g], fun.morphism_map[f]))
        if img != fun.morphism_map[gf]:
            bad.append(f"composition ({g}, {f}) not preserved")
    return bad


def enumerate_functors(
    src: FiniteCategory, dst: FiniteCategory, bound: int = 10_000_000
) -> list[Functor]:
    """All functors src -> dst, object maps in lexicographic order.

    Refuses with BoundExceededError when the raw search space (object
    assignments times unconstrained morphism assignments) exceeds bound.
    """
    n_obj, n_mor = len(src.objects), len(src.morphisms)
    max_hom = max(
        (
            len(dst.hom(x, y))
            for x in range(len(dst.objects))
            for y in range(len(dst.objects))
        ),
        default=0,
    )
    space = len(dst.objects) ** n_obj
    free_mor = n_mor - n_obj  # identities are forced
    space *= max(1, max_hom) ** max(0, free_mor)
    if space > bound:
        raise BoundExceededError(
            f"functor search space {space} exceeds bound {bound}"
        )

    found = []
    src_ids = set(src.identities)
    comp_by_pair = list(src.comp.items())
    for omap in itertools.product(range(len(dst.objects)), repeat=n_obj):
        candidates = []
        feasible = True
        for f, m in enumerate(src.morphisms):
            if f in src_ids:
                candidates.append((dst.identities[omap[m.dom]],))
            else:
                cands = dst.hom(omap[m.dom], omap[m.cod])
                if not cands:
                    feasible = False
                    break
                candidates.append(cands)
        if not feasible:
            continue

        assignment = [-1] * n_mor

        def consistent_so_far() -> bool:
            for (g, f), gf in comp_by_pair:
                a, b, c = assignment[g], assignment[f], assignment[gf]
                if a >= 0 and b >= 0:
                    img = dst.comp.get((a, b))
                    if img is None:
                        return False
                    if c >= 0 and img != c:
                        return False
            return True

        def search(k: int):
            if k == n_mor:
                found.append(Functor(tuple(omap), tuple(assignment)))
                return
            for cand in candidates[k]:
                assignment[k] = cand
                if consistent_so_far():
                    search(k + 1)
                assignment[k] = -1

        search(0)
    return found


def functor_to_assignment(
    src: FiniteCategory,
    dst: FiniteCategory,
    fun: Functor,
    src_chains: list[list[Chain]],
    dst_index: list[dict],
) -> tuple[tuple[int, ...], ...]:
    """Nerve action of a functor: chains map componentwise."""
    out = []
    for n, level in enumerate(src_chains):
        row = []
        for c in level:
            image = Chain(
                fun.object_map[c.start],
                tuple(fun.morphism_map[f] for f in c.morphisms),
            )
            row.append(dst_index[n][(image.start, image.morphisms)])
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class BijectionReport:
    functor_count: int
    map_count: int
    bijection: bool
    unmatched_maps: tuple
    collisions: int


def nerve_hom_bijection_check(
    src: FiniteCategory, dst: FiniteCategory, trunc: int, bound: int = 10_000_000
) -> BijectionReport:
    """Compare functors src -> dst against simplicial maps of truncated nerves."""
    if trunc < 2:
        raise ValueError("trunc must be >= 2 to see composition data")
    from .lifting import enumerate_simplicial_maps

    src_sset, src_chains = nerve_detailed(src, trunc)
    dst_sset, dst_chains = nerve_detailed(dst, trunc)
    dst_index = [
        {(c.start, c.morphisms): k for k, c in enumerate(level)} for level in dst_chains
    ]
    functors = enumerate_functors(src, dst, bound)
    induced = [
        functor_to_assignment(src, dst, fun, src_chains, dst_index) for fun in functors
    ]
    maps = enumerate_simplicial_maps(src_sset, dst_sset, bound=bound)
    map_set = {m.assignment for m in maps}
    induced_set = set(induced)
    unmatched = tuple(sorted(map_set - induced_set))
    collisions = len(induced) - len(induced_set)
    bijection = not unmatched and collisions == 0 and len(induced_set) == len(map_set)
    return BijectionReport(len(functors), len(maps), bijection, unmatched, collisions)


def _edge_endpoints(x: SimplicialSet, e: int) -> tuple[int, int]:
    # an edge f with d_1 f = dom and d_0 f = cod
    return x.face(1, e, 1), x.face(1, e, 0)


def homotopy_category(x: SimplicialSet, word_cap: int = 8, word_bound: int = 200_000) -> FiniteCategory:
    """Quotient of the free category on nondegenerate edges by 2-simplex relations.

    Words over nondegenerate edges are closed under the congruence
    generated by d_1 t = d_0 t . d_2 t for every 2-simplex t and by
    s_0 a = id_a; the closure is bounded by word_cap.  Raises
    BoundExceededError when word enumeration blows up or the congruence
    fails to stabilize inside the cap (the free category on a graph with
    cycles is infinite).
    """
    if x.trunc_dim < 2:
        raise ValueError("homotopy_category needs trunc_dim >= 2")
    n_obj = x.size(0)
    edges = x.nondegenerate(1)
    edge_pos = {e: k for k, e in enumerate(edges)}
    dom = {e: _edge_endpoints(x, e)[0] for e in edges}
    cod = {e: _edge_endpoints(x, e)[1] for e in edges}

    # all composable edge words up to the cap, keyed (start, edge tuple)
    words = []
    word_id = {}

    def add_word(start, seq):
        key = (start, seq)
        if key not in word_id:
            word_id[key] = len(words)
            words.append(key)
            if len(words) > word_bound:
                raise BoundExceededError(f"more than {word_bound} edge words")
        return word_id[key]

    for v in range(n_obj):
        add_word(v, ())
    frontier = list(word_id)
    for _ in range(word_cap):
        nxt = []
        for start, seq in frontier:
            end = cod[seq[-1]] if seq else start
            for e in edges:
                if dom[e] == end:
                    key = (start, seq + (e,))
                    if key not in word_id:
                        add_word(start, seq + (e,))
                        nxt.append(key)
        frontier = nxt

    parent = list(range(len(words)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return None
        parent[rb] = ra
        return ra, rb

    def word_of_edge(e: int):
        if e in edge_pos:
            return dom[e], (e,)
        pre = x.degeneracy_preimage(1, e)
        if pre is None:
            raise ValueError(f"edge {e} neither nondegenerate nor a degeneracy image")
        return pre[0], ()

    pending = []
    for t in range(x.size(2)):
        s2, w2 = word_of_edge(x.face(2, t, 2))
        _, w0 = word_of_edge(x.face(2, t, 0))
        s1, w1 = word_of_edge(x.face(2, t, 1))
        lhs = word_id[(s2, w2 + w0)]
        rhs = word_id[(s1, w1)]
        merged = union(lhs, rhs)
        if merged:
            pending.append((lhs, rhs))

    while pending:
        a, b = pending.pop()
        (sa, qa), (sb, qb) = words[a], words[b]
        enda = cod[qa[-1]] if qa else sa
        for e in edges:
            if dom[e] == enda:
                ka, kb = (sa, qa + (e,)), (sb, qb + (e,))
                if ka in word_id and kb in word_id:
                    merged = union(word_id[ka], word_id[kb])
                    if merged:
                        pending.append((word_id[ka], word_id[kb]))
            if cod[e] == sa:
                ka, kb = (dom[e], (e,) + qa), (dom[e], (e,) + qb)
                if ka in word_id and kb in word_id:
                    merged = union(word_id[ka], word_id[kb])
                    if merged:
                        pending.append((word_id[ka], word_id[kb]))

    classes = {}
    for idx, key in enumerate(words):
        classes.setdefault(find(idx), []).append(key)

    def word_sort_key(key):
        start, seq = key
        return (len(seq), seq, start)

    reps = {root: min(members, key=word_sort_key) for root, members in classes.items()}
    for rep in reps.values():
        if len(rep[1]) >= word_cap:
            raise BoundExceededError(
                f"congruence not stabilized: class representative at word cap {word_cap}"
            )

    roots = sorted(reps, key=lambda r: word_sort_key(reps[r]))
    root_pos = {r: k for k, r in enumerate(roots)}

    def word_end(key):
        start, seq = key
        return cod[seq[-1]] if seq else start

    names = []
    seen = set()
    for r in roots:
        start, seq = reps[r]
        if not seq:
            base = f"id:{x.label(0, start)}"
        else:
            base = ".".join(x.label(1, e) for e in seq)
        name = base
        k = 2
        while name in seen:
            name = f"{base}#{k}"
            k += 1
        seen.add(name)
        names.append(name)

    morphisms = tuple(
        Morphism(names[k], reps[r][0], word_end(reps[r])) for k, r in enumerate(roots)
    )
    identities = tuple(
        root_pos[find(word_id[(v, ())])] for v in range(n_obj)
    )
    comp = {}
    for gi, gr in enumerate(roots):
        for fi, fr in enumerate(roots):
            fstart, fseq = reps[fr]
            gstart, gseq = reps[gr]
            if word_end(reps[fr]) != gstart:
                continue
            key = (fstart, fseq + gseq)
            if key not in word_id:
                raise BoundExceededError(
                    "composition escapes the word cap; raise word_cap"
                )
            comp[(gi, fi)] = root_pos[find(word_id[key])]

    cat = FiniteCategory(tuple(x.labels[0]), morphisms, identities, comp)
    problems = cat.validate()
    if problems:
        raise BoundExceededError(
            f"bounded congruence closure produced an invalid category: {problems[:3]}"
        )
    return cat


def isomorphic(a: FiniteCategory, b: FiniteCategory, bound: int = 10_000_000) -> bool:
    """Exhaustively look for an invertible functor a -> b."""
    if len(a.objects) != len(b.objects) or len(a.morphisms) != len(b.morphisms):
        return False
    for fun in enumerate_functors(a, b, bound):
        if len(set(fun.object_map)) == len(a.objects) and len(
            set(fun.morphism_map)
        ) == len(a.morphisms):
            if not check_functor(a, b, fun):
                return True
    return False


# --- catalogue -------------------------------------------------------------

def _thin_category(names: tuple[str, ...], leq) -> FiniteCategory:
    """Poset as a category: one morphism x -> y whenever leq(x, y)."""
    morphisms = []
    index = {}
    for x, xn in enumerate(names):
        for y, yn in enumerate(names):
            if leq(x, y):
                index[(x, y)] = len(morphisms)
                name = f"{xn}<={yn}" if x != y else f"id:{xn}"
                morphisms.append(Morphism(name, x, y))
    identities = tuple(index[(x, x)] for x in range(len(names)))
    comp = {}
    for (x, y), f in index.items():
        for (y2, z), g in index.items():
            if y2 == y:
                comp[(g, f)] = index[(x, z)]
    return FiniteCategory(names, tuple(morphisms), identities, comp)


def terminal_category() -> FiniteCategory:
    return _thin_category(("x",), lambda a, b: True)


def arrow_category() -> FiniteCategory:
    return _thin_category(("a", "b"), lambda a, b: a <= b)


def chain_category(n: int) -> FiniteCategory:
    return _thin_category(tuple(str(i) for i in range(n + 1)), lambda a, b: a <= b)


def square_category() -> FiniteCategory:
    names = ("00", "01", "10", "11")
    bits = [(0, 0), (0, 1), (1, 0), (1, 1)]

    def leq(a, b):
        return bits[a][0] <= bits[b][0] and bits[a][1] <= bits[b][1]

    return _thin_category(names, leq)


def z2_category() -> FiniteCategory:
    morphisms = (Morphism("e", 0, 0), Morphism("g", 0, 0))
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    return FiniteCategory(("x",), morphisms, (0,), comp)


def idempotent_monoid_category() -> FiniteCategory:
    morphisms = (Morphism("1", 0, 0), Morphism("z", 0, 0))
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    return FiniteCategory(("x",), morphisms, (0,), comp)


def parallel_arrows_category() -> FiniteCategory:
    morphisms = (
        Morphism("id:a", 0, 0),
        Morphism("id:b", 1, 1),
        Morphism("f", 0, 1),
        Morphism("g", 0, 1),
    )
    comp = {
        (0, 0): 0,
        (1, 1): 1,
        (2, 0): 2,
        (1, 2): 2,
        (3, 0): 3,
        (1, 3): 3,
    }
    return FiniteCategory(("a", "b"), morphisms, (0, 1), comp)


def catalogue() -> list[tuple[str, FiniteCategory]]:
    """The shipped test categories: small, exhaustively enumerable, varied."""
    return [
        ("terminal", terminal_category()),
        ("arrow", arrow_category()),
        ("chain2", chain_category(2)),
        ("chain3", chain_category(3)),
        ("square", square_category()),
        ("z2", z2_category()),
        ("idempotent", idempotent_monoid_category()),
        ("parallel", parallel_arrows_category()),
    ]
