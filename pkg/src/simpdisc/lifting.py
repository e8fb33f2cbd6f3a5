"""Lifting problems, horn fillers, and horn-based classification.

Everything rests on one exhaustive enumerator for simplicial maps: it
walks simplices in dimension order, forces degenerate simplices from
their preimages, and restricts nondegenerate ones to targets whose face
vectors match what is already assigned.  Horn filling and lifting-square
solving are the same search with pinned values and a projection filter.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BoundExceededError
from .sset import (
    SimplicialMap,
    SimplicialSet,
    check_simplicial_map,
    compose_maps,
    horn,
    identity_map,
    subset_as_sset,
)

DEFAULT_BOUND = 2_000_000


def enumerate_simplicial_maps(
    source: SimplicialSet,
    target: SimplicialSet,
    pins: dict | None = None,
    candidate_filter=None,
    bound: int = DEFAULT_BOUND,
) -> list[SimplicialMap]:
    """All simplicial maps source -> target, optionally pinned and filtered.

    pins maps (dim, source index) to a forced target index;
    candidate_filter(dim, source index, target index) may veto candidates.
    Raises BoundExceededError after exploring `bound` search nodes.
    """
    if target.trunc_dim < source.trunc_dim:
        raise ValueError("target truncation below source truncation")
    pins = pins or {}

    # face-vector lookup for nondegenerate candidate retrieval
    face_index = [None]
    for n in range(1, source.trunc_dim + 1):
        table = {}
        for y in range(target.size(n)):
            table.setdefault(target.faces[n][y], []).append(y)
        face_index.append(table)

    elements = []
    for n in range(source.trunc_dim + 1):
        degen = source.degenerate_flags(n)
        for x in range(source.size(n)):
            elements.append((n, x, degen[x]))

    assignment = [[-1] * source.size(n) for n in range(source.trunc_dim + 1)]
    found = []
    nodes = 0

    def candidates_for(n, x, degenerate):
        if degenerate:
            w, i = source.degeneracy_preimage(n, x)
            forced = target.degeneracy(n - 1, assignment[n - 1][w], i)
            cands = [forced]
        elif n == 0:
            cands = list(range(target.size(0)))
        else:
            footprint = tuple(
                assignment[n - 1][source.face(n, x, i)] for i in range(n + 1)
            )
            cands = face_index[n].get(footprint, [])
        pin = pins.get((n, x))
        if pin is not None:
            cands = [y for y in cands if y == pin]
        if candidate_filter is not None:
            cands = [y for y in cands if candidate_filter(n, x, y)]
        # degenerate simplices still need their face vectors to match
        if degenerate and n >= 1:
            footprint = tuple(
                assignment[n - 1][source.face(n, x, i)] for i in range(n + 1)
            )
            cands = [y for y in cands if target.faces[n][y] == footprint]
        return cands

    def search(k):
        nonlocal nodes
        if k == len(elements):
            found.append(
                SimplicialMap(
                    source, target, tuple(tuple(level) for level in assignment)
                )
            )
            return
        n, x, degenerate = elements[k]
        for y in candidates_for(n, x, degenerate):
            nodes += 1
            if nodes > bound:
                raise BoundExceededError(
                    f"simplicial-map search exceeded {bound} nodes"
                )
            assignment[n][x] = y
            search(k + 1)
            assignment[n][x] = -1

    search(0)
    for m in found:
        bad = check_simplicial_map(m)
        if bad:
            raise AssertionError(f"enumerator produced an invalid map: {bad[:2]}")
    return found


@dataclass(frozen=True)
class LiftingProblem:
    """A commutative square p . mu = nu . f asking for a diagonal B -> X."""

    f: SimplicialMap   # A -> B
    p: SimplicialMap   # X -> Y
    mu: SimplicialMap  # A -> X
    nu: SimplicialMap  # B -> Y


def lifting_problem(f, p, mu, nu) -> LiftingProblem:
    """Validated constructor: the square p . mu = nu . f must commute."""
    left = compose_maps(p, mu)
    right = compose_maps(nu, f)
    if left.assignment != right.assignment:
        raise ValueError("lifting square does not commute")
    return LiftingProblem(f, p, mu, nu)


def solve_lifting(lp: LiftingProblem, bound: int = DEFAULT_BOUND) -> list[SimplicialMap]:
    """All h: B -> X with p . h = nu and h . f = mu, by exhaustive search."""
    pins = {}
    a = lp.f.source
    for n in range(a.trunc_dim + 1):
        for idx in range(a.size(n)):
            key = (n, lp.f.apply(n, idx))
            val = lp.mu.apply(n, idx)
            if pins.setdefault(key, val) != val:
                return []

    def filt(n, x, y):
        return lp.p.apply(n, y) == lp.nu.apply(n, x)

    solutions = enumerate_simplicial_maps(
        lp.f.target, lp.p.source, pins=pins, candidate_filter=filt, bound=bound
    )
    verified = []
    for h in solutions:
        if (
            compose_maps(h, lp.f).assignment == lp.mu.assignment
            and compose_maps(lp.p, h).assignment == lp.nu.assignment
        ):
            verified.append(h)
    return verified


def horn_inclusion(n: int, k: int, trunc: int):
    """The horn as a standalone simplicial set plus its inclusion into the simplex."""
    sub = horn(n, k, trunc)
    horn_sset, inclusion = subset_as_sset(sub)
    simplex = sub.ambient
    incl_map = SimplicialMap(horn_sset, simplex, tuple(tuple(level) for level in inclusion))
    return horn_sset, simplex, incl_map


@dataclass(frozen=True)
class HornFillingInstance:
    n: int
    k: int
    target: SimplicialSet
    sigma0: SimplicialMap  # horn(n, k, target.trunc_dim) as sset -> target


def fill_horn(inst: HornFillingInstance, bound: int = DEFAULT_BOUND) -> list[SimplicialMap]:
    """All extensions of sigma0 along the horn inclusion into the simplex."""
    if inst.n > inst.target.trunc_dim:
        raise ValueError("horn dimension above target truncation")
    horn_sset, simplex, incl = horn_inclusion(inst.n, inst.k, inst.target.trunc_dim)
    sizes = [len(level) for level in inst.sigma0.assignment]
    if sizes != [horn_sset.size(m) for m in range(horn_sset.trunc_dim + 1)]:
        raise ValueError("sigma0 is not defined on the expected horn")
    bad = check_simplicial_map(
        SimplicialMap(horn_sset, inst.target, inst.sigma0.assignment)
    )
    if bad:
        raise ValueError(f"sigma0 is not a simplicial map: {bad[:2]}")
    pins = {}
    for m in range(horn_sset.trunc_dim + 1):
        for j in range(horn_sset.size(m)):
            pins[(m, incl.apply(m, j))] = inst.sigma0.apply(m, j)
    return enumerate_simplicial_maps(simplex, inst.target, pins=pins, bound=bound)


@dataclass(frozen=True)
class HornVerdict:
    n: int
    k: int
    inner: bool
    total_maps: int
    without_filler: int
    with_unique_filler: int
    with_multiple_fillers: int
    witness: tuple | None  # assignment of the first horn map with no filler


@dataclass(frozen=True)
class ClassificationReport:
    max_n: int
    horns: tuple[HornVerdict, ...]
    kan_within_bound: bool
    quasicategory_within_bound: bool
    nerve_like_within_bound: bool


def threads_from_env() -> int:
    raw = os.environ.get("SIMPDISC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def classify(
    x: SimplicialSet, max_n: int, bound: int = DEFAULT_BOUND, threads: int = 1
) -> ClassificationReport:
    """Try every horn map into x for 1 <= n <= max_n and count fillers.

    Verdicts are explicitly within-bound: Kan needs every horn to fill,
    quasicategory needs the inner horns to fill, nerve-like needs the
    inner horns to fill uniquely.
    """
    if max_n > x.trunc_dim:
        raise ValueError("max_n above truncation")

    def run_instance(pair):
        n, k = pair
        horn_sset, simplex, incl = horn_inclusion(n, k, x.trunc_dim)
        maps = enumerate_simplicial_maps(horn_sset, x, bound=bound)
        fail = unique = multi = 0
        witness = None
        for sigma0 in maps:
            pins = {}
            for m in range(horn_sset.trunc_dim + 1):
                for j in range(horn_sset.size(m)):
                    pins[(m, incl.apply(m, j))] = sigma0.apply(m, j)
            fillers = enumerate_simplicial_maps(simplex, x, pins=pins, bound=bound)
            if not fillers:
                fail += 1
                if witness is None:
                    witness = sigma0.assignment
            elif len(fillers) == 1:
                unique += 1
            else:
                multi += 1
        return HornVerdict(n, k, 0 < k < n, len(maps), fail, unique, multi, witness)

    pairs = [(n, k) for n in range(1, max_n + 1) for k in range(n + 1)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(run_instance, pairs))
    else:
        verdicts = [run_instance(p) for p in pairs]
    verdicts.sort(key=lambda v: (v.n, v.k))

    kan = all(v.without_filler == 0 for v in verdicts)
    quasi = all(v.without_filler == 0 for v in verdicts if v.inner)
    nerve_like = all(
        v.without_filler == 0 and v.with_multiple_fillers == 0
        for v in verdicts
        if v.inner
    )
    return ClassificationReport(max_n, tuple(verdicts), kan, quasi, nerve_like)


def is_retract(
    f: SimplicialMap, fprime: SimplicialMap, bound: int = DEFAULT_BOUND
) -> bool:
    """Is f a retract of fprime in the arrow category?

    Searches exhaustively for i: dom f -> dom f', r: dom f' -> dom f,
    j: cod f -> cod f', s: cod f' -> cod f with r . i = id, s . j = id,
    j . f = f' . i and s . f' = f . r.
    """
    a, b = f.source, f.target
    a2, b2 = fprime.source, fprime.target
    ins_a = enumerate_simplicial_maps(a, a2, bound=bound)
    ret_a = enumerate_simplicial_maps(a2, a, bound=bound)
    ins_b = enumerate_simplicial_maps(b, b2, bound=bound)
    ret_b = enumerate_simplicial_maps(b2, b, bound=bound)
    id_a = identity_map(a).assignment
    id_b = identity_map(b).assignment

    for i in ins_a:
        tops = [j for j in ins_b if compose_maps(j, f).assignment == compose_maps(fprime, i).assignment]
        if not tops:
            continue
        for r in ret_a:
            if compose_maps(r, i).assignment != id_a:
                continue
            for j in tops:
                for s in ret_b:
                    if compose_maps(s, j).assignment != id_b:
                        continue
                    if compose_maps(s, fprime).assignment == compose_maps(f, r).assignment:
                        return True
    return False
