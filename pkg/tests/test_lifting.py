"""Lifting squares, horn fillers, classification, retracts."""

import pytest

from simpdisc.errors import BoundExceededError
from simpdisc.fincat import (
    arrow_category,
    catalogue,
    chain_category,
    nerve,
    z2_category,
)
from simpdisc.lifting import (
    HornFillingInstance,
    classify,
    enumerate_simplicial_maps,
    fill_horn,
    horn_inclusion,
    is_retract,
    lifting_problem,
    solve_lifting,
)
from simpdisc.sset import (
    SimplicialMap,
    identity_map,
    standard_simplex,
)


def unique_map(source, target, pins):
    """The only simplicial map source -> target with the given pins."""
    maps = enumerate_simplicial_maps(source, target, pins=pins)
    assert len(maps) == 1, f"expected a unique pinned map, found {len(maps)}"
    return maps[0]


def label_pins(source, target, wanted):
    """Pins built from (dim, source label, target label) triples."""
    pins = {}
    for dim, src_label, tgt_label in wanted:
        s = source.labels[dim].index(src_label)
        t = target.labels[dim].index(tgt_label)
        pins[(dim, s)] = t
    return pins


def constant_to_point(source, point):
    return SimplicialMap(
        source,
        point,
        tuple(tuple(0 for _ in range(source.size(n))) for n in range(source.trunc_dim + 1)),
    )


def test_solve_lifting_inner_horn_into_chain_nerve():
    horn_sset, simplex, incl = horn_inclusion(2, 1, 2)
    x = nerve(chain_category(2), 2)
    y = standard_simplex(0, 2)
    mu = unique_map(
        horn_sset,
        x,
        label_pins(horn_sset, x, [(1, "0,1", "0<=1"), (1, "1,2", "1<=2")]),
    )
    lp = lifting_problem(incl, constant_to_point(x, y), mu, constant_to_point(simplex, y))
    solutions = solve_lifting(lp)
    assert len(solutions) == 1


def test_solve_lifting_along_iso_is_unique():
    x = standard_simplex(2, 2)
    _, simplex, incl = horn_inclusion(2, 1, 2)
    lp = lifting_problem(incl, identity_map(x), incl, identity_map(simplex))
    assert len(solve_lifting(lp)) == 1


def test_solve_lifting_outer_horn_blocked():
    horn_sset, simplex, incl = horn_inclusion(2, 0, 2)
    x = nerve(arrow_category(), 2)
    y = standard_simplex(0, 2)
    # edge (0,1) goes to f: a -> b, edge (0,2) to id_a; a filler needs b -> a
    mu = unique_map(
        horn_sset,
        x,
        label_pins(horn_sset, x, [(1, "0,1", "a<=b"), (1, "0,2", "id:a")]),
    )
    lp = lifting_problem(incl, constant_to_point(x, y), mu, constant_to_point(simplex, y))
    assert solve_lifting(lp) == []


def test_fill_inner_horn_in_z2_nerve():
    x = nerve(z2_category(), 2)
    horn_sset, _, _ = horn_inclusion(2, 1, 2)
    sigma0 = unique_map(
        horn_sset, x, label_pins(horn_sset, x, [(1, "0,1", "g"), (1, "1,2", "g")])
    )
    fillers = fill_horn(HornFillingInstance(2, 1, x, sigma0))
    assert len(fillers) == 1
    # the long edge of the filled simplex composes g with g, giving e
    simplex = standard_simplex(2, 2)
    top = simplex.labels[2].index("0,1,2")
    long_edge = simplex.labels[1].index("0,2")
    filled = fillers[0]
    assert x.label(2, filled.apply(2, top)) == "g;g"
    assert x.label(1, filled.apply(1, long_edge)) == "e"


def test_fill_outer_horn_in_z2_nerve():
    x = nerve(z2_category(), 2)
    horn_sset, _, _ = horn_inclusion(2, 0, 2)
    sigma0 = unique_map(
        horn_sset, x, label_pins(horn_sset, x, [(1, "0,1", "g"), (1, "0,2", "e")])
    )
    fillers = fill_horn(HornFillingInstance(2, 0, x, sigma0))
    assert len(fillers) == 1
    simplex = standard_simplex(2, 2)
    other_edge = simplex.labels[1].index("1,2")
    assert x.label(1, fillers[0].apply(1, other_edge)) == "g"


def test_fill_outer_horn_in_arrow_nerve_fails():
    x = nerve(arrow_category(), 2)
    horn_sset, _, _ = horn_inclusion(2, 0, 2)
    sigma0 = unique_map(
        horn_sset, x, label_pins(horn_sset, x, [(1, "0,1", "a<=b"), (1, "0,2", "id:a")])
    )
    assert fill_horn(HornFillingInstance(2, 0, x, sigma0)) == []


def test_classify_z2_nerve_is_kan():
    rep = classify(nerve(z2_category(), 3), 3)
    assert rep.kan_within_bound
    assert rep.quasicategory_within_bound
    assert rep.nerve_like_within_bound


def test_classify_arrow_nerve():
    rep = classify(nerve(arrow_category(), 2), 2)
    assert not rep.kan_within_bound
    assert rep.quasicategory_within_bound
    assert rep.nerve_like_within_bound
    outer = {(v.n, v.k): v for v in rep.horns}
    assert outer[(2, 0)].without_filler == 1
    assert outer[(2, 0)].witness is not None
    assert outer[(2, 1)].without_filler == 0
    assert outer[(2, 1)].with_multiple_fillers == 0


def test_classify_point_all_verdicts():
    rep = classify(standard_simplex(0, 3), 3)
    assert rep.kan_within_bound
    assert rep.quasicategory_within_bound
    assert rep.nerve_like_within_bound


def test_classify_catalogue_nerves_quasicategories():
    for name, cat in catalogue():
        rep = classify(nerve(cat, 3), 3)
        assert rep.quasicategory_within_bound, name
        assert rep.nerve_like_within_bound, name
        if cat.is_groupoid():
            assert rep.kan_within_bound, name


def test_classify_threads_agree():
    x = nerve(chain_category(2), 2)
    assert classify(x, 2, threads=2) == classify(x, 2, threads=1)


def test_solutions_satisfy_both_equations():
    horn_sset, simplex, incl = horn_inclusion(2, 1, 2)
    x = nerve(chain_category(2), 2)
    y = standard_simplex(0, 2)
    mu = unique_map(
        horn_sset,
        x,
        label_pins(horn_sset, x, [(1, "0,1", "0<=1"), (1, "1,2", "1<=2")]),
    )
    lp = lifting_problem(incl, constant_to_point(x, y), mu, constant_to_point(simplex, y))
    for h in solve_lifting(lp):
        from simpdisc.sset import compose_maps

        assert compose_maps(h, lp.f).assignment == lp.mu.assignment
        assert compose_maps(lp.p, h).assignment == lp.nu.assignment


def test_lifting_problem_rejects_noncommuting_square():
    x = standard_simplex(1, 1)
    pt = standard_simplex(0, 1)
    vertex0 = SimplicialMap(pt, x, ((0,), (x.labels[1].index("0,0"),)))
    vertex1 = SimplicialMap(pt, x, ((1,), (x.labels[1].index("1,1"),)))
    with pytest.raises(ValueError):
        lifting_problem(identity_map(pt), identity_map(x), vertex0, vertex1)


def test_is_retract_reflexive():
    _, _, incl = horn_inclusion(2, 0, 2)
    assert is_retract(incl, incl)


def test_is_retract_point_through_edge():
    pt = standard_simplex(0, 1)
    edge = standard_simplex(1, 1)
    assert is_retract(identity_map(pt), identity_map(edge))


def test_is_retract_horn20_vs_horn21_regression():
    # exhaustive-search outcome recorded as a regression value
    _, _, i0 = horn_inclusion(2, 0, 2)
    _, _, i1 = horn_inclusion(2, 1, 2)
    assert is_retract(i0, i1) is False


def test_retract_of_kan_verified_map_is_kan_verified():
    # the projection nerve(z2) -> point fills every horn within bound; the
    # terminal nerve's projection is a retract of it and verifies too
    z2 = nerve(z2_category(), 2)
    pt = standard_simplex(0, 2)
    assert classify(z2, 2).kan_within_bound
    from simpdisc.sset import SimplicialMap

    def to_point(x):
        return SimplicialMap(
            x, pt, tuple(tuple(0 for _ in range(x.size(n))) for n in range(3))
        )

    terminal = nerve(catalogue()[0][1], 2)
    assert is_retract(to_point(terminal), to_point(z2))
    assert classify(terminal, 2).kan_within_bound


def test_fill_horn_reconstructs_missing_face_on_3_simplex():
    # the 3-simplex puzzle: three 2-simplices given, deduce the fourth and the filler
    x = nerve(chain_category(3), 3)
    horn_sset, simplex, _ = horn_inclusion(3, 2, 3)
    pins = {}
    for m in range(2):
        for j in range(horn_sset.size(m)):
            lbl = horn_sset.label(m, j)
            if m == 0:
                pins[(m, j)] = x.labels[0].index(lbl.replace(",", ""))
    sigma_candidates = enumerate_simplicial_maps(horn_sset, x, pins=pins)
    # vertex-identity horn maps into the 0<1<2<3 nerve: composites force uniqueness
    assert len(sigma_candidates) == 1
    fillers = fill_horn(HornFillingInstance(3, 2, x, sigma_candidates[0]))
    assert len(fillers) == 1
    top = simplex.labels[3].index("0,1,2,3")
    missing_face = simplex.labels[2].index("0,1,3")
    filled = fillers[0]
    assert x.label(3, filled.apply(3, top)) == "0<=1;1<=2;2<=3"
    assert x.label(2, filled.apply(2, missing_face)) == "0<=1;1<=3"


def test_enumerate_maps_bound_guard():
    big = nerve(chain_category(3), 3)
    with pytest.raises(BoundExceededError):
        enumerate_simplicial_maps(big, big, bound=3)
