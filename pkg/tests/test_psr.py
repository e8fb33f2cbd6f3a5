"""Filtering, system-dynamics matrices, core tests, homomorphisms, PSR nerve."""

import math
from fractions import Fraction

import pytest

from simpdisc import exactlin
from simpdisc.errors import SimpdiscError
from simpdisc.lifting import classify
from simpdisc.psr import (
        Mdp,
    Pomdp,
    PsrDynamics,
    build_sdm,
    check_mdp_homomorphism,
    check_psr_homomorphism,
    compose_mdp_homs,
    cycle2_pomdp,
    cycle2_relabeled_pomdp,
    discover_core_tests,
    fleet,
    grid4_col_collapse,
    grid4_row_collapse,
    history_probability,
    identity_mdp_hom,
    psr_dynamics,
    psr_nerve,
    ring3_pomdp,
    switch2_pomdp,
    test_probability,
)

test_probability.__test__ = False  # an operation under test, not a test


# --- independent oracle: explicit path enumeration (zero terms skipped) -----

def oracle_word_probability(m, word):
    total = Fraction(0)

    def walk(step, s, acc):
        nonlocal total
        if step == len(word):
            total += acc
            return
        a, o = word[step]
        for sp in range(len(m.states)):
            factor = m.transition[s][a][sp] * m.emission[sp][a][o]
            if factor != 0:
                walk(step + 1, sp, acc * factor)

    for s0 in range(len(m.states)):
        if m.init[s0] != 0:
            walk(0, s0, m.init[s0])
    return total


def oracle_test_probability(m, h, t):
    return oracle_word_probability(m, h + t) / oracle_word_probability(m, h)


def trivial_pomdp():
    one = Fraction(1)
    return Pomdp(("s",), ("a",), ("o",), (((one,),),), (((one,),),), (one,))


def test_fleet_pomdps_validate():
    for name, m in fleet():
        assert m.validate() == [], name


def test_empty_test_probability_is_one():
    for name, m in fleet():
        assert test_probability(m, (), ()) == 1, name


def test_cycle2_first_step():
    m = cycle2_pomdp()
    assert test_probability(m, (), ((0, 1),)) == 1
    assert test_probability(m, (), ((0, 0),)) == 0


def test_zero_probability_history_rejected():
    m = cycle2_pomdp()
    with pytest.raises(SimpdiscError):
        test_probability(m, ((0, 0),), ((0, 1),))


def test_filter_matches_path_enumeration_oracle():
    for name, m in fleet():
        sdm = build_sdm(m, 2)
        for i, h in enumerate(sdm.histories):
            for j, t in enumerate(sdm.tests):
                assert sdm.values[i][j] == oracle_test_probability(m, h, t), (
                    name,
                    h,
                    t,
                )


def test_trivial_system_sdm_all_ones():
    sdm = build_sdm(trivial_pomdp(), 3)
    for row in sdm.values:
        assert all(v == 1 for v in row)


def test_cycle2_sdm_rank_two():
    sdm = build_sdm(cycle2_pomdp(), 2)
    assert exactlin.rank([list(r) for r in sdm.values]) == 2


def test_sdm_entries_are_probabilities():
    for name, m in fleet():
        sdm = build_sdm(m, 2)
        for row in sdm.values:
            for v in row:
                assert 0 <= v <= 1, name


def test_sdm_row_zero_is_initial_prediction_vector():
    for name, m in fleet():
        sdm = build_sdm(m, 2)
        assert sdm.histories[0] == ()
        for j, t in enumerate(sdm.tests):
            assert sdm.values[0][j] == test_probability(m, (), t), name


def test_discover_core_tests_cycle2():
    sdm = build_sdm(cycle2_pomdp(), 2)
    model = discover_core_tests(sdm)
    assert len(model.core_tests) == 2
    assert model.reconstruction_errors(sdm) == []


def test_discover_core_tests_trivial_system():
    sdm = build_sdm(trivial_pomdp(), 2)
    model = discover_core_tests(sdm)
    assert len(model.core_tests) == 1
    assert all(len(m_t) == 1 for m_t in model.projections.values())
    assert model.reconstruction_errors(sdm) == []


def test_fleet_core_counts_bounded_by_states():
    for name, m in fleet():
        sdm = build_sdm(m, 2)
        model = discover_core_tests(sdm)
        assert len(model.core_tests) <= len(m.states), name
        assert model.reconstruction_errors(sdm) == [], name


def test_core_count_monotone_in_max_len():
    for name, m in [("cycle2", cycle2_pomdp()), ("switch2", switch2_pomdp())]:
        counts = []
        for max_len in (1, 2, 3):
            model = discover_core_tests(build_sdm(m, max_len))
            counts.append(len(model.core_tests))
        assert counts == sorted(counts), name


def test_float_mode_discovery():
    sdm = build_sdm(ring3_pomdp(), 2, mode="float")
    model = discover_core_tests(sdm)
    assert len(model.core_tests) == 3
    assert model.reconstruction_errors(sdm) == []


# --- MDP homomorphisms --------------------------------------------------------

def test_identity_mdp_homomorphism_passes():
    src, dst, f, g = grid4_row_collapse()
    for m in (src, dst):
        fi, gi = identity_mdp_hom(m)
        assert check_mdp_homomorphism(m, m, fi, gi).ok


def test_grid_row_collapse_passes():
    src, dst, f, g = grid4_row_collapse()
    assert src.validate() == [] and dst.validate() == []
    report = check_mdp_homomorphism(src, dst, f, g)
    assert report.ok, report.witnesses[:3]


def test_grid_col_collapse_fails_on_reward():
    src, dst, f, g = grid4_col_collapse()
    report = check_mdp_homomorphism(src, dst, f, g)
    assert not report.ok
    kinds = {w.kind for w in report.witnesses}
    assert kinds == {"reward"}


def test_mdp_hom_composition_passes():
    src, mid, f1, g1 = grid4_row_collapse()
    # a second pass-through hom: relabel the two rows by swapping them
    swapped = Mdp(
        ("rB", "rA"),
        mid.actions,
        mid.admissible,
        tuple(
            tuple(tuple(row[1 - sp] for sp in range(2)) for row in mid.transition[1 - s])
            for s in range(2)
        ),
        tuple(mid.reward[1 - s] for s in range(2)),
    )
    f2 = (1, 0)
    g2 = tuple(tuple(range(2)) for _ in range(2))
    assert check_mdp_homomorphism(mid, swapped, f2, g2).ok
    f, g = compose_mdp_homs((f1, g1), (f2, g2))
    assert check_mdp_homomorphism(src, swapped, f, g).ok


def test_mdp_hom_rejects_non_surjective():
    src, dst, f, g = grid4_row_collapse()
    with pytest.raises(ValueError):
        check_mdp_homomorphism(src, dst, tuple(0 for _ in f), g)


# --- PSR homomorphisms ----------------------------------------------------------

def test_psr_dynamics_cycle2():
    m = cycle2_pomdp()
    model = discover_core_tests(build_sdm(m, 2))
    dyn = psr_dynamics(m, model)
    assert len(dyn.states) == 2
    f = tuple(range(2))
    v = tuple((0,) for _ in range(2))
    assert check_psr_homomorphism(dyn, dyn, f, v).ok


def test_psr_relabeled_cycle_homomorphism():
    src = psr_dynamics(cycle2_pomdp(), discover_core_tests(build_sdm(cycle2_pomdp(), 2)))
    relabeled = cycle2_relabeled_pomdp()
    dst = psr_dynamics(relabeled, discover_core_tests(build_sdm(relabeled, 2)))
    f = tuple(range(len(src.states)))
    v = tuple((0,) for _ in src.states)
    report = check_psr_homomorphism(src, dst, f, v)
    assert report.ok, report.witnesses[:3]


def test_psr_collapse_with_different_dynamics_fails():
    one = Fraction(1)
    # A -> B -> C -> C on a single action; collapsing A with B cannot work
    src = PsrDynamics(
        ("a",),
        ("o",),
        ((one, Fraction(0)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(0), one)),
        0,
        (
            (((0, one, 1),),),
            (((0, one, 2),),),
            (((0, one, 2),),),
        ),
    )
    dst = PsrDynamics(
        ("a",),
        ("o",),
        ((one, Fraction(0)), (Fraction(0), one)),
        0,
        (
            (((0, one, 1),),),
            (((0, one, 1),),),
        ),
    )
    f = (0, 0, 1)
    v = ((0,), (0,), (0,))
    report = check_psr_homomorphism(src, dst, f, v)
    assert not report.ok
    assert report.witnesses[0].kind == "psr"


# --- the nerve of a PSR ----------------------------------------------------------

def test_psr_nerve_counts_single_letter_alphabet():
    m = trivial_pomdp()
    model = discover_core_tests(build_sdm(m, 2))
    dyn = psr_dynamics(m, model)
    ns = psr_nerve(dyn, 3, 2)
    # linear history chain of length L: chains of the poset [L]
    L = 2
    for n in range(4):
        assert ns.size(n) == math.comb(L + n + 1, n + 1)


def test_psr_nerve_is_simplicial():
    m = cycle2_pomdp()
    dyn = psr_dynamics(m, discover_core_tests(build_sdm(m, 2)))
    ns = psr_nerve(dyn, 3, 3)
    assert ns.validate() == []


def test_psr_nerve_inner_horn_fills_with_concatenation():
    m = cycle2_pomdp()
    dyn = psr_dynamics(m, discover_core_tests(build_sdm(m, 2)))
    ns = psr_nerve(dyn, 2, 2)
    rep = classify(ns, 2)
    assert rep.quasicategory_within_bound
    assert rep.nerve_like_within_bound
    inner = next(v for v in rep.horns if (v.n, v.k) == (2, 1))
    assert inner.without_filler == 0 and inner.with_multiple_fillers == 0
    # fill the horn whose edges are the two unit tests: the unique filler's
    # long edge is their concatenation, labeled with the composite probability
    from simpdisc.lifting import (
        HornFillingInstance,
        enumerate_simplicial_maps,
        fill_horn,
        horn_inclusion,
    )
    from simpdisc.sset import standard_simplex

    horn_sset, _, _ = horn_inclusion(2, 1, 2)
    labels1 = list(ns.labels[1])
    first_step = labels1.index("()=>a:o1|P=1")
    second_step = next(
        i for i, l in enumerate(labels1) if l.startswith("a:o1=>a:o0|")
    )
    pins = {
        (1, horn_sset.labels[1].index("0,1")): first_step,
        (1, horn_sset.labels[1].index("1,2")): second_step,
    }
    sigma0s = enumerate_simplicial_maps(horn_sset, ns, pins=pins)
    assert len(sigma0s) == 1
    fillers = fill_horn(HornFillingInstance(2, 1, ns, sigma0s[0]))
    assert len(fillers) == 1
    simplex = standard_simplex(2, 2)
    long_edge = simplex.labels[1].index("0,2")
    label = ns.label(1, fillers[0].apply(1, long_edge))
    assert label.startswith("()=>a:o1/a:o0|")  # the concatenated test
    assert label.endswith("|P=1")


def test_psr_nerve_labels_carry_conditional_probabilities():
    m = ring3_pomdp()
    dyn = psr_dynamics(m, discover_core_tests(build_sdm(m, 2)))
    ns = psr_nerve(dyn, 2, 1)
    # one-step labels condition on the empty history: the ring reaches state 1
    # first, so its true observation has probability 3/4 and the others 1/8
    assert any(l == "()=>a:o1|P=3/4" for l in ns.labels[1])
    assert any(l == "()=>a:o0|P=1/8" for l in ns.labels[1])


def test_psr_nerve_quasicategory_at_trunc_3():
    m = cycle2_pomdp()
    dyn = psr_dynamics(m, discover_core_tests(build_sdm(m, 2)))
    ns = psr_nerve(dyn, 3, 2)
    rep = classify(ns, 3)
    assert rep.quasicategory_within_bound
    assert rep.nerve_like_within_bound


def test_history_probability_positive_rows_only():
    m = switch2_pomdp()
    sdm = build_sdm(m, 2)
    for h in sdm.histories:
        assert history_probability(m, h) > 0
