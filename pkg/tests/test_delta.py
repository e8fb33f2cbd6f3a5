"""Ordinal-category operations: composition, generators, decomposition."""

import itertools

import pytest

from simpdisc.delta import (
    MonotoneMap,
    all_monotone_maps,
    as_map,
    codegeneracy,
    coface,
    compose,
    decompose,
    identity,
    recompose,
    verify_simplicial_relations,
)
from simpdisc.errors import DimensionMismatchError


def test_compose_sigma0_delta0_is_identity():
    # sigma_0 : [1] -> [0] after delta_0 : [0] -> [1]
    sigma0 = as_map(codegeneracy(0, 0))
    delta0 = as_map(coface(0, 1))
    assert compose(sigma0, delta0) == identity(0)


def test_compose_identity_left():
    for m, n in itertools.product(range(4), repeat=2):
        for f in all_monotone_maps(m, n):
            assert compose(identity(n), f) == f
            assert compose(f, identity(m)) == f


def test_compose_delta2_delta1():
    # delta_2 : [1] -> [2] after delta_1 : [0] -> [1] is 0 |-> 0
    lhs = compose(as_map(coface(2, 2)), as_map(coface(1, 1)))
    assert lhs == MonotoneMap(1, 3, (0,))


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        compose(as_map(coface(0, 1)), as_map(coface(0, 1)))


def test_as_map_coface_examples():
    assert as_map(coface(1, 1)) == MonotoneMap(1, 2, (0,))
    assert as_map(coface(0, 2)) == MonotoneMap(2, 3, (1, 2))


def test_as_map_codegeneracy_example():
    assert as_map(codegeneracy(0, 0)) == MonotoneMap(2, 1, (0, 0))


def test_as_map_index_out_of_range():
    with pytest.raises(ValueError):
        coface(3, 2)
    with pytest.raises(ValueError):
        codegeneracy(-1, 2)


def test_decompose_identity_is_empty():
    assert decompose(identity(3)) == ()


def test_decompose_sigma0_already_elementary():
    sigma0 = as_map(codegeneracy(0, 0))
    assert decompose(sigma0) == (codegeneracy(0, 0),)


def test_decompose_recompose_exhaustive():
    # every monotone map [m] -> [n], m, n <= 5, round-trips
    for m in range(6):
        for n in range(6):
            for f in all_monotone_maps(m, n):
                seq = decompose(f)
                assert recompose(seq, m) == f


def test_decompose_injective_has_no_codegeneracies():
    for m in range(5):
        for n in range(m, 6):
            for f in all_monotone_maps(m, n):
                if f.is_injective():
                    assert all(e.kind.value == "coface" for e in decompose(f))


def test_decompose_surjective_has_no_cofaces():
    for m in range(6):
        for n in range(m + 1):
            for f in all_monotone_maps(m, n):
                if f.is_surjective():
                    assert all(e.kind.value == "codegeneracy" for e in decompose(f))


def test_decompose_shape_is_codegeneracies_then_cofaces():
    for m in range(5):
        for n in range(5):
            for f in all_monotone_maps(m, n):
                kinds = [e.kind.value for e in decompose(f)]
                if "coface" in kinds:
                    first_coface = kinds.index("coface")
                    assert "codegeneracy" not in kinds[first_coface:]


def test_relations_clean_up_to_six():
    report = verify_simplicial_relations(6)
    assert report.ok
    assert report.checked > 0


def test_relations_clean_at_one():
    report = verify_simplicial_relations(1)
    assert report.ok


def test_middle_case_identity_up_to_six():
    # sigma_j . delta_i = id for i = j and i = j + 1
    for n in range(7):
        for j in range(n + 1):
            for i in (j, j + 1):
                got = compose(as_map(codegeneracy(j, n)), as_map(coface(i, n + 1)))
                assert got == identity(n)


def test_associativity_exhaustive_small():
    # all composable triples between ordinals of cardinality <= 4
    maps = {
        (m, n): list(all_monotone_maps(m, n))
        for m in range(4)
        for n in range(4)
    }
    for a, b, c, d in itertools.product(range(4), repeat=4):
        for f in maps[(a, b)]:
            for g in maps[(b, c)]:
                gf = compose(g, f)
                for h in maps[(c, d)]:
                    assert compose(h, gf) == compose(compose(h, g), f)


def test_associativity_of_elementary_triples_up_to_dim_six():
    # every composable triple of generators with ordinals up to size 6
    elementary = []
    for n in range(1, 7):
        elementary.extend(as_map(coface(i, n)) for i in range(n + 1))
    for n in range(6):
        elementary.extend(as_map(codegeneracy(j, n)) for j in range(n + 1))
    by_dom = {}
    for e in elementary:
        by_dom.setdefault(e.dom_size, []).append(e)
    for f in elementary:
        for g in by_dom.get(f.cod_size, ()):
            gf = compose(g, f)
            for h in by_dom.get(g.cod_size, ()):
                assert compose(h, gf) == compose(compose(h, g), f)


def test_text_round_trip():
    for m in range(4):
        for n in range(4):
            for f in all_monotone_maps(m, n):
                assert MonotoneMap.from_text(f.to_text()) == f
