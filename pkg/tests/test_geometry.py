import pytest

from chromaq.colourings import count_colourings
from chromaq.geometry import (
    Infeasible,
    dimension,
    exponent_identity_check,
    fibre_dimension,
    geometry_report,
    poincare_bb,
    poincare_product,
)
from chromaq.hessenberg import all_reverse_hessenberg, complete, parse, staircase
from chromaq.qpoly import QPoly


def test_dimension_examples():
    assert dimension(staircase(3), 2) == 3
    assert dimension(parse("0,0,1"), 3) == 4
    assert dimension(complete(3), 3) == 3


def test_infeasible_raises():
    with pytest.raises(Infeasible):
        dimension(complete(3), 2)
    with pytest.raises(Infeasible):
        poincare_product(complete(4), 3)
    with pytest.raises(Infeasible):
        poincare_bb(complete(4), 3)
    with pytest.raises(Infeasible):
        exponent_identity_check(complete(4), 3)


def test_fibre_dimension_examples():
    assert fibre_dimension(parse("0,0,1"), 3, 3) == 1
    assert fibre_dimension(parse("0"), 4, 1) == 3
    for i in range(1, 5):
        assert fibre_dimension(staircase(4), 3, i) == 2


def test_poincare_product_examples():
    assert poincare_product(parse("0"), 2) == QPoly([1, 1])
    assert poincare_product(parse("0,0"), 2) == QPoly([1, 1])
    assert poincare_product(parse("0,0,1"), 3) == QPoly([1, 3, 4, 3, 1])


def test_poincare_bb_examples():
    assert poincare_bb(parse("0"), 2) == QPoly([1, 1])
    assert poincare_bb(parse("0,0"), 2) == QPoly([1, 1])
    assert poincare_bb(staircase(1), 3) == QPoly([1, 1, 1])
    assert poincare_bb(parse(""), 5) == QPoly([1])


@pytest.mark.parametrize("n", range(7))
def test_paving_matches_bundle_product(n):
    for r in all_reverse_hessenberg(n):
        for m in range(r.min_feasible_m(), 8):
            product = poincare_product(r, m)
            bb = poincare_bb(r, m)
            assert product == bb
            assert product.degree() == dimension(r, m)
            assert bb.eval_at_one() == count_colourings(r, m)
            assert bb.is_palindromic(dimension(r, m))
            assert bb.coefficient(0) == 1
            assert bb.coefficient(dimension(r, m)) == 1


def test_bb_parallel_matches_sequential():
    for text in ("0,0,1,1", "0,1,1,2", "0,0,0,0"):
        r = parse(text)
        for m in range(r.min_feasible_m(), 7):
            assert poincare_bb(r, m, parallel=True) == poincare_bb(r, m)


def test_exponent_identity_examples():
    assert exponent_identity_check(parse("0,0"), 2)
    assert exponent_identity_check(staircase(1), 2)
    assert exponent_identity_check(parse(""), 3)  # vacuous for n=0


@pytest.mark.parametrize("n", range(6))
def test_exponent_identity_sweep(n):
    for r in all_reverse_hessenberg(n):
        for m in range(r.min_feasible_m(), 7):
            assert exponent_identity_check(r, m)


def test_geometry_report():
    rep = geometry_report(parse("0,0,1"), 3)
    assert rep.d_r == 4
    assert rep.fibre_dims == (2, 1, 1)
    assert rep.identities_pass
    data = rep.to_json()
    assert data["d_r"] == 4
    assert data["poincare_product"] == data["poincare_bb"]
