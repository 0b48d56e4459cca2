import pytest

from chromaq.colourings import (
    NotProper,
    count_colourings,
    enumerate_colourings,
    fixed_point_chain,
    is_proper,
    stats,
)
from chromaq.hessenberg import all_reverse_hessenberg, parse, staircase, validate
from oracles import brute_ascents, brute_colourings


def test_is_proper_examples():
    r = parse("0,0")
    assert is_proper((1, 2), r)
    assert not is_proper((1, 1), r)
    assert is_proper((1, 1), parse("0,1"))  # staircase: no edges


def test_stats_examples():
    r = parse("0,0")
    s = stats((1, 2), r, 2)
    assert s.ascents == 1 and s.height == 3 and s.weight == (1, 1) and s.cell_dim == 0
    s = stats((2, 1), r, 2)
    assert s.ascents == 0 and s.height == 3 and s.cell_dim == 1
    s = stats((1, 1, 1), staircase(3), 2)
    assert s.ascents == 0 and s.height == 3 and s.cell_dim == 0


def test_stats_rejects_improper():
    with pytest.raises(NotProper):
        stats((1, 1), parse("0,0"), 2)
    with pytest.raises(NotProper):
        stats((1, 3), parse("0,0"), 2)  # colour out of range
    with pytest.raises(NotProper):
        stats((1,), parse("0,0"), 2)  # wrong length


def test_enumeration_examples():
    assert [k for k, _ in enumerate_colourings(parse("0,0"), 2)] == [(1, 2), (2, 1)]
    assert len(list(enumerate_colourings(parse("0,1"), 2))) == 4
    assert list(enumerate_colourings(parse("0,0,0"), 2)) == []


@pytest.mark.parametrize("n", range(7))
def test_enumeration_against_brute_force(n):
    # the filter-everything oracle is m^n; cap m where that explodes.
    # larger m are covered by the paving tests, whose q=1 value counts
    # every colouring through an independent route.
    brute_cap = 5 if n <= 5 else 3
    for r in all_reverse_hessenberg(n):
        for m in range(1, brute_cap + 1):
            got = [k for k, _ in enumerate_colourings(r, m)]
            assert got == sorted(brute_colourings(r.values, m))
            assert len(got) == count_colourings(r, m)


@pytest.mark.parametrize("n", range(6))
def test_incremental_stats_consistent(n):
    for r in all_reverse_hessenberg(n):
        for m in (2, 4):
            for kappa, st in enumerate_colourings(r, m):
                fresh = stats(kappa, r, m)
                assert fresh == st
                assert st.ascents == brute_ascents(r.values, kappa)
                assert sum(st.weight) == n
                assert st.height == sum(kappa)
                assert st.cell_dim == st.height - st.ascents - n >= 0


def test_ascent_bounds_and_extreme_cells():
    # exactly one bottom and one top cell for every feasible pair
    for n in range(7):
        for r in all_reverse_hessenberg(n):
            for m in range(r.min_feasible_m(), 7):
                d_r = (m - 1) * n - r.edge_count()
                dims = []
                for kappa, st in enumerate_colourings(r, m):
                    dims.append(st.cell_dim)
                    assert st.cell_dim <= d_r
                    for i in range(1, n + 1):
                        a = st.ascents_at[i - 1]
                        assert 0 <= a <= min(i - 1 - r.r(i), kappa[i - 1] - 1)
                assert dims.count(0) == 1
                assert dims.count(d_r) == 1


def test_window_clique_property():
    # the colours in each window {r(i)+1 .. i} are pairwise distinct
    for n in range(6):
        for r in all_reverse_hessenberg(n):
            for kappa, _ in enumerate_colourings(r, 5):
                for i in range(1, n + 1):
                    window = kappa[r.r(i): i]
                    assert len(set(window)) == i - r.r(i)


def test_fixed_point_chain():
    assert fixed_point_chain((1, 2), 2) == [(1, 0), (1, 1)]
    assert fixed_point_chain((2, 2, 1), 2) == [(0, 1), (0, 2), (1, 2)]
    assert fixed_point_chain((), 3) == []


def test_fixed_point_chain_steps_are_unit_vectors():
    r = validate((0, 0, 1, 1))
    for kappa, st in enumerate_colourings(r, 3):
        chain = fixed_point_chain(kappa, 3)
        assert chain[-1] == st.weight
        prev = (0, 0, 0)
        for mu, c in zip(chain, kappa):
            diff = tuple(a - b for a, b in zip(mu, prev))
            assert sum(diff) == 1 and diff[c - 1] == 1
            prev = mu
