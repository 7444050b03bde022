from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gelfond.partitions import IntegerPartition, RealPartition
from gelfond.schur import (branch_last_variable, branch_last_variable_skew,
                           complete_homogeneous, elementary, hook_schur,
                           schur, schur_bialternant, schur_giambelli,
                           schur_jacobi_trudi, schur_nagelsbach_kostka,
                           schur_tableaux, skew_schur, skew_schur_tableaux,
                           split_partition, splitting_limit)

ROUTES = (schur_jacobi_trudi, schur_nagelsbach_kostka, schur_giambelli,
          schur_bialternant, schur_tableaux)


@st.composite
def partitions_and_points(draw):
    length = draw(st.integers(0, 4))
    parts = sorted(draw(st.lists(st.integers(1, 4), min_size=length,
                                 max_size=length)), reverse=True)
    while sum(parts) > 8:
        parts.pop()
    m = draw(st.integers(max(1, len(parts)), 5))
    # rational positive points, repeats allowed on purpose
    pool = [Fraction(draw(st.integers(1, 8)), draw(st.integers(1, 4)))
            for _ in range(m)]
    return IntegerPartition(parts), tuple(pool)


def test_h_and_e_conventions():
    pts = (Fraction(1, 2), 2, 3)
    assert complete_homogeneous(0, pts) == 1
    assert elementary(0, pts) == 1
    assert complete_homogeneous(-1, pts) == 0
    assert elementary(-2, pts) == 0
    assert complete_homogeneous(1, pts) == Fraction(11, 2)
    assert elementary(1, pts) == Fraction(11, 2)
    assert elementary(4, pts) == 0          # more boxes than variables
    assert elementary(3, pts) == 3


def test_points_must_be_positive():
    for route in ROUTES:
        with pytest.raises(ValueError):
            route((2, 1), (1, 0))
        with pytest.raises(ValueError):
            route((2, 1), (1, -2))


def test_routes_agree_fixed():
    cases = [
        ((), (2, 3)),
        ((1,), (Fraction(1, 2),)),
        ((2, 1), (1, 2, 3)),
        ((3, 1, 1), (Fraction(1, 2), Fraction(1, 2), 2)),
        ((2, 2, 2), (1, 1, 1, 1)),
        ((4, 2, 1), (2, 2, 3, Fraction(5, 3))),
    ]
    for parts, pts in cases:
        vals = [route(parts, pts) for route in ROUTES]
        assert all(v == vals[0] for v in vals), (parts, pts, vals)


@settings(deadline=None, max_examples=60)
@given(partitions_and_points())
def test_routes_agree_random(case):
    lam, pts = case
    vals = [route(lam, pts) for route in ROUTES]
    assert all(v == vals[0] for v in vals), (lam, pts, vals)


def test_confluent_bialternant_exact():
    # triple and double points force derivative rows in the alternant
    for parts, pts in [
        ((2, 1), (2, 2, 2)),
        ((3, 2), (Fraction(1, 2), Fraction(1, 2), 3)),
        ((2, 2, 1), (3, 3, 2, 2)),
    ]:
        assert schur_bialternant(parts, pts) == schur_jacobi_trudi(parts, pts)


def test_confluent_matches_perturbed_float():
    # a double point should match a symmetric perturbation up to the
    # Taylor error eps^2; eps much smaller makes the perturbed alternant
    # itself ill-conditioned (denominator 2 eps), so keep eps moderate
    parts = (2, 1)
    eps = 1e-4
    exact = float(schur_bialternant(parts, (2.0, 2.0, 0.5)))
    near = schur_bialternant(parts, (2.0 + eps, 2.0 - eps, 0.5))
    assert abs(exact - near) < 1e-6 * max(1.0, abs(exact))


def test_real_partition_bialternant():
    # one part: S_(x)(u) = u^x; two points, shape (x, 0): h_x analogue
    x = 2.5
    u = 1.7
    assert schur_bialternant((x,), (u,)) == pytest.approx(u ** x)
    u1, u2 = 1.3, 0.6
    expect = (u1 ** (x + 1) - u2 ** (x + 1)) / (u1 - u2)
    assert schur_bialternant((x, 0), (u1, u2)) == pytest.approx(expect)
    assert schur(RealPartition((x, 0)), (u1, u2)) == pytest.approx(expect)


def test_hook_schur_matches_hook_shape():
    pts = (Fraction(1, 3), 2, 2)
    for arm in range(3):
        for leg in range(3):
            shape = (arm + 1,) + (1,) * leg
            assert hook_schur(arm, leg, pts) == schur_jacobi_trudi(shape, pts)
    assert hook_schur(-1, 0, pts) == 0
    assert hook_schur(0, -1, pts) == 0


def test_skew_schur_routes():
    pts = (1, 2, Fraction(1, 2))
    cases = [((3, 2, 1), (1, 1)), ((3, 3), (2,)), ((2, 2, 2), (2, 1)),
             ((4, 1), (4, 1)), ((2, 1), ())]
    for lam, mu in cases:
        assert skew_schur(lam, mu, pts) == skew_schur_tableaux(lam, mu, pts)
    # mu not inside lam
    assert skew_schur((2, 1), (3,), pts) == 0
    # empty skew shape sums the single empty tableau
    assert skew_schur((2, 1), (2, 1), pts) == 1


def test_branching_rules():
    pts = (2, Fraction(3, 2))
    last = Fraction(1, 2)
    for parts in [(), (1,), (2, 1), (3, 2, 1), (2, 2)]:
        full = schur(parts, pts + (last,))
        assert branch_last_variable(parts, pts, last) == full
        assert branch_last_variable_skew(parts, pts, last) == full


def test_split_partition():
    lam, mu = split_partition((5, 3, 1), 2, 2)
    assert lam.parts == (5, 3) and mu.parts == (1, 0)
    # any prefix/suffix split of a valid chain is again two valid chains
    for k in range(5):
        split_partition(RealPartition((4.5, 2.5, 2.0, 0.25)), k, 4 - k)


def test_splitting_limit_exact():
    eta = (3, 2, 1)
    z = (2, Fraction(1, 2))
    y = (3,)
    lam, mu = split_partition(eta, 2, 1)
    assert splitting_limit(eta, z, y) == schur(lam, z) * schur(mu, y)


def test_splitting_limit_is_the_scaled_limit():
    eta = (3, 2, 1)
    z = (2.0, 0.5)
    y = (3.0,)
    _, mu = split_partition(eta, 2, 1)
    w = sum(mu.parts)
    limit = float(splitting_limit(eta, z, y))
    for eps in (1e-4, 1e-6):
        scaled = float(schur(RealPartition((3, 2, 1)),
                             z + tuple(eps * u for u in y))) / eps ** w
        assert abs(scaled - limit) < 1e-3 * eps / 1e-6 * max(1.0, abs(limit))
