from fractions import Fraction

import pytest

from gelfond.curves import (GelfondBezierCurve, c1_join, c1_join_head,
                            curve_from_json, curve_to_json, derivative_curve,
                            endpoint_derivatives, hyperplane_crossings,
                            initial_tangency)
from gelfond.polynomials import Poly


def unit_poly(curve, dim):
    """Exact polynomial of one coordinate in the local parameter."""
    coeffs = curve.coefficients()
    exps = tuple(int(x) for x in curve.exponents)
    out = Poly()
    for k, c in enumerate(coeffs):
        c = c[dim] if isinstance(c, tuple) else c
        out = out + Poly.monomial(c, exps[k])
    return out


def test_evaluate_routes_agree():
    curve = GelfondBezierCurve((0, 3, 4, 6, 9),
                               ((0, 0), (1, 4), (3, 4), (4, 1), (5, 0)))
    for t in (Fraction(1, 5), Fraction(1, 2), Fraction(4, 5)):
        assert curve.evaluate(t) == curve.evaluate_de_casteljau(t)
    assert curve(0) == (0, 0) and curve(1) == (5, 0)


def test_interval_reparametrization():
    pts = ((0, 0), (1, 4), (3, 4), (4, 0))
    base = GelfondBezierCurve((0, 1, 2, 20), pts)
    moved = GelfondBezierCurve((0, 1, 2, 20), pts, (1, 3))
    for u in (Fraction(0), Fraction(1, 4), Fraction(1)):
        assert moved.evaluate(1 + 2 * u) == base.evaluate(u)
    with pytest.raises(ValueError):
        moved.evaluate(0)


def test_derivative_unit_case_exact():
    # r_1 = 1: hodograph lives in the (n-1)-order reduced space
    curve = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)), (1, 3))
    d = curve.derivative()
    assert tuple(d.exponents) == (0, 2)
    for dim in range(2):
        dp = unit_poly(curve, dim).derivative()
        for t in (1, Fraction(3, 2), 3):
            u = curve.local_parameter(t)
            expect = dp(u) * Fraction(1, 2)    # d/dt of the local map
            got = d.evaluate(t)
            assert got[dim] == expect


def test_derivative_shifted_case_exact():
    # r_1 > 1: order is kept and the leading control point is zero
    curve = GelfondBezierCurve((0, 2, 3), (1, 4, 2))
    d = curve.derivative()
    assert tuple(d.exponents) == (0, 1, 2)
    assert d.points[0] == 0
    dp = unit_poly(curve, 0).derivative()
    for t in (0, Fraction(1, 3), Fraction(7, 8), 1):
        assert d.evaluate(t) == dp(t)
    assert d.evaluate(0) == 0


def test_derivative_needs_unit_or_larger_exponent():
    curve = GelfondBezierCurve((0, 0.5, 2), (0.0, 1.0, 0.0))
    with pytest.raises(NotImplementedError):
        curve.derivative()


def test_endpoint_derivative_identities():
    curve = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)), (1, 3))
    at_a, at_b = endpoint_derivatives(curve)
    d = curve.derivative()
    assert at_a == d.evaluate(1)
    assert at_b == d.evaluate(3)
    # r_1 > 1 pins the start derivative to zero
    curve2 = GelfondBezierCurve((0, 2, 3), (1, 4, 2))
    at_a2, at_b2 = endpoint_derivatives(curve2)
    assert at_a2 == 0
    assert at_b2 == curve2.derivative().evaluate(1)


def test_initial_tangency_constant():
    # P^(r_1)(a) = r_1! prod_{j>=2} r_j/(r_j - r_1) (p_1 - p_0)/(b-a)^{r_1}
    curve = GelfondBezierCurve((0, 2, 3), (1, 4, 2), (0, 2))
    order, value = initial_tangency(curve)
    assert order == 2
    dpp = unit_poly(curve, 0).derivative().derivative()
    assert value == dpp(0) * Fraction(1, 4)
    assert value == 2 * Fraction(3, 3 - 2) * (4 - 1) * Fraction(1, 4)


def test_left_segment_matches():
    curve = GelfondBezierCurve((0, 3, 4, 6, 9),
                               ((0, 0), (1, 4), (3, 4), (4, 1), (5, 0)))
    x = Fraction(2, 3)
    left = curve.left_segment(x)
    assert left.interval == (0, x)
    for t in (0, Fraction(1, 4), Fraction(7, 12), x):
        assert left.evaluate(t) == curve.evaluate(t)


def test_blossom_diagonal_matches_evaluate():
    curve = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)), (1, 3))
    s = Fraction(1, 4)
    assert curve.blossom((s,) * 2) == curve.evaluate(1 + 2 * s)


def test_json_roundtrip():
    curve = GelfondBezierCurve(
        (0, Fraction(3, 2), 3), ((0, 0), (Fraction(1, 2), 2), (3, -1)),
        (0, Fraction(5, 2)))
    back = curve_from_json(curve_to_json(curve))
    assert back.exponents == curve.exponents
    assert back.points == curve.points
    assert back.interval == curve.interval


def test_c1_join_head_frozen():
    left = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)))
    q0, q1 = c1_join_head(left, (0, 1, 3), (1, 2))
    assert q0 == (3, 0)
    assert q1 == (7, -4)


def test_c1_join_continuity_exact():
    left = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)))
    right = c1_join(left, (0, 1, 2, 4), (1, Fraction(5, 2)),
                    ((4, 1), (5, 0)))
    b = 1
    assert right.evaluate(b) == left.evaluate(b)
    assert derivative_curve(right).evaluate(b) == \
        derivative_curve(left).evaluate(b)


def test_c1_join_validation():
    left = GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 2), (3, 0)))
    with pytest.raises(NotImplementedError):
        c1_join_head(left, (0, 2, 3), (1, 2))
    with pytest.raises(ValueError):
        c1_join_head(left, (0, 1, 3), (2, 3))
    with pytest.raises(ValueError):
        c1_join(left, (0, 1, 3), (1, 2), ())


def test_variation_diminishing_spot():
    curve = GelfondBezierCurve((0, 3, 4, 6, 9),
                               ((0, 0), (1, 4), (3, 4), (4, 1), (5, 0)))
    for normal, offset in [((0, 1), 1.0), ((0, 1), 3.9), ((1, 0), 2.5),
                           ((1, -1), 0.0)]:
        on_curve, on_polygon = hyperplane_crossings(curve, normal, offset)
        assert on_curve <= on_polygon


def test_curve_validation():
    with pytest.raises(ValueError):
        GelfondBezierCurve((0, 1, 3), ((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        GelfondBezierCurve((0, 1), ((0, 0), 1))
    with pytest.raises(ValueError):
        GelfondBezierCurve((0, 1), ((0, 0), (1, 1)), (2, 2))
