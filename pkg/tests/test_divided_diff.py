import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gelfond.divided_diff import (MIN_GAP, divided_difference, exponential_dd,
                                  exponential_dd_derivative,
                                  exponential_dd_naive,
                                  exponential_dd_recursive,
                                  exponential_dd_shifted)


def test_generic_divided_difference():
    # leading-coefficient property: dd of x^2 over 3 nodes is 1
    assert divided_difference((0, 1, 3), lambda x: x * x) == 1
    assert divided_difference((Fraction(1, 2), 2), lambda x: x * x) == \
        Fraction(5, 2)
    with pytest.raises(ValueError):
        divided_difference((1, 1), lambda x: x)
    with pytest.raises(ValueError):
        divided_difference((), lambda x: x)


def test_routes_agree_exact():
    t = Fraction(2, 3)
    for nodes in [(0,), (0, 2), (0, 1, 3), (0, 3, 4, 6, 9)]:
        a = exponential_dd_naive(nodes, t)
        b = exponential_dd_recursive(nodes, t)
        c = divided_difference(nodes, lambda x: power_t(t, x))
        assert a == b == c
        assert isinstance(a, (int, Fraction))


def power_t(t, x):
    return Fraction(t) ** int(x)


def test_order_invariance():
    t = Fraction(1, 2)
    assert exponential_dd_naive((3, 0, 1), t) == \
        exponential_dd_naive((0, 1, 3), t)
    assert exponential_dd_recursive((3, 0, 1), t) == \
        exponential_dd_recursive((0, 1, 3), t)


@settings(deadline=None)
@given(st.sets(st.integers(0, 12), min_size=1, max_size=5),
       st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10)))
def test_routes_agree_random(nodes, t):
    nodes = tuple(sorted(nodes))
    assert exponential_dd_naive(nodes, t) == \
        exponential_dd_recursive(nodes, t)


def test_confluent_block_values():
    # [x, x] f_t = t^x ln t and [x, x, x] f_t = t^x ln(t)^2 / 2
    t = 0.7
    x = 1.5
    assert exponential_dd_recursive((x, x), t) == \
        pytest.approx(t ** x * math.log(t))
    assert exponential_dd_recursive((x, x, x), t) == \
        pytest.approx(t ** x * math.log(t) ** 2 / 2)


def test_confluent_matches_perturbed():
    t = 0.35
    eps = 1e-5
    exact = exponential_dd_recursive((1.0, 2.0, 2.0), t)
    near = exponential_dd_naive((1.0, 2.0 - eps, 2.0 + eps), t)
    assert abs(exact - near) < 1e-7 * max(1.0, abs(exact))


def test_dispatch_routes_near_coincident_nodes():
    t = 0.6
    close = (0.0, 1.0, 1.0 + MIN_GAP / 10)
    # dispatch must agree with the recursion it delegates to
    assert exponential_dd(close, t) == exponential_dd_recursive(close, t)
    assert exponential_dd((0.0, 1.0, 1.0), t) == \
        exponential_dd_recursive((0.0, 1.0, 1.0), t)
    wide = (0, 1, 3)
    assert exponential_dd(wide, Fraction(1, 3)) == \
        exponential_dd_naive(wide, Fraction(1, 3))
    with pytest.raises(ValueError):
        exponential_dd_naive((0.0, 1.0, 1.0), t)


def test_shift_identity():
    t = Fraction(3, 4)
    for nodes in [(2, 5, 7), (1, 3), (4,)]:
        assert exponential_dd_shifted(nodes, t) == \
            exponential_dd_naive(nodes, t)


def test_derivative_identity():
    t = Fraction(2, 5)
    for nodes in [(1,), (1, 2), (1, 4, 6), (2, 3, 5, 8)]:
        # exact reference: differentiate the partial-fraction sum term-wise
        ref = 0
        for i, xi in enumerate(nodes):
            den = 1
            for j, xj in enumerate(nodes):
                if j != i:
                    den *= xi - xj
            ref += Fraction(xi) * t ** (xi - 1) / den
        assert exponential_dd_derivative(nodes, t) == ref


def test_input_validation():
    with pytest.raises(ValueError):
        exponential_dd((0, 1), 0)
    with pytest.raises(ValueError):
        exponential_dd((0, 1), -0.5)
    with pytest.raises(ValueError):
        exponential_dd((), Fraction(1, 2))
