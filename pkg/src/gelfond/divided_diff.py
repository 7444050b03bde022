"""Divided differences of f_t(x) = t**x in the exponent nodes x.

Two routes:

 * naive partial-fraction sum over distinct nodes,
       [x_0..x_s] f_t = sum_i t^{x_i} / prod_{j != i} (x_i - x_j),
   exact for rational t and integer nodes;
 * the classical recursion, which also handles repeated nodes through the
   analytic derivatives d^m/dx^m t^x = t^x ln(t)^m.

The production dispatch uses the naive sum unless nodes repeat or the
smallest gap drops below MIN_GAP (the sum's cancellation blows up roughly
like 1/gap, the recursion degrades much more gently).
"""

import math
from fractions import Fraction

from .arith import exact_div, power, simplify

MIN_GAP = 1e-3


def divided_difference(nodes, f):
    """Recursive divided difference of an arbitrary callable on distinct
    nodes."""
    xs = tuple(nodes)
    if not xs:
        raise ValueError("at least one node required")
    if len(set(xs)) != len(xs):
        raise ValueError("repeated nodes are only supported for f_t(x) = t**x")
    table = [f(x) for x in xs]
    for level in range(1, len(xs)):
        table = [exact_div(table[i + 1] - table[i], xs[i + level] - xs[i])
                 for i in range(len(table) - 1)]
    return table[0]


def _check_t(t):
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    return t


def exponential_dd_naive(nodes, t):
    """Partial-fraction form; nodes must be pairwise distinct."""
    _check_t(t)
    xs = tuple(nodes)
    if not xs:
        raise ValueError("at least one node required")
    if len(set(xs)) != len(xs):
        raise ValueError("naive form needs distinct nodes")
    out = 0
    for i, xi in enumerate(xs):
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                den = den * (xi - xj)
        out = out + exact_div(power(t, xi), den)
    return simplify(out)


def exponential_dd_recursive(nodes, t):
    """Recursion with confluent blocks.

    Nodes are sorted so repeats are adjacent; a block of m+1 equal nodes x
    contributes f^{(m)}(x)/m! = t^x ln(t)^m / m!.  Repeats therefore force
    the float route (ln), while distinct exact inputs stay exact."""
    _check_t(t)
    xs = tuple(sorted(nodes))
    if not xs:
        raise ValueError("at least one node required")
    memo = {}

    def dd(i, j):
        if (i, j) in memo:
            return memo[(i, j)]
        if xs[i] == xs[j]:
            m = j - i
            if m == 0:
                val = power(t, xs[i])
            else:
                val = (float(power(t, xs[i])) * math.log(float(t)) ** m
                       / math.factorial(m))
        else:
            val = exact_div(dd(i + 1, j) - dd(i, j - 1), xs[j] - xs[i])
        memo[(i, j)] = val
        return val

    out = dd(0, len(xs) - 1)
    return simplify(out)


def exponential_dd(nodes, t):
    """Production dispatch between the naive sum and the recursion."""
    xs = tuple(nodes)
    if not xs:
        raise ValueError("at least one node required")
    s = sorted(xs)
    gaps = [b - a for a, b in zip(s, s[1:])]
    if any(g == 0 for g in gaps) or any(g < MIN_GAP for g in gaps):
        return exponential_dd_recursive(xs, t)
    return exponential_dd_naive(xs, t)


def exponential_dd_shifted(nodes, t):
    """Shift identity: [x_0..x_s] f_t = t^{x_0} [0, x_1-x_0, ..] f_t.

    Nodes are sorted first so x_0 is the minimum."""
    xs = tuple(sorted(nodes))
    if not xs:
        raise ValueError("at least one node required")
    x0 = xs[0]
    return power(_check_t(t), x0) * exponential_dd([x - x0 for x in xs], t)


def exponential_dd_derivative(nodes, t):
    """d/dt [x_0..x_s] f_t = x_0 [x_0-1, .., x_s-1] f_t + [x_1-1, .., x_s-1] f_t.

    Nodes are sorted ascending before applying the identity."""
    xs = tuple(sorted(nodes))
    if not xs:
        raise ValueError("at least one node required")
    _check_t(t)
    first = exponential_dd([x - 1 for x in xs], t)
    if len(xs) == 1:
        return xs[0] * first
    second = exponential_dd([x - 1 for x in xs[1:]], t)
    return xs[0] * first + second
