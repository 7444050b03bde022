"""Shared arithmetic helpers: exact/float dispatch, powers, determinants.

Every routine in this package follows one rule: if all inputs are ints or
Fractions the result is exact, otherwise the computation silently falls
back to floats.  The predicates and wrappers here implement that rule in
one place.
"""

import math
from fractions import Fraction


class SingularityError(ArithmeticError):
    """A denominator that the theory requires to be nonzero vanished."""


def is_exact(x):
    """True when x participates in the exact rational path."""
    return isinstance(x, (int, Fraction))


def all_exact(xs):
    return all(is_exact(x) for x in xs)


def is_integral(x):
    """True for ints and Fractions with denominator 1."""
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return False


def power(base, exponent):
    """base ** exponent, exact when the exponent is integral and base is exact.

    Non-integral exponents force the float route; base must be positive
    there (the bases in this package are curve parameters and evaluation
    points, all constrained to positive values before reaching here).
    """
    if is_exact(base) and is_integral(exponent):
        e = int(exponent)
        if base == 0 and e < 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return Fraction(base) ** e if isinstance(base, Fraction) or e < 0 else base ** e
    b = float(base)
    e = float(exponent)
    if b < 0.0:
        raise ValueError("negative base with non-integer exponent")
    if b == 0.0:
        if e < 0.0:
            raise ZeroDivisionError("0.0 raised to a negative power")
        return 1.0 if e == 0.0 else 0.0
    return b ** e


def exact_div(x, y):
    """x / y staying in Fractions when both sides are exact (plain int
    division would produce a float)."""
    if y == 0:
        raise SingularityError(f"division by zero: {x} / {y}")
    if is_exact(x) and is_exact(y):
        return Fraction(x) / Fraction(y)
    return x / y


def falling_factorial(a, q):
    """a (a-1) ... (a-q+1); empty product for q = 0."""
    out = 1
    for i in range(q):
        out = out * (a - i)
    return out


def det(rows):
    """Determinant of a square matrix given as a list of row lists.

    All-exact entries: fraction arithmetic with the first nonzero pivot,
    giving an exact result.  Any float entry: partial pivoting on
    magnitude.  The empty matrix has determinant 1.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if all(all_exact(r) for r in m):
        m = [[Fraction(x) for x in r] for r in m]
        sign = 1
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                sign = -sign
            pivot = m[col][col]
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] / pivot
                    for c in range(col, n):
                        m[r][c] -= factor * m[col][c]
        out = Fraction(sign)
        for i in range(n):
            out *= m[i][i]
        return out
    m = [[float(x) for x in r] for r in m]
    sign = 1.0
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(m[r][col]))
        if m[pivot_row][col] == 0.0:
            return 0.0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / pivot
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    out = sign
    for i in range(n):
        out *= m[i][i]
    return out


def product(xs):
    return math.prod(xs) if xs else 1


def simplify(x):
    """Collapse integral Fractions back to int so reprs stay readable."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def parse_number(text):
    """Parse "p/q", integer, or float literals (serialization inverse)."""
    if isinstance(text, (int, float)):
        return text
    s = str(text).strip()
    if "/" in s:
        return Fraction(s)
    try:
        return int(s)
    except ValueError:
        return float(s)


def format_number(x):
    """Serialize a number: Fractions as "p/q" strings, ints/floats as-is."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return f"{x.numerator}/{x.denominator}"
    return x


def as_point(p):
    """Normalize a control point: bare numbers stay scalar, sequences
    become tuples."""
    if isinstance(p, (tuple, list)):
        return tuple(p)
    return p


def lerp(p, q, w):
    """(1 - w) p + w q for scalars or same-length point tuples."""
    if isinstance(p, tuple):
        return tuple((1 - w) * a + w * b for a, b in zip(p, q, strict=True))
    return (1 - w) * p + w * q


def vec_sub(p, q):
    if isinstance(p, tuple):
        return tuple(a - b for a, b in zip(p, q, strict=True))
    return p - q


def vec_add(p, q):
    if isinstance(p, tuple):
        return tuple(a + b for a, b in zip(p, q, strict=True))
    return p + q


def vec_scale(c, p):
    if isinstance(p, tuple):
        return tuple(c * a for a in p)
    return c * p


def vec_zero_like(p):
    if isinstance(p, tuple):
        return tuple(0 * a for a in p)
    return 0 * p
