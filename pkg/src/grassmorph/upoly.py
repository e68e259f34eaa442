"""Dense univariate polynomials over Q.

A polynomial is a list of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is ``[]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

UPoly = list


def trim(a: Sequence) -> UPoly:
    a = [Fraction(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: UPoly) -> int:
    return len(a) - 1


def add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def scale(a: UPoly, c) -> UPoly:
    return trim([x * c for x in a])


def mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(r) < len(b):
        return [], trim(r)
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(r) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    return trim(q), trim(r[: len(b) - 1])


def rem(a: UPoly, b: UPoly) -> UPoly:
    return divmod_(a, b)[1]


def exact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a: UPoly) -> UPoly:
    return scale(a, 1 / a[-1]) if a else []


def gcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, monic(rem(a, b))
    return monic(a)


def derivative(a: UPoly) -> UPoly:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: UPoly, x):
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_decomposition(a: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: monic pairwise coprime squarefree ``(h, i)`` with a ~ prod h^i."""
    a = monic(trim(a))
    if len(a) <= 1:
        return []
    out = []
    da = derivative(a)
    g = gcd(a, da)
    b = exact_div(a, g)
    c = exact_div(da, g)
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        h = gcd(b, d)
        b = exact_div(b, h)
        c = exact_div(d, h)
        d = sub(c, derivative(b))
        if len(h) > 1:
            out.append((monic(h), i))
        i += 1
    return out


def interpolate(xs: Sequence[int], ys: Sequence) -> UPoly:
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: UPoly = []
    for i in range(n - 1, -1, -1):
        out = add(mul(out, [Fraction(-xs[i]), Fraction(1)]), [coef[i]])
    return out


def mulmod(a: UPoly, b: UPoly, m: UPoly) -> UPoly:
    return rem(mul(a, b), m)


def factor_rational(a: UPoly) -> list[tuple[UPoly, int]]:
    """Irreducible factorization over Q as monic ``(factor, multiplicity)`` pairs.

    Backed by sympy; factors are sorted by (degree, coefficients) so the
    output order is deterministic.
    """
    import sympy

    a = trim(a)
    if len(a) <= 1:
        return []
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a)], t, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((monic(trim(coeffs)), mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0], fm[1]))
    return out


# Integer-coefficient helpers (lists of ints, lowest degree first).

def primitive(a: Sequence) -> list[int]:
    """Primitive integer multiple of a rational polynomial (positive leading coefficient)."""
    from math import gcd as igcd, lcm
    a = trim(a)
    if not a:
        return []
    d = 1
    for c in a:
        d = lcm(d, c.denominator)
    ints = [int(c * d) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def monic_integral(h: Sequence[int]) -> tuple[list[int], int]:
    """(H, L) with H(s) = L^(n-1) h(s/L) monic integral, L = lc(h); roots s = L t."""
    n = len(h) - 1
    lead = h[-1]
    return [h[i] * lead ** (n - 1 - i) for i in range(n)] + [1], lead


def rescale(a: Sequence, lead: int, total_degree: int) -> list[int]:
    """Integer coefficients of lead^D * a(s/lead) for D = ``total_degree`` >= deg a.

    ``a`` must have integer coefficients.
    """
    return [int(c) * lead ** (total_degree - i) for i, c in enumerate(a)]


def rem_monic_int(a: Sequence[int], m: Sequence[int]) -> list[int]:
    """Remainder of an integer polynomial modulo a monic integer polynomial."""
    r = list(a)
    n = len(m) - 1
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            base = k - n
            for j in range(n):
                r[base + j] -= c * m[j]
            r[k] = 0
    r = r[:n]
    while r and r[-1] == 0:
        r.pop()
    return r


def mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def gcd_degree_mod_p(a: Sequence, b: Sequence, p: int) -> int:
    """Degree of gcd(a mod p, b mod p); -1 when both reduce to zero."""
    def red(poly):
        out = []
        for c in poly:
            c = Fraction(c)
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        while out and out[-1] == 0:
            out.pop()
        return out

    x, y = red(a), red(b)
    while y:
        inv = pow(y[-1], -1, p)
        r = list(x)
        for k in range(len(r) - len(y), -1, -1):
            c = r[k + len(y) - 1] * inv % p
            if c:
                for j, v in enumerate(y):
                    r[k + j] = (r[k + j] - c * v) % p
        r = r[: len(y) - 1]
        while r and r[-1] == 0:
            r.pop()
        x, y = y, r
    return len(x) - 1
