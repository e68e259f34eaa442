"""Sparse homogeneous polynomials in X, Y, Z and exact intersection counting.

The counting engine (:func:`common_zeros`, :func:`common_locus`) works as
follows. A random invertible integer change of coordinates is applied so
that the projection centre (0:0:1) lies on neither curve and the line
Y = 0 misses every common zero. The Sylvester resultant in Z, dehomogenized
at Y = 1, is then a univariate polynomial r(t) of degree exactly
deg f * deg g. The first subresultant S1(Z) = s1(t) Z + s0(t) is required to
satisfy gcd(sqfree(r), s1) = 1; this certifies that every fibre of the
projection carries exactly one common zero, namely (t : 1 : -s0/s1), so the
multiplicity of a root of r is the intersection multiplicity at that point.
Coordinates are re-drawn when any check fails.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from . import upoly
from .exactalg import PRIMES, BadPrime, det_int, lcm_of_denominators
from .rng import stream

Exp = tuple[int, int, int]
VARS = ("X", "Y", "Z")

MAX_COORDINATE_RETRIES = 32


class CommonComponent(ValueError):
    """The polynomials share a curve, so their common zero set is not finite."""

    def __init__(self, msg: str, factor: HomPoly | None = None):
        super().__init__(msg)
        self.factor = factor


class DegenerateCoordinates(RuntimeError):
    """No admissible coordinate change was found within the retry bound."""


def monomials(d: int) -> list[Exp]:
    """Exponent triples of degree ``d`` in graded-lex order, X > Y > Z."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_scalar(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"not an exact scalar: {s!r}")


class HomPoly:
    """A homogeneous form of declared degree with rational coefficients."""

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Exp, object] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Exp, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != 3 or min(e) < 0 or sum(e) != degree:
                raise ValueError(f"exponent {e} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.degree = degree
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> HomPoly:
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return cls(1, {tuple(e): 1})

    @classmethod
    def const(cls, c) -> HomPoly:
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def linear(cls, coeffs: Sequence) -> HomPoly:
        return cls(1, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    @classmethod
    def zero(cls, degree: int) -> HomPoly:
        return cls(degree)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, HomPoly):
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == HomPoly.const(other) if other else self.is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    def _check_same_degree(self, other: HomPoly):
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"adding forms of degrees {self.degree} and {other.degree}")

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            if other == 0:
                return self
            other = HomPoly.const(other) if self.degree == 0 else NotImplemented
            if other is NotImplemented:
                return other
        self._check_same_degree(other)
        deg = self.degree if self.terms else other.degree
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return HomPoly(deg, out)

    __radd__ = __add__

    def __neg__(self):
        return HomPoly(self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            out: dict[Exp, Fraction] = {}
            for (a, b, c), x in self.terms.items():
                for (d, e, f), y in other.terms.items():
                    k = (a + d, b + e, c + f)
                    out[k] = out.get(k, 0) + x * y
            return HomPoly(self.degree + other.degree, out)
        if isinstance(other, (int, Fraction)):
            return HomPoly(self.degree, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = HomPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x, y, z):
        acc = 0
        for (i, j, k), c in self.terms.items():
            acc = acc + c * x**i * y**j * z**k
        return acc

    def eval_mod(self, point: Sequence[int], p: int) -> int:
        x, y, z = point
        acc = 0
        for (i, j, k), c in self.terms.items():
            if c.denominator % p == 0:
                raise BadPrime(f"{p} divides a coefficient denominator of {self}")
            acc += c.numerator * pow(c.denominator, -1, p) * pow(x, i, p) * pow(y, j, p) * pow(z, k, p)
        return acc % p

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def coefficient(self, e: Exp) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        for e in monomials(self.degree):
            if e in self.terms:
                return self.terms[e]
        return Fraction(0)

    def monic(self) -> HomPoly:
        lc = self.leading_coefficient()
        return self * (1 / lc) if lc else self

    def substitute(self, t: Sequence[Sequence]) -> HomPoly:
        """Return f(T u), where old coordinate i equals sum_j t[i][j] * u_j."""
        lin = [HomPoly.linear(row) for row in t]
        pw = [[HomPoly.const(1)] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                pw[i].append(pw[i][-1] * lin[i])
        out = HomPoly.zero(self.degree)
        for (a, b, c), coef in self.terms.items():
            out = out + pw[0][a] * pw[1][b] * pw[2][c] * coef
        return HomPoly(self.degree, out.terms)

    def coefficients_in(self, var: int) -> dict[int, HomPoly]:
        """Group by powers of ``var``; values are forms free of ``var``."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[var]
            rest = list(e)
            rest[var] = 0
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: HomPoly(self.degree - k, t) for k, t in out.items()}

    def integer_scaled(self) -> tuple[HomPoly, int]:
        d = lcm_of_denominators(self.terms.values())
        return self * d, d

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in monomials(self.degree):
            if e not in self.terms:
                continue
            c = self.terms[e]
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(VARS, e) if p
            )
            mag = abs(c)
            if not mono:
                body = _fmt_fraction(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_fraction(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"HomPoly({self.degree}, {self})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": {f"({i},{j},{k})": _fmt_fraction(self.terms[(i, j, k)])
                      for (i, j, k) in monomials(self.degree) if (i, j, k) in self.terms},
            "text": str(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> HomPoly:
        terms = {}
        for key, val in data["terms"].items():
            e = tuple(int(x) for x in key.strip("()").split(","))
            terms[e] = parse_scalar(val)
        return cls(int(data["degree"]), terms)

    def to_sympy(self):
        import sympy
        X, Y, Z = sympy.symbols("X Y Z")
        return sympy.Poly(
            {e: sympy.Rational(c.numerator, c.denominator) for e, c in self.terms.items()} or {(0, 0, 0): 0},
            X, Y, Z, domain="QQ",
        )

    @classmethod
    def from_sympy(cls, p) -> HomPoly:
        terms = {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in p.terms() if c != 0}
        deg = sum(next(iter(terms))) if terms else 0
        return cls(deg, terms)


X = HomPoly.var("X")
Y = HomPoly.var("Y")
Z = HomPoly.var("Z")


class ProjPoint:
    """A point of P^2 with rational coordinates, normalized so the last nonzero one is 1."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a point of P^2 needs three coordinates")
        c = [parse_scalar(x) for x in coords]
        last = next((x for x in reversed(c) if x != 0), None)
        if last is None:
            raise ValueError("(0:0:0) is not a projective point")
        self.coords = tuple(x / last for x in c)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def integer_coords(self) -> tuple[int, int, int]:
        d = lcm_of_denominators(self.coords)
        return tuple(int(x * d) for x in self.coords)

    def __repr__(self):
        return "(" + ":".join(_fmt_fraction(x) for x in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [_fmt_fraction(x) for x in self.coords]


def evaluate(f: HomPoly, p: ProjPoint) -> Fraction:
    """Value of ``f`` at the normalized representative of ``p``."""
    return Fraction(f(*p.coords))


def projective_plane_mod_p(p: int) -> Iterator[tuple[int, int, int]]:
    """All p^2 + p + 1 points of P^2(F_p), last nonzero coordinate 1."""
    for x in range(p):
        for y in range(p):
            yield (x, y, 1)
    for x in range(p):
        yield (x, 1, 0)
    yield (1, 0, 0)


def gcd(f: HomPoly, g: HomPoly) -> HomPoly:
    """Monic (graded-lex) greatest common divisor; the constant 1 when coprime."""
    if f.is_zero() or g.is_zero():
        raise ValueError("gcd needs nonzero inputs")
    import sympy
    h = HomPoly.from_sympy(sympy.gcd(f.to_sympy(), g.to_sympy()))
    return h.monic()


def divides_exactly(d: HomPoly, f: HomPoly) -> HomPoly | None:
    """Quotient f / d when exact, else None."""
    import sympy
    q, r = sympy.div(f.to_sympy(), d.to_sympy())
    if not r.is_zero:
        return None
    return HomPoly.from_sympy(q) if not q.is_zero else HomPoly.zero(f.degree - d.degree)


# --- resultants -----------------------------------------------------------

def _univariate_coeffs(f: HomPoly, var: int, first: int, second_value: int = 1):
    """Coefficients in ``var`` (index = power) as UPolys in t, with
    variable ``first`` set to t and the remaining one set to ``second_value``."""
    other = 3 - var - first
    out: dict[int, dict[int, Fraction]] = {}
    for e, c in f.terms.items():
        k = e[var]
        slot = out.setdefault(k, {})
        slot[e[first]] = slot.get(e[first], 0) + c * second_value ** e[other]
    top = f.degree_in(var)
    res = []
    for k in range(top + 1):
        coeffs = out.get(k, {})
        n = max(coeffs, default=-1) + 1
        res.append(upoly.trim([coeffs.get(i, 0) for i in range(n)]))
    return res


def _subresultant_matrix(fc: list, gc: list, j: int, col_power: int):
    """Square matrix (as a function of t) for coefficient ``col_power`` of S_j.

    ``fc``/``gc`` are integer coefficient lists indexed by power. Returns
    (rows-builder, degree bound), where rows-builder(t) gives integer rows.
    """
    m, n = len(fc) - 1, len(gc) - 1
    nf, ng = n - j, m - j
    width = m + n - j
    keep = list(range(width - j - 1)) + [width - 1 - col_power]

    def build(tval: int):
        fv = [upoly.evaluate(c, tval) for c in fc]
        gv = [upoly.evaluate(c, tval) for c in gc]
        rows = []
        for i in range(nf):
            shift = nf - 1 - i
            row = [0] * width
            for pw, v in enumerate(fv):
                row[width - 1 - (pw + shift)] = v
            rows.append([int(row[c]) for c in keep])
        for i in range(ng):
            shift = ng - 1 - i
            row = [0] * width
            for pw, v in enumerate(gv):
                row[width - 1 - (pw + shift)] = v
            rows.append([int(row[c]) for c in keep])
        return rows

    bound = sum(keep) - nf * (nf - 1) // 2 - ng * (ng - 1) // 2
    return build, bound


def _interpolated_det(build, bound: int) -> upoly.UPoly:
    xs = list(range(bound + 1))
    ys = [det_int(build(x)) for x in xs]
    return upoly.interpolate(xs, ys)


def _int_coeff_lists(f: HomPoly, var: int, first: int):
    fi, scale = f.integer_scaled()
    cs = _univariate_coeffs(fi, var, first)
    return [[int(c) for c in poly] for poly in cs], scale


def _resultant_univariate(f: HomPoly, g: HomPoly, var: int, first: int, bound: int):
    fc, df = _int_coeff_lists(f, var, first)
    gc, dg = _int_coeff_lists(g, var, first)
    m, n = len(fc) - 1, len(gc) - 1
    build, _ = _subresultant_matrix(fc, gc, 0, 0)
    r = _interpolated_det(build, bound)
    return upoly.scale(r, Fraction(1, df**n * dg**m))


def sylvester_resultant(f: HomPoly, g: HomPoly, var: str) -> HomPoly:
    """Res_var(f, g): a form in the two remaining variables."""
    v = VARS.index(var)
    m1, n1 = f.degree_in(v), g.degree_in(v)
    if m1 < 1 or n1 < 1:
        raise ValueError(f"both inputs need positive degree in {var}")
    first, second = [i for i in range(3) if i != v]
    h = n1 * f.degree + m1 * g.degree - m1 * n1
    r = _resultant_univariate(f, g, v, first, h)
    terms = {}
    for i, c in enumerate(r):
        e = [0, 0, 0]
        e[first] = i
        e[second] = h - i
        terms[tuple(e)] = c
    return HomPoly(h, terms)


# --- certified intersection of two curves --------------------------------

@dataclass(frozen=True)
class Zero:
    """A common zero. ``point`` is None for a Galois orbit of ``degree``
    conjugate non-rational zeros, each of intersection multiplicity
    ``multiplicity``."""

    point: ProjPoint | None
    degree: int
    multiplicity: int

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json() if self.point else None,
            "degree": self.degree,
            "multiplicity": self.multiplicity,
        }


@dataclass
class _Intersection:
    transform: tuple[tuple[int, ...], ...]
    r: upoly.UPoly
    sqf: list[tuple[upoly.UPoly, int]]
    x_of_t: tuple  # old coordinates of the zero over t, as UPolys

    def residue(self, h: HomPoly, modulus: upoly.UPoly) -> upoly.UPoly:
        coords = [upoly.rem(c, modulus) for c in self.x_of_t]
        powers = [[[Fraction(1)]] for _ in range(3)]
        for i in range(3):
            for _ in range(h.degree):
                powers[i].append(upoly.mulmod(powers[i][-1], coords[i], modulus))
        acc: upoly.UPoly = []
        for (a, b, c), coef in h.terms.items():
            term = upoly.mulmod(upoly.mulmod(powers[0][a], powers[1][b], modulus), powers[2][c], modulus)
            acc = upoly.add(acc, upoly.scale(term, coef))
        return upoly.rem(acc, modulus)

    def _misses_some_form(self, h: upoly.UPoly, forms: Sequence[HomPoly]) -> bool:
        """Cheap certificate that no root of h is a zero of every form.

        With t = s/L the piece becomes a monic integral H(s) and the
        coordinates become integral, so all arithmetic stays in Z[s].  A
        rational gcd of H with an integral residue is monic integral, hence
        survives reduction mod any prime: a trivial gcd mod p proves a
        trivial gcd over Q.
        """
        big, lead = upoly.monic_integral(upoly.primitive(h))
        den = 1
        for c in self.x_of_t:
            den = lcm_of_denominators([den, *c])
        top = max(upoly.degree(c) for c in self.x_of_t)
        coords = [upoly.rem_monic_int(upoly.rescale([x * den for x in c], lead, top), big) for c in self.x_of_t]
        p = PRIMES[0]
        for f in forms:
            powers = [[[1]] for _ in range(3)]
            for i in range(3):
                for _ in range(f.degree):
                    powers[i].append(upoly.rem_monic_int(upoly.mul_int(powers[i][-1], coords[i]), big))
            scale_den = lcm_of_denominators(f.terms.values())
            acc = [0] * (len(big) - 1)
            for (a, b, c), coef in f.terms.items():
                term = upoly.rem_monic_int(upoly.mul_int(upoly.mul_int(powers[0][a], powers[1][b]), powers[2][c]), big)
                k = int(coef * scale_den)
                for i, v in enumerate(term):
                    acc[i] += k * v
            if upoly.gcd_degree_mod_p(big, acc, p) == 0:
                return True
        return False

    def locus(self, forms: Iterable[HomPoly]) -> list[tuple[upoly.UPoly, int]]:
        """Squarefree pieces of r whose roots are zeros of every form."""
        forms = list(forms)
        out = []
        for h, mult in self.sqf:
            if forms and self._misses_some_form(h, forms):
                continue
            g = h
            for f in forms:
                if len(g) <= 1:
                    break
                g = upoly.gcd(g, self.residue(f, g))
            if len(g) > 1:
                out.append((g, mult))
        return out

    def point_at(self, t0: Fraction) -> ProjPoint:
        return ProjPoint(*(upoly.evaluate(c, t0) for c in self.x_of_t))

    def zeros(self, pieces: Sequence[tuple[upoly.UPoly, int]] | None = None) -> list[Zero]:
        pieces = self.sqf if pieces is None else pieces
        out = []
        for h, mult in pieces:
            for fac, _ in upoly.factor_rational(h):
                if len(fac) == 2:
                    out.append(Zero(self.point_at(-fac[0]), 1, mult))
                else:
                    out.append(Zero(None, len(fac) - 1, mult))
        out.sort(key=lambda z: (z.point is None, z.point.coords if z.point else (), z.degree, z.multiplicity))
        return out


def _certified_coprime(a: upoly.UPoly, b: upoly.UPoly) -> bool:
    """True only if gcd(a, b) = 1 over Q, decided mod a prime not dividing lc(a).

    False means "not certified", not "not coprime".
    """
    prim = upoly.primitive(a)
    for p in PRIMES[:2]:
        if prim[-1] % p:
            return upoly.gcd_degree_mod_p(prim, b, p) == 0
    return False


def _random_transform(rng: random.Random, bound: int = 5):
    while True:
        t = tuple(tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(3))
        if det_int([list(r) for r in t]) != 0:
            return t


def _subresultant_one(fc, gc):
    """(s1, s0) with S1(Z) = s1 Z + s0, as UPolys in t, from integer lists."""
    m, n = len(fc) - 1, len(gc) - 1
    if n == 1:
        return gc[1], gc[0]
    if m == 1:
        return fc[1], fc[0]
    b1, d1 = _subresultant_matrix(fc, gc, 1, 1)
    b0, d0 = _subresultant_matrix(fc, gc, 1, 0)
    return _interpolated_det(b1, d1), _interpolated_det(b0, d0)


def _try_intersect(f: HomPoly, g: HomPoly, t) -> _Intersection:
    F, G = f.substitute(t), g.substitute(t)
    m, n = F.degree, G.degree
    if not F.coefficient((0, 0, m)) or not G.coefficient((0, 0, n)):
        raise DegenerateCoordinates("projection centre lies on a curve")
    fc, _ = _int_coeff_lists(F, 2, 0)
    gc, _ = _int_coeff_lists(G, 2, 0)
    build, bound = _subresultant_matrix(fc, gc, 0, 0)
    r = _interpolated_det(build, bound)
    if not r:
        raise CommonComponent("resultant vanishes identically")
    if upoly.degree(r) != m * n:
        raise DegenerateCoordinates("a common zero lies on the line Y = 0")
    s1, s0 = (upoly.trim(c) for c in _subresultant_one(fc, gc))
    if _certified_coprime(r, upoly.derivative(r)):
        sqf = [(upoly.monic(r), 1)]
        rad = r
    else:
        sqf = upoly.squarefree_decomposition(r)
        rad = [Fraction(1)]
        for h, _ in sqf:
            rad = upoly.mul(rad, h)
    if not s1 or not (_certified_coprime(rad, s1) or upoly.degree(upoly.gcd(rad, s1)) == 0):
        raise DegenerateCoordinates("two common zeros share a projection")
    tt = [Fraction(0), Fraction(1)]
    u = (upoly.mul(tt, s1), list(s1), upoly.scale(s0, -1))
    x = tuple(
        upoly.add(upoly.add(upoly.scale(u[0], t[i][0]), upoly.scale(u[1], t[i][1])), upoly.scale(u[2], t[i][2]))
        for i in range(3)
    )
    return _Intersection(t, r, sqf, x)


def _intersect(f: HomPoly, g: HomPoly, rng: random.Random) -> _Intersection:
    last = None
    for _ in range(MAX_COORDINATE_RETRIES):
        try:
            return _try_intersect(f, g, _random_transform(rng))
        except DegenerateCoordinates as exc:
            last = exc
    raise DegenerateCoordinates(f"gave up after {MAX_COORDINATE_RETRIES} coordinate changes: {last}")


@dataclass(frozen=True)
class CommonZeros:
    zeros: tuple[Zero, ...]
    total: int
    transform: tuple[tuple[int, ...], ...] = field(default=())

    def rational_points(self) -> list[ProjPoint]:
        return [z.point for z in self.zeros if z.point is not None]

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "zeros": [z.to_json() for z in self.zeros],
            "transform": [list(r) for r in self.transform],
        }


def common_zeros(f: HomPoly, g: HomPoly, seed: int = 0) -> CommonZeros:
    """Common zeros of two coprime forms with intersection multiplicities.

    Rational zeros come with coordinates; the rest are reported per
    irreducible factor as (degree, multiplicity). The total always equals
    deg f * deg g.
    """
    if f.is_zero() or g.is_zero():
        raise CommonComponent("zero polynomial")
    if f.degree == 0 or g.degree == 0:
        return CommonZeros((), 0)
    inter = _intersect(f, g, stream(seed, "common_zeros"))
    zeros = tuple(inter.zeros())
    total = sum(z.degree * z.multiplicity for z in zeros)
    return CommonZeros(zeros, total, inter.transform)


def common_locus(forms: Sequence[HomPoly], seed: int = 0) -> CommonZeros:
    """Common zeros of several forms of one degree.

    Two random combinations of the forms are intersected and the zeros at
    which every form vanishes are kept; multiplicities are those of the
    pair. Raises CommonComponent when the forms share a curve.
    """
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise CommonComponent("all forms vanish identically")
    deg = forms[0].degree
    if any(f.degree != deg for f in forms):
        raise ValueError("common_locus needs forms of a single degree")
    if deg == 0:
        return CommonZeros((), 0)
    if len(forms) == 1:
        raise CommonComponent("a single form cuts out a curve", forms[0])
    rng = stream(seed, "common_locus")
    for _ in range(MAX_COORDINATE_RETRIES):
        f = sum((rng.randint(-10, 10) * h for h in forms), HomPoly.zero(deg))
        g = sum((rng.randint(-10, 10) * h for h in forms), HomPoly.zero(deg))
        if f.is_zero() or g.is_zero():
            continue
        try:
            inter = _intersect(f, g, rng)
        except CommonComponent:
            common = forms[0]
            for h in forms[1:]:
                common = gcd(common, h)
            if common.degree > 0:
                raise CommonComponent("forms share a common factor", common)
            continue
        zeros = tuple(inter.zeros(inter.locus(forms)))
        return CommonZeros(zeros, sum(z.degree * z.multiplicity for z in zeros), inter.transform)
    raise DegenerateCoordinates("no admissible pair of combinations found")


def h0(d: int) -> int:
    """Dimension of the space of ternary forms of degree d."""
    return comb(d + 2, 2) if d >= 0 else 0


class ModEvaluator:
    """Evaluate a fixed list of forms at points of P^2(F_p)."""

    def __init__(self, forms: Sequence[HomPoly], p: int):
        self.p = p
        self.maxdeg = max((f.degree for f in forms), default=0)
        self.forms = []
        for f in forms:
            terms = []
            for (i, j, k), c in f.terms.items():
                if c.denominator % p == 0:
                    raise BadPrime(f"{p} divides a coefficient denominator of {f}")
                terms.append((i, j, k, c.numerator * pow(c.denominator, -1, p) % p))
            self.forms.append(terms)

    def __call__(self, point: Sequence[int]) -> list[int]:
        p = self.p
        pw = []
        for v in point:
            row = [1]
            for _ in range(self.maxdeg):
                row.append(row[-1] * v % p)
            pw.append(row)
        px, py, pz = pw
        return [sum(c * px[i] * py[j] * pz[k] for i, j, k, c in terms) % p for terms in self.forms]


def centered_lift(point: Sequence[int], p: int) -> ProjPoint | None:
    """Smallest-magnitude integer representative of an F_p point, if nonzero."""
    coords = [x if x <= p // 2 else x - p for x in point]
    if not any(coords):
        return None
    return ProjPoint(*coords)
