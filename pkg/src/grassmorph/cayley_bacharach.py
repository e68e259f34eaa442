"""Finite point sets in P^2: Hilbert function, Cayley-Bacharach test, general position.

A configuration Z satisfies the Cayley-Bacharach condition in degree d when
every degree-d form vanishing on Z minus one point also vanishes at that
point.  In rank terms: removing any single row of the degree-d evaluation
matrix of Z leaves the rank unchanged.

General position at level t for degree c means no r*c + 1 of the points lie
on a curve of degree r, for 1 <= r <= t.  ``verify_position`` decides this
exactly.  A degree-r curve is one kernel direction of the evaluation matrix,
so it suffices to run over subsets of N - 1 points (N = dim of degree-r
forms) that impose independent conditions, take the unique curve through
each, and count how many points of Z it contains.  Any violating subset W
can be completed to such an (N - 1)-subset whose curve still contains W, so
the enumeration misses nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import rng as rng_mod
from .exactalg import PRIMES, ExactMatrix, kernel_basis, kernel_mod_p, rank
from .morphisms import RetriesExhausted
from .poly import HomPoly, ProjPoint, _random_transform, evaluate, monomials

DEFAULT_BUDGET = 10**6
COORD_BOUND = 20
MAX_DRAWS = 32


class DuplicatePoints(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Exact position verification would enumerate more subsets than the budget allows."""


@dataclass(frozen=True)
class PointConfig:
    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, ProjPoint) else ProjPoint(*p) for p in self.points)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable) -> PointConfig:
        return cls(tuple(points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def without(self, i: int) -> list[ProjPoint]:
        return [p for j, p in enumerate(self.points) if j != i]

    def to_json(self) -> list:
        return [p.to_json() for p in self.points]


def _monomial_row(point: Sequence, exps) -> list:
    x, y, z = point
    return [x**i * y**j * z**k for i, j, k in exps]


def eval_matrix(z: PointConfig | Sequence[ProjPoint], d: int) -> ExactMatrix:
    """Rows are the degree-d monomials evaluated at each point."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    exps = monomials(d)
    return ExactMatrix.from_rows([_monomial_row(p.coords, exps) for p in z], len(exps))


def h0_ideal(z: PointConfig | Sequence[ProjPoint], d: int) -> int:
    """Dimension of the degree-d forms vanishing on z."""
    if d < 0:
        return 0
    return comb(d + 2, 2) - rank(eval_matrix(z, d))


def _form(coeffs: Sequence, d: int) -> HomPoly:
    return HomPoly(d, dict(zip(monomials(d), coeffs)))


@dataclass(frozen=True)
class CbReport:
    holds: bool
    degree: int
    failing_point: int | None = None
    certificate: HomPoly | None = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "degree": self.degree,
            "failing_point": self.failing_point,
            "certificate": self.certificate.to_json() if self.certificate is not None else None,
        }


def cb_check(z: PointConfig, d: int) -> CbReport:
    """Cayley-Bacharach test in degree d.

    On failure at point i the certificate is a degree-d form that vanishes on
    every other point of z but not at point i.
    """
    if d < 0:
        return CbReport(True, d)
    full = rank(eval_matrix(z, d))
    for i, p in enumerate(z.points):
        rest = z.without(i)
        m = eval_matrix(rest, d) if rest else ExactMatrix((), comb(d + 2, 2))
        if rank(m) == full:
            continue
        for v in kernel_basis(m):
            f = _form(v, d)
            if evaluate(f, p) != 0:
                return CbReport(False, d, i, f)
        raise AssertionError("rank drop without a separating form")
    return CbReport(True, d)


@dataclass(frozen=True)
class PositionReport:
    ok: bool
    degree: int | None = None
    curve: HomPoly | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "degree": self.degree,
            "curve": self.curve.to_json() if self.curve is not None else None,
            "witness": list(self.witness),
        }


def _collinear(a, b, c) -> bool:
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = a, b, c
    return x1 * (y2 * z3 - y3 * z2) - y1 * (x2 * z3 - x3 * z2) + z1 * (x2 * y3 - x3 * y2) == 0


def _on_curve_exact(f_coeffs: Sequence, rows: Sequence[Sequence[int]]) -> list[int]:
    return [i for i, row in enumerate(rows) if sum(a * b for a, b in zip(f_coeffs, row)) == 0]


def _curve_through(rows: Sequence[Sequence[int]], subset: Sequence[int], n: int, p: int):
    """Unique curve through the subset, as exact coefficients, or None if not unique."""
    sub = [rows[i] for i in subset]
    ker = kernel_mod_p(sub, n, p)
    if len(ker) == 1:
        # rank over Q is at least the rank mod p, and at most n - 1
        return ker[0], True
    m = ExactMatrix.from_rows(sub, n)
    ker = kernel_basis(m)
    if len(ker) != 1:
        return None, False
    return ker[0], False


def verify_position(z: PointConfig, t: int, c: int, strict_three: bool = False,
                    budget: int = DEFAULT_BUDGET) -> PositionReport:
    """Check that no r*c + 1 points of z lie on a degree-r curve for 1 <= r <= t."""
    pts = [p.integer_coords() for p in z.points]
    ell = len(pts)
    if strict_three:
        for tri in combinations(range(ell), 3):
            if _collinear(*(pts[i] for i in tri)):
                line = kernel_basis(eval_matrix([z.points[i] for i in tri], 1))[0]
                return PositionReport(False, 1, _form(line, 1), tri)
    p = PRIMES[0]
    degrees = [r for r in range(1, t + 1) if ell >= r * c + 1]
    for r in degrees:
        n = comb(r + 2, 2)
        if comb(ell, n - 1) > budget:
            raise CapExceeded(f"C({ell},{n - 1}) subsets exceed the budget {budget}")
    for r in degrees:
        need = r * c + 1
        exps = monomials(r)
        n = len(exps)
        rows = [_monomial_row(q, exps) for q in pts]
        if rank(ExactMatrix.from_rows(rows, n)) < n:
            curve = kernel_basis(ExactMatrix.from_rows(rows, n))[0]
            return PositionReport(False, r, _form(curve, r), tuple(range(ell)))
        for subset in combinations(range(ell), n - 1):
            coeffs, modular = _curve_through(rows, subset, n, p)
            if coeffs is None:
                continue
            if modular:
                hits = sum(1 for row in rows if sum(a * b for a, b in zip(coeffs, row)) % p == 0)
                if hits < need:
                    continue
                coeffs = kernel_basis(ExactMatrix.from_rows([rows[i] for i in subset], n))[0]
            on = _on_curve_exact(coeffs, rows)
            if len(on) >= need:
                return PositionReport(False, r, _form(coeffs, r), tuple(on))
    return PositionReport(True)


def _curve_points(ell: int, degree: int, rand) -> list[ProjPoint]:
    """Points on an irreducible rational curve of the given degree.

    The curve is the image of s -> (1 : s : s^degree) under a random
    invertible integer transform; for degree 1 and 2 this is a line or a
    conic.  A curve of degree r < degree meets it in at most r*degree points.
    """
    t = _random_transform(rand)
    params = rand.sample(range(-COORD_BOUND, COORD_BOUND + 1), ell)
    out = []
    for s in params:
        u = (1, s, s**degree)
        out.append(ProjPoint(*(sum(t[i][j] * u[j] for j in range(3)) for i in range(3))))
    return out


def gen_position_points(ell: int, t: int, c: int, seed: int = 0, strict_three: bool = False,
                        on_curve: int = 0, budget: int = DEFAULT_BUDGET) -> PointConfig:
    """Seeded random points passing ``verify_position(z, t, c, strict_three)``.

    With ``on_curve = e > 0`` the points are drawn on an irreducible curve of
    degree e instead of at random.
    """
    if ell < 1:
        raise ValueError("need at least one point")
    if ell > 2 * COORD_BOUND + 1 and on_curve:
        raise ValueError("too many points for the parameter range")
    rand = rng_mod.stream(seed, "gen_position_points", ell, t, c, strict_three, on_curve)
    for _ in range(MAX_DRAWS):
        if on_curve:
            pts = _curve_points(ell, on_curve, rand)
        else:
            seen: set[ProjPoint] = set()
            pts = []
            while len(pts) < ell:
                coords = [rand.randint(-COORD_BOUND, COORD_BOUND) for _ in range(3)]
                if coords == [0, 0, 0]:
                    continue
                q = ProjPoint(*coords)
                if q not in seen:
                    seen.add(q)
                    pts.append(q)
        z = PointConfig(tuple(pts))
        if verify_position(z, t, c, strict_three, budget):
            return z
    raise RetriesExhausted(f"no configuration passed after {MAX_DRAWS} draws")


def parse_points(data) -> PointConfig:
    """PointConfig from a JSON-style list of triples of ints or "num/den" strings."""
    if not isinstance(data, list) or not data:
        raise ValueError("expected a non-empty list of triples")
    pts = []
    for item in data:
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f"not a coordinate triple: {item!r}")
        pts.append(ProjPoint(*item))
    return PointConfig(tuple(pts))
