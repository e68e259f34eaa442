"""Concrete morphisms P^2 -> Gr(2, C^4).

Two presentations are supported: split surjections C^4 (x) O -> O(a) + O(b),
given by a 2x4 matrix of forms, and surjections O^4 -> T onto the tangent
bundle, given by four triples of linear forms (lifts through the Euler
sequence 0 -> O -> O(1)^3 -> T -> 0).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd, isqrt
from typing import Sequence

from .exactalg import BadPrime, ExactMatrix, is_prime, rank
from .grassmann import CohomClass, PlueckerPoint, minors, pluecker_from_rows
from .poly import (
    X, Y, Z,
    CommonComponent,
    CommonZeros,
    HomPoly,
    ModEvaluator,
    ProjPoint,
    centered_lift,
    common_locus,
    common_zeros,
    projective_plane_mod_p,
)
from .rng import child_seed, stream

DEFAULT_SCAN_PRIMES = (31, 101)
DEFAULT_DEGREE_CAP = 12
MAX_REDRAWS = 32


class Inconclusive(RuntimeError):
    """Exact elimination was not attempted because the degree cap was exceeded."""


class NotSurjective(ValueError):
    """The bundle map drops rank somewhere, so it does not define a morphism."""


class RetriesExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SplitSurjection:
    a: int
    b: int
    matrix: tuple[tuple[HomPoly, ...], tuple[HomPoly, ...]]

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("row degrees must be positive")
        if len(self.matrix) != 2 or any(len(r) != 4 for r in self.matrix):
            raise ValueError("expected a 2x4 matrix of forms")
        for row, d in zip(self.matrix, (self.a, self.b)):
            for f in row:
                if not f.is_zero() and f.degree != d:
                    raise ValueError(f"entry {f} is not homogeneous of degree {d}")

    @classmethod
    def from_rows(cls, row1: Sequence[HomPoly], row2: Sequence[HomPoly], a: int, b: int) -> SplitSurjection:
        fix = lambda f, d: HomPoly.zero(d) if (not isinstance(f, HomPoly) and f == 0) else f
        return cls(a, b, (tuple(fix(f, a) for f in row1), tuple(fix(f, b) for f in row2)))

    @property
    def c(self) -> int:
        return self.a + self.b

    def rows_at(self, x: ProjPoint) -> list[list[Fraction]]:
        return [[Fraction(f(*x.coords)) for f in row] for row in self.matrix]

    def to_json(self) -> dict:
        return {
            "degrees": [self.a, self.b],
            "rows": [[f.to_json() for f in row] for row in self.matrix],
        }


def example_split(a: int, b: int) -> SplitSurjection:
    """Columns (X^a, Z^b), (Y^a, X^b), (Z^a, Y^b), (X^a, 0)."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    return SplitSurjection.from_rows(
        (X**a, Y**a, Z**a, X**a),
        (Z**b, X**b, Y**b, 0),
        a, b,
    )


def pluecker_polys(s: SplitSurjection) -> tuple[HomPoly, ...]:
    """The six 2x2 minors in the order p01, p02, p03, p12, p13, p23."""
    return minors(s.matrix)


def evaluate(s: SplitSurjection, x: ProjPoint) -> PlueckerPoint:
    return pluecker_from_rows(s.rows_at(x))


# --- surjectivity ------------------------------------------------------------

@dataclass(frozen=True)
class SurjectivityReport:
    surjective: bool
    method: str
    witness: ProjPoint | None = None
    witness_note: str = ""
    certificate: dict = field(default_factory=dict, compare=False, hash=False)

    def __bool__(self):
        return self.surjective

    def to_json(self) -> dict:
        return {
            "surjective": self.surjective,
            "method": self.method,
            "witness": self.witness.to_json() if self.witness else None,
            "witness_note": self.witness_note,
            "certificate": self.certificate,
        }


def _rational_point_on(f: HomPoly, search: int = 4) -> ProjPoint | None:
    rng = range(-search, search + 1)
    for x in rng:
        for y in rng:
            for z in rng:
                if (x, y, z) != (0, 0, 0) and f(x, y, z) == 0:
                    return ProjPoint(x, y, z)
    return None


def _fp_refutation(forms: Sequence[HomPoly], primes: Sequence[int]):
    """Scan P^2(F_p) for common zeros; return a lifted rational witness if one exists."""
    tried = 0
    for p in primes:
        ev = ModEvaluator(forms, p)
        for pt in projective_plane_mod_p(p):
            if any(ev(pt)):
                continue
            lift = centered_lift(pt, p)
            tried += 1
            if lift is not None and all(f(*lift.coords) == 0 for f in forms):
                return lift, p
            if tried >= 64:
                return None, None
    return None, None


def decide_empty_locus(forms: Sequence[HomPoly], seed: int = 0,
                       primes: Sequence[int] = DEFAULT_SCAN_PRIMES,
                       degree_cap: int = DEFAULT_DEGREE_CAP) -> SurjectivityReport:
    """Decide over C whether the forms have no common projective zero."""
    forms = list(forms)
    if all(f.is_zero() for f in forms):
        return SurjectivityReport(False, "identically-zero", ProjPoint(0, 0, 1), "every point")
    witness, p = _fp_refutation(forms, primes)
    if witness is not None:
        return SurjectivityReport(False, "fp-scan", witness, f"found mod {p}, verified over Q")
    deg = max(f.degree for f in forms)
    if deg > degree_cap:
        raise Inconclusive(f"forms of degree {deg} exceed the elimination cap {degree_cap}")
    try:
        locus = common_locus(forms, seed=child_seed(seed, "locus"))
    except CommonComponent as exc:
        pt = _rational_point_on(exc.factor) if exc.factor is not None else None
        return SurjectivityReport(False, "common-factor", pt, f"common curve {exc.factor}")
    cert = {"transform": [list(r) for r in locus.transform], "zeros": locus.total}
    if not locus.zeros:
        return SurjectivityReport(True, "elimination", certificate=cert)
    pts = locus.rational_points()
    if pts:
        return SurjectivityReport(False, "elimination", pts[0], certificate=cert)
    z = locus.zeros[0]
    return SurjectivityReport(False, "elimination", None,
                              f"orbit of {z.degree} conjugate non-rational points", cert)


@lru_cache(maxsize=256)
def is_surjective(s: SplitSurjection, seed: int = 0,
                  primes: tuple[int, ...] = DEFAULT_SCAN_PRIMES,
                  degree_cap: int = DEFAULT_DEGREE_CAP) -> SurjectivityReport:
    """Whether the six minors have no common zero over C; carries a witness when not."""
    return decide_empty_locus(pluecker_polys(s), seed, primes, degree_cap)


# --- cohomology classes --------------------------------------------------------

@dataclass(frozen=True)
class ClassResult:
    cls: CohomClass
    section: tuple[int, ...]
    zeros: CommonZeros
    evidence: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self) -> dict:
        return {
            "class": list(self.cls.as_tuple()),
            "section": list(self.section),
            "zeros": self.zeros.to_json(),
            "evidence": self.evidence,
        }


def dual_incidence_count(s: SplitSurjection, xi: Sequence[int], p: int) -> int:
    """Points of P^2(F_p) where xi lies in the row span of the matrix.

    These are the zeros of the section of S^dual induced by xi, so the count
    bounds c2(S) from below whenever the locus stays finite mod p.
    """
    ev = ModEvaluator([f for row in s.matrix for f in row], p)
    count = 0
    for pt in projective_plane_mod_p(p):
        vals = ev(pt)
        r1, r2 = vals[:4], vals[4:]
        ok = True
        for drop in range(4):
            cols = [j for j in range(4) if j != drop]
            m = [[r1[j] for j in cols], [r2[j] for j in cols], [xi[j] for j in cols]]
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det % p:
                ok = False
                break
        count += ok
    return count


def cohomology_class(s: SplitSurjection, seed: int = 0, prime: int = 101) -> ClassResult:
    """Class of the morphism, with q2 counted as the zeros of a generic section of the quotient."""
    if not is_surjective(s, seed):
        raise NotSurjective("matrix does not define a bundle surjection")
    rng = stream(seed, "cohomology_class")
    for attempt in range(MAX_REDRAWS):
        v = tuple(rng.randint(-10, 10) for _ in range(4))
        f = sum((vj * e for vj, e in zip(v, s.matrix[0])), HomPoly.zero(s.a))
        g = sum((vj * e for vj, e in zip(v, s.matrix[1])), HomPoly.zero(s.b))
        if f.is_zero() or g.is_zero():
            continue
        try:
            cz = common_zeros(f, g, seed=child_seed(seed, "zeros", attempt))
        except CommonComponent:
            continue
        break
    else:
        raise RetriesExhausted("no section with finite zero scheme found")
    q2 = cz.total
    cls = CohomClass(q2, s.c**2 - q2)
    xi = tuple(rng.randint(1, prime - 1) for _ in range(4))
    evidence = {
        "whitney": f"s2 = (a+b)^2 - q2 = {s.c**2} - {q2}",
        "dual_incidence": {"prime": prime, "xi": list(xi), "points": dual_incidence_count(s, xi, prime)},
    }
    return ClassResult(cls, v, cz, evidence)


def dual_class(c: CohomClass) -> CohomClass:
    return c.dual()


def is_split_class(q2: int, s2: int) -> tuple[int, int] | None:
    """(a, b) with a <= b, a + b = c and ab = q2, if the class is split."""
    c = isqrt(q2 + s2)
    if c * c != q2 + s2:
        return None
    for a in range(c // 2 + 1):
        if a * (c - a) == q2:
            return a, c - a
    return None


# --- collision scans -----------------------------------------------------------

@dataclass(frozen=True)
class CollisionReport:
    a: int
    b: int
    prime: int
    mode: str
    points_scanned: int
    rank2_points: int
    distinct_images: int
    fiber_sizes: dict
    collisions: list
    label: str = "finite-field evidence"

    @property
    def injective(self) -> bool:
        return set(self.fiber_sizes) <= {1}

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "degrees": [self.a, self.b],
            "prime": self.prime,
            "mode": self.mode,
            "points_scanned": self.points_scanned,
            "rank2_points": self.rank2_points,
            "distinct_images": self.distinct_images,
            "fiber_sizes": {str(k): v for k, v in sorted(self.fiber_sizes.items())},
            "collisions": self.collisions,
        }


def _point_of_index(idx: int, p: int) -> tuple[int, int, int]:
    if idx < p * p:
        return (idx // p, idx % p, 1)
    idx -= p * p
    if idx < p:
        return (idx, 1, 0)
    return (1, 0, 0)


def collision_scan(s: SplitSurjection, p: int, sample: int | None = None, seed: int = 0,
                   max_collisions: int = 5) -> CollisionReport:
    """Fibre sizes of the reduced morphism on P^2(F_p) (full scan, or a seeded sample)."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    ev = ModEvaluator([f for row in s.matrix for f in row], p)  # raises BadPrime
    if not is_surjective(s):
        raise NotSurjective("matrix does not define a bundle surjection")
    if int_gcd(s.a, s.b) != 1:
        warnings.warn(f"a={s.a}, b={s.b} are not coprime; fibres may be larger than 1")
    n_all = p * p + p + 1
    if sample is None:
        points = projective_plane_mod_p(p)
        mode = "full"
    else:
        rng = stream(seed, "collision_scan", p)
        points = (_point_of_index(i, p) for i in sorted(rng.sample(range(n_all), min(sample, n_all))))
        mode = f"sample({sample})"
    fibres: dict[tuple, list] = {}
    scanned = 0
    for pt in points:
        scanned += 1
        vals = ev(pt)
        mins = [x % p for x in minors((vals[:4], vals[4:]))]
        last = next((x for x in reversed(mins) if x), None)
        if last is None:
            continue
        inv = pow(last, -1, p)
        image = tuple(x * inv % p for x in mins)
        fibres.setdefault(image, []).append(pt)
    sizes: dict[int, int] = {}
    for pts in fibres.values():
        sizes[len(pts)] = sizes.get(len(pts), 0) + 1
    collisions = [
        {"image": list(img), "points": [list(q) for q in pts]}
        for img, pts in sorted(fibres.items()) if len(pts) > 1
    ][:max_collisions]
    return CollisionReport(
        s.a, s.b, p, mode, scanned,
        sum(len(v) for v in fibres.values()), len(fibres),
        dict(sorted(sizes.items())), collisions,
    )


# --- tangent bundle --------------------------------------------------------------

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class TangentSurjection:
    """Four sections of T, each a 3x3 matrix A with lift x -> A x."""

    matrices: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        if len(self.matrices) != 4 or any(len(m) != 3 or any(len(r) != 3 for r in m) for m in self.matrices):
            raise ValueError("expected four 3x3 matrices")
        object.__setattr__(self, "matrices", tuple(
            tuple(tuple(Fraction(x) for x in r) for r in m) for m in self.matrices))

    @property
    def sections(self) -> tuple[tuple[HomPoly, HomPoly, HomPoly], ...]:
        return tuple(tuple(HomPoly.linear(r) for r in m) for m in self.matrices)

    def to_json(self) -> dict:
        return {"sections": [[str(L) for L in sec] for sec in self.sections]}


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def tangent_minors(t: TangentSurjection) -> list[HomPoly]:
    rows = [list(sec) for sec in t.sections] + [[X, Y, Z]]
    out = []
    for i in range(5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                out.append(_det3([rows[i], rows[j], rows[k]]))
    return out


def sections_independent(t: TangentSurjection) -> bool:
    """Linear independence in H^0(T), i.e. modulo multiples of the Euler section."""
    vecs = [[x for r in m for x in r] for m in t.matrices]
    vecs.append([Fraction(x) for r in IDENTITY for x in r])
    return rank(ExactMatrix.from_rows(vecs)) == 5


def tangent_is_surjective(t: TangentSurjection, seed: int = 0,
                          primes: Sequence[int] = DEFAULT_SCAN_PRIMES) -> SurjectivityReport:
    return decide_empty_locus(tangent_minors(t), seed, primes)


def tangent_random(seed: int = 0, bound: int = 3, max_retries: int = MAX_REDRAWS) -> TangentSurjection:
    rng = stream(seed, "tangent_random")
    for _ in range(max_retries):
        mats = tuple(
            tuple(tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(3))
            for _ in range(4)
        )
        t = TangentSurjection(mats)
        if sections_independent(t) and tangent_is_surjective(t, seed):
            return t
    raise RetriesExhausted("no surjective quadruple of tangent sections found")


def tangent_class(t: TangentSurjection, seed: int = 0) -> ClassResult:
    """q2 = c2(T) counted as the zeros of a generic section; s2 = 9 - q2."""
    if not tangent_is_surjective(t, seed):
        raise NotSurjective("sections do not generate T")
    rng = stream(seed, "tangent_class")
    for attempt in range(MAX_REDRAWS):
        v = tuple(rng.randint(-10, 10) for _ in range(4))
        bmat = [[sum(vi * m[r][c] for vi, m in zip(v, t.matrices)) for c in range(3)] for r in range(3)]
        bx = [HomPoly.linear(row) for row in bmat]
        xs = (X, Y, Z)
        quads = [bx[i] * xs[j] - bx[j] * xs[i] for i, j in ((0, 1), (0, 2), (1, 2))]
        try:
            locus = common_locus(quads, seed=child_seed(seed, "locus", attempt))
        except CommonComponent:
            continue
        if any(z.multiplicity != 1 for z in locus.zeros):
            continue
        break
    else:
        raise RetriesExhausted("no section with reduced zero scheme found")
    q2 = locus.total
    evidence = {"section_matrix": [[str(x) for x in r] for r in bmat],
                "whitney": f"s2 = c1(T)^2 - q2 = 9 - {q2}"}
    return ClassResult(CohomClass(q2, 9 - q2), v, locus, evidence)
