"""Points of Gr(2, C^4) in Pluecker coordinates, and cohomology classes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Sequence

# Column pairs in the fixed coordinate order p01, p02, p03, p12, p13, p23.
INDEX_PAIRS = tuple(combinations(range(4), 2))


class RankDeficient(ValueError):
    """All six 2x2 minors vanish: the rows do not span a 2-plane."""


def _normalize(coords: Sequence) -> tuple:
    last = next((x for x in reversed(coords) if x != 0), None)
    if last is None:
        raise RankDeficient("all Pluecker coordinates vanish")
    inv = 1 / last
    return tuple(x * inv for x in coords)


@dataclass(frozen=True)
class PlueckerPoint:
    """Six projective coordinates (p01, p02, p03, p12, p13, p23), last nonzero one equal to 1."""

    p: tuple

    def __post_init__(self):
        if len(self.p) != 6:
            raise ValueError("a Pluecker point has six coordinates")
        vals = tuple(Fraction(x) if isinstance(x, int) else x for x in self.p)
        object.__setattr__(self, "p", _normalize(vals))

    def __getitem__(self, i):
        return self.p[i]

    def __iter__(self):
        return iter(self.p)

    def relation_value(self):
        p01, p02, p03, p12, p13, p23 = self.p
        return p01 * p23 - p02 * p13 + p03 * p12

    def __repr__(self):
        return "(" + ":".join(str(x) for x in self.p) + ")"


def minors(rows: Sequence[Sequence]) -> tuple:
    r1, r2 = rows
    return tuple(r1[i] * r2[j] - r1[j] * r2[i] for i, j in INDEX_PAIRS)


def pluecker_from_rows(m: Sequence[Sequence]) -> PlueckerPoint:
    """Pluecker point of the row span of a 2x4 matrix."""
    if len(m) != 2 or any(len(r) != 4 for r in m):
        raise ValueError("expected a 2x4 matrix")
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in m]
    return PlueckerPoint(minors(rows))


def check_relation(q: PlueckerPoint) -> bool:
    return q.relation_value() == 0


def hodge_dual(q: PlueckerPoint) -> PlueckerPoint:
    """Pluecker point of the annihilator 2-plane."""
    p01, p02, p03, p12, p13, p23 = q.p
    return PlueckerPoint((p23, -p13, p12, p03, -p02, p01))


@dataclass(frozen=True)
class CohomClass:
    """Class (q2, s2) = (c2 of pulled-back Q, c2 of pulled-back S); q2 + s2 = c^2."""

    q2: int
    s2: int

    def __post_init__(self):
        if self.q2 < 0 or self.s2 < 0:
            raise ValueError(f"class components must be nonnegative: {self.as_tuple()}")
        total = self.q2 + self.s2
        if total == 0 or isqrt(total) ** 2 != total:
            raise ValueError(f"q2 + s2 = {total} is not a positive perfect square")

    @property
    def c(self) -> int:
        return isqrt(self.q2 + self.s2)

    def as_tuple(self) -> tuple[int, int]:
        return (self.q2, self.s2)

    def dual(self) -> CohomClass:
        return CohomClass(self.s2, self.q2)

    def __repr__(self):
        return f"({self.q2},{self.s2})"
