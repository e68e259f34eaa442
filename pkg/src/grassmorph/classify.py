"""Which classes (q2, s2) are represented by a morphism P^2 -> Gr(2, C^4)?

The decision tree combines the necessary square condition, the split
classes (ab, (a+b)^2 - ab), the nonexistence ranges for c >= 4, and the
existence ranges built from Cayley-Bacharach point sets.  Whatever is left
is reported as Unknown.

Reason tags are short machine-readable strings, e.g. ``thm-nonexist`` or
``exist-part-3-t=2``; the vocabulary is listed in ``REASONS``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt
from typing import Union

from .morphisms import is_split_class

REASONS = {
    "lemma-le21": "q2 + s2 must be a positive perfect square",
    "constant-excluded": "non-constant morphisms have c > 0",
    "exist-part-0": "finite self-maps of P^2 composed with a plane",
    "exist-part-1": "c <= 3: every class is realized",
    "exist-part-2": "c = 4, 3 <= q2 <= 13",
    "exist-part-3-t=<t>": "Cayley-Bacharach points in general position at level t",
    "lemma-le22": "split pull-back O(a) + O(b)",
    "thm-nonexist": "Cayley-Bacharach obstruction for c >= 4",
    "thm-nonexist/lemma-re1": "the class (1, 15)",
    "remark-re-open": "not decided by the known constructions or obstructions",
}

EMBEDDED_CLASSES = frozenset({(1, 0), (0, 1), (1, 3), (3, 1)})


class Status(enum.Enum):
    REALIZABLE = "Realizable"
    NOT_REALIZABLE = "NotRealizable"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Split:
    a: int
    b: int

    def to_json(self) -> dict:
        return {"kind": "Split", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class TrivialPlane:
    """A linear plane P^2 inside Gr(2, C^4); classes (1,0) and (0,1)."""

    def to_json(self) -> dict:
        return {"kind": "TrivialPlane"}


@dataclass(frozen=True)
class ConstantExcluded:
    def to_json(self) -> dict:
        return {"kind": "ConstantExcluded"}


@dataclass(frozen=True)
class FiniteSelfMap:
    """A degree-n self-map of P^2 followed by a plane; class (0, n^2) or its dual."""

    n: int

    def to_json(self) -> dict:
        return {"kind": "FiniteSelfMap", "n": self.n}


@dataclass(frozen=True)
class CbPoints:
    """ell reduced points satisfying Cayley-Bacharach for O(c - 3).

    ``t`` is the general-position level checked by ``verify_position``;
    ``on_curve`` is the degree of the curve carrying the points (0: none).
    """

    ell: int
    c: int
    t: int
    strict_three: bool = False
    on_curve: int = 0

    def to_json(self) -> dict:
        return {"kind": "CbPoints", "ell": self.ell, "c": self.c, "t": self.t,
                "strict_three": self.strict_three, "on_curve": self.on_curve}


@dataclass(frozen=True)
class Dual:
    inner: Recipe

    def to_json(self) -> dict:
        return {"kind": "Dual", "inner": self.inner.to_json()}


Recipe = Union[Split, TrivialPlane, ConstantExcluded, FiniteSelfMap, CbPoints, Dual]


@dataclass(frozen=True)
class ClassVerdict:
    q2: int
    s2: int
    status: Status
    reason: str
    witness: Recipe | None = None
    caveat: str | None = None

    def __post_init__(self):
        if self.status is Status.REALIZABLE and self.witness is None:
            raise ValueError("a realizable verdict needs a witness")

    def to_json(self) -> dict:
        return {
            "class": [self.q2, self.s2],
            "status": str(self.status),
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "caveat": self.caveat,
        }


# For c = 3 and a single point, the Cayley-Bacharach condition in degree 0
# fails (constants vanish on the empty set but not at the point), so the
# point-set witness does not exist and the small-length obstruction applies.
C3_SINGLE_POINT = ("Cayley-Bacharach fails in degree 0 for one point; "
                   "the small-length obstruction also covers this class")


def _square_root(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None


def nonexistence_range(c: int, q2: int) -> bool:
    return c >= 4 and (1 <= q2 <= c - 2 or c * c - c + 2 <= q2 <= c * c - 1)


def existence_level(c: int, ell: int) -> tuple[int, int] | None:
    """(t, on_curve) when ell lies in one of the c >= 5 existence intervals."""
    h = (c * c - 3 * c + 2) // 2
    k = h // c
    for t in range(1, k + 1):
        if t * (c - 3) + 2 <= ell <= t * c:
            return t, t
    if h + 1 <= ell <= c * c // 2:
        return c - 3, 0
    return None


def _wrap(recipe: Recipe, dual: bool) -> Recipe:
    return Dual(recipe) if dual else recipe


def realizability(q2: int, s2: int, use_split: bool = True) -> ClassVerdict:
    """Decide whether (q2, s2) is the class of a morphism.

    ``use_split=False`` skips the split-class pass, leaving only the
    interval logic; this is the variant whose open set for c = 5 is {6, 19}.
    """
    if q2 < 0 or s2 < 0:
        raise ValueError("class components must be nonnegative")
    no, yes = Status.NOT_REALIZABLE, Status.REALIZABLE
    if q2 + s2 == 0:
        return ClassVerdict(q2, s2, no, "constant-excluded", ConstantExcluded())
    c = _square_root(q2 + s2)
    if c is None:
        return ClassVerdict(q2, s2, no, "lemma-le21")
    if q2 == 0 or s2 == 0:
        if c == 1:
            return ClassVerdict(q2, s2, yes, "exist-part-0", TrivialPlane())
        return ClassVerdict(q2, s2, yes, "exist-part-0", _wrap(FiniteSelfMap(c), q2 != 0))
    if nonexistence_range(c, q2):
        reason = "thm-nonexist/lemma-re1" if (q2, s2) == (1, 15) else "thm-nonexist"
        return ClassVerdict(q2, s2, no, reason)
    ell = min(q2, s2)
    dual = ell != q2
    if use_split or c <= 3:
        ab = is_split_class(q2, s2) or is_split_class(s2, q2)
        if ab is not None:
            recipe = _wrap(Split(*ab), is_split_class(q2, s2) is None)
            return ClassVerdict(q2, s2, yes, "exist-part-1" if c <= 3 else "lemma-le22", recipe)
    if c <= 3:
        caveat = C3_SINGLE_POINT if (c, ell) == (3, 1) else None
        return ClassVerdict(q2, s2, yes, "exist-part-1", _wrap(CbPoints(ell, c, 0), dual), caveat)
    if c == 4:
        if ell == 3:
            recipe = CbPoints(3, 4, 1, on_curve=1)
        else:
            recipe = CbPoints(ell, 4, 1, strict_three=True)
        return ClassVerdict(q2, s2, yes, "exist-part-2", _wrap(recipe, dual))
    level = existence_level(c, ell)
    if level is not None:
        t, on_curve = level
        recipe = CbPoints(ell, c, t, on_curve=on_curve)
        return ClassVerdict(q2, s2, yes, f"exist-part-3-t={t}", _wrap(recipe, dual))
    return ClassVerdict(q2, s2, Status.UNKNOWN, "remark-re-open")


def decomposable_classes(c: int) -> set[tuple[int, int]]:
    if c < 1:
        raise ValueError("c must be positive")
    return {(a * (c - a), c * c - a * (c - a)) for a in range(c + 1)}


def embedded_classes() -> frozenset[tuple[int, int]]:
    """Classes of regularly embedded planes; a cited classification fact, not derived here."""
    return EMBEDDED_CLASSES


@dataclass(frozen=True)
class TableRow:
    c: int
    verdicts: tuple[ClassVerdict, ...]

    def counts(self) -> dict[str, int]:
        out = {str(s): 0 for s in Status}
        for v in self.verdicts:
            out[str(v.status)] += 1
        return out

    def with_status(self, status: Status) -> list[int]:
        return [v.q2 for v in self.verdicts if v.status is status]

    def to_json(self) -> dict:
        return {"c": self.c, "counts": self.counts(), "verdicts": [v.to_json() for v in self.verdicts]}


def table(c_max: int, use_split: bool = True) -> list[TableRow]:
    if c_max < 1:
        raise ValueError("c_max must be positive")
    return [
        TableRow(c, tuple(realizability(q2, c * c - q2, use_split) for q2 in range(c * c + 1)))
        for c in range(1, c_max + 1)
    ]
