from math import isqrt

import pytest

from grassmorph.cayley_bacharach import cb_check, gen_position_points, verify_position
from grassmorph.classify import (
    CbPoints,
    ConstantExcluded,
    Dual,
    FiniteSelfMap,
    Split,
    Status,
    TrivialPlane,
    decomposable_classes,
    embedded_classes,
    realizability,
    table,
)
from grassmorph.grassmann import CohomClass
from grassmorph.morphisms import cohomology_class, example_split

R, N, U = Status.REALIZABLE, Status.NOT_REALIZABLE, Status.UNKNOWN


def all_classes(c_max):
    for c in range(1, c_max + 1):
        for q2 in range(c * c + 1):
            yield q2, c * c - q2


def unwrap(recipe):
    dual = False
    while isinstance(recipe, Dual):
        recipe, dual = recipe.inner, not dual
    return recipe, dual


def test_examples():
    v = realizability(1, 15)
    assert v.status is N and v.reason == "thm-nonexist/lemma-re1"
    assert realizability(1, 3).witness == Split(1, 1)
    assert realizability(3, 1).witness == Dual(Split(1, 1))
    assert realizability(7, 9).status is R
    assert realizability(3, 5).status is N and realizability(3, 5).reason == "lemma-le21"
    assert realizability(6, 19, use_split=False).status is U
    assert realizability(6, 19).witness == Split(2, 3)
    assert realizability(0, 25).witness == FiniteSelfMap(5)
    v = realizability(0, 0)
    assert v.status is N and v.witness == ConstantExcluded()
    assert realizability(1, 0).witness == TrivialPlane()
    with pytest.raises(ValueError):
        realizability(-1, 2)


def test_decomposable_and_embedded():
    assert decomposable_classes(2) == {(0, 4), (1, 3)}
    assert decomposable_classes(4) == {(0, 16), (3, 13), (4, 12)}
    assert decomposable_classes(1) == {(0, 1)}
    e = embedded_classes()
    assert (1, 3) in e and len(e) == 4 and (2, 2) not in e


def test_tables():
    for use_split in (False, True):
        rows = table(6, use_split)
        for row in rows[:3]:
            assert row.counts()["Realizable"] == row.c**2 + 1
        assert rows[3].with_status(U) == []
        assert rows[3].with_status(N) == [1, 2, 14, 15]
    assert table(6, False)[4].with_status(U) == [6, 19]
    assert table(6, False)[5].with_status(U) == [7, 8, 9, 10, 26, 27, 28, 29]
    assert table(6, True)[4].with_status(U) == []
    assert table(6, True)[5].with_status(U) == [7, 10, 26, 29]
    assert realizability(19, 6).witness == Dual(Split(2, 3))


def interval_oracle(c, q2):
    """Independent restatement of the stated ranges (not sharing code with the classifier)."""
    if c >= 4 and (1 <= q2 <= c - 2 or c * c - c + 2 <= q2 <= c * c - 1):
        return "no"
    ells = set()
    if c <= 3:
        ells = set(range(c * c + 1))
    elif c == 4:
        ells = set(range(3, 14))
    else:
        half = (c * c - 3 * c + 2) / 2
        k = max(k for k in range(0, c) if k * c <= half)
        for t in range(1, k + 1):
            ells |= set(range(t * (c - 3) + 2, t * c + 1))
        ells |= {l for l in range(int(half) + 1, c * c + 1) if l <= c * c / 2}
        ells |= {c * c - l for l in ells}
    if q2 in (0, c * c) or q2 in ells:
        return "yes"
    return "open"


def test_interval_logic_matches_oracle():
    for q2, s2 in all_classes(12):
        c = isqrt(q2 + s2)
        v = realizability(q2, s2, use_split=False)
        assert {"no": N, "yes": R, "open": U}[interval_oracle(c, q2)] is v.status, (q2, s2)


def test_symmetry():
    for total in range(50):
        for q2 in range(total + 1):
            for use_split in (False, True):
                assert realizability(q2, total - q2, use_split).status is \
                    realizability(total - q2, q2, use_split).status


def test_le21_consistency_and_witnesses():
    for total in range(50):
        for q2 in range(total + 1):
            v = realizability(q2, total - q2)
            if v.status is not N:
                assert total > 0 and isqrt(total) ** 2 == total
            if v.status is R:
                assert v.witness is not None
            if v.status is N:
                assert v.reason


def test_disjointness_up_to_12():
    for c in range(4, 13):
        no = {q for q in range(c * c + 1) if interval_oracle(c, q) == "no"}
        split = {q for q, _ in decomposable_classes(c)} | {s for _, s in decomposable_classes(c)}
        yes = {q for q in range(c * c + 1) if interval_oracle(c, q) == "yes"} | split
        assert not no & yes, c


def test_split_witnesses_are_sound():
    seen = set()
    for q2, s2 in all_classes(6):
        recipe, dual = unwrap(realizability(q2, s2).witness)
        if isinstance(recipe, Split) and recipe.a >= 1 and (recipe.a, recipe.b) not in seen:
            seen.add((recipe.a, recipe.b))
            got = cohomology_class(example_split(recipe.a, recipe.b)).cls
            want = CohomClass(q2, s2)
            assert got == (want.dual() if dual else want)
    assert len(seen) == 9


def test_cb_witnesses_are_sound():
    checked = 0
    for q2, s2 in all_classes(6):
        recipe, dual = unwrap(realizability(q2, s2).witness)
        if not isinstance(recipe, CbPoints) or dual or recipe.c < 4:
            continue
        assert recipe.ell == q2 and recipe.c ** 2 == q2 + s2
        z = gen_position_points(recipe.ell, max(recipe.t, 1), recipe.c, seed=0,
                                strict_three=recipe.strict_three, on_curve=recipe.on_curve)
        assert verify_position(z, max(recipe.t, 1), recipe.c, recipe.strict_three)
        assert cb_check(z, recipe.c - 3).holds, (q2, s2)
        checked += 1
    assert checked > 10


def test_small_c_witnesses():
    for q2, s2 in all_classes(3):
        v = realizability(q2, s2)
        recipe, _ = unwrap(v.witness)
        if not isinstance(recipe, CbPoints):
            continue
        z = gen_position_points(recipe.ell, 1, recipe.c, seed=0)
        holds = cb_check(z, recipe.c - 3).holds
        if (q2, s2) in ((1, 8), (8, 1)):
            # a single point never satisfies the condition in degree 0
            assert not holds and v.caveat is not None
        else:
            assert holds and v.caveat is None
