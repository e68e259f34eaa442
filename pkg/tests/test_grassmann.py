import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grassmorph.exactalg import ExactMatrix, kernel_basis, rank
from grassmorph.grassmann import (
    CohomClass,
    PlueckerPoint,
    RankDeficient,
    check_relation,
    hodge_dual,
    pluecker_from_rows,
)

entry = st.integers(-5, 5)
matrix24 = st.lists(st.lists(entry, min_size=4, max_size=4), min_size=2, max_size=2)


def test_examples():
    assert pluecker_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]]) == PlueckerPoint((1, 0, 0, 0, 0, 0))
    q = pluecker_from_rows([[1, 1, 1, 1], [1, 1, 1, 0]])
    assert q == PlueckerPoint((0, 0, -1, 0, -1, -1))
    assert q.p == (0, 0, 1, 0, 1, 1)
    with pytest.raises(RankDeficient):
        pluecker_from_rows([[1, 1, 1, 1], [2, 2, 2, 2]])


def test_relation_examples():
    assert check_relation(PlueckerPoint((1, 0, 0, 0, 0, 0)))
    assert not check_relation(PlueckerPoint((1, 0, 0, 0, 0, 1)))
    assert hodge_dual(PlueckerPoint((1, 0, 0, 0, 0, 0))) == PlueckerPoint((0, 0, 0, 0, 0, 1))


def _rank2(rows):
    return rank(ExactMatrix.from_rows(rows)) == 2


@given(matrix24)
def test_relation_and_involution(rows):
    if not _rank2(rows):
        return
    q = pluecker_from_rows(rows)
    assert check_relation(q)
    assert check_relation(hodge_dual(q))
    assert hodge_dual(hodge_dual(q)) == q


@given(matrix24, st.lists(entry, min_size=4, max_size=4))
def test_invariant_under_row_operations(rows, g):
    if not _rank2(rows) or g[0] * g[3] - g[1] * g[2] == 0:
        return
    new = [[g[0] * a + g[1] * b for a, b in zip(*rows)], [g[2] * a + g[3] * b for a, b in zip(*rows)]]
    assert pluecker_from_rows(new) == pluecker_from_rows(rows)


def test_dual_is_kernel_point():
    rng = random.Random(3)
    checked = 0
    while checked < 20:
        m = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)]
        if not _rank2(m):
            continue
        ker = kernel_basis(ExactMatrix.from_rows(m))
        assert len(ker) == 2
        assert hodge_dual(pluecker_from_rows(m)) == pluecker_from_rows(ker)
        checked += 1


def test_cohom_class():
    c = CohomClass(1, 3)
    assert c.c == 2 and c.dual() == CohomClass(3, 1)
    for bad in [(3, 5), (0, 0), (-1, 2)]:
        with pytest.raises(ValueError):
            CohomClass(*bad)
