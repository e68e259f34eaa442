import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from grassmorph import upoly
from grassmorph.poly import (
    X, Y, Z,
    CommonComponent,
    HomPoly,
    ProjPoint,
    common_locus,
    common_zeros,
    evaluate,
    gcd,
    monomials,
    sylvester_resultant,
)

coeff = st.integers(-3, 3)


def forms(d):
    return st.lists(coeff, min_size=len(monomials(d)), max_size=len(monomials(d))).map(
        lambda cs: HomPoly(d, dict(zip(monomials(d), cs))))


def test_eval_examples():
    f = X**2 - Y * Z
    assert evaluate(f, ProjPoint(1, 1, 1)) == 0
    assert evaluate(f, ProjPoint(0, 1, 0)) == 0
    assert evaluate(X * Y, ProjPoint(1, 1, 0)) == 1


def test_monomials():
    assert monomials(0) == [(0, 0, 0)]
    assert len(monomials(1)) == 3
    assert len(monomials(3)) == 10
    assert monomials(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_gcd_examples():
    assert gcd(X * Y, X * Z) == X
    assert gcd(X**2 - Y * Z, X) == HomPoly.const(1)
    f = 3 * X**2 - 6 * Y * Z
    assert gcd(f, f) == f.monic()


def test_resultant_examples():
    r = sylvester_resultant(X - Z, Y - Z, "Z")
    assert r in (X - Y, Y - X)
    assert sylvester_resultant(X**2 - Y * Z, X**2 - Y * Z, "Z").is_zero()
    r = sylvester_resultant(X**2 - Y * Z, X * Y - Z**2, "Z")
    # the four intersection points (0:1:0), (1:1:1), (w:w^2:1), (w^2:w:1) with w^3 = 1
    # project to the roots of X (X^3 - Y^3)
    assert r.degree == 4
    assert r in (X * Y**3 - X**4, X**4 - X * Y**3)


@given(forms(2), forms(2))
def test_resultant_matches_sympy(f, g):
    if f.degree_in(2) < 1 or g.degree_in(2) < 1:
        return
    ours = sylvester_resultant(f, g, "Z").to_sympy().as_expr()
    S = sympy.Symbol("Z")
    theirs = sympy.resultant(f.to_sympy().as_expr(), g.to_sympy().as_expr(), S)
    assert sympy.expand(ours - theirs) == 0


def test_common_zeros_examples():
    cz = common_zeros(X, Y)
    assert [(z.point, z.multiplicity) for z in cz.zeros] == [(ProjPoint(0, 0, 1), 1)]
    assert cz.total == 1
    cz = common_zeros(X**2, Y)
    assert [(z.point, z.multiplicity) for z in cz.zeros] == [(ProjPoint(0, 0, 1), 2)]
    cz = common_zeros(X**2 - Y * Z, X * Y - Z**2)
    assert cz.total == 4
    assert set(cz.rational_points()) == {ProjPoint(0, 1, 0), ProjPoint(1, 1, 1)}
    assert sorted(z.degree for z in cz.zeros if z.point is None) == [2]


def test_common_component_detected():
    with pytest.raises(CommonComponent):
        common_zeros(X * Y, X * Z)


def test_bezout_total_on_random_pairs():
    rng = random.Random(7)
    done = 0
    while done < 50:
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        f = HomPoly(d1, {e: rng.randint(-3, 3) for e in monomials(d1)})
        g = HomPoly(d2, {e: rng.randint(-3, 3) for e in monomials(d2)})
        if f.is_zero() or g.is_zero() or gcd(f, g).degree > 0:
            continue
        cz = common_zeros(f, g, seed=done)
        assert cz.total == d1 * d2
        for p in cz.rational_points():
            assert evaluate(f, p) == 0 and evaluate(g, p) == 0
        done += 1


def test_multiplicities_of_tangent_and_node():
    # a line tangent to a conic meets it with multiplicity 2
    cz = common_zeros(Y * Z - X**2, Y)
    assert [(z.point, z.multiplicity) for z in cz.zeros] == [(ProjPoint(0, 0, 1), 2)]
    # a nodal cubic and a general line through the node: 2 at the node, 1 elsewhere
    cz = common_zeros(Y**2 * Z - X**2 * (X + Z), Y - 2 * X)
    assert {z.point: z.multiplicity for z in cz.zeros} == {ProjPoint(0, 0, 1): 2, ProjPoint(3, 6, 1): 1}
    # a line along one branch of the node meets it three times there
    cz = common_zeros(Y**2 * Z - X**2 * (X + Z), Y - X)
    assert [(z.point, z.multiplicity) for z in cz.zeros] == [(ProjPoint(0, 0, 1), 3)]


def test_common_locus():
    assert common_locus([X, Y, Z]).total == 0
    loc = common_locus([X * Y, X * Z, Y * Z])
    assert set(loc.rational_points()) == {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)}


@given(forms(2), forms(1))
def test_homogeneity(f, g):
    h = f * g + (X + Y) * f
    assert all(sum(e) == 3 for e in h.terms)
    p = (Fraction(2), Fraction(-1), Fraction(3))
    lam = Fraction(5, 2)
    assert f(*(lam * x for x in p)) == lam**2 * f(*p)


@given(forms(2), forms(2))
def test_gcd_divides_and_cofactors_coprime(f, g):
    if f.is_zero() or g.is_zero():
        return
    d = gcd(f, g)
    F, G, D = (h.to_sympy().as_expr() for h in (f, g, d))
    qf, rf = sympy.div(F, D)
    qg, rg = sympy.div(G, D)
    assert rf == 0 and rg == 0
    assert sympy.gcd(qf, qg).is_number


@given(forms(3))
def test_json_round_trip(f):
    assert HomPoly.from_json(f.to_json()) == f


def test_squarefree_decomposition():
    t = [Fraction(0), Fraction(1)]
    a = upoly.mul(upoly.mul(upoly.mul(t, t), [Fraction(-1), Fraction(1)]), [Fraction(2), Fraction(1)])
    a = upoly.mul(a, [Fraction(2), Fraction(1)])  # t^2 (t-1) (t+2)^2
    dec = upoly.squarefree_decomposition(a)
    assert dec == [([Fraction(-1), Fraction(1)], 1), ([Fraction(0), Fraction(2), Fraction(1)], 2)]
