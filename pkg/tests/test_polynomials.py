import itertools

import pytest
from fractions import Fraction

from obrsk.errors import ContextMismatch, VerificationError
from obrsk.grassmannian import IdElement, enumerate_id
from obrsk.multisets import Cmp
from obrsk.polynomials import SparsePoly, TermOrder


@pytest.fixture(scope="module")
def o5():
    return TermOrder(IdElement((1, 3, 4, 6, 9), 5))


def test_term_order_builds_for_all_beta_through_d5():
    # construction runs an exhaustive totality/transitivity check
    for d in (2, 3, 4, 5):
        for beta in enumerate_id(d):
            order = TermOrder(beta)
            assert order.nvars == len(order.variables)


def test_variables_are_the_roots(o5):
    assert set(o5.variables) == {
        (2, 1), (2, 3), (2, 4), (2, 6),
        (5, 1), (5, 3), (5, 4),
        (7, 1), (7, 3),
        (8, 1),
    }


def test_var_greater_rules(o5):
    assert o5.var_greater((2, 1), (2, 3))  # positive beats negative on a row
    assert o5.var_greater((2, 4), (2, 6))  # negatives: smaller column wins
    assert o5.var_greater((5, 4), (5, 3))  # positives on a row: larger column
    assert o5.var_greater((2, 1), (5, 1))  # positive with smaller row beats all
    assert o5.var_greater((5, 1), (2, 6))  # tie-break: 5 < 6
    assert o5.var_greater((2, 3), (5, 1))  # tie-break: 5 > 3
    assert o5.var_greater((2, 3), (8, 1))  # tie-break: 8 > 3


def test_var_greater_is_strict_and_total(o5):
    for mu, nu in itertools.combinations(o5.variables, 2):
        assert o5.var_greater(mu, nu) != o5.var_greater(nu, mu)
        assert not o5.var_greater(mu, mu)


def test_mono_compare(o5):
    m1 = o5.mono_of_vars([(5, 1), (2, 1)])
    m2 = o5.mono_of_vars([(5, 3), (5, 3)])
    assert o5.mono_compare(m1, m2) is Cmp.GREATER  # X21 beats X53 lexicographically
    m3 = o5.mono_of_vars([(5, 1)])
    assert o5.mono_compare(m3, m1) is Cmp.LESS  # degree first
    assert o5.mono_compare(m1, m1) is Cmp.EQUAL


def test_mono_vars_roundtrip(o5):
    points = ((2, 3), (2, 3), (5, 1))
    assert o5.vars_of_mono(o5.mono_of_vars(points)) == points


def test_format_mono(o5):
    assert o5.format_mono((0,) * o5.nvars) == "1"
    mono = o5.mono_of_vars([(2, 1), (2, 1)])
    assert o5.format_mono(mono) == "X2,1^2"


def test_poly_arithmetic(o5):
    x = SparsePoly.variable(o5, (2, 1))
    y = SparsePoly.variable(o5, (5, 3))
    p = (x + y) * (x - y)
    q = x * x - y * y
    assert (p - q).is_zero
    assert p.degree() == 2
    assert p.is_homogeneous()
    assert p.leading_monomial() == o5.mono_of_vars([(2, 1), (2, 1)])
    assert (p * 0).is_zero
    assert (Fraction(1, 2) * p + Fraction(1, 2) * p - p).is_zero


def test_poly_str(o5):
    x = SparsePoly.variable(o5, (2, 1))
    y = SparsePoly.variable(o5, (5, 3))
    assert str(x - y) == "X2,1 - X5,3"
    assert str(SparsePoly.zero(o5)) == "0"
    assert str(SparsePoly.constant(o5, -3)) == "-3"


def test_context_mismatch(o5):
    other = TermOrder(IdElement((1, 3, 4, 6, 9), 5))
    with pytest.raises(ContextMismatch):
        SparsePoly.variable(o5, (2, 1)) + SparsePoly.variable(other, (2, 1))


def test_broken_order_is_rejected():
    # sanity check that the construction-time verifier actually fires
    beta = IdElement((1, 3, 4, 6, 9), 5)
    original = TermOrder.var_greater
    try:
        TermOrder.var_greater = lambda self, mu, nu: mu != nu
        with pytest.raises(VerificationError):
            TermOrder(beta)
    finally:
        TermOrder.var_greater = original
