import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from smmv import mv
from smmv.descriptors import parse_descriptor, parse_element
from smmv.errors import DomainMismatch, InvalidParameter

UNIT = mv.UnitInterval()

fractions01 = st.fractions(min_value=0, max_value=1, max_denominator=60)


def _seeded(A, k, seed=0, bound=10**6):
    rng = random.Random(seed)
    return [A.sample(rng, bound) for _ in range(k)]


INFINITE = [UNIT, mv.Chang(1), mv.Chang(3), mv.Hyper((2,)), mv.Hyper((2, 3)), mv.InfinitesimalChain()]


@pytest.mark.parametrize("n", range(1, 9))
def test_finite_chain_matches_unit_interval(n):
    A = mv.FiniteChain(n)
    for x in A.elements():
        assert Fraction(A.neg(x), n) == oracles.u_neg(Fraction(x, n))
        for y in A.elements():
            r, s = Fraction(x, n), Fraction(y, n)
            assert Fraction(A.oplus(x, y), n) == oracles.u_oplus(r, s)
            assert Fraction(mv.odot(A, x, y), n) == oracles.u_odot(r, s)
            assert Fraction(mv.imp(A, x, y), n) == oracles.u_imp(r, s)
            assert Fraction(mv.ominus(A, x, y), n) == oracles.u_ominus(r, s)
            assert Fraction(mv.iff(A, x, y), n) == oracles.u_iff(r, s)
            assert A.leq(x, y) == (x <= y)


@given(fractions01, fractions01)
def test_unit_interval_closed_forms(r, s):
    assert mv.odot(UNIT, r, s) == oracles.u_odot(r, s)
    assert mv.imp(UNIT, r, s) == oracles.u_imp(r, s)
    assert mv.ominus(UNIT, r, s) == oracles.u_ominus(r, s)
    assert mv.join(UNIT, r, s) == max(r, s)
    assert mv.meet(UNIT, r, s) == min(r, s)
    assert mv.iff(UNIT, r, s) == oracles.u_iff(r, s)


@given(fractions01, st.integers(0, 12))
def test_nmul_closed_form(r, k):
    assert mv.nmul(UNIT, k, r) == min(k * r, Fraction(1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chang_matches_definition(n):
    A = mv.Chang(n)
    for x in _seeded(A, 300, seed=n):
        assert A.contains(x)
        assert (A.neg(x).a, A.neg(x).b) == oracles.chang_neg(n, (x.a, x.b))
    xs = _seeded(A, 60, seed=10 + n)
    for x in xs:
        for y in xs:
            s = A.oplus(x, y)
            assert (s.a, s.b) == oracles.chang_oplus(n, (x.a, x.b), (y.a, y.b))
            assert A.leq(x, y) == oracles.lex_le((x.a, x.b), (y.a, y.b))


@pytest.mark.parametrize("A", INFINITE, ids=str)
def test_mv_axioms_sampled(A):
    xs = _seeded(A, 25, seed=1)
    for x in xs:
        assert A.contains(x)
        assert A.oplus(x, A.zero) == x
        assert A.neg(A.neg(x)) == x
        assert A.oplus(x, A.one) == A.one
        for y in xs:
            assert A.oplus(x, y) == A.oplus(y, x)
            assert mv.join(A, x, y) == mv.join(A, y, x)
            assert A.leq(x, y) == (mv.join(A, x, y) == y)
            for z in xs[:8]:
                assert A.oplus(x, A.oplus(y, z)) == A.oplus(A.oplus(x, y), z)


@pytest.mark.parametrize("A", INFINITE, ids=str)
def test_operations_stay_in_carrier(A):
    xs = _seeded(A, 40, seed=2)
    for x in xs:
        for y in xs:
            for kind in ("odot", "ominus", "imp", "join", "meet", "iff"):
                assert A.contains(mv.DERIVED[kind](A, x, y))


def test_hyper_examples():
    A = mv.Hyper((2,))
    third = mv.HyperRat(Fraction(1, 3), 1)
    assert A.contains(third)
    assert not mv.Hyper((3,)).contains(mv.HyperRat(Fraction(1, 3), 0))
    # 1 + eps would exceed 1; truncation keeps the standard part 1 and drops upward eps
    assert A.oplus(mv.HyperRat(Fraction(1, 2), 1), mv.HyperRat(Fraction(1, 2), 0)) == A.one
    assert A.oplus(mv.HyperRat(Fraction(1, 2), -1), mv.HyperRat(Fraction(1, 2), 0)) == mv.HyperRat(Fraction(1), -1)
    assert A.neg(third) == mv.HyperRat(Fraction(2, 3), -1)
    # 0 - eps and 1 + eps are outside the carrier
    assert not A.contains(mv.HyperRat(Fraction(0), -1))
    assert not A.contains(mv.HyperRat(Fraction(1), 1))


def test_hyper_rejects_non_primes():
    with pytest.raises(InvalidParameter):
        mv.Hyper((4,))
    with pytest.raises(InvalidParameter):
        parse_descriptor("A({1})")


def test_infinitesimal_chain_orders():
    B = mv.InfinitesimalChain()
    e, e2 = parse_element(B, "e"), parse_element(B, "e^2")
    assert B.leq(e2, e) and not B.leq(e, e2)
    assert B.leq(parse_element(B, "1000e^2"), e)
    assert B.oplus(parse_element(B, "1-e"), parse_element(B, "2e")) == B.one


def test_checked_operations():
    A = mv.FiniteChain(3)
    assert mv.mv_oplus(A, 1, 1) == 2
    assert mv.mv_neg(A, 1) == 2
    assert mv.mv_derived(A, "nmul", 1, n=5) == 3
    assert mv.mv_leq(A, 1, 2)
    assert mv.element_in_domain(A, 3) and not mv.element_in_domain(A, 4)
    with pytest.raises(DomainMismatch):
        mv.mv_oplus(A, 1, 7)
    with pytest.raises(DomainMismatch):
        mv.mv_neg(UNIT, Fraction(3, 2))


def test_product_componentwise():
    A = mv.Product([mv.FiniteChain(1), mv.Chang(1)])
    x = (1, mv.Lex(0, 2))
    y = (0, mv.Lex(1, -1))
    assert A.oplus(x, y) == (1, mv.Lex(1, 0))
    assert A.neg(x) == (0, mv.Lex(1, -2))
    with pytest.raises(InvalidParameter):
        mv.Product([])


@pytest.mark.parametrize("A", INFINITE + [mv.FiniteChain(4), mv.Product([mv.Chang(1), mv.FiniteChain(2)])], ids=str)
def test_fmt_parse_round_trip(A):
    for x in _seeded(A, 200, seed=3):
        assert parse_element(A, mv.fmt(x)) == x
