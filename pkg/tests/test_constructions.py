from fractions import Fraction

import pytest

from smmv import constructions as cons
from smmv import filters as flt
from smmv import mv
from smmv import states as st
from smmv.errors import (
    ClosureExceeded,
    InvalidParameter,
    NotAChain,
    NotAFilter,
    NotASubalgebra,
    UnknownFixture,
)


def test_basic_constructors():
    assert cons.finite_chain(3).size() == 4
    assert str(cons.chang_algebra(1)) == "C(1)"
    assert cons.product([cons.finite_chain(2)]) == cons.finite_chain(2)
    with pytest.raises(InvalidParameter):
        cons.product([])
    with pytest.raises(InvalidParameter):
        cons.finite_chain(0)
    D = cons.diagonalize(cons.finite_chain(2))
    assert D.apply((2, 0)) == (2, 2)
    assert st.check_state_axioms(D).all_hold


def test_subalgebra_closure():
    S4 = cons.finite_chain(4)
    B = cons.subalgebra_closure(S4, [2])
    assert sorted(B.elements()) == [0, 2, 4]
    I = cons.unit_interval()
    B = cons.subalgebra_closure(I, [Fraction(1, 3)])
    assert sorted(B.elements()) == [0, Fraction(1, 3), Fraction(2, 3), 1]
    # the infinitesimal generates all (k, +-) pairs: infinite
    with pytest.raises(ClosureExceeded):
        cons.subalgebra_closure(cons.chang_algebra(1), [mv.Lex(0, 1)], cap=100)


def test_finite_quotient_is_a_chain():
    A = cons.product([cons.finite_chain(1), cons.finite_chain(1)])
    Q, proj = cons.quotient_by_filter(A, {(1, 1), (1, 0)})
    assert Q.size() == 2
    assert cons.find_isomorphism(Q, cons.finite_chain(1)) is not None
    assert proj((1, 0)) == proj((1, 1)) and proj((0, 1)) == proj((0, 0))


def test_quotient_rejects_non_filters():
    with pytest.raises(NotAFilter):
        cons.quotient_by_filter(cons.finite_chain(2), {1, 2})


def test_quotient_projection_is_homomorphism():
    A = cons.product([cons.finite_chain(2), cons.finite_chain(2)])
    F = {(2, 1), (2, 2)}  # not a filter: (2,1)*(2,1) = (2,0)
    with pytest.raises(NotAFilter):
        cons.quotient_by_filter(A, F)
    F = {(2, 0), (2, 1), (2, 2)}
    Q, proj = cons.quotient_by_filter(A, F)
    for x in A.elements():
        assert proj(A.neg(x)) == Q.neg(proj(x))
        for y in A.elements():
            assert proj(A.oplus(x, y)) == Q.oplus(proj(x), proj(y))


def test_symbolic_quotients():
    C = cons.chang_algebra(2)
    Q, proj = cons.quotient_by_filter(C, flt.RAD1)
    assert proj(mv.Lex(1, 5)) == 1
    Q, proj = cons.quotient_by_filter(C, flt.TRIVIAL)
    assert Q == C
    Q, proj = cons.quotient_by_filter(C, flt.IMPROPER)
    assert Q.size() == 1


def test_skew_diagonal_with_chain_embedding():
    S = cons.skew_diagonal(cons.finite_chain(1), cons.finite_chain(2), flt.TRIVIAL)
    assert S.apply((1, 1)) == (1, 2)
    assert S.apply((0, 2)) == (0, 0)
    assert st.check_state_axioms(S).all_hold


def test_skew_diagonal_with_trivial_filter_is_diagonal():
    S = cons.skew_diagonal(cons.finite_chain(2), cons.finite_chain(2), flt.TRIVIAL)
    D = cons.diagonalize(cons.finite_chain(2))
    assert all(S.apply(x) == D.apply(x) for x in D.algebra.elements())


def test_skew_diagonal_errors():
    P = cons.product([cons.finite_chain(1), cons.finite_chain(1)])
    with pytest.raises(NotAChain):
        cons.skew_diagonal(P, cons.finite_chain(1), flt.TRIVIAL)
    with pytest.raises(NotASubalgebra):
        cons.skew_diagonal(cons.finite_chain(2), cons.finite_chain(3), flt.TRIVIAL)


def test_skew_with_radical_quotient():
    S = cons.skew_diagonal(cons.chang_algebra(1), cons.chang_algebra(1), flt.RAD1)
    x = (mv.Lex(1, -2), 0)
    assert S.apply(x) == (mv.Lex(1, -2), 1)
    assert st.check_state_axioms(S, st.Sampled(count=500)).all_hold


def test_fixtures():
    for name in cons.FIXTURES:
        S = cons.fixture(name)
        assert st.check_state_axioms(S, st.Sampled(count=500)).all_hold
    with pytest.raises(UnknownFixture):
        cons.fixture("nope")


def test_fixture_carriers():
    S = cons.fixture("Ex41")
    A = S.algebra
    assert A.contains((mv.Lex(0, 1), mv.Lex(0, 3)))
    assert A.contains((mv.Lex(1, -1), mv.Lex(1, 0)))
    assert not A.contains((mv.Lex(0, 1), mv.Lex(1, 0)))
    assert S.apply((mv.Lex(1, -1), mv.Lex(1, -5))) == (mv.Lex(1, -1), mv.Lex(1, -1))


def test_quotient_smmv_of_diagonal():
    S = cons.diagonalize(cons.chang_algebra(1))
    Q = cons.quotient_smmv(S, flt.ProductFilter((flt.TRIVIAL, flt.RAD1)))
    assert Q.apply((mv.Lex(1, -3), 0)) == (mv.Lex(1, -3), 1)
    assert Q.apply((mv.Lex(0, 3), 1)) == (mv.Lex(0, 3), 0)
    assert st.check_state_axioms(Q, st.Sampled(count=500)).all_hold


def test_find_isomorphism():
    A = cons.product([cons.finite_chain(1), cons.finite_chain(2)])
    B = cons.product([cons.finite_chain(2), cons.finite_chain(1)])
    h = cons.find_isomorphism(A, B)
    assert h is not None and h[(1, 0)] == (0, 1)
    assert cons.find_isomorphism(cons.finite_chain(5), A) is None
