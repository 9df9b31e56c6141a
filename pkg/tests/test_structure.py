import pytest

import oracles
from smmv import constructions as cons
from smmv import filters as flt
from smmv import mv
from smmv import states as st
from smmv import structure as sr
from smmv.errors import NotAFilter
from smmv.states import SMMVAlgebra

SMALL = [(1,), (2,), (4,), (8,), (1, 1), (1, 2), (1, 3), (2, 2), (1, 1, 1)]


def _alg(dims):
    return cons.product([cons.finite_chain(n) for n in dims])


def _oracle_sets(T, sets):
    return {frozenset(T.to_package(i) for i in F) for F in sets}


@pytest.mark.parametrize("dims", SMALL, ids=str)
def test_filters_match_brute_force(dims):
    T = oracles.Table(dims)
    assert set(sr.all_filters(_alg(dims))) == _oracle_sets(T, oracles.brute_force_filters(T))


@pytest.mark.parametrize("dims", SMALL, ids=str)
def test_filter_congruence_bridge(dims):
    A = _alg(dims)
    T = oracles.Table(dims)
    identity = list(range(T.n))
    cong = set()
    for c in oracles.congruences(T, identity):
        blocks = {}
        for i, b in enumerate(c):
            blocks.setdefault(b, set()).add(T.to_package(i))
        cong.add(frozenset(frozenset(b) for b in blocks.values()))
    bridged = {frozenset(sr.filter_congruence_bridge(A, flt.ExplicitSet(F))) for F in sr.all_filters(A)}
    assert bridged == cong
    for blocks in cong:
        F = sr.congruence_to_filter(A, blocks)
        assert frozenset(sr.filter_congruence_bridge(A, flt.ExplicitSet(F))) == blocks


def _family_small():
    out = []
    for dims in SMALL:
        A = _alg(dims)
        for tau in st.enumerate_idempotent_endos(A):
            out.append(SMMVAlgebra(A, tau))
    out.append(cons.diagonalize(cons.finite_chain(1)))
    out.append(cons.diagonalize(cons.finite_chain(2)))
    return out


def _index_tau(T, S):
    keys = [T.to_package(i) for i in range(T.n)]
    pos = {k: i for i, k in enumerate(keys)}
    return [pos[S.apply(k)] for k in keys]


def _dims(S):
    A = S.algebra
    return tuple(f.n for f in A.factors) if isinstance(A, mv.Product) else (A.n,)


@pytest.mark.parametrize("S", _family_small(), ids=lambda S: f"{S.algebra}:{S.tau}")
def test_si_matches_congruence_oracle(S):
    T = oracles.Table(_dims(S))
    assert sr.is_subdirectly_irreducible(S) == oracles.is_si_by_congruences(T, _index_tau(T, S))
    rep = sr.check_si_characterization(S)
    assert rep.conjunction == rep.si


def test_minimum_tau_filter_examples():
    # in S_4 every element below 1 generates all of S_4
    S = SMMVAlgebra(cons.finite_chain(4), st.Identity())
    assert sr.generated_filter(S.algebra, [3]).elements == frozenset(range(5))
    assert sr.tau_filters_min(S).elements == frozenset(range(5))
    D = cons.diagonalize(cons.finite_chain(2))
    assert sr.tau_filters_min(D).elements == {(2, 0), (2, 1), (2, 2)}
    P = SMMVAlgebra(_alg((1, 1)), st.Identity())
    assert sr.tau_filters_min(P) is None
    with pytest.raises(NotAFilter):
        sr.filter_congruence_bridge(cons.finite_chain(2), flt.ExplicitSet(frozenset({1, 2})))


def test_radical_data_finite():
    rd = sr.radical_data(cons.finite_chain(3))
    assert rd.is_local and rd.is_semisimple and rd.maximal_filters == [frozenset({3})]
    rd = sr.radical_data(_alg((1, 2)))
    assert not rd.is_local and len(rd.maximal_filters) == 2
    assert rd.rad1 == {(1, 2)}


def test_radical_data_symbolic():
    rd = sr.radical_data(cons.chang_algebra(1))
    assert rd.is_local and not rd.is_semisimple and rd.symbolic
    assert sr.local_negation_property(cons.finite_chain(1)).ok


def test_boolean_elements_and_linearity():
    A = _alg((1, 2))
    assert sr.boolean_elements(A) == {(0, 0), (0, 2), (1, 0), (1, 2)}
    assert sr.boolean_elements(cons.chang_algebra(1)) == {mv.Lex(0, 0), mv.Lex(1, 0)}
    assert sr.is_linear(cons.finite_chain(3)).ok
    assert not sr.is_linear(A).ok
    assert sr.is_linear(cons.hyper_algebra([2])).ok


@pytest.mark.parametrize("dims", SMALL, ids=str)
def test_prime_filters_match_brute_force(dims):
    T = oracles.Table(dims)
    expected = [
        F
        for F in oracles.brute_force_filters(T)
        if T.zero not in F and all(T.imp(i, j) in F or T.imp(j, i) in F for i in range(T.n) for j in range(T.n))
    ]
    V = sr.view(_alg(dims))
    got = {frozenset(V.els[i] for i in F) for F in sr.prime_filters(_alg(dims))}
    assert got == _oracle_sets(T, expected)


def test_classification_examples():
    assert sr.classify_type(cons.diagonalize(cons.finite_chain(2))).type_tag == "D"
    assert sr.classify_type(SMMVAlgebra(cons.finite_chain(4), st.Identity())).type_tag == "I"
    c = sr.classify_type(cons.fixture("Ex41"))
    assert (c.type_tag, c.k_flag) == ("L", False)
    c = sr.classify_type(SMMVAlgebra(cons.hyper_algebra([2]), st.StandardPart()))
    assert (c.type_tag, c.k_flag) == ("L", True)
    c = sr.classify_type(SMMVAlgebra(_alg((1, 1)), st.Identity()))
    assert not c.si and c.matched == ()


def test_symbolic_characterization_of_fixtures():
    rep = sr.check_si_characterization(cons.fixture("T34D"))
    assert rep.cond1.ok and rep.cond2.ok and not rep.cond3.ok
    rep = sr.check_si_characterization(cons.fixture("T34B"))
    assert rep.cond1.ok and not rep.cond2.ok and rep.cond3.ok
    rep = sr.check_si_characterization(cons.fixture("T34B-id"))
    assert not rep.cond1.ok and rep.cond2.ok and rep.cond3.ok


def test_subdiagonal_embedding():
    for S in _family_small():
        if sr.is_subdirectly_irreducible(S):
            assert sr.subdiagonal_embedding_check(S).ok
