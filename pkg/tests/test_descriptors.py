from fractions import Fraction

import pytest

from smmv import filters as flt
from smmv import mv
from smmv.descriptors import EpsLiteral, parse_assignment, parse_descriptor, parse_element, parse_raw_element
from smmv.errors import DomainMismatch, NotAChain, ParseError, UnknownDescriptor
from smmv.states import SMMVAlgebra


@pytest.mark.parametrize(
    "text,name",
    [
        ("S(3)", "S(3)"),
        ("C(2)", "C(2)"),
        ("I", "I"),
        ("A({2,3})", "A({2,3})"),
        ("A({})", "A({})"),
        (" prod( S(1) , C(1) ) ", "prod(S(1),C(1))"),
        ("Binf", "Binf"),
    ],
)
def test_mv_descriptors(text, name):
    d = parse_descriptor(text)
    assert not isinstance(d, SMMVAlgebra)
    assert str(d) == name


@pytest.mark.parametrize("text", ["D(S(2))", "skew(S(1),S(2),Trivial)", "skew(C(1),C(1),Rad1)", "Ex41", "T34D", "T34B"])
def test_state_descriptors(text):
    assert isinstance(parse_descriptor(text), SMMVAlgebra)


@pytest.mark.parametrize("text", ["Q(3)", "S(", "S(0)", "prod()", "D(D(S(1)))", "S(2) x", "skew(S(1),S(2),Bogus)"])
def test_bad_descriptors(text):
    with pytest.raises(UnknownDescriptor):
        parse_descriptor(text)


def test_skew_with_explicit_and_product_filters():
    with pytest.raises(NotAChain):
        parse_descriptor("skew(S(1),prod(S(1),S(1)),[Trivial,Improper])")
    S = parse_descriptor("skew(S(2),S(2),{2})")
    assert S.apply((1, 0)) == (1, 1)


def test_raw_elements():
    assert parse_raw_element("1/3") == Fraction(1, 3)
    assert parse_raw_element("1/3+e") == EpsLiteral(Fraction(1, 3), {1: 1})
    assert parse_raw_element("1-3e") == EpsLiteral(Fraction(1), {1: -3})
    assert parse_raw_element("2*e^2 - e") == EpsLiteral(Fraction(0), {1: -1, 2: 2})
    assert parse_raw_element("((0,1),(1,-2))") == ((0, 1), (1, -2))
    for bad in ["1/0", "e^0", "1/2e", "(1,", "x"]:
        with pytest.raises(ParseError):
            parse_raw_element(bad)


def test_elements_coerced_per_algebra():
    assert parse_element(mv.FiniteChain(3), "2") == 2
    with pytest.raises(DomainMismatch):
        parse_element(mv.FiniteChain(3), "4")
    with pytest.raises(DomainMismatch):
        parse_element(mv.FiniteChain(3), "1/2")
    assert parse_element(mv.Chang(1), "(0,5)") == mv.Lex(0, 5)
    with pytest.raises(DomainMismatch):
        parse_element(mv.Chang(1), "(0,-5)")
    assert parse_element(mv.Hyper((2,)), "1-3e") == mv.HyperRat(Fraction(1), -3)
    with pytest.raises(DomainMismatch):
        parse_element(mv.Hyper((3,)), "1/3")


def test_assignments():
    D = parse_descriptor("D(I)")
    env = parse_assignment(D, "x=(1/2,0), y=(1,1)")
    assert env == {"x": (Fraction(1, 2), Fraction(0)), "y": (Fraction(1), Fraction(1))}
    with pytest.raises(ParseError):
        parse_assignment(D, "x")


def test_principal_filters():
    C = mv.Chang(1)
    assert flt.principal_contains(C, mv.Lex(1, -1), mv.Lex(1, -100))
    assert not flt.principal_contains(C, mv.Lex(1, -1), mv.Lex(0, 100))
    assert flt.principal_contains(C, mv.Lex(0, 1), mv.Lex(0, 0))  # generates the improper filter
    B = mv.InfinitesimalChain()
    assert flt.principal_contains(B, parse_element(B, "1-e"), parse_element(B, "1-e^2"))
    assert not flt.principal_contains(B, parse_element(B, "1-e^2"), parse_element(B, "1-e"))
    S = mv.FiniteChain(4)
    assert flt.principal_contains(S, 3, 0) and flt.principal_contains(S, 4, 4) and not flt.principal_contains(S, 4, 3)
