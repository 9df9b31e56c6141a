"""Text syntax for algebras, filters and elements.

Algebras::

    S(n)  C(n)  I  A({p1,p2})  prod(d1,...,dk)  D(d)  skew(dB,dC,filter)
    Ex41  T34D  T34B  Binf

``D(..)``, ``skew(..)`` and the named fixtures carry their own state
operator and parse to an ``SMMVAlgebra``; the rest parse to an MV-algebra.

Filters (third argument of ``skew``): ``Rad1``, ``Rad``, ``Trivial``,
``Improper``, an explicit set ``{e1,e2,..}`` or ``[f1,f2,..]`` for a
componentwise product filter.

Elements: integers, fractions, tuples ``(a,b)``, and expressions in an
infinitesimal ``e`` such as ``1/3+e``, ``1-2e``, ``e^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import constructions as cons
from . import filters as flt
from . import mv
from .errors import DomainMismatch, ParseError, UnknownDescriptor, UnknownFixture
from .states import SMMVAlgebra


@dataclass(frozen=True)
class EpsLiteral:
    """``const + sum(coeffs[d] * e^d)``; degree 0 never appears in coeffs."""

    const: Fraction
    coeffs: dict = field(default_factory=dict)

    def __hash__(self):
        return hash((self.const, tuple(sorted(self.coeffs.items()))))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokens(text):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("sym", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Reader:
    def __init__(self, text, error=ParseError):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0
        self.error = error

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        pos = self.peek()[2]
        if self.error is ParseError:
            raise ParseError(msg, pos, self.text)
        raise self.error(f"{msg} at position {pos} in {self.text!r}")

    def at_sym(self, s):
        kind, val, _ = self.peek()
        return kind == "sym" and val == s

    def expect_sym(self, s):
        if not self.at_sym(s):
            self.fail(f"expected {s!r}")
        self.next()

    def expect_int(self):
        kind, val, _ = self.peek()
        if kind != "int":
            self.fail("expected an integer")
        self.next()
        return val

    def done(self):
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")


# ---------------------------------------------------------------------------
# elements


def _scalar_term(r):
    """One signed-less summand: rational, ``e``, ``ke``, ``k*e``, ``e^d``."""
    kind, val, _ = r.peek()
    coef = None
    if kind == "int":
        r.next()
        coef = Fraction(val)
        if r.at_sym("/"):
            r.next()
            den = r.expect_int()
            if den == 0:
                r.fail("zero denominator")
            coef /= den
        if r.at_sym("*"):
            r.next()
            kind, val, _ = r.peek()
            if kind != "name" or val != "e":
                r.fail("expected 'e' after '*'")
        kind, val, _ = r.peek()
    if kind == "name" and val == "e":
        r.next()
        deg = 1
        if r.at_sym("^"):
            r.next()
            deg = r.expect_int()
            if deg < 1:
                r.fail("exponent must be positive")
        return deg, Fraction(1) if coef is None else coef
    if coef is None:
        r.fail("expected a number or 'e'")
    return 0, coef


def _scalar(r):
    const = Fraction(0)
    coeffs = {}
    sign = 1
    if r.at_sym("-"):
        r.next()
        sign = -1
    elif r.at_sym("+"):
        r.next()
    while True:
        deg, c = _scalar_term(r)
        if deg == 0:
            const += sign * c
        else:
            coeffs[deg] = coeffs.get(deg, 0) + sign * c
        if r.at_sym("+"):
            sign = 1
        elif r.at_sym("-"):
            sign = -1
        else:
            break
        r.next()
    coeffs = {d: c for d, c in coeffs.items() if c}
    for c in coeffs.values():
        if c.denominator != 1:
            r.fail("infinitesimal coefficients must be integers")
    if not coeffs:
        return const
    return EpsLiteral(const, {d: int(c) for d, c in coeffs.items()})


def _raw_element(r):
    if r.at_sym("("):
        r.next()
        items = [_raw_element(r)]
        while r.at_sym(","):
            r.next()
            items.append(_raw_element(r))
        r.expect_sym(")")
        return tuple(items)
    return _scalar(r)


def parse_raw_element(text):
    """Parse element text without reference to an algebra."""
    r = _Reader(text)
    out = _raw_element(r)
    r.done()
    return out


def _algebra_of(A):
    return A.algebra if isinstance(A, SMMVAlgebra) else A


def parse_element(A, text):
    """Parse ``text`` and coerce it into the carrier of ``A``."""
    A = _algebra_of(A)
    x = A.coerce(parse_raw_element(text))
    if not A.contains(x):
        raise DomainMismatch(f"{text!r} is not an element of {A}")
    return x


def _split_top(text, sep):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_assignment(A, text):
    """``"x=1/3+e, y=(0,1)"`` to a dict; commas inside brackets are kept."""
    env = {}
    if not text.strip():
        return env
    for part in _split_top(text, ","):
        if "=" not in part:
            raise ParseError(f"expected name=value in {part.strip()!r}")
        name, value = part.split("=", 1)
        name = name.strip()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad variable name {name!r}")
        env[name] = parse_element(A, value.strip())
    return env


# ---------------------------------------------------------------------------
# algebras and filters

_NAMED_FILTERS = {"rad1": flt.RAD1, "rad": flt.RAD, "trivial": flt.TRIVIAL, "improper": flt.IMPROPER}


def _filter(r, C):
    kind, val, _ = r.peek()
    if kind == "name" and val.lower() in _NAMED_FILTERS:
        r.next()
        return _NAMED_FILTERS[val.lower()]
    if r.at_sym("{"):
        r.next()
        items = []
        if not r.at_sym("}"):
            items.append(_raw_element(r))
            while r.at_sym(","):
                r.next()
                items.append(_raw_element(r))
        r.expect_sym("}")
        try:
            return flt.ExplicitSet(frozenset(C.coerce(x) for x in items))
        except DomainMismatch as exc:
            raise UnknownDescriptor(str(exc)) from None
    if r.at_sym("["):
        r.next()
        factors = getattr(C, "factors", None)
        parts = []
        while True:
            if factors is None or len(parts) >= len(factors):
                r.fail("product filter does not match the algebra")
            parts.append(_filter(r, factors[len(parts)]))
            if not r.at_sym(","):
                break
            r.next()
        r.expect_sym("]")
        if len(parts) != len(factors):
            r.fail("product filter does not match the algebra")
        return flt.ProductFilter(tuple(parts))
    r.fail("expected a filter")


def _mv(r, d):
    if isinstance(d, SMMVAlgebra):
        r.fail("expected an MV-algebra, got an algebra with a state")
    return d


def _descriptor(r):
    kind, val, _ = r.peek()
    if kind != "name":
        r.fail("expected an algebra descriptor")
    r.next()
    if val in ("S", "C"):
        r.expect_sym("(")
        n = r.expect_int()
        r.expect_sym(")")
        if n < 1:
            r.fail("n must be positive")
        return cons.finite_chain(n) if val == "S" else cons.chang_algebra(n)
    if val == "I":
        return cons.unit_interval()
    if val == "Binf":
        return mv.InfinitesimalChain()
    if val == "A":
        r.expect_sym("(")
        r.expect_sym("{")
        primes = []
        if not r.at_sym("}"):
            primes.append(r.expect_int())
            while r.at_sym(","):
                r.next()
                primes.append(r.expect_int())
        r.expect_sym("}")
        r.expect_sym(")")
        return cons.hyper_algebra(primes)
    if val == "prod":
        r.expect_sym("(")
        factors = [_mv(r, _descriptor(r))]
        while r.at_sym(","):
            r.next()
            factors.append(_mv(r, _descriptor(r)))
        r.expect_sym(")")
        return cons.product(factors)
    if val == "D":
        r.expect_sym("(")
        A = _mv(r, _descriptor(r))
        r.expect_sym(")")
        return cons.diagonalize(A)
    if val == "skew":
        r.expect_sym("(")
        B = _mv(r, _descriptor(r))
        r.expect_sym(",")
        C = _mv(r, _descriptor(r))
        r.expect_sym(",")
        F = _filter(r, C)
        r.expect_sym(")")
        return cons.skew_diagonal(B, C, F)
    try:
        return cons.fixture(val)
    except UnknownFixture:
        r.i -= 1
        r.fail(f"unknown algebra {val!r}")


def parse_descriptor(text):
    """An ``MVAlgebra`` or, for ``D``/``skew``/fixtures, an ``SMMVAlgebra``."""
    r = _Reader(text, error=UnknownDescriptor)
    d = _descriptor(r)
    r.done()
    return d
