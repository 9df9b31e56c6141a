"""Terms over {0, +, ~, tau} with derived sugar: parsing, printing,
normalization, evaluation, the doubling translation and a registry of
named equations.

Concrete syntax, loosest binding first::

    a <-> b     (left assoc)        a -> b      (right assoc)
    a \\/ b                          a /\\ b
    a + b, a - b                    a * b
    ~a, tau(a), n.a                 x, 0, 1, (a)

``+`` is the truncated sum, ``-`` truncated difference, ``*`` the product.
Equations are ``s = t`` or ``s <= t``; quasi-equations are
``s1 = t1, s2 <= t2 ==> s = t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import mv
from .errors import DomainMismatch, InvalidParameter, ParseError, UnboundVariable, UnknownEquation

# ---------------------------------------------------------------------------
# AST


class Term:
    __slots__ = ()

    def __str__(self):
        return show(self)


@dataclass(frozen=True, repr=False)
class Var(Term):
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True, repr=False)
class Zero(Term):
    def __repr__(self):
        return "0"


@dataclass(frozen=True, repr=False)
class One(Term):
    def __repr__(self):
        return "1"


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Tau(Term):
    arg: Term


@dataclass(frozen=True)
class NMul(Term):
    n: int
    arg: Term


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Ominus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Odot(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Imp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Iff(Term):
    left: Term
    right: Term


BINARY = (Oplus, Ominus, Odot, Imp, Join, Meet, Iff)


@dataclass(frozen=True)
class Equation:
    """``left REL right`` with optional hypotheses (each an ``Equation``).

    ``rel`` is ``=`` or ``<=``; ``lhs``/``rhs`` give the equational form,
    with ``s <= t`` read as ``s /\\ t = s``.
    """

    left: Term
    right: Term
    rel: str = "="
    hypotheses: tuple = ()

    @property
    def lhs(self):
        return Meet(self.left, self.right) if self.rel == "<=" else self.left

    @property
    def rhs(self):
        return self.left if self.rel == "<=" else self.right

    @property
    def is_quasi(self):
        return bool(self.hypotheses)

    def __str__(self):
        core = f"{show(self.left)} {self.rel} {show(self.right)}"
        if self.hypotheses:
            return ", ".join(str(h) for h in self.hypotheses) + " ==> " + core
        return core


# ---------------------------------------------------------------------------
# tokenizer and parser

ALIASES = {
    "⊕": "+",
    "¬": "~",
    "⊙": "*",
    "⊖": "-",
    "↔": "<->",
    "→": "->",
    "∨": "\\/",
    "∧": "/\\",
    "τ": "tau",
    "≤": "<=",
    "⟹": "==>",
}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|"
    r"(?P<op><->|->|==>|<=|\\/|/\\|[-+*~().=,]))"
)


def _tokenize(src):
    text = src
    for k, v in ALIASES.items():
        text = text.replace(k, f" {v} ")
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos, src)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, value):
        kind, val, _ = self.peek()
        if kind in ("op",) and val == value:
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            kind, val, pos = self.peek()
            got = "end of input" if kind == "eof" else repr(val)
            raise ParseError(f"expected {value!r}, got {got}", pos, self.src)

    def error(self, what):
        kind, val, pos = self.peek()
        got = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected {what}, got {got}", pos, self.src)

    def at_end(self):
        return self.peek()[0] == "eof"

    # grammar
    def term(self):
        return self.iff()

    def iff(self):
        t = self.imp()
        while self.accept("<->"):
            t = Iff(t, self.imp())
        return t

    def imp(self):
        t = self.lor()
        if self.accept("->"):
            return Imp(t, self.imp())
        return t

    def lor(self):
        t = self.land()
        while self.accept("\\/"):
            t = Join(t, self.land())
        return t

    def land(self):
        t = self.add()
        while self.accept("/\\"):
            t = Meet(t, self.add())
        return t

    def add(self):
        t = self.mul()
        while True:
            if self.accept("+"):
                t = Oplus(t, self.mul())
            elif self.accept("-"):
                t = Ominus(t, self.mul())
            else:
                return t

    def mul(self):
        t = self.unary()
        while self.accept("*"):
            t = Odot(t, self.unary())
        return t

    def unary(self):
        kind, val, pos = self.peek()
        if self.accept("~"):
            return Neg(self.unary())
        if kind == "ident" and val == "tau":
            self.take()
            self.expect("(")
            t = self.term()
            self.expect(")")
            return Tau(t)
        if kind == "num" and self.toks[self.i + 1][1] == "." and self.toks[self.i + 1][0] == "op":
            self.take()
            self.take()
            return NMul(int(val), self.unary())
        return self.atom()

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "ident":
            self.take()
            return Var(val)
        if kind == "num":
            self.take()
            if val == "0":
                return Zero()
            if val == "1":
                return One()
            raise ParseError(f"numeral {val} must be followed by '.'", pos, self.src)
        if self.accept("("):
            t = self.term()
            self.expect(")")
            return t
        self.error("a term")

    def equation(self):
        lhs = self.term()
        if self.accept("="):
            rel = "="
        elif self.accept("<="):
            rel = "<="
        else:
            self.error("'=' or '<='")
        return Equation(lhs, self.term(), rel)


def parse_term(src: str) -> Term:
    p = _Parser(src)
    t = p.term()
    if not p.at_end():
        p.error("end of input")
    return t


def parse_equation(src: str) -> Equation:
    """``s = t``, ``s <= t`` or ``h1, h2, ... ==> s = t``."""
    p = _Parser(src)
    eqs = [p.equation()]
    while p.accept(","):
        eqs.append(p.equation())
    if p.accept("==>"):
        concl = p.equation()
        if not p.at_end():
            p.error("end of input")
        return Equation(concl.left, concl.right, concl.rel, tuple(eqs))
    if not p.at_end():
        p.error("end of input")
    if len(eqs) != 1:
        raise ParseError("hypotheses without '==>'", None, src)
    return eqs[0]


# ---------------------------------------------------------------------------
# printing

_LEVEL = {Iff: 1, Imp: 2, Join: 3, Meet: 4, Oplus: 5, Ominus: 5, Odot: 6}
_SYMBOL = {Iff: "<->", Imp: "->", Join: "\\/", Meet: "/\\", Oplus: "+", Ominus: "-", Odot: "*"}


def _level(t):
    return _LEVEL.get(type(t), 7)


def show(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Neg):
        return "~" + _wrap(t.arg, 7)
    if isinstance(t, Tau):
        return f"tau({show(t.arg)})"
    if isinstance(t, NMul):
        return f"{t.n}." + _wrap(t.arg, 7)
    lvl = _LEVEL[type(t)]
    if isinstance(t, Imp):
        left, right = _wrap(t.left, lvl + 1), _wrap(t.right, lvl)
    else:
        left, right = _wrap(t.left, lvl), _wrap(t.right, lvl + 1)
    return f"{left} {_SYMBOL[type(t)]} {right}"


def _wrap(t, need):
    s = show(t)
    return s if _level(t) >= need else f"({s})"


# ---------------------------------------------------------------------------
# normalization, variables, size


def normalize(t: Term) -> Term:
    """Rewrite into Var/Zero/Neg/Oplus/Tau only."""
    if isinstance(t, (Var, Zero)):
        return t
    if isinstance(t, One):
        return Neg(Zero())
    if isinstance(t, Neg):
        return Neg(normalize(t.arg))
    if isinstance(t, Tau):
        return Tau(normalize(t.arg))
    if isinstance(t, NMul):
        if t.n < 0:
            raise InvalidParameter("n.x needs n >= 0")
        if t.n == 0:
            return Zero()
        x = normalize(t.arg)
        acc = x
        for _ in range(t.n - 1):
            acc = Oplus(acc, x)
        return acc
    a, b = normalize(t.left), normalize(t.right)
    if isinstance(t, Oplus):
        return Oplus(a, b)
    if isinstance(t, Odot):
        return Neg(Oplus(Neg(a), Neg(b)))
    if isinstance(t, Ominus):
        return Neg(Oplus(Neg(a), b))
    if isinstance(t, Imp):
        return Oplus(Neg(a), b)
    if isinstance(t, Join):
        # (a -> b) -> b
        return Oplus(Neg(Oplus(Neg(a), b)), b)
    if isinstance(t, Meet):
        # a * (a -> b)
        return Neg(Oplus(Neg(a), Neg(Oplus(Neg(a), b))))
    if isinstance(t, Iff):
        # (a -> b) * (b -> a)
        return Neg(Oplus(Neg(Oplus(Neg(a), b)), Neg(Oplus(Neg(b), a))))
    raise TypeError(f"not a term: {t!r}")


def children(t):
    if isinstance(t, (Neg, Tau, NMul)):
        return (t.arg,)
    if isinstance(t, BINARY):
        return (t.left, t.right)
    return ()


def variables(t) -> list:
    """Variables in order of first occurrence."""
    seen = {}
    stack = [t]
    out = []
    while stack:
        u = stack.pop()
        if isinstance(u, Var):
            if u.name not in seen:
                seen[u.name] = True
                out.append(u.name)
        else:
            stack.extend(reversed(children(u)))
    return out


def equation_variables(eq: Equation) -> list:
    out = []
    for part in [*(x for h in eq.hypotheses for x in (h.left, h.right)), eq.left, eq.right]:
        for v in variables(part):
            if v not in out:
                out.append(v)
    return out


def has_tau(t) -> bool:
    if isinstance(t, Tau):
        return True
    return any(has_tau(c) for c in children(t))


def equation_has_tau(eq) -> bool:
    return any(has_tau(x) for x in (eq.left, eq.right)) or any(equation_has_tau(h) for h in eq.hypotheses)


def connectives(t) -> int:
    return (0 if isinstance(t, (Var, Zero, One)) else 1) + sum(connectives(c) for c in children(t))


# ---------------------------------------------------------------------------
# evaluation


def eval_term(S, env, t):
    """Evaluate ``t`` in ``S`` (a state algebra or a plain MV-algebra)."""
    A = getattr(S, "algebra", S)
    cache = {}

    def ev(u):
        key = id(u)
        if key in cache:
            return cache[key][1]
        v = _ev(u)
        cache[key] = (u, v)
        return v

    def _ev(u):
        if isinstance(u, Var):
            try:
                return env[u.name]
            except KeyError:
                raise UnboundVariable(u.name) from None
        if isinstance(u, Zero):
            return A.zero
        if isinstance(u, One):
            return A.one
        if isinstance(u, Neg):
            return A.neg(ev(u.arg))
        if isinstance(u, Tau):
            if not hasattr(S, "apply"):
                raise InvalidParameter(f"{A} has no state operator")
            return S.apply(ev(u.arg))
        if isinstance(u, NMul):
            return mv.nmul(A, u.n, ev(u.arg))
        x, y = ev(u.left), ev(u.right)
        if isinstance(u, Oplus):
            return A.oplus(x, y)
        if isinstance(u, Ominus):
            return mv.ominus(A, x, y)
        if isinstance(u, Odot):
            return mv.odot(A, x, y)
        if isinstance(u, Imp):
            return mv.imp(A, x, y)
        if isinstance(u, Join):
            return mv.join(A, x, y)
        if isinstance(u, Meet):
            return mv.meet(A, x, y)
        if isinstance(u, Iff):
            return mv.iff(A, x, y)
        raise TypeError(f"not a term: {u!r}")

    for name, val in env.items():
        if not mv.element_in_domain(A, val):
            raise DomainMismatch(f"value of {name} is not an element of {A}: {val!r}")
    return ev(t)


def holds_at(S, env, eq: Equation) -> bool:
    """Truth of a (quasi-)equation at one assignment."""
    for h in eq.hypotheses:
        if eval_term(S, env, h.lhs) != eval_term(S, env, h.rhs):
            return True
    return eval_term(S, env, eq.lhs) == eval_term(S, env, eq.rhs)


# ---------------------------------------------------------------------------
# doubling translation


def doubled_name(name, i):
    return f"{name}__{i}"


def translate_double(t: Term):
    """The pair ``(t1, t2)`` of tau-free terms over doubled variables with
    ``t((a1,a2),...) = (t1(a1,a2,...), t2(a1,a2,...))`` in a diagonal algebra."""
    t = normalize(t)
    memo = {}

    def tr(u):
        if u in memo:
            return memo[u]
        if isinstance(u, Var):
            r = (Var(doubled_name(u.name, 1)), Var(doubled_name(u.name, 2)))
        elif isinstance(u, Zero):
            r = (u, u)
        elif isinstance(u, Neg):
            a1, a2 = tr(u.arg)
            r = (Neg(a1), Neg(a2))
        elif isinstance(u, Oplus):
            a1, a2 = tr(u.left)
            b1, b2 = tr(u.right)
            r = (Oplus(a1, b1), Oplus(a2, b2))
        elif isinstance(u, Tau):
            a1, _ = tr(u.arg)
            r = (a1, a1)
        else:
            raise TypeError(f"not normalized: {u!r}")
        memo[u] = r
        return r

    return tr(t)


@dataclass(frozen=True)
class DoubledEquation:
    first: Equation
    second: Equation


def translate_equation(eq: Equation) -> DoubledEquation:
    if eq.hypotheses:
        raise InvalidParameter("the doubling translation applies to equations, not quasi-equations")
    l1, l2 = translate_double(eq.lhs)
    r1, r2 = translate_double(eq.rhs)
    return DoubledEquation(Equation(l1, r1), Equation(l2, r2))


# ---------------------------------------------------------------------------
# random terms


def random_term(rng, names=("x", "y", "z"), size=7, tau=False):
    """A random term with exactly ``size`` connectives (core and derived)."""
    ops = [Neg, Oplus, Odot, Imp, Join, Meet, Ominus, Iff]
    if tau:
        ops += [Tau, Tau]

    def build(k):
        if k == 0:
            r = rng.random()
            if r < 0.1:
                return Zero()
            if r < 0.15:
                return One()
            return Var(rng.choice(names))
        op = rng.choice(ops)
        if op in (Neg, Tau):
            return op(build(k - 1))
        left = rng.randint(0, k - 1)
        return op(build(left), build(k - 1 - left))

    return build(size)


# ---------------------------------------------------------------------------
# registry

_FIXED = {
    "mv_axiom": "(x -> y) -> y = (y -> x) -> x",
    "b1": "tau(1) = 1",
    "b2": "tau(x + y) = tau(x) + tau(y - x * y)",
    "b3": "tau(~x) = ~tau(x)",
    "b4": "tau(tau(x) + tau(y)) = tau(x) + tau(y)",
    "c": "tau(x + y) = tau(x) + tau(y)",
    "join_hom": "tau(x \\/ y) = tau(x) \\/ tau(y)",
    "meet_hom": "tau(x /\\ y) = tau(x) /\\ tau(y)",
    "idempotent": "tau(tau(x)) = tau(x)",
    "zero": "tau(0) = 0",
    "lin_tau": "tau(x) \\/ (x -> (tau(y) <-> y)) = 1",
    "loc_tau": "~(tau(x) <-> x) <= tau(x) <-> x",
    "star": "tau(x) \\/ tau(~x) = 1",
    "uniqueness": "z <= x, z <= y, x -> z = y -> z ==> x = y",
}

_PARAMETRIC = ("a_p", "b_p", "c_p", "eps_V")

REGISTRY_NAMES = tuple(_FIXED) + _PARAMETRIC


def _p_family(name, p):
    if not mv.is_prime(p):
        raise InvalidParameter(f"{p!r} is not prime")
    m = p - 1
    if name == "a_p":
        return f"{m}.x <-> ~x = 1"
    if name == "b_p":
        return f"tau({m}.x) <-> tau(~x) = 1"
    return f"(tau({m}.x) <-> tau(~x)) * (tau({m}.x) <-> tau(~x)) <= {m}.x <-> ~x"


def registry_source(name, p=None, eta=None) -> str:
    if name in _FIXED:
        return _FIXED[name]
    if name in ("a_p", "b_p", "c_p"):
        if p is None:
            raise InvalidParameter(f"{name} needs a prime p")
        return _p_family(name, p)
    if name == "eps_V":
        if eta is None:
            raise InvalidParameter("eps_V needs an MV-term eta")
        eta_t = parse_term(eta) if isinstance(eta, str) else eta
        if has_tau(eta_t):
            raise InvalidParameter("eta must be tau-free")
        return str(Equation(Join(eta_t, Iff(Tau(Var("y")), Var("y"))), One()))
    raise UnknownEquation(name)


def registry_get(name, p=None, eta=None) -> Equation:
    return parse_equation(registry_source(name, p=p, eta=eta))
