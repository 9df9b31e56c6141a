"""Exact element domains and the MV-algebra operations on them.

Every carrier here is an interval ``[0, u]`` of a lattice-ordered abelian group
with ``x + y`` truncated at the unit and ``not x = u - x``:

* ``FiniteChain(n)``        integers ``0..n``                      (plain ``int``)
* ``UnitInterval()``        rationals in ``[0, 1]``                (``Fraction``)
* ``Chang(n)``              lexicographic pairs ``(a, b)``         (``Lex``)
* ``Hyper(X)``              ``q + k*eps`` with ``q`` admissible    (``HyperRat``)
* ``InfinitesimalChain()``  ``a + p(eps)``, ``p`` an integer
  polynomial without constant term, ordered by its lowest term   (``LexPoly``)
* ``Product(factors)``      tuples, componentwise

Elements are immutable and hashable.  Algebras do not check membership in
their ``oplus``/``neg`` methods; the ``mv_*`` functions at the bottom do.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatch, InvalidParameter, Unsupported

ONE = Fraction(1)
ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# element types


@dataclass(frozen=True)
class Lex:
    """Element ``(a, b)`` of ``Z x_lex Z``."""

    a: int
    b: int

    def key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"Lex({self.a},{self.b})"


@dataclass(frozen=True)
class HyperRat:
    """``std + inf*eps`` for one fixed positive infinitesimal ``eps``."""

    std: Fraction
    inf: int

    def key(self):
        return (self.std, self.inf)

    def __repr__(self):
        return f"HyperRat({self.std},{self.inf})"


def _trim(coeffs):
    coeffs = tuple(int(c) for c in coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def _poly_sign(coeffs):
    for c in coeffs:
        if c:
            return 1 if c > 0 else -1
    return 0


def lowest_degree(coeffs):
    """Degree (1-based) of the lowest nonzero term, ``None`` for zero."""
    for i, c in enumerate(coeffs):
        if c:
            return i + 1
    return None


@dataclass(frozen=True)
class LexPoly:
    """``a + b[0]*eps + b[1]*eps^2 + ...`` with trailing zeros trimmed."""

    a: int
    b: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "b", _trim(self.b))

    def __repr__(self):
        return f"LexPoly({self.a},{list(self.b)})"


def _poly_add(p, q):
    n = max(len(p), len(q))
    p = p + (0,) * (n - len(p))
    q = q + (0,) * (n - len(q))
    return _trim(x + y for x, y in zip(p, q))


def _poly_cmp(p, q):
    n = max(len(p), len(q))
    p = p + (0,) * (n - len(p))
    q = q + (0,) * (n - len(q))
    return _poly_sign(tuple(x - y for x, y in zip(p, q)))


# ---------------------------------------------------------------------------
# algebra base class


class MVAlgebra:
    """Common interface of all MV-algebra descriptors."""

    finite = False
    is_chain = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def oplus(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        return join(self, x, y) == y

    def elements(self) -> list:
        raise Unsupported(f"{self} has an infinite carrier")

    def size(self) -> int:
        return len(self.elements())

    def sample(self, rng, bound):
        raise Unsupported(f"no sampler for {self}")

    def coerce(self, raw):
        """Convert a parsed literal (see ``descriptors``) into an element."""
        raise Unsupported(f"cannot read elements of {self}")


def _small_or_big(rng, bound):
    if rng.random() < 0.5:
        return rng.randint(-3, 3)
    return rng.randint(-bound, bound)


def _random_rational(rng, allowed=lambda m: True, max_den=24):
    if rng.random() < 0.1:
        return rng.choice((ZERO, ONE))
    while True:
        m = rng.randint(1, max_den)
        if allowed(m):
            break
    return Fraction(rng.randint(0, m), m)


class FiniteChain(MVAlgebra):
    """``S_n = Gamma(Z, n)``."""

    finite = True
    is_chain = True

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise InvalidParameter(f"S_n needs n >= 1, got {n!r}")
        self.n = n

    def __eq__(self, other):
        return type(other) is FiniteChain and other.n == self.n

    def __hash__(self):
        return hash(("S", self.n))

    def __str__(self):
        return f"S({self.n})"

    __repr__ = __str__

    zero = property(lambda self: 0)
    one = property(lambda self: self.n)

    def contains(self, x):
        return type(x) is int and 0 <= x <= self.n

    def oplus(self, x, y):
        return min(x + y, self.n)

    def neg(self, x):
        return self.n - x

    def leq(self, x, y):
        return x <= y

    def elements(self):
        return list(range(self.n + 1))

    def size(self):
        return self.n + 1

    def sample(self, rng, bound):
        return rng.randint(0, self.n)

    def coerce(self, raw):
        if isinstance(raw, Fraction) and raw.denominator == 1:
            raw = int(raw)
        if type(raw) is not int:
            raise DomainMismatch(f"{raw!r} is not an element of {self}")
        return raw


class UnitInterval(MVAlgebra):
    """The standard MV-algebra on the rational points of ``[0, 1]``."""

    is_chain = True

    def __eq__(self, other):
        return type(other) is UnitInterval

    def __hash__(self):
        return hash("I")

    def __str__(self):
        return "I"

    __repr__ = __str__

    zero = property(lambda self: ZERO)
    one = property(lambda self: ONE)

    def contains(self, x):
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool) and 0 <= x <= 1

    def oplus(self, x, y):
        return min(Fraction(x) + y, ONE)

    def neg(self, x):
        return ONE - x

    def leq(self, x, y):
        return x <= y

    def sample(self, rng, bound):
        return _random_rational(rng)

    def coerce(self, raw):
        if isinstance(raw, (int, Fraction)):
            return Fraction(raw)
        raise DomainMismatch(f"{raw!r} is not a rational")


class Chang(MVAlgebra):
    """``C_n = Gamma(Z x_lex Z, (n, 0))``; ``C_1`` is Chang's algebra."""

    is_chain = True

    def __init__(self, n=1):
        if not isinstance(n, int) or n < 1:
            raise InvalidParameter(f"C_n needs n >= 1, got {n!r}")
        self.n = n

    def __eq__(self, other):
        return type(other) is Chang and other.n == self.n

    def __hash__(self):
        return hash(("C", self.n))

    def __str__(self):
        return f"C({self.n})"

    __repr__ = __str__

    zero = property(lambda self: Lex(0, 0))
    one = property(lambda self: Lex(self.n, 0))

    def contains(self, x):
        if type(x) is not Lex or not 0 <= x.a <= self.n:
            return False
        if x.a == 0 and x.b < 0:
            return False
        if x.a == self.n and x.b > 0:
            return False
        return True

    def oplus(self, x, y):
        s = (x.a + y.a, x.b + y.b)
        if s > (self.n, 0):
            return Lex(self.n, 0)
        return Lex(*s)

    def neg(self, x):
        return Lex(self.n - x.a, -x.b)

    def leq(self, x, y):
        return (x.a, x.b) <= (y.a, y.b)

    def sample(self, rng, bound):
        a = rng.randint(0, self.n)
        b = _small_or_big(rng, bound)
        if a == 0:
            b = abs(b)
        elif a == self.n:
            b = -abs(b)
        return Lex(a, b)

    def coerce(self, raw):
        if isinstance(raw, tuple) and len(raw) == 2:
            a, b = (_as_int(v) for v in raw)
            x = Lex(a, b)
            if self.contains(x):
                return x
        raise DomainMismatch(f"{raw!r} is not an element of {self}")

    def in_rad(self, x):
        return x.a == 0

    def in_rad1(self, x):
        return x.a == self.n


def _as_int(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    if type(v) is int:
        return v
    raise DomainMismatch(f"{v!r} is not an integer")


def admissible(q: Fraction, primes) -> bool:
    """Rational ``n/m`` in lowest terms with no prime of ``primes`` dividing ``m``."""
    q = Fraction(q)
    if not 0 <= q <= 1:
        return False
    return all(q.denominator % p for p in primes)


def is_prime(p) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class Hyper(MVAlgebra):
    """``A(X)``: ``q + k*eps`` with ``q`` admissible for the prime set ``X``.

    The carrier is the closed set of all such ``q + k*eps`` (respecting the
    unit-interval constraints); it contains the algebra generated by ``eps``
    and the admissible rationals.
    """

    is_chain = True

    def __init__(self, primes=()):
        primes = frozenset(primes)
        for p in primes:
            if not is_prime(p):
                raise InvalidParameter(f"{p!r} is not prime")
        self.primes = primes

    def __eq__(self, other):
        return type(other) is Hyper and other.primes == self.primes

    def __hash__(self):
        return hash(("A", self.primes))

    def __str__(self):
        return "A({" + ",".join(str(p) for p in sorted(self.primes)) + "})"

    __repr__ = __str__

    zero = property(lambda self: HyperRat(ZERO, 0))
    one = property(lambda self: HyperRat(ONE, 0))

    def contains(self, x):
        if type(x) is not HyperRat or not isinstance(x.std, Fraction) or type(x.inf) is not int:
            return False
        if not admissible(x.std, self.primes):
            return False
        if x.std == 0 and x.inf < 0:
            return False
        if x.std == 1 and x.inf > 0:
            return False
        return True

    def oplus(self, x, y):
        s = x.std + y.std
        m = x.inf + y.inf
        if s < 1:
            return HyperRat(s, m)
        if s > 1:
            return HyperRat(ONE, 0)
        return HyperRat(ONE, min(m, 0))

    def neg(self, x):
        return HyperRat(ONE - x.std, -x.inf)

    def leq(self, x, y):
        return (x.std, x.inf) <= (y.std, y.inf)

    def sample(self, rng, bound):
        std = _random_rational(rng, lambda m: all(m % p for p in self.primes))
        k = _small_or_big(rng, bound)
        if std == 0:
            k = abs(k)
        elif std == 1:
            k = -abs(k)
        return HyperRat(std, k)

    def coerce(self, raw):
        from .descriptors import EpsLiteral

        if isinstance(raw, (int, Fraction)):
            raw = EpsLiteral(Fraction(raw), {})
        if isinstance(raw, EpsLiteral) and set(raw.coeffs) <= {1}:
            x = HyperRat(Fraction(raw.const), int(raw.coeffs.get(1, 0)))
            if self.contains(x):
                return x
        raise DomainMismatch(f"{raw!r} is not an element of {self}")

    def in_rad(self, x):
        return x.std == 0

    def in_rad1(self, x):
        return x.std == 1


class InfinitesimalChain(MVAlgebra):
    """``Gamma(Z x_lex Z^(omega), (1, 0))``: an MV-chain generated by its
    infinitesimals, with infinitesimals of every order ``eps, eps^2, ...``.

    Elements are ``p(eps)`` with ``p >= 0`` (infinitesimals) or
    ``1 + p(eps)`` with ``p <= 0`` (co-infinitesimals).
    """

    is_chain = True

    def __eq__(self, other):
        return type(other) is InfinitesimalChain

    def __hash__(self):
        return hash("Binf")

    def __str__(self):
        return "Binf"

    __repr__ = __str__

    zero = property(lambda self: LexPoly(0, ()))
    one = property(lambda self: LexPoly(1, ()))

    def contains(self, x):
        if type(x) is not LexPoly or x.a not in (0, 1):
            return False
        sign = _poly_sign(x.b)
        return sign >= 0 if x.a == 0 else sign <= 0

    def _cmp(self, x, y):
        if x.a != y.a:
            return -1 if x.a < y.a else 1
        return _poly_cmp(x.b, y.b)

    def oplus(self, x, y):
        s = LexPoly(x.a + y.a, _poly_add(x.b, y.b))
        if self._cmp(s, self.one) > 0:
            return self.one
        return s

    def neg(self, x):
        return LexPoly(1 - x.a, tuple(-c for c in x.b))

    def leq(self, x, y):
        return self._cmp(x, y) <= 0

    def sample(self, rng, bound):
        a = rng.randint(0, 1)
        degree = rng.randint(0, 3)
        b = [_small_or_big(rng, bound) for _ in range(degree)]
        sign = _poly_sign(tuple(b))
        if (a == 0 and sign < 0) or (a == 1 and sign > 0):
            b = [-c for c in b]
        return LexPoly(a, tuple(b))

    def coerce(self, raw):
        from .descriptors import EpsLiteral

        if isinstance(raw, (int, Fraction)):
            raw = EpsLiteral(Fraction(raw), {})
        if isinstance(raw, EpsLiteral) and Fraction(raw.const).denominator == 1:
            deg = max(raw.coeffs, default=0)
            b = tuple(int(raw.coeffs.get(i, 0)) for i in range(1, deg + 1))
            x = LexPoly(int(raw.const), b)
            if self.contains(x):
                return x
        raise DomainMismatch(f"{raw!r} is not an element of {self}")

    def in_rad(self, x):
        return x.a == 0

    def in_rad1(self, x):
        return x.a == 1


class Product(MVAlgebra):
    """Direct product; elements are tuples, operations componentwise."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise InvalidParameter("a product needs at least one factor")
        self.factors = factors
        self.finite = all(f.finite for f in factors)

    def __eq__(self, other):
        return type(other) is Product and other.factors == self.factors

    def __hash__(self):
        return hash(("prod", self.factors))

    def __str__(self):
        return "prod(" + ",".join(str(f) for f in self.factors) + ")"

    __repr__ = __str__

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def contains(self, x):
        return (
            type(x) is tuple
            and len(x) == len(self.factors)
            and all(f.contains(v) for f, v in zip(self.factors, x))
        )

    def oplus(self, x, y):
        return tuple(f.oplus(u, v) for f, u, v in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(u) for f, u in zip(self.factors, x))

    def leq(self, x, y):
        return all(f.leq(u, v) for f, u, v in zip(self.factors, x, y))

    def elements(self):
        return list(itertools.product(*(f.elements() for f in self.factors)))

    def size(self):
        return math.prod(f.size() for f in self.factors)

    def sample(self, rng, bound):
        return tuple(f.sample(rng, bound) for f in self.factors)

    def coerce(self, raw):
        if isinstance(raw, tuple) and len(raw) == len(self.factors):
            return tuple(f.coerce(v) for f, v in zip(self.factors, raw))
        raise DomainMismatch(f"{raw!r} is not an element of {self}")


# ---------------------------------------------------------------------------
# derived operations (no membership checks)


def imp(A, x, y):
    return A.oplus(A.neg(x), y)


def odot(A, x, y):
    return A.neg(A.oplus(A.neg(x), A.neg(y)))


def ominus(A, x, y):
    return A.neg(A.oplus(A.neg(x), y))


def join(A, x, y):
    return imp(A, imp(A, x, y), y)


def meet(A, x, y):
    return odot(A, x, imp(A, x, y))


def iff(A, x, y):
    return odot(A, imp(A, x, y), imp(A, y, x))


def nmul(A, n, x):
    acc = A.zero
    for _ in range(n):
        acc = A.oplus(acc, x)
    return acc


def power(A, x, n):
    acc = A.one
    for _ in range(n):
        acc = odot(A, acc, x)
    return acc


DERIVED = {
    "odot": odot,
    "ominus": ominus,
    "imp": imp,
    "join": join,
    "meet": meet,
    "iff": iff,
}


# ---------------------------------------------------------------------------
# checked public operations


def element_in_domain(dom: MVAlgebra, x) -> bool:
    try:
        return bool(dom.contains(x))
    except Exception:
        return False


def _check(dom, *xs):
    for x in xs:
        if not element_in_domain(dom, x):
            raise DomainMismatch(f"{x!r} is not an element of {dom}")


def mv_oplus(dom, x, y):
    _check(dom, x, y)
    return dom.oplus(x, y)


def mv_neg(dom, x):
    _check(dom, x)
    return dom.neg(x)


def mv_derived(dom, kind, x, y=None, n=None):
    """Derived operation ``kind`` in ``odot, ominus, imp, join, meet, iff, nmul``.

    For ``nmul`` the multiplier is ``n`` (``y`` is ignored).
    """
    if kind == "nmul":
        _check(dom, x)
        if not isinstance(n, int) or n < 0:
            raise InvalidParameter(f"nmul needs n >= 0, got {n!r}")
        return nmul(dom, n, x)
    if kind not in DERIVED:
        raise InvalidParameter(f"unknown derived operation {kind!r}")
    _check(dom, x, y)
    return DERIVED[kind](dom, x, y)


def mv_leq(dom, x, y) -> bool:
    _check(dom, x, y)
    return dom.leq(x, y)


# ---------------------------------------------------------------------------
# text rendering of elements (used in reports)


def _frac(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _eps_terms(coeffs):
    out = []
    for deg, c in enumerate(coeffs, start=1):
        if not c:
            continue
        sym = "e" if deg == 1 else f"e^{deg}"
        mag = "" if abs(c) == 1 else str(abs(c))
        out.append(("+" if c > 0 else "-") + mag + sym)
    return out


def _with_eps(const, coeffs):
    terms = _eps_terms(coeffs)
    if const == 0 and terms:
        head = terms[0].lstrip("+")
        return head + "".join(terms[1:])
    return _frac(const) + "".join(terms)


def fmt(x) -> str:
    """Canonical text for an element; readable back by ``descriptors.parse_element``."""
    if isinstance(x, bool):
        raise DomainMismatch(f"{x!r} is not an element")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return _frac(x)
    if isinstance(x, Lex):
        return f"({x.a},{x.b})"
    if isinstance(x, HyperRat):
        return _with_eps(x.std, (x.inf,))
    if isinstance(x, LexPoly):
        return _with_eps(x.a, x.b)
    if isinstance(x, tuple):
        return "(" + ",".join(fmt(v) for v in x) + ")"
    return repr(x)
