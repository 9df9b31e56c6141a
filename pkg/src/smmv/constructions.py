"""Building algebras: chains, Chang-style chains, products, diagonal and
skew-diagonal state algebras, hyper-rationals, closures, quotients and the
named fixtures."""

from __future__ import annotations

import functools
from collections import deque

from . import filters as flt
from . import mv
from .errors import (
    ClosureExceeded,
    DomainMismatch,
    InvalidParameter,
    NotAChain,
    NotAFilter,
    NotASubalgebra,
    Unsupported,
    UnknownFixture,
)
from .finite import view
from .states import (
    Diagonal,
    Identity,
    ProductOfStates,
    QuotientState,
    RadicalCollapse,
    SkewDiagonal,
    SMMVAlgebra,
)


class ExplicitFinite(mv.MVAlgebra):
    """A finite algebra given by its carrier and operation tables."""

    finite = True

    def __init__(self, carrier, oplus_table, neg_table, zero, one, name=None):
        self.carrier = tuple(carrier)
        self._oplus = dict(oplus_table)
        self._neg = dict(neg_table)
        self._zero, self._one = zero, one
        self.name = name
        members = set(self.carrier)
        for x in self.carrier:
            if self._neg.get(x) not in members:
                raise InvalidParameter(f"negation table is not closed at {x!r}")
            for y in self.carrier:
                if self._oplus.get((x, y)) not in members:
                    raise InvalidParameter(f"oplus table is not closed at {x!r}, {y!r}")
        self.is_chain = all(self.leq(x, y) or self.leq(y, x) for x in self.carrier for y in self.carrier)

    @classmethod
    def restrict(cls, A, carrier, name=None):
        """The subalgebra of ``A`` on ``carrier`` (which must be closed)."""
        carrier = [x for x in A.elements() if x in set(carrier)] if A.finite else list(carrier)
        members = set(carrier)
        oplus = {}
        for x in carrier:
            for y in carrier:
                s = A.oplus(x, y)
                if s not in members:
                    raise NotASubalgebra(f"{carrier} is not closed under oplus")
                oplus[(x, y)] = s
        neg = {x: A.neg(x) for x in carrier}
        out = cls(carrier, oplus, neg, A.zero, A.one, name=name)
        out.ambient = A
        return out

    def __eq__(self, other):
        return (
            type(other) is ExplicitFinite
            and other.carrier == self.carrier
            and other._oplus == self._oplus
            and other._neg == self._neg
        )

    def __hash__(self):
        return hash(("explicit", self.carrier))

    def __str__(self):
        if self.name:
            return self.name
        return "{" + ",".join(mv.fmt(x) for x in self.carrier) + "}"

    __repr__ = __str__

    zero = property(lambda self: self._zero)
    one = property(lambda self: self._one)

    def contains(self, x):
        try:
            return x in self._neg
        except TypeError:
            return False

    def oplus(self, x, y):
        return self._oplus[(x, y)]

    def neg(self, x):
        return self._neg[x]

    def elements(self):
        return list(self.carrier)

    def size(self):
        return len(self.carrier)

    def sample(self, rng, bound):
        return rng.choice(self.carrier)

    def coerce(self, raw):
        amb = getattr(self, "ambient", None)
        x = amb.coerce(raw) if amb is not None else raw
        if self.contains(x):
            return x
        raise DomainMismatch(f"{raw!r} is not an element of {self}")


class Subalgebra(mv.MVAlgebra):
    """A subalgebra of ``base`` cut out by a membership predicate."""

    def __init__(self, base, predicate, name, sampler, named=None, chain=False):
        self.base = base
        self.predicate = predicate
        self.name = name
        self._sampler = sampler
        self._named = named or {}
        self.is_chain = chain
        self.finite = False

    def __eq__(self, other):
        return type(other) is Subalgebra and other.name == self.name

    def __hash__(self):
        return hash(("sub", self.name))

    def __str__(self):
        return self.name

    __repr__ = __str__

    zero = property(lambda self: self.base.zero)
    one = property(lambda self: self.base.one)

    def contains(self, x):
        return self.base.contains(x) and bool(self.predicate(x))

    def oplus(self, x, y):
        return self.base.oplus(x, y)

    def neg(self, x):
        return self.base.neg(x)

    def leq(self, x, y):
        return self.base.leq(x, y)

    def sample(self, rng, bound):
        return self._sampler(rng, bound)

    def coerce(self, raw):
        x = self.base.coerce(raw)
        if not self.contains(x):
            raise DomainMismatch(f"{raw!r} is not an element of {self}")
        return x

    def named_contains(self, kind, x):
        if kind in self._named:
            return self._named[kind](x)
        raise Unsupported(f"{kind} is not known on {self}")


class Quotient(mv.MVAlgebra):
    """``base / F`` realised as a concrete algebra ``inner``.

    ``project`` maps base elements to ``inner``; ``section`` picks a preimage.
    """

    def __init__(self, base, filter_handle, inner, project, section):
        self.base = base
        self.filter = filter_handle
        self.inner = inner
        self.project = project
        self.section = section
        self.finite = inner.finite
        self.is_chain = inner.is_chain

    def __eq__(self, other):
        return type(other) is Quotient and other.base == self.base and other.filter == self.filter

    def __hash__(self):
        return hash(("quot", self.base, str(self.filter)))

    def __str__(self):
        return f"{self.base}/{self.filter}"

    __repr__ = __str__

    zero = property(lambda self: self.inner.zero)
    one = property(lambda self: self.inner.one)

    def contains(self, x):
        return self.inner.contains(x)

    def oplus(self, x, y):
        return self.inner.oplus(x, y)

    def neg(self, x):
        return self.inner.neg(x)

    def leq(self, x, y):
        return self.inner.leq(x, y)

    def elements(self):
        return self.inner.elements()

    def size(self):
        return self.inner.size()

    def sample(self, rng, bound):
        return self.project(self.base.sample(rng, bound))

    def coerce(self, raw):
        return self.inner.coerce(raw)

    def in_rad(self, x):
        return self.inner.in_rad(x)

    def in_rad1(self, x):
        return self.inner.in_rad1(x)


# ---------------------------------------------------------------------------
# constructors


def finite_chain(n):
    return mv.FiniteChain(n)


def chang_algebra(n=1):
    return mv.Chang(n)


def unit_interval():
    return mv.UnitInterval()


def hyper_algebra(primes=()):
    return mv.Hyper(primes)


def product(factors):
    factors = list(factors)
    if not factors:
        raise InvalidParameter("product of no factors")
    if len(factors) == 1:
        return factors[0]
    return mv.Product(factors)


def diagonalize(A) -> SMMVAlgebra:
    return SMMVAlgebra(mv.Product([A, A]), Diagonal(), name=f"D({A})")


def _canonical_embedding(B, C):
    if B == C:
        return lambda b: b
    if isinstance(B, mv.FiniteChain) and isinstance(C, mv.FiniteChain) and C.n % B.n == 0:
        k = C.n // B.n
        return lambda b: b * k
    if isinstance(B, mv.FiniteChain) and isinstance(C, mv.Chang) and C.n % B.n == 0:
        k = C.n // B.n
        return lambda b: mv.Lex(b * k, 0)
    if isinstance(B, mv.FiniteChain) and isinstance(C, (mv.UnitInterval,)):
        return lambda b: mv.Fraction(b, B.n)
    raise NotASubalgebra(f"no canonical embedding of {B} into {C}; supply one")


def diagonal_state(A):
    """``tau(b, c) = (b, h(b))`` on a product ``B x C`` of two chains."""
    if not isinstance(A, mv.Product) or len(A.factors) != 2:
        raise InvalidParameter(f"{A} is not a product of two algebras")
    B, C = A.factors
    return Diagonal(None if B == C else _canonical_embedding(B, C))


def _check_embedding(B, C, h):
    """Verify ``h`` is an injective homomorphism (exhaustively on finite B)."""
    if not B.finite:
        return
    els = B.elements()
    imgs = [h(b) for b in els]
    if not all(C.contains(v) for v in imgs) or len(set(imgs)) != len(imgs):
        raise NotASubalgebra(f"map {B} -> {C} is not injective into the carrier")
    if h(B.zero) != C.zero:
        raise NotASubalgebra("embedding does not preserve 0")
    for x in els:
        if h(B.neg(x)) != C.neg(h(x)):
            raise NotASubalgebra("embedding does not preserve negation")
        for y in els:
            if h(B.oplus(x, y)) != C.oplus(h(x), h(y)):
                raise NotASubalgebra("embedding does not preserve oplus")


def skew_diagonal(B, C, F, embedding=None) -> SMMVAlgebra:
    """``B x C/F`` with ``tau(b, q) = (b, [h(b)])``."""
    for X in (B, C):
        if not getattr(X, "is_chain", False):
            raise NotAChain(f"{X} is not a chain")
    h = embedding if embedding is not None else _canonical_embedding(B, C)
    _check_embedding(B, C, h)
    Q, proj = quotient_by_filter(C, F)
    tau = SkewDiagonal(h, proj) if Q is not C else Diagonal(None if B == C else h)
    return SMMVAlgebra(mv.Product([B, Q]), tau, name=f"skew({B},{C},{flt.as_handle(F)})")


def subalgebra_closure(A, generators, cap=10000) -> ExplicitFinite:
    """Smallest subset containing ``generators`` and 0, closed under oplus, neg."""
    for g in generators:
        if not mv.element_in_domain(A, g):
            raise DomainMismatch(f"{g!r} is not an element of {A}")
    seen = []
    members = set()
    queue = deque()

    def add(x):
        if x not in members:
            members.add(x)
            seen.append(x)
            queue.append(x)
            if len(members) > cap:
                raise ClosureExceeded(cap)

    add(A.zero)
    for g in generators:
        add(g)
    while queue:
        x = queue.popleft()
        add(A.neg(x))
        for y in list(seen):
            add(A.oplus(x, y))
    if A.finite:
        order = {x: i for i, x in enumerate(A.elements())}
        seen.sort(key=order.get)
    elif getattr(A, "is_chain", False):
        seen.sort(key=functools.cmp_to_key(lambda u, v: 0 if u == v else (-1 if A.leq(u, v) else 1)))
    return ExplicitFinite.restrict(A, seen)


# ---------------------------------------------------------------------------
# quotients


def _finite_quotient(A, F):
    V = view(A)
    if isinstance(F, flt.ExplicitSet):
        members = F.elements
        if any(not A.contains(x) for x in members):
            raise NotAFilter("filter contains non-elements")
        idxset = frozenset(V.idx[x] for x in members)
        if not V.is_filter(idxset):
            raise NotAFilter(f"{F} is not a filter of {A}")
    else:
        idxset = frozenset(i for i, x in enumerate(V.els) if flt.filter_contains(A, F, x))
        if not V.is_filter(idxset):
            raise NotAFilter(f"{F} is not a filter of {A}")
    rep = {}
    reps = []
    for i in range(V.n):
        for r in reps:
            if V.iff(i, r) in idxset:
                rep[i] = r
                break
        else:
            rep[i] = i
            reps.append(i)
    carrier = [V.els[r] for r in reps]
    oplus = {(V.els[a], V.els[b]): V.els[rep[V.add[a][b]]] for a in reps for b in reps}
    neg = {V.els[a]: V.els[rep[V.neg[a]]] for a in reps}
    inner = ExplicitFinite(carrier, oplus, neg, V.els[rep[V.zero]], V.els[rep[V.one]])
    inner.ambient = A

    def project(x):
        return V.els[rep[V.idx[x]]]

    return inner, project, lambda q: q


def _symbolic_quotient(A, F):
    if flt.is_trivial_handle(A, F):
        return A, (lambda x: x), (lambda q: q)
    if flt.is_improper_handle(A, F):
        one = A.one
        inner = ExplicitFinite([one], {(one, one): one}, {one: one}, one, one, name="1")
        return inner, (lambda x: one), (lambda q: one)
    if isinstance(F, flt.Named) and F.kind == "Rad1":
        if isinstance(A, mv.Chang):
            S = mv.FiniteChain(A.n)
            return S, (lambda x: x.a), (lambda q: mv.Lex(q, 0))
        if isinstance(A, mv.InfinitesimalChain):
            S = mv.FiniteChain(1)
            return S, (lambda x: x.a), (lambda q: mv.LexPoly(q, ()))
        if isinstance(A, mv.Hyper):
            return _StdQuotient(A), (lambda x: mv.HyperRat(x.std, 0)), (lambda q: q)
    if isinstance(A, mv.Product):
        parts = F.parts if isinstance(F, flt.ProductFilter) else (F,) * len(A.factors)
        if isinstance(F, flt.Named):
            parts = (F,) * len(A.factors)
        if len(parts) == len(A.factors):
            qs = [quotient_by_filter(f, p) for f, p in zip(A.factors, parts)]
            inners = [q for q, _ in qs]
            projs = [p for _, p in qs]
            secs = [getattr(q, "section", lambda v: v) for q in inners]
            inner = mv.Product([getattr(q, "inner", q) for q in inners])
            return (
                inner,
                lambda x: tuple(p(v) for p, v in zip(projs, x)),
                lambda q: tuple(s(v) for s, v in zip(secs, q)),
            )
    raise Unsupported(f"quotient of {A} by {F} is not available")


class _StdQuotient(mv.Hyper):
    """``A(X)/Rad1``: the admissible rationals, kept in hyper-rational form."""

    def __init__(self, A):
        super().__init__(A.primes)

    def contains(self, x):
        return super().contains(x) and x.inf == 0

    def __str__(self):
        return f"{mv.Hyper.__str__(self)}/Rad1"


def quotient_by_filter(A, F):
    """``(A/F, projection)``; the result is a ``Quotient`` wrapper unless ``F``
    is trivial, in which case ``A`` itself comes back."""
    F = flt.as_handle(F)
    if isinstance(F, flt.Named) and F.kind == "Rad":
        raise NotAFilter("Rad is an ideal, not a filter")
    if A.finite:
        if flt.is_trivial_handle(A, F) and not isinstance(F, flt.ExplicitSet):
            return A, (lambda x: x)
        inner, project, section = _finite_quotient(A, F)
        if inner.size() == A.size():
            return A, (lambda x: x)
        return Quotient(A, F, inner, project, section), project
    if isinstance(F, flt.ExplicitSet):
        raise Unsupported(f"explicit filters on the infinite algebra {A}")
    if flt.is_trivial_handle(A, F):
        return A, (lambda x: x)
    inner, project, section = _symbolic_quotient(A, F)
    return Quotient(A, F, inner, project, section), project


def quotient_smmv(S, F) -> SMMVAlgebra:
    """``(A/F, tau_F)`` for a tau-filter ``F``."""
    Q, _ = quotient_by_filter(S.algebra, F)
    if Q is S.algebra:
        return S
    return SMMVAlgebra(Q, QuotientState(S, Q), name=f"{S}/{flt.as_handle(F)}", assumptions=S.assumptions)


# ---------------------------------------------------------------------------
# named fixtures

C1 = mv.Chang(1)
_C1C1 = mv.Product([C1, C1])


def _same_side(p):
    return (p[0].a == 0) == (p[1].a == 0)


def _sample_same_side(rng, bound):
    side = rng.randint(0, 1)
    return tuple(_sample_c1(rng, bound, side) for _ in range(2))


def _sample_c1(rng, bound, side):
    b = rng.randint(-3, 3) if rng.random() < 0.5 else rng.randint(-bound, bound)
    return mv.Lex(side, abs(b) if side == 0 else -abs(b))


def _paired_carrier(name):
    return Subalgebra(
        _C1C1,
        _same_side,
        name,
        _sample_same_side,
        named={
            "Rad1": lambda p: p[0].a == 1 and p[1].a == 1,
            "Rad": lambda p: p[0].a == 0 and p[1].a == 0,
        },
    )


INFINITESIMAL_MODEL = (
    "the algebra generated by all infinitesimals of an ultrapower is modelled by "
    "Gamma(Z x_lex Z^omega, (1,0)), a chain with infinitesimals eps, eps^2, ... of every order"
)

FIXTURES = ("Ex41", "T34D", "T34B")


def fixture(name) -> SMMVAlgebra:
    if name == "Ex41":
        return SMMVAlgebra(
            _paired_carrier("Ex41"),
            Diagonal(),
            name="Ex41",
            assumptions=("carrier (Rad x Rad) u (Rad1 x Rad1) of C(1) x C(1)",),
        )
    if name == "T34D":
        return SMMVAlgebra(
            _paired_carrier("T34D"),
            ProductOfStates((Identity(), RadicalCollapse())),
            name="T34D",
            assumptions=("carrier (Rad x Rad) u (Rad1 x Rad1) of C(1) x C(1)",),
        )
    if name == "T34B":
        return SMMVAlgebra(mv.InfinitesimalChain(), RadicalCollapse(), name="T34B", assumptions=(INFINITESIMAL_MODEL,))
    if name == "T34B-id":
        return SMMVAlgebra(mv.InfinitesimalChain(), Identity(), name="T34B-id", assumptions=(INFINITESIMAL_MODEL,))
    raise UnknownFixture(name)


def find_isomorphism(A, B):
    """An isomorphism between finite algebras as a dict, or ``None``."""
    VA, VB = view(A), view(B)
    if VA.n != VB.n:
        return None
    h = [None] * VA.n
    used = [False] * VB.n

    def ok(i):
        for j in range(VA.n):
            if h[j] is None:
                continue
            s = VA.add[i][j]
            if h[s] is not None and h[s] != VB.add[h[i]][h[j]]:
                return False
            s = VA.neg[i]
            if h[s] is not None and h[s] != VB.neg[h[i]]:
                return False
        return True

    def complete():
        return all(h[VA.neg[i]] == VB.neg[h[i]] for i in range(VA.n)) and all(
            h[VA.add[i][j]] == VB.add[h[i]][h[j]] for i in range(VA.n) for j in range(VA.n)
        )

    def search(i):
        if i == VA.n:
            return complete()
        for v in range(VB.n):
            if used[v]:
                continue
            h[i], used[v] = v, True
            if ok(i) and search(i + 1):
                return True
            h[i], used[v] = None, False
        return False

    if not search(0):
        return None
    return {VA.els[i]: VB.els[h[i]] for i in range(VA.n)}
