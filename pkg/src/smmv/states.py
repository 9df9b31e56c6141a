"""State operators: axioms, image and kernel, endomorphism enumeration,
the disjunction property, element decomposition and monads."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from . import mv
from .errors import (
    DomainMismatch,
    InvalidParameter,
    NotComparable,
    NotInImage,
    ScopeMismatch,
    TooLarge,
    Unsupported,
)
from .finite import view


# ---------------------------------------------------------------------------
# operators


class StateOperator:
    kind = "state"

    def apply(self, A, x):
        raise NotImplementedError

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class Identity(StateOperator):
    kind = "id"

    def apply(self, A, x):
        return x


@dataclass(frozen=True)
class Diagonal(StateOperator):
    """``(b, c) -> (b, h(b))``; ``h`` defaults to the identity."""

    embedding: Callable | None = None
    kind = "diag"

    def apply(self, A, x):
        b = x[0]
        return (b, b if self.embedding is None else self.embedding(b))


@dataclass(frozen=True)
class SkewDiagonal(StateOperator):
    """``(b, q) -> (b, pi(h(b)))`` on ``B x C/phi``."""

    embedding: Callable
    projection: Callable
    kind = "skew"

    def apply(self, A, x):
        b = x[0]
        return (b, self.projection(self.embedding(b)))


@dataclass(frozen=True)
class StandardPart(StateOperator):
    kind = "std"

    def apply(self, A, x):
        if not isinstance(x, mv.HyperRat):
            raise DomainMismatch(f"standard part needs a hyper-rational, got {x!r}")
        return mv.HyperRat(x.std, 0)


@dataclass(frozen=True)
class RadicalCollapse(StateOperator):
    """0 on infinitesimals, 1 elsewhere."""

    kind = "rad"

    def apply(self, A, x):
        if not hasattr(A, "in_rad"):
            raise Unsupported(f"radical collapse is not defined on {A}")
        return A.zero if A.in_rad(x) else A.one


@dataclass(frozen=True)
class Table(StateOperator):
    items: tuple
    kind = "table"

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d.items()))

    @property
    def mapping(self):
        return dict(self.items)

    def apply(self, A, x):
        try:
            return self.mapping[x]
        except KeyError:
            raise DomainMismatch(f"{x!r} is not in the table") from None

    def __str__(self):
        return "{" + ", ".join(f"{mv.fmt(a)}->{mv.fmt(b)}" for a, b in self.items) + "}"


def factor_algebras(A):
    base = getattr(A, "base", A) if not isinstance(A, mv.Product) else A
    if isinstance(base, mv.Product):
        return base.factors
    raise Unsupported(f"{A} is not a product")


@dataclass(frozen=True)
class ProductOfStates(StateOperator):
    parts: tuple
    kind = "product"

    def apply(self, A, x):
        return tuple(t.apply(f, v) for t, f, v in zip(self.parts, factor_algebras(A), x))

    def __str__(self):
        return "x".join(str(t) for t in self.parts)


@dataclass(frozen=True, eq=False)
class QuotientState(StateOperator):
    """State induced on ``A/F`` by a state of ``A`` leaving ``F`` invariant."""

    base: object  # SMMVAlgebra
    quotient: object  # constructions.Quotient
    kind = "quotient"

    def apply(self, A, q):
        return self.quotient.project(self.base.apply(self.quotient.section(q)))


@dataclass(frozen=True, eq=False)
class SMMVAlgebra:
    algebra: object
    tau: StateOperator
    name: str | None = None
    assumptions: tuple = ()

    def apply(self, x):
        return self.tau.apply(self.algebra, x)

    @property
    def finite(self):
        return self.algebra.finite

    def contains(self, x):
        return mv.element_in_domain(self.algebra, x)

    def __str__(self):
        return self.name or f"({self.algebra}, {self.tau})"


def apply_state(S, x):
    if not S.contains(x):
        raise DomainMismatch(f"{x!r} is not an element of {S}")
    return S.apply(x)


# ---------------------------------------------------------------------------
# scopes and verdicts


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Sampled:
    seed: int = 0
    count: int = 10000
    bound: int = 10**6

    def __post_init__(self):
        if self.count < 1 or self.bound < 1:
            raise InvalidParameter("sample count and bound must be positive")


EXHAUSTIVE = Exhaustive()


@dataclass
class Verdict:
    status: str  # holds | fails | sampled-pass
    witness: dict | None = None
    count: int = 0
    seed: int | None = None
    symbolic: bool = False
    note: str = ""

    @property
    def ok(self):
        return self.status != "fails"

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = {k: mv.fmt(v) if not isinstance(v, str) else v for k, v in self.witness.items()}
        if self.status == "sampled-pass":
            out["count"] = self.count
            out["seed"] = self.seed
        if self.symbolic:
            out["symbolic"] = True
        if self.note:
            out["note"] = self.note
        return out


def holds(note="", symbolic=False):
    return Verdict("holds", note=note, symbolic=symbolic)


def fails(witness, note="", symbolic=False):
    return Verdict("fails", witness=witness, note=note, symbolic=symbolic)


def _resolve_scope(S_or_A, scope):
    A = getattr(S_or_A, "algebra", S_or_A)
    if scope is None:
        scope = EXHAUSTIVE if A.finite else Sampled()
    if isinstance(scope, Exhaustive) and not A.finite:
        raise ScopeMismatch(f"{A} is infinite; exhaustive checking is impossible")
    return scope


def sample_elements(A, scope, arity):
    """Deterministic stream of ``arity``-tuples of elements."""
    rng = random.Random(scope.seed)
    for _ in range(scope.count):
        yield tuple(A.sample(rng, scope.bound) for _ in range(arity))


def check_property(S_or_A, scope, arity, pred, names=("x", "y", "z")):
    """Run ``pred`` over all (or sampled) ``arity``-tuples of elements."""
    A = getattr(S_or_A, "algebra", S_or_A)
    scope = _resolve_scope(S_or_A, scope)
    if isinstance(scope, Exhaustive):
        els = A.elements()
        for tup in itertools.product(els, repeat=arity):
            if not pred(*tup):
                return fails(dict(zip(names, tup)))
        return holds()
    for tup in sample_elements(A, scope, arity):
        if not pred(*tup):
            return fails(dict(zip(names, tup)))
    return Verdict("sampled-pass", count=scope.count, seed=scope.seed)


# ---------------------------------------------------------------------------
# axioms


AXIOMS = ("b1", "b2", "b3", "b4", "c")


@dataclass
class AxiomReport:
    verdicts: dict = field(default_factory=dict)

    @property
    def all_hold(self):
        return all(v.ok for v in self.verdicts.values())

    @property
    def smv(self):
        return all(self.verdicts[a].ok for a in ("b1", "b2", "b3", "b4"))

    def to_json(self):
        return {k: v.to_json() for k, v in self.verdicts.items()}


def _axiom_predicates(S):
    A, t = S.algebra, S.apply

    def b2(x, y):
        return t(A.oplus(x, y)) == A.oplus(t(x), t(mv.ominus(A, y, mv.odot(A, x, y))))

    def b3(x, y):
        return t(A.neg(x)) == A.neg(t(x))

    def b4(x, y):
        s = A.oplus(t(x), t(y))
        return t(s) == s

    def c(x, y):
        return t(A.oplus(x, y)) == A.oplus(t(x), t(y))

    return {"b2": b2, "b3": b3, "b4": b4, "c": c}


def _finite_axioms(S):
    V = view(S.algebra)
    T = V.tau_table(S)
    add, neg, n = V.add, V.neg, V.n
    out = {"b1": holds() if T[V.one] == V.one else fails({"x": S.algebra.one})}
    wit = {}
    for i in range(n):
        if "b3" not in wit and T[neg[i]] != neg[T[i]]:
            wit["b3"] = (i, i)
        for j in range(n):
            s = add[i][j]
            if "b2" not in wit:
                rhs = add[T[i]][T[neg[add[neg[j]][V.odot(i, j)]]]]
                if T[s] != rhs:
                    wit["b2"] = (i, j)
            if "b4" not in wit:
                u = add[T[i]][T[j]]
                if T[u] != u:
                    wit["b4"] = (i, j)
            if "c" not in wit and T[s] != add[T[i]][T[j]]:
                wit["c"] = (i, j)
    for ax in ("b2", "b3", "b4", "c"):
        if ax in wit:
            i, j = wit[ax]
            w = {"x": V.els[i]} if ax == "b3" else {"x": V.els[i], "y": V.els[j]}
            out[ax] = fails(w)
        else:
            out[ax] = holds()
    return out


def check_state_axioms(S, scope=None) -> AxiomReport:
    scope = _resolve_scope(S, scope)
    if isinstance(scope, Exhaustive):
        return AxiomReport({k: _finite_axioms(S)[k] for k in AXIOMS})
    A = S.algebra
    rep = {"b1": holds() if S.apply(A.one) == A.one else fails({"x": A.one})}
    preds = _axiom_predicates(S)
    for ax in ("b2", "b3", "b4", "c"):
        v = check_property(S, scope, 2, preds[ax])
        if ax == "b3" and v.witness:
            v.witness = {"x": v.witness["x"]}
        rep[ax] = v
    return AxiomReport(rep)


def check_state_consequences(S, scope=None) -> dict:
    """The elementary consequences of the state axioms, each as a verdict."""
    A, t = S.algebra, S.apply
    scope = _resolve_scope(S, scope)
    out = {"zero": holds() if t(A.zero) == A.zero else fails({"x": A.zero})}

    def one_b(x, z):
        # pairs with x (.) y = 0 are exactly y <= not x; y = z (.) not x covers them
        y = mv.odot(A, z, A.neg(x)) if not isinstance(scope, Exhaustive) else z
        if mv.odot(A, x, y) != A.zero:
            return True
        return mv.odot(A, t(x), t(y)) == A.zero and t(A.oplus(x, y)) == A.oplus(t(x), t(y))

    out["orthogonal_additivity"] = check_property(S, scope, 2, one_b)
    out["idempotent"] = check_property(S, scope, 1, lambda x: t(t(x)) == t(x))

    def one_d(x, y):
        u, v = t(x), t(y)
        s, m = A.oplus(u, v), A.neg(u)
        return t(s) == s and t(m) == m and t(u) == u

    out["image_closed"] = check_property(S, scope, 2, one_d)
    out["lattice_hom"] = check_property(
        S,
        scope,
        2,
        lambda x, y: t(mv.join(A, x, y)) == mv.join(A, t(x), t(y))
        and t(mv.meet(A, x, y)) == mv.meet(A, t(x), t(y)),
    )
    return out


def is_faithful(S, scope=None) -> Verdict:
    A = S.algebra
    return check_property(S, scope, 1, lambda a: S.apply(a) != A.one or a == A.one, names=("a",))


# ---------------------------------------------------------------------------
# image and kernel


@dataclass
class SubCarrier:
    """A subset of a carrier: explicit when finite, else a predicate plus text."""

    description: str
    elements: frozenset | None = None
    predicate: Callable | None = None
    symbolic: bool = False

    def __contains__(self, x):
        if self.elements is not None:
            return x in self.elements
        return bool(self.predicate(x))

    def is_trivial(self, one):
        if self.elements is not None:
            return self.elements == {one}
        return self.description in ("{1}",)

    def __str__(self):
        return self.description


def _explicit(els):
    els = frozenset(els)
    return SubCarrier("{" + ", ".join(sorted(mv.fmt(x) for x in els)) + "}", elements=els)


def image_and_kernel(S):
    """``(tau(A), F_tau(A))`` as sub-carriers."""
    A, tau = S.algebra, S.tau
    if A.finite:
        els = A.elements()
        image = _explicit(S.apply(x) for x in els)
        kernel = _explicit(x for x in els if S.apply(x) == A.one)
        return image, kernel
    if isinstance(tau, Identity):
        return (
            SubCarrier(f"{A}", predicate=lambda x: True, symbolic=True),
            SubCarrier("{1}", predicate=lambda x: x == A.one, symbolic=True),
        )
    if isinstance(tau, RadicalCollapse):
        return (
            SubCarrier("{0,1}", predicate=lambda x: x in (A.zero, A.one), symbolic=True),
            SubCarrier("Rad1", predicate=lambda x: not A.in_rad(x), symbolic=True),
        )
    if isinstance(tau, StandardPart):
        return (
            SubCarrier("admissible rationals", predicate=lambda x: x.inf == 0, symbolic=True),
            SubCarrier("Rad1", predicate=lambda x: x.std == 1, symbolic=True),
        )
    if isinstance(tau, Diagonal) and S.name == "Ex41":
        return (
            SubCarrier("{(x,x)}", predicate=lambda p: p[0] == p[1], symbolic=True),
            SubCarrier("{1}xRad1(C(1))", predicate=lambda p: p[0] == mv.Lex(1, 0), symbolic=True),
        )
    if isinstance(tau, Diagonal):
        h = tau.embedding or (lambda b: b)
        top = A.factors[0].one
        return (
            SubCarrier("{(b,h(b))}", predicate=lambda p: p[1] == h(p[0]), symbolic=True),
            SubCarrier("{1}xC", predicate=lambda p: p[0] == top, symbolic=True),
        )
    if isinstance(tau, ProductOfStates) and S.name == "T34D":
        one = mv.Lex(1, 0)
        return (
            SubCarrier(
                "{(x,0): x in Rad} u {(y,1): y in Rad1}",
                predicate=lambda p: p[1] in (mv.Lex(0, 0), one),
                symbolic=True,
            ),
            SubCarrier("{1}xRad1(C(1))", predicate=lambda p: p[0] == one, symbolic=True),
        )
    raise Unsupported(f"no image/kernel description for {S}")


# ---------------------------------------------------------------------------
# idempotent endomorphisms


def enumerate_idempotent_endos(A, bound=36) -> list:
    """All idempotent endomorphisms of a finite algebra, as ``Table`` operators,
    sorted lexicographically by their image-index tables."""
    if not A.finite:
        raise Unsupported(f"{A} is infinite")
    if A.size() > bound:
        raise TooLarge(f"{A} has {A.size()} elements (bound {bound})")
    V = view(A)
    n, add, neg = V.n, V.add, V.neg
    found = []

    def propagate(h, queue):
        while queue:
            i, v = queue.pop()
            if h[i] is not None:
                if h[i] != v:
                    return False
                continue
            h[i] = v
            queue.append((neg[i], neg[v]))
            queue.append((v, v))
            for j in range(n):
                if h[j] is not None:
                    queue.append((add[i][j], add[v][h[j]]))
        return True

    def search(h):
        try:
            i = h.index(None)
        except ValueError:
            found.append(tuple(h))
            return
        for v in range(n):
            h2 = list(h)
            if propagate(h2, [(i, v)]):
                search(h2)

    start = [None] * n
    if propagate(start, [(V.zero, V.zero)]):
        search(start)
    found = sorted(set(found))
    return [Table(tuple((V.els[i], V.els[h[i]]) for i in range(n))) for h in found]


# ---------------------------------------------------------------------------
# disjunction property, decomposition, monads


def disjunction_property(S, scope=None) -> Verdict:
    A = S.algebra
    if A.finite:
        image, kernel = image_and_kernel(S)
        for x in sorted(kernel.elements, key=view(A).idx.get):
            for y in sorted(image.elements, key=view(A).idx.get):
                if mv.join(A, x, y) == A.one and x != A.one and y != A.one:
                    return fails({"x": x, "y": y})
        return holds()
    if A.is_chain:
        # in a chain x \/ y is max(x, y)
        return holds(note="linearly ordered carrier")

    # x ranges over the kernel (x = a -> tau(a) type elements), y over the image
    def pred(a, b):
        x = mv.meet(A, mv.imp(A, a, S.apply(a)), mv.imp(A, S.apply(a), a))
        y = S.apply(b)
        if mv.join(A, x, y) == A.one:
            return x == A.one or y == A.one
        return True

    return check_property(S, scope, 2, pred)


@dataclass(frozen=True)
class Decomposition:
    b: object
    c: object
    case: str  # a_case | b_case


def decompose_element(S, a) -> Decomposition:
    A = S.algebra
    if not S.contains(a):
        raise DomainMismatch(f"{a!r} is not an element of {S}")
    b = S.apply(a)
    if A.leq(a, b):
        c = mv.imp(A, b, a)
        if mv.odot(A, b, c) != a:
            raise NotComparable(f"reconstruction b*c failed for {mv.fmt(a)}")
        return Decomposition(b, c, "a_case")
    if A.leq(b, a):
        c = mv.imp(A, a, b)
        if mv.imp(A, c, b) != a or not (A.leq(b, c) and b != c and c != A.one):
            raise NotComparable(f"reconstruction c->b failed for {mv.fmt(a)}")
        return Decomposition(b, c, "b_case")
    raise NotComparable(f"{mv.fmt(a)} and tau of it are incomparable")


def decomposition_candidates(S, a):
    """Brute-force all ``(b, c, case)`` with ``b`` in the image and ``c`` in the
    kernel satisfying one of the two decomposition conditions (finite only)."""
    A = S.algebra
    image, kernel = image_and_kernel(S)
    out = []
    for b in image.elements:
        for c in kernel.elements:
            if mv.odot(A, b, c) == a:
                # c must be the greatest kernel element with b*c = a
                if all(A.leq(d, c) for d in kernel.elements if mv.odot(A, b, d) == a):
                    out.append((b, c, "a_case"))
            if mv.imp(A, c, b) == a and A.leq(b, c) and b != c and c != A.one:
                out.append((b, c, "b_case"))
    return out


def monad_contains(S, b, x) -> bool:
    """``x`` lies in the monad of ``b``: ``c*b <= x <= d->b`` for some kernel ``c, d``."""
    A = S.algebra
    if S.apply(b) != b:
        raise NotInImage(f"{mv.fmt(b)} is not in the image of tau")
    if A.finite:
        _, kernel = image_and_kernel(S)
        lower = any(A.leq(mv.odot(A, c, b), x) for c in kernel.elements)
        upper = any(A.leq(x, mv.imp(A, d, b)) for d in kernel.elements)
        return lower and upper
    # the kernel is upward closed, so c*b <= x for some kernel c iff b -> x is
    # in the kernel, and dually for the upper bound
    return S.apply(mv.imp(A, b, x)) == A.one and S.apply(mv.imp(A, x, b)) == A.one
