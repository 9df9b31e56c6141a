"""Filter handles: explicit sets, principal filters and named filters."""

from __future__ import annotations

from dataclasses import dataclass

from . import mv
from .errors import InvalidParameter, Unsupported

NAMED_KINDS = ("Rad1", "Rad", "Trivial", "Improper")


@dataclass(frozen=True)
class ExplicitSet:
    elements: frozenset

    def __str__(self):
        return "{" + ",".join(sorted(mv.fmt(x) for x in self.elements)) + "}"


@dataclass(frozen=True)
class Principal:
    generator: object

    def __str__(self):
        return f"<{mv.fmt(self.generator)}>"


@dataclass(frozen=True)
class Named:
    """``Rad1`` (co-radical), ``Rad`` (radical, an ideal), ``Trivial`` or
    ``Improper``, read on whatever algebra it is applied to."""

    kind: str

    def __post_init__(self):
        if self.kind not in NAMED_KINDS:
            raise InvalidParameter(f"unknown named filter {self.kind!r}")

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class ProductFilter:
    """Componentwise filter on a product algebra."""

    parts: tuple

    def __str__(self):
        return "x".join(str(p) for p in self.parts)


TRIVIAL = Named("Trivial")
IMPROPER = Named("Improper")
RAD1 = Named("Rad1")
RAD = Named("Rad")


def as_handle(F):
    if isinstance(F, (ExplicitSet, Principal, Named, ProductFilter)):
        return F
    if isinstance(F, str):
        return Named(F)
    return ExplicitSet(frozenset(F))


def _named_contains(A, kind, x):
    if kind == "Trivial":
        return x == A.one
    if kind == "Improper":
        return True
    if isinstance(A, mv.Product):
        return all(_named_contains(f, kind, v) for f, v in zip(A.factors, x))
    if hasattr(A, "named_contains"):
        return A.named_contains(kind, x)
    if kind == "Rad1" and hasattr(A, "in_rad1"):
        return A.in_rad1(x)
    if kind == "Rad" and hasattr(A, "in_rad"):
        return A.in_rad(x)
    if isinstance(A, (mv.FiniteChain, mv.UnitInterval)):
        return x == (A.one if kind == "Rad1" else A.zero)
    if A.finite:
        from .structure import radical_data

        data = radical_data(A)
        return x in (data.rad1 if kind == "Rad1" else data.rad)
    raise Unsupported(f"{kind} is not known on {A}")


def principal_contains(A, g, x):
    """``x`` lies in the filter generated by ``g``: ``g^n <= x`` for some ``n``."""
    if isinstance(A, mv.Product):
        return all(principal_contains(f, u, v) for f, u, v in zip(A.factors, g, x))
    if hasattr(A, "base") and hasattr(A, "predicate"):
        # filters of a fixture carrier are traces of filters of the ambient product
        return principal_contains(A.base, g, x)
    if isinstance(A, mv.FiniteChain):
        # any g < n has g^n = 0
        return True if g < A.n else x == A.n
    if isinstance(A, mv.UnitInterval):
        return x == 1 if g == 1 else True
    if isinstance(A, mv.Chang):
        if g.a == A.n:
            # g = (n, -k): powers are (n, -m k), so the filter is Rad1 when k > 0
            return x.a == A.n if g.b < 0 else x == A.one
        return True
    if isinstance(A, mv.Hyper):
        if g.std == 1:
            return x.std == 1 if g.inf < 0 else x == A.one
        return True
    if isinstance(A, mv.InfinitesimalChain):
        if g.a == 1:
            if not g.b:
                return x == A.one
            if x.a != 1:
                return False
            if not x.b:
                return True
            return mv.lowest_degree(x.b) >= mv.lowest_degree(g.b)
        return True
    if A.finite:
        # generic finite case: iterate powers until they stabilise
        p = A.one
        while True:
            q = mv.odot(A, p, g)
            if A.leq(q, x) or A.leq(p, x):
                return True
            if q == p:
                return False
            p = q
    raise Unsupported(f"principal filters of {A} are not available")


def filter_contains(A, F, x) -> bool:
    F = as_handle(F)
    if isinstance(F, ExplicitSet):
        return x in F.elements
    if isinstance(F, Principal):
        return principal_contains(A, F.generator, x)
    if isinstance(F, Named):
        return _named_contains(A, F.kind, x)
    if isinstance(F, ProductFilter):
        if not isinstance(A, mv.Product) or len(A.factors) != len(F.parts):
            raise InvalidParameter(f"{F} does not fit {A}")
        return all(filter_contains(f, p, v) for f, p, v in zip(A.factors, F.parts, x))
    raise InvalidParameter(f"not a filter handle: {F!r}")


def is_trivial_handle(A, F) -> bool:
    F = as_handle(F)
    if isinstance(F, Named):
        if F.kind == "Trivial":
            return True
        if F.kind == "Rad1" and isinstance(A, (mv.FiniteChain, mv.UnitInterval)):
            return True
        return False
    if isinstance(F, ExplicitSet):
        return F.elements <= {A.one}
    if isinstance(F, Principal):
        return F.generator == A.one
    if isinstance(F, ProductFilter):
        return all(is_trivial_handle(f, p) for f, p in zip(A.factors, F.parts))
    return False


def is_improper_handle(A, F) -> bool:
    F = as_handle(F)
    if isinstance(F, Named):
        return F.kind == "Improper"
    if isinstance(F, ExplicitSet):
        return A.zero in F.elements
    if isinstance(F, Principal):
        return principal_contains(A, F.generator, A.zero)
    if isinstance(F, ProductFilter):
        return all(is_improper_handle(f, p) for f, p in zip(A.factors, F.parts))
    return False
