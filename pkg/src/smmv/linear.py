"""Exact rational linear feasibility by Fourier-Motzkin elimination.

Strict inequalities are tracked through elimination: a combined constraint is
strict when either parent is.  Every variable is implicitly confined to
``[0, 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RELATIONS = ("=", "<=", "<")


@dataclass(frozen=True)
class LinearConstraint:
    """``sum(coeffs[v] * v) REL constant``."""

    coeffs: tuple  # sorted (var, Fraction) pairs with nonzero coefficients
    constant: Fraction
    rel: str

    @classmethod
    def make(cls, coeffs, constant, rel):
        if rel not in RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        items = tuple(sorted((v, Fraction(c)) for v, c in dict(coeffs).items() if c))
        return cls(items, Fraction(constant), rel)

    @property
    def as_dict(self):
        return dict(self.coeffs)

    def holds_at(self, point) -> bool:
        s = sum((c * point.get(v, 0) for v, c in self.coeffs), Fraction(0))
        if self.rel == "=":
            return s == self.constant
        if self.rel == "<=":
            return s <= self.constant
        return s < self.constant

    def __str__(self):
        lhs = " + ".join(f"{c}*{v}" for v, c in self.coeffs) or "0"
        return f"{lhs} {self.rel} {self.constant}"


@dataclass
class Sat:
    point: dict

    def __bool__(self):
        return True


class Unsat:
    def __bool__(self):
        return False

    def __repr__(self):
        return "Unsat"


UNSAT = Unsat()


# internal row: (coeff dict, constant, kind) with kind in {"eq", "le", "lt"}
def _kind(rel):
    return {"=": "eq", "<=": "le", "<": "lt"}[rel]


def _constant_ok(b, kind):
    if kind == "eq":
        return b == 0
    if kind == "le":
        return 0 <= b
    return 0 < b


def _normalize_ineq(row):
    coeffs, b, kind = row
    # scale so the first coefficient has absolute value 1 (positive scaling only)
    first = coeffs[min(coeffs)]
    s = abs(first)
    return ({v: c / s for v, c in coeffs.items()}, b / s, kind)


def _dedupe(rows):
    """Keep the tightest inequality per coefficient vector."""
    best = {}
    eqs = {}
    for coeffs, b, kind in rows:
        if kind == "eq":
            first = coeffs[min(coeffs)]
            key = tuple(sorted((v, c / first) for v, c in coeffs.items()))
            b = b / first
            if key in eqs and eqs[key] != b:
                return None
            eqs[key] = b
            continue
        coeffs, b, kind = _normalize_ineq((coeffs, b, kind))
        key = tuple(sorted(coeffs.items()))
        old = best.get(key)
        if old is None or b < old[0] or (b == old[0] and kind == "lt"):
            best[key] = (b, kind)
    out = [(dict(k), b, "eq") for k, b in eqs.items()]
    out += [(dict(k), b, kind) for k, (b, kind) in best.items()]
    return out


def feasibility(constraints, variables=None):
    """``Sat(point)`` with exact rationals, or ``UNSAT``."""
    rows = []
    names = set(variables or ())
    for con in constraints:
        d = con.as_dict
        names.update(d)
        rows.append((d, con.constant, _kind(con.rel)))
    for v in names:
        rows.append(({v: Fraction(1)}, Fraction(1), "le"))
        rows.append(({v: Fraction(-1)}, Fraction(0), "le"))
    order = sorted(names)
    history = []  # (var, "sub", expr) or (var, "fm", lower_rows, upper_rows)

    rows = _split_constants(rows)
    if rows is None:
        return UNSAT
    for v in order:
        rows = _dedupe(rows)
        if rows is None:
            return UNSAT
        with_v = [r for r in rows if v in r[0]]
        rest = [r for r in rows if v not in r[0]]
        eq = next((r for r in with_v if r[2] == "eq"), None)
        if eq is not None:
            coeffs, b, _ = eq
            c = coeffs[v]
            # v = (b - sum others) / c
            expr = ({u: -a / c for u, a in coeffs.items() if u != v}, b / c)
            history.append((v, "sub", expr))
            new = []
            for r in with_v:
                if r is eq:
                    continue
                new.append(_substitute(r, v, expr))
            rows = rest + new
        else:
            lower = [r for r in with_v if r[0][v] < 0]
            upper = [r for r in with_v if r[0][v] > 0]
            history.append((v, "fm", lower, upper))
            new = []
            for lo in lower:
                for up in upper:
                    new.append(_combine(lo, up, v))
            rows = rest + new
        rows = _split_constants(rows)
        if rows is None:
            return UNSAT
    point = {}
    for entry in reversed(history):
        v = entry[0]
        if entry[1] == "sub":
            coeffs, b = entry[2]
            point[v] = b + sum((a * point[u] for u, a in coeffs.items()), Fraction(0))
        else:
            point[v] = _pick(v, entry[2], entry[3], point)
    sat = Sat({v: point[v] for v in order})
    for con in constraints:
        if not con.holds_at(sat.point):
            raise AssertionError(f"internal error: witness violates {con}")
    return sat


def _split_constants(rows):
    out = []
    for coeffs, b, kind in rows:
        coeffs = {v: c for v, c in coeffs.items() if c}
        if not coeffs:
            if not _constant_ok(b, kind):
                return None
            continue
        out.append((coeffs, b, kind))
    return out


def _substitute(row, v, expr):
    coeffs, b, kind = row
    c = coeffs[v]
    sub, k = expr
    new = {u: a for u, a in coeffs.items() if u != v}
    for u, a in sub.items():
        new[u] = new.get(u, 0) + c * a
    return (new, b - c * k, kind)


def _combine(lo, up, v):
    (cl, bl, kl), (cu, bu, ku) = lo, up
    a, b = -cl[v], cu[v]  # both positive
    new = {}
    for u, c in cl.items():
        new[u] = new.get(u, 0) + b * c
    for u, c in cu.items():
        new[u] = new.get(u, 0) + a * c
    new.pop(v, None)
    kind = "lt" if "lt" in (kl, ku) else "le"
    return (new, b * bl + a * bu, kind)


def _bound(row, v, point):
    coeffs, b, kind = row
    rest = sum((c * point[u] for u, c in coeffs.items() if u != v), Fraction(0))
    return (b - rest) / coeffs[v], kind == "lt"


def _pick(v, lower, upper, point):
    """A value between the bounds: the lower bound when it is attained,
    otherwise the midpoint of the open interval."""
    lo, lo_strict = Fraction(0), False
    for r in lower:
        val, strict = _bound(r, v, point)
        if val > lo or (val == lo and strict):
            lo, lo_strict = val, strict
    hi, hi_strict = Fraction(1), False
    for r in upper:
        val, strict = _bound(r, v, point)
        if val < hi or (val == hi and strict):
            hi, hi_strict = val, strict
    if not lo_strict:
        return lo
    return (lo + hi) / 2
