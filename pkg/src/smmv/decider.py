"""Deciding equations over the standard MV-algebra on [0,1], and state
equations through the doubling translation; direct checking in an algebra.

Every subterm of a normalized term is affine in the variables once each
truncated sum ``a + b`` is resolved as either ``a + b`` (with ``a + b <= 1``)
or ``1`` (with ``a + b >= 1``).  The search walks these case choices depth
first, untruncated branch first, pruning with exact feasibility checks; a
leaf whose goal ``lhs < rhs`` or ``lhs > rhs`` is feasible yields a rational
counter-model.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import mv
from . import terms as T
from .errors import InvalidParameter, ResourceLimit, UnboundVariable
from .linear import LinearConstraint, feasibility
from .states import (
    Diagonal,
    Exhaustive,
    SMMVAlgebra,
    Verdict,
    _resolve_scope,
    sample_elements,
)

DEFAULT_CASES = 10**6
DEFAULT_SECONDS = 60.0

UNIT = mv.UnitInterval()
D_UNIT = SMMVAlgebra(mv.Product([UNIT, UNIT]), Diagonal(), name="D(I)")

ONE = Fraction(1)


@dataclass
class CounterModel:
    assignment: dict
    lhs_value: object
    rhs_value: object

    def to_json(self):
        return {
            "assignment": {k: mv.fmt(v) for k, v in self.assignment.items()},
            "lhs": mv.fmt(self.lhs_value),
            "rhs": mv.fmt(self.rhs_value),
        }


@dataclass
class Decision:
    valid: bool
    counter: CounterModel | None = None
    cases: int = 0
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def verdict(self):
        return "valid" if self.valid else "invalid"


class _Budget:
    def __init__(self, cases, seconds):
        self.max_cases = cases if cases is not None else DEFAULT_CASES
        self.max_seconds = seconds if seconds is not None else DEFAULT_SECONDS
        self.cases = 0
        self.polls = 0
        self.start = time.monotonic()

    def tick(self):
        """Count one case: a full choice of branches checked against one relation."""
        self.cases += 1
        if self.cases > self.max_cases:
            raise ResourceLimit("case budget exceeded", cases=self.cases, elapsed=self.elapsed())
        self.poll()

    def poll(self):
        self.polls += 1
        if self.polls % 64 == 0 and self.elapsed() > self.max_seconds:
            raise ResourceLimit("time budget exceeded", cases=self.cases, elapsed=self.elapsed())

    def elapsed(self):
        return time.monotonic() - self.start


# affine forms: (dict var -> Fraction, constant)


def _add(f, g):
    d = dict(f[0])
    for v, c in g[0].items():
        d[v] = d.get(v, 0) + c
    return ({v: c for v, c in d.items() if c}, f[1] + g[1])


def _neg(f):
    return ({v: -c for v, c in f[0].items()}, ONE - f[1])


def _sub(f, g):
    return _add(f, ({v: -c for v, c in g[0].items()}, -g[1]))


def _range(f):
    lo = hi = f[1]
    for c in f[0].values():
        if c > 0:
            hi += c
        else:
            lo += c
    return lo, hi


def _constraint(f, rel, rhs):
    """``f REL rhs`` as a LinearConstraint (rel in =, <=, <, >=, >)."""
    coeffs, k = f
    if rel in (">=", ">"):
        return LinearConstraint.make({v: -c for v, c in coeffs.items()}, k - rhs, "<=" if rel == ">=" else "<")
    return LinearConstraint.make(coeffs, rhs - k, rel)


class _Problem:
    """Case-split search for an assignment satisfying all hypotheses and
    violating the conclusion."""

    def __init__(self, eq, budget):
        self.eq = eq
        self.budget = budget
        hyps = [(T.normalize(h.lhs), T.normalize(h.rhs)) for h in eq.hypotheses]
        goal = (T.normalize(eq.lhs), T.normalize(eq.rhs))
        self.nodes = []  # Oplus nodes in decision order
        self.index = {}
        self.events = {}  # after deciding node k: list of hypothesis indices complete
        for i, (a, b) in enumerate(hyps):
            self._collect(a)
            self._collect(b)
            self.events.setdefault(len(self.nodes) - 1, []).append(i)
        self._collect(goal[0])
        self._collect(goal[1])
        self.hyps = hyps
        self.goal = goal

    def _collect(self, t):
        # post-order, left to right, hash-consed
        stack = [(t, False)]
        while stack:
            u, done = stack.pop()
            if isinstance(u, T.Oplus):
                if u in self.index:
                    continue
                if done:
                    self.index[u] = len(self.nodes)
                    self.nodes.append(u)
                else:
                    stack.append((u, True))
                    stack.append((u.right, False))
                    stack.append((u.left, False))
            elif isinstance(u, T.Neg):
                stack.append((u.arg, False))

    def form(self, t, choice, cache):
        """Affine form of ``t`` under the case choices made so far."""
        if t in cache:
            return cache[t]
        if isinstance(t, T.Var):
            f = ({t.name: ONE}, Fraction(0))
        elif isinstance(t, T.Zero):
            f = ({}, Fraction(0))
        elif isinstance(t, T.Neg):
            f = _neg(self.form(t.arg, choice, cache))
        elif isinstance(t, T.Oplus):
            if choice[self.index[t]]:
                f = ({}, ONE)
            else:
                f = _add(self.form(t.left, choice, cache), self.form(t.right, choice, cache))
        else:
            raise InvalidParameter(f"unexpected node in normalized term: {t!r}")
        cache[t] = f
        return f

    def search(self):
        n = len(self.nodes)
        choice = [None] * n
        cache = {}
        constraints = []

        def hyp_constraints(k):
            out = []
            for i in self.events.get(k, []):
                a, b = self.hyps[i]
                out.append(_constraint(_sub(self.form(a, choice, cache), self.form(b, choice, cache)), "=", 0))
            return out

        # hypotheses made only of variables/negations are complete before any node
        pre = hyp_constraints(-1)
        constraints.extend(pre)
        if pre and not feasibility(constraints):
            return None

        def rec(k):
            self.budget.poll()
            if k == n:
                return self.leaf(choice, cache, constraints)
            node = self.nodes[k]
            s = _add(self.form(node.left, choice, cache), self.form(node.right, choice, cache))
            lo, hi = _range(s)
            # the box [0,1]^n settles the case when the sum cannot cross 1
            if hi <= 1:
                branches = [False]
            elif lo >= 1:
                branches = [True]
            else:
                branches = [False, True]
            split = len(branches) > 1
            for truncated in branches:
                choice[k] = truncated
                added = []
                if split:
                    added.append(_constraint(s, ">=" if truncated else "<=", ONE))
                added.extend(hyp_constraints(k))
                constraints.extend(added)
                ok = (not added) or bool(feasibility(constraints))
                if ok:
                    found = rec(k + 1)
                    if found is not None:
                        return found
                del constraints[len(constraints) - len(added) :]
                self._forget(cache, k)
                choice[k] = None
            return None

        return rec(0)

    def _forget(self, cache, k):
        # drop cached forms depending on node k (any Oplus with index >= k)
        for t in list(cache):
            if self._depends(t, k):
                del cache[t]

    def _depends(self, t, k):
        if isinstance(t, T.Oplus):
            return self.index[t] >= k
        if isinstance(t, T.Neg):
            return self._depends(t.arg, k)
        return False

    def leaf(self, choice, cache, constraints):
        a, b = self.goal
        diff = _sub(self.form(a, choice, cache), self.form(b, choice, cache))
        for rel in ("<", ">"):
            self.budget.tick()
            res = feasibility(constraints + [_constraint(diff, rel, 0)])
            if res:
                return res.point
        return None


def _verify(S, eq, env):
    for h in eq.hypotheses:
        if T.eval_term(S, env, h.lhs) != T.eval_term(S, env, h.rhs):
            raise AssertionError(f"counter-model violates hypothesis {h}")
    lv = T.eval_term(S, env, eq.lhs)
    rv = T.eval_term(S, env, eq.rhs)
    if lv == rv:
        raise AssertionError(f"counter-model does not refute {eq}")
    return lv, rv


def decide_mv_equation(eq, max_cases=None, max_seconds=None) -> Decision:
    """Validity of a tau-free (quasi-)equation over [0,1]."""
    if isinstance(eq, str):
        eq = T.parse_equation(eq)
    if T.equation_has_tau(eq):
        raise InvalidParameter("equation mentions tau; use decide_smmv_equation")
    budget = _Budget(max_cases, max_seconds)
    return _decide(eq, budget)


def _decide(eq, budget):
    point = _Problem(eq, budget).search()
    if point is None:
        return Decision(True, cases=budget.cases, elapsed=budget.elapsed())
    env = {v: point.get(v, Fraction(0)) for v in T.equation_variables(eq)}
    lv, rv = _verify(UNIT, eq, env)
    return Decision(False, CounterModel(env, lv, rv), cases=budget.cases, elapsed=budget.elapsed())


def decide_smmv_equation(eq, max_cases=None, max_seconds=None) -> Decision:
    """Validity of an equation with tau in all state-morphism algebras, via
    its two tau-free components over doubled variables."""
    if isinstance(eq, str):
        eq = T.parse_equation(eq)
    if eq.hypotheses:
        raise InvalidParameter("quasi-equations with tau are not supported")
    budget = _Budget(max_cases, max_seconds)
    doubled = T.translate_equation(eq)
    names = T.equation_variables(eq)
    for part, component in ((doubled.first, 1), (doubled.second, 2)):
        d = _decide(part, budget)
        if not d.valid:
            pt = d.counter.assignment
            env = {
                v: (pt.get(T.doubled_name(v, 1), Fraction(0)), pt.get(T.doubled_name(v, 2), Fraction(0)))
                for v in names
            }
            lv, rv = _verify(D_UNIT, eq, env)
            out = Decision(False, CounterModel(env, lv, rv), cases=budget.cases, elapsed=budget.elapsed())
            out.notes.append(f"component {component} fails")
            return out
    return Decision(True, cases=budget.cases, elapsed=budget.elapsed())


def decide(eq, max_cases=None, max_seconds=None) -> Decision:
    if isinstance(eq, str):
        eq = T.parse_equation(eq)
    if T.equation_has_tau(eq):
        return decide_smmv_equation(eq, max_cases, max_seconds)
    return decide_mv_equation(eq, max_cases, max_seconds)


# ---------------------------------------------------------------------------
# checking inside a given algebra


@dataclass
class CheckResult:
    verdict: Verdict
    lhs_value: object = None
    rhs_value: object = None
    samples: int = 0

    @property
    def ok(self):
        return self.verdict.ok


def check_in_algebra(S, eq, scope=None, at=None) -> CheckResult:
    """Truth of ``eq`` in ``S``: at one assignment (``at``), exhaustively on a
    finite carrier, or on seeded samples."""
    if isinstance(eq, str):
        eq = T.parse_equation(eq)
    A = getattr(S, "algebra", S)
    names = T.equation_variables(eq)
    if at is not None:
        env = dict(at)
        missing = [v for v in names if v not in env]
        if missing:
            raise UnboundVariable(missing[0])
        lv = T.eval_term(S, env, eq.lhs)
        rv = T.eval_term(S, env, eq.rhs)
        ok = T.holds_at(S, env, eq)
        wit = dict(env)
        v = Verdict("holds") if ok else Verdict("fails", witness=wit)
        return CheckResult(v, lv, rv)
    scope = _resolve_scope(A, scope)
    if isinstance(scope, Exhaustive):
        for vals in itertools.product(A.elements(), repeat=len(names)):
            env = dict(zip(names, vals))
            if not T.holds_at(S, env, eq):
                return CheckResult(
                    Verdict("fails", witness=env), T.eval_term(S, env, eq.lhs), T.eval_term(S, env, eq.rhs)
                )
        return CheckResult(Verdict("holds"))
    for vals in sample_elements(A, scope, len(names)):
        env = dict(zip(names, vals))
        if not T.holds_at(S, env, eq):
            return CheckResult(
                Verdict("fails", witness=env), T.eval_term(S, env, eq.lhs), T.eval_term(S, env, eq.rhs), scope.count
            )
    return CheckResult(Verdict("sampled-pass", count=scope.count, seed=scope.seed), samples=scope.count)


def solution_search(S, eq, scope=None, candidates=()):
    """Assignments among ``candidates`` and sampled points satisfying ``eq``.

    Returns ``(solutions, tried)``; solutions are deduplicated, in order found.
    """
    if isinstance(eq, str):
        eq = T.parse_equation(eq)
    A = getattr(S, "algebra", S)
    names = T.equation_variables(eq)
    scope = _resolve_scope(A, scope)
    found = []
    tried = 0

    def consider(env):
        nonlocal tried
        tried += 1
        if T.holds_at(S, env, eq) and env not in found:
            found.append(env)

    for env in candidates:
        consider(dict(env))
    if isinstance(scope, Exhaustive):
        for vals in itertools.product(A.elements(), repeat=len(names)):
            consider(dict(zip(names, vals)))
    else:
        for vals in sample_elements(A, scope, len(names)):
            consider(dict(zip(names, vals)))
    return found, tried
