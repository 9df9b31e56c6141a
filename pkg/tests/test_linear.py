from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst
from scipy.optimize import linprog

from smmv.linear import UNSAT, LinearConstraint, feasibility

VARS = ("a", "b", "c")


def _lp_feasible(cons, names):
    """Float oracle: maximise a slack t on the strict rows inside [0,1]^n."""
    n = len(names)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for con in cons:
        row = [float(con.as_dict.get(v, 0)) for v in names]
        if con.rel == "=":
            A_eq.append(row + [0.0])
            b_eq.append(float(con.constant))
        else:
            A_ub.append(row + [1.0 if con.rel == "<" else 0.0])
            b_ub.append(float(con.constant))
    res = linprog(
        c=[0.0] * n + [-1.0],
        A_ub=np.array(A_ub) if A_ub else None,
        b_ub=b_ub or None,
        A_eq=np.array(A_eq) if A_eq else None,
        b_eq=b_eq or None,
        bounds=[(0, 1)] * n + [(0, 1)],
        method="highs",
    )
    if res.status == 2:
        return False
    has_strict = any(c.rel == "<" for c in cons)
    return (-res.fun > 1e-7) if has_strict else True


constraint = hst.builds(
    lambda coeffs, const, rel: LinearConstraint.make(dict(zip(VARS, coeffs)), const, rel),
    hst.lists(hst.integers(-3, 3), min_size=3, max_size=3),
    hst.integers(-2, 3),
    hst.sampled_from(["=", "<=", "<", "<=", "<"]),
)


@settings(max_examples=400, deadline=None)
@given(hst.lists(constraint, min_size=1, max_size=5))
def test_feasibility_matches_lp_oracle(cons):
    res = feasibility(cons, VARS)
    if res:
        for con in cons:
            assert con.holds_at(res.point)
        assert all(0 <= res.point[v] <= 1 for v in VARS)
    assert bool(res) == _lp_feasible(cons, VARS)


def test_strictness_is_tracked():
    # a < b and b < a is infeasible; a <= b and b <= a is not
    assert feasibility([LinearConstraint.make({"a": 1, "b": -1}, 0, "<"), LinearConstraint.make({"b": 1, "a": -1}, 0, "<")]) is UNSAT
    assert feasibility([LinearConstraint.make({"a": 1, "b": -1}, 0, "<="), LinearConstraint.make({"b": 1, "a": -1}, 0, "<=")])
    # 0 < a < 0 through a chain of strict rows
    assert not feasibility([LinearConstraint.make({"a": 1}, 0, "<")])


def test_witness_rule_prefers_closed_lower_bound():
    res = feasibility([LinearConstraint.make({"a": -1}, Fraction(-1, 3), "<=")])
    assert res.point["a"] == Fraction(1, 3)
    res = feasibility([LinearConstraint.make({"a": -1}, Fraction(-1, 3), "<")])
    assert res.point["a"] == Fraction(2, 3)


def test_equalities_are_substituted():
    res = feasibility([LinearConstraint.make({"a": 2, "b": -1}, 0, "="), LinearConstraint.make({"b": 1}, Fraction(1, 2), "=")])
    assert res.point == {"a": Fraction(1, 4), "b": Fraction(1, 2)}


def test_bad_relation():
    with pytest.raises(ValueError):
        LinearConstraint.make({"a": 1}, 0, ">")
