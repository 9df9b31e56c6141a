"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import io
import json
import time

from smmv import suites
from smmv.cli import main

BOUNDS = {1: 5, 2: 30, 3: 30, 4: 5, 5: 10, 6: 10, 7: 60, 8: 10, 9: 5}


def _report(capsys, number, ok, elapsed, bound, note=""):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number} ({elapsed:.2f}s, bound {bound}){note}")


def _criterion(k, capsys):
    start = time.monotonic()
    res = suites.run_criterion(k, seed=0, samples=10000)
    elapsed = time.monotonic() - start
    failed = [c.name for c in res.failures()]
    ok = res.passed and elapsed < BOUNDS[k]
    _report(capsys, k, ok, elapsed, f"{BOUNDS[k]}s", f" failed checks: {failed}" if failed else "")
    assert res.passed, failed
    assert elapsed < BOUNDS[k]


def test_criterion_1_mv_axioms(capsys):
    _criterion(1, capsys)


def test_criterion_2_state_axioms(capsys):
    _criterion(2, capsys)


def test_criterion_3_si_characterization(capsys):
    _criterion(3, capsys)


def test_criterion_4_independence(capsys):
    _criterion(4, capsys)


def test_criterion_5_representation(capsys):
    _criterion(5, capsys)


def test_criterion_6_classification(capsys):
    _criterion(6, capsys)


def test_criterion_7_decider(capsys):
    _criterion(7, capsys)


def test_criterion_8_hyperreal_claims(capsys):
    _criterion(8, capsys)


def test_criterion_9_quotient(capsys):
    _criterion(9, capsys)


def _reproduce_all():
    suites.clear_caches()
    out = io.StringIO()
    code = main(["reproduce", "all", "--json", "--seed", "0"], out=out)
    rep = json.loads(out.getvalue())
    rep.pop("elapsed")
    return code, json.dumps(rep, indent=2).encode()


def test_criterion_10_determinism(capsys):
    start = time.monotonic()
    code1, first = _reproduce_all()
    code2, second = _reproduce_all()
    elapsed = time.monotonic() - start
    ok = code1 == code2 == 0 and first == second
    _report(capsys, 10, ok, elapsed, "one full-suite run per report")
    assert code1 == code2 == 0
    assert first == second
