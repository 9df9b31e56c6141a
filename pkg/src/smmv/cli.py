"""Command-line front end: ``smmv decide|classify|enumerate|reproduce|check``.

Exit codes: 0 valid / pass, 1 invalid / fail, 2 error.  With ``--json`` the
report is a single JSON object with the keys ``command``, ``inputs``,
``verdict``, ``witness``, ``stats``, ``symbolic_assumptions``, ``details``
and ``elapsed``; only ``elapsed`` depends on the run.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import constructions as cons
from . import decider as dec
from . import descriptors as desc
from . import mv
from . import states as st
from . import structure as sr
from . import suites
from . import terms as T
from .errors import InvalidParameter, ResourceLimit, SMMVError
from .states import SMMVAlgebra, Sampled


class Report:
    def __init__(self, command, inputs):
        self.command = command
        self.inputs = inputs
        self.verdict = None
        self.witness = None
        self.cases = 0
        self.samples = 0
        self.seed = inputs.get("seed")
        self.symbolic = []
        self.details = {}
        self.lines = []
        self.start = time.monotonic()

    def to_json(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witness": self.witness,
            "stats": {"cases": self.cases, "samples": self.samples, "seed": self.seed},
            "symbolic_assumptions": sorted(set(self.symbolic)),
            "details": self.details,
            "elapsed": round(time.monotonic() - self.start, 6),
        }

    def emit(self, as_json, out):
        if as_json:
            out.write(json.dumps(self.to_json(), indent=2) + "\n")
            return
        for line in self.lines:
            out.write(line + "\n")
        out.write(f"verdict: {self.verdict}\n")
        if self.witness:
            out.write(f"witness: {json.dumps(self.witness)}\n")
        for s in sorted(set(self.symbolic)):
            out.write(f"assumption: {s}\n")


# ---------------------------------------------------------------------------
# argument helpers


def _equation(args):
    if args.name:
        if args.equation:
            raise InvalidParameter("give either an equation or --name, not both")
        return T.registry_get(args.name, p=args.p, eta=args.eta)
    if not args.equation:
        raise InvalidParameter("an equation or --name is required")
    return T.parse_equation(args.equation)


def _tau(A, spec):
    if spec == "id":
        return st.Identity()
    if spec == "diag":
        return cons.diagonal_state(A)
    if spec == "std":
        return st.StandardPart()
    if spec == "rad":
        return st.RadicalCollapse()
    with open(spec) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise InvalidParameter("a tau table must be a JSON object mapping elements to elements")
    table = {desc.parse_element(A, k): desc.parse_element(A, v) for k, v in raw.items()}
    tau = st.Table.from_dict(table)
    if A.finite:
        missing = [x for x in A.elements() if x not in table]
        if missing:
            raise InvalidParameter(f"tau table misses {mv.fmt(missing[0])}")
        rep = st.check_state_axioms(SMMVAlgebra(A, tau))
        if not rep.all_hold or any(tau.apply(A, tau.apply(A, x)) != tau.apply(A, x) for x in A.elements()):
            raise InvalidParameter("tau table is not an idempotent endomorphism")
    return tau


def _algebra(args, default_tau="id"):
    """Parse the descriptor; ``--tau`` overrides the state a descriptor carries."""
    d = desc.parse_descriptor(args.algebra)
    if isinstance(d, SMMVAlgebra):
        if args.tau is None:
            return d
        return SMMVAlgebra(d.algebra, _tau(d.algebra, args.tau), assumptions=d.assumptions)
    return SMMVAlgebra(d, _tau(d, args.tau or default_tau))


def _scope(args, A):
    if args.scope == "exhaustive" or (args.scope == "auto" and A.finite and args.samples is None):
        return st.EXHAUSTIVE
    return Sampled(seed=args.seed, count=args.samples or 10000, bound=args.bound)


# ---------------------------------------------------------------------------
# commands


def cmd_decide(args, rep):
    eq = _equation(args)
    rep.inputs["equation"] = str(eq)
    try:
        d = dec.decide(eq, max_cases=args.budget_cases, max_seconds=args.budget_secs)
    except ResourceLimit as exc:
        rep.verdict = "unknown"
        rep.cases = exc.cases
        rep.details = {"error": str(exc)}
        rep.lines.append(f"budget exhausted after {exc.cases} cases")
        return 2
    rep.cases = d.cases
    rep.verdict = d.verdict
    rep.details = {"notes": list(d.notes), "model": "D(I)" if T.equation_has_tau(eq) else "I"}
    rep.lines.append(f"equation: {eq}")
    if d.counter is not None:
        rep.witness = d.counter.to_json()
    return 0 if d.valid else 1


def cmd_classify(args, rep):
    S = _algebra(args)
    c = sr.classify_type(S)
    rep.verdict = c.type_tag
    rep.details = c.to_json()
    rep.details["tau"] = str(S.tau)
    rep.symbolic += list(S.assumptions)
    rep.lines.append(f"algebra: {S}  tau: {S.tau}")
    rep.lines.append(f"subdirectly irreducible: {c.si}")
    if c.type_tag == "L":
        rep.lines.append(f"linearly ordered (k_flag): {c.k_flag}")
    return 0


def cmd_enumerate(args, rep):
    A = desc.parse_descriptor(args.algebra)
    if isinstance(A, SMMVAlgebra):
        A = A.algebra
    ops = st.enumerate_idempotent_endos(A, bound=args.max_size)
    rows = []
    for tau in ops:
        c = sr.classify_type(SMMVAlgebra(A, tau))
        rows.append({"tau": str(tau), "si": c.si, "type": c.type_tag})
        rep.lines.append(f"{tau}  si={c.si}  type={c.type_tag}")
    rep.verdict = f"{len(ops)} operators"
    rep.details = {"count": len(ops), "operators": rows}
    return 0


def cmd_reproduce(args, rep):
    results = suites.run_suite(args.suite, seed=args.seed, samples=args.samples or 10000, bound=args.bound)
    ok = all(r.passed for r in results)
    rep.verdict = "pass" if ok else "fail"
    rep.cases = sum(r.cases for r in results)
    rep.samples = sum(r.samples for r in results)
    rep.symbolic = sorted({s for r in results for s in r.symbolic})
    rep.details = {"criteria": [r.to_json() for r in results]}
    fails = {}
    for r in results:
        rep.lines.append(f"[{'PASS' if r.passed else 'FAIL'}] criterion {r.number}: {r.title}")
        for c in r.failures():
            fails[f"{r.number}:{c.name}"] = c.witness
            rep.lines.append(f"    failed check {c.name}: {json.dumps(c.witness)}")
    rep.witness = fails or None
    return 0 if ok else 1


def cmd_check(args, rep):
    S = _algebra(args)
    eq = _equation(args)
    rep.inputs["equation"] = str(eq)
    rep.symbolic += list(S.assumptions)
    if args.at:
        env = desc.parse_assignment(S, args.at)
        r = dec.check_in_algebra(S, eq, at=env)
        left = T.eval_term(S, env, eq.left)
        right = T.eval_term(S, env, eq.right)
        rep.details = {"scope": "point", "left": mv.fmt(left), "right": mv.fmt(right)}
    else:
        scope = _scope(args, S.algebra)
        r = dec.check_in_algebra(S, eq, scope)
        rep.samples = r.samples
        rep.details = {"scope": "exhaustive" if isinstance(scope, st.Exhaustive) else "sampled"}
        if r.verdict.witness is not None:
            env = r.verdict.witness
            rep.details["left"] = mv.fmt(T.eval_term(S, env, eq.left))
            rep.details["right"] = mv.fmt(T.eval_term(S, env, eq.right))
    rep.verdict = r.verdict.status
    if r.verdict.witness is not None:
        rep.witness = {
            "assignment": {k: mv.fmt(v) for k, v in sorted(r.verdict.witness.items())},
            "lhs": mv.fmt(r.lhs_value),
            "rhs": mv.fmt(r.rhs_value),
        }
    rep.lines.append(f"algebra: {S}  tau: {S.tau}  equation: {eq}")
    if "left" in rep.details:
        rep.lines.append(f"left = {rep.details['left']}, right = {rep.details['right']}")
    return 0 if r.verdict.ok else 1


COMMANDS = {
    "decide": cmd_decide,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "reproduce": cmd_reproduce,
    "check": cmd_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidParameter(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None, help="sample count (default 10000)")
    common.add_argument("--bound", type=int, default=10**6, help="coefficient bound for sampling")
    common.add_argument("--budget-cases", type=int, default=None)
    common.add_argument("--budget-secs", type=float, default=None)

    eqargs = _Parser(add_help=False)
    eqargs.add_argument("--name", help="registry equation name")
    eqargs.add_argument("--p", type=int, help="prime for the a_p, b_p, c_p families")
    eqargs.add_argument("--eta", help="tau-free term for eps_V")

    tauarg = _Parser(add_help=False)
    tauarg.add_argument("--tau", help="id | diag | std | rad | path to a JSON table")

    p = _Parser(prog="smmv", description="MV-algebras with internal states")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    d = sub.add_parser("decide", parents=[common, eqargs], help="decide an equation in all SMMV-algebras")
    d.add_argument("equation", nargs="?", help="equation text, e.g. 'tau(~x) = ~tau(x)'")
    c = sub.add_parser("classify", parents=[common, tauarg], help="classify an algebra with a state")
    c.add_argument("algebra")
    e = sub.add_parser("enumerate", parents=[common], help="all state morphisms of a finite algebra")
    e.add_argument("algebra")
    e.add_argument("--max-size", type=int, default=36, help="largest carrier accepted")
    r = sub.add_parser("reproduce", parents=[common], help="run an acceptance suite")
    r.add_argument("suite", help=", ".join(suites.SUITES))
    k = sub.add_parser("check", parents=[common, eqargs, tauarg], help="check an equation in one algebra")
    k.add_argument("algebra")
    k.add_argument("equation", nargs="?", help="equation text (or use --name)")
    k.add_argument("--at", help="assignment such as 'x=1/3+e, y=(0,1)'")
    k.add_argument("--scope", choices=("auto", "exhaustive", "sampled"), default="auto")
    p.commands = dict(sub.choices)
    return p


def _parse(argv):
    # an optional equation may follow options such as --tau, so parse the
    # chosen subcommand with intermixed positionals
    p = build_parser()
    args, _ = p.parse_known_args(argv)
    i = argv.index(args.command)
    sub_args = p.commands[args.command].parse_intermixed_args(argv[i + 1 :])
    sub_args.command = args.command
    return sub_args


def _inputs(args):
    skip = {"json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    as_json = "--json" in argv
    command = next((a for a in argv if a in COMMANDS), None)
    try:
        args = _parse(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except SMMVError as exc:
        return _error(command, {"argv": argv}, exc, as_json, out)
    rep = Report(args.command, _inputs(args))
    try:
        code = COMMANDS[args.command](args, rep)
    except (SMMVError, ValueError, KeyError, OSError) as exc:
        return _error(args.command, rep.inputs, exc, as_json, out)
    rep.emit(args.json, out)
    return code


def _error(command, inputs, exc, as_json, out):
    msg = str(exc) if not isinstance(exc, KeyError) else str(exc.args[0] if exc.args else exc)
    if as_json:
        rep = Report(command, inputs)
        rep.verdict = "error"
        rep.details = {"error": msg, "kind": type(exc).__name__}
        rep.emit(True, out)
    else:
        sys.stderr.write(f"smmv: error: {msg}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
