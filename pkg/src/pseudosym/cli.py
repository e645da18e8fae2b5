"""Command-line front end.

Exit codes: 0 success, 1 bad input or parameters outside the theorem's
hypotheses, 2 a mathematical check failed.
"""

import argparse
import json
import sys
from dataclasses import asdict

from .basis import build_family, compute_s, leading_forms
from .errors import (ConsistencyFailure, InvalidParameters, LeadingFormMismatch,
                     MonotonicityViolation, NotDivisible)
from .hilbert import hilbert_report
from .identities import appendix_identity_checks
from .local_algebra import is_standard_basis, render_monomial
from .semigroup import PseudoSymParams, check_conditions, derive_generators
from .sweep import (SCHEMA, SweepConfig, records_to_csv,
                    records_to_json, run_sweep, summarize)
from .unipoly import format_poly

OK, BAD_INPUT, INCONSISTENT = 0, 1, 2


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload):
    payload = {"schema": SCHEMA, "command": args.command, **payload}
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _params(args):
    return PseudoSymParams(args.a1, args.a2, args.a3, args.a4, args.a21)


def _params_json(p):
    return dict(zip(("a1", "a2", "a3", "a4", "a21"), p.astuple()))


def _hypotheses_failing(report):
    return [n for n in report.failing() if n != "coprime"]


def cmd_derive(args):
    p = _params(args)
    gens = derive_generators(p)
    cond = check_conditions(p)
    bad = _hypotheses_failing(cond)
    if args.json:
        _emit_json(args, {"params": _params_json(p), "generators": list(gens),
                          "conditions": asdict(cond), "failing": cond.failing()})
    else:
        lines = [f"generators: {' '.join(str(n) for n in gens)}"]
        for name, value in asdict(cond).items():
            lines.append(f"  {name}: {'OK' if value else 'FAIL'}")
        if not bad:
            lines.append("all theorem hypotheses OK"
                         + ("" if cond.coprime else " (generators share a factor)"))
        else:
            lines.append(f"failing: {', '.join(bad)}")
        _emit(args, "\n".join(lines) + "\n")
    return BAD_INPUT if bad else OK


def _require_hypotheses(p):
    bad = _hypotheses_failing(check_conditions(p))
    if bad:
        raise InvalidParameters(f"failing conditions: {', '.join(bad)}")


def cmd_basis(args):
    p = _params(args)
    _require_hypotheses(p)
    fam = build_family(p)
    members = fam.members()
    verdict = None
    if args.verify:
        verdict, witness = is_standard_basis([f for _, f in members])
    tc = leading_forms(fam)
    if args.json:
        _emit_json(args, {
            "params": _params_json(p),
            "s": list(fam.s),
            "members": [{"name": n, "lead": str(f.lead), "tail": str(f.tail)}
                        for n, f in members],
            "leading_ideal": [render_monomial(m) for m in tc.gens],
            "verified": verdict,
        })
    else:
        lines = [f"s = {tuple(fam.s)}", f"{len(members)} members:"]
        lines += [f"  {n} = {f}" for n, f in members]
        lines.append("leading ideal: " + ", ".join(render_monomial(m) for m in tc.gens))
        if args.verify:
            lines.append("standard basis: " + ("VERIFIED" if verdict else "FAILED"))
        _emit(args, "\n".join(lines) + "\n")
    return INCONSISTENT if verdict is False else OK


def _report_payload(p, r):
    return {
        "params": _params_json(p),
        "P": r.P.to_list(), "P1": r.P1.to_list(), "P2": r.P2.to_list(),
        "Q": r.Q.to_list(), "H": r.H,
        "P_text": format_poly(r.P), "Q_text": format_poly(r.Q),
        "regularity_index": r.regularity_index,
        "multiplicity": r.multiplicity,
        "nondecreasing": r.nondecreasing,
        "closed_form_agrees": r.closed_form_agrees,
        "oracle_agrees": r.oracle_agrees,
        "checks": r.checks,
    }


def _report_lines(r, depth):
    lines = [
        f"P = {format_poly(r.P)}",
        f"Q = {format_poly(r.Q)}",
        f"H(0..{min(len(r.H), 30) - 1}) = {r.H[:30]}",
        f"multiplicity: {r.multiplicity}",
        f"regularity index: {r.regularity_index}",
        f"nondecreasing: {'YES' if r.nondecreasing else 'NO'}",
        f"closed forms agree: {'YES' if r.closed_form_agrees else 'NO'}",
    ]
    if depth > 0:
        lines.append(f"oracle agrees through n={depth}" if r.oracle_agrees
                     else f"oracle DISAGREES within n<={depth}")
    return lines


def cmd_hilbert(args):
    p = _params(args)
    _require_hypotheses(p)
    r = hilbert_report(p, oracle_depth=args.oracle)
    if args.json:
        _emit_json(args, _report_payload(p, r))
    else:
        _emit(args, "\n".join(_report_lines(r, args.oracle)) + "\n")
    return OK


def cmd_verify(args):
    """Everything: basis, leading forms, series, identities, oracle."""
    p = _params(args)
    _require_hypotheses(p)
    fam = build_family(p)
    verdict, _ = is_standard_basis(fam.binomials())
    r = hilbert_report(p, oracle_depth=args.oracle, strict=False)
    failed = sorted(k for k, v in r.checks.items() if not v)
    ok = verdict and not failed and r.oracle_agrees and r.nondecreasing
    if args.json:
        payload = _report_payload(p, r)
        payload.update(standard_basis=verdict, failed=failed, ok=ok)
        _emit_json(args, payload)
    else:
        lines = ["standard basis: " + ("VERIFIED" if verdict else "FAILED")]
        lines += _report_lines(r, args.oracle)
        lines += [f"  {k}: {'ok' if v else 'FAIL'}" for k, v in r.checks.items()]
        lines.append("verify: OK" if ok else f"verify: FAILED ({len(failed)} checks)")
        _emit(args, "\n".join(lines) + "\n")
    return OK if ok else INCONSISTENT


def cmd_identities(args):
    p = _params(args)
    _require_hypotheses(p)
    checks = appendix_identity_checks(p, compute_s(p))
    if args.json:
        _emit_json(args, {"params": _params_json(p), "checks": checks})
    else:
        _emit(args, "".join(f"{k}: {'ok' if v else 'FAIL'}\n" for k, v in checks.items()))
    return OK if all(checks.values()) else INCONSISTENT


def cmd_sweep(args):
    cfg = SweepConfig(a1=args.a1, a2=args.a2, a3=args.a3, a4=args.a4,
                      a21=args.a21, oracle_depth=args.oracle, jobs=args.jobs,
                      output_path=args.out,
                      format="csv" if args.csv else "json")
    records = run_sweep(cfg)
    text = records_to_csv(records) if args.csv else records_to_json(records, cfg)
    summary = summarize(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(json.dumps(summary, sort_keys=True))
    else:
        sys.stdout.write(text)
    bad = [r for r in records if r.valid and not r.consistent]
    return INCONSISTENT if bad else OK


def _range(text):
    """``"2..7"`` or ``"4"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pseudosym",
        description="Standard bases and Hilbert series for 4-generated "
                    "pseudo-symmetric numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", metavar="PATH", help="write output to PATH")

    def single(name, func, help):
        sp = sub.add_parser(name, help=help)
        for flag in ("a1", "a2", "a3", "a4", "a21"):
            sp.add_argument(f"--{flag}", type=int, required=True)
        common(sp)
        sp.set_defaults(func=func)
        return sp

    single("derive", cmd_derive, "generators and conditions")
    sp = single("basis", cmd_basis, "the standard basis family")
    sp.add_argument("--verify", action="store_true", help="check all s-polynomials")
    for name, func, help in (("hilbert", cmd_hilbert, "Hilbert series report"),
                             ("verify", cmd_verify, "run every check")):
        sp = single(name, func, help)
        sp.add_argument("--oracle", type=_nonneg, default=0, metavar="N",
                        help="compare with the semigroup oracle up to n=N")
    single("identities", cmd_identities, "rewriting identities and proof steps")

    sp = sub.add_parser("sweep", help="run the pipeline over parameter ranges")
    defaults = SweepConfig()
    for flag in ("a1", "a2", "a3", "a4", "a21"):
        sp.add_argument(f"--{flag}", type=_range, default=getattr(defaults, flag),
                        metavar="LO..HI")
    sp.add_argument("--oracle", type=_nonneg, default=0, metavar="N")
    sp.add_argument("--jobs", type=int, default=1, metavar="N")
    sp.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    sp.add_argument("--json", action="store_true", help="JSON output (default)")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (ConsistencyFailure, LeadingFormMismatch, NotDivisible,
            MonotonicityViolation) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return INCONSISTENT
    except (InvalidParameters, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
