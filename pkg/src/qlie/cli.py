"""Command-line entry point: ``qlie <command> ...`` or ``python -m qlie``.

Each command runs a fixed pipeline of checks, prints a short summary table
and, with ``--json PATH``, writes a report.  Reports carry no timings so two
runs with the same arguments give byte-identical files.

Exit codes: 0 every check passed, 1 some check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .axioms import check_multiplicativity, verify_all
from .basis import ParseError, parse_element, render
from .graded import (filtration_product_check, omega_check, omega_matrix,
                     omega_multiplicativity, render_matrix, zero_divisor_probe)
from .pbw import RewriteSystem, overlap_confluence, pbw_independence
from .structure import abelianized, quantum_sl_plus, structure_dump
from .ybe import VARIANTS, braid_check, build_V, check_inverse

SCHEMA = 1
SPACES = {"v1": "V1", "v2": "V2", "full": "full", "cube": "cube", "l3": "L3"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(flag):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}")
        if v < 1:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 1, got {v}")
        return v
    return conv


def _nonneg(flag):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}")
        if v < 0:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 0, got {v}")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qlie", description="Exact checks for the quantum Lie algebra (sl_{n+1}^+)_q.")
    p.add_argument("--version", action="version", version=f"qlie {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--n", type=_positive("--n"), required=True,
                        help="rank: the algebra is (sl_{n+1}^+)_q")
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here")

    sp = sub.add_parser("verify", help="T-Lie axioms and side conditions")
    common(sp)
    sp.add_argument("--filtration", choices=("max", "sum"), default="max",
                    help="degree convention for the pseudobracket stability bound")
    sp.add_argument("--braid-side", action="store_true",
                    help="also check the two extra multiplicativity identities used by the braid relation")

    sp = sub.add_parser("nf", help="normal form of an element of U(L) or S(L)")
    common(sp)
    sp.add_argument("--expr", required=True, help='element, e.g. "e(2,3)*e(1,2)"')
    sp.add_argument("--mode", choices=("enveloping", "symmetric"), default="enveloping")
    sp.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    sp.add_argument("--trace", action="store_true", help="print each rewrite step as a JSON line")

    sp = sub.add_parser("pbw", help="overlap confluence and PBW rank certification")
    common(sp)
    sp.add_argument("--max-len", type=_positive("--max-len"), default=3)
    sp.add_argument("--mode", choices=("enveloping", "symmetric", "both"), default="enveloping")

    sp = sub.add_parser("graded", help="associated graded algebra and omega")
    common(sp)
    sp.add_argument("--max-level", type=_nonneg("--max-level"), default=6)
    sp.add_argument("--assume-confluent", action="store_true",
                    help="skip the confluence run (recorded in the report)")
    sp.add_argument("--dump-matrix", metavar="PATH", help="write the omega matrices as text")
    sp.add_argument("--trials", type=_nonneg("--trials"), default=100,
                    help="zero-divisor probe trials (0 disables the probe)")
    sp.add_argument("--deg", type=_positive("--deg"), default=2, help="zero-divisor probe word length")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--multiplicativity", action="store_true",
                    help="also compare omega(z) omega(z') with omega(z z')")

    sp = sub.add_parser("ybe", help="R(lam) inverse identity and braid relation")
    common(sp)
    sp.add_argument("--space", choices=sorted(SPACES), default=None,
                    help="braid space (default: v1 for left, v2 for right)")
    sp.add_argument("--variant", choices=VARIANTS + ("both",), default="both")
    sp.add_argument("--check", choices=("inverse", "braid", "all"), default="all")

    sp = sub.add_parser("dump", help="structure tables as JSON")
    common(sp)
    return p


def _strip(d: dict) -> dict:
    return {k: v for k, v in d.items() if k != "elapsed"}


def _summary_row(name: str, passed: bool, checked, failures) -> str:
    return f"{name:<34} {'PASS' if passed else 'FAIL':<5} {checked!s:>8} {failures!s:>8}"


def _cmd_verify(a, out):
    s = quantum_sl_plus(a.n)
    reports = verify_all(s, a.filtration)
    if a.braid_side:
        reports.append(check_multiplicativity(s, "L3", braid_side=True))
    return [r.to_dict() for r in reports]


def _cmd_nf(a, out):
    s = quantum_sl_plus(a.n)
    x = parse_element(a.expr, a.n)
    rs = RewriteSystem(abelianized(s) if a.mode == "symmetric" else s, a.mode)
    trace = [] if a.trace else None
    nf = rs.normal_form(x, a.strategy, trace=trace)
    if trace is not None:
        for step in trace:
            out.write(json.dumps(step) + "\n")
    out.write(render(nf) + "\n")
    return [{"check": "normal_form", "passed": True, "input": render(x),
             "mode": a.mode, "strategy": a.strategy, "normal_form": render(nf),
             "steps": len(trace) if trace is not None else None}]


def _cmd_pbw(a, out):
    s = quantum_sl_plus(a.n)
    modes = ("enveloping", "symmetric") if a.mode == "both" else (a.mode,)
    res = []
    for mode in modes:
        rs = RewriteSystem(abelianized(s) if mode == "symmetric" else s, mode)
        res.append(overlap_confluence(rs).to_dict())
        res.append(pbw_independence(rs, a.max_len).to_dict())
    return res


def _cmd_graded(a, out):
    s = quantum_sl_plus(a.n)
    rs = RewriteSystem(s)
    res = []
    conf = None
    if a.assume_confluent:
        res.append({"check": "confluence[enveloping]", "passed": True, "status": "assumed"})
    else:
        conf = overlap_confluence(rs)
        d = conf.to_dict()
        d["status"] = "certified" if conf.passed else "failed"
        res.append(d)
        if not conf.passed:
            return res
    levels = [omega_check(s, m, confluence=conf, assume_confluent=a.assume_confluent, rs=rs)
              for m in range(a.max_level + 1)]
    res.append({"check": "omega", "passed": all(l["passed"] for l in levels),
                "checked": len(levels), "failures": sum(not l["passed"] for l in levels),
                "levels": levels})
    res.append(filtration_product_check(s, a.max_level, rs=rs))
    if a.trials:
        res.append(zero_divisor_probe(s, a.deg, a.trials, a.seed, rs=rs))
    if a.multiplicativity:
        res.append(omega_multiplicativity(s, a.max_level, rs=rs))
    if a.dump_matrix:
        with open(a.dump_matrix, "w") as fh:
            for m in range(a.max_level + 1):
                rows, cols, mat = omega_matrix(s, m, rs=rs)
                fh.write(render_matrix(m, rows, cols, mat))
    return res


def _cmd_ybe(a, out):
    s = quantum_sl_plus(a.n)
    res = []
    if a.check in ("inverse", "all"):
        res.append(_strip(check_inverse(s)))
    if a.check in ("braid", "all"):
        variants = VARIANTS if a.variant == "both" else (a.variant,)
        for v in variants:
            key = a.space or ("v1" if v == "left" else "v2")
            space = SPACES[key]
            if space in ("V1", "V2"):
                space = build_V(s, space)
            res.append(_strip(braid_check(s, space, v)))
    return res


def _cmd_dump(a, out):
    return [dict(check="dump", passed=True, **structure_dump(quantum_sl_plus(a.n)))]


COMMANDS = {"verify": _cmd_verify, "nf": _cmd_nf, "pbw": _cmd_pbw,
            "graded": _cmd_graded, "ybe": _cmd_ybe, "dump": _cmd_dump}


def _name(c: dict) -> str:
    name = c.get("axiom") or c.get("check", "?")
    extra = c.get("space") or c.get("max_len")
    if c.get("variant"):
        extra = f"{extra},{c['variant']}"
    return f"{name}[{extra}]" if extra is not None else name


def make_report(a, checks: List[dict]) -> dict:
    config = {k: v for k, v in sorted(vars(a).items()) if k != "json"}
    return {"schema": SCHEMA, "tool": "qlie", "version": __version__,
            "command": a.command, "config": config, "checks": checks,
            "passed": all(c["passed"] for c in checks)}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except UsageError as e:
        err.write(f"qlie: usage error: {e}\n")
        return 2
    try:
        checks = COMMANDS[a.command](a, out)
    except ParseError as e:
        err.write(f"qlie: parse error: {e}\n")
        return 2
    report = make_report(a, checks)
    if a.command != "nf":
        out.write(f"{'check':<34} {'':<5} {'checked':>8} {'failures':>8}\n")
        for c in checks:
            out.write(_summary_row(_name(c), c["passed"], c.get("checked", ""),
                                   c.get("failures", "")) + "\n")
        out.write(f"overall: {'PASS' if report['passed'] else 'FAIL'}\n")
    if a.json:
        with open(a.json, "w") as fh:
            fh.write(dumps(report))
    return 0 if report["passed"] else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
