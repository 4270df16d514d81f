"""Command line driver: verification suites, q-series, Miura coefficients, brackets and plane partitions."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from .dsl import ParseError, parse_expression

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .suites import SUITES, Config, run_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite '{args.suite}'; choose from {', '.join(SUITES)}")
    cfg = Config(n=args.n, pmax=args.pmax, order=args.order, seed=args.seed)
    t0 = time.perf_counter()
    checks = run_suite(args.suite, cfg)
    ms = 0 if args.no_timing else int(round((time.perf_counter() - t0) * 1000))
    failed = [c for c in checks if not c.passed]
    if args.json:
        report = {"suite": args.suite, "config": cfg.to_json(), "checks": [c.to_json() for c in checks], "duration_ms": ms}
        print(json.dumps(report, indent=2))
    else:
        print(f"suite {args.suite} (seed {cfg.seed})")
        for c in checks:
            print(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}")
            if not c.passed and c.residual:
                print(f"        residual: {c.residual}")
        tail = "" if args.no_timing else f" in {ms} ms"
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed{tail}")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

SERIES_NAMES = ["center-character", "pit-gf", "macmahon", "gl32-character", "false-theta"]


def cmd_series(args) -> int:
    from . import qcombi

    N = args.order
    if N < 0:
        raise UsageError("--order must be non-negative")
    if args.name == "center-character":
        s = qcombi.center_character(args.n or 1, N)
    elif args.name == "pit-gf":
        m = args.m or 1
        n = args.n or 1
        if not 1 <= m <= n:
            raise UsageError("pit-gf needs 1 <= m <= n")
        s = qcombi.pit_gf_formula(m, n, N)
    elif args.name == "macmahon":
        s = qcombi.macmahon(N)
    elif args.name == "gl32-character":
        s = qcombi.gl32_closed_character(N)
    elif args.name == "false-theta":
        s = qcombi.false_theta(args.n or 0, N)
    else:
        raise UsageError(f"unknown series '{args.name}'; choose from {', '.join(SERIES_NAMES)}")
    out = s.to_json(args.name)
    if args.json:
        print(json.dumps(out))
    else:
        print(s)
    return EXIT_OK


# ---------------------------------------------------------------------------
# miura
# ---------------------------------------------------------------------------

def cmd_miura(args) -> int:
    from .miura import critical_specialize, w_coefficients

    if args.n < 1 or args.pmax < 1:
        raise UsageError("--n and --pmax must be positive")
    ws = w_coefficients(args.n, args.pmax)
    if args.critical:
        ws = [critical_specialize(w) for w in ws]
    if args.json:
        print(json.dumps({f"W_{p}": str(w) for p, w in enumerate(ws, 1)}, indent=2))
    else:
        for p, w in enumerate(ws, 1):
            print(f"W_{p} = {w}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bracket
# ---------------------------------------------------------------------------

def _int_list(text: str, count: int, label: str) -> List[int]:
    try:
        vals = [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise UsageError(f"bad parameters '{text}' for preset {label}")
    if len(vals) != count or any(v < 1 for v in vals):
        raise UsageError(f"preset {label} needs {count} positive integer parameter(s)")
    return vals


def build_preset(name: str):
    """An Algebra or FockSpace from a preset name such as heis:1, coset:2, gl:2,1, ux:1, wakimoto."""
    from . import paperlib
    from .miura import critical_affine
    from .vacore import affine_gl, bc_pairs, betagamma_pairs, build_algebra, heisenberg

    key, _, params = name.partition(":")
    if key == "heis":
        (r,) = _int_list(params, 1, key)
        K = paperlib.level_K()
        names = ["t"] if r == 1 else [f"t{i}" for i in range(1, r + 1)]
        return build_algebra(heisenberg([[K if i == j else 0 for j in range(r)] for i in range(r)], names))
    if key == "coset":
        (n,) = _int_list(params, 1, key)
        return paperlib.coset_algebra(n)
    if key == "ux":
        (n,) = _int_list(params, 1, key)
        return paperlib.ux_space(n)
    if key == "t":
        (n,) = _int_list(params, 1, key)
        return paperlib.t_space(n)
    if key == "gl":
        m, n = _int_list(params, 2, key)
        return build_algebra(affine_gl(m, n, paperlib.level_K()))
    if key == "gl-crit":
        m, n = _int_list(params, 2, key)
        return critical_affine(m, n)
    if key == "bc":
        (r,) = _int_list(params, 1, key)
        return build_algebra(bc_pairs(r))
    if key == "bg":
        (r,) = _int_list(params, 1, key)
        return build_algebra(betagamma_pairs(r))
    if key == "wakimoto" and not params:
        return paperlib.wakimoto_space()
    if key == "gl32" and not params:
        return build_algebra(paperlib.gl32_presentation())
    if key == "gl32-target" and not params:
        return paperlib.gl32_target()
    raise UsageError(f"unknown algebra preset '{name}'")


PRESETS = ["heis:r", "coset:n", "t:n", "ux:n", "gl:m,n", "gl-crit:m,n", "bc:r", "bg:r", "wakimoto", "gl32", "gl32-target"]


def cmd_bracket(args) -> int:
    ctx = build_preset(args.algebra)
    a = parse_expression(args.lhs, ctx)
    b = parse_expression(args.rhs, ctx)
    br = ctx.lambda_bracket(a, b)
    if args.json:
        print(json.dumps({str(j): str(br.coefficient(j)) for j in sorted(_powers(br))}))
    else:
        print(br)
    return EXIT_OK


def _powers(br):
    return br.powers() if hasattr(br, "powers") else [j for j in br.coeffs if not br.coefficient(j).is_zero()]


# ---------------------------------------------------------------------------
# pp, list
# ---------------------------------------------------------------------------

def cmd_pp(args) -> int:
    from .planepart import enumerate_counts

    pit = None
    if args.pit:
        try:
            i, j = (int(x) for x in args.pit.split(","))
        except ValueError:
            raise UsageError(f"--pit expects i,j but got '{args.pit}'")
        if i < 1 or j < 1:
            raise UsageError("pit coordinates start at 1")
        pit = (i, j)
    if args.max_weight < 0:
        raise UsageError("--max-weight must be non-negative")
    print(json.dumps(enumerate_counts(args.max_weight, pit)))
    return EXIT_OK


def cmd_list(args) -> int:
    from .paperlib import CATALOG
    from .suites import SUITE_CRITERIA

    print("constructions:")
    for name, entry in CATALOG.items():
        print(f"  {name:20s} {entry.anchor}")
    print("suites:")
    for name, crit in SUITE_CRITERIA.items():
        print(f"  {name:20s} acceptance criteria {', '.join(map(str, crit))}")
    print("bracket presets:")
    print("  " + ", ".join(PRESETS))
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superw-kit", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--n", type=int)
    v.add_argument("--pmax", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.add_argument("--no-timing", action="store_true", help="report duration_ms as 0 for byte-identical output")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="print a q-series")
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_series)

    m = sub.add_parser("miura", help="print the Miura coefficients W_p")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--pmax", type=int, required=True)
    m.add_argument("--critical", action="store_true")
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_miura)

    b = sub.add_parser("bracket", help="lambda-bracket of two expressions")
    b.add_argument("--algebra", required=True)
    b.add_argument("--lhs", required=True)
    b.add_argument("--rhs", required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bracket)

    q = sub.add_parser("pp", help="plane partition counts by weight")
    q.add_argument("--pit")
    q.add_argument("--max-weight", type=int, required=True)
    q.set_defaults(func=cmd_pp)

    sub.add_parser("list", help="catalog of constructions and suites").set_defaults(func=cmd_list)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
