"""Command line front end: verification suites, spectrum tables,
projector and box emission, classical-limit reports.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .actions import casimir_eigenvalue, casimir_left, pw_basis
from .algebra import AlgElem
from .bundles import Projector, make_ket
from .gauge import gauged_spectrum, verify_master_relation
from .hodge import HodgeParams, spectrum3
from .scalars import ScalarQ
from .sphere import sphere_spectrum
from .suites import SUITES, run_all, run_suite

USAGE_ERROR = 2


def _emit(payload, args) -> None:
    if getattr(args, "format", "json") == "csv":
        text = payload  # already rendered
    else:
        text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_half_integer(text: str, name: str) -> int:
    """Parse '2' or '3/2' into a doubled integer."""
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SystemExit(USAGE_ERROR)
    doubled = val * 2
    if doubled.denominator != 1:
        print(f"error: {name} must be a half-integer, got {text}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return int(doubled)


def _fmt_half(two_j: int) -> str:
    return str(two_j // 2) if two_j % 2 == 0 else f"{two_j}/2"


def cmd_verify(args) -> int:
    if args.suite == "all":
        reports = run_all(args.seed, args.samples)
    elif args.suite in SUITES:
        reports = [run_suite(args.suite, args.seed, args.samples)]
    else:
        print(f"error: unknown suite {args.suite!r}; choose from "
              f"{', '.join(SUITES)} or all", file=sys.stderr)
        return USAGE_ERROR
    payload = {"reports": [r.to_json() for r in reports],
               "ok": all(r.ok for r in reports)}
    _emit(payload, args)
    return 0 if payload["ok"] else 1


def _spectrum_rows(kind, n, two_j_max, s0, params):
    rows = []
    if kind == "sphere":
        if n != 0:
            print("error: the sphere spectrum lives at n=0", file=sys.stderr)
            raise SystemExit(USAGE_ERROR)
        two_j = 0
    else:
        two_j = abs(n)
    if two_j_max < two_j:
        print("error: jmax below the smallest admissible spin", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    while two_j <= two_j_max:
        lam = {"total": lambda: spectrum3(n, two_j, params),
               "sphere": lambda: sphere_spectrum(two_j, params),
               "gauged": lambda: gauged_spectrum(n, two_j, params)}[kind]()
        for l in range(two_j + 1):
            row = {"n": n, "J": _fmt_half(two_j), "l": l,
                   "lambda": str(lam)}
            if s0 is not None:
                row["lambda_at_q"] = str(lam.eval_at(s0))
            rows.append(row)
        two_j += 2
    return rows


def cmd_spectrum(args) -> int:
    two_j_max = _parse_half_integer(args.jmax, "jmax")
    s0 = Fraction(args.q) if args.q else None
    params = HodgeParams()
    try:
        rows = _spectrum_rows(args.kind, args.n, two_j_max, s0, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "csv":
        cols = ["n", "J", "l", "lambda"] + (["lambda_at_q"] if s0 is not None else [])
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(f'"{row[c]}"' if "," in str(row[c]) else str(row[c])
                                  for c in cols))
        _emit("\n".join(lines), args)
    else:
        _emit({"kind": args.kind, "rows": rows}, args)
    return 0


def cmd_projector(args) -> int:
    try:
        proj = Projector(args.n)
        ket = make_ket(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = {
        "n": args.n,
        "size": proj.size(),
        "entries": proj.to_json(),
        "checks": {
            "normalised": ket.braket() == AlgElem.one(),
            "idempotent": proj.is_idempotent(),
            "selfadjoint": proj.is_selfadjoint(),
            "coinvariant": proj.entries_coinvariant(),
        },
    }
    _emit(payload, args)
    return 0 if all(payload["checks"].values()) else 1


def cmd_gauged(args) -> int:
    two_j_max = _parse_half_integer(args.jmax, "jmax")
    params = HodgeParams()
    try:
        rows = _spectrum_rows("gauged", args.n, two_j_max, None, params)
        relation = verify_master_relation(args.n, two_j_max, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for row in relation:
        row["J"] = _fmt_half(row.pop("two_j"))
    payload = {"n": args.n, "jmax": _fmt_half(two_j_max), "rows": rows,
               "master_relation": relation,
               "ok": all(r["ok"] for r in relation)}
    _emit(payload, args)
    return 0 if payload["ok"] else 1


def cmd_peter_weyl(args) -> int:
    try:
        box = pw_basis(args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    lam = casimir_eigenvalue(args.p)
    ok_eig = all(casimir_left(w) == w.scale(lam) for row in box for w in row)
    ok_charge = all(w.winding() == args.p - 2 * t
                    for t, row in enumerate(box) for w in row)
    payload = {
        "p": args.p,
        "box": [[w.to_json() for w in row] for row in box],
        "casimir_eigenvalue": str(lam),
        "checks": {"casimir": ok_eig, "charges": ok_charge},
    }
    _emit(payload, args)
    return 0 if ok_eig and ok_charge else 1


_CLASSICAL_CHECKS = {
    "structure-constants": ("cla-01", "cla-02"),
    "spectra": ("cla-04",),
    "calculus": ("cla-03",),
}


def cmd_classical(args) -> int:
    prefixes = _CLASSICAL_CHECKS.get(args.check)
    if prefixes is None:
        print(f"error: unknown check {args.check!r}; choose from "
              f"{', '.join(_CLASSICAL_CHECKS)}", file=sys.stderr)
        return USAGE_ERROR
    report = run_suite("classical", args.seed, args.samples)
    items = [c.to_json() for c in report.checks
             if any(c.check_id.startswith(p) for p in prefixes)]
    payload = {"check": args.check, "items": items,
               "ok": all(i["ok"] for i in items)}
    _emit(payload, args)
    return 0 if payload["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhopf",
        description="Exact symbolic verification of the quantum Hopf bundle "
                    "and its Hodge/Laplacian structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report to a file")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=30)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("spectrum", help="emit an exact spectrum table")
    p.add_argument("--kind", choices=("total", "sphere", "gauged"),
                   default="total")
    p.add_argument("--n", type=int, default=0, help="circle charge")
    p.add_argument("--jmax", default="3", help="largest spin, e.g. 3 or 7/2")
    p.add_argument("--q", default=None,
                   help="evaluate numerically at s0 = sqrt(q), an exact rational")
    common(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("projector", help="emit a line-bundle projector")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_projector)

    p = sub.add_parser("gauged", help="gauged spectrum and the master relation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jmax", default="3")
    common(p)
    p.set_defaults(fn=cmd_gauged)

    p = sub.add_parser("peter-weyl", help="emit a representation box")
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_peter_weyl)

    p = sub.add_parser("classical", help="q = 1 limit reports")
    p.add_argument("--check", default="spectra",
                   help="structure-constants, spectra or calculus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)
    common(p)
    p.set_defaults(fn=cmd_classical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
