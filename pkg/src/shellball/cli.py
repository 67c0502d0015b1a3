"""Command-line entry point and machine-readable reporting.

Commands take key=value parameters, e.g.::

    shellball generate minor m=2 n=3 r=1 --out delta.cx
    shellball check minor m=2 n=3 r=1 --format json
    shellball check polar n=3 t=2
    shellball check --file delta.cx
    shellball dual m=3 n=4
    shellball corners m=6 n=7 r=3
    shellball cyclic n=8 d=5

Exit codes: 0 all verdicts PASS, 1 any FAIL, 2 usage or I/O error,
3 verdicts INAPPLICABLE only.  Reports are byte-stable for fixed inputs:
canonical JSON key order, sorted lists, and every numeric field an exact
integer or a rational rendered as "p/q".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bounds as bnd
from . import complexes as cxmod
from . import duality, paths, polarization
from .homology import DEFAULT_VERTEX_CAP

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3


class UsageError(Exception):
    pass


def _params(tokens: list[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _int_param(kv: dict[str, str], key: str) -> int:
    if key not in kv:
        raise UsageError(f"missing parameter {key}=<int>")
    try:
        return int(kv[key])
    except ValueError:
        raise UsageError(f"parameter {key} must be an integer, got {kv[key]!r}")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rat(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _build_instance(kind: str, kv: dict[str, str], max_facets: int):
    """Returns (complex, shelling order, instance name)."""
    if kind == "minor":
        m, n = _int_param(kv, "m"), _int_param(kv, "n")
        if "sigma" in kv:
            spec = paths.MinorSpec.parse(f"m={m} n={n} sigma={kv['sigma']}")
            name = f"minor m={m} n={n} sigma={kv['sigma']}"
        else:
            r = _int_param(kv, "r")
            if not 1 <= r <= m - 1:
                raise UsageError(f"need 1 <= r <= m-1, got r={r}, m={m}")
            spec = paths.MinorSpec.diagonal(m, n, r)
            name = f"minor m={m} n={n} r={r}"
        try:
            cx, order = paths.path_complex(spec, max_facets=max_facets)
        except ValueError as exc:
            raise UsageError(str(exc))
        return cx, order, name
    if kind == "polar":
        n, t = _int_param(kv, "n"), _int_param(kv, "t")
        try:
            cx, order = polarization.power_ideal_complex(n, t)
        except ValueError as exc:
            raise UsageError(str(exc))
        return cx, order, f"polar n={n} t={t}"
    raise UsageError(f"unknown kind {kind!r} (want minor or polar)")


def cmd_generate(args) -> int:
    kv = _params(args.params)
    cx, order, name = _build_instance(args.kind, kv, args.max_facets)
    out_path = args.out or (name.replace(" ", "_").replace("=", "") + ".cx")
    cxmod.write_complex_file(cx, out_path)
    meta = {
        "instance": name,
        "file": out_path,
        "n": cx.n,
        "facets": len(cx.facets),
        "dim": cx.dim,
        "shelling_order": order,
    }
    # sidecar with the certified facet order; `check --file` picks it up
    with open(out_path + ".meta.json", "w", encoding="utf-8") as fh:
        fh.write(canonical_json(meta))
    sys.stdout.write(canonical_json(meta))
    return EXIT_PASS


def _report_text(rep) -> str:
    lines = [
        f"instance: {rep.instance}",
        f"n={rep.n} d={rep.d} m={rep.m} e={rep.e}",
        f"h: {list(rep.h)}",
        f"boundary h: {list(rep.boundary_h) if rep.boundary_h is not None else None}",
        f"closed-form bounds: L={_rat(rep.L)} U={_rat(rep.U)}",
        f"betti bounds: L={_rat(rep.L_betti)} U={_rat(rep.U_betti)}",
        f"A1={rep.A1} A2={rep.A2} shelling={rep.shelling_pass} ball={rep.ball_pass}",
        f"verdict: {rep.verdict}",
    ]
    if rep.reasons:
        lines.append("reasons: " + "; ".join(rep.reasons))
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            cx, order = cxmod.complex_from_text_with_order(fh.read())
        meta_path = args.file + ".meta.json"
        if os.path.exists(meta_path):
            with open(meta_path, "r", encoding="utf-8") as fh:
                recorded = json.load(fh).get("shelling_order")
            if recorded is not None and sorted(recorded) == list(range(len(cx.facets))):
                order = recorded
        name = f"file {args.file}"
        rep = bnd.check_conjecture(
            cx, order, field_char=args.field, max_vertices=args.max_vertices, instance=name
        )
    else:
        if not args.kind:
            raise UsageError("check needs a kind (minor|polar) or --file")
        kv = _params(args.params)
        cx, order, name = _build_instance(args.kind, kv, args.max_facets)
        rep = bnd.check_conjecture(
            cx, order, field_char=args.field, max_vertices=args.max_vertices, instance=name
        )
    if args.format == "json":
        payload = rep.to_json_dict()
        payload["seed"] = args.seed
        _emit(canonical_json(payload), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=bnd.CSV_FIELDS)
        writer.writeheader()
        writer.writerow(rep.csv_row())
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_report_text(rep), args.out)
    if rep.verdict == "FAIL":
        return EXIT_FAIL
    if rep.verdict == "INAPPLICABLE":
        return EXIT_INAPPLICABLE
    return EXIT_PASS


def cmd_dual(args) -> int:
    kv = _params(args.params)
    m, n = _int_param(kv, "m"), _int_param(kv, "n")
    try:
        verdict = duality.verify_dual_theorem(m, n)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(canonical_json(verdict.to_json_dict()), args.out)
    return EXIT_PASS if verdict.passed else EXIT_FAIL


def cmd_corners(args) -> int:
    kv = _params(args.params)
    m, n, r = _int_param(kv, "m"), _int_param(kv, "n"), _int_param(kv, "r")
    try:
        facets = paths.enumerate_facets(paths.MinorSpec.diagonal(m, n, r), args.max_facets)
        spectrum = paths.corner_spectrum(m, n, r, facets)
        constructions = {
            t: sorted(paths.construct_nonflippable(m, n, r, t).corners)
            for t in sorted(spectrum)
        }
    except ValueError as exc:
        raise UsageError(str(exc))
    expected = set(range(r, r * (m - r) + 1))
    payload = {
        "kind": "corner-spectrum",
        "m": m,
        "n": n,
        "r": r,
        "facets": len(facets),
        "spectrum": sorted(spectrum),
        "expected": sorted(expected),
        "matches": spectrum == expected,
        "constructions": {str(t): [list(p) for p in pts] for t, pts in constructions.items()},
    }
    _emit(canonical_json(payload), args.out)
    return EXIT_PASS if spectrum == expected else EXIT_FAIL


def cmd_cyclic(args) -> int:
    kv = _params(args.params)
    n, d = _int_param(kv, "n"), _int_param(kv, "d")
    try:
        h = bnd.cyclic_h(n, d)
        mult = sum(h)
        ms = bnd.cyclic_max_shifts(n, d)
    except ValueError as exc:
        raise UsageError(str(exc))
    from math import factorial, prod

    upper = Fraction(prod(ms), factorial(n - d + 1))
    even_case = (d - 1) % 2 == 0
    payload = {
        "kind": "cyclic-comparator",
        "n": n,
        "d": d,
        "h": list(h),
        "multiplicity": mult,
        "max_shifts": ms,
        "shift_bound": _rat(upper),
        "bound_holds": mult <= upper,
        "equality_expected": even_case,
        "equality": mult == upper,
    }
    _emit(canonical_json(payload), args.out)
    return EXIT_PASS if mult <= upper and (not even_case or mult == upper) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shellball", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_field=False):
        p.add_argument("--out", default=None, help="write the report/file here")
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")
        p.add_argument("--max-vertices", type=int, default=DEFAULT_VERTEX_CAP)
        p.add_argument("--max-facets", type=int, default=paths.DEFAULT_FACET_CAP)
        p.add_argument("--seed", type=int, default=0)
        if with_field:
            p.add_argument("--field", type=int, default=0, help="0 or a prime")

    g = sub.add_parser("generate", help="write a complex file for a minor or polar instance")
    g.add_argument("kind", choices=["minor", "polar"])
    g.add_argument("params", nargs="*")
    common(g)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="run the multiplicity-bound pipeline")
    c.add_argument("kind", nargs="?", choices=["minor", "polar"])
    c.add_argument("params", nargs="*")
    c.add_argument("--file", default=None, help="read the complex from a file instead")
    common(c, with_field=True)
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("dual", help="verify the dual-matrix cover identity")
    d.add_argument("params", nargs="*")
    common(d)
    d.set_defaults(func=cmd_dual)

    co = sub.add_parser("corners", help="corner spectrum of non-flippable facets")
    co.add_argument("params", nargs="*")
    common(co)
    co.set_defaults(func=cmd_corners)

    cy = sub.add_parser("cyclic", help="cyclic-polytope h-vector and shift bound")
    cy.add_argument("params", nargs="*")
    common(cy)
    cy.set_defaults(func=cmd_cyclic)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
