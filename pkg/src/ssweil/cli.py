"""``ssweil`` command line: enumeration, census, Psi polynomials, checks."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .census import count, exists_dimension, gap_dimensions, Verdict
from .errors import SupersingularError
from .htclassify import IsogenyClassRecord, degree_identity_holds, enumerate_classes
from .numthy import cyclotomic, inverse_phi
from .oracle import is_supersingular_exact, is_weil_structured, root_modulus_check
from .polyarith import render
from .psipoly import psi, psi_two

CSV_FIELDS = ["p", "n", "q", "g", "case", "param", "variant", "e", "weil_coeffs", "char_coeffs"]

_VERDICT_NOTES = {
    Verdict.EXISTS: "Exists",
    Verdict.NOT_EXISTS: "NotExists",
    Verdict.EVEN_ONLY: "ExistsEvenOnly-Unknown-Odd (exists over some F_{p^n} with n even; odd n not settled)",
}


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def describe(rec: IsogenyClassRecord) -> str:
    label = f"m={rec.param}" if rec.n % 2 == 0 else f"t={rec.param}, q'={rec.field.signed_q}"
    if rec.sign_variant:
        label += f", {rec.sign_variant}"
    poly = render(rec.weil_poly)
    if rec.e > 1:
        poly = f"({poly})^{rec.e}"
    return f"{rec.case_tag}[{label}] {poly}"


def _emit_records(records: list[IsogenyClassRecord], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for rec in records:
            row = rec.to_json()
            row["weil_coeffs"] = ";".join(row["weil_coeffs"])
            row["char_coeffs"] = ";".join(row["char_coeffs"])
            w.writerow(row)
    else:
        for rec in records:
            out.write(describe(rec) + "\n")


def summary_lines(p: int, n: int, max_g: int) -> list[str]:
    """Per-dimension listing in the style of the classification tables."""
    q = p**n
    lines = [f"q = {p}^{n} = {q}"]
    for g in range(1, max_g + 1):
        recs = enumerate_classes(p, n, g)
        lines.append(f"dimension {g}: {len(recs)} class{'es' if len(recs) != 1 else ''}")
        lines.extend(f"  {describe(r)}" for r in recs)
    return lines


def verify_records(records: list[IsogenyClassRecord], tol: float) -> list[tuple[IsogenyClassRecord, str]]:
    """(record, check name) for every failed oracle check; empty when all pass."""
    bad = []
    for rec in records:
        q = rec.q
        checks = {
            "degree identity": lambda: degree_identity_holds(rec),
            "Weil symmetry": lambda: is_weil_structured(rec.char_poly, q),
            "supersingularity": lambda: is_supersingular_exact(rec.weil_poly, q) is not None,
            "root modulus": lambda: root_modulus_check(rec.weil_poly, q, tol),
        }
        bad.extend((rec, name) for name, ok in checks.items() if not ok())
    return bad


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ssweil", description="Simple supersingular abelian varieties over F_q.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def field_args(sp, g_flag="--g"):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument(g_flag, type=_positive, required=True)

    sp = sub.add_parser("enumerate", help="list isogeny classes")
    field_args(sp)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")

    field_args(sub.add_parser("count", help="number of isogeny classes"))

    sp = sub.add_parser("exists", help="what is proven about dimension g")
    sp.add_argument("--g", type=_positive, required=True)

    sp = sub.add_parser("gaps", help="dimensions with no simple supersingular variety")
    sp.add_argument("--max", dest="max_g", type=int, required=True)

    sp = sub.add_parser("psi", help="render a Psi polynomial")
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--p", type=int)
    which.add_argument("--two", choices=["+", "-"])
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("cyclotomic", help="the m-th cyclotomic polynomial")
    sp.add_argument("--m", type=_positive, required=True)

    sp = sub.add_parser("inverse-phi", help="all m with phi(m) = k")
    sp.add_argument("--k", type=_positive, required=True)

    field_args(sub.add_parser("table", help="classes for dimensions 1..G"), "--max-g")

    sp = sub.add_parser("verify", help="run the oracle checks on an enumeration")
    field_args(sp)
    sp.add_argument("--tol", type=float, default=1e-6)
    return ap


def run(args, out) -> int:
    if args.cmd == "enumerate":
        _emit_records(enumerate_classes(args.p, args.n, args.g), args.format, out)
    elif args.cmd == "count":
        print(count(args.p, args.n, args.g), file=out)
    elif args.cmd == "exists":
        print(_VERDICT_NOTES[exists_dimension(args.g)], file=out)
    elif args.cmd == "gaps":
        for g in gap_dimensions(args.max_g):
            print(g, file=out)
    elif args.cmd == "psi":
        f = psi(args.p, args.t) if args.p is not None else psi_two(args.t, 1 if args.two == "+" else -1)
        print(f, file=out)
    elif args.cmd == "cyclotomic":
        print(render(cyclotomic(args.m)), file=out)
    elif args.cmd == "inverse-phi":
        print(" ".join(map(str, inverse_phi(args.k))), file=out)
    elif args.cmd == "table":
        print("\n".join(summary_lines(args.p, args.n, args.max_g)), file=out)
    elif args.cmd == "verify":
        recs = enumerate_classes(args.p, args.n, args.g)
        bad = verify_records(recs, args.tol)
        for rec, check in bad:
            print(f"FAIL {check}: {describe(rec)}", file=out)
        failed = {id(rec) for rec, _ in bad}
        print(f"{len(recs) - len(failed)}/{len(recs)} records passed", file=out)
        return 1 if bad else 0
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args, sys.stdout)
    except SupersingularError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
