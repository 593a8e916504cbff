"""Batch command line: expand, verify, map, witness, audit, table, report.

Exit status: 0 success, 1 a check came out false, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, products
from .injection import (
    InjectionError,
    ResidueClassSpec,
    full_map,
    injectivity_audit,
    strictness_witness,
    theorem4_scan,
    verify_image_conditions,
)
from .partitions import Partition, enumerate_partitions, parse_partition
from .series import INF

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2
DEFAULT_N = 500
DEEP_N = 2000
SUITES = ("dissection", "jtp", "identities", "gg", "bounds", "signs", "monotone", "congruence", "asymptotics", "all")


class UsageError(Exception):
    pass


def _cap(N: int) -> int:
    if N < 0:
        raise UsageError(f"N must be non-negative, got {N}")
    cap = os.environ.get("STANLEY_MAX_N")
    if cap is not None and N > int(cap):
        raise UsageError(f"N={N} exceeds STANLEY_MAX_N={cap}")
    return N


def _parse_L(tok: str):
    try:
        return products._parse_L(tok)
    except ValueError:
        raise argparse.ArgumentTypeError(f"L must be a positive integer or 'inf', got {tok!r}")


def _spec(m, r, L) -> ResidueClassSpec:
    try:
        return ResidueClassSpec(m, r, L)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_expand(args, out) -> int:
    N = _cap(args.N)
    try:
        named = products.build(args.name, N)
    except (KeyError, ValueError) as exc:
        msg = f"unknown or malformed series {args.name!r}" if isinstance(exc, KeyError) else str(exc)
        listing = "\n".join(f"  {k:14s} {v}" for k, v in products.CATALOG.items())
        raise UsageError(f"{msg}\ncatalog:\n{listing}")
    if args.format == "json":
        out.write(json.dumps({"name": named.label, "N": N, "coeffs": [str(c) for c in named.series]}) + "\n")
    else:
        out.write(named.series.to_tsv())
    return EXIT_OK


def _suite_reports(suite: str, N: int):
    half = max(N // 2, 10)
    if suite in ("dissection", "all"):
        yield products.verify_dissection(N)
    if suite in ("jtp", "all"):
        yield from products.verify_jtp(N)
    if suite in ("identities", "all"):
        yield from products.derivation_identities(N)
    if suite in ("gg", "all"):
        yield products.verify_gg_factorization(N)
        yield products.verify_gollnitz_gordon(N)
    if suite in ("bounds", "all"):
        yield analysis.upper_bound_check(N)
        yield analysis.upper_bound_check(N, sharp=True)
        yield analysis.induction_check_eq50(N)
        yield analysis.elementary_inequality_check(10.0, 1000)
    if suite in ("signs", "all"):
        yield analysis.sign_pattern_check(max(N, 4))
        yield analysis.swisher_ratio_check(max(N, 20))
    if suite in ("monotone", "all"):
        yield analysis.monotonicity_check(max(N, 2))
    if suite in ("congruence", "all"):
        yield analysis.congruence_check(N)
    if suite in ("asymptotics", "all"):
        yield analysis.ratio_convergence(max(half, 10))
        yield analysis.meinardus_compare(max(half, 10))
        yield analysis.conjecture_scan(max(half, 2))


def cmd_verify(args, out) -> int:
    N = args.N if args.N is not None else (DEEP_N if args.deep else DEFAULT_N)
    N = _cap(N)
    ok = True
    for rep in _suite_reports(args.suite, N):
        ok &= rep.passed
        if args.format == "json":
            out.write(rep.to_json() + "\n")
        else:
            out.write(rep.summary() + "\n")
            for idx, detail in rep.violations:
                out.write(f"  violation\t{idx}\t{detail}\n")
            for idx, detail in rep.findings:
                out.write(f"  finding\t{idx}\t{detail}\n")
    return EXIT_OK if ok else EXIT_FALSE


def _read_partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_map(args, out) -> int:
    spec = _spec(args.m, args.r, args.L)
    pi = _read_partition(args.partition)
    try:
        _, trace = full_map(pi, spec)
    except InjectionError as exc:
        raise UsageError(f"{pi} is not in the class {spec}: {exc}")
    out.write(json.dumps(trace.to_dict()) + "\n")
    return EXIT_OK


def cmd_witness(args, out) -> int:
    spec = _spec(8, 3, args.L)
    n = _cap(args.n)
    w = strictness_witness(n, spec)
    if w is None:
        out.write(json.dumps({"n": n, "witness": None}) + "\n")
        return EXIT_OK
    cond = verify_image_conditions(w, spec)
    out.write(json.dumps({"n": n, "witness": str(w), "condition": cond}) + "\n")
    return EXIT_OK if cond is None else EXIT_FALSE


def cmd_audit(args, out) -> int:
    spec = _spec(args.m, args.r, args.L)
    n_max = _cap(args.n_max)
    ok = True
    if 1 < spec.r < spec.m - 1:
        scan = theorem4_scan(spec.m, spec.r, spec.L, n_max)
        ok &= scan.passed
        out.write(scan.to_tsv())
    if spec.theorem5_applies:
        rep = injectivity_audit(n_max, spec)
        ok &= rep.passed
        out.write(rep.to_tsv() if args.table else rep.summary() + "\n")
        if not args.table:
            for idx, detail in rep.violations:
                out.write(f"violation\t{idx}\t{detail}\n")
    else:
        out.write(f"note\tinjection audit skipped: {spec.lo} and {spec.hi}, one divides the other\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_table(args, out) -> int:
    """Domain partitions of n with their images, then the codomain partitions outside the image."""
    spec = _spec(args.m, args.r, args.L)
    n = _cap(args.n)
    images = []
    for pi in enumerate_partitions(n, spec.domain_constraint()):
        image, trace = full_map(pi, spec)
        images.append(image)
        out.write(f"{pi}\t->\t{image}\tcase {trace.case_label}\t({trace.condition})\n")
    seen = {im.parts for im in images}
    for p in enumerate_partitions(n, spec.codomain_constraint()):
        if p.parts not in seen:
            out.write(f"\t\t{p}\n")
    return EXIT_OK


def cmd_report(args, out) -> int:
    N = _cap(args.N)
    reps = [
        analysis.ratio_convergence(N),
        analysis.meinardus_compare(N),
        analysis.conjecture_scan(N),
        analysis.swisher_ratio_check(max(N, 20)),
        analysis.hardy_ramanujan_table(N),
    ]
    stride = max(1, args.stride)
    ok = True
    for rep in reps:
        ok &= rep.passed
        rep.table = [row for row in rep.table if row[0] % stride == 0 or row[0] == N]
        out.write(rep.to_json() + "\n" if args.format == "json" else rep.to_tsv() + "\n")
    return EXIT_OK if ok else EXIT_FALSE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stanley", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="print the coefficients of a catalog series")
    e.add_argument("name", help="stanley, andrews_p0, F0, F1, G0, G1, class(m,r,L), diff(m,r,L), jtp(s,t)")
    e.add_argument("N", type=int)
    e.add_argument("--format", choices=("tsv", "json"), default="tsv")
    e.set_defaults(fn=cmd_expand)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("N", type=int, nargs="?")
    v.add_argument("--deep", action="store_true", help=f"default N={DEEP_N} instead of {DEFAULT_N}")
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")
    v.set_defaults(fn=cmd_verify)

    m = sub.add_parser("map", help="apply the injection to one partition and print its trace")
    m.add_argument("partition", help='e.g. "85,53,45,45,43,19,3" or "7^2,1^4"')
    m.add_argument("m", type=int)
    m.add_argument("r", type=int)
    m.add_argument("L", type=_parse_L)
    m.set_defaults(fn=cmd_map)

    w = sub.add_parser("witness", help="strictness witness for modulus 8, residue 3")
    w.add_argument("n", type=int)
    w.add_argument("--L", type=_parse_L, default=INF)
    w.set_defaults(fn=cmd_witness)

    a = sub.add_parser("audit", help="exhaustive injectivity audit plus the nonnegativity scan")
    a.add_argument("m", type=int)
    a.add_argument("r", type=int)
    a.add_argument("L", type=_parse_L)
    a.add_argument("n_max", type=int)
    a.add_argument("--table", action="store_true", help="print the per-n count table")
    a.set_defaults(fn=cmd_audit)

    t = sub.add_parser("table", help="list the map on all partitions of n (default: m=8, r=3, L=3)")
    t.add_argument("n", type=int)
    t.add_argument("--m", type=int, default=8)
    t.add_argument("--r", type=int, default=3)
    t.add_argument("--L", type=_parse_L, default=3)
    t.set_defaults(fn=cmd_table)

    r = sub.add_parser("report", help="asymptotic and conjecture tables")
    r.add_argument("N", type=int, nargs="?", default=DEFAULT_N)
    r.add_argument("--stride", type=int, default=50, help="print every stride-th table row")
    r.add_argument("--format", choices=("tsv", "json"), default="tsv")
    r.set_defaults(fn=cmd_report)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except UsageError as exc:
        sys.stderr.write(f"stanley {args.verb}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
