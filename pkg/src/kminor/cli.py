"""Command line interface: ``kminor <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 bad arguments or unparsable
input, 3 build cap exceeded, 4 construction engine failure.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds, builder, certfile
from .bounds import Construction
from .exceptions import BuildCapExceeded, CertificateParseError, KMinorError
from .kneser import Params
from .subsets import MAX_N
from .verifier import verify, verify_odd_witness

CONSTRUCTION_FLAGS = {
    "0": Construction.CLIQUE,
    "0b": Construction.K2ODD,
    "1": Construction.C1,
    "2": Construction.C2,
    "3": Construction.C3,
}


class UsageError(Exception):
    pass


def _params(n: int, k: int) -> Params:
    try:
        return Params(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_chi(args) -> int:
    print(bounds.chi(_params(args.n, args.k)))
    return 0


def cmd_bound(args) -> int:
    report = bounds.best_bound(_params(args.n, args.k))
    if args.header:
        print(bounds.TSV_HEADER)
    print(report.tsv())
    return 0


def table_mismatches(golden=bounds.TABLE1_GOLDEN) -> list[str]:
    computed = bounds.table1()
    bad = []
    if len(computed) != len(golden):
        bad.append(f"row count {len(computed)} != {len(golden)}")
    for (n, k, t1, chi), (gn, gk, gt1, gchi) in zip(computed, golden):
        if (n, k) != (gn, gk):
            bad.append(f"({n},{k}) out of order with golden ({gn},{gk})")
        elif (t1, chi) != (gt1, gchi):
            bad.append(f"({n},{k}) t1={t1} chi={chi}, golden t1={gt1} chi={gchi}")
    return bad


def cmd_table(args) -> int:
    golden = {(n, k): (t1, chi) for n, k, t1, chi in bounds.TABLE1_GOLDEN}
    print("n\tk\tt1\tchi\tstatus")
    for n, k, t1, chi in bounds.table1():
        status = "match" if golden.get((n, k)) == (t1, chi) else "MISMATCH"
        print(f"{n}\t{k}\t{t1}\t{chi}\t{status}")
    bad = table_mismatches()
    if bad:
        print(f"{len(bad)} row(s) differ from the golden table:", file=sys.stderr)
        for line in bad:
            print(f"  {line}", file=sys.stderr)
        return 1
    return 0


def cmd_build(args) -> int:
    p = _params(args.n, args.k)
    if p.n > MAX_N:
        raise UsageError(f"certificates need n <= {MAX_N}")
    try:
        if args.construction == "auto":
            cert = builder.build_best(p, cap=args.cap)
        else:
            cert = builder.build(p, CONSTRUCTION_FLAGS[args.construction], cap=args.cap)
    except BuildCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (KMinorError, ValueError, AssertionError) as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 4
    text = certfile.serialize(cert)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {args.out}: n={p.n} k={p.k} t={cert.claimed_t}")
    return 0


def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
        cert = certfile.parse(text)
    except (OSError, UnicodeDecodeError, CertificateParseError) as exc:
        print(f"parse error: {exc}")
        print("FAIL parse")
        return 2
    report = verify(cert)
    lines = report.text().splitlines()
    print("\n".join(lines[:-1]))
    valid = report.valid
    if valid:
        odd = verify_odd_witness(cert, report)
        print(f"check odd-witness: {'ok' if odd else 'FAILED'}")
        valid = odd
    print(("PASS" if valid else "FAIL") + f" t={report.t}")
    return 0 if valid else 1


def _sweep_row(nk: tuple[int, int]) -> tuple[int, int, int, int, str]:
    n, k = nk
    r = bounds.best_bound(Params(n, k))
    return n, k, r.chi, r.best, r.chosen_construction.value


def _pairs(k_max: int, n_max: int) -> list[tuple[int, int]]:
    return [(n, k) for k in range(2, k_max + 1) for n in range(2 * k, n_max + 1)]


def cmd_sweep(args) -> int:
    pairs = _pairs(args.k_max, args.n_max)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, pairs, chunksize=16))
    else:
        rows = [_sweep_row(nk) for nk in pairs]
    failures = 0
    for n, k, chi, best, construction in rows:
        ok = best >= chi
        failures += not ok
        print(f"{n}\t{k}\t{chi}\t{best}\t{construction}\t{'PASS' if ok else 'FAIL'}")
    print(f"{len(rows) - failures}/{len(rows)} pairs with best >= chi", file=sys.stderr)
    return 0 if failures == 0 else 1


def audit_rows(k_max: int, n_max: int):
    for k in range(2, k_max + 1):
        for n in range(2 * k, n_max + 1):
            p = Params(n, k)
            tag = bounds.lemma_case(p)
            chi = bounds.chi(p)
            value = None if tag == "Uncovered" else bounds.case_value(p, tag)
            yield n, k, tag, value, chi


def cmd_audit(args) -> int:
    bad = 0
    for n, k, tag, value, chi in audit_rows(args.k_max, args.n_max):
        ok = value is not None and value >= chi
        bad += not ok
        shown = "" if value is None else value
        print(f"{n}\t{k}\t{tag}\t{shown}\t{chi}\t{'PASS' if ok else 'FAIL'}")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kminor",
        description="Strongly 1-shallow complete minors in complements of Kneser graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("chi", help="print the chromatic number")
    nk(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("bound", help="print the bound report as a TSV row")
    nk(sp)
    sp.add_argument("--header", action="store_true")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("table", help="recompute the table of uncovered pairs")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("build", help="write a minor certificate")
    nk(sp)
    sp.add_argument("--construction", choices=["auto", *CONSTRUCTION_FLAGS], default="auto")
    sp.add_argument("-o", "--out", required=True, help="output path, or - for stdout")
    sp.add_argument("--cap", type=int, default=None, help="override KMINOR_BUILD_CAP")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="verify a certificate file")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="check best >= chi over a range of (n, k)")
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("audit", help="tag each (n, k) with the lemma covering it")
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=MAX_N)
    sp.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kminor {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
