"""Command line: verify a scenario, sweep the corpus, list symmetric idempotents."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .checks import CHECK_NAMES, EXIT_CAP, EXIT_FAILED, EXIT_USAGE, build_report, emit_report
from .corpus import corpus_generate, run_corpus
from .cwgroup import idempotent_report
from .errors import (
    AssumptionViolated, CapExceeded, GCodesError, InvalidInvolution, InvalidPermutation,
    ParseError, UnknownCheck,
)
from .ring import Involution, RingSpec, validate_involution
from .scenario import parse_scenario

USAGE_ERRORS = (ParseError, AssumptionViolated, UnknownCheck, InvalidPermutation, InvalidInvolution)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gcodes", description=__doc__)
    p.add_argument("--version", action="version", version=f"gcodes {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run checks on one scenario file")
    v.add_argument("--scenario", required=True, type=Path)
    v.add_argument("--check", action="append", metavar="NAME",
                   help=f"check to run (repeatable): {', '.join(CHECK_NAMES)} or all; "
                        "default: the scenario's own list")
    v.add_argument("--emit", choices=("json", "text"), default="json")
    v.add_argument("--timings", action="store_true", help="append timings to text output")
    v.add_argument("--cap-group", type=int, metavar="N")
    v.add_argument("--cap-ambient", type=int, metavar="N")
    v.add_argument("-o", "--output", type=Path, help="write the report here instead of stdout")

    c = sub.add_parser("corpus", help="generate (and optionally run) the small-case corpus")
    c.add_argument("--modulus-list", type=_int_list, default=[2, 3, 4], metavar="M,M,...")
    c.add_argument("--max-n", type=int, default=4)
    c.add_argument("--run", action="store_true", help="run every scenario and print a summary")
    c.add_argument("--write-dir", type=Path, help="write each scenario as a JSON file here")

    i = sub.add_parser("idempotents", help="list symmetric idempotents of Z/m")
    i.add_argument("--modulus", type=int, required=True)
    i.add_argument("--involution", type=_int_list, help="table of J, default identity")
    return p


def _verify(args) -> int:
    t0 = time.perf_counter()
    overrides = {}
    if args.cap_group is not None:
        overrides["group"] = args.cap_group
    if args.cap_ambient is not None:
        overrides["ambient"] = args.cap_ambient
    s = parse_scenario(args.scenario, overrides)
    t1 = time.perf_counter()
    report = build_report(s, args.check)
    t2 = time.perf_counter()
    timings = {"load": t1 - t0, "checks": t2 - t1} if args.timings else None
    text = emit_report(report, args.emit, timings)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return report["summary"]["exit_status"]


def _corpus(args) -> int:
    scenarios = corpus_generate(args.modulus_list, args.max_n)
    if args.write_dir:
        args.write_dir.mkdir(parents=True, exist_ok=True)
        for d in scenarios:
            (args.write_dir / f"{d['name']}.json").write_text(json.dumps(d, indent=2, sort_keys=True) + "\n")
    if not args.run:
        print(f"{len(scenarios)} scenarios")
        for d in scenarios:
            print(f"  {d['name']}  codes={len(d['codes'])}  checks={','.join(d['checks'])}")
        return 0
    res = run_corpus(scenarios)
    for row in res["scenarios"]:
        counts = ", ".join(f"{k}={v}" for k, v in row["counts"].items() if v)
        print(f"  {row['name']:<16} codes={row['codes']:<4} {counts}")
        for f in row["failed"]:
            where = f" code {f['code']}" if "code" in f else ""
            print(f"    {f['status']}: {f['check']}{where}")
    totals = ", ".join(f"{k}={v}" for k, v in res["totals"].items() if v)
    print(f"{len(scenarios)} scenarios, {totals}, {res['seconds']:.1f}s")
    return res["exit_status"]


def _idempotents(args) -> int:
    R = RingSpec(args.modulus)
    J = Involution(tuple(args.involution)) if args.involution else Involution.identity(R)
    validate_involution(R, J)
    rep = idempotent_report(R, J)
    out = {
        "modulus": args.modulus,
        "involution": list(J.table),
        "accepted": [{"iota": s.iota, "mu": s.mu, "nu": s.nu, "pairs": [list(p) for p in s.pairs]}
                     for s in rep["accepted"]],
        "rejected": rep["rejected"],
    }
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    handler = {"verify": _verify, "corpus": _corpus, "idempotents": _idempotents}[args.command]
    try:
        return handler(args)
    except USAGE_ERRORS as exc:
        print(f"gcodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"gcodes: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GCodesError as exc:
        print(f"gcodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
