"""Command line interface.

Thin client over the api layer: every subcommand parses an instance
file, calls one report function, and prints either canonical JSON
(--json) or a short human rendering.

Exit codes: 0 success, 1 bad input, 2 resource budget exhausted,
3 corpus consistency violation.
"""

from __future__ import annotations

import argparse
import sys

from .api import (decide_report, ext_table_report, instance_from_file,
                  invariants_report, oracle_report, tor_table_report,
                  verify_corpus_report)
from .corpus import DEFAULT_SEED, write_corpus
from .errors import ParseError, ResourceLimitExceeded
from .iofmt import canonical_json

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_VIOLATION = 3


def _add_common(sub: argparse.ArgumentParser, with_file: bool = True) -> None:
    if with_file:
        sub.add_argument("file", help="instance file path")
    sub.add_argument("--json", action="store_true",
                     help="print the full JSON report")
    sub.add_argument("--budget", type=int, default=None, metavar="N",
                     help="reduction step budget (default 1000000)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobdim",
        description="Homological dimension tests driven by prime-power "
                    "twists of quotient rings.")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (
            ("invariants", "numeric profile of the ring"),
            ("tor-table", "torsion vanishing table for the module"),
            ("ext-table", "extension vanishing table for the module"),
            ("decide", "finite or infinite flat dimension verdict"),
            ("oracle", "exact projective dimension by resolution")):
        _add_common(commands.add_parser(name, help=text))

    verify = commands.add_parser(
        "verify-corpus", help="cross-check every corpus verdict against "
                              "the resolution oracle")
    verify.add_argument("directory", help="corpus directory of *.txt files")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--budget", type=int, default=None, metavar="N")

    gen = commands.add_parser("gen-corpus",
                              help="write the deterministic bundled corpus")
    gen.add_argument("directory")
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--count", type=int, default=2, metavar="K",
                     help="random modules per ring (default 2)")

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _print_invariants(report: dict) -> None:
    ring = report["ring"]
    print(f"ring: F_{ring['p']}[{', '.join(ring['vars'])}] "
          f"/ ({', '.join(ring['ideal']) or '0'})")
    for key in ("dim", "depth", "multiplicity", "length", "ideal_min_gens",
                "is_cohen_macaulay", "is_complete_intersection",
                "e_threshold", "r_window"):
        print(f"{key}: {ring[key]}")
    print(f"hilbert_numerator: {ring['hilbert_numerator']}")


def _print_table(report: dict) -> None:
    print(f"t={report['t']} window={report['window']} "
          f"e={','.join(str(e) for e in report['e'])}")
    for cell, data in sorted(report["cells"].items()):
        dim = data.get("dim_k")
        dim_text = "" if dim is None else f"  dim_k={dim}"
        print(f"{cell}: {'vanishes' if data['vanishes'] else 'NONZERO'}{dim_text}")


def _print_decide(report: dict) -> None:
    verdict = report["verdict"]
    print(f"outcome: {verdict['outcome']}")
    print(f"criterion: {verdict['theorem_used']}")
    if verdict["witnesses"]:
        cells = ", ".join(f"(i={i}, e={e})" for i, e in verdict["witnesses"])
        print(f"witness cells: {cells}")
    if verdict.get("oracle_pd") is not None:
        print(f"oracle projective dimension: {verdict['oracle_pd']}")
    for note in verdict["notes"]:
        print(f"note: {note}")


def _print_oracle(report: dict) -> None:
    print(f"projective dimension: {report['projective_dimension']}")
    print(f"betti numbers: {', '.join(str(b) for b in report['betti'])}")


def _print_verify(report: dict) -> None:
    for entry in report["entries"]:
        if entry["status"] == "resource-limit":
            print(f"{entry['file']}: resource-limit ({entry['detail']})")
            continue
        print(f"{entry['file']}: {entry['outcome']} "
              f"[{entry['theorem_used']}] oracle "
              f"pd={entry['oracle_projective_dimension']} -> {entry['status']}")
    print(f"checked {report['count']} instances: status {report['status']}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "gen-corpus":
            names = write_corpus(args.directory, seed=args.seed,
                                 random_per_ring=args.count)
            print(f"wrote {len(names)} instance files to {args.directory}")
            return EXIT_OK

        if args.command == "serve":
            import uvicorn

            from .service import app
            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK

        if args.command == "verify-corpus":
            report = verify_corpus_report(args.directory,
                                          budget_steps=args.budget)
            if args.json:
                sys.stdout.write(canonical_json(report))
            else:
                _print_verify(report)
            if report["status"] == "violation":
                return EXIT_VIOLATION
            if report["status"] == "resource-limit":
                return EXIT_RESOURCE
            return EXIT_OK

        instance = instance_from_file(args.file)
        if args.command == "invariants":
            report = invariants_report(instance.ring,
                                       budget_steps=args.budget)
            printer = _print_invariants
        elif args.command == "tor-table":
            report = tor_table_report(instance, budget_steps=args.budget)
            printer = _print_table
        elif args.command == "ext-table":
            report = ext_table_report(instance, budget_steps=args.budget)
            printer = _print_table
        elif args.command == "decide":
            report = decide_report(instance, budget_steps=args.budget)
            printer = _print_decide
        else:
            report = oracle_report(instance, budget_steps=args.budget)
            printer = _print_oracle
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    if args.json:
        sys.stdout.write(canonical_json(report))
    else:
        printer(report)
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
