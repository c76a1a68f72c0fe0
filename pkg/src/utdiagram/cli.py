"""Command-line front end.

    utdiagram run --n 7 --ideal "5,1;6,1;7,1;7,2"
    utdiagram run input.json --out report.json --ascii
    utdiagram batch --n 6 --theorems --oracle --out results.jsonl
    utdiagram batch --n 7 --resume results.jsonl --jobs 4

Exit codes: 0 all selected checks pass, 2 bad input, 3 a structural check
or the rank oracle failed, 4 a conjecture counterexample was found (3 wins
when both happen).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed

from .diagram import build_diagram
from .poisson import DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS
from .report import (
    EXIT_INPUT,
    FAMILIES,
    SCHEMA,
    build_report,
    exit_status,
    theorem_failures,
)
from .roots import IdealError, RegularIdeal, enumerate_regular_ideals

log = logging.getLogger("utdiagram")

MAX_BATCH_N = 9


def parse_ideal_string(text: str) -> list[tuple[int, int]]:
    """``"5,1;6,1"`` -> ``[(5, 1), (6, 1)]``; empty string is the empty ideal."""
    roots = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise IdealError(f"malformed root {chunk!r}; expected 'row,col'")
        try:
            roots.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise IdealError(f"malformed root {chunk!r}; expected integers") from None
    return roots


def load_ideal(args) -> RegularIdeal:
    if args.input:
        with open(args.input) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise IdealError(f"{args.input}: invalid JSON ({exc})") from None
        if not isinstance(data, dict) or "n" not in data:
            raise IdealError(f"{args.input}: expected an object with 'n' and 'ideal'")
        n, roots = data["n"], data.get("ideal", [])
    else:
        if args.n is None:
            raise IdealError("give an input JSON file or --n")
        n, roots = args.n, parse_ideal_string(args.ideal or "")
    if not isinstance(n, int) or n < 1:
        raise IdealError(f"n must be a positive integer, got {n!r}")
    return RegularIdeal.from_roots(n, roots, close=args.closure)


def _families(args) -> tuple[str, ...]:
    picked = tuple(f for f in FAMILIES if getattr(args, f))
    return picked or FAMILIES


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _check_oracle_args(args):
    if args.trials < 1:
        raise IdealError("--trials must be at least 1")
    if args.prime <= 2**40 or pow(3, args.prime - 1, args.prime) != 1:
        raise IdealError("--prime must be a prime above 2^40")


def cmd_run(args) -> int:
    try:
        _check_oracle_args(args)
        ideal = load_ideal(args)
    except (IdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = build_report(ideal, _families(args), args.trials, args.prime, args.seed)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    picture = build_diagram(ideal).render(ascii=args.ascii)
    if args.diagram_out:
        with open(args.diagram_out, "w", encoding="utf-8") as fh:
            fh.write(picture + "\n")
    else:
        try:
            print(picture, file=sys.stderr)
        except UnicodeEncodeError:
            print(build_diagram(ideal).render(ascii=True), file=sys.stderr)
    failed = theorem_failures(report)
    if failed:
        log.warning("failed checks: %s", ", ".join(failed))
    return exit_status([report])


def _report_key(report: dict) -> tuple[int, ...]:
    return tuple(report["input"]["thresholds"])


def _load_existing(path: str, families: list[str], n: int) -> dict[tuple, dict]:
    done: dict[tuple, dict] = {}
    if not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                # a line cut off by an interrupted run
                continue
            if rec.get("summary") or rec.get("schema") != SCHEMA:
                continue
            if rec.get("families") != families or rec["input"]["n"] != n:
                continue
            done[_report_key(rec)] = rec
    return done


def _summary(n: int, families: list[str], reports: list[dict], args) -> dict:
    failed = [r for r in reports if theorem_failures(r)]
    counterexamples = [c for r in reports for c in r.get("counterexamples", [])]
    return {
        "schema": SCHEMA,
        "summary": True,
        "n": n,
        "families": families,
        "ideals": len(reports),
        "theorem_failures": len(failed),
        "failed_ideals": [
            {"thresholds": list(_report_key(r)), "checks": theorem_failures(r)} for r in failed
        ],
        "counterexample_count": len(counterexamples),
        "counterexamples": counterexamples,
        "prime": args.prime,
        "seed": args.seed,
        "trials": args.trials,
    }


def cmd_batch(args) -> int:
    try:
        _check_oracle_args(args)
        if not 1 <= args.n <= MAX_BATCH_N:
            raise IdealError(f"--n must be in 1..{MAX_BATCH_N}")
    except IdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    families = list(_families(args))
    path = args.resume or args.out
    done = _load_existing(path, families, args.n) if args.resume else {}
    todo = [i for i in enumerate_regular_ideals(args.n) if i.thresholds not in done]
    log.info("n=%d: %d ideals cached, %d to run", args.n, len(done), len(todo))

    if args.resume:
        # drop a partial trailing line before appending
        with open(path, "w") as fh:
            fh.writelines(_dump(done[k]) + "\n" for k in sorted(done))
    sink = open(path, "a" if args.resume else "w") if path else None
    try:
        def emit(report: dict):
            done[_report_key(report)] = report
            if sink:
                sink.write(_dump(report) + "\n")
                sink.flush()

        params = (tuple(families), args.trials, args.prime, args.seed)
        if args.jobs > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(build_report, i, *params) for i in todo]
                for fut in as_completed(futures):
                    emit(fut.result())
        else:
            for ideal in todo:
                emit(build_report(ideal, *params))
    finally:
        if sink:
            sink.close()

    reports = [done[k] for k in sorted(done)]
    summary = _summary(args.n, families, reports, args)
    lines = [_dump(r) for r in reports] + [_dump(summary)]
    if path:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
        print(_dump(summary))
    else:
        print("\n".join(lines))
    return exit_status(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="utdiagram", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        for fam in FAMILIES:
            p.add_argument(f"--{fam}", action="store_true", help=f"select the {fam} checks")

    run = sub.add_parser("run", help="full pipeline on one ideal")
    run.add_argument("input", nargs="?", help='JSON file {"n": 7, "ideal": [[5,1], ...]}')
    run.add_argument("--n", type=int)
    run.add_argument("--ideal", help='roots as "row,col;row,col"')
    run.add_argument("--closure", action="store_true", help="replace the roots by their closure")
    run.add_argument("--out", help="write the JSON report here instead of stdout")
    run.add_argument("--diagram-out", help="write the rendered diagram here instead of stderr")
    run.add_argument("--ascii", action="store_true", help="render with x + - * instead of unicode")
    common(run)
    run.set_defaults(func=cmd_run)

    batch = sub.add_parser("batch", help="run every regular ideal of size n")
    batch.add_argument("--n", type=int, required=True)
    out = batch.add_mutually_exclusive_group()
    out.add_argument("--out", help="JSONL results file (overwritten)")
    out.add_argument("--resume", metavar="FILE", help="JSONL results file to extend")
    batch.add_argument("--jobs", type=int, default=1)
    common(batch)
    batch.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
