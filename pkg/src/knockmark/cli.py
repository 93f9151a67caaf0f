"""Operator entry point: ingest, search, eval, serve, synth.

Exit codes: 0 success, 1 input or configuration error, 2 query contract
error (the query normalized to nothing). Every run with fixed inputs and
seed writes byte-identical outputs; scores print with 4 decimal places,
report metrics keep full float precision.
"""

import argparse
import csv
import json
import os
import socket
import sys
from pathlib import Path

from .corpus import dump_cases, dump_corpus, load_conflict_cases, load_corpus
from .errors import CorpusError, EmptyQueryError
from .evaluate import EvalOptions, EvalReport, LocalEngine, MatchMode, eval_at_limits, load_recorded_results, report_to_obj
from .index import build_index
from .profiles import BUILTIN_PROFILES, get_profile
from .search import knockout_search
from . import synth

CONFUSION_HEADER = ["case_id", "engine", "limit", "tp", "fp", "fn", "precision", "recall", "found_any", "n_results"]


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _fmt_metric(value: float | None) -> str:
    return "" if value is None else repr(value)


def _fmt_bool(value: bool | None) -> str:
    return "" if value is None else ("true" if value else "false")


def cmd_ingest(args) -> int:
    try:
        corpus = load_corpus(args.corpus, strict=not args.lenient)
    except CorpusError as exc:
        return _fail(str(exc))
    print(f"{len(corpus)} records loaded from {args.corpus}")
    by_status: dict[str, int] = {}
    by_class: dict[int, int] = {}
    for rec in corpus.records:
        by_status[rec.status.value] = by_status.get(rec.status.value, 0) + 1
        for c in rec.classes:
            by_class[c] = by_class.get(c, 0) + 1
    for status in ("LIVE", "PENDING", "DEAD"):
        if status in by_status:
            print(f"  {status:<8} {by_status[status]}")
    if by_class:
        print("  classes: " + " ".join(f"{c}:{n}" for c, n in sorted(by_class.items())))
    for lineno, message in corpus.skipped:
        print(f"  skipped line {lineno}: {message}")
    if corpus.skipped:
        print(f"  {len(corpus.skipped)} line(s) skipped")
    return 0


def _parse_classes(text: str | None) -> frozenset[int] | None:
    if not text:
        return None
    return frozenset(int(part) for part in text.split(","))


def cmd_search(args) -> int:
    try:
        corpus = load_corpus(args.corpus)
        profile = get_profile(args.profile)
        classes = _parse_classes(args.classes)
    except (CorpusError, ValueError) as exc:
        return _fail(str(exc))
    except KeyError as exc:
        return _fail(exc.args[0])
    index = build_index(corpus)
    opts = profile.search_options(
        limit=args.limit,
        include_dead=args.include_dead,
        classes=classes,
        min_score=args.min_score,
    )
    try:
        results = knockout_search(index, args.query, opts)
    except EmptyQueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{'rank':<5} {'score':<7} {'band':<10} {'mark':<32} {'status':<8} {'classes':<14} serial")
    for rank, r in enumerate(results, start=1):
        classes_txt = ",".join(map(str, sorted(r.classes)))
        print(
            f"{rank:<5} {r.score:<7.4f} {r.band.value:<10} {r.mark[:32]:<32} "
            f"{r.status.value:<8} {classes_txt:<14} {r.serial}"
        )
    if not results:
        print("(no results)")
    return 0


def _write_reports(out_dir: Path, match_mode: MatchMode, limits: list[int], all_reports: list[EvalReport]) -> None:
    payload = {
        "match_mode": match_mode.value,
        "limits": limits,
        "engines": [report_to_obj(r) for r in all_reports],
    }
    (out_dir / "report.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )

    with (out_dir / "confusion.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CONFUSION_HEADER)
        for report in all_reports:
            for o in report.outcomes:
                writer.writerow(
                    [
                        o.case_id,
                        report.engine,
                        report.limit,
                        "" if o.counts is None else o.counts.tp,
                        "" if o.counts is None else o.counts.fp,
                        "" if o.counts is None else o.counts.fn,
                        _fmt_metric(o.counts.precision) if o.counts else "",
                        _fmt_metric(o.counts.recall) if o.counts else "",
                        _fmt_bool(o.found_any if o.counts else None),
                        o.n_results,
                    ]
                )

    # Distance distributions come from the widest run for each engine.
    max_limit = limits[-1]
    with (out_dir / "levenshtein.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["engine", "distance", "count"])
        for report in all_reports:
            if report.limit != max_limit:
                continue
            for distance, count in report.levenshtein_histogram:
                writer.writerow([report.engine, distance, count])


def cmd_eval(args) -> int:
    try:
        corpus = load_corpus(args.corpus)
        cases = load_conflict_cases(args.cases)
        limits = sorted({int(part) for part in args.limits.split(",")})
        if not limits or limits[0] < 1:
            raise ValueError("limits must be positive integers")
        match_mode = MatchMode(args.match_mode)
    except (CorpusError, ValueError) as exc:
        return _fail(str(exc))
    if not cases:
        return _fail(f"no cases in {args.cases}")

    index = build_index(corpus)
    engines = []
    try:
        profile_names = args.profiles.split(",") if args.profiles else sorted(BUILTIN_PROFILES)
        for name in profile_names:
            profile = get_profile(name.strip())
            engines.append(LocalEngine(name=profile.name, index=index, profile=profile, include_dead=args.include_dead))
        for path in args.recorded or []:
            engines.extend(load_recorded_results(path))
    except KeyError as exc:
        return _fail(exc.args[0])
    except CorpusError as exc:
        return _fail(str(exc))
    names = [e.name for e in engines]
    if len(set(names)) != len(names):
        return _fail(f"engine names must be unique, got {names}")

    options = EvalOptions(match_mode=match_mode, workers=args.workers)
    all_reports: list[EvalReport] = []
    for engine in engines:
        all_reports.extend(eval_at_limits(engine, cases, limits, options))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_reports(out_dir, match_mode, limits, all_reports)

    max_limit = limits[-1]
    print(f"{'engine':<12} limit {max_limit}")
    for report in all_reports:
        if report.limit != max_limit:
            continue
        recall = "undefined" if report.recall is None else f"{report.recall:.4f}"
        precision = "undefined" if report.precision is None else f"{report.precision:.4f}"
        line = f"{report.engine:<12} recall {recall} precision {precision}"
        if report.errored_cases:
            line += f"  ({len(report.errored_cases)} errored case(s))"
        print(line)
    print(f"wrote {out_dir / 'report.json'}, {out_dir / 'confusion.csv'}, {out_dir / 'levenshtein.csv'}")
    return 0


def _run_server(app, host: str, port: int) -> int:
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


def cmd_serve(args) -> int:
    host, sep, port_text = args.addr.rpartition(":")
    if not sep or not host:
        return _fail(f"--addr must be HOST:PORT, got {args.addr!r}")
    try:
        port = int(port_text)
    except ValueError:
        return _fail(f"port must be an integer, got {port_text!r}")
    try:
        corpus = load_corpus(args.corpus)
        profile = get_profile(args.profile)
    except CorpusError as exc:
        return _fail(str(exc))
    except KeyError as exc:
        return _fail(exc.args[0])

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        return _fail(f"cannot bind {args.addr}: {exc}")
    finally:
        probe.close()

    from .service import create_app

    index = build_index(corpus)
    app = create_app(index, profile)
    print(f"serving {len(corpus)} records on http://{host}:{port}")
    return _run_server(app, host, port)


def cmd_synth(args) -> int:
    if args.records < 1 or args.cases < 0 or args.max_edits < 0:
        return _fail("need --records >= 1, --cases >= 0, --max-edits >= 0")
    try:
        corpus, cases = synth.generate(args.records, args.cases, args.seed, args.max_edits)
    except ValueError as exc:
        return _fail(str(exc))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus_path = out_dir / "corpus.jsonl"
    cases_path = out_dir / "cases.jsonl"
    dump_corpus(corpus, corpus_path)
    dump_cases(cases, cases_path)
    print(f"wrote {len(corpus)} records to {corpus_path}")
    print(f"wrote {len(cases)} cases to {cases_path}")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # input errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="knockmark", description="Trademark knockout search and evaluation harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate and summarize a corpus file")
    p.add_argument("--corpus", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=True)
    mode.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("search", help="run one knockout search against a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--classes", default=None, help="comma-separated NICE classes")
    p.add_argument("--include-dead", action="store_true")
    p.add_argument("--min-score", type=float, default=0.0)
    p.add_argument("--profile", default="full", choices=sorted(BUILTIN_PROFILES))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("eval", help="evaluate engines against conflict cases")
    p.add_argument("--corpus", required=True)
    p.add_argument("--cases", required=True)
    p.add_argument("--profiles", default=None, help="comma-separated profile names (default: all built-ins)")
    p.add_argument("--recorded", action="append", default=[], help="recorded-results file; repeatable")
    p.add_argument("--limits", default="10,25,50,100")
    p.add_argument("--out", required=True)
    p.add_argument("--match-mode", default=MatchMode.BY_SERIAL_THEN_TEXT.value,
                   choices=[m.value for m in MatchMode])
    p.add_argument("--include-dead", action="store_true")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="serve the search API over HTTP")
    p.add_argument("--corpus", required=True)
    p.add_argument("--addr", default="127.0.0.1:8037")
    p.add_argument("--profile", default="full")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("synth", help="generate a synthetic corpus and cases")
    p.add_argument("--records", type=int, required=True)
    p.add_argument("--cases", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--max-edits", type=int, default=2)
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
