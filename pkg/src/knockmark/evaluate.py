"""Measurement harness: run conflict cases through a search engine and
score how well it surfaces the marks that were cited against them.

For each case the engine is asked for the applied-for mark; a returned
result that matches one of the case's cited ("killer") marks is a true
positive. Counts are asymmetric on purpose: tp and fn count killer
marks, fp counts returned results that match no killer. Pooled
precision/recall micro-average the counts across cases; 0/0 precision is
reported as undefined rather than silently zero. The harness only sees
the engine interface, so a replayed results file and a live local engine
with identical outputs produce identical reports.
"""

import enum
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from statistics import median
from typing import Protocol, Sequence

from .corpus import ConflictCase, KillerRef
from .errors import CorpusError
from .index import Index
from .normalize import normalize
from .phonetics import phonetic_match
from .profiles import EngineProfile
from .scoring import query_levenshtein
from .search import search_normalized

ReturnedResult = tuple[str, str | None]  # (mark text, optional serial)


class MatchMode(enum.Enum):
    """How a returned result is matched against a cited mark."""

    BY_SERIAL_THEN_TEXT = "by_serial_then_text"
    TEXT_ONLY = "text_only"


class SearchEngine(Protocol):
    """Anything the harness can evaluate."""

    name: str

    def search(self, raw_query: str, limit: int | None) -> list[ReturnedResult]: ...


@dataclass(frozen=True, slots=True)
class LocalEngine:
    """An engine profile bound to a local index."""

    name: str
    index: Index
    profile: EngineProfile
    include_dead: bool = False

    def search(self, raw_query: str, limit: int | None) -> list[ReturnedResult]:
        opts = self.profile.search_options(limit=limit, include_dead=self.include_dead)
        results = search_normalized(self.index, normalize(raw_query), opts)
        return [(r.mark, r.serial) for r in results]


@dataclass(frozen=True, slots=True)
class RecordedEngine:
    """Replays results captured in a recorded-results file.

    Queries are keyed by canonical normalized text; the replayed list is
    truncated to the caller's limit. A query absent from the recording
    raises KeyError, which the harness surfaces as an errored case.
    """

    name: str
    by_query: dict[str, tuple[ReturnedResult, ...]]

    def search(self, raw_query: str, limit: int | None) -> list[ReturnedResult]:
        key = normalize(raw_query).canonical
        if key not in self.by_query:
            raise KeyError(f"engine {self.name!r} has no recorded results for {raw_query!r}")
        rows = self.by_query[key]
        return list(rows if limit is None else rows[:limit])


def load_recorded_results(path: str | Path) -> list[RecordedEngine]:
    """Load a recorded-results file; one line per (engine, query) pair.

    Line schema: {"query": str, "engine": str, "results": [{"mark": str,
    "serial": str|null, "rank": int}, ...]}. Results are ordered by rank.
    Engines are returned sorted by name.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read file: {exc}", path=str(path)) from exc
    grouped: dict[str, dict[str, tuple[ReturnedResult, ...]]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            engine = obj["engine"]
            query_key = normalize(obj["query"]).canonical
            entries = obj["results"]
            if not isinstance(engine, str) or not engine:
                raise ValueError("engine must be a non-empty string")
            if not query_key:
                raise ValueError("query normalizes to nothing")
            if not isinstance(entries, list):
                raise ValueError("results must be a list")
            ranked = []
            for entry in entries:
                rank, mark, serial = entry["rank"], entry["mark"], entry.get("serial")
                if not isinstance(rank, int) or rank < 1:
                    raise ValueError("rank must be a positive integer")
                if not isinstance(mark, str):
                    raise ValueError("mark must be a string")
                if serial is not None and not isinstance(serial, str):
                    raise ValueError("serial must be a string or null")
                ranked.append((rank, mark, serial))
            if len({r for r, _, _ in ranked}) != len(ranked):
                raise ValueError("ranks must be unique per query")
            ranked.sort()
            per_engine = grouped.setdefault(engine, {})
            if query_key in per_engine:
                raise ValueError(f"duplicate recorded query {obj['query']!r} for engine {engine!r}")
            per_engine[query_key] = tuple((m, s) for _, m, s in ranked)
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"bad recorded-results line: {exc}", path=str(path), line=lineno) from None
    return [RecordedEngine(name=name, by_query=grouped[name]) for name in sorted(grouped)]


def killer_matches(returned: ReturnedResult, killer: KillerRef, mode: MatchMode) -> bool:
    """Does one returned result match one cited mark?

    BY_SERIAL_THEN_TEXT compares serials whenever both sides carry one
    (a serial mismatch is final even if the text agrees), falling back to
    canonical text equality. TEXT_ONLY always compares canonical text.
    """
    mark, serial = returned
    if mode is MatchMode.BY_SERIAL_THEN_TEXT and serial is not None and killer.serial is not None:
        return serial == killer.serial
    return normalize(mark).canonical == normalize(killer.mark).canonical


@dataclass(frozen=True, slots=True)
class ConfusionCounts:
    """tp/fn count killer marks; fp counts non-matching returned results."""

    tp: int
    fp: int
    fn: int

    @property
    def precision(self) -> float | None:
        returned = self.tp + self.fp
        return None if returned == 0 else self.tp / returned

    @property
    def recall(self) -> float | None:
        killers = self.tp + self.fn
        return None if killers == 0 else self.tp / killers


@dataclass(frozen=True, slots=True)
class EvalOptions:
    """Harness configuration left open by the underlying methodology.

    ``dedup_results`` collapses repeats by serial (or, when absent, by
    canonical mark) before counting. ``dead_serials`` lists serials whose
    non-matching returns should not count as false positives; empty means
    every non-matching result is a false positive.
    """

    match_mode: MatchMode = MatchMode.BY_SERIAL_THEN_TEXT
    dedup_results: bool = True
    dead_serials: frozenset[str] = frozenset()
    workers: int = 1


def dedup_returned(results: Sequence[ReturnedResult]) -> list[ReturnedResult]:
    """Drop repeats, keeping the best-ranked occurrence.

    The key is the serial when present, otherwise the canonical mark.
    """
    seen = set()
    out = []
    for mark, serial in results:
        key = ("s", serial) if serial is not None else ("m", normalize(mark).canonical)
        if key in seen:
            continue
        seen.add(key)
        out.append((mark, serial))
    return out


def confusion_counts(
    case: ConflictCase,
    results: Sequence[ReturnedResult],
    mode: MatchMode = MatchMode.BY_SERIAL_THEN_TEXT,
    *,
    dead_serials: frozenset[str] = frozenset(),
) -> ConfusionCounts:
    """Count killers found/missed and non-matching results for one case.

    ``results`` should already be deduplicated (see dedup_returned).
    """
    matched_killers = 0
    for killer in case.killer_marks:
        if any(killer_matches(r, killer, mode) for r in results):
            matched_killers += 1
    fp = 0
    for r in results:
        if not any(killer_matches(r, killer, mode) for killer in case.killer_marks):
            if r[1] is not None and r[1] in dead_serials:
                continue
            fp += 1
    return ConfusionCounts(tp=matched_killers, fp=fp, fn=len(case.killer_marks) - matched_killers)


@dataclass(frozen=True, slots=True)
class ResultRow:
    """One returned result annotated against the searched mark."""

    case_id: str
    engine_name: str
    returned_mark: str
    conflicted_mark: str
    exact_match: bool
    phonetic_match: bool
    levenshtein: int
    rank: int


@dataclass(frozen=True, slots=True)
class CaseOutcome:
    """Everything the harness derived from one case."""

    case_id: str
    rows: tuple[ResultRow, ...]
    counts: ConfusionCounts | None
    n_results: int
    error: str | None = None

    @property
    def found_any(self) -> bool:
        return self.counts is not None and self.counts.tp >= 1


@dataclass(frozen=True)
class EvalReport:
    """Pooled and per-case metrics for one engine at one result limit."""

    engine: str
    limit: int | None
    match_mode: MatchMode
    outcomes: tuple[CaseOutcome, ...]  # sorted by case_id
    tp: int
    fp: int
    fn: int
    precision: float | None
    recall: float | None
    found_any_rate: float | None
    macro_precision: float | None
    macro_recall: float | None
    total_results: int
    exact_match_rate: float | None
    phonetic_match_rate: float | None
    levenshtein_histogram: tuple[tuple[int, int], ...]
    levenshtein_median: float | None
    errored_cases: tuple[str, ...]


def _case_outcome(engine_name: str, case: ConflictCase, returned: Sequence[ReturnedResult], options: EvalOptions) -> CaseOutcome:
    searched = normalize(case.applied_mark)
    rows = []
    for rank, (mark, _serial) in enumerate(returned, start=1):
        norm = normalize(mark)
        rows.append(
            ResultRow(
                case_id=case.case_id,
                engine_name=engine_name,
                returned_mark=mark,
                conflicted_mark=case.applied_mark,
                exact_match=norm.canonical == searched.canonical,
                phonetic_match=phonetic_match(norm, searched),
                levenshtein=query_levenshtein(searched, norm),
                rank=rank,
            )
        )
    counted = dedup_returned(returned) if options.dedup_results else list(returned)
    if options.dead_serials:
        counted = [r for r in counted if not (r[1] in options.dead_serials and not any(
            killer_matches(r, k, options.match_mode) for k in case.killer_marks))]
    counts = confusion_counts(case, counted, options.match_mode)
    return CaseOutcome(case_id=case.case_id, rows=tuple(rows), counts=counts, n_results=len(counted))


def _build_report(engine_name: str, limit: int | None, options: EvalOptions, outcomes: list[CaseOutcome]) -> EvalReport:
    outcomes = sorted(outcomes, key=lambda o: o.case_id)
    scored = [o for o in outcomes if o.error is None]
    tp = sum(o.counts.tp for o in scored)
    fp = sum(o.counts.fp for o in scored)
    fn = sum(o.counts.fn for o in scored)
    rows = [row for o in scored for row in o.rows]
    distances = sorted(row.levenshtein for row in rows)
    histogram: dict[int, int] = {}
    for d in distances:
        histogram[d] = histogram.get(d, 0) + 1
    case_precisions = [o.counts.precision for o in scored if o.counts.precision is not None]
    case_recalls = [o.counts.recall for o in scored if o.counts.recall is not None]
    return EvalReport(
        engine=engine_name,
        limit=limit,
        match_mode=options.match_mode,
        outcomes=tuple(outcomes),
        tp=tp,
        fp=fp,
        fn=fn,
        precision=None if tp + fp == 0 else tp / (tp + fp),
        recall=None if tp + fn == 0 else tp / (tp + fn),
        found_any_rate=None if not scored else sum(o.found_any for o in scored) / len(scored),
        macro_precision=None if not case_precisions else sum(case_precisions) / len(case_precisions),
        macro_recall=None if not case_recalls else sum(case_recalls) / len(case_recalls),
        total_results=len(rows),
        exact_match_rate=None if not rows else sum(r.exact_match for r in rows) / len(rows),
        phonetic_match_rate=None if not rows else sum(r.phonetic_match for r in rows) / len(rows),
        levenshtein_histogram=tuple(sorted(histogram.items())),
        levenshtein_median=None if not distances else float(median(distances)),
        errored_cases=tuple(o.case_id for o in outcomes if o.error is not None),
    )


def _collect(engine: SearchEngine, cases: Sequence[ConflictCase], limit: int | None, workers: int):
    """Fetch raw results (or an error string) per case, preserving order."""

    def fetch(case: ConflictCase):
        try:
            return engine.search(case.applied_mark, limit), None
        except Exception as exc:  # surfaced per case, never silently dropped
            return None, f"{type(exc).__name__}: {exc}"

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fetch, cases))
    return [fetch(case) for case in cases]


def eval_run(
    engine: SearchEngine,
    cases: Sequence[ConflictCase],
    limit: int | None = 100,
    options: EvalOptions = EvalOptions(),
) -> EvalReport:
    """Evaluate one engine over all cases at one result limit."""
    if not cases:
        raise ValueError("eval_run requires at least one case")
    outcomes = []
    for case, (returned, error) in zip(cases, _collect(engine, cases, limit, options.workers)):
        if error is not None:
            outcomes.append(CaseOutcome(case_id=case.case_id, rows=(), counts=None, n_results=0, error=error))
        else:
            outcomes.append(_case_outcome(engine.name, case, returned, options))
    return _build_report(engine.name, limit, options, outcomes)


def eval_at_limits(
    engine: SearchEngine,
    cases: Sequence[ConflictCase],
    limits: Sequence[int],
    options: EvalOptions = EvalOptions(),
) -> list[EvalReport]:
    """One report per limit, searching once at the largest limit and
    truncating each case's ranked results to the smaller prefixes."""
    if not cases:
        raise ValueError("eval_at_limits requires at least one case")
    if not limits or any(l < 1 for l in limits) or list(limits) != sorted(set(limits)):
        raise ValueError("limits must be strictly increasing positive integers")
    fetched = _collect(engine, cases, limits[-1], options.workers)
    reports = []
    for limit in limits:
        outcomes = []
        for case, (returned, error) in zip(cases, fetched):
            if error is not None:
                outcomes.append(CaseOutcome(case_id=case.case_id, rows=(), counts=None, n_results=0, error=error))
            else:
                outcomes.append(_case_outcome(engine.name, case, returned[:limit], options))
        reports.append(_build_report(engine.name, limit, options, outcomes))
    return reports


def report_to_obj(report: EvalReport) -> dict:
    """JSON-ready form of a report (deterministic, no timestamps)."""
    return {
        "engine": report.engine,
        "limit": report.limit,
        "match_mode": report.match_mode.value,
        "n_cases": len(report.outcomes),
        "pooled": {
            "tp": report.tp,
            "fp": report.fp,
            "fn": report.fn,
            "precision": report.precision,
            "recall": report.recall,
            "found_any_rate": report.found_any_rate,
        },
        "macro": {"precision": report.macro_precision, "recall": report.macro_recall},
        "total_results": report.total_results,
        "exact_match_rate": report.exact_match_rate,
        "phonetic_match_rate": report.phonetic_match_rate,
        "levenshtein_histogram": [list(pair) for pair in report.levenshtein_histogram],
        "levenshtein_median": report.levenshtein_median,
        "errored_cases": list(report.errored_cases),
        "cases": [
            {
                "case_id": o.case_id,
                "error": o.error,
                "tp": o.counts.tp if o.counts else None,
                "fp": o.counts.fp if o.counts else None,
                "fn": o.counts.fn if o.counts else None,
                "precision": o.counts.precision if o.counts else None,
                "recall": o.counts.recall if o.counts else None,
                "found_any": o.found_any if o.counts else None,
                "n_results": o.n_results,
            }
            for o in report.outcomes
        ],
    }
