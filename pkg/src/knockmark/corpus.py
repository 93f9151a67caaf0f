"""Data model and line-delimited-JSON ingestion for marks and conflict cases.

A corpus file carries one trademark record per line; a conflict-case file
carries one rejected application per line together with the previously
registered marks that were cited against it. Both loaders support a
strict mode (any bad line or duplicate key aborts) and a lenient mode
(bad lines are skipped and tallied).
"""

import datetime as dt
import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .errors import CorpusError

MIN_CLASS = 1
MAX_CLASS = 45


class Status(enum.Enum):
    LIVE = "LIVE"
    DEAD = "DEAD"
    PENDING = "PENDING"

    @property
    def rank(self) -> int:
        """Sort rank used by result ordering: LIVE before PENDING before DEAD."""
        return _STATUS_RANK[self]


_STATUS_RANK = {Status.LIVE: 0, Status.PENDING: 1, Status.DEAD: 2}


@dataclass(frozen=True, slots=True)
class TrademarkRecord:
    """One registered or applied-for mark."""

    serial: str
    mark: str
    status: Status
    classes: frozenset[int] = frozenset()
    registration: str | None = None
    owner: str | None = None
    filing_date: dt.date | None = None
    registration_date: dt.date | None = None

    def __post_init__(self):
        if not self.serial:
            raise ValueError("serial must be non-empty")
        if not self.mark.strip():
            raise ValueError("mark must be non-empty after trimming")
        for c in self.classes:
            if not MIN_CLASS <= c <= MAX_CLASS:
                raise ValueError(f"class {c} outside {MIN_CLASS}..{MAX_CLASS}")
        if self.registration_date is not None and self.status is Status.PENDING:
            raise ValueError("a PENDING record cannot carry a registration date")


@dataclass(frozen=True, slots=True)
class KillerRef:
    """A mark cited against an application; matched by serial or by text."""

    mark: str
    serial: str | None = None

    def __post_init__(self):
        if not self.mark.strip():
            raise ValueError("killer mark must be non-empty")


@dataclass(frozen=True, slots=True)
class ConflictCase:
    """A rejected application plus the marks cited against it."""

    case_id: str
    applied_mark: str
    killer_marks: tuple[KillerRef, ...]
    application_serial: str | None = None
    decision_date: dt.date | None = None

    def __post_init__(self):
        if not self.case_id:
            raise ValueError("case_id must be non-empty")
        if not self.applied_mark.strip():
            raise ValueError("applied_mark must be non-empty")
        if not self.killer_marks:
            raise ValueError("killer_marks must be non-empty")


@dataclass(frozen=True)
class Corpus:
    """An immutable, loaded set of records keyed by serial.

    Equality covers the records only; load metadata (source path, load
    time, lenient-mode skips) never affects comparisons so a dump/load
    round trip compares equal.
    """

    records: tuple[TrademarkRecord, ...]
    source_path: str = field(default="", compare=False)
    loaded_at: dt.datetime = field(default_factory=lambda: dt.datetime.now(dt.timezone.utc), compare=False)
    skipped: tuple[tuple[int, str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        by_serial: dict[str, TrademarkRecord] = {}
        for rec in self.records:
            if rec.serial in by_serial:
                raise ValueError(f"duplicate serial {rec.serial!r}")
            by_serial[rec.serial] = rec
        object.__setattr__(self, "_by_serial", by_serial)

    @property
    def by_serial(self) -> dict[str, TrademarkRecord]:
        return self._by_serial  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.records)


def _parse_date(value: Any, key: str) -> dt.date | None:
    if value is None:
        return None
    if not isinstance(value, str):
        raise ValueError(f"{key} must be an ISO date string or null")
    try:
        return dt.date.fromisoformat(value)
    except ValueError as exc:
        raise ValueError(f"{key}: {exc}") from None


def _opt_str(obj: dict, key: str) -> str | None:
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise ValueError(f"{key} must be a string or null")
    return value


def _req_str(obj: dict, key: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise ValueError(f"{key} must be a string")
    return value


def parse_record(obj: dict) -> TrademarkRecord:
    """Build a TrademarkRecord from one decoded corpus line."""
    if not isinstance(obj, dict):
        raise ValueError("record line must be a JSON object")
    status_raw = _req_str(obj, "status")
    try:
        status = Status(status_raw)
    except ValueError:
        raise ValueError(f"status must be one of LIVE/DEAD/PENDING, got {status_raw!r}") from None
    classes_raw = obj.get("classes", [])
    if not isinstance(classes_raw, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in classes_raw):
        raise ValueError("classes must be a list of integers")
    return TrademarkRecord(
        serial=_req_str(obj, "serial"),
        mark=_req_str(obj, "mark"),
        status=status,
        classes=frozenset(classes_raw),
        registration=_opt_str(obj, "registration"),
        owner=_opt_str(obj, "owner"),
        filing_date=_parse_date(obj.get("filing_date"), "filing_date"),
        registration_date=_parse_date(obj.get("registration_date"), "registration_date"),
    )


def parse_case(obj: dict) -> ConflictCase:
    """Build a ConflictCase from one decoded conflict-case line."""
    if not isinstance(obj, dict):
        raise ValueError("case line must be a JSON object")
    killers_raw = obj.get("killer_marks")
    if not isinstance(killers_raw, list) or not killers_raw:
        raise ValueError("killer_marks must be a non-empty list")
    killers = []
    for entry in killers_raw:
        if not isinstance(entry, dict):
            raise ValueError("killer_marks entries must be objects")
        killers.append(KillerRef(mark=_req_str(entry, "mark"), serial=_opt_str(entry, "serial")))
    return ConflictCase(
        case_id=_req_str(obj, "case_id"),
        applied_mark=_req_str(obj, "applied_mark"),
        killer_marks=tuple(killers),
        application_serial=_opt_str(obj, "application_serial"),
        decision_date=_parse_date(obj.get("decision_date"), "decision_date"),
    )


def _iter_lines(path: Path) -> Iterable[tuple[int, str]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read file: {exc}", path=str(path)) from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield lineno, line


def load_corpus(path: str | Path, *, strict: bool = True) -> Corpus:
    """Load a corpus file.

    Strict mode raises CorpusError (with line number) on the first
    malformed line or duplicate serial. Lenient mode skips offenders and
    records them on ``Corpus.skipped`` so that skipped + parsed equals
    the number of non-blank lines.
    """
    path = Path(path)
    records: list[TrademarkRecord] = []
    seen: dict[str, int] = {}
    skipped: list[tuple[int, str]] = []
    for lineno, line in _iter_lines(path):
        try:
            obj = json.loads(line)
            rec = parse_record(obj)
            if rec.serial in seen:
                raise ValueError(f"duplicate serial {rec.serial!r} (first seen on line {seen[rec.serial]})")
        except ValueError as exc:
            if strict:
                raise CorpusError(str(exc), path=str(path), line=lineno) from None
            skipped.append((lineno, str(exc)))
            continue
        seen[rec.serial] = lineno
        records.append(rec)
    return Corpus(records=tuple(records), source_path=str(path), skipped=tuple(skipped))


def load_conflict_cases(path: str | Path, *, strict: bool = True) -> list[ConflictCase]:
    """Load a conflict-case file, preserving file order.

    Same strict/lenient regime as load_corpus; case_id uniqueness is
    enforced. Lenient-mode skips are dropped silently from the returned
    list (the CLI reports them).
    """
    path = Path(path)
    cases: list[ConflictCase] = []
    seen: dict[str, int] = {}
    for lineno, line in _iter_lines(path):
        try:
            obj = json.loads(line)
            case = parse_case(obj)
            if case.case_id in seen:
                raise ValueError(f"duplicate case_id {case.case_id!r} (first seen on line {seen[case.case_id]})")
        except ValueError as exc:
            if strict:
                raise CorpusError(str(exc), path=str(path), line=lineno) from None
            continue
        seen[case.case_id] = lineno
        cases.append(case)
    return cases


def record_to_obj(rec: TrademarkRecord) -> dict:
    """Serialize a record to the corpus line schema (stable key order)."""
    return {
        "serial": rec.serial,
        "registration": rec.registration,
        "mark": rec.mark,
        "status": rec.status.value,
        "classes": sorted(rec.classes),
        "owner": rec.owner,
        "filing_date": rec.filing_date.isoformat() if rec.filing_date else None,
        "registration_date": rec.registration_date.isoformat() if rec.registration_date else None,
    }


def case_to_obj(case: ConflictCase) -> dict:
    """Serialize a conflict case to the case line schema."""
    return {
        "case_id": case.case_id,
        "applied_mark": case.applied_mark,
        "application_serial": case.application_serial,
        "killer_marks": [{"mark": k.mark, "serial": k.serial} for k in case.killer_marks],
        "decision_date": case.decision_date.isoformat() if case.decision_date else None,
    }


def dump_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus back out in the line-delimited file format."""
    Path(path).write_text(
        "".join(json.dumps(record_to_obj(r), ensure_ascii=False) + "\n" for r in corpus.records),
        encoding="utf-8",
    )


def dump_cases(cases: Iterable[ConflictCase], path: str | Path) -> None:
    """Write conflict cases out in the line-delimited file format."""
    Path(path).write_text(
        "".join(json.dumps(case_to_obj(c), ensure_ascii=False) + "\n" for c in cases),
        encoding="utf-8",
    )
