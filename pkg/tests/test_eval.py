import json
from dataclasses import dataclass

import pytest

from knockmark.corpus import ConflictCase, Corpus, KillerRef, Status, TrademarkRecord
from knockmark.errors import CorpusError
from knockmark.evaluate import (
    ConfusionCounts,
    EvalOptions,
    LocalEngine,
    MatchMode,
    RecordedEngine,
    confusion_counts,
    dedup_returned,
    eval_at_limits,
    eval_run,
    killer_matches,
    load_recorded_results,
    report_to_obj,
)
from knockmark.index import build_index
from knockmark.profiles import BUILTIN_PROFILES


@dataclass
class ScriptedEngine:
    """Returns a fixed result list per query; None means raise."""

    name: str
    script: dict

    def search(self, raw_query, limit):
        rows = self.script[raw_query]
        if rows is None:
            raise RuntimeError("scripted failure")
        return list(rows if limit is None else rows[:limit])


def case(case_id, applied, *killers):
    return ConflictCase(
        case_id=case_id,
        applied_mark=applied,
        killer_marks=tuple(KillerRef(mark=m, serial=s) for m, s in killers),
    )


class PerfectEngine:
    """Returns exactly the killer marks of the case being searched."""

    name = "perfect"

    def __init__(self, cases):
        self.by_query = {c.applied_mark: [(k.mark, k.serial) for k in c.killer_marks] for c in cases}

    def search(self, raw_query, limit):
        rows = self.by_query[raw_query]
        return rows if limit is None else rows[:limit]


class NullEngine:
    name = "null"

    def search(self, raw_query, limit):
        return []


@pytest.mark.parametrize(
    "returned, killer, mode, expected",
    [
        (("Closet Envy", None), KillerRef("CLOSET ENVY"), MatchMode.BY_SERIAL_THEN_TEXT, True),
        (("CLOSET ENVY", "111"), KillerRef("CLOSET ENVY", "222"), MatchMode.BY_SERIAL_THEN_TEXT, False),
        (("ENVI", None), KillerRef("CLOSET ENVY"), MatchMode.BY_SERIAL_THEN_TEXT, False),
        (("anything", "77"), KillerRef("OTHER TEXT", "77"), MatchMode.BY_SERIAL_THEN_TEXT, True),
        (("anything", "77"), KillerRef("OTHER TEXT", "77"), MatchMode.TEXT_ONLY, False),
        (("CLOSET ENVY", "111"), KillerRef("CLOSET ENVY", "222"), MatchMode.TEXT_ONLY, True),
        (("CLOSET ENVY", None), KillerRef("CLOSET ENVY", "222"), MatchMode.BY_SERIAL_THEN_TEXT, True),
    ],
)
def test_killer_matches(returned, killer, mode, expected):
    assert killer_matches(returned, killer, mode) is expected


def test_confusion_counts_micro_case():
    # 3 killers, 2 found among 7 returned results.
    c = case("c1", "QUERY", ("KILLER ONE", None), ("KILLER TWO", None), ("KILLER THREE", None))
    results = [
        ("KILLER ONE", None),
        ("NOISE A", None),
        ("NOISE B", None),
        ("KILLER TWO", None),
        ("NOISE C", None),
        ("NOISE D", None),
        ("NOISE E", None),
    ]
    counts = confusion_counts(c, results, MatchMode.BY_SERIAL_THEN_TEXT)
    assert (counts.tp, counts.fp, counts.fn) == (2, 5, 1)
    assert counts.precision == 2 / 7
    assert counts.recall == 2 / 3


def test_confusion_counts_empty_results():
    c = case("c1", "QUERY", ("K1", None), ("K2", None))
    counts = confusion_counts(c, [], MatchMode.BY_SERIAL_THEN_TEXT)
    assert (counts.tp, counts.fp, counts.fn) == (0, 0, 2)
    assert counts.precision is None
    assert counts.recall == 0.0


def test_confusion_counts_perfect_identity():
    c = case("c1", "QUERY", ("K1", "1"), ("K2", "2"))
    counts = confusion_counts(c, [("K1", "1"), ("K2", "2")], MatchMode.BY_SERIAL_THEN_TEXT)
    assert counts.precision == 1.0
    assert counts.recall == 1.0
    assert counts.tp + counts.fn == len(c.killer_marks)


def test_dedup_returned():
    rows = [("A", "1"), ("A ", "1"), ("a!", None), ("A", None), ("B", "2")]
    assert dedup_returned(rows) == [("A", "1"), ("a!", None), ("B", "2")]


def test_eval_run_perfect_engine():
    cases = [case(f"c{i}", f"MARK {i}", (f"KILL {i}A", str(i)), (f"KILL {i}B", None)) for i in range(4)]
    report = eval_run(PerfectEngine(cases), cases, limit=10)
    assert report.precision == 1.0
    assert report.recall == 1.0
    assert report.found_any_rate == 1.0
    assert report.errored_cases == ()
    assert report.tp + report.fn == sum(len(c.killer_marks) for c in cases)


def test_eval_run_null_engine():
    cases = [case("c1", "MARK", ("KILL", None))]
    report = eval_run(NullEngine(), cases, limit=10)
    assert report.recall == 0.0
    assert report.precision is None
    assert report.found_any_rate == 0.0
    assert report.total_results == 0


def test_eval_run_rows_annotated_against_searched_mark():
    cases = [case("c1", "SERIES 1", ("SERIES 1", None))]
    engine = ScriptedEngine("s", {"SERIES 1": [("SERIES 1", None), ("EX SERIES ZONE", None)]})
    report = eval_run(engine, cases, limit=10)
    rows = report.outcomes[0].rows
    assert [r.rank for r in rows] == [1, 2]
    assert rows[0].exact_match and rows[0].levenshtein == 0 and rows[0].phonetic_match
    assert not rows[1].exact_match
    assert rows[1].levenshtein == 7
    assert rows[1].conflicted_mark == "SERIES 1"
    assert report.exact_match_rate == 0.5
    assert report.levenshtein_median == 3.5
    assert report.levenshtein_histogram == ((0, 1), (7, 1))


def test_engine_failure_surfaces_and_excludes():
    cases = [case("bad", "BOOM", ("K", None)), case("good", "FINE", ("FINE", None))]
    engine = ScriptedEngine("s", {"BOOM": None, "FINE": [("FINE", None)]})
    report = eval_run(engine, cases, limit=5)
    assert report.errored_cases == ("bad",)
    assert report.recall == 1.0  # errored case excluded from pools
    assert report.found_any_rate == 1.0
    errored = [o for o in report.outcomes if o.case_id == "bad"][0]
    assert "scripted failure" in errored.error


def test_match_mode_changes_counting():
    cases = [case("c1", "QUERY", ("KILLER", "999"))]
    engine = ScriptedEngine("s", {"QUERY": [("KILLER", "123")]})  # right text, wrong serial
    by_serial = eval_run(engine, cases, limit=5, options=EvalOptions(match_mode=MatchMode.BY_SERIAL_THEN_TEXT))
    text_only = eval_run(engine, cases, limit=5, options=EvalOptions(match_mode=MatchMode.TEXT_ONLY))
    assert by_serial.recall == 0.0
    assert text_only.recall == 1.0


def test_dedup_option_collapses_repeats():
    cases = [case("c1", "QUERY", ("KILLER", None))]
    engine = ScriptedEngine("s", {"QUERY": [("NOISE", None), ("NOISE", None), ("KILLER", None)]})
    deduped = eval_run(engine, cases, limit=5, options=EvalOptions(dedup_results=True))
    raw = eval_run(engine, cases, limit=5, options=EvalOptions(dedup_results=False))
    assert deduped.fp == 1
    assert raw.fp == 2


def test_dead_serials_not_counted_as_fp():
    cases = [case("c1", "QUERY", ("KILLER", "1"))]
    engine = ScriptedEngine("s", {"QUERY": [("KILLER", "1"), ("ZOMBIE", "666")]})
    plain = eval_run(engine, cases, limit=5)
    lenient = eval_run(engine, cases, limit=5, options=EvalOptions(dead_serials=frozenset({"666"})))
    assert plain.fp == 1
    assert lenient.fp == 0
    assert lenient.recall == 1.0


def test_eval_at_limits_prefix_semantics():
    # Killers sit at ranks 1 and 12, so recall rises between limit 10 and 25.
    killer_rows = [("KILLER A", None)] + [(f"NOISE {i}", None) for i in range(10)] + [("KILLER B", None)]
    cases = [case("c1", "QUERY", ("KILLER A", None), ("KILLER B", None))]
    engine = ScriptedEngine("s", {"QUERY": killer_rows})
    reports = eval_at_limits(engine, cases, [10, 25], EvalOptions())
    assert [r.limit for r in reports] == [10, 25]
    assert reports[0].recall == 0.5
    assert reports[1].recall == 1.0
    assert reports[0].total_results == 10
    # identical recall at both limits when everything fits in the first
    tight = eval_at_limits(PerfectEngine(cases), cases, [10, 25], EvalOptions())
    assert tight[0].recall == tight[1].recall == 1.0
    assert tight[1].precision <= tight[0].precision


def test_eval_at_limit_one_perfect_single_killer():
    cases = [case(f"c{i}", f"MARK {i}", (f"KILL {i}", None)) for i in range(3)]
    reports = eval_at_limits(PerfectEngine(cases), cases, [1], EvalOptions())
    assert reports[0].recall == 1.0


def test_eval_at_limits_validates_limits():
    cases = [case("c1", "Q", ("K", None))]
    with pytest.raises(ValueError):
        eval_at_limits(NullEngine(), cases, [10, 10], EvalOptions())
    with pytest.raises(ValueError):
        eval_at_limits(NullEngine(), cases, [25, 10], EvalOptions())
    with pytest.raises(ValueError):
        eval_at_limits(NullEngine(), cases, [], EvalOptions())


def test_recall_monotone_in_limit_local_engine():
    records = tuple(
        TrademarkRecord(serial=f"{i:03d}", mark=f"BRAND {w}", status=Status.LIVE)
        for i, w in enumerate(["ALPHA", "ALPHB", "ALPHC", "BETA", "GAMMA", "DELTA"])
    )
    corpus = Corpus(records=records)
    cases = [case("c1", "BRAND ALPHA", ("BRAND ALPHA", "000"), ("BRAND ALPHB", "001"))]
    engine = LocalEngine(name="full", index=build_index(corpus), profile=BUILTIN_PROFILES["full"])
    reports = eval_at_limits(engine, cases, [1, 2, 4, 6], EvalOptions())
    recalls = [r.recall for r in reports]
    assert recalls == sorted(recalls)


def test_workers_do_not_change_report():
    cases = [case(f"c{i}", f"MARK {i}", (f"MARK {i}", None)) for i in range(12)]
    engine = PerfectEngine(cases)
    seq = eval_run(engine, cases, limit=5, options=EvalOptions(workers=1))
    par = eval_run(engine, cases, limit=5, options=EvalOptions(workers=4))
    assert report_to_obj(seq) == report_to_obj(par)


def test_recorded_engine_round_trip(tmp_path):
    lines = [
        {"query": "CLOSET ENVY", "engine": "vendor-a",
         "results": [{"mark": "CLOSET ENVY", "serial": "86295022", "rank": 1},
                      {"mark": "ENVI", "serial": None, "rank": 2}]},
        {"query": "SERIES 1", "engine": "vendor-a",
         "results": []},
        {"query": "CLOSET ENVY", "engine": "vendor-b",
         "results": [{"mark": "KLOUT ENVY", "serial": None, "rank": 1}]},
    ]
    path = tmp_path / "recorded.jsonl"
    path.write_text("".join(json.dumps(l) + "\n" for l in lines), encoding="utf-8")
    engines = load_recorded_results(path)
    assert [e.name for e in engines] == ["vendor-a", "vendor-b"]
    a = engines[0]
    assert a.search("closet envy", 10) == [("CLOSET ENVY", "86295022"), ("ENVI", None)]
    assert a.search("CLOSET ENVY", 1) == [("CLOSET ENVY", "86295022")]
    assert a.search("SERIES 1", 10) == []
    with pytest.raises(KeyError):
        a.search("UNKNOWN", 10)


def test_recorded_engine_matches_local_replay(tmp_path):
    # Engine independence: replaying a local engine's output through the
    # recorded path yields an identical report.
    records = tuple(
        TrademarkRecord(serial=f"{i:03d}", mark=m, status=Status.LIVE)
        for i, m in enumerate(["CLOSET ENVY", "CLOZET ENVY", "SERIES 1", "UNRELATED THING"])
    )
    index = build_index(Corpus(records=records))
    local = LocalEngine(name="twin", index=index, profile=BUILTIN_PROFILES["full"])
    cases = [case("c1", "CLOSET ENVY", ("CLOSET ENVY", "000")), case("c2", "SERIES 1", ("SERIES 1", "002"))]
    lines = []
    for c in cases:
        rows = local.search(c.applied_mark, 50)
        lines.append({
            "query": c.applied_mark,
            "engine": "twin",
            "results": [{"mark": m, "serial": s, "rank": i} for i, (m, s) in enumerate(rows, start=1)],
        })
    path = tmp_path / "recorded.jsonl"
    path.write_text("".join(json.dumps(l) + "\n" for l in lines), encoding="utf-8")
    recorded = load_recorded_results(path)[0]
    left = eval_run(local, cases, limit=50)
    right = eval_run(recorded, cases, limit=50)
    assert report_to_obj(left) == report_to_obj(right)


@pytest.mark.parametrize(
    "line, fragment",
    [
        ({"query": "Q", "engine": "e", "results": [{"mark": "M", "rank": 0}]}, "rank"),
        ({"query": "Q", "engine": "e", "results": [{"mark": "M", "rank": 1}, {"mark": "N", "rank": 1}]}, "unique"),
        ({"query": "!!", "engine": "e", "results": []}, "normalizes"),
        ({"query": "Q", "engine": "", "results": []}, "engine"),
        ({"query": "Q", "engine": "e"}, "results"),
    ],
)
def test_recorded_file_validation(tmp_path, line, fragment):
    path = tmp_path / "recorded.jsonl"
    path.write_text(json.dumps(line) + "\n", encoding="utf-8")
    with pytest.raises(CorpusError) as err:
        load_recorded_results(path)
    assert fragment in str(err.value)


def test_recorded_duplicate_query_rejected(tmp_path):
    line = {"query": "Q", "engine": "e", "results": []}
    path = tmp_path / "recorded.jsonl"
    path.write_text(json.dumps(line) + "\n" + json.dumps(line) + "\n", encoding="utf-8")
    with pytest.raises(CorpusError) as err:
        load_recorded_results(path)
    assert "duplicate" in str(err.value)


def test_report_identities():
    cases = [
        case("c1", "MARK ONE", ("MARK ONE", None), ("OTHER KILLER", None)),
        case("c2", "MARK TWO", ("MISSING", None)),
    ]
    engine = ScriptedEngine("s", {
        "MARK ONE": [("MARK ONE", None), ("NOISE", None)],
        "MARK TWO": [("NOISE", None)],
    })
    report = eval_run(engine, cases, limit=10)
    for outcome in report.outcomes:
        expected_killers = 2 if outcome.case_id == "c1" else 1
        assert outcome.counts.tp + outcome.counts.fn == expected_killers
        assert outcome.found_any == (outcome.counts.tp >= 1)
    assert report.tp == 1 and report.fn == 2 and report.fp == 2
    assert report.recall == 1 / 3
    assert report.precision == 1 / 3
    assert report.found_any_rate == 0.5
    obj = report_to_obj(report)
    assert [c["case_id"] for c in obj["cases"]] == ["c1", "c2"]
