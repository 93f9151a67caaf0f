import pytest

from knockmark.corpus import Status
from knockmark.normalize import normalize
from knockmark.synth import generate
from oracles import lev_matrix


def test_same_seed_same_output():
    a_corpus, a_cases = generate(80, 12, seed=42)
    b_corpus, b_cases = generate(80, 12, seed=42)
    assert a_corpus == b_corpus
    assert a_cases == b_cases


def test_different_seed_differs():
    a_corpus, _ = generate(80, 12, seed=1)
    b_corpus, _ = generate(80, 12, seed=2)
    assert a_corpus != b_corpus


def test_marks_unique_and_canonical():
    corpus, _ = generate(200, 0, seed=9)
    canonicals = [normalize(r.mark).canonical for r in corpus.records]
    assert len(set(canonicals)) == len(canonicals)
    assert all(r.mark == c for r, c in zip(corpus.records, canonicals))


def test_killers_are_live_and_applied_within_budget():
    corpus, cases = generate(150, 30, seed=42, max_edits=2)
    by_serial = corpus.by_serial
    for case in cases:
        assert len(case.killer_marks) == 1
        killer = case.killer_marks[0]
        record = by_serial[killer.serial]
        assert record.status is Status.LIVE
        assert record.mark == killer.mark
        assert lev_matrix(normalize(case.applied_mark).canonical, normalize(killer.mark).canonical) <= 2


def test_zero_edits_means_exact_copies():
    _, cases = generate(100, 10, seed=5, max_edits=0)
    for case in cases:
        assert case.applied_mark == case.killer_marks[0].mark


def test_applied_mark_never_collides_with_other_records():
    corpus, cases = generate(150, 30, seed=13, max_edits=2)
    canonicals = {normalize(r.mark).canonical: r.serial for r in corpus.records}
    for case in cases:
        applied = normalize(case.applied_mark).canonical
        if applied in canonicals:
            assert canonicals[applied] == case.killer_marks[0].serial


def test_too_many_cases_rejected():
    with pytest.raises(ValueError):
        generate(10, 10, seed=1)  # cannot find 10 live killers among 10 records reliably


def test_case_ids_sequential():
    _, cases = generate(60, 9, seed=3)
    assert [c.case_id for c in cases] == [f"case-{i:04d}" for i in range(9)]
