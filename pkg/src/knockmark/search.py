"""The knockout search pipeline: normalize, generate candidates, score,
filter, rank deterministically.

Ordering is a total order — exact matches first, then score descending,
then LIVE before PENDING before DEAD, then serial ascending — so a run
is reproducible across platforms and hash seeds, and the results at a
smaller limit are always a prefix of the results at a larger one.
"""

import enum
from dataclasses import dataclass

from .corpus import Status
from .errors import EmptyQueryError
from .index import CandidateOptions, Index, candidates
from .normalize import NormalizedMark, normalize
from .phonetics import phonetic_match
from .scoring import (
    DEFAULT_THRESHOLDS,
    DEFAULT_WEIGHTS,
    BandThresholds,
    RiskBand,
    Weights,
    band,
    query_levenshtein,
    score,
)


class ResultFilter(enum.Enum):
    """Which scored candidates an engine keeps.

    ALL keeps everything above min_score; the narrower filters model
    engines that only surface exact, phonetic, or near-edit hits.
    """

    ALL = "all"
    EXACT_ONLY = "exact_only"
    PHONETIC = "phonetic"
    WITHIN_EDITS = "within_edits"


@dataclass(frozen=True, slots=True)
class SearchOptions:
    """Per-request search options.

    ``limit=None`` means unlimited. The trailing fields (result_filter,
    max_edits, fold_plurals, thresholds) carry engine-profile behavior
    through the same object; their defaults leave the pipeline wide open.
    """

    limit: int | None = 100
    include_dead: bool = False
    classes: frozenset[int] | None = None
    min_score: float = 0.0
    candidate_opts: CandidateOptions = CandidateOptions()
    weights: Weights = DEFAULT_WEIGHTS
    result_filter: ResultFilter = ResultFilter.ALL
    max_edits: int = 2
    fold_plurals: bool = False
    thresholds: BandThresholds = DEFAULT_THRESHOLDS

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1 or None for unlimited")
        if not 0.0 <= self.min_score <= 1.0:
            raise ValueError("min_score must be in [0, 1]")


@dataclass(frozen=True, slots=True)
class SearchResult:
    """One ranked hit; record fields are echoed verbatim."""

    serial: str
    mark: str
    status: Status
    classes: frozenset[int]
    owner: str | None
    score: float
    band: RiskBand
    exact_match: bool
    phonetic_match: bool
    levenshtein: int


def _sort_key(result: SearchResult):
    return (not result.exact_match, -result.score, result.status.rank, result.serial)


def _keeps(opts: SearchOptions, result: SearchResult) -> bool:
    if opts.result_filter is ResultFilter.ALL:
        return True
    if opts.result_filter is ResultFilter.EXACT_ONLY:
        return result.exact_match
    if opts.result_filter is ResultFilter.PHONETIC:
        return result.phonetic_match
    return result.levenshtein <= opts.max_edits


def search_normalized(index: Index, query: NormalizedMark, opts: SearchOptions = SearchOptions()) -> list[SearchResult]:
    """knockout_search on an already-normalized query."""
    if not query.tokens:
        raise EmptyQueryError("query normalized to zero tokens")
    results: list[SearchResult] = []
    for rid in candidates(index, query, opts.candidate_opts, fold_tokens=opts.fold_plurals):
        rec = index.records[rid]
        if rec.status is Status.DEAD and not opts.include_dead:
            continue
        norm = index.norm_cache[rid]
        value = score(
            query, norm, rec,
            query_classes=opts.classes,
            weights=opts.weights,
            fold_plurals=opts.fold_plurals,
        )
        if value < opts.min_score:
            continue
        result = SearchResult(
            serial=rec.serial,
            mark=rec.mark,
            status=rec.status,
            classes=rec.classes,
            owner=rec.owner,
            score=value,
            band=band(value, opts.thresholds),
            exact_match=query.canonical == norm.canonical,
            phonetic_match=phonetic_match(query, norm),
            levenshtein=query_levenshtein(query, norm),
        )
        if _keeps(opts, result):
            results.append(result)
    results.sort(key=_sort_key)
    if opts.limit is not None:
        del results[opts.limit:]
    return results


def knockout_search(index: Index, raw_query: str, opts: SearchOptions = SearchOptions()) -> list[SearchResult]:
    """Search the index for marks likely to block the queried mark.

    Raises EmptyQueryError when the query normalizes to zero tokens
    (distinct from a valid query with no results).
    """
    return search_normalized(index, normalize(raw_query), opts)
