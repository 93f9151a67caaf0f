"""Knockout trademark search over a local corpus, plus an evaluation
harness that measures any search engine against rejected applications
and the marks cited against them."""

from .corpus import (
    ConflictCase,
    Corpus,
    KillerRef,
    Status,
    TrademarkRecord,
    load_conflict_cases,
    load_corpus,
)
from .errors import CorpusError, EmptyQueryError, KnockmarkError
from .evaluate import (
    ConfusionCounts,
    EvalOptions,
    EvalReport,
    LocalEngine,
    MatchMode,
    RecordedEngine,
    confusion_counts,
    eval_at_limits,
    eval_run,
    killer_matches,
    load_recorded_results,
)
from .index import CandidateOptions, Index, build_index, candidates
from .normalize import NormalizedMark, normalize, singularize
from .phonetics import phonetic_match, soundex
from .profiles import BUILTIN_PROFILES, EngineProfile, get_profile
from .scoring import BandThresholds, RiskBand, Weights, band, score
from .search import ResultFilter, SearchOptions, SearchResult, knockout_search
from .editdist import damerau_levenshtein, edit_similarity, levenshtein

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_PROFILES",
    "BandThresholds",
    "CandidateOptions",
    "ConflictCase",
    "ConfusionCounts",
    "Corpus",
    "CorpusError",
    "EmptyQueryError",
    "EngineProfile",
    "EvalOptions",
    "EvalReport",
    "Index",
    "KillerRef",
    "KnockmarkError",
    "LocalEngine",
    "MatchMode",
    "NormalizedMark",
    "RecordedEngine",
    "ResultFilter",
    "RiskBand",
    "SearchOptions",
    "SearchResult",
    "Status",
    "TrademarkRecord",
    "Weights",
    "band",
    "build_index",
    "candidates",
    "confusion_counts",
    "damerau_levenshtein",
    "edit_similarity",
    "eval_at_limits",
    "eval_run",
    "get_profile",
    "killer_matches",
    "knockout_search",
    "levenshtein",
    "load_conflict_cases",
    "load_corpus",
    "load_recorded_results",
    "normalize",
    "phonetic_match",
    "score",
    "singularize",
    "soundex",
]
