"""Composite risk scoring and banding for a query/record pair.

The score blends edit similarity, a phonetic-match flag, and token-set
overlap, then discounts cross-class hits. Vendor terminals report a
number like this plus a categorical risk level; both the weights and the
band cut points here are configuration, not fixed truths, so every knob
lives on a dataclass an engine profile can override.
"""

import enum
from dataclasses import dataclass

from .corpus import TrademarkRecord
from .editdist import edit_similarity, levenshtein
from .normalize import NormalizedMark, singularize
from .phonetics import phonetic_match


@dataclass(frozen=True, slots=True)
class Weights:
    """Blend weights, normalized to sum to 1 at construction."""

    w_edit: float = 0.5
    w_phon: float = 0.3
    w_token: float = 0.2
    class_mismatch_factor: float = 0.6

    def __post_init__(self):
        if min(self.w_edit, self.w_phon, self.w_token) < 0:
            raise ValueError("weights must be non-negative")
        total = self.w_edit + self.w_phon + self.w_token
        if total <= 0:
            raise ValueError("at least one matcher weight must be positive")
        if abs(total - 1.0) > 1e-12:
            object.__setattr__(self, "w_edit", self.w_edit / total)
            object.__setattr__(self, "w_phon", self.w_phon / total)
            object.__setattr__(self, "w_token", self.w_token / total)
        if not 0 < self.class_mismatch_factor <= 1:
            raise ValueError("class_mismatch_factor must be in (0, 1]")


class RiskBand(enum.Enum):
    VERY_HIGH = "VERY_HIGH"
    HIGH = "HIGH"
    MEDIUM = "MEDIUM"
    LOW = "LOW"


@dataclass(frozen=True, slots=True)
class BandThresholds:
    """Lower bounds of the VERY_HIGH / HIGH / MEDIUM bands; LOW is the rest."""

    very_high: float = 0.85
    high: float = 0.65
    medium: float = 0.40

    def __post_init__(self):
        if not 0 < self.medium < self.high < self.very_high <= 1:
            raise ValueError("thresholds must satisfy 0 < medium < high < very_high <= 1")


DEFAULT_WEIGHTS = Weights()
DEFAULT_THRESHOLDS = BandThresholds()


def jaccard(a: frozenset[str] | set[str], b: frozenset[str] | set[str]) -> float:
    """Token-set overlap; 0 when either side is empty and they differ."""
    if not a and not b:
        return 1.0
    union = len(a | b)
    if union == 0:
        return 0.0
    return len(a & b) / union


def score(
    query: NormalizedMark,
    record_norm: NormalizedMark,
    record: TrademarkRecord,
    query_classes: frozenset[int] | None = None,
    weights: Weights = DEFAULT_WEIGHTS,
    *,
    fold_plurals: bool = False,
) -> float:
    """Risk score in [0, 1] for one record against a query.

    Exact canonical equality pins the base score to 1.0; otherwise the
    weighted blend applies. When the caller supplies query classes and
    they share nothing with the record's classes, the score is scaled by
    the mismatch factor (two identical marks in unrelated classes can
    coexist). Plural folding affects only the token-overlap term.

    Raises ValueError on an empty query.
    """
    if not query.tokens:
        raise ValueError("score() requires a non-empty query")
    if query.canonical == record_norm.canonical:
        base = 1.0
    else:
        if fold_plurals:
            q_tokens = {singularize(t) for t in query.tokens}
            r_tokens = {singularize(t) for t in record_norm.tokens}
        else:
            q_tokens = set(query.tokens)
            r_tokens = set(record_norm.tokens)
        base = (
            weights.w_edit * edit_similarity(query.canonical, record_norm.canonical)
            + weights.w_phon * (1.0 if phonetic_match(query, record_norm) else 0.0)
            + weights.w_token * jaccard(q_tokens, r_tokens)
        )
    if query_classes is not None and not (query_classes & record.classes):
        base *= weights.class_mismatch_factor
    return min(max(base, 0.0), 1.0)


def band(value: float, thresholds: BandThresholds = DEFAULT_THRESHOLDS) -> RiskBand:
    """Map a score to its risk band; the cut points partition [0, 1]."""
    if value >= thresholds.very_high:
        return RiskBand.VERY_HIGH
    if value >= thresholds.high:
        return RiskBand.HIGH
    if value >= thresholds.medium:
        return RiskBand.MEDIUM
    return RiskBand.LOW


def query_levenshtein(query: NormalizedMark, record_norm: NormalizedMark) -> int:
    """Edit distance between canonical forms, as reported on results."""
    return levenshtein(query.canonical, record_norm.canonical)
