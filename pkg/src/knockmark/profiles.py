"""Named engine profiles: bundles of matcher routes, filters, and weights.

Five built-ins ship so the evaluation harness can compare engines of
increasing aggressiveness out of the box:

  exact-only  returns only exact canonical matches
  phonetic    returns phonetic matches (exact matches phonetically match)
  edit        returns records within 2 canonical edits
  gram        ranks everything the gram candidate filter admits
  full        all candidate routes, no result filter — the noisiest

They differ only in configuration; the pipeline underneath is shared.
"""

from dataclasses import dataclass, replace

from .index import CandidateOptions
from .scoring import DEFAULT_THRESHOLDS, DEFAULT_WEIGHTS, BandThresholds, Weights
from .search import ResultFilter, SearchOptions


@dataclass(frozen=True, slots=True)
class EngineProfile:
    """A named, reusable engine configuration."""

    name: str
    candidate_opts: CandidateOptions = CandidateOptions()
    result_filter: ResultFilter = ResultFilter.ALL
    max_edits: int = 2
    fold_plurals: bool = False
    weights: Weights = DEFAULT_WEIGHTS
    thresholds: BandThresholds = DEFAULT_THRESHOLDS
    min_score: float = 0.0

    def search_options(
        self,
        limit: int | None = 100,
        *,
        include_dead: bool = False,
        classes: frozenset[int] | None = None,
        min_score: float | None = None,
    ) -> SearchOptions:
        """Materialize per-request options carrying this profile's behavior."""
        return SearchOptions(
            limit=limit,
            include_dead=include_dead,
            classes=classes,
            min_score=self.min_score if min_score is None else min_score,
            candidate_opts=self.candidate_opts,
            weights=self.weights,
            result_filter=self.result_filter,
            max_edits=self.max_edits,
            fold_plurals=self.fold_plurals,
            thresholds=self.thresholds,
        )

    def with_name(self, name: str) -> "EngineProfile":
        return replace(self, name=name)


BUILTIN_PROFILES: dict[str, EngineProfile] = {
    p.name: p
    for p in (
        EngineProfile(
            name="exact-only",
            candidate_opts=CandidateOptions(edit_budget=0, use_phonetic=False, use_tokens=True),
            result_filter=ResultFilter.EXACT_ONLY,
        ),
        EngineProfile(
            name="phonetic",
            candidate_opts=CandidateOptions(edit_budget=0, use_phonetic=True, use_tokens=False),
            result_filter=ResultFilter.PHONETIC,
        ),
        EngineProfile(
            name="edit",
            candidate_opts=CandidateOptions(edit_budget=2, use_phonetic=False, use_tokens=False),
            result_filter=ResultFilter.WITHIN_EDITS,
            max_edits=2,
        ),
        EngineProfile(
            name="gram",
            candidate_opts=CandidateOptions(edit_budget=2, use_phonetic=False, use_tokens=False),
        ),
        EngineProfile(
            name="full",
            candidate_opts=CandidateOptions(edit_budget=2, use_phonetic=True, use_tokens=True),
        ),
    )
}


def get_profile(name: str) -> EngineProfile:
    """Look up a built-in profile; raises KeyError listing valid names."""
    try:
        return BUILTIN_PROFILES[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_PROFILES))
        raise KeyError(f"unknown profile {name!r}; built-ins: {known}") from None
