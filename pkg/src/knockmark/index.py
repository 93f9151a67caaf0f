"""Immutable in-memory index over a corpus for candidate generation.

Three retrieval routes feed the candidate set: shared tokens, equal
phonetic code sequences, and a 3-gram count filter. The gram filter is
what makes candidate generation safe to use for edit-distance matching:
with grams drawn from the canonical string padded by two '#' sentinels
on each side, a single edit can remove at most 3 distinct grams, so any
record within edit distance k of the query must still share at least
|G(query)| - 3k gram types. Records meeting that threshold are kept,
which guarantees candidates are a superset of every record within the
edit budget. When the bound degenerates — the query is shorter than
``min_gram_len``, or the budget is so large that |G(query)| - 3k drops
below 1 — the gram route is replaced by a corpus scan, which keeps the
guarantee trivially true.
"""

import hashlib
from dataclasses import dataclass, field

from .corpus import Corpus, TrademarkRecord
from .normalize import NormalizedMark, normalize, singularize
from .phonetics import code_sequence

GRAM_SIZE = 3
_PAD = "#" * (GRAM_SIZE - 1)


def grams(canonical: str) -> frozenset[str]:
    """Distinct 3-grams of a canonical string padded with '#' sentinels."""
    if not canonical:
        return frozenset()
    padded = _PAD + canonical + _PAD
    return frozenset(padded[i : i + GRAM_SIZE] for i in range(len(padded) - GRAM_SIZE + 1))


@dataclass(frozen=True, slots=True)
class CandidateOptions:
    """Knobs for candidate generation.

    ``edit_budget`` is the edit distance the gram filter must not miss;
    ``min_gram_len`` is the canonical query length below which the gram
    route is replaced by a full scan.
    """

    edit_budget: int = 2
    use_phonetic: bool = True
    use_tokens: bool = True
    min_gram_len: int = 5

    def __post_init__(self):
        if self.edit_budget < 0:
            raise ValueError("edit_budget must be >= 0")


@dataclass(frozen=True)
class Index:
    """Read-only postings over one corpus; record ids are corpus positions.

    Never mutated after build_index returns; rebuild on corpus change.
    Safe to share across threads.
    """

    records: tuple[TrademarkRecord, ...]
    norm_cache: tuple[NormalizedMark, ...]
    code_cache: tuple[tuple[str, ...], ...]
    token_postings: dict[str, tuple[int, ...]]
    folded_postings: dict[str, tuple[int, ...]]
    phonetic_postings: dict[tuple[str, ...], tuple[int, ...]]
    gram_postings: dict[str, tuple[int, ...]]
    by_serial: dict[str, TrademarkRecord]
    built_from: str = field(default="")

    def __len__(self) -> int:
        return len(self.records)

    @property
    def all_ids(self) -> range:
        return range(len(self.records))


def corpus_fingerprint(corpus: Corpus) -> str:
    """Stable hex digest of the record contents (not load metadata)."""
    h = hashlib.sha256()
    for rec in corpus.records:
        h.update(
            "\x1f".join(
                (rec.serial, rec.mark, rec.status.value, ",".join(map(str, sorted(rec.classes))))
            ).encode("utf-8")
        )
        h.update(b"\x1e")
    return h.hexdigest()


def build_index(corpus: Corpus) -> Index:
    """Build all postings for a corpus in one deterministic pass."""
    norms: list[NormalizedMark] = []
    codes: list[tuple[str, ...]] = []
    token_postings: dict[str, list[int]] = {}
    folded_postings: dict[str, list[int]] = {}
    phonetic_postings: dict[tuple[str, ...], list[int]] = {}
    gram_postings: dict[str, list[int]] = {}

    for rid, rec in enumerate(corpus.records):
        norm = normalize(rec.mark)
        norms.append(norm)
        seq = code_sequence(norm)
        codes.append(seq)
        for tok in set(norm.tokens):
            token_postings.setdefault(tok, []).append(rid)
        for tok in {singularize(t) for t in norm.tokens}:
            folded_postings.setdefault(tok, []).append(rid)
        if seq:
            phonetic_postings.setdefault(seq, []).append(rid)
        for g in grams(norm.canonical):
            gram_postings.setdefault(g, []).append(rid)

    # Record ids are appended in corpus order, so every posting list is
    # already sorted and duplicate-free.
    return Index(
        records=corpus.records,
        norm_cache=tuple(norms),
        code_cache=tuple(codes),
        token_postings={t: tuple(ids) for t, ids in token_postings.items()},
        folded_postings={t: tuple(ids) for t, ids in folded_postings.items()},
        phonetic_postings={s: tuple(ids) for s, ids in phonetic_postings.items()},
        gram_postings={g: tuple(ids) for g, ids in gram_postings.items()},
        by_serial=dict(corpus.by_serial),
        built_from=corpus_fingerprint(corpus),
    )


def candidates(
    index: Index,
    query: NormalizedMark,
    opts: CandidateOptions = CandidateOptions(),
    *,
    fold_tokens: bool = False,
) -> set[int]:
    """Record ids worth scoring for a query.

    Union of the enabled token and phonetic routes with the gram count
    filter (or a full scan for short queries). Guaranteed to contain
    every record within ``opts.edit_budget`` canonical edit distance of
    the query; an empty query yields an empty set.
    """
    if not query.tokens:
        return set()
    out: set[int] = set()

    if opts.use_tokens:
        if fold_tokens:
            for tok in {singularize(t) for t in query.tokens}:
                out.update(index.folded_postings.get(tok, ()))
        else:
            for tok in set(query.tokens):
                out.update(index.token_postings.get(tok, ()))

    if opts.use_phonetic:
        out.update(index.phonetic_postings.get(code_sequence(query), ()))

    query_grams = grams(query.canonical)
    threshold = len(query_grams) - opts.edit_budget * GRAM_SIZE
    if len(query.canonical) < opts.min_gram_len or threshold < 1:
        out.update(index.all_ids)
        return out

    shared: dict[int, int] = {}
    for g in query_grams:
        for rid in index.gram_postings.get(g, ()):
            shared[rid] = shared.get(rid, 0) + 1
    out.update(rid for rid, n in shared.items() if n >= threshold)
    return out
