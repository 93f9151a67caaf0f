"""Text normalization applied identically to queries and corpus marks.

Every matcher in the pipeline (exact, phonetic, edit distance, token
overlap) compares normalized forms, never raw mark text, so the rules
here are deliberately rigid: uppercase, ASCII-fold what Unicode can
decompose, and reduce everything else to token boundaries.
"""

import unicodedata
from dataclasses import dataclass, field

_ALNUM = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789")


@dataclass(frozen=True, slots=True)
class NormalizedMark:
    """A mark reduced to uppercase ASCII tokens.

    ``canonical`` is always the tokens joined by single spaces; an empty
    input yields zero tokens and an empty canonical string.
    """

    canonical: str
    tokens: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return bool(self.tokens)


EMPTY_MARK = NormalizedMark("", ())


def normalize(raw: str) -> NormalizedMark:
    """Normalize arbitrary text into a NormalizedMark.

    Rules, in order: NFKD-decompose so accented letters fold to their
    ASCII base (combining marks are discarded), uppercase, then replace
    every character outside A-Z/0-9 with a space and collapse runs of
    whitespace. Characters with no ASCII decomposition are not
    transliterated; they become token boundaries like punctuation.

    Total and idempotent: normalizing a canonical string reproduces it.
    """
    decomposed = unicodedata.normalize("NFKD", raw)
    folded = "".join(c for c in decomposed if not unicodedata.combining(c)).upper()
    tokens = "".join(c if c in _ALNUM else " " for c in folded).split()
    if not tokens:
        return EMPTY_MARK
    return NormalizedMark(" ".join(tokens), tuple(tokens))


def singularize(token: str) -> str:
    """Fold a trivially plural token to its singular form.

    Strips one trailing S when the token is longer than 3 characters and
    does not end in a double S ("GLASS" stays put). Applied only when an
    engine profile enables plural folding.
    """
    if len(token) > 3 and token.endswith("S") and not token.endswith("SS"):
        return token[:-1]
    return token
