"""Soundex codes and the phonetic-match predicate.

The coder follows the National Archives flavor of American Soundex:
H and W are transparent between same-coded consonants, vowels separate
them (so the consonant is coded twice), and a letter carrying the first
letter's code is absorbed by it. Fixing these variants keeps codes
reproducible bit-for-bit.
"""

from .normalize import NormalizedMark

# Consonant classes; A, E, I, O, U, Y, H, W carry no digit.
_CODES = {}
for _letters, _digit in (
    ("BFPV", "1"),
    ("CGJKQSXZ", "2"),
    ("DT", "3"),
    ("L", "4"),
    ("MN", "5"),
    ("R", "6"),
):
    for _c in _letters:
        _CODES[_c] = _digit

_VOWELISH = frozenset("AEIOUY")


def soundex(token: str) -> str:
    """Encode one normalized token as a Soundex code.

    Letter tokens produce the classic letter + three digits. Tokens with
    no letters (pure digit tokens such as "1") pass through unchanged so
    numeric marks compare literally. Digits inside mixed tokens are
    dropped before coding.

    Raises ValueError on an empty token.
    """
    if not token:
        raise ValueError("soundex() requires a non-empty token")
    letters = [c for c in token if not c.isdigit()]
    if not letters:
        return token

    first = letters[0]
    digits = []
    # Seed with the first letter's own code so a same-coded letter
    # immediately after it is absorbed rather than coded again.
    prev = _CODES.get(first)
    for c in letters[1:]:
        code = _CODES.get(c)
        if code is None:
            if c in "HW":
                continue  # transparent: does not break a same-code run
            prev = None  # vowel separator: next same-code letter is coded again
            continue
        if code != prev:
            digits.append(code)
            prev = code
        if len(digits) == 3:
            break
    return first + "".join(digits).ljust(3, "0")


def code_sequence(mark: NormalizedMark) -> tuple[str, ...]:
    """Per-token Soundex codes for a normalized mark, in token order."""
    return tuple(soundex(t) for t in mark.tokens)


def phonetic_match(a: NormalizedMark, b: NormalizedMark) -> bool:
    """True when both marks are non-empty and their code sequences agree.

    Token-wise comparison, so "SERIES 1" and "SERIES" never match, and
    digit tokens must be literally equal.
    """
    if not a.tokens or not b.tokens:
        return False
    return code_sequence(a) == code_sequence(b)
