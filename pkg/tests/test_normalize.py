import string

import pytest
from hypothesis import given, strategies as st

from knockmark.normalize import NormalizedMark, normalize, singularize


@pytest.mark.parametrize(
    "raw, canonical, tokens",
    [
        ("Closet Envy!", "CLOSET ENVY", ("CLOSET", "ENVY")),
        ("", "", ()),
        ("SERIES 1", "SERIES 1", ("SERIES", "1")),
        ("  closet   envy  ", "CLOSET ENVY", ("CLOSET", "ENVY")),
        ("Café-Noir", "CAFE NOIR", ("CAFE", "NOIR")),
        ("l'étoile", "L ETOILE", ("L", "ETOILE")),
        ("!!!", "", ()),
        ("a&b", "A B", ("A", "B")),
        ("Nº 5", "NO 5", ("NO", "5")),
    ],
)
def test_normalize_examples(raw, canonical, tokens):
    norm = normalize(raw)
    assert norm.canonical == canonical
    assert norm.tokens == tokens


def test_canonical_is_tokens_joined():
    norm = normalize("Some-Brand 22 Name")
    assert norm.canonical == " ".join(norm.tokens)


@given(st.text(max_size=60))
def test_idempotent(raw):
    once = normalize(raw)
    again = normalize(once.canonical)
    assert again == once


@given(st.text(max_size=60))
def test_token_alphabet(raw):
    norm = normalize(raw)
    allowed = set(string.ascii_uppercase + string.digits)
    for token in norm.tokens:
        assert token
        assert set(token) <= allowed


@given(st.text(max_size=60))
def test_case_insensitive(raw):
    assert normalize(raw) == normalize(raw.lower()) == normalize(raw.upper())


def test_punctuation_swap_insensitive():
    assert normalize("CLOSET-ENVY") == normalize("CLOSET_ENVY") == normalize("CLOSET/ENVY")


def test_empty_mark_is_falsy():
    assert not normalize("##!")
    assert normalize("A")
    assert normalize("") == NormalizedMark("", ())


@pytest.mark.parametrize(
    "token, expected",
    [
        ("ENVIES", "ENVIE"),
        ("GLASS", "GLASS"),
        ("1", "1"),
        ("CATS", "CAT"),
        ("GAS", "GAS"),  # length 3: too short to strip
        ("S", "S"),
        ("BOSS", "BOSS"),
    ],
)
def test_singularize(token, expected):
    assert singularize(token) == expected
