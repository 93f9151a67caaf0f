import random
from pathlib import Path

import pytest

from knockmark.corpus import Corpus, Status, TrademarkRecord

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Small alphabet so random marks collide and sit near each other in edit
# distance; that's where candidate generation has to earn its keep.
ALPHABET = "ABCDEF"
STATUSES = (Status.LIVE, Status.LIVE, Status.LIVE, Status.DEAD, Status.PENDING)


def random_word(rng: random.Random, min_len=1, max_len=8) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(min_len, max_len)))


def random_mark(rng: random.Random) -> str:
    return " ".join(random_word(rng) for _ in range(rng.randint(1, 2)))


def make_corpus(rng: random.Random, n: int) -> Corpus:
    records = []
    for i in range(n):
        records.append(
            TrademarkRecord(
                serial=f"{i:06d}",
                mark=random_mark(rng),
                status=rng.choice(STATUSES),
                classes=frozenset(rng.sample(range(1, 46), rng.randint(1, 3))),
            )
        )
    return Corpus(records=tuple(records))


@pytest.fixture(scope="session")
def demo_corpus_path() -> Path:
    return DATA_DIR / "demo_corpus.jsonl"


@pytest.fixture(scope="session")
def demo_cases_path() -> Path:
    return DATA_DIR / "demo_cases.jsonl"
