"""Seeded generator for a synthetic corpus plus conflict cases.

Produces a desk-scale stand-in for a real rejection dataset: N records
with unique two-word (sometimes numbered) marks, and M cases whose
applied-for marks are controlled perturbations of designated live
records. Case kinds rotate deterministically through exact copies,
random character edits, and sound-preserving substitutions, so every
applied mark stays within the configured edit budget of its killer and a
phonetic-only engine still has something to find. Same seed, same bytes.
"""

import datetime as dt
import random

from .corpus import ConflictCase, Corpus, KillerRef, Status, TrademarkRecord
from .editdist import levenshtein
from .normalize import normalize
from .phonetics import phonetic_match

WORDS = (
    "ACORN", "AERO", "ALPINE", "AMBER", "ANCHOR", "APEX", "ARBOR", "ARGON",
    "ASPEN", "ASTRA", "ATLAS", "AURORA", "AVALON", "AZURE", "BALLAD", "BANNER",
    "BEACON", "BIRCH", "BISON", "BLAZE", "BOLT", "BOREAL", "BRAVO", "BREEZE",
    "BRONCO", "CABIN", "CADENCE", "CANYON", "CARBON", "CASCADE", "CEDAR",
    "CHROME", "CINDER", "CIPHER", "CITRUS", "CLOVER", "COBALT", "COMET",
    "CORAL", "CREST", "CRICKET", "CRYSTAL", "CYPRESS", "DELTA", "DRIFT",
    "DYNAMO", "ECHO", "EMBER", "ENVY", "EPOCH", "EVEREST", "FABLE", "FALCON",
    "FATHOM", "FERN", "FLINT", "FORGE", "FOSSIL", "FROST", "GARNET", "GLADE",
    "GRANITE", "GROVE", "HARBOR", "HAVEN", "HAZEL", "HELIX", "HOLLOW",
    "HORIZON", "IGLOO", "INDIGO", "IRIS", "IVORY", "JASPER", "JUNIPER",
    "KESTREL", "LAGOON", "LANTERN", "LEDGER", "LOTUS", "LUMEN", "MAGNET",
    "MAPLE", "MARBLE", "MERIDIAN", "MESA", "MIRAGE", "MOSAIC", "NECTAR",
    "NIMBUS", "NOVA", "OASIS", "OCHRE", "ONYX", "OPAL", "ORBIT", "ORCHID",
    "OSPREY", "PALISADE", "PEBBLE", "PINNACLE", "PLUME", "PRAIRIE", "PRISM",
    "QUARRY", "QUARTZ", "RAVEN", "REEF", "RIDGE", "RIVET", "SABLE", "SAFFRON",
    "SAVANNA", "SIERRA", "SOLSTICE", "SPRUCE", "SUMMIT", "TALON", "TEMPO",
    "THICKET", "TIMBER", "TOPAZ", "TRILLIUM", "TUNDRA", "UMBER", "VALOR",
    "VELVET", "VERTEX", "VESPER", "WALNUT", "WILLOW", "WREN", "ZENITH",
    "ZEPHYR",
)

OWNERS = (
    "Northgate Brands LLC", "Bluewater Holdings Inc.", "Crestline Group",
    "Hawthorn Ventures", "Stonebridge Partners", None,
)

_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_VOWELS = "AEIOU"
_SOUND_GROUPS = ("BFPV", "CGJKQSXZ", "DT", "MN", _VOWELS)


def _is_canonical(text: str) -> bool:
    return bool(text) and normalize(text).canonical == text


def _random_mark(rng: random.Random) -> str:
    mark = f"{rng.choice(WORDS)} {rng.choice(WORDS)}"
    if rng.random() < 0.15:
        mark += f" {rng.randrange(1, 10)}"
    return mark


def _random_edit(rng: random.Random, text: str) -> str:
    """One canonical-preserving insert/delete/substitute on a non-space."""
    for _ in range(50):
        op = rng.choice(("sub", "ins", "del"))
        pos = rng.randrange(len(text))
        if text[pos] == " ":
            continue
        if op == "sub":
            new = rng.choice(_LETTERS)
            if new == text[pos]:
                continue
            edited = text[:pos] + new + text[pos + 1:]
        elif op == "ins":
            edited = text[:pos] + rng.choice(_LETTERS) + text[pos:]
        else:
            edited = text[:pos] + text[pos + 1:]
        if _is_canonical(edited):
            return edited
    return text


def _sound_preserving_edit(rng: random.Random, text: str) -> str:
    """Substitute one letter with another from its Soundex group.

    Never touches a token's first letter, digits, or spaces, so the
    per-token code sequence is unchanged. Returns the input when no
    position qualifies.
    """
    positions = []
    for pos, c in enumerate(text):
        if pos == 0 or text[pos - 1] == " ":
            continue
        for group in _SOUND_GROUPS:
            if c in group and len(group) > 1:
                positions.append((pos, group))
                break
    rng.shuffle(positions)
    for pos, group in positions:
        replacement = rng.choice([c for c in group if c != text[pos]])
        edited = text[:pos] + replacement + text[pos + 1:]
        if _is_canonical(edited):
            return edited
    return text


def _perturb(rng: random.Random, mark: str, kind: str, max_edits: int) -> str:
    if kind == "exact" or max_edits == 0:
        return mark
    n_edits = rng.randint(1, max_edits)
    out = mark
    for _ in range(n_edits):
        out = _sound_preserving_edit(rng, out) if kind == "phonetic" else _random_edit(rng, out)
    return out


def generate(n_records: int, n_cases: int, seed: int, max_edits: int = 2) -> tuple[Corpus, list[ConflictCase]]:
    """Build a corpus and cases; deterministic for a given seed.

    Record marks are unique in canonical form; killers are unique live
    records; every applied mark is within ``max_edits`` canonical edits
    of its killer and never collides with any other record's mark.
    """
    if n_records < 1 or n_cases < 0 or max_edits < 0:
        raise ValueError("need n_records >= 1, n_cases >= 0, max_edits >= 0")
    rng = random.Random(seed)

    records: list[TrademarkRecord] = []
    canonicals: set[str] = set()
    for i in range(n_records):
        while True:
            mark = _random_mark(rng)
            if mark not in canonicals:
                break
        canonicals.add(mark)
        roll = rng.random()
        status = Status.LIVE if roll < 0.7 else Status.DEAD if roll < 0.9 else Status.PENDING
        filing = dt.date(2005 + rng.randrange(16), 1 + rng.randrange(12), 1 + rng.randrange(28))
        registered = None
        if status is not Status.PENDING and rng.random() < 0.8:
            registered = filing + dt.timedelta(days=rng.randrange(120, 700))
        records.append(
            TrademarkRecord(
                serial=f"9{i:07d}",
                mark=mark,
                status=status,
                classes=frozenset(rng.sample(range(1, 46), rng.randint(1, 3))),
                registration=f"R{i:06d}" if registered else None,
                owner=rng.choice(OWNERS),
                filing_date=filing,
                registration_date=registered,
            )
        )
    corpus = Corpus(records=tuple(records), source_path=f"synth(seed={seed})")

    live = [r for r in records if r.status is Status.LIVE]
    if n_cases > len(live):
        raise ValueError(f"cannot designate {n_cases} killers from {len(live)} live records")
    killers = rng.sample(live, n_cases)

    kinds = ("exact", "edit", "phonetic")
    cases: list[ConflictCase] = []
    for i, killer in enumerate(killers):
        kind = kinds[i % len(kinds)]
        while True:
            applied = _perturb(rng, killer.mark, kind, max_edits)
            collision = applied in canonicals and applied != killer.mark
            if not collision:
                break
        if kind != "exact" and applied == killer.mark and max_edits > 0:
            kind = "exact"  # no usable perturbation position; fall back
        assert levenshtein(applied, killer.mark) <= max_edits
        if kind == "phonetic":
            assert phonetic_match(normalize(applied), normalize(killer.mark))
        cases.append(
            ConflictCase(
                case_id=f"case-{i:04d}",
                applied_mark=applied,
                killer_marks=(KillerRef(mark=killer.mark, serial=killer.serial),),
                application_serial=f"8{i:07d}",
                decision_date=dt.date(2019, 1 + i % 12, 1 + i % 28),
            )
        )
    return corpus, cases
