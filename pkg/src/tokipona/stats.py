"""Vocabulary statistics: POS histograms, syllable and letter frequencies,
word-length distribution, and the sentence-space size formula.

Counts are the source of truth; percentages are exact rationals rendered
with round-half-up at two decimals.  Frequency tables sort by descending
count with alphabetical tie-breaks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .lexicon import Lexicon, PosTag
from .phonotactics import VOWELS, syllabify

PREPOSITION_CHOICES = 5          # kepeken, lon, sama, tan, tawa
PARTICLE_SLOT_CHOICES = 9 ** 4   # one of 8 particles or none, in each of 4 phrase slots
CONTENT_CHOICES = 107


class Scope(Enum):
    ALL = "all"
    FIRST = "first"
    LAST = "last"
    MIDDLE = "middle"


class LetterRestrict(Enum):
    ALL = "all"
    VOWELS = "vowels"
    CONSONANTS = "consonants"


def round_half_up(x: Fraction, digits: int = 2) -> float:
    """Round an exact rational half-up to ``digits`` decimals."""
    scale = 10 ** digits
    return float((x * scale + Fraction(1, 2)).__floor__()) / scale


@dataclass(frozen=True)
class FrequencyRow:
    item: str
    count: int
    percent: float        # display value, round-half-up at 2 decimals
    exact: Fraction       # exact percentage; rows of a scope sum to 100


@dataclass(frozen=True)
class PositionalFrequencyTable:
    scope: Scope
    total: int
    rows: tuple[FrequencyRow, ...]

    def top(self, n: int) -> tuple[FrequencyRow, ...]:
        return self.rows[:n]

    def row(self, item: str) -> FrequencyRow:
        for r in self.rows:
            if r.item == item:
                return r
        return FrequencyRow(item, 0, 0.0, Fraction(0))


def _table(counts: Counter, total: int, scope: Scope) -> PositionalFrequencyTable:
    rows = tuple(
        FrequencyRow(
            item, c, round_half_up(Fraction(c * 100, total)), Fraction(c * 100, total)
        )
        for item, c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    )
    return PositionalFrequencyTable(scope, total, rows)


def pos_histogram(lex: Lexicon) -> list[tuple[PosTag, int, int]]:
    """(tag, incidence over 124 lemmas, chosen count over 120) per tag,
    ordered by descending incidence."""
    incidence = lex.tag_incidence()
    chosen = lex.chosen_counts()
    rows = [(tag, incidence[tag], chosen[tag]) for tag in PosTag]
    rows.sort(key=lambda r: (-r[1], r[0].value))
    return rows


def pos_totals(lex: Lexicon) -> tuple[int, int]:
    incidence = lex.tag_incidence()
    chosen = lex.chosen_counts()
    return sum(incidence.values()), sum(chosen.values())


def syllable_frequency(lex: Lexicon, scope: Scope) -> PositionalFrequencyTable:
    """Syllable frequencies over the vocabulary, restricted to ``scope``.

    A one-syllable word counts as both FIRST and LAST, so those scopes
    total 124 each; MIDDLE covers interior syllables only.
    """
    counts: Counter = Counter()
    for entry in lex:
        syls = [s.text for s in syllabify(entry.surface)]
        if scope is Scope.ALL:
            counts.update(syls)
        elif scope is Scope.FIRST:
            counts[syls[0]] += 1
        elif scope is Scope.LAST:
            counts[syls[-1]] += 1
        else:
            counts.update(syls[1:-1])
    return _table(counts, sum(counts.values()), scope)


def letter_frequency(
    lex: Lexicon,
    scope: Scope,
    restrict: LetterRestrict = LetterRestrict.ALL,
) -> PositionalFrequencyTable:
    """Letter frequencies over all lemmas; scope picks first/last/interior
    letters of each word; restrict renormalizes within vowels or consonants."""
    counts: Counter = Counter()
    for entry in lex:
        w = entry.surface
        if scope is Scope.ALL:
            counts.update(w)
        elif scope is Scope.FIRST:
            counts[w[0]] += 1
        elif scope is Scope.LAST:
            counts[w[-1]] += 1
        else:
            counts.update(w[1:-1])
    if restrict is LetterRestrict.VOWELS:
        counts = Counter({l: c for l, c in counts.items() if l in VOWELS})
    elif restrict is LetterRestrict.CONSONANTS:
        counts = Counter({l: c for l, c in counts.items() if l not in VOWELS})
    return _table(counts, sum(counts.values()), scope)


def word_length_report(lex: Lexicon) -> dict[int, tuple[int, float]]:
    """Syllable-count distribution over the 124 lemmas: {n: (count, percent)}."""
    counts = Counter(len(syllabify(e.surface)) for e in lex)
    total = len(lex)
    return {
        n: (c, round_half_up(Fraction(c * 100, total)))
        for n, c in sorted(counts.items())
    }


@dataclass(frozen=True)
class SentenceSpaceQuery:
    n: int  # words in the subject phrase
    v: int  # words in the predicate phrase
    o: int  # words in the object phrase
    p: int  # words in the prepositional phrase
    with_particles: bool = True

    def __post_init__(self):
        for name in "nvop":
            if getattr(self, name) < 0:
                raise ValueError(f"phrase size {name} must be >= 0")
        if self.n == self.v == self.o == self.p == 0:
            raise ValueError("at least one phrase must be non-empty")


def sentence_space(q: SentenceSpaceQuery) -> int:
    """Count sentence skeletons with the given phrase sizes, exactly.

    Each phrase word ranges over the 107 content words, the preposition
    over the 5 prepositions, and (optionally) each of the four phrase
    slots carries one of 8 particles or none.  Pure integer arithmetic.
    """
    delta = (
        CONTENT_CHOICES ** q.n
        * CONTENT_CHOICES ** q.v
        * CONTENT_CHOICES ** q.o
        * PREPOSITION_CHOICES
        * CONTENT_CHOICES ** q.p
    )
    if q.with_particles:
        delta *= PARTICLE_SLOT_CHOICES
    return delta


# --- rendering -----------------------------------------------------------

def format_percent(value: float) -> str:
    return f"{value:.2f}"


def render_frequency_table(
    table: PositionalFrequencyTable, limit: Optional[int] = None, tsv: bool = False
) -> str:
    rows = table.rows if limit is None else table.rows[:limit]
    if tsv:
        lines = ["item\tcount\tpercent"]
        lines += [f"{r.item}\t{r.count}\t{format_percent(r.percent)}" for r in rows]
        return "\n".join(lines)
    width = max((len(r.item) for r in rows), default=4)
    lines = [f"{'item':<{width}}  count  percent"]
    for r in rows:
        lines.append(f"{r.item:<{width}}  {r.count:>5}  {format_percent(r.percent):>7}")
    return "\n".join(lines)


def render_pos_table(lex: Lexicon, tsv: bool = False) -> str:
    rows = pos_histogram(lex)
    tot_all, tot_chosen = pos_totals(lex)
    if tsv:
        lines = ["pos\tall\tchosen"]
        lines += [f"{t.value}\t{a}\t{c}" for t, a, c in rows]
        lines.append(f"total\t{tot_all}\t{tot_chosen}")
        return "\n".join(lines)
    lines = [f"{'POS':<12}  all  chosen"]
    for t, a, c in rows:
        lines.append(f"{t.value:<12}  {a:>3}  {c:>6}")
    lines.append(f"{'total':<12}  {tot_all:>3}  {tot_chosen:>6}")
    return "\n".join(lines)


def render_length_table(lex: Lexicon, tsv: bool = False) -> str:
    dist = word_length_report(lex)
    if tsv:
        lines = ["syllables\tcount\tpercent"]
        lines += [f"{n}\t{c}\t{format_percent(p)}" for n, (c, p) in dist.items()]
        return "\n".join(lines)
    lines = ["syllables  count  percent"]
    for n, (c, p) in dist.items():
        lines.append(f"{n:>9}  {c:>5}  {format_percent(p):>7}")
    return "\n".join(lines)
