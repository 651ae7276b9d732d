"""Rule-based entity tagging: dates, times, numbers, and gazetteer lookups.

This is a deliberately deterministic tagger.  A pattern pass finds
date expressions, a small set of time-of-day phrases, and cardinal
numbers (digit tokens and spelled-out number words); a gazetteer pass
then applies longest-match lookup for curated surface forms (peoples,
places, organizations, laws, persons, works).  Earlier passes win on
overlap, and anything not matched is left untagged — precision over
recall, never a guess.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Mapping, Sequence

from .errors import DataFileError
from .textcore import Document, Token, normalize

__all__ = [
    "EntityLabel",
    "EntitySpan",
    "Gazetteer",
    "load_gazetteer",
    "tag_entities",
    "render_annotations",
]


class EntityLabel(enum.Enum):
    """Closed label set for entity spans."""

    DATE = "DATE"
    TIME = "TIME"
    CARDINAL = "CARDINAL"
    NORP = "NORP"
    ORG = "ORG"
    GPE = "GPE"
    LAW = "LAW"
    WORK_OF_ART = "WORK_OF_ART"
    PERSON = "PERSON"

    def __str__(self) -> str:
        return self.value


# Labels a gazetteer file may define; the other three come from patterns.
_GAZETTEER_LABELS = (
    EntityLabel.NORP,
    EntityLabel.GPE,
    EntityLabel.ORG,
    EntityLabel.LAW,
    EntityLabel.PERSON,
    EntityLabel.WORK_OF_ART,
)


@dataclass(frozen=True)
class EntitySpan:
    """One tagged region of the raw text."""

    start: int
    end: int
    surface: str
    label: EntityLabel


@dataclass(frozen=True)
class Gazetteer:
    """Normalized surface form -> label lookups for the curated labels."""

    entries: Mapping[str, EntityLabel]

    @property
    def max_words(self) -> int:
        if not self.entries:
            return 0
        return max(surface.count(" ") + 1 for surface in self.entries)


# ---------------------------------------------------------------------------
# Vocabulary for the pattern pass
# ---------------------------------------------------------------------------

_UNITS = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"}
_TEENS = {
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen",
}
_TENS = {"twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"}
_SCALES = {"hundred", "thousand", "million", "billion", "trillion"}
_SCALE_PLURALS = {scale + "s" for scale in _SCALES}
_NUMBER_WORDS = _UNITS | _TEENS | _TENS | _SCALES | _SCALE_PLURALS

_RELATIVE_DAYS = {"today", "tomorrow", "yesterday"}
_WEEKDAYS = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
}
_MONTHS = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december",
}
# Phrases tagged DATE verbatim.  "score years ago" keeps the archaic
# "score" out of the number grammar while still dating the phrase.
_DATE_PHRASES = (("score", "years", "ago"),)
# Small fixed list of time-of-day expressions.
_TIME_PHRASES = (("the", "long", "night"), ("midnight",), ("noon",))

_YEAR_RANGE = range(1500, 2100)


def _is_number_word(key: str) -> bool:
    if key in _NUMBER_WORDS:
        return True
    if "-" in key:
        parts = key.split("-")
        return len(parts) > 1 and all(part in _NUMBER_WORDS for part in parts)
    return False


def _is_digit_token(key: str) -> bool:
    return key.isdigit()


def _is_number_token(key: str) -> bool:
    return _is_digit_token(key) or _is_number_word(key)


def _is_year(key: str) -> bool:
    return len(key) == 4 and key.isdigit() and int(key) in _YEAR_RANGE


def _is_day_of_month(key: str) -> bool:
    return key.isdigit() and len(key) <= 2 and 1 <= int(key) <= 31


# ---------------------------------------------------------------------------
# Gazetteer loading
# ---------------------------------------------------------------------------


def _read_lines(source: str | Path | IO[str] | IO[bytes]) -> tuple[str, list[str]]:
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        return str(getattr(source, "name", "<stream>")), data.splitlines()
    path = Path(source)
    try:
        return str(path), path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DataFileError(f"cannot read file: {exc}", source=str(path)) from exc


def load_gazetteer(source: str | Path | IO[str] | IO[bytes]) -> Gazetteer:
    """Parse a sectioned gazetteer file.

    Sections are ``[NORP]``, ``[GPE]``, ``[ORG]``, ``[LAW]``, ``[PERSON]``,
    ``[WORK_OF_ART]``; each non-comment line inside a section is one
    surface form (single- or multi-word).  The same surface under two
    labels is an error.
    """
    name, lines = _read_lines(source)
    valid = {label.value: label for label in _GAZETTEER_LABELS}
    entries: dict[str, EntityLabel] = {}
    current: EntityLabel | None = None

    for lineno, raw_line in enumerate(lines, start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in valid:
                raise DataFileError(
                    f"unknown gazetteer section [{section}] "
                    f"(expected one of {', '.join(valid)})",
                    source=name,
                    line=lineno,
                )
            current = valid[section]
            continue
        if current is None:
            raise DataFileError(
                "surface form before any section header", source=name, line=lineno
            )
        surface = " ".join(normalize(line).split())
        if not surface:
            raise DataFileError("empty surface form", source=name, line=lineno)
        existing = entries.get(surface)
        if existing is not None and existing is not current:
            raise DataFileError(
                f"surface {surface!r} listed under both {existing.value} "
                f"and {current.value}",
                source=name,
                line=lineno,
            )
        entries[surface] = current

    return Gazetteer(entries=dict(entries))


# ---------------------------------------------------------------------------
# Tagging
# ---------------------------------------------------------------------------


class _Tagger:
    """One tagging run: tokens, normalized keys, and claimed flags."""

    def __init__(self, doc: Document):
        self.raw = doc.raw
        self.tokens: Sequence[Token] = doc.tokens
        self.keys = [normalize(tok.text) if tok.is_word else None for tok in doc.tokens]
        self.claimed = [False] * len(doc.tokens)
        self.spans: list[EntitySpan] = []

    def free_word(self, i: int) -> bool:
        return (
            0 <= i < len(self.tokens)
            and self.tokens[i].is_word
            and not self.claimed[i]
        )

    def claim(self, start_tok: int, end_tok: int, label: EntityLabel) -> None:
        start = self.tokens[start_tok].start
        end = self.tokens[end_tok - 1].end
        for idx in range(start_tok, end_tok):
            self.claimed[idx] = True
        self.spans.append(
            EntitySpan(start=start, end=end, surface=self.raw[start:end], label=label)
        )

    def phrase_at(self, i: int, words: tuple[str, ...]) -> bool:
        """True when the normalized words appear as consecutive free word
        tokens starting at token i."""
        for offset, word in enumerate(words):
            j = i + offset
            if not self.free_word(j) or self.keys[j] != word:
                return False
        return True

    # -- date pattern helpers ------------------------------------------------

    def _number_run_length(self, i: int) -> int:
        length = 0
        while self.free_word(i + length) and _is_number_token(self.keys[i + length]):
            length += 1
        return length

    def _match_date_at(self, i: int) -> int:
        """Token count of the longest date expression starting at i (0 if none)."""
        best = 0
        key = self.keys[i]

        for phrase in _DATE_PHRASES:
            if self.phrase_at(i, phrase):
                best = max(best, len(phrase))

        # "<number words> years ago|later"
        run = self._number_run_length(i)
        if run:
            j = i + run
            if (
                self.free_word(j)
                and self.keys[j] == "years"
                and self.free_word(j + 1)
                and self.keys[j + 1] in ("ago", "later")
            ):
                best = max(best, run + 2)

        # Month-name expressions: "January 20, 1961", "January 1961",
        # "January 20".  The comma, when present, must be the very next
        # token.  A bare month name is not enough ("may", "march" are
        # ordinary words too).
        if key in _MONTHS:
            j = i + 1
            if self.free_word(j) and _is_day_of_month(self.keys[j]):
                length = 2
                k = j + 1
                if (
                    k < len(self.tokens)
                    and not self.tokens[k].is_word
                    and self.tokens[k].text == ","
                    and self.free_word(k + 1)
                    and _is_year(self.keys[k + 1])
                ):
                    length = (k + 1 - i) + 1  # through the year token
                elif self.free_word(k) and _is_year(self.keys[k]):
                    length = 3
                best = max(best, length)
            elif self.free_word(j) and _is_year(self.keys[j]):
                best = max(best, 2)

        if key in _RELATIVE_DAYS or key in _WEEKDAYS:
            best = max(best, 1)

        if _is_year(key):
            best = max(best, 1)

        return best

    # -- passes ----------------------------------------------------------------

    def run_dates(self) -> None:
        i = 0
        while i < len(self.tokens):
            if self.free_word(i):
                length = self._match_date_at(i)
                if length:
                    # A date claim may include one comma token inside
                    # (month day, year): claim the token range wholesale.
                    self.claim(i, i + length, EntityLabel.DATE)
                    i += length
                    continue
            i += 1

    def run_times(self) -> None:
        i = 0
        while i < len(self.tokens):
            matched = 0
            if self.free_word(i):
                for phrase in sorted(_TIME_PHRASES, key=len, reverse=True):
                    if self.phrase_at(i, phrase):
                        matched = len(phrase)
                        break
            if matched:
                self.claim(i, i + matched, EntityLabel.TIME)
                i += matched
            else:
                i += 1

    def run_cardinals(self) -> None:
        i = 0
        while i < len(self.tokens):
            if self.free_word(i) and _is_number_token(self.keys[i]):
                length = self._number_run_length(i)
                self.claim(i, i + length, EntityLabel.CARDINAL)
                i += length
            else:
                i += 1

    def run_gazetteer(self, gazetteer: Gazetteer) -> None:
        max_words = gazetteer.max_words
        if max_words == 0:
            return
        i = 0
        while i < len(self.tokens):
            if not self.free_word(i):
                i += 1
                continue
            matched = 0
            label: EntityLabel | None = None
            words: list[str] = []
            j = i
            while j < len(self.tokens) and self.free_word(j) and len(words) < max_words:
                words.append(self.keys[j])
                candidate = " ".join(words)
                found = gazetteer.entries.get(candidate)
                if found is not None:
                    matched = len(words)
                    label = found
                j += 1
            if matched and label is not None:
                self.claim(i, i + matched, label)
                i += matched
            else:
                i += 1


def tag_entities(doc: Document, gazetteer: Gazetteer) -> list[EntitySpan]:
    """All entity spans in ``doc``, ordered by start, never overlapping.

    Pass order (earlier wins): dates, times, cardinals, then gazetteer
    longest-match.  Unmatched text is left untagged.
    """
    tagger = _Tagger(doc)
    tagger.run_dates()
    tagger.run_times()
    tagger.run_cardinals()
    tagger.run_gazetteer(gazetteer)
    return sorted(tagger.spans, key=lambda span: span.start)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def render_annotations(doc: Document, spans: Sequence[EntitySpan]) -> str:
    """The raw text with every span wrapped as ``**surface LABEL**``.

    Spans must lie inside the text, match their surface, and not overlap.
    """
    ordered = sorted(spans, key=lambda span: (span.start, span.end))
    out: list[str] = []
    pos = 0
    for span in ordered:
        if span.start < pos:
            raise ValueError(
                f"overlapping span at [{span.start}, {span.end})"
            )
        if span.start >= span.end or span.end > len(doc.raw):
            raise ValueError(f"span out of range: [{span.start}, {span.end})")
        if doc.raw[span.start : span.end] != span.surface:
            raise ValueError(
                f"span surface {span.surface!r} does not match text at "
                f"[{span.start}, {span.end})"
            )
        out.append(doc.raw[pos : span.start])
        out.append(f"**{span.surface} {span.label.value}**")
        pos = span.end
    out.append(doc.raw[pos:])
    return "".join(out)
