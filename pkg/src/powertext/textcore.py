"""Text primitives: normalization, sentence splitting, tokenization,
syllable counting, and surface statistics.

Everything downstream (readability scoring, lexicon matching, sentiment,
entity tagging) is built on the types in this module, so the rules here
are deliberately small, explicit, and heavily tested:

* word tokens are maximal runs of letters/digits, with apostrophes and
  hyphens kept when they sit between two such characters;
* sentence boundaries require a terminator, optional closing quotes or
  brackets, whitespace, and a following capital letter or digit, with a
  short abbreviation guard;
* syllables come from vowel-group counting with an exceptions table and
  a silent-e rule.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Mapping

from .errors import DataFileError, InputTextError

__all__ = [
    "Token",
    "TextStats",
    "Document",
    "normalize",
    "split_sentences",
    "tokenize",
    "count_syllables",
    "build_document",
    "compute_stats",
    "load_familiar_words",
    "load_syllable_exceptions",
]

# Apostrophe variants that may appear inside a word ("don't", "don’t").
_APOSTROPHES = "'’"
_HYPHEN = "-"

# Sentence terminators and the closing marks allowed to trail them.
_TERMINATORS = ".!?"
_CLOSERS = "\"'’”)»]"

# Abbreviations that must not end a sentence even when followed by
# whitespace and a capital ("Dr. King", "etc. More").  Compared against
# the lowercased word preceding the terminator, internal dots kept.
_ABBREVIATIONS = frozenset(
    {"mr", "mrs", "dr", "st", "vs", "etc", "jr", "sr", "prof", "inc", "ltd", "co", "e.g", "i.e"}
)

_VOWELS = frozenset("aeiouy")


# ---------------------------------------------------------------------------
# Core dataclasses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    """One token of the original text.

    ``text`` is the exact substring ``raw[start:end]``; ``is_word`` marks
    tokens containing at least one letter or digit (punctuation runs are
    kept as non-word tokens so the token stream can reproduce the input).
    """

    text: str
    start: int
    end: int
    is_word: bool

    def __post_init__(self) -> None:
        if self.end <= self.start:
            raise ValueError(f"token span must be non-empty: [{self.start}, {self.end})")


@dataclass(frozen=True)
class TextStats:
    """Surface counts for a document, the raw material of readability."""

    word_count: int
    sentence_count: int
    syllable_count: int
    letter_count: int
    char_count: int
    polysyllable_count: int
    complex_word_count: int
    difficult_word_count: int


@dataclass(frozen=True)
class Document:
    """A parsed text: raw string, sentence spans, and tokens.

    Sentence spans are ``(start, end)`` offsets into ``raw``; tokens are
    in reading order and each lies inside exactly one sentence span.
    """

    doc_id: str
    raw: str
    sentences: tuple[tuple[int, int], ...]
    tokens: tuple[Token, ...]

    @property
    def word_tokens(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.is_word)

    def sentence_text(self, index: int) -> str:
        start, end = self.sentences[index]
        return self.raw[start:end]


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


def normalize(text: str) -> str:
    """Lowercase, NFC-normalized matching key for a token or phrase word.

    Curly apostrophes fold to straight ones so ``don’t`` and ``don't``
    compare equal.  Used for lexicon lookup, never for display.
    """
    folded = unicodedata.normalize("NFC", text).lower()
    return folded.replace("’", "'")


# ---------------------------------------------------------------------------
# Sentence splitting
# ---------------------------------------------------------------------------


def _preceding_word(text: str, pos: int) -> str:
    """The letter/dot run ending just before ``pos`` (for the abbreviation
    guard); dots are kept so compound abbreviations like ``e.g`` survive."""
    i = pos
    while i > 0 and (text[i - 1].isalpha() or text[i - 1] == "."):
        i -= 1
    return text[i:pos].strip(".")


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Sentence spans as ``(start, end)`` offsets into ``text``.

    A boundary needs: one or more of ``. ! ?``, optional closing
    quotes/brackets, at least one whitespace character, and a capital
    letter or digit next.  The word before the terminator must not be a
    known abbreviation.  Text without any terminator is one sentence.
    Spans cover every non-whitespace character and never overlap.
    """
    n = len(text)
    spans: list[tuple[int, int]] = []
    # Start of the current sentence: first non-whitespace char not yet consumed.
    cursor = 0

    def _skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    cursor = _skip_ws(0)
    if cursor == n:
        return []

    i = cursor
    while i < n:
        if text[i] in _TERMINATORS:
            run_start = i
            while i < n and text[i] in _TERMINATORS:
                i += 1
            after = i
            while after < n and text[after] in _CLOSERS:
                after += 1
            next_char = _skip_ws(after)
            boundary = (
                next_char > after  # at least one whitespace char follows
                and next_char < n
                and (text[next_char].isupper() or text[next_char].isdigit())
            )
            if boundary:
                word = _preceding_word(text, run_start)
                if word.lower() in _ABBREVIATIONS:
                    boundary = False
            if boundary:
                spans.append((cursor, after))
                cursor = next_char
                i = next_char
                continue
            i = after if after > i else i
        else:
            i += 1

    # Whatever remains (including text with no terminator at all) is the
    # final sentence; trim trailing whitespace from the span.
    tail_end = n
    while tail_end > cursor and text[tail_end - 1].isspace():
        tail_end -= 1
    if tail_end > cursor:
        spans.append((cursor, tail_end))
    return spans


# ---------------------------------------------------------------------------
# Tokenization
# ---------------------------------------------------------------------------


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit()


def tokenize(text: str, *, offset: int = 0) -> list[Token]:
    """Tokens of ``text``, offsets shifted by ``offset``.

    Word tokens are maximal runs of letters/digits where an apostrophe or
    hyphen flanked by such characters joins the run (``don't``,
    ``self-evident``).  Between words, any run of non-whitespace
    characters becomes one non-word token.  Joining token texts with the
    whitespace between them reproduces the input exactly.
    """
    tokens: list[Token] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if _is_word_char(ch):
            j = i + 1
            while j < n:
                cj = text[j]
                if _is_word_char(cj):
                    j += 1
                elif (
                    (cj in _APOSTROPHES or cj == _HYPHEN)
                    and j + 1 < n
                    and _is_word_char(text[j + 1])
                    and _is_word_char(text[j - 1])
                ):
                    j += 1
                else:
                    break
            tokens.append(Token(text[i:j], offset + i, offset + j, True))
        else:
            j = i + 1
            while j < n and not text[j].isspace() and not _is_word_char(text[j]):
                j += 1
            tokens.append(Token(text[i:j], offset + i, offset + j, False))
        i = j
    return tokens


# ---------------------------------------------------------------------------
# Syllable counting
# ---------------------------------------------------------------------------


def _vowel_groups(part: str) -> list[tuple[int, int]]:
    """Maximal runs of vowels (a, e, i, o, u, y) in a lowercase part."""
    groups: list[tuple[int, int]] = []
    i = 0
    n = len(part)
    while i < n:
        if part[i] in _VOWELS:
            j = i
            while j < n and part[j] in _VOWELS:
                j += 1
            groups.append((i, j))
            i = j
        else:
            i += 1
    return groups


def _part_syllables(part: str) -> int:
    """Syllables of one hyphen-free lowercase part (may be zero)."""
    # Digit runs each count as one syllable; letters around them are
    # counted by vowel groups without silent-e adjustment.
    if any(ch.isdigit() for ch in part):
        count = 0
        in_digits = False
        for ch in part:
            if ch.isdigit():
                if not in_digits:
                    count += 1
                    in_digits = True
            else:
                in_digits = False
        count += len(_vowel_groups("".join(ch for ch in part if not ch.isdigit())))
        return count

    letters = "".join(ch for ch in part if ch.isalpha())
    if not letters:
        return 0
    groups = _vowel_groups(letters)
    count = len(groups)
    if count > 1 and letters.endswith("e"):
        if letters.endswith("le") and len(letters) >= 3 and letters[-3] not in _VOWELS:
            pass  # "-ble", "-tle", ... : the final e is pronounced
        elif letters[-2] not in _VOWELS:
            count -= 1  # silent final e forming its own vowel group
    return count


def count_syllables(word: str, exceptions: Mapping[str, int] | None = None) -> int:
    """Estimated syllable count for a single word token, always >= 1.

    The exceptions table (lowercased word -> count) wins outright when it
    contains the word.  Otherwise hyphen-separated parts are counted
    independently and summed: vowel groups per part, minus a silent final
    e that forms its own group (kept after a consonant + ``le``), with
    each maximal digit run worth one syllable.
    """
    key = normalize(word.strip())
    if not any(ch.isalpha() or ch.isdigit() for ch in key):
        raise InputTextError(f"cannot count syllables of {word!r}: no letters or digits")
    if exceptions and key in exceptions:
        return exceptions[key]
    total = sum(_part_syllables(part) for part in key.split(_HYPHEN))
    return max(1, total)


# ---------------------------------------------------------------------------
# Document construction
# ---------------------------------------------------------------------------


def build_document(doc_id: str, text: str) -> Document:
    """Split ``text`` into sentences and tokens.

    Tokenization runs per sentence span, so every token lies inside its
    sentence and offsets index into the original string.
    """
    spans = split_sentences(text)
    tokens: list[Token] = []
    for start, end in spans:
        tokens.extend(tokenize(text[start:end], offset=start))
    return Document(doc_id=doc_id, raw=text, sentences=tuple(spans), tokens=tuple(tokens))


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

_COMPLEX_SUFFIXES = ("ing", "es", "ed")


def _is_complex(
    token: Token,
    syllables: int,
    is_sentence_initial: bool,
    exceptions: Mapping[str, int] | None,
) -> bool:
    """Gunning-Fog complex word: three or more syllables, excluding
    mid-sentence capitalized words (likely proper nouns), hyphenated
    compounds, and words that only reach three syllables through a common
    suffix (-es, -ed, -ing)."""
    if syllables < 3:
        return False
    if token.text[0].isupper() and not is_sentence_initial:
        return False
    if _HYPHEN in token.text:
        return False
    lower = normalize(token.text)
    for suffix in _COMPLEX_SUFFIXES:
        if lower.endswith(suffix):
            stem = lower[: -len(suffix)]
            if any(ch.isalpha() or ch.isdigit() for ch in stem):
                if count_syllables(stem, exceptions) < 3:
                    return False
            break
    return True


def _is_difficult(token: Token, familiar_words: frozenset[str]) -> bool:
    """Dale-Chall difficult word: neither the lowercased form nor its
    naive singular (one trailing ``s`` stripped) is on the familiar list."""
    lower = normalize(token.text)
    if lower in familiar_words:
        return False
    if lower.endswith("s") and lower[:-1] in familiar_words:
        return False
    return True


def compute_stats(
    doc: Document,
    familiar_words: frozenset[str] | Iterable[str],
    exceptions: Mapping[str, int] | None = None,
) -> TextStats:
    """Surface statistics for ``doc``.

    ``letter_count`` counts alphabetic characters inside word tokens;
    ``char_count`` counts alphanumeric ones.  An empty document yields
    all-zero stats.
    """
    familiar = familiar_words if isinstance(familiar_words, frozenset) else frozenset(familiar_words)

    # First word token of each sentence is "sentence initial" for the
    # proper-noun exclusion in the complex-word rule.
    sentence_initial: set[tuple[int, int]] = set()
    token_iter = iter(doc.tokens)
    token = next(token_iter, None)
    for start, end in doc.sentences:
        found_word = False
        while token is not None and token.start < end:
            if token.start >= start and token.is_word and not found_word:
                sentence_initial.add((token.start, token.end))
                found_word = True
            token = next(token_iter, None)

    word_count = 0
    syllable_count = 0
    letter_count = 0
    char_count = 0
    polysyllable_count = 0
    complex_word_count = 0
    difficult_word_count = 0

    for tok in doc.tokens:
        if not tok.is_word:
            continue
        word_count += 1
        letter_count += sum(1 for ch in tok.text if ch.isalpha())
        char_count += sum(1 for ch in tok.text if ch.isalpha() or ch.isdigit())
        syllables = count_syllables(tok.text, exceptions)
        syllable_count += syllables
        if syllables >= 3:
            polysyllable_count += 1
        if _is_complex(tok, syllables, (tok.start, tok.end) in sentence_initial, exceptions):
            complex_word_count += 1
        if _is_difficult(tok, familiar):
            difficult_word_count += 1

    return TextStats(
        word_count=word_count,
        sentence_count=len(doc.sentences),
        syllable_count=syllable_count,
        letter_count=letter_count,
        char_count=char_count,
        polysyllable_count=polysyllable_count,
        complex_word_count=complex_word_count,
        difficult_word_count=difficult_word_count,
    )


# ---------------------------------------------------------------------------
# Data-file loaders
# ---------------------------------------------------------------------------


def _open_lines(source: str | Path | IO[str]) -> tuple[str, list[str]]:
    """(display name, lines) for a path or text stream."""
    if hasattr(source, "read"):
        name = getattr(source, "name", "<stream>")
        return str(name), source.read().splitlines()
    path = Path(source)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read file: {exc}", source=str(path)) from exc
    return str(path), content.splitlines()


def load_familiar_words(source: str | Path | IO[str]) -> frozenset[str]:
    """Load a familiar-word list: one lowercase word per line, ``#``
    comments and blank lines ignored."""
    name, lines = _open_lines(source)
    words: set[str] = set()
    for lineno, raw_line in enumerate(lines, start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line != line.lower():
            raise DataFileError(
                f"familiar word must be lowercase: {line!r}", source=name, line=lineno
            )
        if any(ch.isspace() for ch in line):
            raise DataFileError(
                f"familiar word must be a single word: {line!r}", source=name, line=lineno
            )
        words.add(line)
    return frozenset(words)


def load_syllable_exceptions(source: str | Path | IO[str]) -> dict[str, int]:
    """Load a syllable-exceptions table: ``word<TAB>count`` per line,
    ``#`` comments and blank lines ignored."""
    name, lines = _open_lines(source)
    table: dict[str, int] = {}
    for lineno, raw_line in enumerate(lines, start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFileError(
                f"expected 'word<TAB>count', got {raw_line!r}", source=name, line=lineno
            )
        word, count_text = parts[0].strip(), parts[1].strip()
        try:
            count = int(count_text)
        except ValueError as exc:
            raise DataFileError(
                f"syllable count must be an integer, got {count_text!r}",
                source=name,
                line=lineno,
            ) from exc
        if count < 1:
            raise DataFileError(
                f"syllable count must be >= 1, got {count}", source=name, line=lineno
            )
        table[normalize(word)] = count
    return table
