"""Corpus loading (boilerplate/markup stripping, manifests) and
genre-level aggregation.

A corpus is described by a manifest of ``path,id,genre,kind`` lines.
Each file is cleaned according to its kind — ebook boilerplate stripped
between the ``*** START OF`` / ``*** END OF`` marker lines, HTML reduced
to text, plain text passed through — then tokenized into a Document.
Aggregation averages per-document percentages and scores (mean of
percentages, not pooled counts, so long texts don't dominate a genre).
"""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from statistics import fmean
from typing import IO, TYPE_CHECKING, Iterable, Mapping, NamedTuple, Sequence

from .errors import DataFileError, InputTextError
from .powerwords import PowerCategory
from .textcore import Document, build_document

if TYPE_CHECKING:  # import only for annotations; no runtime dependency
    from .report import AnalysisReport

__all__ = [
    "GENRES",
    "SOURCE_KINDS",
    "GutenbergText",
    "ManifestEntry",
    "CorpusManifest",
    "CorpusDocument",
    "GenreAggregate",
    "strip_gutenberg_boilerplate",
    "strip_html",
    "load_manifest",
    "load_corpus",
    "aggregate",
]

GENRES = ("fiction", "speech", "marketing")
SOURCE_KINDS = ("gutenberg", "html", "plain")

_START_MARKER = "*** START OF"
_END_MARKER = "*** END OF"

WARN_MISSING_MARKERS = "gutenberg-markers-missing"


# ---------------------------------------------------------------------------
# Boilerplate stripping
# ---------------------------------------------------------------------------


class GutenbergText(NamedTuple):
    """Stripping result: the cleaned text and a missing-markers flag."""

    text: str
    markers_missing: bool


def strip_gutenberg_boilerplate(text: str) -> GutenbergText:
    """Content strictly between the first ``*** START OF`` line and the
    first subsequent ``*** END OF`` line.

    Without markers the input comes back unchanged, flagged so callers
    can warn.  A START line without a later END line is an error — that
    means the file was truncated mid-license and cannot be trusted.
    """
    lines = text.splitlines(keepends=True)
    start_index = None
    for index, line in enumerate(lines):
        if _START_MARKER in line:
            start_index = index
            break
    if start_index is None:
        return GutenbergText(text=text, markers_missing=True)

    for index in range(start_index + 1, len(lines)):
        if _END_MARKER in lines[index]:
            return GutenbergText(
                text="".join(lines[start_index + 1 : index]), markers_missing=False
            )
    raise InputTextError(
        f"found {_START_MARKER!r} line but no subsequent {_END_MARKER!r} line"
    )


# ---------------------------------------------------------------------------
# HTML stripping
# ---------------------------------------------------------------------------

_DROP_CONTENT_TAGS = {"script", "style"}
_BLOCK_TAGS = {
    "p", "div", "br", "li", "ul", "ol", "table", "tr", "td", "th",
    "h1", "h2", "h3", "h4", "h5", "h6", "blockquote", "pre", "hr",
    "section", "article", "header", "footer", "title",
}
# Only this named-entity set is decoded; anything else passes through
# as literal text (permissive handling of unknown references).
_NAMED_ENTITIES = {
    "amp": "&",
    "lt": "<",
    "gt": ">",
    "quot": '"',
    "apos": "'",
    "nbsp": " ",
}


class _TextExtractor(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=False)
        self.pieces: list[str] = []
        self._drop_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in _DROP_CONTENT_TAGS:
            self._drop_depth += 1
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_endtag(self, tag):
        if tag in _DROP_CONTENT_TAGS:
            self._drop_depth = max(0, self._drop_depth - 1)
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_startendtag(self, tag, attrs):
        if tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_data(self, data):
        if not self._drop_depth:
            self.pieces.append(data)

    def handle_entityref(self, name):
        if self._drop_depth:
            return
        decoded = _NAMED_ENTITIES.get(name)
        self.pieces.append(decoded if decoded is not None else f"&{name};")

    def handle_charref(self, name):
        if self._drop_depth:
            return
        try:
            code = int(name[1:], 16) if name.startswith(("x", "X")) else int(name)
            self.pieces.append(chr(code))
        except (ValueError, OverflowError):
            self.pieces.append(f"&#{name};")


def strip_html(html: str) -> str:
    """Markup-free text: tags removed, script/style contents dropped,
    block tags turned into line breaks, the pinned entity set decoded,
    and whitespace normalized (single spaces, single blank lines)."""
    extractor = _TextExtractor()
    extractor.feed(html)
    extractor.close()
    raw = "".join(extractor.pieces)

    lines = [" ".join(line.split()) for line in raw.splitlines()]
    normalized: list[str] = []
    for line in lines:
        if line:
            normalized.append(line)
        elif normalized and normalized[-1]:
            normalized.append("")  # keep a single blank line between blocks
    while normalized and not normalized[-1]:
        normalized.pop()
    return "\n".join(normalized)


# ---------------------------------------------------------------------------
# Manifest
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    doc_id: str
    genre: str
    kind: str


@dataclass(frozen=True)
class CorpusManifest:
    entries: tuple[ManifestEntry, ...]


def load_manifest(
    source: str | Path | IO[str], base_dir: str | Path | None = None
) -> CorpusManifest:
    """Parse a ``path,id,genre,kind`` manifest.

    Relative paths resolve against the manifest's own directory (or
    ``base_dir`` when reading from a stream).  Duplicate ids, unknown
    genres or kinds, and malformed lines are errors naming the line.
    """
    if hasattr(source, "read"):
        name = str(getattr(source, "name", "<stream>"))
        lines = source.read().splitlines()
        root = Path(base_dir) if base_dir is not None else Path.cwd()
    else:
        path = Path(source)
        name = str(path)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise DataFileError(f"cannot read manifest: {exc}", source=name) from exc
        root = Path(base_dir) if base_dir is not None else path.parent

    entries: list[ManifestEntry] = []
    seen_ids: dict[str, int] = {}
    for lineno, raw_line in enumerate(lines, start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [part.strip() for part in line.split(",")]
        if len(parts) != 4:
            raise DataFileError(
                f"expected 'path,id,genre,kind', got {raw_line!r}",
                source=name,
                line=lineno,
            )
        raw_path, doc_id, genre, kind = parts
        if not raw_path:
            raise DataFileError("empty path", source=name, line=lineno)
        if not doc_id:
            raise DataFileError("empty id", source=name, line=lineno)
        if genre not in GENRES:
            raise DataFileError(
                f"unknown genre {genre!r} (expected one of {', '.join(GENRES)})",
                source=name,
                line=lineno,
            )
        if kind not in SOURCE_KINDS:
            raise DataFileError(
                f"unknown kind {kind!r} (expected one of {', '.join(SOURCE_KINDS)})",
                source=name,
                line=lineno,
            )
        if doc_id in seen_ids:
            raise DataFileError(
                f"duplicate id {doc_id!r} (first on line {seen_ids[doc_id]})",
                source=name,
                line=lineno,
            )
        seen_ids[doc_id] = lineno
        file_path = Path(raw_path)
        if not file_path.is_absolute():
            file_path = root / file_path
        entries.append(
            ManifestEntry(path=file_path, doc_id=doc_id, genre=genre, kind=kind)
        )

    if not entries:
        raise DataFileError("manifest contains no entries", source=name)
    return CorpusManifest(entries=tuple(entries))


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusDocument:
    """A cleaned, tokenized corpus file with its genre and any
    cleaning warnings."""

    document: Document
    genre: str
    warnings: tuple[str, ...] = ()


def load_corpus(manifest: CorpusManifest) -> list[CorpusDocument]:
    """Read, clean, and tokenize every manifest entry, order preserved."""
    loaded: list[CorpusDocument] = []
    for entry in manifest.entries:
        try:
            raw = entry.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DataFileError(
                f"cannot read corpus file for {entry.doc_id!r}: {exc}",
                source=str(entry.path),
            ) from exc

        warnings: tuple[str, ...] = ()
        if entry.kind == "gutenberg":
            try:
                stripped = strip_gutenberg_boilerplate(raw)
            except InputTextError as exc:
                raise InputTextError(f"{entry.doc_id}: {exc}") from exc
            text = stripped.text
            if stripped.markers_missing:
                warnings = (WARN_MISSING_MARKERS,)
        elif entry.kind == "html":
            text = strip_html(raw)
        else:
            text = raw

        if not text.strip():
            raise InputTextError(f"{entry.doc_id}: cleaned text is empty")
        loaded.append(
            CorpusDocument(
                document=build_document(entry.doc_id, text),
                genre=entry.genre,
                warnings=warnings,
            )
        )
    return loaded


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenreAggregate:
    """Arithmetic means of every per-document metric within one genre.

    Sections that were disabled for all of the genre's reports are None.
    """

    genre: str
    document_count: int
    mean_flesch_reading_ease: float | None
    mean_flesch_kincaid_grade: float | None
    mean_smog_index: float | None
    mean_gunning_fog: float | None
    mean_coleman_liau: float | None
    mean_ari: float | None
    mean_dale_chall: float | None
    mean_distribution: Mapping[PowerCategory, float] | None
    mean_polarity: float | None
    mean_subjectivity: float | None


def _mean_or_none(values: list[float | None], what: str, genre: str) -> float | None:
    present = [value for value in values if value is not None]
    if not present:
        return None
    if len(present) != len(values):
        raise InputTextError(
            f"cannot aggregate {what} for genre {genre!r}: "
            "present for some documents but not others"
        )
    return fmean(present)


def aggregate(
    reports: Sequence[tuple["AnalysisReport", str]]
) -> list[GenreAggregate]:
    """Genre-level means over per-document reports.

    Returns one aggregate per genre present, in the fixed genre order.
    Distribution averaging is mean-of-percentages.  A section must be
    present for all documents of a genre or absent for all of them.
    """
    if not reports:
        raise InputTextError("cannot aggregate zero reports")
    by_genre: dict[str, list["AnalysisReport"]] = {}
    for report, genre in reports:
        if genre not in GENRES:
            raise InputTextError(f"unknown genre {genre!r}")
        by_genre.setdefault(genre, []).append(report)

    aggregates: list[GenreAggregate] = []
    for genre in GENRES:
        group = by_genre.get(genre)
        if not group:
            continue

        def reading(attr: str) -> list[float | None]:
            return [
                getattr(r.readability, attr) if r.readability is not None else None
                for r in group
            ]

        distributions = [r.power_distribution for r in group]
        if all(d is None for d in distributions):
            mean_distribution = None
        elif any(d is None for d in distributions):
            raise InputTextError(
                f"cannot aggregate power distribution for genre {genre!r}: "
                "present for some documents but not others"
            )
        else:
            mean_distribution = {
                category: fmean(d.percentages[category] for d in distributions)
                for category in PowerCategory
            }

        aggregates.append(
            GenreAggregate(
                genre=genre,
                document_count=len(group),
                mean_flesch_reading_ease=_mean_or_none(
                    reading("flesch_reading_ease"), "reading ease", genre
                ),
                mean_flesch_kincaid_grade=_mean_or_none(
                    reading("flesch_kincaid_grade"), "reading level", genre
                ),
                mean_smog_index=_mean_or_none(reading("smog_index"), "smog", genre),
                mean_gunning_fog=_mean_or_none(
                    reading("gunning_fog"), "gunning fog", genre
                ),
                mean_coleman_liau=_mean_or_none(
                    reading("coleman_liau"), "coleman-liau", genre
                ),
                mean_ari=_mean_or_none(reading("ari"), "ari", genre),
                mean_dale_chall=_mean_or_none(
                    reading("dale_chall"), "dale-chall", genre
                ),
                mean_distribution=mean_distribution,
                mean_polarity=_mean_or_none(
                    [
                        r.sentiment.polarity if r.sentiment is not None else None
                        for r in group
                    ],
                    "polarity",
                    genre,
                ),
                mean_subjectivity=_mean_or_none(
                    [
                        r.sentiment.subjectivity if r.sentiment is not None else None
                        for r in group
                    ],
                    "subjectivity",
                    genre,
                ),
            )
        )
    return aggregates
