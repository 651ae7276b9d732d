"""Command-line interface.

Two subcommands: ``analyze`` runs the enabled analysis sections over a
single UTF-8 text file; ``corpus`` runs them over every file in a
manifest and reports per-genre aggregates (optionally writing one
report file per document).  Exit codes: 0 success, 1 usage error,
2 data-file error, 3 input-text error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .corpus import aggregate, load_corpus, load_manifest
from .defaults import (
    ENV_DATA_DIR,
    FAMILIAR_WORDS_FILE,
    GAZETTEER_FILE,
    POWER_WORDS_FILE,
    SENTIMENT_LEXICON_FILE,
)
from .errors import DataFileError, InputTextError
from .report import (
    ALL_SECTIONS,
    AnalysisConfig,
    AnalysisReport,
    analyze,
    load_resources,
    render_corpus_markdown,
    render_markdown,
    render_structured,
)
from .textcore import build_document

__all__ = ["main", "build_parser"]

PROG = "powertext"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _sections_arg(value: str) -> frozenset[str]:
    names = [part.strip() for part in value.split(",") if part.strip()]
    if not names:
        raise argparse.ArgumentTypeError("at least one section is required")
    unknown = [name for name in names if name not in ALL_SECTIONS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown section(s) {', '.join(unknown)}; "
            f"choose from {', '.join(ALL_SECTIONS)}"
        )
    return frozenset(names)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        type=Path,
        default=None,
        metavar="PATH",
        help=f"power-word lexicon CSV (default: shipped {POWER_WORDS_FILE})",
    )
    parser.add_argument(
        "--sentiment",
        type=Path,
        default=None,
        metavar="PATH",
        help=f"sentiment lexicon (default: shipped {SENTIMENT_LEXICON_FILE})",
    )
    parser.add_argument(
        "--familiar",
        type=Path,
        default=None,
        metavar="PATH",
        help=f"familiar-word list (default: shipped {FAMILIAR_WORDS_FILE})",
    )
    parser.add_argument(
        "--gazetteer",
        type=Path,
        default=None,
        metavar="PATH",
        help=f"entity gazetteer (default: shipped {GAZETTEER_FILE})",
    )
    parser.add_argument(
        "--sections",
        type=_sections_arg,
        default=frozenset(ALL_SECTIONS),
        metavar="S1,S2",
        help=f"comma-separated sections to run (default: all of {','.join(ALL_SECTIONS)})",
    )
    parser.add_argument(
        "--format",
        choices=("structured", "markdown"),
        default="markdown",
        help="output format (default: markdown; structured is deterministic JSON)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog=PROG,
        description="Text analysis: readability, power words, sentiment, entities.",
        epilog=(
            f"The {ENV_DATA_DIR} environment variable overrides the directory "
            "default data files are loaded from."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze_parser = subparsers.add_parser(
        "analyze", help="analyze one UTF-8 text file"
    )
    analyze_parser.add_argument("file", type=Path, help="text file to analyze")
    _add_common_flags(analyze_parser)
    analyze_parser.set_defaults(func=_cmd_analyze)

    corpus_parser = subparsers.add_parser(
        "corpus", help="analyze every document in a manifest and aggregate by genre"
    )
    corpus_parser.add_argument(
        "manifest", type=Path, help="manifest of path,id,genre,kind lines"
    )
    _add_common_flags(corpus_parser)
    corpus_parser.add_argument(
        "--out",
        type=Path,
        default=None,
        metavar="DIR",
        help="write per-document reports and the aggregate summary into DIR",
    )
    corpus_parser.set_defaults(func=_cmd_corpus)
    return parser


def _config_from(args: argparse.Namespace) -> AnalysisConfig:
    return AnalysisConfig(
        lexicon_path=args.lexicon,
        sentiment_path=args.sentiment,
        familiar_path=args.familiar,
        gazetteer_path=args.gazetteer,
        sections=args.sections,
        output_format=args.format,
    )


def _emit_report(report: AnalysisReport, output_format: str) -> None:
    if output_format == "structured":
        sys.stdout.buffer.write(render_structured(report))
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(render_markdown(report))


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = _config_from(args)
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputTextError(f"cannot read input file: {exc}") from exc
    doc = build_document(args.file.stem, text)
    report = analyze(doc, config)
    _emit_report(report, config.output_format)
    return 0


def _cmd_corpus(args: argparse.Namespace) -> int:
    config = _config_from(args)
    manifest = load_manifest(args.manifest)
    resources = load_resources(config)
    corpus_docs = load_corpus(manifest)
    reports = [
        (
            analyze(
                item.document,
                config,
                resources=resources,
                extra_warnings=item.warnings,
            ),
            item.genre,
        )
        for item in corpus_docs
    ]
    aggregates = aggregate(reports)

    if args.out is not None:
        out_dir = args.out
        out_dir.mkdir(parents=True, exist_ok=True)
        extension = "json" if config.output_format == "structured" else "md"
        for report, _genre in reports:
            target = out_dir / f"{report.doc_id}.{extension}"
            if config.output_format == "structured":
                target.write_bytes(render_structured(report))
            else:
                target.write_text(render_markdown(report), encoding="utf-8")
        summary = out_dir / f"corpus.{extension}"
        if config.output_format == "structured":
            summary.write_bytes(render_structured(aggregates))
        else:
            summary.write_text(render_corpus_markdown(aggregates), encoding="utf-8")
        return 0

    if config.output_format == "structured":
        sys.stdout.buffer.write(render_structured(aggregates))
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(render_corpus_markdown(aggregates))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataFileError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except InputTextError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
