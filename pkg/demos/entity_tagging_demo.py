#!/usr/bin/env python3
"""Tag dates, numbers, and gazetteer entities in the opening of the
shipped speech fixture and print the annotated text inline."""

from powertext import defaults
from powertext.entities import load_gazetteer, render_annotations, tag_entities
from powertext.textcore import build_document


def main() -> None:
    text = defaults.data_path("corpus/mlk_dream.txt").read_text(encoding="utf-8")
    opening = "\n\n".join(text.split("\n\n")[:4])

    doc = build_document("speech-opening", opening)
    gazetteer = load_gazetteer(defaults.data_path(defaults.GAZETTEER_FILE))
    spans = list(tag_entities(doc, gazetteer))

    print(f"{len(spans)} spans in the opening paragraphs:")
    for span in spans:
        print(f"  {span.label.value:10s} {span.surface!r}")
    print()
    print("annotated text:")
    print(render_annotations(doc, spans))


if __name__ == "__main__":
    main()
