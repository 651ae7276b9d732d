#!/usr/bin/env python3
"""Score a handful of sentences and show how intensity modifiers and
negators bend the polarity of the same base word."""

from powertext import defaults
from powertext.sentiment import analyze_sentiment, load_sentiment_lexicon
from powertext.textcore import build_document

SENTENCES = [
    "The service was excellent.",
    "The service was very excellent.",
    "The service was not excellent.",
    "The room was dirty and the food was awful.",
    "The schedule listed three departures.",  # no scored words at all
    "A slightly boring but honest and reliable show.",
]


def main() -> None:
    lexicon = load_sentiment_lexicon(
        defaults.data_path(defaults.SENTIMENT_LEXICON_FILE)
    )
    print(
        f"lexicon: {len(lexicon.entries)} scored terms, "
        f"{len(lexicon.modifiers)} modifiers, {len(lexicon.negators)} negators"
    )
    print()
    for text in SENTENCES:
        doc = build_document("line", text)
        score = analyze_sentiment(doc, lexicon)
        print(f"  {text}")
        print(
            f"    polarity {score.polarity:+.3f}   "
            f"subjectivity {score.subjectivity:.3f}   "
            f"matched {score.matched_terms}"
        )
    print()
    print("A document with zero scored words is exactly neutral: (0.0, 0.0).")


if __name__ == "__main__":
    main()
