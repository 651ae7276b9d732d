#!/usr/bin/env python3
"""Scan a promotional blurb for persuasion vocabulary and show the
category distribution the report layer would print."""

from powertext import defaults
from powertext.powerwords import build_matcher, distribution, load_lexicon, scan
from powertext.textcore import build_document

BLURB = """\
Last chance! Grab this exclusive deal now: half price, free shipping,
and a money back guarantee. Our proven formula keeps your family safe,
and the secret recipe stays hidden. Do not miss the jackpot -- act now
and win a bonus prize worth real cash.
"""


def main() -> None:
    lexicon = load_lexicon(defaults.data_path(defaults.POWER_WORDS_FILE))
    print(f"lexicon: {len(lexicon)} terms (version {lexicon.version})")
    print()

    doc = build_document("blurb", BLURB)
    hits = scan(doc, build_matcher(lexicon))

    print(f"matches in blurb ({hits.total} total):")
    for match in hits.matches:
        surface = doc.raw[match.start : match.end]
        print(f"  {match.category.value:14s} {surface!r}")
    print()

    dist = distribution(hits)
    print("category distribution:")
    for category, pct in sorted(
        dist.percentages.items(), key=lambda item: -item[1]
    ):
        bar = "#" * round(pct / 2)
        print(f"  {category.value:14s} {pct:6.2f}%  {bar}")


if __name__ == "__main__":
    main()
