"""Lexicon-based sentiment scoring.

A lexicon is two disjoint sets of normalized terms.  Message polarity is
(pos - neg) / (pos + neg) over matched tokens; a profile score aggregates
the signs of the per-message polarities.  Any UTF-8 lexicon works; a small
built-in English one is provided for the synthetic pipeline.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path

# Characters stripped from token edges.  ASCII punctuation plus the common
# typographic marks that show up in microblog text.
_PUNCT = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~…“”‘’«»¡¿—–·"


@dataclass(frozen=True)
class Lexicon:
    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self) -> None:
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(
                f"term(s) listed as both polarities: {sorted(overlap)}"
            )
        if not self.positive and not self.negative:
            raise ValueError("empty lexicon")


@dataclass(frozen=True)
class SentimentResult:
    positive_count: int
    negative_count: int
    polarity: float


def normalize_term(term: str) -> str:
    return unicodedata.normalize("NFC", term).strip().lower()


def tokenize(text: str) -> list[str]:
    """Split on whitespace, strip edge punctuation, lowercase, NFC."""
    out = []
    for raw in text.split():
        tok = unicodedata.normalize("NFC", raw).strip(_PUNCT).lower()
        if tok:
            out.append(tok)
    return out


def load_lexicon(path: str | Path) -> Lexicon:
    """Parse a ``term<TAB>polarity`` file, polarity in {+,-}.

    ``#``-prefixed lines are comments; duplicate lines collapse; a term
    appearing with both polarities is an error.
    """
    positive: set[str] = set()
    negative: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in ("+", "-"):
                raise ValueError(
                    f"{path}:{lineno}: expected 'term<TAB>+|-', got {line!r}"
                )
            term = normalize_term(parts[0])
            if not term:
                raise ValueError(f"{path}:{lineno}: empty term")
            (positive if parts[1] == "+" else negative).add(term)
    both = positive & negative
    if both:
        raise ValueError(f"term(s) listed as both polarities: {sorted(both)}")
    if not positive and not negative:
        raise ValueError(f"{path}: empty lexicon")
    return Lexicon(frozenset(positive), frozenset(negative))


def save_lexicon(lex: Lexicon, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for term in sorted(lex.positive):
            fh.write(f"{term}\t+\n")
        for term in sorted(lex.negative):
            fh.write(f"{term}\t-\n")


def score_text(lex: Lexicon, text: str) -> SentimentResult:
    pos = neg = 0
    for tok in tokenize(text):
        if tok in lex.positive:
            pos += 1
        elif tok in lex.negative:
            neg += 1
    total = pos + neg
    polarity = (pos - neg) / total if total else 0.0
    return SentimentResult(pos, neg, polarity)


def profile_sentiment(lex: Lexicon, texts) -> float:
    """(#positive messages - #negative messages) / #messages, 0 if empty.

    A message is positive when its polarity is > 0 and negative when < 0;
    exactly 0 is neutral.
    """
    texts = list(texts)
    if not texts:
        return 0.0
    pos_msgs = neg_msgs = 0
    for text in texts:
        p = score_text(lex, text).polarity
        if p > 0:
            pos_msgs += 1
        elif p < 0:
            neg_msgs += 1
    return (pos_msgs - neg_msgs) / len(texts)


DEFAULT_POSITIVE_TERMS = (
    "accurate", "amazing", "appreciate", "awesome", "beautiful", "best",
    "brilliant", "calm", "celebrate", "clear", "confirmed", "correct",
    "excellent", "fair", "fantastic", "genuine", "glad", "good", "grateful",
    "great", "happy", "helpful", "honest", "hope", "important", "informative",
    "inspiring", "kind", "love", "nice", "official", "positive", "proud",
    "reliable", "respect", "safe", "smart", "strong", "success", "support",
    "thanks", "true", "trust", "useful", "verified", "win", "wonderful",
)

DEFAULT_NEGATIVE_TERMS = (
    "angry", "awful", "bad", "clickbait", "corrupt", "crazy", "dangerous",
    "dishonest", "disaster", "doubt", "evil", "fail", "fake", "false", "fear",
    "fraud", "hate", "hoax", "horrible", "idiot", "liar", "lie", "lies",
    "lost", "mislead", "misleading", "negative", "outrage", "panic",
    "pathetic", "poor", "propaganda", "rumor", "sad", "scam", "scandal",
    "shame", "stupid", "terrible", "threat", "toxic", "ugly", "unfair",
    "untrue", "worst", "wrong",
)


def default_lexicon() -> Lexicon:
    return Lexicon(
        frozenset(DEFAULT_POSITIVE_TERMS), frozenset(DEFAULT_NEGATIVE_TERMS)
    )
