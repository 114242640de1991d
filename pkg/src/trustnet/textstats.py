"""Small text helpers shared by ingestion and feature extraction."""

from __future__ import annotations

import re

HASHTAG_RE = re.compile(r"#\w+")
MENTION_RE = re.compile(r"@\w+")
URL_RE = re.compile(r"https?://\S+")

# Unicode emoji blocks, inclusive code-point ranges.
_EMOJI_RANGES = (
    (0x1F300, 0x1F5FF),  # misc symbols & pictographs
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport & map
    (0x1F900, 0x1F9FF),  # supplemental symbols
    (0x1FA70, 0x1FAFF),  # symbols extended-A
    (0x1F1E6, 0x1F1FF),  # regional indicators
    (0x2600, 0x26FF),    # misc symbols
    (0x2700, 0x27BF),    # dingbats
)


def extract_hashtags(text: str) -> tuple[str, ...]:
    return tuple(HASHTAG_RE.findall(text))


def extract_mentions(text: str) -> tuple[str, ...]:
    return tuple(MENTION_RE.findall(text))


def extract_urls(text: str) -> tuple[str, ...]:
    return tuple(URL_RE.findall(text))


def count_emoji(text: str) -> int:
    return sum(1 for ch in text if _is_emoji(ch))


def _is_emoji(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def word_count(text: str) -> int:
    return len(text.split())
