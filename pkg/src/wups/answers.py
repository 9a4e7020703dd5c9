"""Normalization of raw answer strings into bags of tokens.

Every scoring operation in this package works on :class:`AnswerBag` values,
so all case folding, separator handling and punctuation stripping happens
here and nowhere else.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field

__all__ = ["AnswerBag", "normalize"]

# Commas separate terms inside one answer; semicolons are reserved for the
# annotator separator in ground-truth files and never survive into tokens.
_SEPARATORS = re.compile(r"[\s,;]+")

_EDGE_PUNCT = string.punctuation


@dataclass(frozen=True)
class AnswerBag:
    """A deduplicated set of normalized answer tokens.

    Tokens are lowercase, non-empty, and contain no whitespace or separator
    characters. Internal hyphens, underscores and digits are preserved, so
    compound terms such as ``night_stand`` stay atomic.
    """

    tokens: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for tok in self.tokens:
            if not tok:
                raise ValueError("empty token in answer bag")
            if _SEPARATORS.search(tok):
                raise ValueError(f"token contains separator characters: {tok!r}")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(sorted(self.tokens))

    def __contains__(self, token: str) -> bool:
        return token in self.tokens

    def render(self) -> str:
        """Canonical comma-separated rendering; ``normalize`` round-trips it."""
        return ", ".join(sorted(self.tokens))


def normalize(raw: str) -> AnswerBag:
    """Turn a raw answer string into an :class:`AnswerBag`.

    Lowercases, splits on commas/semicolons and runs of whitespace, strips
    punctuation from the edges of each piece, drops empty pieces and
    deduplicates. Empty input yields an empty bag.
    """
    tokens = set()
    for piece in _SEPARATORS.split(raw.lower()):
        piece = piece.strip(_EDGE_PUNCT)
        if piece:
            tokens.add(piece)
    return AnswerBag(frozenset(tokens))
