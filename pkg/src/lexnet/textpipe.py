"""Tokenization pipeline: cleaned text -> stemmed tokens, types, spectrum.

Pipeline order is fixed: word-boundary tokenization -> punctuation removal
-> stopword removal (case-insensitive) -> stemming -> lowercase. Numeric
tokens are kept. The stopword list ships with the package (Snowball
English, one word per line) and can be overridden with any file in the
same format.
"""

from __future__ import annotations

import hashlib
import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .stemmer import stem

# Word = runs of letters/digits/underscore-free word chars, with internal
# apostrophes kept so contractions match the stopword list.
_WORD = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)

_DEFAULT_STOPWORDS: frozenset[str] | None = None


@dataclass(frozen=True)
class TokenSequence:
    """Ordered stemmed tokens with token count N and type count V."""

    tokens: tuple[str, ...]

    @property
    def n_tokens(self) -> int:
        return len(self.tokens)

    @property
    def n_types(self) -> int:
        return len(set(self.tokens))

    def __bool__(self) -> bool:
        return bool(self.tokens)


@dataclass(frozen=True)
class FrequencySpectrum:
    """Map i -> number of types occurring exactly i times."""

    counts: dict[int, int]
    n_tokens: int
    n_types: int


def default_stopwords() -> frozenset[str]:
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        text = resources.files("lexnet").joinpath("data/stopwords_en.txt").read_text("utf-8")
        _DEFAULT_STOPWORDS = frozenset(w.strip().lower() for w in text.splitlines() if w.strip())
    return _DEFAULT_STOPWORDS


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a one-word-per-line stopword file."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(w.strip().lower() for w in fh if w.strip())


def stopword_list_checksum(words: frozenset[str] | None = None) -> str:
    """sha256 over the sorted stopword list; recorded in run metadata."""
    words = default_stopwords() if words is None else words
    blob = "\n".join(sorted(words)).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def tokenize(text: str) -> list[str]:
    """Unicode word-boundary tokens; punctuation-only runs never match."""
    return _WORD.findall(text)


def preprocess_user_text(
    text: str, stopwords: frozenset[str] | None = None
) -> TokenSequence:
    """Run the full pipeline over a user's concatenated cleaned text.

    Returns an empty TokenSequence when nothing survives; callers must
    exclude such users from downstream analyses.
    """
    stopwords = default_stopwords() if stopwords is None else stopwords
    out = []
    for raw in tokenize(text):
        word = raw.replace("’", "'")
        if word.lower() in stopwords:
            continue
        out.append(stem(word).lower())
    return TokenSequence(tokens=tuple(out))


def frequency_spectrum(seq: TokenSequence) -> FrequencySpectrum:
    """Histogram of type multiplicities: counts[i] = #types used i times."""
    if not seq.tokens:
        raise ValueError("empty token sequence has no frequency spectrum")
    type_counts = Counter(seq.tokens)
    spectrum = Counter(type_counts.values())
    return FrequencySpectrum(
        counts=dict(sorted(spectrum.items())),
        n_tokens=seq.n_tokens,
        n_types=seq.n_types,
    )
