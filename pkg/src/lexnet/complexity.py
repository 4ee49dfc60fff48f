"""Per-user textual complexity measures.

Three views of the same text, computed on different representations:

* Yule's K on the stemmed, stopword-free token stream (via its frequency
  spectrum), so it measures vocabulary concentration.
* A DEFLATE compression ratio on the cleaned raw text, so it measures
  redundancy. Byte counts use a fixed gzip framing (10-byte header with
  zeroed timestamp + 8-byte trailer) so results are platform-stable.
* The Flesch reading-ease score on the cleaned raw text, using the
  module's own sentence splitter and syllable counter.

Syllable counting follows a small documented rule table:
  R1  lowercase, keep ASCII letters only (no letters -> 1 syllable)
  R2  count maximal runs of vowels, with aeiouy all vowels
  R3  a final "e" is silent unless the word ends consonant+"le"
  R4  otherwise a final "ed" is silent unless preceded by a vowel, d or t
  R5  otherwise a final "es" is silent unless preceded by a vowel or one
      of s c x z g l
  R6  every word has at least one syllable
Silent-ending deductions never fire when only one vowel group exists.
"""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass

from .textpipe import FrequencySpectrum

GZIP_OVERHEAD_BYTES = 18  # fixed header (mtime forced to 0) + CRC/size trailer
DEFAULT_COMPRESSION_LEVEL = 6

_VOWELS = frozenset("aeiouy")
_LETTERS = re.compile(r"[a-z]+")

# Tokens ending in these (dot-stripped, lowercase) never close a sentence.
ABBREVIATIONS = frozenset(
    ["dr", "mr", "mrs", "ms", "prof", "sr", "jr", "st", "vs", "etc",
     "e.g", "i.e", "u.s", "u.k", "u.n", "a.m", "p.m", "no", "fig",
     "mt", "inc", "ltd", "co", "corp", "approx"]
)

_SENTENCE_END = re.compile(r"(\S+?)([.!?]+)(?=\s|$)")
_WORDISH = re.compile(r"\w", re.UNICODE)


@dataclass(frozen=True)
class ComplexityScores:
    yule_k: float
    gzip_ratio: float
    flesch: float
    s_raw: int
    s_compressed: int


def yule_k(spectrum: FrequencySpectrum) -> float:
    """Yule's K = 1e4 * (-1/N + sum_i V(i,N) * (i/N)^2).

    Exactly 0 when every type occurs once; grows as the text reuses a
    smaller vocabulary more heavily.
    """
    n = spectrum.n_tokens
    if n < 1:
        raise ValueError("Yule's K needs at least one token")
    # (sum_i V(i,N) i^2 - N) / N^2 keeps the all-distinct case exactly zero
    s2 = sum(v_i * i * i for i, v_i in spectrum.counts.items())
    return 1e4 * (s2 - n) / (n * n)


def compression_ratio(
    text: str, level: int = DEFAULT_COMPRESSION_LEVEL
) -> tuple[float, int, int]:
    """DEFLATE-compress the UTF-8 bytes; return (ratio, s_raw, s_compressed)."""
    raw = text.encode("utf-8")
    if not raw:
        raise ValueError("cannot compute a compression ratio for empty text")
    comp = zlib.compressobj(level, zlib.DEFLATED, -zlib.MAX_WBITS)
    s_compressed = len(comp.compress(raw) + comp.flush()) + GZIP_OVERHEAD_BYTES
    return s_compressed / len(raw), len(raw), s_compressed


def count_syllables(word: str) -> int:
    """Heuristic syllable count per the module rule table; minimum 1."""
    groups = _LETTERS.findall(word.lower())
    letters = "".join(groups)
    if not letters:
        return 1
    count = 0
    prev_vowel = False
    for ch in letters:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    if count >= 2:
        if letters.endswith("e"):
            ends_cons_le = (
                len(letters) >= 3
                and letters.endswith("le")
                and letters[-3] not in _VOWELS
            )
            if not ends_cons_le:
                count -= 1
        elif letters.endswith("ed"):
            if len(letters) >= 3 and letters[-3] not in _VOWELS and letters[-3] not in "dt":
                count -= 1
        elif letters.endswith("es"):
            if len(letters) >= 3 and letters[-3] not in _VOWELS and letters[-3] not in "scxzgl":
                count -= 1
    return max(count, 1)


def split_sentences(text: str) -> list[str]:
    """Split on terminal . ! ? followed by whitespace or end of text.

    A guard list keeps common abbreviations from opening a boundary; text
    without terminal punctuation comes back as a single sentence.
    """
    text = text.strip()
    if not text:
        return []
    boundaries = []
    for m in _SENTENCE_END.finditer(text):
        token = m.group(1)
        if m.group(2) == "." and token.rstrip(".").lower() in ABBREVIATIONS:
            continue
        boundaries.append(m.end())
    sentences = []
    start = 0
    for b in boundaries:
        seg = text[start:b].strip()
        if _WORDISH.search(seg):
            sentences.append(seg)
            start = b
    tail = text[start:].strip()
    if _WORDISH.search(tail):
        sentences.append(tail)
    return sentences if sentences else [text]


def flesch_index(text: str) -> float:
    """Flesch reading ease: 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)."""
    words = [t for t in text.split() if _WORDISH.search(t)]
    if not words:
        raise ValueError("Flesch index needs at least one word")
    n_sentences = max(len(split_sentences(text)), 1)
    n_syllables = sum(count_syllables(w) for w in words)
    return (
        206.835
        - 1.015 * (len(words) / n_sentences)
        - 84.6 * (n_syllables / len(words))
    )


def score_text(
    spectrum: FrequencySpectrum,
    cleaned_text: str,
    level: int = DEFAULT_COMPRESSION_LEVEL,
) -> ComplexityScores:
    """Bundle the three measures for one user."""
    ratio, s_raw, s_comp = compression_ratio(cleaned_text, level=level)
    return ComplexityScores(
        yule_k=yule_k(spectrum),
        gzip_ratio=ratio,
        flesch=flesch_index(cleaned_text),
        s_raw=s_raw,
        s_compressed=s_comp,
    )
