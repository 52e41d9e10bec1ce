"""Deterministic text primitives shared by all checks and metrics.

Every function here is pure. The exact definitions matter: length checks,
compression ratios, duplicate keys and ROUGE all build on ``normalize``
and ``tokenize``, so changing them changes every downstream number.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter

# Word characters minus the underscore: all Unicode letters and digits.
_ALNUM_RUN = re.compile(r"[^\W_]+", re.UNICODE)

# Sentence-final punctuation that may end a sentence when followed by a
# space and an uppercase letter or digit.
_BOUNDARY_CHARS = ".!?:"

#: Built-in German abbreviation list for the sentence splitter. Entries are
#: matched against the token preceding a candidate boundary with trailing
#: periods stripped on both sides.
DEFAULT_ABBREVIATIONS = frozenset(
    {
        "z.B.", "bzw.", "ca.", "Dr.", "Prof.", "Nr.", "u.a.", "d.h.",
        "vgl.", "evtl.", "ggf.", "inkl.", "Abs.", "Art.", "bspw.", "etc.",
        "usw.", "sog.", "u.U.", "i.d.R.", "Mio.", "Mrd.", "Str.", "Tel.",
        "Hrsg.", "zzgl.", "o.g.", "u.v.m.", "z.T.",
    }
)


def normalize(text: str) -> str:
    """Canonical text form: NFC, trimmed, inner whitespace runs collapsed.

    Idempotent. A whitespace-only input normalizes to the empty string.
    """
    text = unicodedata.normalize("NFC", text)
    return " ".join(text.split())


def tokenize(text: str, mode: str = "whitespace") -> list[str]:
    """Split text into tokens.

    ``whitespace`` normalizes and splits on spaces; it feeds length and
    compression-ratio statistics. ``rouge`` lowercases and splits on every
    maximal run of non-alphanumeric characters (Unicode letters and digits
    count as alphanumeric); it feeds the ROUGE metrics. Lowercasing is used
    instead of full casefolding so that the sharp s survives ("Größe" must
    tokenize to "größe", not "grösse").
    """
    if mode == "whitespace":
        return normalize(text).split()
    if mode == "rouge":
        return _ALNUM_RUN.findall(text.lower())
    raise ValueError(f"unknown tokenize mode {mode!r}")


def load_abbreviations(path) -> set[str]:
    """Read an abbreviation list: one entry per line, '#' starts a comment."""
    entries: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.split("#", 1)[0].strip()
            if entry:
                entries.add(entry)
    return entries


def split_sentences(text: str, abbreviations: set[str] | frozenset[str] | None = None) -> list[str]:
    """Rule-based sentence splitting over the normalized text.

    Splits after '.', '!', '?' or ':' when followed by a space and an
    uppercase letter or digit. A '.' does not split when the preceding
    token (trailing period removed) is a known abbreviation, a single
    letter (initials) or a digit run (German ordinals such as "3.").
    Joining the result with single spaces reproduces ``normalize(text)``
    exactly; no sentence is empty.
    """
    if abbreviations is None:
        abbreviations = DEFAULT_ABBREVIATIONS
    stops = {a.rstrip(".") for a in abbreviations}
    s = normalize(text)
    if not s:
        return []
    sentences: list[str] = []
    start = 0
    i = 0
    limit = len(s) - 2
    while i < limit:
        ch = s[i]
        if (
            ch in _BOUNDARY_CHARS
            and s[i + 1] == " "
            and (s[i + 2].isupper() or s[i + 2].isdigit())
        ):
            blocked = False
            if ch == ".":
                token_start = s.rfind(" ", 0, i) + 1
                token = s[token_start:i]
                blocked = bool(token) and (
                    token in stops
                    or (len(token) == 1 and token.isalpha())
                    or token.isdigit()
                )
            if not blocked:
                sentences.append(s[start : i + 1])
                start = i + 2
                i = start
                continue
        i += 1
    sentences.append(s[start:])
    return sentences


def ngrams(tokens: list[str], n: int) -> Counter:
    """All contiguous n-token windows with multiplicity.

    Returns an empty counter when the sequence is shorter than ``n``.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))
