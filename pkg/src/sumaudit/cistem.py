"""Cistem stemmer for German (Weissweiler & Fraser, 2017).

Direct implementation of the published algorithm: lowercase and fold
umlauts/sharp s, strip a leading "ge" from long words, protect "sch",
"ei", "ie" and doubled letters behind placeholder characters, then
repeatedly strip the suffixes e/em/er/en/es/n/nd/s/t (with "t" kept on
words that were originally capitalized, i.e. presumed nouns), and finally
undo the placeholders.

The optional case-insensitive mode also strips "t" from capitalized
words; the default matches the reference implementation's default.
"""

from __future__ import annotations

import re
from functools import lru_cache

_STRIP_GE = re.compile(r"^ge(.{4,})")
_REPL_DOUBLE = re.compile(r"(.)\1")
_RESTORE_DOUBLE = re.compile(r"(.)\*")
_STRIP_EMR = re.compile(r"e[mr]$")
_STRIP_ND = re.compile(r"nd$")
_STRIP_T = re.compile(r"t$")
_STRIP_ESN = re.compile(r"[esn]$")


@lru_cache(maxsize=65536)
def cistem_stem(word: str, case_insensitive: bool = False) -> str:
    """Return the Cistem stem of a single word (no whitespace).

    Pure function; results are memoized because corpus-level scoring stems
    the same tokens over and over.
    """
    if not word:
        return word

    upper = word[0].isupper()
    word = word.lower()

    word = word.replace("ü", "u").replace("ö", "o").replace("ä", "a")
    word = word.replace("ß", "ss")

    word = _STRIP_GE.sub(r"\1", word)
    word = word.replace("sch", "$").replace("ei", "%").replace("ie", "&")
    word = _REPL_DOUBLE.sub(r"\1*", word)

    while len(word) > 3:
        if len(word) > 5:
            word, hits = _STRIP_EMR.subn("", word)
            if hits:
                continue
            word, hits = _STRIP_ND.subn("", word)
            if hits:
                continue
        if not upper or case_insensitive:
            word, hits = _STRIP_T.subn("", word)
            if hits:
                continue
        word, hits = _STRIP_ESN.subn("", word)
        if not hits:
            break

    word = _RESTORE_DOUBLE.sub(r"\1\1", word)
    word = word.replace("%", "ei").replace("&", "ie").replace("$", "sch")
    return word
