"""English Snowball stemmer (Porter2, 2002 revision).

Self-contained implementation of the standard English Snowball algorithm,
used to reduce tokens to their root form. Input is expected to be a single
lowercase-insensitive word; output is always lowercase.
"""

from __future__ import annotations

VOWELS = frozenset("aeiouy")
DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
LI_ENDINGS = frozenset("cdeghkmnrt")

# Whole-word special cases: irregular stems and invariant forms.
EXCEPTIONS = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}

# Words left untouched after step 1a.
EXCEPTIONS_POST_1A = frozenset(
    ["inning", "outing", "canning", "herring", "earring",
     "proceed", "exceed", "succeed"]
)

STEP2_RULES = [
    ("ization", "ize"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("iveness", "ive"),
    ("ational", "ate"),
    ("biliti", "ble"),
    ("tional", "tion"),
    ("lessli", "less"),
    ("ousli", "ous"),
    ("entli", "ent"),
    ("ation", "ate"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("fulli", "ful"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("abli", "able"),
    ("izer", "ize"),
    ("ator", "ate"),
    ("alism", "al"),
    ("alli", "al"),
    ("bli", "ble"),
    ("ogi", "og"),       # only when preceded by l
    ("li", ""),          # only after a valid li-ending
]

STEP3_RULES = [
    ("ational", "ate"),
    ("tional", "tion"),
    ("alize", "al"),
    ("icate", "ic"),
    ("iciti", "ic"),
    ("ative", ""),       # only when in R2
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
]

STEP4_SUFFIXES = [
    "ement", "ance", "ence", "able", "ible", "ment",
    "ant", "ent", "ism", "ate", "iti", "ous", "ive", "ize",
    "ion", "al", "er", "ic",
]


def _is_vowel(word: str, i: int) -> bool:
    return word[i] in VOWELS


def _r1_r2(word: str) -> tuple[int, int]:
    """Positions of the R1 and R2 regions (index = region start)."""
    r1 = len(word)
    if word.startswith(("gener", "commun", "arsen")):
        r1 = 5 if not word.startswith("commun") else 6
    else:
        for i in range(1, len(word)):
            if not _is_vowel(word, i) and _is_vowel(word, i - 1):
                r1 = i + 1
                break
    r2 = len(word)
    for i in range(r1 + 1, len(word)):
        if not _is_vowel(word, i) and _is_vowel(word, i - 1):
            r2 = i + 1
            break
    return r1, r2


def _ends_short_syllable(word: str) -> bool:
    # (a) non-vowel, vowel, non-vowel other than w/x/Y at the end
    # (b) the whole word is vowel + non-vowel
    if len(word) >= 3:
        if (
            not _is_vowel(word, -3)
            and _is_vowel(word, -2)
            and word[-1] not in VOWELS
            and word[-1] not in "wxY"
        ):
            return True
    if len(word) == 2 and _is_vowel(word, 0) and not _is_vowel(word, 1):
        return True
    return False


def stem(word: str) -> str:
    """Stem a single word with the English Snowball (Porter2) algorithm."""
    word = word.lower()
    if word in EXCEPTIONS:
        return EXCEPTIONS[word]
    if len(word) <= 2:
        return word

    if word[0] == "'":
        word = word[1:]
        if len(word) <= 2:
            return word

    # Mark consonant-y as "Y" so it is not treated as a vowel.
    chars = list(word)
    if chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in VOWELS:
            chars[i] = "Y"
    word = "".join(chars)

    r1, r2 = _r1_r2(word)

    # Step 0: strip possessive endings.
    for suf in ("'s'", "'s", "'"):
        if word.endswith(suf):
            word = word[: -len(suf)]
            break

    # Step 1a
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith(("ied", "ies")):
        word = word[:-3] + ("i" if len(word) > 4 else "ie")
    elif word.endswith(("us", "ss")):
        pass
    elif word.endswith("s"):
        # delete s only if a vowel occurs before the penultimate letter
        if any(c in VOWELS for c in word[:-2]):
            word = word[:-1]

    if word in EXCEPTIONS_POST_1A:
        return word

    # Step 1b
    if word.endswith(("eedly", "eed")):
        suf = "eedly" if word.endswith("eedly") else "eed"
        if len(word) - len(suf) >= r1:
            word = word[: -len(suf)] + "ee"
    elif word.endswith(("ingly", "edly", "ing", "ed")):
        for suf in ("ingly", "edly", "ing", "ed"):
            if word.endswith(suf):
                stem_part = word[: -len(suf)]
                if any(c in VOWELS for c in stem_part):
                    word = stem_part
                    if word.endswith(("at", "bl", "iz")):
                        word += "e"
                    elif word.endswith(DOUBLES):
                        word = word[:-1]
                    elif _ends_short_syllable(word) and r1 >= len(word):
                        word += "e"
                break

    # Step 1c: y -> i after a non-vowel that is not the first letter.
    if (
        len(word) > 2
        and word[-1] in "yY"
        and word[-2] not in VOWELS
    ):
        word = word[:-1] + "i"

    # Step 2
    for suf, repl in STEP2_RULES:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                if suf == "ogi":
                    if word.endswith("logi"):
                        word = word[:-1]
                elif suf == "li":
                    if len(word) >= 3 and word[-3] in LI_ENDINGS:
                        word = word[:-2]
                else:
                    word = word[: -len(suf)] + repl
            break

    # Step 3
    for suf, repl in STEP3_RULES:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                if suf == "ative":
                    if len(word) - len(suf) >= r2:
                        word = word[: -len(suf)]
                else:
                    word = word[: -len(suf)] + repl
            break

    # Step 4
    for suf in STEP4_SUFFIXES:
        if word.endswith(suf):
            if len(word) - len(suf) >= r2:
                if suf == "ion":
                    if len(word) >= 4 and word[-4] in "st":
                        word = word[:-3]
                else:
                    word = word[: -len(suf)]
            break

    # Step 5
    if word.endswith("e"):
        if len(word) - 1 >= r2 or (
            len(word) - 1 >= r1 and not _ends_short_syllable(word[:-1])
        ):
            word = word[:-1]
    elif word.endswith("l") and len(word) - 1 >= r2 and len(word) >= 2 and word[-2] == "l":
        word = word[:-1]

    return word.replace("Y", "y")
