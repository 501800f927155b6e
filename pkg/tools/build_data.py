#!/usr/bin/env python3
"""Regenerate the shipped data assets (reduction map, phone features, fixtures).

Writing the IPA data through this script keeps combining diacritics explicit
as escapes and re-checks the fixture engineering (which generalizations the
pair corpus exhibits before and after reduction) before freezing the files.
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from accentkit.corpus import ARPABET_TO_IPA, parse_cmudict
from accentkit.phones import load_reduction_map, render, simplify, tokenize
from accentkit.rules import RULE_NAMES, compare_inventories, detect, load_features
from accentkit.stats import accumulate

DATA = Path(__file__).resolve().parents[1] / "src" / "accentkit" / "data"

ASP = "ʰ"      # aspiration
PAL = "ʲ"      # palatalized
LAB = "ʷ"      # labialized
VEL = "ˠ"      # velarized
LONG = "ː"     # length mark
RING_BELOW = "̥"
RING_ABOVE = "̊"
NASAL = "̃"
DENTAL = "̪"
LOWERED = "̞"
SYLLABIC = "̩"
TIE = "͡"

INVENTORY = [
    "ɑ", "æ", "ʌ", "ɔ", f"a{TIE}ʊ", f"a{TIE}ɪ", "b", f"t{TIE}ʃ", "d", "ð",
    "ɛ", "ɝ", f"e{TIE}ɪ", "f", "ɡ", "h", "ɪ", "i", f"d{TIE}ʒ", "k",
    "l", "m", "n", "ŋ", f"o{TIE}ʊ", f"ɔ{TIE}ɪ", "p", "ɹ", "s", "ʃ",
    "t", "θ", "ʊ", "u", "v", "w", "j", "z", "ʒ",
]

REDUCTION_RULES: list[tuple[str, str]] = [
    # aspiration and phonation
    (f"p{ASP}", "p"), (f"t{ASP}", "t"), (f"k{ASP}", "k"), (f"t{TIE}ʃ{ASP}", f"t{TIE}ʃ"),
    ("bʱ", "b"), ("dʱ", "d"), ("ɡʱ", "ɡ"),
    (f"b{RING_BELOW}", "b"), (f"d{RING_BELOW}", "d"), (f"ɡ{RING_ABOVE}", "ɡ"),
    (f"z{RING_BELOW}", "z"), (f"v{RING_BELOW}", "v"), (f"ʒ{RING_BELOW}", "ʒ"),
    # dental, velarized, syllabic
    (f"t{DENTAL}", "t"), (f"d{DENTAL}", "d"), (f"n{DENTAL}", "n"), (f"l{DENTAL}", "l"),
    (f"l{VEL}", "l"), ("ɫ", "l"),
    (f"l{SYLLABIC}", "l"), (f"n{SYLLABIC}", "n"), (f"m{SYLLABIC}", "m"),
    # palatalized and labialized consonants
    (f"p{PAL}", "p"), (f"b{PAL}", "b"), (f"t{PAL}", "t"), (f"d{PAL}", "d"),
    (f"k{PAL}", "k"), (f"ɡ{PAL}", "ɡ"), (f"m{PAL}", "m"), (f"n{PAL}", "n"),
    (f"l{PAL}", "l"), (f"r{PAL}", "ɹ"), (f"s{PAL}", "s"), (f"z{PAL}", "z"),
    (f"f{PAL}", "f"), (f"v{PAL}", "v"),
    (f"k{LAB}", "k"), (f"ɡ{LAB}", "ɡ"), (f"t{LAB}", "t"), (f"s{LAB}", "s"),
    # nasalized vowels
    (f"ɪ{NASAL}", "ɪ"), (f"ɛ{NASAL}", "ɛ"), (f"æ{NASAL}", "æ"), (f"ə{NASAL}", "ʌ"),
    (f"a{NASAL}", "ɑ"), (f"o{NASAL}", "ɔ"), (f"u{NASAL}", "u"), (f"i{NASAL}", "i"),
    # long vowels
    (f"i{LONG}", "i"), (f"u{LONG}", "u"), (f"ɑ{LONG}", "ɑ"), (f"ɔ{LONG}", "ɔ"),
    (f"ɛ{LONG}", "ɛ"), (f"æ{LONG}", "æ"), (f"a{LONG}", "ɑ"), (f"ə{LONG}", "ʌ"),
    (f"ɜ{LONG}", "ɝ"), (f"e{LONG}", f"e{TIE}ɪ"), (f"o{LONG}", f"o{TIE}ʊ"),
    (f"ɪ{LONG}", "ɪ"), (f"ʊ{LONG}", "ʊ"),
    # vowels outside the inventory
    ("a", "ɑ"), ("e", "ɛ"), ("o", "ɔ"), ("ə", "ʌ"), ("ɚ", "ɝ"), ("ɜ", "ɝ"),
    ("ɨ", "ɪ"), ("ʉ", "u"), ("ɯ", "u"), ("y", "i"), ("ʏ", "ɪ"), ("ø", "ɛ"),
    ("œ", "ɛ"), ("ɵ", "ʌ"), ("ɐ", "ʌ"), ("ɒ", "ɑ"), ("ɤ", "ʌ"), (f"æ{LOWERED}", "æ"),
    (f"ə˞", "ɝ"),
    # rhotics and laterals
    ("r", "ɹ"), ("ɾ", "ɹ"), ("ɽ", "ɹ"), ("ʀ", "ɹ"), ("ʁ", "ɹ"), ("ɻ", "ɹ"),
    ("ɭ", "l"), ("ʎ", "l"),
    # fricatives
    ("x", "k"), ("χ", "k"), ("ɣ", "ɡ"), ("β", "b"), ("ɸ", "f"), ("ç", "h"),
    ("ʝ", "j"), ("ʂ", "ʃ"), ("ʐ", "ʒ"), ("ɦ", "h"),
    # stops and nasals
    ("c", "k"), ("ɟ", f"d{TIE}ʒ"), ("q", "k"), ("ʈ", "t"), ("ɖ", "d"),
    ("ɳ", "n"), ("ɲ", "n"), ("ɱ", "m"),
    # implosives
    ("ɓ", "b"), ("ɗ", "d"), ("ʄ", f"d{TIE}ʒ"), ("ɠ", "ɡ"),
    # affricates outside the inventory
    (f"t{TIE}s", "t s"), (f"d{TIE}z", "d z"), (f"p{TIE}f", "f"),
    # approximants and leftovers
    ("ʋ", "v"), ("ʍ", "w"), ("ɰ", "w"), ("g", "ɡ"),
    ("ʔ", ""),
]

# phone -> (category, voicing, manner, place) for consonants
CONSONANTS: dict[str, tuple[str, str, str]] = {
    "p": ("voiceless", "stop", "bilabial"),
    "b": ("voiced", "stop", "bilabial"),
    "t": ("voiceless", "stop", "alveolar"),
    "d": ("voiced", "stop", "alveolar"),
    "k": ("voiceless", "stop", "velar"),
    "ɡ": ("voiced", "stop", "velar"),
    "g": ("voiced", "stop", "velar"),
    "c": ("voiceless", "stop", "palatal"),
    "ɟ": ("voiced", "stop", "palatal"),
    "q": ("voiceless", "stop", "uvular"),
    "ʈ": ("voiceless", "stop", "retroflex"),
    "ɖ": ("voiced", "stop", "retroflex"),
    "ʔ": ("voiceless", "stop", "glottal"),
    "m": ("voiced", "nasal", "bilabial"),
    "ɱ": ("voiced", "nasal", "labiodental"),
    "n": ("voiced", "nasal", "alveolar"),
    "ŋ": ("voiced", "nasal", "velar"),
    "ɳ": ("voiced", "nasal", "retroflex"),
    "ɲ": ("voiced", "nasal", "palatal"),
    "f": ("voiceless", "fricative", "labiodental"),
    "v": ("voiced", "fricative", "labiodental"),
    "θ": ("voiceless", "fricative", "dental"),
    "ð": ("voiced", "fricative", "dental"),
    "s": ("voiceless", "fricative", "alveolar"),
    "z": ("voiced", "fricative", "alveolar"),
    "ʃ": ("voiceless", "fricative", "postalveolar"),
    "ʒ": ("voiced", "fricative", "postalveolar"),
    "ʂ": ("voiceless", "fricative", "retroflex"),
    "ʐ": ("voiced", "fricative", "retroflex"),
    "ç": ("voiceless", "fricative", "palatal"),
    "x": ("voiceless", "fricative", "velar"),
    "ɣ": ("voiced", "fricative", "velar"),
    "χ": ("voiceless", "fricative", "uvular"),
    "ʁ": ("voiced", "fricative", "uvular"),
    "β": ("voiced", "fricative", "bilabial"),
    "ɸ": ("voiceless", "fricative", "bilabial"),
    "h": ("voiceless", "fricative", "glottal"),
    "ɦ": ("voiced", "fricative", "glottal"),
    "ʝ": ("voiced", "fricative", "palatal"),
    f"t{TIE}ʃ": ("voiceless", "affricate", "postalveolar"),
    f"d{TIE}ʒ": ("voiced", "affricate", "postalveolar"),
    f"t{TIE}s": ("voiceless", "affricate", "alveolar"),
    f"d{TIE}z": ("voiced", "affricate", "alveolar"),
    f"p{TIE}f": ("voiceless", "affricate", "labiodental"),
    "ɹ": ("voiced", "approximant", "alveolar"),
    "ɻ": ("voiced", "approximant", "retroflex"),
    "j": ("voiced", "approximant", "palatal"),
    "w": ("voiced", "approximant", "labiovelar"),
    "ʍ": ("voiceless", "approximant", "labiovelar"),
    "ɰ": ("voiced", "approximant", "velar"),
    "ʋ": ("voiced", "approximant", "labiodental"),
    "l": ("voiced", "lateral", "alveolar"),
    "ɭ": ("voiced", "lateral", "retroflex"),
    "ʎ": ("voiced", "lateral", "palatal"),
    "ɫ": ("voiced", "lateral", "alveolar"),
    "r": ("voiced", "trill", "alveolar"),
    "ʀ": ("voiced", "trill", "uvular"),
    "ɾ": ("voiced", "flap", "alveolar"),
    "ɽ": ("voiced", "flap", "retroflex"),
    "ɓ": ("voiced", "implosive", "bilabial"),
    "ɗ": ("voiced", "implosive", "alveolar"),
    "ʄ": ("voiced", "implosive", "palatal"),
    "ɠ": ("voiced", "implosive", "velar"),
}

# modified consonants inherit (voicing, manner, place) with overrides
MODIFIED_CONSONANTS: dict[str, tuple[str, str, str]] = {
    f"p{ASP}": CONSONANTS["p"],
    f"t{ASP}": CONSONANTS["t"],
    f"k{ASP}": CONSONANTS["k"],
    f"t{TIE}ʃ{ASP}": CONSONANTS[f"t{TIE}ʃ"],
    "bʱ": CONSONANTS["b"],
    "dʱ": CONSONANTS["d"],
    "ɡʱ": CONSONANTS["ɡ"],
    f"b{RING_BELOW}": ("voiceless", "stop", "bilabial"),
    f"d{RING_BELOW}": ("voiceless", "stop", "alveolar"),
    f"ɡ{RING_ABOVE}": ("voiceless", "stop", "velar"),
    f"z{RING_BELOW}": ("voiceless", "fricative", "alveolar"),
    f"v{RING_BELOW}": ("voiceless", "fricative", "labiodental"),
    f"ʒ{RING_BELOW}": ("voiceless", "fricative", "postalveolar"),
    f"t{DENTAL}": ("voiceless", "stop", "dental"),
    f"d{DENTAL}": ("voiced", "stop", "dental"),
    f"n{DENTAL}": ("voiced", "nasal", "dental"),
    f"l{DENTAL}": ("voiced", "lateral", "dental"),
    f"l{VEL}": CONSONANTS["l"],
    f"l{SYLLABIC}": CONSONANTS["l"],
    f"n{SYLLABIC}": CONSONANTS["n"],
    f"m{SYLLABIC}": CONSONANTS["m"],
    f"p{PAL}": CONSONANTS["p"],
    f"b{PAL}": CONSONANTS["b"],
    f"t{PAL}": CONSONANTS["t"],
    f"d{PAL}": CONSONANTS["d"],
    f"k{PAL}": CONSONANTS["k"],
    f"ɡ{PAL}": CONSONANTS["ɡ"],
    f"m{PAL}": CONSONANTS["m"],
    f"n{PAL}": CONSONANTS["n"],
    f"l{PAL}": CONSONANTS["l"],
    f"r{PAL}": CONSONANTS["r"],
    f"s{PAL}": CONSONANTS["s"],
    f"z{PAL}": CONSONANTS["z"],
    f"f{PAL}": CONSONANTS["f"],
    f"v{PAL}": CONSONANTS["v"],
    f"k{LAB}": CONSONANTS["k"],
    f"ɡ{LAB}": CONSONANTS["ɡ"],
    f"t{LAB}": CONSONANTS["t"],
    f"s{LAB}": CONSONANTS["s"],
}

# phone -> (height, backness, length) for vowels
VOWELS: dict[str, tuple[str, str, str]] = {
    "i": ("high", "front", "long"),
    "ɪ": ("high", "front", "short"),
    "y": ("high", "front", "short"),
    "ʏ": ("high", "front", "short"),
    "ɨ": ("high", "central", "short"),
    "ʉ": ("high", "central", "short"),
    "ɯ": ("high", "back", "short"),
    "u": ("high", "back", "long"),
    "ʊ": ("high", "back", "short"),
    "e": ("mid-high", "front", "long"),
    "ø": ("mid-high", "front", "short"),
    "ɤ": ("mid-high", "back", "short"),
    "o": ("mid-high", "back", "long"),
    "ə": ("mid", "central", "short"),
    "ɵ": ("mid", "central", "short"),
    "ɜ": ("mid", "central", "short"),
    "ɝ": ("mid", "central", "long"),
    "ɚ": ("mid", "central", "short"),
    "ɛ": ("mid-low", "front", "short"),
    "œ": ("mid-low", "front", "short"),
    "ʌ": ("mid-low", "back", "short"),
    "ɔ": ("mid-low", "back", "long"),
    "æ": ("near-low", "front", "short"),
    "ɐ": ("near-low", "central", "short"),
    "a": ("low", "front", "short"),
    "ɑ": ("low", "back", "long"),
    "ɒ": ("low", "back", "short"),
    f"æ{LOWERED}": ("low", "front", "short"),
}

LONG_VOWELS = ["i", "u", "ɑ", "ɔ", "ɛ", "æ", "a", "ə", "ɜ", "e", "o", "ɪ", "ʊ"]
NASAL_VOWELS = ["ɪ", "ɛ", "æ", "ə", "a", "o", "u", "i"]
DIPHTHONGS = [f"a{TIE}ʊ", f"a{TIE}ɪ", f"e{TIE}ɪ", f"o{TIE}ʊ", f"ɔ{TIE}ɪ"]


def build_reduction_map() -> str:
    lines = [
        "# Reduction map: rich IPA phones onto the 39-sound dictionary inventory.",
        "# One `source<TAB>targets` rule per line; an empty target deletes the phone.",
        "# This table is a reconstruction that covers the shipped fixtures plus the",
        "# common transcription symbols; extend it for your own data.",
        "!inventory " + " ".join(INVENTORY),
    ]
    for src, dst in REDUCTION_RULES:
        lines.append(f"{src}\t{dst}")
    return "\n".join(lines) + "\n"


def build_features() -> str:
    lines = [
        "# phone<TAB>category<TAB>voicing<TAB>manner<TAB>place<TAB>height<TAB>backness<TAB>length",
        "# `-` marks fields that do not apply to the category.",
    ]

    def consonant(phone: str, spec: tuple[str, str, str]) -> str:
        voicing, manner, place = spec
        return f"{phone}\tconsonant\t{voicing}\t{manner}\t{place}\t-\t-\t-"

    def vowel(phone: str, spec: tuple[str, str, str]) -> str:
        height, backness, length = spec
        return f"{phone}\tvowel\tvoiced\t-\t-\t{height}\t{backness}\t{length}"

    for phone, spec in CONSONANTS.items():
        lines.append(consonant(phone, spec))
    for phone, spec in MODIFIED_CONSONANTS.items():
        lines.append(consonant(phone, spec))
    for phone, spec in VOWELS.items():
        lines.append(vowel(phone, spec))
    for base in LONG_VOWELS:
        height, backness, _ = VOWELS[base]
        lines.append(vowel(f"{base}{LONG}", (height, backness, "long")))
    for base in NASAL_VOWELS:
        lines.append(vowel(f"{base}{NASAL}", VOWELS[base]))
    for phone in DIPHTHONGS:
        lines.append(vowel(phone, ("-", "-", "long")))
    lines.append(vowel("ə˞", ("mid", "central", "short")))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fixtures

# The 69-token elicitation paragraph, in order.
PARAGRAPH = (
    "please call stella ask her to bring these things with her from the store "
    "six spoons of fresh snow peas five thick slabs of blue cheese and maybe a "
    "snack for her brother bob we also need a small plastic snake and a big toy "
    "frog for the kids she can scoop these things into three red bags and we "
    "will go meet her wednesday at the train station"
).split()

GAE: dict[str, str] = {
    "please": f"p{ASP}li{LONG}z",
    "call": f"k{ASP}ɑ{LONG}l{VEL}",
    "stella": "stɛlə",
    "ask": "æsk",
    "her": "hɝ",
    "to": f"t{ASP}u{LONG}",
    "bring": "bɹɪŋ",
    "these": f"ði{LONG}z",
    "things": "θɪŋz",
    "with": "wɪθ",
    "from": "fɹʌm",
    "the": "ðə",
    "store": f"stɔ{LONG}ɹ",
    "six": "sɪks",
    "spoons": f"spu{LONG}nz",
    "of": "ʌv",
    "fresh": "fɹɛʃ",
    "snow": "snoʊ",
    "peas": f"p{ASP}i{LONG}z",
    "five": "faɪv",
    "thick": "θɪk",
    "slabs": "slæbz",
    "blue": f"blu{LONG}",
    "cheese": f"t{TIE}ʃi{LONG}z",
    "and": "ænd",
    "maybe": "meɪbi",
    "a": "ə",
    "snack": "snæk",
    "for": f"fɔ{LONG}ɹ",
    "brother": "bɹʌðɚ",
    "bob": f"bɑ{LONG}b",
    "we": f"wi{LONG}",
    "also": f"ɔ{LONG}lsoʊ",
    "need": f"ni{LONG}d",
    "small": f"smɔ{LONG}l",
    "plastic": f"p{ASP}læstɪk",
    "snake": "sneɪk",
    "big": "bɪɡ",
    "toy": f"t{ASP}ɔɪ",
    "frog": f"fɹɑ{LONG}ɡ",
    "kids": f"k{ASP}ɪdz",
    "she": f"ʃi{LONG}",
    "can": f"k{ASP}æn",
    "scoop": f"sku{LONG}p",
    "into": f"ɪntu{LONG}",
    "three": f"θɹi{LONG}",
    "red": "ɹɛd",
    "bags": "bæɡz",
    "will": "wɪl",
    "go": "ɡoʊ",
    "meet": f"mi{LONG}t",
    "wednesday": "wɛnzdeɪ",
    "at": "æt",
    "train": f"t{ASP}ɹeɪn",
    "station": "steɪʃən",
}

# word -> accented form per accent; unlisted words are read without changes.
RUS: dict[str, str] = {
    "please": f"p{ASP}li{LONG}s",
    "these": f"ði{LONG}s",
    "things": "θɪŋs",
    "peas": f"p{ASP}i{LONG}s",
    "slabs": "slæbs",
    "spoons": f"spu{LONG}ns",
    "bags": "bæɡs",
    "kids": f"k{ASP}ɪds",
    "her": "xɝ",
    "bring": "brɪŋ",
    "fresh": "frɛʃ",
    "we": f"vi{LONG}",
    "with": "vɪθ",
    "to": f"t{DENTAL}u{LONG}",
    "into": f"ɪnt{DENTAL}u{LONG}",
    "need": f"n{PAL}i{LONG}d",
    "meet": f"m{PAL}i{LONG}t",
    "stella": "stelə",
    "wednesday": "wenzdeɪ",
    "ask": "ʔæsk",
}

DEU: dict[str, str] = {
    "spoons": f"sbu{LONG}nz",
    "plastic": "blæstɪk",
    "scoop": f"sxu{LONG}p",
    "go": "ɣoʊ",
    "call": f"k{LAB}ɑ{LONG}l{VEL}",
    "can": f"k{LAB}æn",
    "ask": f"æ{LOWERED}sk",
    "snack": f"snæ{LOWERED}k",
    "store": f"sto{LONG}ɹ",
    "stella": "stɛləɹ",
    "a": "əɹ",
    "six": "θɪks",
    "small": f"θmɔ{LONG}l",
}

HIN: dict[str, str] = {
    "thick": "tɪk",
    "three": f"tɹi{LONG}",
    "things": "tɪŋz",
    "these": f"d{DENTAL}i{LONG}z",
    "train": f"ʈɹeɪn",
    "toy": "ʈɔɪ",
    "red": "lɛd",
    "frog": f"flɑ{LONG}ɡ",
    "she": f"si{LONG}",
    "station": "steɪsən",
    "bob": f"ɓɑ{LONG}b",
    "blue": f"ɓlu{LONG}",
    "peas": f"p{ASP}ɪz",
    "cheese": f"t{TIE}ʃɪz",
    "six": "sɪkɪs",
    "spoons": f"səpu{LONG}nz",
    "her": "ɝ",
    "ask": "æs",
    "store": f"tɔ{LONG}ɹ",
}

ACCENTS = [("rus", "rus_001", RUS), ("deu", "deu_001", DEU), ("hin", "hin_001", HIN)]

# Rules a reduced-inventory corpus cannot express (diacritic- or
# inventory-dependent); the shipped fixture must lose exactly these.
REDUCED_LOST = {
    "stop → fricative",
    "palatalization",
    "retroflexing",
    "stop → implosive",
    "labialization",
    "vowel raising",
    "vowel lowering",
}

MINI_DICT: dict[str, str] = {
    # paragraph words
    "please": "P L IY1 Z", "call": "K AO1 L", "stella": "S T EH1 L AH0",
    "ask": "AE1 S K", "her": "HH ER0", "to": "T UW1", "bring": "B R IH1 NG",
    "these": "DH IY1 Z", "things": "TH IH1 NG Z", "with": "W IH1 DH",
    "from": "F R AH1 M", "the": "DH AH0", "store": "S T AO1 R",
    "spoons": "S P UW1 N Z", "of": "AH1 V", "fresh": "F R EH1 SH",
    "snow": "S N OW1", "peas": "P IY1 Z", "five": "F AY1 V",
    "thick": "TH IH1 K", "slabs": "S L AE1 B Z", "blue": "B L UW1",
    "cheese": "CH IY1 Z", "and": "AH0 N D", "maybe": "M EY1 B IY0",
    "a": "AH0", "snack": "S N AE1 K", "for": "F AO1 R",
    "brother": "B R AH1 DH ER0", "bob": "B AA1 B", "we": "W IY1",
    "also": "AO1 L S OW0", "need": "N IY1 D", "small": "S M AO1 L",
    "plastic": "P L AE1 S T IH0 K", "snake": "S N EY1 K", "big": "B IH1 G",
    "toy": "T OY1", "frog": "F R AA1 G", "kids": "K IH1 D Z",
    "she": "SH IY1", "can": "K AE1 N", "scoop": "S K UW1 P",
    "into": "IH0 N T UW1", "three": "TH R IY1", "red": "R EH1 D",
    "bags": "B AE1 G Z", "will": "W IH1 L", "go": "G OW1",
    "meet": "M IY1 T", "wednesday": "W EH1 N Z D EY2", "at": "AE1 T",
    "train": "T R EY1 N", "station": "S T EY1 SH AH0 N",
    # more plural / z-final words
    "dogs": "D AO1 G Z", "bees": "B IY1 Z", "trees": "T R IY1 Z",
    "keys": "K IY1 Z", "boys": "B OY1 Z", "toys": "T OY1 Z",
    "cars": "K AA1 R Z", "stars": "S T AA1 R Z", "doors": "D AO1 R Z",
    "bears": "B EH1 R Z", "pears": "P EH1 R Z", "beds": "B EH1 D Z",
    "heads": "HH EH1 D Z", "hands": "HH AE1 N D Z", "bands": "B AE1 N D Z",
    "lands": "L AE1 N D Z", "sounds": "S AW1 N D Z", "words": "W ER1 D Z",
    "birds": "B ER1 D Z", "cards": "K AA1 R D Z", "yards": "Y AA1 R D Z",
    "roads": "R OW1 D Z", "codes": "K OW1 D Z", "rings": "R IH1 NG Z",
    "songs": "S AO1 NG Z", "kings": "K IH1 NG Z", "wings": "W IH1 NG Z",
    "legs": "L EH1 G Z", "eggs": "EH1 G Z", "pigs": "P IH1 G Z",
    "bugs": "B AH1 G Z", "rugs": "R AH1 G Z", "jobs": "JH AA1 B Z",
    "webs": "W EH1 B Z", "ribs": "R IH1 B Z", "tubs": "T AH1 B Z",
    "cabs": "K AE1 B Z", "labs": "L AE1 B Z", "crabs": "K R AE1 B Z",
    "knobs": "N AA1 B Z", "clubs": "K L AH1 B Z", "gloves": "G L AH1 V Z",
    "waves": "W EY1 V Z", "caves": "K EY1 V Z", "leaves": "L IY1 V Z",
    "knives": "N AY1 V Z", "wolves": "W UH1 L V Z", "shelves": "SH EH1 L V Z",
    "loves": "L AH1 V Z", "moves": "M UW1 V Z", "rooms": "R UW1 M Z",
    "teams": "T IY1 M Z", "dreams": "D R IY1 M Z", "names": "N EY1 M Z",
    "games": "G EY1 M Z", "times": "T AY1 M Z", "homes": "HH OW1 M Z",
    "bones": "B OW1 N Z", "stones": "S T OW1 N Z", "phones": "F OW1 N Z",
    "planes": "P L EY1 N Z", "trains": "T R EY1 N Z", "brains": "B R EY1 N Z",
    "chains": "CH EY1 N Z", "coins": "K OY1 N Z", "lines": "L AY1 N Z",
    "pens": "P EH1 N Z", "pans": "P AE1 N Z", "cans": "K AE1 N Z",
    "vans": "V AE1 N Z", "fans": "F AE1 N Z", "tens": "T EH1 N Z",
    "hens": "HH EH1 N Z", "lens": "L EH1 N Z", "barns": "B AA1 R N Z",
    "towns": "T AW1 N Z", "crowns": "K R AW1 N Z", "clowns": "K L AW1 N Z",
    "moons": "M UW1 N Z", "tunes": "T UW1 N Z", "queens": "K W IY1 N Z",
    "jeans": "JH IY1 N Z", "beans": "B IY1 N Z", "greens": "G R IY1 N Z",
    "screens": "S K R IY1 N Z", "breeze": "B R IY1 Z", "freeze": "F R IY1 Z",
    "sneeze": "S N IY1 Z", "cheers": "CH IH1 R Z", "years": "Y IH1 R Z",
    "ears": "IH1 R Z", "stairs": "S T EH1 R Z", "chairs": "CH EH1 R Z",
    "those": "DH OW1 Z", "does": "D AH1 Z", "goes": "G OW1 Z",
    "knows": "N OW1 Z", "shows": "SH OW1 Z", "grows": "G R OW1 Z",
    # non-sibilant-final words
    "milk": "M IH1 L K", "hello": "HH AH0 L OW1", "world": "W ER1 L D",
    "water": "W AO1 T ER0", "fire": "F AY1 ER0", "earth": "ER1 TH",
    "wind": "W IH1 N D", "light": "L AY1 T", "dark": "D AA1 R K",
    "book": "B UH1 K", "table": "T EY1 B AH0 L", "chair": "CH EH1 R",
    "door": "D AO1 R", "window": "W IH1 N D OW0", "floor": "F L AO1 R",
    "wall": "W AO1 L", "roof": "R UW1 F", "green": "G R IY1 N",
    "black": "B L AE1 K", "white": "W AY1 T", "brown": "B R AW1 N",
    "yellow": "Y EH1 L OW0", "purple": "P ER1 P AH0 L",
    "apple": "AE1 P AH0 L", "bread": "B R EH1 D", "butter": "B AH1 T ER0",
    "sugar": "SH UH1 G ER0", "salt": "S AO1 L T", "pepper": "P EH1 P ER0",
    "dinner": "D IH1 N ER0", "morning": "M AO1 R N IH0 NG",
    "evening": "IY1 V N IH0 NG", "night": "N AY1 T", "day": "D EY1",
    "week": "W IY1 K", "month": "M AH1 N TH", "year": "Y IH1 R",
    "spring": "S P R IH1 NG", "summer": "S AH1 M ER0",
    "winter": "W IH1 N T ER0", "autumn": "AO1 T AH0 M",
    "river": "R IH1 V ER0", "mountain": "M AW1 N T AH0 N",
    "valley": "V AE1 L IY0", "forest": "F AO1 R AH0 S T",
    "field": "F IY1 L D", "garden": "G AA1 R D AH0 N",
    "flower": "F L AW1 ER0", "cloud": "K L AW1 D", "rain": "R EY1 N",
    "thunder": "TH AH1 N D ER0", "storm": "S T AO1 R M",
    "happy": "HH AE1 P IY0", "angry": "AE1 NG G R IY0",
    "quiet": "K W AY1 AH0 T", "loud": "L AW1 D", "fast": "F AE1 S T",
    "slow": "S L OW1", "hot": "HH AA1 T", "cold": "K OW1 L D",
    "warm": "W AO1 R M", "cool": "K UW1 L", "old": "OW1 L D",
    "new": "N UW1", "young": "Y AH1 NG", "tall": "T AO1 L",
    "long": "L AO1 NG", "deep": "D IY1 P", "high": "HH AY1",
    "low": "L OW1", "near": "N IH1 R", "far": "F AA1 R",
    "left": "L EH1 F T", "right": "R AY1 T", "front": "F R AH1 N T",
    "back": "B AE1 K", "open": "OW1 P AH0 N", "start": "S T AA1 R T",
    "begin": "B IH0 G IH1 N", "end": "EH1 N D", "walk": "W AO1 K",
    "run": "R AH1 N", "jump": "JH AH1 M P", "swim": "S W IH1 M",
    "fly": "F L AY1", "drive": "D R AY1 V", "ride": "R AY1 D",
    "sing": "S IH1 NG", "play": "P L EY1",
    "work": "W ER1 K", "sleep": "S L IY1 P", "dream": "D R IY1 M",
    "think": "TH IH1 NG K", "know": "N OW1", "learn": "L ER1 N",
    "teach": "T IY1 CH", "read": "R IY1 D", "write": "R AY1 T",
    "speak": "S P IY1 K", "listen": "L IH1 S AH0 N", "hear": "HH IH1 R",
    "look": "L UH1 K", "watch": "W AA1 CH", "find": "F AY1 N D",
    "keep": "K IY1 P", "give": "G IH1 V", "take": "T EY1 K",
}


def build_pairs() -> str:
    lines = ["# speaker_id\taccent_tag\tword\tgae_ipa\taccented_ipa"]
    for tag, speaker, changes in ACCENTS:
        for word in PARAGRAPH:
            gae = GAE[word]
            accented = changes.get(word, gae)
            lines.append(f"{speaker}\t{tag}\t{word}\t{gae}\t{accented}")
    return "\n".join(lines) + "\n"


def build_mini_dict() -> str:
    paragraph = set(PARAGRAPH)
    keep = [w for w in sorted(MINI_DICT) if w in paragraph or MINI_DICT[w].endswith("Z")]
    fill = [w for w in sorted(MINI_DICT) if w not in keep]
    selected = sorted((keep + fill)[:200])
    lines = [
        ";;; 200-word fixture dictionary (CMU format). No entry ends in an",
        ";;; s-like sound so the word-final z -> s toy accent stays invertible.",
    ]
    for word in selected:
        lines.append(f"{word.upper()}  {MINI_DICT[word]}")
    return "\n".join(lines) + "\n"


def verify(reduction_text: str, features_text: str, pairs_text: str, dict_text: str) -> None:
    rmap = load_reduction_map(reduction_text)
    features = load_features(features_text)
    assert len(rmap.inventory) == 39, len(rmap.inventory)
    assert len(set(ARPABET_TO_IPA.values())) == 39

    entries, diags = parse_cmudict(dict_text.splitlines())
    assert not diags, diags
    assert len(entries) == 200, len(entries)
    assert all(render([e.pron[-1]]) != "s" for e in entries), "s-final entry breaks toy invertibility"
    z_final = sum(1 for e in entries if render([e.pron[-1]]) == "z")
    print(f"mini dict: {len(entries)} entries, {z_final} z-final")
    for e in entries:
        for p in e.pron:
            assert p in rmap.inventory, (e.word, p.text)

    rows = []
    for raw in pairs_text.splitlines():
        if raw.startswith("#") or not raw.strip():
            continue
        speaker, tag, word, gae_text, acc_text = raw.split("\t")
        rows.append((word, tokenize(gae_text), tokenize(acc_text)))
    assert len(rows) == 69 * 3, len(rows)

    full_pairs = [(gae, acc) for _, gae, acc in rows]
    simp_pairs = [(simplify(gae, rmap), simplify(acc, rmap)) for gae, acc in full_pairs]

    full_report = detect(accumulate(full_pairs), features, min_evidence=2)
    simp_report = detect(accumulate(simp_pairs), features, min_evidence=2)
    full_set = set(full_report.detected_names())
    simp_set = set(simp_report.detected_names())
    print(f"full: {len(full_set)}/20, simplified: {len(simp_set)}/20")
    for name, f, s in compare_inventories(full_report, simp_report):
        print(f"  {name:<30} {'F' if f else '.'} {'S' if s else '.'}")
    assert full_set == set(RULE_NAMES), sorted(set(RULE_NAMES) - full_set)
    assert simp_set == set(RULE_NAMES) - REDUCED_LOST, (
        sorted(simp_set ^ (set(RULE_NAMES) - REDUCED_LOST))
    )

    rng = random.Random(1)
    for _ in range(200):
        sample = rng.sample(range(len(full_pairs)), rng.randint(1, len(full_pairs)))
        sub_full = detect(accumulate([full_pairs[i] for i in sample]), features, 2)
        sub_simp = detect(accumulate([simp_pairs[i] for i in sample]), features, 2)
        assert set(sub_simp.detected_names()) <= set(sub_full.detected_names())
    print("subset property holds on 200 random sub-corpora")


def main() -> None:
    reduction_text = build_reduction_map()
    features_text = build_features()
    pairs_text = build_pairs()
    dict_text = build_mini_dict()
    verify(reduction_text, features_text, pairs_text, dict_text)

    (DATA / "fixtures").mkdir(parents=True, exist_ok=True)
    (DATA / "reduction_map.txt").write_text(reduction_text, encoding="utf-8")
    (DATA / "phone_features.tsv").write_text(features_text, encoding="utf-8")
    (DATA / "fixtures" / "pairs_3accents.tsv").write_text(pairs_text, encoding="utf-8")
    (DATA / "fixtures" / "mini.dict").write_text(dict_text, encoding="utf-8")
    print("wrote data assets")


if __name__ == "__main__":
    main()
