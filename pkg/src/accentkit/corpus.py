"""Readers and writers for the external data formats.

Covers CMU-style pronouncing dictionaries (ARPABET with stress digits),
tab-separated accent pair files, the augmented-corpus TSV emitted by the
generator, and the seeded word-level train/val/test split.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import BadRatioError, UnknownArpabetSymbolError
from .generate import AugRecord
from .phones import PhoneSeq, render, tokenize

# The 39-sound ARPABET inventory. Affricates and diphthongs are joined with
# a tie bar so each sound is a single phone.
ARPABET_TO_IPA: dict[str, str] = {
    "AA": "ɑ",
    "AE": "æ",
    "AH": "ʌ",
    "AO": "ɔ",
    "AW": "a͡ʊ",
    "AY": "a͡ɪ",
    "B": "b",
    "CH": "t͡ʃ",
    "D": "d",
    "DH": "ð",
    "EH": "ɛ",
    "ER": "ɝ",
    "EY": "e͡ɪ",
    "F": "f",
    "G": "ɡ",
    "HH": "h",
    "IH": "ɪ",
    "IY": "i",
    "JH": "d͡ʒ",
    "K": "k",
    "L": "l",
    "M": "m",
    "N": "n",
    "NG": "ŋ",
    "OW": "o͡ʊ",
    "OY": "ɔ͡ɪ",
    "P": "p",
    "R": "ɹ",
    "S": "s",
    "SH": "ʃ",
    "T": "t",
    "TH": "θ",
    "UH": "ʊ",
    "UW": "u",
    "V": "v",
    "W": "w",
    "Y": "j",
    "Z": "z",
    "ZH": "ʒ",
}


@dataclass(frozen=True)
class DictEntry:
    word: str
    variant_index: int
    pron: PhoneSeq


@dataclass(frozen=True)
class AccentPair:
    word: str
    gae: PhoneSeq
    accented: PhoneSeq
    accent_tag: str
    speaker_id: str


@dataclass(frozen=True)
class Diagnostic:
    line_no: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line_no}: {self.message}"


def parse_cmudict(lines: Iterable[str]) -> tuple[list[DictEntry], list[Diagnostic]]:
    """Parse CMU dictionary format: `WORD  PH PH PH`, `;;;` comments,
    `WORD(1)` alternate pronunciations, stress digits on vowels.

    Malformed lines are reported with their line numbers and skipped.
    """
    entries: list[DictEntry] = []
    diagnostics: list[Diagnostic] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(";;;"):
            continue
        fields = line.split()
        if len(fields) < 2:
            diagnostics.append(Diagnostic(line_no, "expected a word and at least one symbol"))
            continue
        head = fields[0]
        variant_index = 0
        if head.endswith(")") and "(" in head:
            head, _, suffix = head.rstrip(")").rpartition("(")
            if not suffix.isdigit():
                diagnostics.append(Diagnostic(line_no, f"bad variant marker in {fields[0]!r}"))
                continue
            variant_index = int(suffix)
        phones = []
        try:
            for symbol in fields[1:]:
                bare = symbol.rstrip("012")
                ipa = ARPABET_TO_IPA.get(bare)
                if ipa is None:
                    raise UnknownArpabetSymbolError(line_no, symbol)
                phones.extend(tokenize(ipa))
        except UnknownArpabetSymbolError as exc:
            diagnostics.append(Diagnostic(line_no, str(exc)))
            continue
        entries.append(DictEntry(word=head.lower(), variant_index=variant_index, pron=tuple(phones)))
    return entries, diagnostics


def parse_pairs(lines: Iterable[str]) -> tuple[list[AccentPair], list[Diagnostic]]:
    """Parse an accent pair file: one
    `speaker_id<TAB>accent_tag<TAB>word<TAB>gae_ipa<TAB>accented_ipa`
    record per line. IPA fields are tokenized eagerly so format errors
    surface at load; bad lines are reported and skipped."""
    pairs: list[AccentPair] = []
    diagnostics: list[Diagnostic] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            diagnostics.append(Diagnostic(line_no, f"expected 5 tab-separated fields, got {len(fields)}"))
            continue
        speaker_id, accent_tag, word, gae_text, accented_text = fields
        try:
            gae = tokenize(gae_text)
            accented = tokenize(accented_text)
        except Exception as exc:
            diagnostics.append(Diagnostic(line_no, str(exc)))
            continue
        pairs.append(
            AccentPair(word=word, gae=gae, accented=accented, accent_tag=accent_tag, speaker_id=speaker_id)
        )
    return pairs, diagnostics


def write_pairs(pairs: Iterable[AccentPair], fh: IO[str]) -> None:
    for p in pairs:
        fh.write(f"{p.speaker_id}\t{p.accent_tag}\t{p.word}\t{render(p.gae)}\t{render(p.accented)}\n")


def group_by_accent(pairs: Iterable[AccentPair]) -> dict[str, list[AccentPair]]:
    groups: dict[str, list[AccentPair]] = {}
    for pair in pairs:
        groups.setdefault(pair.accent_tag, []).append(pair)
    return groups


def write_augmented(records: Iterable[AugRecord], fh: IO[str]) -> int:
    """Write generator output as `accented<TAB>canonical<TAB>word<TAB>accent_tag`
    lines; returns the record count."""
    count = 0
    for rec in records:
        fh.write(f"{render(rec.accented)}\t{render(rec.canonical)}\t{rec.word}\t{rec.accent_tag}\n")
        count += 1
    return count


def read_augmented(lines: Iterable[str]) -> Iterator[AugRecord]:
    for raw in lines:
        line = raw.rstrip("\n")
        if not line:
            continue
        accented, canonical, word, accent_tag = line.split("\t")
        yield AugRecord(
            accented=tokenize(accented),
            canonical=tokenize(canonical),
            word=word,
            accent_tag=accent_tag,
        )


SPLIT_NAMES = ("train", "val", "test")


def parse_ratio(text: str) -> tuple[int, int, int]:
    parts = text.split("/")
    if len(parts) != 3:
        raise BadRatioError(f"expected A/B/C, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise BadRatioError(f"non-integer ratio part in {text!r}") from None
    return check_ratio((a, b, c))


def check_ratio(ratio: tuple[int, int, int]) -> tuple[int, int, int]:
    if any(p < 0 for p in ratio) or sum(ratio) != 100:
        raise BadRatioError(f"ratio parts must be non-negative and sum to 100, got {ratio}")
    return ratio


def assign_split(word: str, ratio: tuple[int, int, int], seed: int) -> str:
    """Deterministic split assignment from a seeded hash of the word, so every
    record of one word lands in the same split."""
    digest = hashlib.blake2s(f"{seed}:{word}".encode(), digest_size=4).digest()
    bucket = int.from_bytes(digest, "big") % 100
    if bucket < ratio[0]:
        return "train"
    if bucket < ratio[0] + ratio[1]:
        return "val"
    return "test"


def split_dataset(
    records: Iterable[AugRecord],
    ratio: tuple[int, int, int],
    seed: int,
) -> Iterator[tuple[str, AugRecord]]:
    """Single-pass split of an augmented-record stream, keyed on the
    orthographic word so canonical forms never leak across splits."""
    check_ratio(ratio)
    for rec in records:
        yield assign_split(rec.word, ratio, seed), rec


def verify_checksum(path, expected_sha256: str) -> bool:
    """Compare a file's SHA-256 digest against a published value, for
    validating a separately downloaded pronunciation dictionary."""
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest() == expected_sha256.lower()
