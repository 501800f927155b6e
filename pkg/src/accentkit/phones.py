"""IPA phone sequences: tokenization, rendering, and inventory reduction.

A phone is one base symbol (or two bases joined by a tie bar, as in the
affricate t͡ʃ or the diphthong a͡ɪ) plus any attached modifier letters and
combining diacritics. Input text is normalized to NFD before tokenizing, so
precomposed and decomposed spellings of the same diacritic tokenize alike.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .errors import LeadingModifierError, UnknownSymbolError, UnmappedPhoneError

TIE_BARS = frozenset({"͡", "͜"})

# Modifier letters that mark prosody rather than segment quality. They never
# attach to a phone; encountering one is an input error at this layer.
_NON_ATTACHING = frozenset({
    "ˈ",  # primary stress
    "ˌ",  # secondary stress
    "˥", "˦", "˧", "˨", "˩",  # tone letters
    ".",
    "|",
    "‖",
})


def _is_base(ch: str) -> bool:
    cat = unicodedata.category(ch)
    return cat in ("Ll", "Lo", "Lu", "Lt")


def _is_modifier(ch: str) -> bool:
    if ch in _NON_ATTACHING or ch in TIE_BARS:
        return False
    if unicodedata.combining(ch):
        return True
    return unicodedata.category(ch) in ("Lm", "Sk")


@dataclass(frozen=True, slots=True)
class Phone:
    """One phone: base symbol(s) plus attached marks, in input order."""

    base: str
    modifiers: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.base or not _is_base(self.base[0]):
            raise ValueError(f"invalid phone base {self.base!r}")
        rest = self.base[1:]
        while rest:
            if len(rest) < 2 or rest[0] not in TIE_BARS or not _is_base(rest[1]):
                raise ValueError(f"invalid phone base {self.base!r}")
            rest = rest[2:]
        seen = set()
        for m in self.modifiers:
            if not _is_modifier(m):
                raise ValueError(f"invalid modifier {m!r} on {self.base!r}")
            if m in seen:
                raise ValueError(f"duplicate modifier {m!r} on {self.base!r}")
            seen.add(m)

    @property
    def text(self) -> str:
        return self.base + "".join(self.modifiers)

    def without_modifiers(self) -> "Phone":
        return Phone(self.base) if self.modifiers else self

    def __str__(self) -> str:
        return self.text


PhoneSeq = tuple[Phone, ...]

# Interning keeps large corpora cheap: a dictionary-scale parse repeats the
# same few dozen phones hundreds of thousands of times.
_PHONE_CACHE: dict[tuple[str, tuple[str, ...]], Phone] = {}
_PHONE_CACHE_LIMIT = 1 << 16


def _make_phone(base: str, modifiers: tuple[str, ...]) -> Phone:
    key = (base, modifiers)
    phone = _PHONE_CACHE.get(key)
    if phone is None:
        phone = Phone(base, modifiers)
        if len(_PHONE_CACHE) < _PHONE_CACHE_LIMIT:
            _PHONE_CACHE[key] = phone
    return phone


def tokenize(text: str) -> PhoneSeq:
    """Split an IPA string into phones.

    Each base symbol captures the modifier letters and combining marks that
    follow it; a tie bar directly after a base joins the next base into the
    same phone. Raises UnknownSymbolError for characters outside the IPA
    letter/modifier/combining repertoire (including stress and tone marks,
    which callers strip beforehand) and LeadingModifierError when a mark has
    no base to attach to.
    """
    text = unicodedata.normalize("NFD", text)
    phones: list[Phone] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if _is_base(ch):
            base = ch
            i += 1
            mods: list[str] = []
            while i < n:
                c = text[i]
                if c in TIE_BARS:
                    if mods or i + 1 >= n or not _is_base(text[i + 1]):
                        raise UnknownSymbolError(c, i)
                    base += c + text[i + 1]
                    i += 2
                elif _is_modifier(c):
                    if c in mods:
                        raise UnknownSymbolError(c, i)
                    mods.append(c)
                    i += 1
                else:
                    break
            phones.append(_make_phone(base, tuple(mods)))
        elif _is_modifier(ch) or ch in TIE_BARS:
            raise LeadingModifierError(i)
        else:
            raise UnknownSymbolError(ch, i)
    return tuple(phones)


@lru_cache(maxsize=4096)
def _phone_text(phone: Phone) -> str:
    return phone.text


def render(seq: Iterable[Phone]) -> str:
    """Concatenate phones back into an IPA string; inverse of tokenize."""
    return "".join(_phone_text(p) for p in seq)


@dataclass(frozen=True)
class ReductionMap:
    """Phone-level rewrite table onto a closed sound inventory.

    Phones already in the inventory pass through untouched; mapped phones are
    replaced by their (possibly empty, possibly multi-phone) targets. Targets
    are validated against the inventory at load time, which makes applying
    the map twice equal to applying it once.
    """

    entries: dict[Phone, PhoneSeq]
    inventory: frozenset[Phone]

    def __post_init__(self) -> None:
        for src, targets in self.entries.items():
            bad = [t for t in targets if t not in self.inventory]
            if bad:
                raise ValueError(
                    f"rule {render([src])!r} maps outside the inventory: "
                    + ", ".join(render([t]) for t in bad)
                )

    def covers(self, phone: Phone) -> bool:
        return phone in self.inventory or phone in self.entries


def simplify(seq: PhoneSeq, rmap: ReductionMap) -> PhoneSeq:
    """Rewrite a phone sequence into the map's inventory.

    Raises UnmappedPhoneError for phones outside both the map and the
    inventory; the caller decides whether to skip the word or abort.
    """
    out: list[Phone] = []
    for pos, phone in enumerate(seq):
        if phone in rmap.inventory:
            out.append(phone)
        elif phone in rmap.entries:
            out.extend(rmap.entries[phone])
        else:
            raise UnmappedPhoneError(render([phone]), pos)
    return tuple(out)


def load_reduction_map(source: str | Path) -> ReductionMap:
    """Parse a reduction map file.

    Format: UTF-8 text, one `source<TAB>targets` rule per line (targets may
    be empty), `#` comments and blank lines ignored, with one leading
    `!inventory <space-separated sounds>` line declaring the output set.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source
    inventory: frozenset[Phone] | None = None
    entries: dict[Phone, PhoneSeq] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip("\r\n")
        if not line.strip():
            continue
        if line.startswith("!inventory"):
            sounds = line[len("!inventory"):].split()
            inv: list[Phone] = []
            for s in sounds:
                seq = tokenize(s)
                if len(seq) != 1:
                    raise ValueError(f"line {line_no}: inventory item {s!r} is not one phone")
                inv.append(seq[0])
            inventory = frozenset(inv)
            continue
        if "\t" not in line:
            raise ValueError(f"line {line_no}: expected 'source<TAB>targets'")
        src_text, _, dst_text = line.partition("\t")
        src = tokenize(src_text.strip())
        if len(src) != 1:
            raise ValueError(f"line {line_no}: source {src_text!r} is not one phone")
        targets: list[Phone] = []
        for chunk in dst_text.split():
            targets.extend(tokenize(chunk))
        entries[src[0]] = tuple(targets)
    if inventory is None:
        raise ValueError("reduction map declares no !inventory line")
    return ReductionMap(entries=entries, inventory=inventory)


def default_reduction_map_path() -> Path:
    return Path(__file__).parent / "data" / "reduction_map.txt"


def load_default_reduction_map() -> ReductionMap:
    return load_reduction_map(default_reduction_map_path())
