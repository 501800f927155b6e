"""Detection of named phonological generalizations from change statistics.

Twenty rule predicates classify the replacements, deletions, and insertions
of a statistics table using a phone feature database. Each predicate
formalizes the standard phonological meaning of its rule name; the fixtures
in tests/ document them change by change. A rule counts as detected when the
total count of matching changes reaches the evidence threshold.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from .errors import MissingFeaturesError
from .phones import Phone, PhoneSeq, render, tokenize
from .stats import StatsTable

HEIGHT_LADDER = ("high", "near-high", "mid-high", "mid", "mid-low", "near-low", "low")

PLACE_LADDER = (
    "bilabial",
    "labiodental",
    "dental",
    "alveolar",
    "postalveolar",
    "retroflex",
    "palatal",
    "velar",
    "uvular",
    "pharyngeal",
    "glottal",
)

OBSTRUENT_MANNERS = frozenset({"stop", "fricative", "affricate"})

# Tense/long vowels and their lax/short counterparts.
LAX_COUNTERPART = {"i": "ɪ", "u": "ʊ", "e": "ɛ", "o": "ɔ"}

PALATAL_MARK = "ʲ"  # superscript j
LABIAL_MARK = "ʷ"  # superscript w
DENTAL_MARK = "̪"  # combining bridge below
LENGTH_MARKS = frozenset({"ː", "ˑ"})


@dataclass(frozen=True)
class PhoneFeatures:
    phone: Phone
    category: str  # consonant | vowel
    voicing: str | None = None
    manner: str | None = None
    place: str | None = None
    height: str | None = None
    backness: str | None = None
    length: str | None = None

    @property
    def is_consonant(self) -> bool:
        return self.category == "consonant"

    @property
    def is_vowel(self) -> bool:
        return self.category == "vowel"

    @property
    def is_obstruent(self) -> bool:
        return self.is_consonant and self.manner in OBSTRUENT_MANNERS

    def height_index(self) -> int | None:
        if self.height in HEIGHT_LADDER:
            return HEIGHT_LADDER.index(self.height)
        return None


class FeatureTable:
    def __init__(self, entries: dict[Phone, PhoneFeatures]):
        self._entries = entries

    def get(self, phone: Phone) -> PhoneFeatures:
        features = self._entries.get(phone)
        if features is None:
            raise MissingFeaturesError(phone.text)
        return features

    def __contains__(self, phone: Phone) -> bool:
        return phone in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def load_features(source: str | Path) -> FeatureTable:
    """Parse the phone feature file: one
    `phone<TAB>category<TAB>voicing<TAB>manner<TAB>place<TAB>height<TAB>backness<TAB>length`
    row per phone, `-` for fields that do not apply, `#` comments."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source
    entries: dict[Phone, PhoneFeatures] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 8:
            raise ValueError(f"line {line_no}: expected 8 tab-separated fields")
        seq = tokenize(fields[0])
        if len(seq) != 1:
            raise ValueError(f"line {line_no}: {fields[0]!r} is not one phone")
        values = [None if f == "-" else f for f in fields[1:]]
        entries[seq[0]] = PhoneFeatures(seq[0], fields[1], *values[1:])
    return FeatureTable(entries)


def default_features_path() -> Path:
    return Path(__file__).parent / "data" / "phone_features.tsv"


def load_default_features() -> FeatureTable:
    return load_features(default_features_path())


# change streams -------------------------------------------------------------

ReplacementChange = tuple[PhoneSeq, PhoneSeq, bool, int]  # src, dst, word_final, count
DeletionChange = tuple[PhoneSeq, Phone | None, Phone | None, int]  # src, left, right, count
InsertionChange = tuple[PhoneSeq, int]  # inserted seq, count


def iter_replacements(table: StatsTable) -> Iterator[ReplacementChange]:
    if table.replacement_events:
        for (src, dst, final), count in table.replacement_events.items():
            yield src, dst, final, count
    else:
        # Tables deserialized without event context: position-free fallback.
        for phone, stats in table.per_sound.items():
            for dst, count in stats.replacements.items():
                yield (phone,), dst, False, count


def iter_deletions(table: StatsTable) -> Iterator[DeletionChange]:
    if table.deletion_events:
        for (src, left, right), count in table.deletion_events.items():
            yield src, left, right, count
    else:
        for phone, stats in table.per_sound.items():
            if stats.deletions:
                yield (phone,), None, None, stats.deletions


def iter_insertions(table: StatsTable) -> Iterator[InsertionChange]:
    for stats in table.per_sound.values():
        for counter in (stats.insertions_before, stats.insertions_after):
            for seq, count in counter.items():
                yield seq, count


def _table_phones(table: StatsTable) -> set[Phone]:
    phones: set[Phone] = set(table.per_sound)
    for stats in table.per_sound.values():
        for counter in (stats.replacements, stats.insertions_before, stats.insertions_after):
            for seq in counter:
                phones.update(seq)
    for src, dst, _, _ in iter_replacements(table):
        phones.update(src)
        phones.update(dst)
    for src, left, right, _ in iter_deletions(table):
        phones.update(src)
        if left:
            phones.add(left)
        if right:
            phones.add(right)
    return phones


# rule predicates ------------------------------------------------------------


def _single(seq: PhoneSeq) -> Phone | None:
    return seq[0] if len(seq) == 1 else None


def _place_near(a: PhoneFeatures, b: PhoneFeatures) -> bool:
    if a.place in PLACE_LADDER and b.place in PLACE_LADDER:
        return abs(PLACE_LADDER.index(a.place) - PLACE_LADDER.index(b.place)) <= 1
    return a.place == b.place


class RuleContext:
    def __init__(self, table: StatsTable, features: FeatureTable):
        self.replacements = list(iter_replacements(table))
        self.deletions = list(iter_deletions(table))
        self.insertions = list(iter_insertions(table))
        self.feat = features.get


Evidence = list[tuple[str, int]]


def _replacement_rule(
    ctx: RuleContext,
    matches: Callable[[Phone, PhoneFeatures, Phone, PhoneFeatures], bool],
    final_only: bool = False,
) -> Evidence:
    evidence: Evidence = []
    for src_seq, dst_seq, final, count in ctx.replacements:
        if final_only and not final:
            continue
        src = _single(src_seq)
        dst = _single(dst_seq)
        if src is None or dst is None:
            continue
        if matches(src, ctx.feat(src), dst, ctx.feat(dst)):
            label = f"{render(src_seq)}→{render(dst_seq)}"
            if final_only:
                label += " (word-final)"
            evidence.append((label, count))
    return evidence


def _rule_final_obstruent_devoicing(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return (
            fs.is_obstruent
            and fs.voicing == "voiced"
            and fd.voicing == "voiceless"
            and fs.manner == fd.manner
            and fs.place == fd.place
        )

    return _replacement_rule(ctx, matches, final_only=True)


def _rule_consonant_voicing(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return (
            fs.is_consonant
            and fd.is_consonant
            and fs.voicing == "voiceless"
            and fd.voicing == "voiced"
            and fs.manner == fd.manner
            and fs.place == fd.place
        )

    return _replacement_rule(ctx, matches)


def _rule_stop_fricative(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return fs.manner == "stop" and fd.manner == "fricative" and _place_near(fs, fd)

    return _replacement_rule(ctx, matches)


def _rule_interdental_fricative_change(ctx: RuleContext) -> Evidence:
    targets = frozenset("tdszfv")

    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return src.base in ("θ", "ð") and dst.base in targets

    return _replacement_rule(ctx, matches)


def _rule_palatalization(ctx: RuleContext) -> Evidence:
    palatal_places = ("palatal", "postalveolar")

    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        if PALATAL_MARK in dst.modifiers and PALATAL_MARK not in src.modifiers:
            return True
        return (
            fs.is_consonant
            and fd.is_consonant
            and fs.place not in palatal_places
            and fd.place in palatal_places
        )

    return _replacement_rule(ctx, matches)


def _rule_retroflexing(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return fs.is_consonant and fs.place != "retroflex" and fd.place == "retroflex"

    return _replacement_rule(ctx, matches)


def _rule_alveolar_approximant_change(ctx: RuleContext) -> Evidence:
    targets = frozenset({"r", "ɾ", "ʀ", "l", "w"})

    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return src.base == "ɹ" and dst.base in targets

    return _replacement_rule(ctx, matches)


def _rule_w_fricative(ctx: RuleContext) -> Evidence:
    targets = frozenset({"v", "f", "β"})

    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return src.base == "w" and dst.base in targets

    return _replacement_rule(ctx, matches)


def _rule_dentalization(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        if DENTAL_MARK in dst.modifiers and DENTAL_MARK not in src.modifiers:
            return True
        return fs.place == "alveolar" and fd.place == "dental"

    return _replacement_rule(ctx, matches)


def _rule_h_velar_fricative(ctx: RuleContext) -> Evidence:
    # x/χ/ɣ directly; k is the closed-inventory image of a velar fricative
    # after reduction to the 39-sound set, which keeps the velar place while
    # losing frication.
    targets = frozenset({"x", "χ", "ɣ", "k"})

    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return src.base == "h" and dst.base in targets

    return _replacement_rule(ctx, matches)


def _rule_sh_s(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return (src.base == "ʃ" and dst.base == "s") or (src.base == "ʒ" and dst.base == "z")

    return _replacement_rule(ctx, matches)


def _rule_stop_implosive(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return fs.manner == "stop" and fd.manner == "implosive" and fs.place == fd.place

    return _replacement_rule(ctx, matches)


def _rule_labialization(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        return LABIAL_MARK in dst.modifiers and LABIAL_MARK not in src.modifiers

    return _replacement_rule(ctx, matches)


def _rule_vowel_raising(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        hs, hd = fs.height_index(), fd.height_index()
        return fs.is_vowel and fd.is_vowel and hs is not None and hd is not None and hd < hs

    return _replacement_rule(ctx, matches)


def _rule_vowel_shortening(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        if not (fs.is_vowel and fd.is_vowel):
            return False
        if any(m in LENGTH_MARKS for m in src.modifiers):
            stripped = tuple(m for m in src.modifiers if m not in LENGTH_MARKS)
            if dst == Phone(src.base, stripped):
                return True
        return (
            fs.length == "long"
            and fd.length == "short"
            and dst.base in (src.base, LAX_COUNTERPART.get(src.base))
        )

    return _replacement_rule(ctx, matches)


def _rule_vowel_lowering(ctx: RuleContext) -> Evidence:
    def matches(src: Phone, fs: PhoneFeatures, dst: Phone, fd: PhoneFeatures) -> bool:
        hs, hd = fs.height_index(), fd.height_index()
        return fs.is_vowel and fd.is_vowel and hs is not None and hd is not None and hd > hs

    return _replacement_rule(ctx, matches)


def _insertion_rule(ctx: RuleContext, category: str) -> Evidence:
    evidence: Evidence = []
    for seq, count in ctx.insertions:
        if seq and all(ctx.feat(p).category == category for p in seq):
            evidence.append((f"∅→{render(seq)}", count))
    return evidence


def _rule_vowel_insertion(ctx: RuleContext) -> Evidence:
    return _insertion_rule(ctx, "vowel")


def _rule_consonant_deletion(ctx: RuleContext) -> Evidence:
    evidence: Evidence = []
    for src, _, _, count in ctx.deletions:
        phone = _single(src)
        if phone is not None and ctx.feat(phone).is_consonant:
            evidence.append((f"{render(src)}→∅", count))
    return evidence


def _rule_cluster_reduction(ctx: RuleContext) -> Evidence:
    def is_consonant(phone: Phone | None) -> bool:
        return phone is not None and ctx.feat(phone).is_consonant

    evidence: Evidence = []
    for src, left, right, count in ctx.deletions:
        if len(src) >= 2 and all(ctx.feat(p).is_consonant for p in src):
            evidence.append((f"{render(src)}→∅", count))
        elif len(src) == 1 and ctx.feat(src[0]).is_consonant and (is_consonant(left) or is_consonant(right)):
            evidence.append((f"{render(src)}→∅ (in cluster)", count))
    return evidence


def _rule_consonant_insertion(ctx: RuleContext) -> Evidence:
    return _insertion_rule(ctx, "consonant")


# Canonical rule order, matching the two-column comparison layout.
RULES: tuple[tuple[str, Callable[[RuleContext], Evidence]], ...] = (
    ("final obstruent devoicing", _rule_final_obstruent_devoicing),
    ("consonant voicing", _rule_consonant_voicing),
    ("stop → fricative", _rule_stop_fricative),
    ("interdental fricative change", _rule_interdental_fricative_change),
    ("palatalization", _rule_palatalization),
    ("retroflexing", _rule_retroflexing),
    ("alveolar approximant change", _rule_alveolar_approximant_change),
    ("w → fricative", _rule_w_fricative),
    ("dentalization", _rule_dentalization),
    ("h → velar fricative", _rule_h_velar_fricative),
    ("sh → s", _rule_sh_s),
    ("stop → implosive", _rule_stop_implosive),
    ("labialization", _rule_labialization),
    ("vowel raising", _rule_vowel_raising),
    ("vowel shortening", _rule_vowel_shortening),
    ("vowel lowering", _rule_vowel_lowering),
    ("vowel insertion", _rule_vowel_insertion),
    ("consonant deletion", _rule_consonant_deletion),
    ("cluster reduction", _rule_cluster_reduction),
    ("consonant insertion", _rule_consonant_insertion),
)

RULE_NAMES: tuple[str, ...] = tuple(name for name, _ in RULES)


@dataclass(frozen=True)
class RuleResult:
    detected: bool
    evidence: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class GeneralizationReport:
    rules: dict[str, RuleResult]
    min_evidence: int

    def detected_names(self) -> list[str]:
        return [name for name in RULE_NAMES if self.rules[name].detected]


def detect(table: StatsTable, features: FeatureTable, min_evidence: int = 2) -> GeneralizationReport:
    """Evaluate all rule predicates against a statistics table.

    A rule is detected when its matching changes total at least min_evidence
    occurrences. Raises MissingFeaturesError if the database lacks any phone
    the table mentions.
    """
    if min_evidence < 1:
        raise ValueError("min_evidence must be >= 1")
    for phone in sorted(_table_phones(table), key=lambda p: p.text):
        features.get(phone)
    ctx = RuleContext(table, features)
    results: dict[str, RuleResult] = {}
    for name, rule in RULES:
        evidence = sorted(rule(ctx), key=lambda item: (item[0], item[1]))
        total = sum(count for _, count in evidence)
        results[name] = RuleResult(detected=total >= min_evidence, evidence=tuple(evidence))
    return GeneralizationReport(rules=results, min_evidence=min_evidence)


def report_to_dict(report: GeneralizationReport) -> dict:
    return {
        name: {
            "detected": result.detected,
            "evidence": [{"change": change, "count": count} for change, count in result.evidence],
        }
        for name, result in ((n, report.rules[n]) for n in RULE_NAMES)
    }


def dump_report(report: GeneralizationReport) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2)


def compare_inventories(
    report_full: GeneralizationReport,
    report_simplified: GeneralizationReport,
) -> list[tuple[str, bool, bool]]:
    """Two-column detected/not-detected table, full inventory vs simplified,
    in canonical rule order."""
    return [
        (name, report_full.rules[name].detected, report_simplified.rules[name].detected)
        for name in RULE_NAMES
    ]


def render_comparison(rows: list[tuple[str, bool, bool]]) -> str:
    width = max(len(name) for name, _, _ in rows)
    lines = [f"{'generalization':<{width}}  full  simplified"]
    for name, full, simplified in rows:
        lines.append(f"{name:<{width}}  {'✓' if full else '·'}     {'✓' if simplified else '·'}")
    return "\n".join(lines)
