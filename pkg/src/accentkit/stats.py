"""Per-sound change statistics accumulated from aligned pronunciation pairs.

For every sound on the reference side the table keeps the four change
counters (deletions, replacements, insertions before, insertions after) plus
the total occurrence count. A merged replacement with a multi-phone source is
keyed on its first phone; the remaining source phones contribute occurrences
only, so each occurrence is changed at most once.

Positional context that the counters themselves cannot express (which changes
happened word-finally, what flanked a deletion) is kept in a separate event
section so rule detection can reason about word-final devoicing and cluster
reduction without polluting the per-sound schema.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .align import OpKind, align_merged
from .errors import AccentTagMismatchError, EmptyInputError
from .phones import Phone, PhoneSeq, render, tokenize


@dataclass
class SoundStats:
    occurrences: int = 0
    deletions: int = 0
    replacements: Counter[PhoneSeq] = field(default_factory=Counter)
    insertions_before: Counter[PhoneSeq] = field(default_factory=Counter)
    insertions_after: Counter[PhoneSeq] = field(default_factory=Counter)

    def changed(self) -> int:
        return self.deletions + sum(self.replacements.values())


# (src slice, dst slice, word_final) and (deleted slice, left, right neighbours)
ReplacementEvent = tuple[PhoneSeq, PhoneSeq, bool]
DeletionEvent = tuple[PhoneSeq, Phone | None, Phone | None]


@dataclass
class StatsTable:
    per_sound: dict[Phone, SoundStats] = field(default_factory=dict)
    accent_tag: str | None = None
    replacement_events: Counter[ReplacementEvent] = field(default_factory=Counter)
    deletion_events: Counter[DeletionEvent] = field(default_factory=Counter)

    def sound(self, phone: Phone) -> SoundStats:
        stats = self.per_sound.get(phone)
        if stats is None:
            stats = SoundStats()
            self.per_sound[phone] = stats
        return stats

    def total_replacement_ops(self) -> int:
        return sum(sum(s.replacements.values()) for s in self.per_sound.values())


def accumulate(
    pairs: Iterable[tuple[PhoneSeq, PhoneSeq]],
    accent_tag: str | None = None,
    on_error: Callable[[int, Exception], None] | None = None,
) -> StatsTable:
    """Align every (reference, accented) pair and tally the change counters.

    A pair that fails to align is skipped and reported through on_error; the
    batch never aborts.
    """
    table = StatsTable(accent_tag=accent_tag)
    for idx, (gae, accented) in enumerate(pairs):
        try:
            script = align_merged(gae, accented)
        except EmptyInputError as exc:
            if on_error is not None:
                on_error(idx, exc)
            continue
        consumed = 0  # reference phones consumed so far
        total = len(gae)
        for op in script.ops:
            if op.kind is OpKind.EQUAL:
                for p in op.src:
                    table.sound(p).occurrences += 1
                consumed += len(op.src)
            elif op.kind is OpKind.REPLACE:
                first = op.src[0]
                for p in op.src:
                    table.sound(p).occurrences += 1
                table.sound(first).replacements[op.dst] += 1
                word_final = consumed + len(op.src) == total
                table.replacement_events[(op.src, op.dst, word_final)] += 1
                consumed += len(op.src)
            elif op.kind is OpKind.DELETE:
                for p in op.src:
                    table.sound(p).occurrences += 1
                    table.sound(p).deletions += 1
                left = gae[consumed - 1] if consumed > 0 else None
                after = consumed + len(op.src)
                right = gae[after] if after < total else None
                table.deletion_events[(op.src, left, right)] += 1
                consumed += len(op.src)
            else:  # INSERT
                anchor = op.anchor
                assert anchor is not None
                target = table.sound(anchor.phone)
                if anchor.side == "before":
                    target.insertions_before[op.dst] += 1
                else:
                    target.insertions_after[op.dst] += 1
    return table


def merge(a: StatsTable, b: StatsTable) -> StatsTable:
    """Pointwise sum of two tables; accent tags must agree (or one be unset)."""
    if a.accent_tag and b.accent_tag and a.accent_tag != b.accent_tag:
        raise AccentTagMismatchError(f"{a.accent_tag!r} vs {b.accent_tag!r}")
    out = StatsTable(accent_tag=a.accent_tag or b.accent_tag)
    for src in (a, b):
        for phone, stats in src.per_sound.items():
            acc = out.sound(phone)
            acc.occurrences += stats.occurrences
            acc.deletions += stats.deletions
            acc.replacements.update(stats.replacements)
            acc.insertions_before.update(stats.insertions_before)
            acc.insertions_after.update(stats.insertions_after)
        out.replacement_events.update(src.replacement_events)
        out.deletion_events.update(src.deletion_events)
    return out


@dataclass(frozen=True)
class SoundProbs:
    keep: float
    delete: float
    replacements: tuple[tuple[PhoneSeq, float], ...]
    insertions_before: tuple[tuple[PhoneSeq, float], ...]
    insertions_after: tuple[tuple[PhoneSeq, float], ...]


@dataclass(frozen=True)
class ProbTable:
    per_sound: dict[Phone, SoundProbs]
    accent_tag: str | None = None

    def get(self, phone: Phone) -> SoundProbs:
        return self.per_sound.get(phone, _KEEP_ONLY)


_KEEP_ONLY = SoundProbs(keep=1.0, delete=0.0, replacements=(), insertions_before=(), insertions_after=())


def _ratio_entries(counts: Counter[PhoneSeq], n: int, min_count: int) -> tuple[tuple[PhoneSeq, float], ...]:
    kept = [(seq, c / n) for seq, c in counts.items() if c >= min_count]
    kept.sort(key=lambda item: render(item[0]))
    return tuple(kept)


def probabilities(table: StatsTable, min_count: int = 1) -> ProbTable:
    """Relative change frequencies per sound, dropping counts below min_count.

    Replacement and deletion are mutually exclusive per occurrence, so the
    keep probability is their complement; insertion probabilities are
    independent events and carry no keep mass.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    out: dict[Phone, SoundProbs] = {}
    for phone in sorted(table.per_sound, key=lambda p: p.text):
        stats = table.per_sound[phone]
        n = stats.occurrences
        if n == 0:
            out[phone] = _KEEP_ONLY
            continue
        delete = stats.deletions / n if stats.deletions >= min_count else 0.0
        repl = _ratio_entries(stats.replacements, n, min_count)
        out[phone] = SoundProbs(
            keep=1.0 - delete - sum(p for _, p in repl),
            delete=delete,
            replacements=repl,
            insertions_before=_ratio_entries(stats.insertions_before, n, min_count),
            insertions_after=_ratio_entries(stats.insertions_after, n, min_count),
        )
    return ProbTable(per_sound=out, accent_tag=table.accent_tag)


def _counter_to_json(counts: Counter[PhoneSeq]) -> dict[str, int]:
    return {render(seq): c for seq, c in sorted(counts.items(), key=lambda kv: render(kv[0]))}


def _counter_from_json(data: dict[str, int]) -> Counter[PhoneSeq]:
    return Counter({tokenize(k): v for k, v in data.items()})


def table_to_dict(table: StatsTable) -> dict:
    sounds = {}
    for phone in sorted(table.per_sound, key=lambda p: p.text):
        stats = table.per_sound[phone]
        sounds[phone.text] = {
            "occurrences": stats.occurrences,
            "deletions": stats.deletions,
            "replacements": _counter_to_json(stats.replacements),
            "insertions_before": _counter_to_json(stats.insertions_before),
            "insertions_after": _counter_to_json(stats.insertions_after),
        }
    events = {
        "replacements": [
            {"src": render(src), "dst": render(dst), "word_final": final, "count": c}
            for (src, dst, final), c in sorted(
                table.replacement_events.items(),
                key=lambda kv: (render(kv[0][0]), render(kv[0][1]), kv[0][2]),
            )
        ],
        "deletions": [
            {
                "src": render(src),
                "left": left.text if left else None,
                "right": right.text if right else None,
                "count": c,
            }
            for (src, left, right), c in sorted(
                table.deletion_events.items(),
                key=lambda kv: (
                    render(kv[0][0]),
                    kv[0][1].text if kv[0][1] else "",
                    kv[0][2].text if kv[0][2] else "",
                ),
            )
        ],
    }
    return {"accent_tag": table.accent_tag, "sounds": sounds, "events": events}


def table_from_dict(data: dict) -> StatsTable:
    table = StatsTable(accent_tag=data.get("accent_tag"))
    for phone_text, entry in data.get("sounds", {}).items():
        seq = tokenize(phone_text)
        if len(seq) != 1:
            raise ValueError(f"sound key {phone_text!r} is not one phone")
        stats = table.sound(seq[0])
        stats.occurrences = int(entry.get("occurrences", 0))
        stats.deletions = int(entry.get("deletions", 0))
        stats.replacements = _counter_from_json(entry.get("replacements", {}))
        stats.insertions_before = _counter_from_json(entry.get("insertions_before", {}))
        stats.insertions_after = _counter_from_json(entry.get("insertions_after", {}))
    events = data.get("events", {})
    for rec in events.get("replacements", []):
        key = (tokenize(rec["src"]), tokenize(rec["dst"]), bool(rec["word_final"]))
        table.replacement_events[key] += int(rec["count"])
    for rec in events.get("deletions", []):
        left = tokenize(rec["left"])[0] if rec.get("left") else None
        right = tokenize(rec["right"])[0] if rec.get("right") else None
        table.deletion_events[(tokenize(rec["src"]), left, right)] += int(rec["count"])
    return table


def dump_table(table: StatsTable) -> str:
    return json.dumps(table_to_dict(table), ensure_ascii=False, indent=2, sort_keys=False)


def load_table(text: str) -> StatsTable:
    return table_from_dict(json.loads(text))
