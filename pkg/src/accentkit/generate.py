"""Sampling accented variants of canonical pronunciations.

Each position of a word draws independently from the learned keep / delete /
replace distribution of its phone, with separate draws for insertions before
and after it. Sampling is reproducible: every word index gets its own PRNG
substream derived from the seed, so parallel and sequential runs emit the
same records.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .phones import Phone, PhoneSeq, render
from .stats import ProbTable, SoundProbs


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    variants_per_word: int = 10
    max_edits_per_word: int = 2
    min_count: int = 1
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.variants_per_word < 1 or self.max_edits_per_word < 1:
            raise ValueError("variants_per_word and max_edits_per_word must be positive")
        if self.scale < 0:
            raise ValueError("scale must be non-negative")


@dataclass(frozen=True)
class AugRecord:
    accented: PhoneSeq
    canonical: PhoneSeq
    word: str
    accent_tag: str


def _scale_group(entries: tuple[tuple[PhoneSeq, float], ...], factor: float) -> list[tuple[PhoneSeq, float]]:
    return [(seq, p * factor) for seq, p in entries]


def scale_probs(probs: ProbTable, scale: float) -> tuple[ProbTable, list[str]]:
    """Multiply all change probabilities by a factor, clamping each sound's
    delete-plus-replace mass (and each insertion group) back to 1 when the
    factor would push it over."""
    if scale == 1.0:
        return probs, []
    warnings: list[str] = []
    scaled: dict[Phone, SoundProbs] = {}
    for phone, entry in probs.per_sound.items():
        delete = entry.delete * scale
        repl = _scale_group(entry.replacements, scale)
        change_mass = delete + sum(p for _, p in repl)
        if change_mass > 1.0:
            factor = 1.0 / change_mass
            delete *= factor
            repl = [(seq, p * factor) for seq, p in repl]
            change_mass = 1.0
            warnings.append(f"change probabilities for {phone.text} clamped to 1")
        groups = []
        for name, group in (("before", entry.insertions_before), ("after", entry.insertions_after)):
            ins = _scale_group(group, scale)
            mass = sum(p for _, p in ins)
            if mass > 1.0:
                ins = [(seq, p / mass) for seq, p in ins]
                warnings.append(f"insertion-{name} probabilities for {phone.text} clamped to 1")
            groups.append(tuple(ins))
        scaled[phone] = SoundProbs(
            keep=1.0 - change_mass,
            delete=delete,
            replacements=tuple(repl),
            insertions_before=groups[0],
            insertions_after=groups[1],
        )
    return ProbTable(per_sound=scaled, accent_tag=probs.accent_tag), warnings


def _substream(seed: int, index: int) -> random.Random:
    digest = hashlib.blake2s(f"{seed}:{index}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


_DELETE = object()


class _Sampler:
    """Per-phone cumulative distributions, precomputed once per table."""

    def __init__(self, probs: ProbTable):
        self._table = probs
        self._by_phone: dict[Phone, tuple] = {}

    def _compiled(self, phone: Phone):
        compiled = self._by_phone.get(phone)
        if compiled is None:
            entry = self._table.get(phone)
            changes: list[tuple[float, object]] = []
            acc = 0.0
            for seq, p in entry.replacements:
                acc += p
                changes.append((acc, seq))
            if entry.delete > 0:
                acc += entry.delete
                changes.append((acc, _DELETE))
            compiled = (
                tuple(changes),
                self._cumulative(entry.insertions_before),
                self._cumulative(entry.insertions_after),
            )
            self._by_phone[phone] = compiled
        return compiled

    @staticmethod
    def _cumulative(entries: tuple[tuple[PhoneSeq, float], ...]) -> tuple[tuple[float, PhoneSeq], ...]:
        acc = 0.0
        out = []
        for seq, p in entries:
            acc += p
            out.append((acc, seq))
        return tuple(out)

    @staticmethod
    def _draw(rng: random.Random, cumulative: tuple) -> object | None:
        if not cumulative:
            return None
        u = rng.random()
        for threshold, value in cumulative:
            if u < threshold:
                return value
        return None

    def sample_variant(self, word: PhoneSeq, rng: random.Random, max_edits: int) -> PhoneSeq:
        out: list[Phone] = []
        edits = 0
        for phone in word:
            changes, ins_before, ins_after = self._compiled(phone)
            if edits < max_edits and ins_before:
                inserted = self._draw(rng, ins_before)
                if inserted is not None:
                    out.extend(inserted)
                    edits += 1
            if edits < max_edits and changes:
                change = self._draw(rng, changes)
                if change is _DELETE:
                    edits += 1
                elif change is not None:
                    out.extend(change)
                    edits += 1
                else:
                    out.append(phone)
            else:
                out.append(phone)
            if edits < max_edits and ins_after:
                inserted = self._draw(rng, ins_after)
                if inserted is not None:
                    out.extend(inserted)
                    edits += 1
        return tuple(out)


def generate_variants(
    word: PhoneSeq,
    probs: ProbTable,
    cfg: GenConfig,
    stream_index: int = 0,
) -> list[PhoneSeq]:
    """Draw up to variants_per_word accented forms of one word, deduplicated,
    in draw order. Phones absent from the table are kept unchanged."""
    probs, _ = scale_probs(probs, cfg.scale)
    sampler = _Sampler(probs)
    rng = _substream(cfg.seed, stream_index)
    seen: set[PhoneSeq] = set()
    out: list[PhoneSeq] = []
    for _ in range(cfg.variants_per_word):
        variant = sampler.sample_variant(word, rng, cfg.max_edits_per_word)
        if variant not in seen:
            seen.add(variant)
            out.append(variant)
    return out


def most_probable_variants(
    word: PhoneSeq,
    probs: ProbTable,
    k: int,
) -> list[tuple[PhoneSeq, float]]:
    """Exact ranking of all single-edit variants of a word.

    A variant's probability is its triggering change's probability times the
    keep probabilities of every untouched position; distinct edits yielding
    the same string pool their probability. Ties break on the rendered form.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    entries = [probs.get(p) for p in word]
    keeps = [e.keep for e in entries]
    total_keep = 1.0
    for v in keeps:
        total_keep *= v

    def keep_except(i: int) -> float:
        out = 1.0
        for j, v in enumerate(keeps):
            if j != i:
                out *= v
        return out

    ranked: dict[PhoneSeq, float] = {}

    def add(variant: PhoneSeq, p: float) -> None:
        if p > 0:
            ranked[variant] = ranked.get(variant, 0.0) + p

    for i, entry in enumerate(entries):
        others = keep_except(i)
        for seq, p in entry.replacements:
            add(word[:i] + seq + word[i + 1 :], p * others)
        if entry.delete > 0:
            add(word[:i] + word[i + 1 :], entry.delete * others)
        for seq, p in entry.insertions_before:
            add(word[:i] + seq + word[i:], p * total_keep)
        for seq, p in entry.insertions_after:
            add(word[: i + 1] + seq + word[i + 1 :], p * total_keep)

    order = sorted(ranked.items(), key=lambda kv: (-kv[1], render(kv[0])))
    return order[:k]


def augment_corpus(
    entries: Iterable[tuple[str, PhoneSeq]],
    probs: ProbTable,
    cfg: GenConfig,
) -> Iterator[AugRecord]:
    """Stream accented variants for every (word, pronunciation) entry.

    Memory use is independent of corpus size; the output is a pure function
    of (entries order, probs, cfg) because each word index seeds its own
    PRNG substream.
    """
    probs, _ = scale_probs(probs, cfg.scale)
    sampler = _Sampler(probs)
    tag = probs.accent_tag or ""
    for index, (word, pron) in enumerate(entries):
        rng = _substream(cfg.seed, index)
        seen: set[PhoneSeq] = set()
        for _ in range(cfg.variants_per_word):
            variant = sampler.sample_variant(pron, rng, cfg.max_edits_per_word)
            if variant in seen:
                continue
            seen.add(variant)
            yield AugRecord(accented=variant, canonical=pron, word=word, accent_tag=tag)


@dataclass
class _OpView:
    replacements: dict[PhoneSeq, float] = field(default_factory=dict)
    can_delete: bool = False
    ins_before: frozenset[PhoneSeq] = frozenset()
    ins_after: frozenset[PhoneSeq] = frozenset()


class _Explainer:
    def __init__(self, probs: ProbTable):
        self._table = probs
        self._views: dict[Phone, _OpView] = {}

    def _view(self, phone: Phone | None) -> _OpView:
        if phone is None:
            return _OpView()
        view = self._views.get(phone)
        if view is None:
            entry = self._table.get(phone)
            view = _OpView(
                replacements={seq: p for seq, p in entry.replacements},
                can_delete=entry.delete > 0,
                ins_before=frozenset(seq for seq, _ in entry.insertions_before),
                ins_after=frozenset(seq for seq, _ in entry.insertions_after),
            )
            self._views[phone] = view
        return view

    def explain_replace(
        self,
        src: PhoneSeq,
        dst: PhoneSeq,
        left: Phone | None,
        right: Phone | None,
    ) -> bool:
        """Can this merged operation arise from per-position table changes?

        Boundary insertions may anchor after the phone to the left or before
        the phone to the right, matching how the sampler emits them.
        """
        memo: dict[tuple[int, int], bool] = {}

        def boundary_inserts(i: int) -> list[PhoneSeq]:
            left_phone = src[i - 1] if i > 0 else left
            right_phone = src[i] if i < len(src) else right
            seqs: set[PhoneSeq] = set()
            seqs.update(self._view(left_phone).ins_after)
            seqs.update(self._view(right_phone).ins_before)
            return sorted(seqs, key=len, reverse=True)

        def walk(i: int, j: int) -> bool:
            if (i, j) in memo:
                return memo[(i, j)]
            result = False
            if i == len(src) and j == len(dst):
                result = True
            else:
                for seq in boundary_inserts(i):
                    if dst[j : j + len(seq)] == seq and walk(i, j + len(seq)):
                        result = True
                        break
                if not result and i < len(src):
                    view = self._view(src[i])
                    if j < len(dst) and src[i] == dst[j] and walk(i + 1, j + 1):
                        result = True
                    if not result and view.can_delete and walk(i + 1, j):
                        result = True
                    if not result:
                        for seq in view.replacements:
                            if dst[j : j + len(seq)] == seq and walk(i + 1, j + len(seq)):
                                result = True
                                break
            memo[(i, j)] = result
            return result

        return walk(0, 0)


def variant_explained(canonical: PhoneSeq, variant: PhoneSeq, probs: ProbTable) -> bool:
    """Check that a variant is reachable from its canonical form using only
    changes present in the table.

    The check realigns the pair under table-constrained operations: every
    phone is kept, deleted (if the table deletes it), or replaced by one of
    its table replacements, and boundary material must match an insertion
    entry anchored to an adjacent phone. Checking the whole pair at once
    keeps the verdict independent of how an unconstrained realignment would
    segment adjacent edits.
    """
    if canonical == variant:
        return True
    return _Explainer(probs).explain_replace(canonical, variant, None, None)
