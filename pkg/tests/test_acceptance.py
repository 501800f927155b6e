"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from pathlib import Path

import psutil
import pytest

from accentkit.align import OpKind, align, align_merged
from accentkit.cli import main
from accentkit.corpus import ARPABET_TO_IPA, parse_cmudict
from accentkit.generate import GenConfig, augment_corpus, scale_probs, variant_explained
from accentkit.phones import Phone, render, simplify, tokenize
from accentkit.rules import RULE_NAMES, detect
from accentkit.stats import (
    StatsTable,
    accumulate,
    dump_table,
    load_table,
    probabilities,
    table_to_dict,
)

from oracles import exhaustive_min_cost
from test_rules import REDUCED_LOST
from test_stats import reference_table

SEED = 20240601


def ok(message: str) -> None:
    print(f"PASS: {message}")


# -- criterion 1: alignment cost equals exhaustive-search cost ---------------


def test_alignment_oracle_equivalence():
    rng = random.Random(SEED)
    alphabet = "abcdefghij"
    start = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        a = [rng.choice(alphabet) for _ in range(rng.randint(1, 8))]
        b = [rng.choice(alphabet) for _ in range(rng.randint(1, 8))]
        got = align(tuple(Phone(c) for c in a), tuple(Phone(c) for c in b)).cost
        if got != exhaustive_min_cost(a, b):
            mismatches += 1
    elapsed = time.perf_counter() - start
    assert mismatches == 0
    assert elapsed < 10.0
    ok(f"alignment oracle equivalence — 1000 pairs, 0 mismatches, {elapsed:.2f}s")


# -- criterion 2: worked replacement example through CLI and stats -----------


def test_worked_example_round_trip(capsys):
    assert main(["align", "pliz", "bəliz"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["~ p → bə", "= liz"]

    table = accumulate([(tokenize("pliz"), tokenize("bəliz"))])
    p = tokenize("p")[0]
    assert table.per_sound[p].replacements == {tokenize("bə"): 1}
    ok("worked example — align CLI emits replace p→bə / equal liz; stats count bə:1")


# -- criterion 3: per-sound schema matches the five published counter groups -


def test_per_sound_schema_fidelity(fixture_pairs):
    table = accumulate([(p.gae, p.accented) for p in fixture_pairs])
    data = table_to_dict(table)
    epsilon = data["sounds"]["ɛ"]
    assert list(epsilon) == [
        "occurrences",
        "deletions",
        "replacements",
        "insertions_before",
        "insertions_after",
    ]

    reference = reference_table()
    assert load_table(dump_table(reference)) == reference
    ok("per-sound schema — exactly five counter groups; reference counts round-trip")


# -- criterion 4: generalization recovery and inventory-reduction subset -----


def test_generalization_recovery(fixture_pairs, features, rmap):
    full_pairs = [(p.gae, p.accented) for p in fixture_pairs]
    simp_pairs = [(simplify(g, rmap), simplify(a, rmap)) for g, a in full_pairs]

    full = detect(accumulate(full_pairs), features, min_evidence=2)
    simp = detect(accumulate(simp_pairs), features, min_evidence=2)
    assert full.detected_names() == list(RULE_NAMES)
    simp_set = set(simp.detected_names())
    assert simp_set == set(RULE_NAMES) - REDUCED_LOST
    assert len(simp_set) == 13
    assert simp_set < set(full.detected_names())

    rng = random.Random(SEED)
    for _ in range(100):
        idx = rng.sample(range(len(full_pairs)), rng.randint(1, len(full_pairs)))
        sub_full = detect(accumulate([full_pairs[i] for i in idx]), features, 2)
        sub_simp = detect(accumulate([simp_pairs[i] for i in idx]), features, 2)
        assert set(sub_simp.detected_names()) <= set(sub_full.detected_names())
    ok("generalization recovery — 20/20 full, 13/20 reduced, subset on 100 sub-corpora")


# -- criterion 5: every generated variant decomposes into table changes ------


def test_generation_round_trip_property(fixture_pairs, mini_dict_entries):
    probs = probabilities(accumulate([(p.gae, p.accented) for p in fixture_pairs]))
    cfg = GenConfig(seed=SEED, variants_per_word=10, max_edits_per_word=2, scale=4.0)
    scaled, _ = scale_probs(probs, cfg.scale)

    violations = 0
    checked = 0
    entries = [(e.word, e.pron) for e in mini_dict_entries]
    passes = 0
    while checked < 10_000:
        passes += 1
        cfg_pass = GenConfig(
            seed=SEED + passes,
            variants_per_word=10,
            max_edits_per_word=2,
            scale=4.0,
        )
        for record in augment_corpus(entries, scaled, cfg_pass):
            checked += 1
            if not variant_explained(record.canonical, record.accented, scaled):
                violations += 1
            if checked >= 10_000:
                break
        assert passes < 50
    assert violations == 0
    ok(f"generation round trip — {checked} variants re-aligned, 0 violations")


# -- criterion 6 and 8: corpus-scale generation, then the split contract -----


@dataclass
class ScaleRun:
    corpus_path: Path
    records: int
    requested: int
    elapsed: float
    rss_growth_mb: float
    words: int


def _rich_stats_table() -> StatsTable:
    """Synthetic statistics with a wide change distribution per sound, so ten
    draws per word rarely collide."""
    sounds = sorted(set(ARPABET_TO_IPA.values()))
    table = StatsTable(accent_tag="syn")
    for i, sound in enumerate(sounds):
        stats = table.sound(tokenize(sound)[0])
        stats.occurrences = 1000
        for k in range(1, 11):
            stats.replacements[tokenize(sounds[(i + k) % len(sounds)])] = 40
        stats.deletions = 40
        for k in range(1, 4):
            stats.insertions_before[tokenize(sounds[(i + k) % len(sounds)])] = 15
            stats.insertions_after[tokenize(sounds[(i + 3 + k) % len(sounds)])] = 15
    return table


@pytest.fixture(scope="module")
def scale_run(tmp_path_factory) -> ScaleRun:
    tmp = tmp_path_factory.mktemp("scale")
    rng = random.Random(SEED)
    symbols = list(ARPABET_TO_IPA)
    n_words = 103_000
    lines = (
        f"W{i}  " + " ".join(rng.choice(symbols) for _ in range(rng.randint(3, 7)))
        for i in range(n_words)
    )
    entries, diags = parse_cmudict(lines)
    assert not diags and len(entries) == n_words

    probs = probabilities(_rich_stats_table())
    cfg = GenConfig(seed=SEED, variants_per_word=10, max_edits_per_word=2)
    corpus_path = tmp / "augmented.tsv"

    process = psutil.Process()
    baseline = process.memory_info().rss
    peak = baseline
    count = 0
    start = time.perf_counter()
    with open(corpus_path, "w", encoding="utf-8") as fh:
        for record in augment_corpus(((e.word, e.pron) for e in entries), probs, cfg):
            fh.write(
                f"{render(record.accented)}\t{render(record.canonical)}"
                f"\t{record.word}\t{record.accent_tag}\n"
            )
            count += 1
            if count % 100_000 == 0:
                peak = max(peak, process.memory_info().rss)
    elapsed = time.perf_counter() - start
    peak = max(peak, process.memory_info().rss)
    return ScaleRun(
        corpus_path=corpus_path,
        records=count,
        requested=n_words * cfg.variants_per_word,
        elapsed=elapsed,
        rss_growth_mb=(peak - baseline) / 2**20,
        words=n_words,
    )


def test_scale_generation(scale_run):
    assert scale_run.records >= 950_000, scale_run.records
    assert scale_run.elapsed < 300.0, scale_run.elapsed
    assert scale_run.rss_growth_mb < 300.0, scale_run.rss_growth_mb
    ok(
        f"scale — {scale_run.records} records from {scale_run.words} entries in "
        f"{scale_run.elapsed:.1f}s, +{scale_run.rss_growth_mb:.0f} MB RSS"
    )


def test_split_contract(scale_run, capsys):
    assert scale_run.records >= 950_000
    code = main([
        "split", "--in", str(scale_run.corpus_path), "--ratio", "80/10/10",
        "--seed", str(SEED),
    ])
    assert code == 0
    capsys.readouterr()

    counts = {}
    word_split: dict[str, str] = {}
    for name in ("train", "val", "test"):
        path = Path(f"{scale_run.corpus_path}.{name}")
        n = 0
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                word = line.split("\t")[2]
                assert word_split.setdefault(word, name) == name, word
                n += 1
        counts[name] = n
    total = sum(counts.values())
    assert total == scale_run.records
    proportions = {name: counts[name] / total for name in counts}
    assert abs(proportions["train"] - 0.80) < 0.01
    assert abs(proportions["val"] - 0.10) < 0.01
    assert abs(proportions["test"] - 0.10) < 0.01
    ok(
        "split contract — 80/10/10 within ±1% "
        f"({proportions['train']:.3f}/{proportions['val']:.3f}/{proportions['test']:.3f}), "
        "zero word leakage"
    )


# -- criterion 7: every CLI subcommand is byte-deterministic -----------------


def _run_twice(capsys, argv: list[str], out_files: list[Path]) -> None:
    captures = []
    file_bytes = []
    for _ in range(2):
        assert main(list(argv)) == 0
        captured = capsys.readouterr()
        captures.append(captured.out.encode())
        file_bytes.append([p.read_bytes() for p in out_files])
    assert captures[0] == captures[1], argv
    assert file_bytes[0] == file_bytes[1], argv


def test_cli_determinism(tmp_path, capsys, pairs_path, mini_dict_path):
    stats_path = tmp_path / "stats.json"
    simp_path = tmp_path / "simp.json"
    corpus_path = tmp_path / "aug.tsv"
    simplify_in = tmp_path / "words.txt"
    simplify_in.write_text("pʰliːz̥ mɪlk\nstɛlə\n", encoding="utf-8")
    simplify_out = tmp_path / "words.out"

    _run_twice(capsys, ["align", "pliz", "bəliz"], [])
    _run_twice(
        capsys,
        ["simplify", "--in", str(simplify_in), "--out", str(simplify_out)],
        [simplify_out],
    )
    _run_twice(
        capsys,
        ["stats", "--pairs", str(pairs_path), "--out", str(stats_path)],
        [stats_path],
    )
    _run_twice(
        capsys,
        ["stats", "--pairs", str(pairs_path), "--simplify", "--out", str(simp_path)],
        [simp_path],
    )
    _run_twice(
        capsys,
        [
            "generate", "--stats", str(stats_path), "--dict", str(mini_dict_path),
            "--n", "5", "--seed", "123", "--out", str(corpus_path),
        ],
        [corpus_path],
    )
    _run_twice(capsys, ["detect", "--stats", str(stats_path)], [])
    _run_twice(
        capsys,
        ["compare", "--stats-full", str(stats_path), "--stats-simplified", str(simp_path)],
        [],
    )
    split_files = [Path(f"{corpus_path}.{n}") for n in ("train", "val", "test")]
    _run_twice(
        capsys,
        ["split", "--in", str(corpus_path), "--ratio", "80/10/10", "--seed", "5"],
        split_files,
    )
    ok("determinism — all subcommands byte-identical across repeat runs")


# -- sanity: the fixture stats expose the worked milk-style variants ---------


def test_variant_families_from_learned_stats():
    pairs = (
        [(tokenize("mɪlk"), tokenize("nɪlk"))] * 3
        + [(tokenize("mɪlk"), tokenize("mɪilk"))] * 2
        + [(tokenize("mɪlk"), tokenize("mɪl"))] * 1
        + [(tokenize("mɪlk"), tokenize("mɪlk"))] * 4
    )
    probs = probabilities(accumulate(pairs))
    from accentkit.generate import most_probable_variants

    ranked = [render(v) for v, _ in most_probable_variants(tokenize("mɪlk"), probs, k=3)]
    assert ranked == ["nɪlk", "mɪilk", "mɪl"]
    ok("ranked single-edit variants — replacement, insertion, deletion classes in order")
