from __future__ import annotations

import random

import pytest

from accentkit.errors import MissingFeaturesError
from accentkit.phones import simplify, tokenize
from accentkit.rules import (
    RULE_NAMES,
    compare_inventories,
    detect,
    load_features,
    render_comparison,
    report_to_dict,
)
from accentkit.stats import StatsTable, accumulate


def seq(text: str):
    return tokenize(text)


# Rules that depend on diacritics or symbols outside the 39-sound inventory;
# the fixture corpus is engineered to lose exactly these under reduction.
REDUCED_LOST = {
    "stop → fricative",
    "palatalization",
    "retroflexing",
    "stop → implosive",
    "labialization",
    "vowel raising",
    "vowel lowering",
}


def full_pairs(fixture_pairs):
    return [(p.gae, p.accented) for p in fixture_pairs]


def simplified_pairs(fixture_pairs, rmap):
    return [(simplify(g, rmap), simplify(a, rmap)) for g, a in full_pairs(fixture_pairs)]


class TestSingleRuleCorpora:
    def test_final_devoicing_only(self, features):
        # word-final z -> s everywhere, nothing else
        pairs = [
            (seq("pliz"), seq("plis")),
            (seq("bæɡz"), seq("bæɡs")),
            (seq("θɪŋz"), seq("θɪŋs")),
        ]
        report = detect(accumulate(pairs), features, min_evidence=2)
        assert report.detected_names() == ["final obstruent devoicing"]

    def test_medial_devoicing_does_not_count(self, features):
        pairs = [(seq("zip"), seq("sip")), (seq("zil"), seq("sil"))]
        report = detect(accumulate(pairs), features, min_evidence=2)
        assert "final obstruent devoicing" not in report.detected_names()

    def test_interdental_change(self, features):
        pairs = [
            (seq("θɪk"), seq("tɪk")),
            (seq("θɹi"), seq("tɹi")),
            (seq("ðiz"), seq("diz")),
            (seq("ðə"), seq("də")),
            (seq("wɪθ"), seq("wɪθ")),
        ]
        report = detect(accumulate(pairs), features, min_evidence=2)
        assert report.detected_names() == ["interdental fricative change"]

    def test_empty_table(self, features):
        report = detect(StatsTable(), features, min_evidence=2)
        assert report.detected_names() == []
        assert set(report.rules) == set(RULE_NAMES)

    def test_cluster_reduction_multi_phone_deletion(self, features):
        pairs = [(seq("stɛla"), seq("ɛla")), (seq("stɔɹ"), seq("ɔɹ"))]
        report = detect(accumulate(pairs), features, min_evidence=2)
        assert "cluster reduction" in report.detected_names()

    def test_lone_consonant_deletion_is_not_cluster_reduction(self, features):
        pairs = [(seq("hɝ"), seq("ɝ")), (seq("hæt"), seq("æt"))]
        report = detect(accumulate(pairs), features, min_evidence=2)
        detected = report.detected_names()
        assert "consonant deletion" in detected
        assert "cluster reduction" not in detected

    def test_vowel_insertion(self, features):
        pairs = [(seq("sɪks"), seq("sɪkɪs")), (seq("mɪlk"), seq("mɪlək"))]
        report = detect(accumulate(pairs), features, min_evidence=2)
        assert report.detected_names() == ["vowel insertion"]

    def test_raising_and_lowering_mutually_exclusive(self, features):
        pairs = [(seq("stɛla"), seq("stela")), (seq("ɹɛd"), seq("ɹed"))]
        report = detect(accumulate(pairs), features, min_evidence=2)
        detected = report.detected_names()
        assert "vowel raising" in detected
        assert "vowel lowering" not in detected

    def test_missing_features_raise(self):
        sparse = load_features("a\tvowel\tvoiced\t-\t-\tlow\tfront\tshort\n")
        with pytest.raises(MissingFeaturesError):
            detect(accumulate([(seq("ab"), seq("ab"))]), sparse)

    def test_min_evidence_threshold(self, features):
        pairs = [(seq("wɪl"), seq("vɪl"))]
        assert "w → fricative" not in detect(accumulate(pairs), features, 2).detected_names()
        assert "w → fricative" in detect(accumulate(pairs), features, 1).detected_names()


class TestFixtureCorpus:
    def test_full_corpus_exhibits_all_rules(self, fixture_pairs, features):
        report = detect(accumulate(full_pairs(fixture_pairs)), features, min_evidence=2)
        assert report.detected_names() == list(RULE_NAMES)

    def test_reduced_corpus_loses_exactly_the_dependent_rules(
        self, fixture_pairs, features, rmap
    ):
        report = detect(accumulate(simplified_pairs(fixture_pairs, rmap)), features, 2)
        assert set(report.detected_names()) == set(RULE_NAMES) - REDUCED_LOST

    def test_subset_property_on_subcorpora(self, fixture_pairs, features, rmap):
        full = full_pairs(fixture_pairs)
        simplified = simplified_pairs(fixture_pairs, rmap)
        rng = random.Random(5)
        for _ in range(25):
            idx = rng.sample(range(len(full)), rng.randint(1, len(full)))
            full_detected = set(
                detect(accumulate([full[i] for i in idx]), features, 2).detected_names()
            )
            simp_detected = set(
                detect(accumulate([simplified[i] for i in idx]), features, 2).detected_names()
            )
            assert simp_detected <= full_detected

    def test_monotone_under_corpus_growth(self, fixture_pairs, features):
        pairs = full_pairs(fixture_pairs)
        half = detect(accumulate(pairs[: len(pairs) // 2]), features, 2).detected_names()
        whole = detect(accumulate(pairs), features, 2).detected_names()
        assert set(half) <= set(whole)

    def test_evidence_changes_exist_in_table(self, fixture_pairs, features):
        table = accumulate(full_pairs(fixture_pairs))
        report = detect(table, features, min_evidence=2)
        replacement_labels = {
            f"{''.join(p.text for p in src)}→{''.join(p.text for p in dst)}"
            for (src, dst, _final) in table.replacement_events
        }
        for name, result in report.rules.items():
            for change, count in result.evidence:
                assert count >= 1
                base = change.split(" (")[0]
                if "→" in base and not base.startswith("∅") and not base.endswith("∅"):
                    assert base in replacement_labels, (name, change)


class TestComparison:
    def test_rows_in_canonical_order(self, fixture_pairs, features, rmap):
        full = detect(accumulate(full_pairs(fixture_pairs)), features, 2)
        simp = detect(accumulate(simplified_pairs(fixture_pairs, rmap)), features, 2)
        rows = compare_inventories(full, simp)
        assert [r[0] for r in rows] == list(RULE_NAMES)
        assert all(f for _, f, _ in rows)
        assert sum(1 for _, _, s in rows if s) == 13

    def test_empty_reports_render(self, features):
        empty = detect(StatsTable(), features)
        rows = compare_inventories(empty, empty)
        text = render_comparison(rows)
        assert "✓" not in text

    def test_report_json_shape(self, features):
        report = detect(
            accumulate([(seq("pliz"), seq("plis")), (seq("bæɡz"), seq("bæɡs"))]), features, 2
        )
        data = report_to_dict(report)
        assert set(data) == set(RULE_NAMES)
        entry = data["final obstruent devoicing"]
        assert entry["detected"] is True
        assert entry["evidence"][0]["count"] >= 1
