from __future__ import annotations

import json

import pytest

from accentkit.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def stats_file(tmp_path, pairs_path):
    out = tmp_path / "stats.json"
    code = main(["stats", "--pairs", str(pairs_path), "--out", str(out)])
    assert code == 0
    return out


@pytest.fixture()
def simplified_stats_file(tmp_path, pairs_path):
    out = tmp_path / "stats_simplified.json"
    code = main(["stats", "--pairs", str(pairs_path), "--simplify", "--out", str(out)])
    assert code == 0
    return out


class TestAlign:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "align", "pliz", "bəliz")
        assert code == 0
        assert out.splitlines() == ["~ p → bə", "= liz"]

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "align", "mɪlk", "mɪl", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["cost"] == 1
        assert data["ops"][-1] == {"kind": "delete", "src": "k", "dst": ""}

    def test_empty_word_is_data_error(self, capsys):
        code, _, err = run(capsys, "align", "pliz", "")
        assert code == 1
        assert "error" in err


class TestSimplify:
    def test_line_aligned_output(self, tmp_path, capsys):
        infile = tmp_path / "in.txt"
        infile.write_text("pʰliːz̥ mɪlk\nstɛlə\n", encoding="utf-8")
        out = tmp_path / "out.txt"
        code = main(["simplify", "--in", str(infile), "--out", str(out)])
        assert code == 0
        assert out.read_text(encoding="utf-8") == "pliz mɪlk\nstɛlʌ\n"

    def test_empty_input(self, tmp_path):
        infile = tmp_path / "in.txt"
        infile.write_text("", encoding="utf-8")
        out = tmp_path / "out.txt"
        assert main(["simplify", "--in", str(infile), "--out", str(out)]) == 0
        assert out.read_text(encoding="utf-8") == ""

    def test_unmapped_symbol_exits_2(self, tmp_path, capsys):
        infile = tmp_path / "in.txt"
        infile.write_text("mǃk\n", encoding="utf-8")  # click stays unmapped
        out = tmp_path / "out.txt"
        code = main(["simplify", "--in", str(infile), "--out", str(out)])
        assert code == 2
        assert "position 1" in capsys.readouterr().err

    def test_skip_unmapped_flag(self, tmp_path, capsys):
        infile = tmp_path / "in.txt"
        infile.write_text("mǃk pliz\n", encoding="utf-8")
        out = tmp_path / "out.txt"
        code = main(["simplify", "--in", str(infile), "--out", str(out), "--skip-unmapped"])
        assert code == 0
        assert out.read_text(encoding="utf-8") == "pliz\n"


class TestStats:
    def test_writes_table_json(self, stats_file):
        data = json.loads(stats_file.read_text(encoding="utf-8"))
        assert data["accent_tag"] is None
        entry = data["sounds"]["z"]
        assert list(entry) == [
            "occurrences", "deletions", "replacements",
            "insertions_before", "insertions_after",
        ]
        assert entry["replacements"].get("s")

    def test_accent_filter(self, tmp_path, pairs_path, capsys):
        out = tmp_path / "rus.json"
        code = main(["stats", "--pairs", str(pairs_path), "--accent", "rus", "--out", str(out)])
        assert code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["accent_tag"] == "rus"

    def test_unknown_accent_is_data_error(self, tmp_path, pairs_path, capsys):
        code, _, err = run(
            capsys, "stats", "--pairs", str(pairs_path), "--accent", "zzz",
            "--out", str(tmp_path / "x.json"),
        )
        assert code == 1
        assert "zzz" in err

    def test_identity_pairs_have_no_changes(self, tmp_path, capsys):
        pairs = tmp_path / "pairs.tsv"
        pairs.write_text("s\trus\tmilk\tmɪlk\tmɪlk\n", encoding="utf-8")
        out = tmp_path / "out.json"
        assert main(["stats", "--pairs", str(pairs), "--out", str(out)]) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        for entry in data["sounds"].values():
            assert entry["deletions"] == 0 and not entry["replacements"]


class TestGenerate:
    def test_count_bounded_by_request(self, tmp_path, stats_file, mini_dict_path, capsys):
        out = tmp_path / "aug.tsv"
        code = main([
            "generate", "--stats", str(stats_file), "--dict", str(mini_dict_path),
            "--n", "10", "--seed", "1", "--out", str(out),
        ])
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert 200 <= len(lines) <= 2000
        assert all(len(line.split("\t")) == 4 for line in lines)

    def test_scale_zero_emits_canonical_only(self, tmp_path, stats_file, mini_dict_path, capsys):
        out = tmp_path / "aug.tsv"
        code = main([
            "generate", "--stats", str(stats_file), "--dict", str(mini_dict_path),
            "--n", "5", "--seed", "1", "--scale", "0", "--out", str(out),
        ])
        assert code == 0
        for line in out.read_text(encoding="utf-8").splitlines():
            accented, canonical, _, _ = line.split("\t")
            assert accented == canonical


class TestDetectAndCompare:
    def test_detect_text(self, stats_file, capsys):
        code, out, _ = run(capsys, "detect", "--stats", str(stats_file))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 20
        assert all(line.startswith(("✓", "·")) for line in lines)
        assert sum(1 for line in lines if line.startswith("✓")) == 20

    def test_detect_json_empty_stats(self, tmp_path, capsys):
        empty = tmp_path / "empty.json"
        empty.write_text('{"accent_tag": null, "sounds": {}}', encoding="utf-8")
        code, out, _ = run(capsys, "detect", "--stats", str(empty), "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert all(not entry["detected"] for entry in data.values())

    def test_compare_marks_thirteen(self, stats_file, simplified_stats_file, capsys):
        code, out, _ = run(
            capsys, "compare",
            "--stats-full", str(stats_file),
            "--stats-simplified", str(simplified_stats_file),
        )
        assert code == 0
        body = out.splitlines()[1:]
        assert len(body) == 20
        full_marks = sum(1 for line in body if line.split()[-2] == "✓")
        simp_marks = sum(1 for line in body if line.split()[-1] == "✓")
        assert full_marks == 20
        assert simp_marks == 13


class TestSplit:
    def _write_corpus(self, path, n_words=300, per_word=3):
        with open(path, "w", encoding="utf-8") as fh:
            for i in range(n_words):
                for j in range(per_word):
                    fh.write(f"plis{i}\tpliz{i}\tword{i}\trus\n".replace("9", ""))

    def test_ratio_100_0_0(self, tmp_path, capsys):
        src = tmp_path / "corpus.tsv"
        src.write_text("bəliz\tpliz\tplease\trus\n", encoding="utf-8")
        code = main(["split", "--in", str(src), "--ratio", "100/0/0", "--seed", "1"])
        assert code == 0
        assert len((tmp_path / "corpus.tsv.train").read_text().splitlines()) == 1
        assert (tmp_path / "corpus.tsv.val").read_text() == ""
        assert (tmp_path / "corpus.tsv.test").read_text() == ""

    def test_bad_ratio_is_usage_error(self, tmp_path, capsys):
        src = tmp_path / "corpus.tsv"
        src.write_text("bəliz\tpliz\tplease\trus\n", encoding="utf-8")
        assert main(["split", "--in", str(src), "--ratio", "50/50/50"]) == 2

    def test_no_word_leakage(self, tmp_path, capsys):
        src = tmp_path / "corpus.tsv"
        with open(src, "w", encoding="utf-8") as fh:
            for i in range(200):
                for _ in range(3):
                    fh.write(f"mɪl\tmɪlk\tword{i}\trus\n")
        assert main(["split", "--in", str(src), "--ratio", "80/10/10", "--seed", "9"]) == 0
        seen: dict[str, str] = {}
        for name in ("train", "val", "test"):
            for line in (tmp_path / f"corpus.tsv.{name}").read_text().splitlines():
                word = line.split("\t")[2]
                assert seen.setdefault(word, name) == name


class TestDeterminism:
    def test_generate_byte_identical(self, tmp_path, stats_file, mini_dict_path, capsys):
        outs = []
        for name in ("a.tsv", "b.tsv"):
            out = tmp_path / name
            code = main([
                "generate", "--stats", str(stats_file), "--dict", str(mini_dict_path),
                "--n", "4", "--seed", "77", "--out", str(out),
            ])
            assert code == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_stats_byte_identical(self, tmp_path, pairs_path, capsys):
        outs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            assert main(["stats", "--pairs", str(pairs_path), "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["stats"])
        assert exc.value.code == 2
