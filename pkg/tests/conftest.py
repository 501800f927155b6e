from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from accentkit.phones import load_default_reduction_map
from accentkit.rules import load_default_features

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "accentkit" / "data" / "fixtures"


@pytest.fixture(scope="session")
def rmap():
    return load_default_reduction_map()


@pytest.fixture(scope="session")
def features():
    return load_default_features()


@pytest.fixture(scope="session")
def pairs_path() -> Path:
    return FIXTURES / "pairs_3accents.tsv"


@pytest.fixture(scope="session")
def mini_dict_path() -> Path:
    return FIXTURES / "mini.dict"


@pytest.fixture(scope="session")
def fixture_pairs(pairs_path):
    from accentkit.corpus import parse_pairs

    pairs, diags = parse_pairs(pairs_path.read_text(encoding="utf-8").splitlines())
    assert not diags
    return pairs


@pytest.fixture(scope="session")
def mini_dict_entries(mini_dict_path):
    from accentkit.corpus import parse_cmudict

    entries, diags = parse_cmudict(mini_dict_path.read_text(encoding="utf-8").splitlines())
    assert not diags
    return entries
