"""Independent reference implementations used to check the library.

These deliberately avoid the library's DP-plus-backtrace code path: the
exhaustive searcher enumerates edit scripts directly (branch and bound), and
the recursive cost oracle is a top-down memoized recurrence over plain
sequences.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence


def exhaustive_min_cost(a: Sequence, b: Sequence) -> int:
    """Smallest edit-script cost found by enumerating scripts outright."""
    best = len(a) + len(b)

    def walk(i: int, j: int, cost: int) -> None:
        nonlocal best
        remaining = abs((len(a) - i) - (len(b) - j))
        if cost + remaining >= best:
            return
        if i == len(a) and j == len(b):
            best = cost
            return
        if i < len(a) and j < len(b):
            walk(i + 1, j + 1, cost + (0 if a[i] == b[j] else 1))
        if i < len(a):
            walk(i + 1, j, cost + 1)
        if j < len(b):
            walk(i, j + 1, cost + 1)

    walk(0, 0, 0)
    return best


def recursive_min_cost(a: Sequence, b: Sequence) -> int:
    """Top-down memoized edit distance over plain tuples."""
    a = tuple(a)
    b = tuple(b)

    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        best = rec(i + 1, j + 1) + (0 if a[i] == b[j] else 1)
        best = min(best, rec(i + 1, j) + 1, rec(i, j + 1) + 1)
        return best

    result = rec(0, 0)
    rec.cache_clear()
    return result


def single_edit_variants(word: tuple, table: dict) -> dict[tuple, float]:
    """Brute-force enumeration of single-edit variants and their probabilities.

    `table` maps phone -> dict with keys keep, delete, replacements,
    insertions_before, insertions_after (plain python values).
    """
    def entry(p):
        return table.get(p, {"keep": 1.0, "delete": 0.0, "replacements": {},
                             "insertions_before": {}, "insertions_after": {}})

    keeps = [entry(p)["keep"] for p in word]
    out: dict[tuple, float] = {}

    def add(variant: tuple, p: float) -> None:
        if p > 0:
            out[variant] = out.get(variant, 0.0) + p

    all_keep = 1.0
    for v in keeps:
        all_keep *= v
    for i, phone in enumerate(word):
        e = entry(phone)
        others = 1.0
        for j, v in enumerate(keeps):
            if j != i:
                others *= v
        for seq, p in e["replacements"].items():
            add(word[:i] + tuple(seq) + word[i + 1:], p * others)
        if e["delete"] > 0:
            add(word[:i] + word[i + 1:], e["delete"] * others)
        for seq, p in e["insertions_before"].items():
            add(word[:i] + tuple(seq) + word[i:], p * all_keep)
        for seq, p in e["insertions_after"].items():
            add(word[:i + 1] + tuple(seq) + word[i + 1:], p * all_keep)
    return out
