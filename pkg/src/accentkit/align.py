"""Minimal edit scripts between a reference phone sequence and an accented one.

The script is computed with unit costs (equal 0, replace/insert/delete 1) and
a fixed backtrace preference (replace, then delete, then insert) so identical
inputs always produce the identical script. merge_ops fuses runs of adjacent
non-equal operations into multi-phone replacements such as p ↔ bə.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

from .errors import EmptyInputError
from .phones import Phone, PhoneSeq


class OpKind(str, Enum):
    EQUAL = "equal"
    REPLACE = "replace"
    INSERT = "insert"
    DELETE = "delete"


@dataclass(frozen=True)
class InsertAnchor:
    """Which reference phone an insertion attaches to, and on which side.

    An insertion run between reference phones g_i and g_{i+1} anchors after
    g_i; a run before the first phone anchors before it.
    """

    phone: Phone
    side: Literal["before", "after"]


@dataclass(frozen=True)
class EditOp:
    kind: OpKind
    src: PhoneSeq = ()
    dst: PhoneSeq = ()
    anchor: InsertAnchor | None = None

    def __post_init__(self) -> None:
        if self.kind is OpKind.EQUAL and (not self.src or self.src != self.dst):
            raise ValueError("equal op requires identical non-empty sides")
        if self.kind is OpKind.REPLACE and (not self.src or not self.dst or self.src == self.dst):
            raise ValueError("replace op requires differing non-empty sides")
        if self.kind is OpKind.INSERT and (self.src or not self.dst or self.anchor is None):
            raise ValueError("insert op requires empty src, non-empty dst, and an anchor")
        if self.kind is OpKind.DELETE and (not self.src or self.dst):
            raise ValueError("delete op requires non-empty src and empty dst")


@dataclass(frozen=True)
class EditScript:
    ops: tuple[EditOp, ...]
    cost: int

    @property
    def src(self) -> PhoneSeq:
        return tuple(p for op in self.ops for p in op.src)

    @property
    def dst(self) -> PhoneSeq:
        return tuple(p for op in self.ops for p in op.dst)


def align(gae: PhoneSeq, accented: PhoneSeq) -> EditScript:
    """Minimal unit-cost edit script turning the reference into the accented form.

    Equal runs are coalesced; replace/insert/delete ops come out elementary
    (one phone per side), ready for merge_ops.
    """
    if not gae or not accented:
        raise EmptyInputError("align requires two non-empty sequences")
    n, m = len(gae), len(accented)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dp[i][0] = i
    for j in range(1, m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        row = dp[i]
        prev = dp[i - 1]
        g = gae[i - 1]
        for j in range(1, m + 1):
            sub = prev[j - 1] + (0 if g == accented[j - 1] else 1)
            dele = prev[j] + 1
            ins = row[j - 1] + 1
            row[j] = sub if sub <= dele and sub <= ins else (dele if dele <= ins else ins)

    rev: list[tuple[OpKind, int, int]] = []  # (kind, gae index, accented index)
    i, j = n, m
    while i > 0 or j > 0:
        here = dp[i][j]
        if i > 0 and j > 0 and gae[i - 1] == accented[j - 1] and dp[i - 1][j - 1] == here:
            rev.append((OpKind.EQUAL, i - 1, j - 1))
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and dp[i - 1][j - 1] + 1 == here:
            rev.append((OpKind.REPLACE, i - 1, j - 1))
            i -= 1
            j -= 1
        elif i > 0 and dp[i - 1][j] + 1 == here:
            rev.append((OpKind.DELETE, i - 1, -1))
            i -= 1
        else:
            rev.append((OpKind.INSERT, i, j - 1))
            j -= 1

    ops: list[EditOp] = []
    equal_run: list[Phone] = []

    def flush_equal() -> None:
        if equal_run:
            seq = tuple(equal_run)
            ops.append(EditOp(OpKind.EQUAL, seq, seq))
            equal_run.clear()

    for kind, gi, aj in reversed(rev):
        if kind is OpKind.EQUAL:
            equal_run.append(gae[gi])
            continue
        flush_equal()
        if kind is OpKind.REPLACE:
            ops.append(EditOp(OpKind.REPLACE, (gae[gi],), (accented[aj],)))
        elif kind is OpKind.DELETE:
            ops.append(EditOp(OpKind.DELETE, (gae[gi],), ()))
        else:
            anchor = (
                InsertAnchor(gae[0], "before") if gi == 0 else InsertAnchor(gae[gi - 1], "after")
            )
            ops.append(EditOp(OpKind.INSERT, (), (accented[aj],), anchor))
    flush_equal()
    return EditScript(ops=tuple(ops), cost=dp[n][m])


def merge_ops(script: EditScript) -> EditScript:
    """Fuse each maximal run of adjacent non-equal ops into one operation.

    A run with phones on both sides becomes a multi-phone replace; pure
    insert and pure delete runs stay inserts and deletes. Cost and the
    reconstruction of both sequences are unchanged.
    """
    merged: list[EditOp] = []
    run: list[EditOp] = []

    def flush_run() -> None:
        if not run:
            return
        if len(run) == 1:
            merged.append(run[0])
            run.clear()
            return
        src = tuple(p for op in run for p in op.src)
        dst = tuple(p for op in run for p in op.dst)
        if src and dst:
            merged.append(EditOp(OpKind.REPLACE, src, dst))
        elif src:
            merged.append(EditOp(OpKind.DELETE, src, ()))
        else:
            merged.append(EditOp(OpKind.INSERT, (), dst, run[0].anchor))
        run.clear()

    for op in script.ops:
        if op.kind is OpKind.EQUAL:
            flush_run()
            merged.append(op)
        else:
            run.append(op)
    flush_run()
    return EditScript(ops=tuple(merged), cost=script.cost)


def align_merged(gae: PhoneSeq, accented: PhoneSeq) -> EditScript:
    return merge_ops(align(gae, accented))
