"""Pydantic request/response models for the HTTP service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class TokenizeRequest(BaseModel):
    text: str


class TokenizeResponse(BaseModel):
    phones: list[str]


class SimplifyRequest(BaseModel):
    words: list[str]
    skip_unmapped: bool = False


class SimplifyResponse(BaseModel):
    words: list[str]
    skipped: list[str] = []


class AlignRequest(BaseModel):
    gae: str
    accented: str


class AlignOp(BaseModel):
    kind: str
    src: str
    dst: str


class AlignResponse(BaseModel):
    ops: list[AlignOp]
    cost: int


class PairIn(BaseModel):
    gae: str
    accented: str


class StatsRequest(BaseModel):
    pairs: list[PairIn]
    accent_tag: str | None = None
    simplify: bool = False


class VariantsRequest(BaseModel):
    word: str
    stats: dict
    seed: int = 0
    n: int = Field(default=10, ge=1)
    max_edits: int = Field(default=2, ge=1)
    scale: float = Field(default=1.0, ge=0)
    min_count: int = Field(default=1, ge=1)


class VariantsResponse(BaseModel):
    variants: list[str]


class RankedVariant(BaseModel):
    form: str
    probability: float


class RankRequest(BaseModel):
    word: str
    stats: dict
    k: int = Field(default=5, ge=1)
    min_count: int = Field(default=1, ge=1)


class RankResponse(BaseModel):
    variants: list[RankedVariant]


class DetectRequest(BaseModel):
    stats: dict
    min_evidence: int = Field(default=2, ge=1)


class CompareRequest(BaseModel):
    stats_full: dict
    stats_simplified: dict
    min_evidence: int = Field(default=2, ge=1)


class CompareRow(BaseModel):
    rule: str
    full: bool
    simplified: bool


class CompareResponse(BaseModel):
    rows: list[CompareRow]
