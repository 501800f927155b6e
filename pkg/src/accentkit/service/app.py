"""HTTP service exposing the pipeline's interactive operations.

Corpus-scale generation and splitting stay on the CLI; the service covers
the per-word and per-table operations with the bundled reduction map and
feature database.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import generate, rules, stats
from ..align import align_merged
from ..errors import AccentKitError
from ..phones import load_default_reduction_map, render, simplify, tokenize
from ..rules import load_default_features
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(title="accentkit", version="0.1.0")
    rmap = load_default_reduction_map()
    features = load_default_features()

    def _tokenize(text: str):
        try:
            return tokenize(text)
        except AccentKitError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/tokenize", response_model=schemas.TokenizeResponse)
    def tokenize_text(req: schemas.TokenizeRequest) -> schemas.TokenizeResponse:
        return schemas.TokenizeResponse(phones=[p.text for p in _tokenize(req.text)])

    @app.post("/simplify", response_model=schemas.SimplifyResponse)
    def simplify_words(req: schemas.SimplifyRequest) -> schemas.SimplifyResponse:
        out: list[str] = []
        skipped: list[str] = []
        for word in req.words:
            try:
                out.append(render(simplify(_tokenize(word), rmap)))
            except AccentKitError as exc:
                if not req.skip_unmapped:
                    raise HTTPException(status_code=422, detail=f"{word}: {exc}") from exc
                skipped.append(word)
        return schemas.SimplifyResponse(words=out, skipped=skipped)

    @app.post("/align", response_model=schemas.AlignResponse)
    def align_words(req: schemas.AlignRequest) -> schemas.AlignResponse:
        try:
            script = align_merged(_tokenize(req.gae), _tokenize(req.accented))
        except AccentKitError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        ops = [
            schemas.AlignOp(kind=op.kind.value, src=render(op.src), dst=render(op.dst))
            for op in script.ops
        ]
        return schemas.AlignResponse(ops=ops, cost=script.cost)

    @app.post("/stats")
    def build_stats(req: schemas.StatsRequest) -> dict:
        seqs = [(_tokenize(p.gae), _tokenize(p.accented)) for p in req.pairs]
        if req.simplify:
            try:
                seqs = [(simplify(g, rmap), simplify(a, rmap)) for g, a in seqs]
            except AccentKitError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
        table = stats.accumulate(seqs, accent_tag=req.accent_tag)
        return stats.table_to_dict(table)

    def _probs(stats_dict: dict, min_count: int) -> stats.ProbTable:
        try:
            table = stats.table_from_dict(stats_dict)
        except (AccentKitError, ValueError, KeyError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=f"bad stats payload: {exc}") from exc
        return stats.probabilities(table, min_count=min_count)

    @app.post("/variants", response_model=schemas.VariantsResponse)
    def variants(req: schemas.VariantsRequest) -> schemas.VariantsResponse:
        cfg = generate.GenConfig(
            seed=req.seed,
            variants_per_word=req.n,
            max_edits_per_word=req.max_edits,
            min_count=req.min_count,
            scale=req.scale,
        )
        out = generate.generate_variants(_tokenize(req.word), _probs(req.stats, req.min_count), cfg)
        return schemas.VariantsResponse(variants=[render(v) for v in out])

    @app.post("/variants/ranked", response_model=schemas.RankResponse)
    def ranked(req: schemas.RankRequest) -> schemas.RankResponse:
        out = generate.most_probable_variants(
            _tokenize(req.word), _probs(req.stats, req.min_count), req.k
        )
        return schemas.RankResponse(
            variants=[schemas.RankedVariant(form=render(v), probability=p) for v, p in out]
        )

    @app.post("/detect")
    def detect_rules(req: schemas.DetectRequest) -> dict:
        try:
            table = stats.table_from_dict(req.stats)
            report = rules.detect(table, features, min_evidence=req.min_evidence)
        except AccentKitError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return rules.report_to_dict(report)

    @app.post("/compare", response_model=schemas.CompareResponse)
    def compare(req: schemas.CompareRequest) -> schemas.CompareResponse:
        try:
            full = rules.detect(
                stats.table_from_dict(req.stats_full), features, req.min_evidence
            )
            simplified = rules.detect(
                stats.table_from_dict(req.stats_simplified), features, req.min_evidence
            )
        except AccentKitError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        rows = rules.compare_inventories(full, simplified)
        return schemas.CompareResponse(
            rows=[schemas.CompareRow(rule=n, full=f, simplified=s) for n, f, s in rows]
        )

    return app


app = create_app()
