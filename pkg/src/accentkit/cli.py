"""Command-line interface: thin wrappers over the library.

Exit codes: 0 success, 1 data errors (with per-line diagnostics on stderr),
2 usage errors. Paths accept `-` for stdin/stdout.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
from pathlib import Path
from typing import IO, Iterator

from . import corpus, generate, rules, stats
from .align import OpKind, align_merged
from .errors import AccentKitError, UnmappedPhoneError
from .phones import (
    load_default_reduction_map,
    load_reduction_map,
    render,
    simplify,
    tokenize,
)

USAGE_ERROR = 2
DATA_ERROR = 1


@contextlib.contextmanager
def _open_in(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _load_rmap(path: str | None):
    return load_reduction_map(Path(path)) if path else load_default_reduction_map()


def _load_features(path: str | None):
    return rules.load_features(Path(path)) if path else rules.load_default_features()


def _load_stats(path: str) -> stats.StatsTable:
    with _open_in(path) as fh:
        return stats.table_from_dict(json.load(fh))


def cmd_simplify(args: argparse.Namespace) -> int:
    rmap = _load_rmap(args.reduction_map)
    status = 0
    with _open_in(args.infile) as fin, _open_out(args.out) as fout:
        for line in fin:
            words_out = []
            for word in line.split():
                try:
                    words_out.append(render(simplify(tokenize(word), rmap)))
                except UnmappedPhoneError as exc:
                    if args.skip_unmapped:
                        print(f"skipped {word!r}: {exc}", file=sys.stderr)
                        continue
                    print(f"error: {word!r}: {exc}", file=sys.stderr)
                    return USAGE_ERROR
            fout.write(" ".join(words_out) + "\n")
    return status


def _read_pairs(path: str) -> tuple[list[corpus.AccentPair], list[corpus.Diagnostic]]:
    with _open_in(path) as fh:
        return corpus.parse_pairs(fh)


def cmd_stats(args: argparse.Namespace) -> int:
    pairs, diags = _read_pairs(args.pairs)
    for diag in diags:
        print(diag, file=sys.stderr)
    if args.accent:
        pairs = [p for p in pairs if p.accent_tag == args.accent]
        if not pairs:
            print(f"error: no pairs with accent tag {args.accent!r}", file=sys.stderr)
            return DATA_ERROR
    if not pairs:
        print("error: no pairs parsed", file=sys.stderr)
        return DATA_ERROR
    seqs = [(p.gae, p.accented) for p in pairs]
    if args.reduction_map is not None or args.simplify:
        rmap = _load_rmap(args.reduction_map)
        seqs = [(simplify(g, rmap), simplify(a, rmap)) for g, a in seqs]
    table = stats.accumulate(
        seqs,
        accent_tag=args.accent,
        on_error=lambda i, exc: print(f"pair {i}: {exc}", file=sys.stderr),
    )
    with _open_out(args.out) as fh:
        fh.write(stats.dump_table(table) + "\n")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    table = _load_stats(args.stats)
    probs = stats.probabilities(table, min_count=args.min_count)
    with _open_in(args.dict) as fh:
        entries, diags = corpus.parse_cmudict(fh)
    for diag in diags:
        print(diag, file=sys.stderr)
    cfg = generate.GenConfig(
        seed=args.seed,
        variants_per_word=args.n,
        max_edits_per_word=args.max_edits,
        min_count=args.min_count,
        scale=args.scale,
    )
    scaled, warnings = generate.scale_probs(probs, cfg.scale)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    start = time.perf_counter()
    records = generate.augment_corpus(((e.word, e.pron) for e in entries), scaled, cfg)
    with _open_out(args.out) as fh:
        emitted = corpus.write_augmented(records, fh)
    elapsed = time.perf_counter() - start
    requested = len(entries) * args.n
    print(
        f"emitted {emitted} records for {len(entries)} entries "
        f"({requested - emitted} lost to dedup) in {elapsed:.1f}s",
        file=sys.stderr,
    )
    return 0


def cmd_detect(args: argparse.Namespace) -> int:
    table = _load_stats(args.stats)
    features = _load_features(args.features)
    report = rules.detect(table, features, min_evidence=args.min_evidence)
    if args.format == "json":
        print(rules.dump_report(report))
    else:
        for name in rules.RULE_NAMES:
            result = report.rules[name]
            mark = "✓" if result.detected else "·"
            evidence = ", ".join(f"{change} ×{count}" for change, count in result.evidence)
            print(f"{mark} {name}" + (f"  [{evidence}]" if evidence else ""))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    features = _load_features(args.features)
    full = rules.detect(_load_stats(args.stats_full), features, args.min_evidence)
    simplified = rules.detect(_load_stats(args.stats_simplified), features, args.min_evidence)
    rows = rules.compare_inventories(full, simplified)
    if args.format == "json":
        print(json.dumps(
            [{"rule": n, "full": f, "simplified": s} for n, f, s in rows],
            ensure_ascii=False, indent=2,
        ))
    else:
        print(rules.render_comparison(rows))
    return 0


def cmd_align(args: argparse.Namespace) -> int:
    try:
        script = align_merged(tokenize(args.word_a), tokenize(args.word_b))
    except AccentKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    if args.format == "json":
        ops = [
            {"kind": op.kind.value, "src": render(op.src), "dst": render(op.dst)}
            for op in script.ops
        ]
        print(json.dumps({"ops": ops, "cost": script.cost}, ensure_ascii=False))
        return 0
    for op in script.ops:
        if op.kind is OpKind.EQUAL:
            print(f"= {render(op.src)}")
        elif op.kind is OpKind.REPLACE:
            print(f"~ {render(op.src)} → {render(op.dst)}")
        elif op.kind is OpKind.DELETE:
            print(f"- {render(op.src)}")
        else:
            anchor = op.anchor
            print(f"+ {render(op.dst)} ({anchor.side} {anchor.phone.text})")
    return 0


def cmd_split(args: argparse.Namespace) -> int:
    try:
        ratio = corpus.parse_ratio(args.ratio)
    except AccentKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    prefix = args.out_prefix or (args.infile if args.infile != "-" else "split")
    outs = {name: open(f"{prefix}.{name}", "w", encoding="utf-8") for name in corpus.SPLIT_NAMES}
    counts = dict.fromkeys(corpus.SPLIT_NAMES, 0)
    status = 0
    try:
        with _open_in(args.infile) as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                fields = line.rstrip("\n").split("\t")
                if len(fields) != 4:
                    print(f"line {line_no}: expected 4 fields", file=sys.stderr)
                    status = DATA_ERROR
                    continue
                name = corpus.assign_split(fields[2], ratio, args.seed)
                outs[name].write(line if line.endswith("\n") else line + "\n")
                counts[name] += 1
    finally:
        for fh in outs.values():
            fh.close()
    total = sum(counts.values()) or 1
    for name in corpus.SPLIT_NAMES:
        print(f"{name}: {counts[name]} ({100 * counts[name] / total:.1f}%)", file=sys.stderr)
    return status


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="accentkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", help="reduce IPA words to the dictionary inventory")
    p.add_argument("--reduction-map", default=None, help="rule file (default: bundled map)")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--out", default="-")
    p.add_argument("--skip-unmapped", action="store_true")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("stats", help="accumulate change statistics from a pair file")
    p.add_argument("--pairs", required=True)
    p.add_argument("--accent", default=None)
    p.add_argument("--out", default="-")
    p.add_argument("--reduction-map", default=None, help="simplify both sides before counting")
    p.add_argument("--simplify", action="store_true", help="use the bundled reduction map")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("generate", help="write an augmented pronunciation corpus")
    p.add_argument("--stats", required=True)
    p.add_argument("--dict", required=True)
    p.add_argument("--n", type=int, default=10, help="variants per word")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-edits", type=int, default=2)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("detect", help="report which generalizations the statistics support")
    p.add_argument("--stats", required=True)
    p.add_argument("--features", default=None)
    p.add_argument("--min-evidence", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("compare", help="two-column rule comparison of two statistics files")
    p.add_argument("--stats-full", required=True)
    p.add_argument("--stats-simplified", required=True)
    p.add_argument("--features", default=None)
    p.add_argument("--min-evidence", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("align", help="print the edit script between two IPA words")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("split", help="word-keyed train/val/test split of an augmented corpus")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--ratio", default="80/10/10")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", default=None)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AccentKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
