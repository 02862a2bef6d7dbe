"""Command-line entry point: generate -> split -> score -> judge -> evaluate,
plus stats and validate. Runs are deterministic for a fixed seed and config;
every emitted file starts with a provenance header line."""

from __future__ import annotations

import argparse
import hashlib
import json
import shlex
import sys
from pathlib import Path

from . import __version__
from .corpus import load_corpus
from .dataset import (
    ALL_KINDS,
    SplitSpec,
    generate,
    read_pairs,
    split_pairs,
    stats,
    validate,
    write_pairs,
)
from .evaluate import build_report
from .judge import MODES, PromptSpec, ProviderConfig, judge_pairs, make_transport
from .metrics import METRIC_NAMES, build_shared_set, score_pair, tokenize_for_metrics

CRYSTAL_K = 500


def _config_hash(options: dict) -> str:
    blob = json.dumps(options, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:12]


_NON_SEMANTIC_OPTIONS = ("func", "config", "out", "workers", "max_inflight", "append")


def _meta(args, extra: dict | None = None) -> dict:
    relevant = {k: v for k, v in sorted(vars(args).items())
                if k not in _NON_SEMANTIC_OPTIONS
                and isinstance(v, (str, int, float, bool, type(None)))}
    meta = {"version": __version__, "seed": getattr(args, "seed", None),
            "config": _config_hash(relevant)}
    if extra:
        meta.update(extra)
    return meta


def _parse_ratios(text: str) -> tuple[float, float, float]:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 3:
        raise ValueError("ratios need three comma-separated fractions")
    return tuple(parts)  # type: ignore[return-value]


def _parse_list(text: str, allowed, label: str) -> tuple[str, ...]:
    if text == "all":
        return tuple(allowed)
    chosen = tuple(x.strip() for x in text.split(",") if x.strip())
    for item in chosen:
        if item not in allowed:
            raise ValueError(f"unknown {label} {item!r} (choose from {', '.join(allowed)})")
    return chosen


def _write_scores(path: Path, rows: list[dict], meta: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps({"_meta": meta}, sort_keys=True, ensure_ascii=False) + "\n")
        for row in rows:
            handle.write(json.dumps(row, sort_keys=True, ensure_ascii=False) + "\n")


def _read_scores(path: Path) -> dict[str, dict[str, float]]:
    scored: dict[str, dict[str, float]] = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            if "_meta" in row:
                continue
            scored.setdefault(row["scorer"], {})[row["pair_id"]] = row["score"]
    return scored


def _score_rows(pairs, corpus, metrics) -> list[dict]:
    shared = None
    if "crystalbleu" in metrics:
        shared = build_shared_set([tokenize_for_metrics(fn.source) for fn in corpus], k=CRYSTAL_K)
    rows = []
    for metric in metrics:
        for pair in pairs:
            score = score_pair(metric, pair.reference, pair.candidate, shared=shared)
            row = {"pair_id": pair.pair_id, "scorer": metric,
                   "score": round(score.value, 12)}
            if score.components:
                row["components"] = {k: round(v, 12) for k, v in sorted(score.components.items())}
            rows.append(row)
    return rows


def _judge_rows(pairs, args) -> list[dict]:
    config = ProviderConfig(provider_url=args.provider_url, model=args.model,
                            auth_token_env=args.auth_env)
    spec = PromptSpec(mode=args.mode)
    transport = make_transport(config)
    scorer = f"{config.scorer_name}[{spec.mode}]"
    verdicts = judge_pairs(pairs, spec, config, transport,
                           max_inflight=getattr(args, "max_inflight", 1))
    return [{"pair_id": pair.pair_id, "scorer": scorer,
             "score": round(verdicts[pair.pair_id].score, 12)} for pair in pairs]


def _resolve_harness(args) -> list[str] | None:
    if getattr(args, "harness_cmd", None):
        return shlex.split(args.harness_cmd)
    bundled = Path(__file__).resolve().parents[2] / "harness" / "src" / "exec_harness" / "runner.py"
    if bundled.exists():
        return [sys.executable, str(bundled)]
    return None


# --- subcommands --------------------------------------------------------------


def cmd_generate(args) -> int:
    corpus, report = load_corpus(args.corpus)
    print(report.summary(), file=sys.stderr)
    kinds = _parse_list(args.transforms, ALL_KINDS, "transform")
    pairs, tally = generate(corpus, kinds=kinds, seed=args.seed)
    print(tally.summary(), file=sys.stderr)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_pairs(out / "pairs.jsonl", pairs, meta=_meta(args))
    print(f"wrote {len(pairs)} pairs to {out / 'pairs.jsonl'}")
    return 0


def cmd_split(args) -> int:
    pairs, meta = read_pairs(args.pairs)
    spec = SplitSpec(ratios=_parse_ratios(args.ratios), seed=args.seed)
    pairs = split_pairs(pairs, spec)
    write_pairs(args.pairs, pairs, meta=_meta(args, {"generated": meta}))
    print(f"assigned splits for {len(pairs)} pairs")
    return 0


def cmd_stats(args) -> int:
    pairs, _ = read_pairs(args.pairs)
    table = stats(pairs)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "stats.json").write_text(
            json.dumps({"_meta": _meta(args)}, sort_keys=True) + "\n" + table.to_json())
    print(table.to_text(), end="")
    return 0


def cmd_score(args) -> int:
    corpus, _ = load_corpus(args.corpus)
    pairs, _ = read_pairs(args.pairs)
    if args.score_split != "all":
        pairs = [p for p in pairs if p.split == args.score_split]
    metrics = _parse_list(args.metrics, METRIC_NAMES, "metric")
    rows = _score_rows(pairs, corpus, metrics)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_scores(out / "scores.jsonl", rows, _meta(args))
    print(f"wrote {len(rows)} scores to {out / 'scores.jsonl'}")
    return 0


def cmd_judge(args) -> int:
    pairs, _ = read_pairs(args.pairs)
    if args.score_split != "all":
        pairs = [p for p in pairs if p.split == args.score_split]
    rows = _judge_rows(pairs, args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "scores.jsonl"
    if path.exists() and args.append:
        existing = path.read_text()
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(existing)
            for row in rows:
                handle.write(json.dumps(row, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        _write_scores(path, rows, _meta(args))
    print(f"wrote {len(rows)} judge scores to {path}")
    return 0


def cmd_evaluate(args) -> int:
    pairs, _ = read_pairs(args.pairs)
    scored = _read_scores(Path(args.scores))
    report = build_report(scored, pairs, split=args.score_split)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    meta_line = json.dumps({"_meta": _meta(args)}, sort_keys=True)
    (out / "report.json").write_text(meta_line + "\n" + report.to_json())
    header = f"# pairforge {__version__} seed={args.seed} config={_meta(args)['config']}\n"
    (out / "report.txt").write_text(header + report.to_text())
    print(report.to_text(), end="")
    return 0


def cmd_validate(args) -> int:
    corpus, _ = load_corpus(args.corpus)
    pairs, meta = read_pairs(args.pairs)
    harness = _resolve_harness(args)
    kept, verdicts = validate(pairs, corpus, harness, policy=args.policy,
                              timeout_s=args.timeout, workers=args.workers)
    dropped = len(pairs) - len(kept)
    by_status: dict[str, int] = {}
    for v in verdicts:
        by_status[v.status] = by_status.get(v.status, 0) + 1
    print(f"validated {len(pairs)} pairs: {by_status}; dropped {dropped}")
    if args.policy == "strict":
        write_pairs(args.pairs, kept, meta=_meta(args, {"generated": meta}))
    return 0


def cmd_all(args) -> int:
    corpus, report = load_corpus(args.corpus)
    print(report.summary(), file=sys.stderr)
    kinds = _parse_list(args.transforms, ALL_KINDS, "transform")
    pairs, tally = generate(corpus, kinds=kinds, seed=args.seed)
    print(tally.summary(), file=sys.stderr)
    pairs = split_pairs(pairs, SplitSpec(ratios=_parse_ratios(args.ratios), seed=args.seed))

    if args.validate != "off":
        harness = _resolve_harness(args)
        pairs, verdicts = validate(pairs, corpus, harness, policy=args.validate,
                                   timeout_s=args.timeout, workers=args.workers)
        print(f"validation kept {len(pairs)} pairs", file=sys.stderr)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_pairs(out / "pairs.jsonl", pairs, meta=_meta(args))

    table = stats(pairs)
    (out / "stats.json").write_text(
        json.dumps({"_meta": _meta(args)}, sort_keys=True) + "\n" + table.to_json())

    eval_pairs = [p for p in pairs if p.split == args.score_split] \
        if args.score_split != "all" else pairs
    metrics = _parse_list(args.metrics, METRIC_NAMES, "metric")
    rows = _score_rows(eval_pairs, corpus, metrics)
    if args.provider_url:
        rows.extend(_judge_rows(eval_pairs, args))
    _write_scores(out / "scores.jsonl", rows, _meta(args))

    scored: dict[str, dict[str, float]] = {}
    for row in rows:
        scored.setdefault(row["scorer"], {})[row["pair_id"]] = row["score"]
    report_doc = build_report(scored, eval_pairs, split=args.score_split)
    meta_line = json.dumps({"_meta": _meta(args)}, sort_keys=True)
    (out / "report.json").write_text(meta_line + "\n" + report_doc.to_json())
    header = f"# pairforge {__version__} seed={args.seed} config={_meta(args)['config']}\n"
    (out / "report.txt").write_text(header + report_doc.to_text())
    print(report_doc.to_text(), end="")
    return 0


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairforge",
        description="Forge equivalence-labelled code pairs and score similarity "
                    "metrics and LLM judges on telling them apart.")
    parser.add_argument("--config", help="JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default="out")
        return p

    p = add("generate", cmd_generate, "apply transformations to a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--transforms", default="all")

    p = add("split", cmd_split, "assign train/valid/test splits by function")
    p.add_argument("--pairs", required=True)
    p.add_argument("--ratios", default="0.60,0.16,0.24")

    p = add("stats", cmd_stats, "split and per-transformation count tables")
    p.add_argument("--pairs", required=True)
    p.set_defaults(out="")

    p = add("score", cmd_score, "run match-based metrics over pairs")
    p.add_argument("--corpus", required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--metrics", default="all")
    p.add_argument("--score-split", default="test", choices=("train", "valid", "test", "all"))

    p = add("judge", cmd_judge, "score pairs with an LLM judge (or mock)")
    p.add_argument("--pairs", required=True)
    p.add_argument("--provider-url", required=True)
    p.add_argument("--model", default="")
    p.add_argument("--mode", default="zero-shot", choices=MODES)
    p.add_argument("--auth-env", default="PAIRFORGE_AUTH_TOKEN")
    p.add_argument("--max-inflight", type=int, default=1)
    p.add_argument("--score-split", default="test", choices=("train", "valid", "test", "all"))
    p.add_argument("--append", action="store_true")

    p = add("evaluate", cmd_evaluate, "AP and per-variant AURC report")
    p.add_argument("--pairs", required=True)
    p.add_argument("--scores", required=True)
    p.add_argument("--score-split", default="test")

    p = add("validate", cmd_validate, "run candidates against their tests")
    p.add_argument("--corpus", required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--policy", default="warn", choices=("off", "warn", "strict"))
    p.add_argument("--harness-cmd", default="")
    p.add_argument("--timeout", type=float, default=5.0)
    p.add_argument("--workers", type=int, default=4)

    p = add("all", cmd_all, "full pipeline with one seed")
    p.add_argument("--corpus", required=True)
    p.add_argument("--transforms", default="all")
    p.add_argument("--ratios", default="0.60,0.16,0.24")
    p.add_argument("--metrics", default="all")
    p.add_argument("--score-split", default="test", choices=("train", "valid", "test", "all"))
    p.add_argument("--validate", default="off", choices=("off", "warn", "strict"))
    p.add_argument("--harness-cmd", default="")
    p.add_argument("--timeout", type=float, default=5.0)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--provider-url", default="")
    p.add_argument("--model", default="")
    p.add_argument("--mode", default="zero-shot", choices=MODES)
    p.add_argument("--auth-env", default="PAIRFORGE_AUTH_TOKEN")
    p.add_argument("--max-inflight", type=int, default=1)

    return parser


def _apply_config_file(argv: list[str]) -> list[str]:
    """JSON config supplies defaults; explicit flags win."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    path = argv[at + 1]
    options = json.loads(Path(path).read_text())
    injected: list[str] = []
    for key, value in sorted(options.items()):
        flag = "--" + key.replace("_", "-")
        if flag not in argv:
            injected.extend([flag, str(value)])
    head = argv[:at] + argv[at + 2:]
    return head[:1] + injected + head[1:] if head else injected


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config_file(argv)
    except (OSError, json.JSONDecodeError, IndexError) as exc:
        print(f"error: bad config file: {exc}", file=sys.stderr)
        return 2
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
