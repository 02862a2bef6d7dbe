"""Match-based reference metrics, all returning similarity in [0, 1]."""

from __future__ import annotations

from .codebleu import codebleu
from .overlap import (
    MetricScore,
    bleu,
    build_shared_set,
    chrf,
    crystal_bleu,
    meteor,
    ngram_counts,
    rouge,
    weighted_bleu,
)
from .tokenizer import tokenize_for_metrics, tokenize_with_flag

METRIC_NAMES = ("rouge1", "rouge2", "rougeL", "meteor", "chrf", "bleu",
                "crystalbleu", "codebleu")


def score_pair(metric: str, reference: str, candidate: str,
               shared: dict | None = None) -> MetricScore:
    """Score one (reference, candidate) source pair with a named metric."""
    if metric == "chrf":
        return chrf(reference, candidate)
    if metric == "codebleu":
        return codebleu(reference, candidate)
    ref_tokens, _ = tokenize_with_flag(reference)
    cand_tokens, _ = tokenize_with_flag(candidate)
    if metric == "rouge1":
        return rouge(ref_tokens, cand_tokens, 1)
    if metric == "rouge2":
        return rouge(ref_tokens, cand_tokens, 2)
    if metric == "rougeL":
        return rouge(ref_tokens, cand_tokens, "L")
    if metric == "meteor":
        return meteor(ref_tokens, cand_tokens)
    if metric == "bleu":
        return bleu(ref_tokens, cand_tokens)
    if metric == "crystalbleu":
        return crystal_bleu(ref_tokens, cand_tokens, shared)
    raise ValueError(f"unknown metric {metric!r}")


__all__ = [
    "METRIC_NAMES", "MetricScore", "bleu", "build_shared_set", "chrf",
    "codebleu", "crystal_bleu", "meteor", "ngram_counts", "rouge",
    "score_pair", "tokenize_for_metrics", "tokenize_with_flag", "weighted_bleu",
]
