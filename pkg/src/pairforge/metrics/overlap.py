"""N-gram and alignment based similarity metrics.

All scores are in [0, 1] with the reference as first argument. BLEU uses
add-one smoothing only on zero-match orders (n >= 2) so identical inputs
score exactly 1.0.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MetricScore:
    value: float
    components: dict[str, float] = field(default_factory=dict)


def ngram_counts(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _clipped_overlap(ref: Counter, cand: Counter) -> int:
    return sum(min(count, ref[gram]) for gram, count in cand.items() if gram in ref)


# --- BLEU --------------------------------------------------------------------


def bleu(reference: list[str], candidate: list[str], max_n: int = 4) -> MetricScore:
    if not candidate:
        return MetricScore(0.0)
    return _bleu_from_counts(
        [ngram_counts(reference, n) for n in range(1, max_n + 1)],
        [ngram_counts(candidate, n) for n in range(1, max_n + 1)],
        ref_len=len(reference), cand_len=len(candidate),
    )


def _bleu_from_counts(ref_counts: list[Counter], cand_counts: list[Counter],
                      ref_len: int, cand_len: int,
                      weighted_unigram: tuple[Counter, Counter] | None = None) -> MetricScore:
    log_sum = 0.0
    for order, (ref_c, cand_c) in enumerate(zip(ref_counts, cand_counts), start=1):
        total = sum(cand_c.values())
        matches = _clipped_overlap(ref_c, cand_c)
        if order == 1 and weighted_unigram is not None:
            _, weights = weighted_unigram
            total = sum(count * weights[tok[0]] for tok, count in cand_c.items())
            matches = sum(min(count, ref_c[tok]) * weights[tok[0]]
                          for tok, count in cand_c.items() if tok in ref_c)
        if order == 1:
            if total == 0:
                precision = 1.0 if sum(ref_c.values()) == 0 else 0.0
            else:
                precision = matches / total
            if precision == 0.0:
                return MetricScore(0.0)
        elif matches == 0:
            precision = (matches + 1) / (total + 1)
        else:
            precision = matches / total
        log_sum += math.log(precision)
    brevity = 1.0 if cand_len >= ref_len else math.exp(1 - ref_len / max(cand_len, 1))
    return MetricScore(min(1.0, brevity * math.exp(log_sum / len(ref_counts))))


# --- ROUGE -------------------------------------------------------------------


def rouge(reference: list[str], candidate: list[str], mode) -> MetricScore:
    """mode 1 / 2 -> clipped n-gram F1; mode 'L' -> LCS F1."""
    if not reference or not candidate:
        return MetricScore(0.0)
    if mode == "L":
        hits = _lcs_length(reference, candidate)
        denom_p, denom_r = len(candidate), len(reference)
    else:
        n = int(mode)
        ref_c, cand_c = ngram_counts(reference, n), ngram_counts(candidate, n)
        hits = _clipped_overlap(ref_c, cand_c)
        denom_p, denom_r = sum(cand_c.values()), sum(ref_c.values())
    if denom_p == 0 or denom_r == 0 or hits == 0:
        return MetricScore(0.0)
    precision, recall = hits / denom_p, hits / denom_r
    return MetricScore(2 * precision * recall / (precision + recall))


def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b, start=1):
            current.append(prev[j - 1] + 1 if x == y else max(prev[j], current[j - 1]))
        prev = current
    return prev[-1]


# --- ChrF --------------------------------------------------------------------


def chrf(reference: str, candidate: str, max_n: int = 6, beta: float = 2.0) -> MetricScore:
    ref = " ".join(reference.split())
    cand = " ".join(candidate.split())
    precisions, recalls = [], []
    for n in range(1, max_n + 1):
        ref_c = Counter(ref[i:i + n] for i in range(len(ref) - n + 1))
        cand_c = Counter(cand[i:i + n] for i in range(len(cand) - n + 1))
        if not ref_c and not cand_c:
            continue
        overlap = _clipped_overlap(ref_c, cand_c)
        precisions.append(overlap / sum(cand_c.values()) if cand_c else 0.0)
        recalls.append(overlap / sum(ref_c.values()) if ref_c else 0.0)
    if not precisions:
        return MetricScore(0.0)
    precision = sum(precisions) / len(precisions)
    recall = sum(recalls) / len(recalls)
    if precision == 0.0 and recall == 0.0:
        return MetricScore(0.0)
    b2 = beta * beta
    return MetricScore((1 + b2) * precision * recall / (b2 * precision + recall))


# --- METEOR ------------------------------------------------------------------


def meteor(reference: list[str], candidate: list[str]) -> MetricScore:
    """Exact-match variant: recall-weighted harmonic mean with a chunk
    fragmentation penalty. Alignment prefers continuing the previous run,
    which minimizes chunks on duplicate-free inputs."""
    if not reference or not candidate:
        return MetricScore(0.0)
    pairs = _align(candidate, reference)
    matches = len(pairs)
    if matches == 0:
        return MetricScore(0.0)
    precision = matches / len(candidate)
    recall = matches / len(reference)
    f_mean = 10 * precision * recall / (recall + 9 * precision)
    chunks = _chunk_count(pairs)
    penalty = 0.5 * (chunks / matches) ** 3
    return MetricScore(f_mean * (1 - penalty))


def _align(candidate: list[str], reference: list[str]) -> list[tuple[int, int]]:
    used = [False] * len(reference)
    pairs: list[tuple[int, int]] = []
    prev_ref = None
    for i, tok in enumerate(candidate):
        chosen = None
        if (prev_ref is not None and prev_ref + 1 < len(reference)
                and not used[prev_ref + 1] and reference[prev_ref + 1] == tok
                and pairs and pairs[-1][0] == i - 1):
            chosen = prev_ref + 1
        else:
            for j, ref_tok in enumerate(reference):
                if not used[j] and ref_tok == tok:
                    chosen = j
                    break
        if chosen is not None:
            used[chosen] = True
            pairs.append((i, chosen))
            prev_ref = chosen
    return pairs


def _chunk_count(pairs: list[tuple[int, int]]) -> int:
    chunks = 0
    prev = None
    for i, j in pairs:
        if prev is None or i != prev[0] + 1 or j != prev[1] + 1:
            chunks += 1
        prev = (i, j)
    return chunks


# --- CrystalBLEU -------------------------------------------------------------


def build_shared_set(corpus: list[list[str]], k: int = 500, max_n: int = 4) -> dict[int, set[tuple]]:
    """The k most frequent n-grams per order across the corpus; ties break
    lexicographically."""
    shared: dict[int, set[tuple]] = {}
    for n in range(1, max_n + 1):
        totals: Counter = Counter()
        for tokens in corpus:
            totals.update(ngram_counts(tokens, n))
        ranked = sorted(totals.items(), key=lambda item: (-item[1], item[0]))
        shared[n] = {gram for gram, _ in ranked[:k]}
    return shared


def crystal_bleu(reference: list[str], candidate: list[str],
                 shared: dict[int, set[tuple]] | None, max_n: int = 4) -> MetricScore:
    """BLEU with trivially shared n-grams removed from both sides' counts;
    the brevity penalty runs on the filtered unigram totals."""
    if not candidate:
        return MetricScore(0.0)
    if not shared or not any(shared.values()):
        return bleu(reference, candidate, max_n)
    ref_counts, cand_counts = [], []
    for n in range(1, max_n + 1):
        drop = shared.get(n, set())
        ref_c = Counter({g: c for g, c in ngram_counts(reference, n).items() if g not in drop})
        cand_c = Counter({g: c for g, c in ngram_counts(candidate, n).items() if g not in drop})
        ref_counts.append(ref_c)
        cand_counts.append(cand_c)
    ref_len = sum(ref_counts[0].values())
    cand_len = sum(cand_counts[0].values())
    if cand_len == 0:
        return MetricScore(1.0 if ref_len == 0 else 0.0)
    return _bleu_from_counts(ref_counts, cand_counts, ref_len=ref_len, cand_len=cand_len)


def weighted_bleu(reference: list[str], candidate: list[str],
                  keyword_weights: dict[str, float], max_n: int = 4) -> MetricScore:
    """BLEU with weighted unigram counting (keywords boosted)."""
    if not candidate:
        return MetricScore(0.0)
    from collections import defaultdict
    weights = defaultdict(lambda: 1.0, keyword_weights)
    return _bleu_from_counts(
        [ngram_counts(reference, n) for n in range(1, max_n + 1)],
        [ngram_counts(candidate, n) for n in range(1, max_n + 1)],
        ref_len=len(reference), cand_len=len(candidate),
        weighted_unigram=(ngram_counts(reference, 1), weights),
    )
