"""Independent brute-force reference implementations used only by tests.

These deliberately avoid the package's code paths: plain loops, explicit
n-gram lists, exhaustive searches.
"""

import itertools
import math


def grams(seq, n):
    return [tuple(seq[i:i + n]) for i in range(len(seq) - n + 1)]


def clipped(ref_grams, cand_grams):
    hits = 0
    pool = list(ref_grams)
    for g in cand_grams:
        if g in pool:
            pool.remove(g)
            hits += 1
    return hits


def naive_bleu(ref, cand, max_n=4):
    if len(cand) == 0:
        return 0.0
    logs = []
    for n in range(1, max_n + 1):
        cg = grams(cand, n)
        rg = grams(ref, n)
        hits = clipped(rg, cg)
        if n == 1:
            if len(cg) == 0:
                p = 1.0 if len(rg) == 0 else 0.0
            else:
                p = hits / len(cg)
            if p == 0.0:
                return 0.0
        elif hits == 0:
            p = (hits + 1) / (len(cg) + 1)
        else:
            p = hits / len(cg)
        logs.append(math.log(p))
    bp = 1.0 if len(cand) >= len(ref) else math.exp(1 - len(ref) / len(cand))
    return bp * math.exp(sum(logs) / len(logs))


def naive_rouge_n(ref, cand, n):
    rg, cg = grams(ref, n), grams(cand, n)
    if not rg or not cg:
        return 0.0
    hits = clipped(rg, cg)
    if hits == 0:
        return 0.0
    p, r = hits / len(cg), hits / len(rg)
    return 2 * p * r / (p + r)


def naive_lcs(a, b):
    if not a or not b:
        return 0
    if a[-1] == b[-1]:
        return 1 + naive_lcs(a[:-1], b[:-1])
    return max(naive_lcs(a[:-1], b), naive_lcs(a, b[:-1]))


def naive_rouge_l(ref, cand):
    if not ref or not cand:
        return 0.0
    hits = naive_lcs(tuple(ref), tuple(cand))
    if hits == 0:
        return 0.0
    p, r = hits / len(cand), hits / len(ref)
    return 2 * p * r / (p + r)


def naive_chrf(ref, cand, max_n=6, beta=2.0):
    ref = " ".join(ref.split())
    cand = " ".join(cand.split())
    ps, rs = [], []
    for n in range(1, max_n + 1):
        rg = grams(ref, n)
        cg = grams(cand, n)
        if not rg and not cg:
            continue
        hits = clipped(rg, cg)
        ps.append(hits / len(cg) if cg else 0.0)
        rs.append(hits / len(rg) if rg else 0.0)
    if not ps:
        return 0.0
    p = sum(ps) / len(ps)
    r = sum(rs) / len(rs)
    if p == 0 and r == 0:
        return 0.0
    return (1 + beta * beta) * p * r / (beta * beta * p + r)


def exhaustive_meteor(ref, cand):
    """Search every maximal exact-match alignment; min-chunk wins."""
    if not ref or not cand:
        return 0.0
    options = []
    for tok in cand:
        options.append([j for j, r in enumerate(ref) if r == tok])

    candidates = []

    def extend(i, used, pairs):
        if i == len(cand):
            candidates.append(list(pairs))
            return
        for j in options[i]:
            if j not in used:
                pairs.append((i, j))
                extend(i + 1, used | {j}, pairs)
                pairs.pop()
        extend(i + 1, used, pairs)

    extend(0, frozenset(), [])
    max_m = max(len(p) for p in candidates)
    full = [p for p in candidates if len(p) == max_m]
    if max_m == 0:
        return 0.0

    def chunks(pairs):
        count, prev = 0, None
        for i, j in pairs:
            if prev is None or i != prev[0] + 1 or j != prev[1] + 1:
                count += 1
            prev = (i, j)
        return count

    min_chunks = min(chunks(p) for p in full)
    p = max_m / len(cand)
    r = max_m / len(ref)
    f_mean = 10 * p * r / (r + 9 * p)
    penalty = 0.5 * (min_chunks / max_m) ** 3
    return f_mean * (1 - penalty)


def naive_crystal_bleu(ref, cand, shared, max_n=4):
    """BLEU over gram lists with shared grams deleted."""
    if not cand:
        return 0.0
    if not shared or not any(shared.values()):
        return naive_bleu(ref, cand, max_n)
    logs = []
    flen_ref = flen_cand = 0
    first = True
    for n in range(1, max_n + 1):
        drop = shared.get(n, set())
        rg = [g for g in grams(ref, n) if g not in drop]
        cg = [g for g in grams(cand, n) if g not in drop]
        if first:
            flen_ref, flen_cand = len(rg), len(cg)
            first = False
        hits = clipped(rg, cg)
        if n == 1:
            if len(cg) == 0:
                return 1.0 if len(rg) == 0 else 0.0
            p = hits / len(cg)
            if p == 0.0:
                return 0.0
        elif hits == 0:
            p = (hits + 1) / (len(cg) + 1)
        else:
            p = hits / len(cg)
        logs.append(math.log(p))
    bp = 1.0 if flen_cand >= flen_ref else math.exp(1 - flen_ref / max(flen_cand, 1))
    return bp * math.exp(sum(logs) / len(logs))


def naive_average_precision(labels, scores):
    """Prefix-scan AP with stable ordering on ties."""
    order = sorted(range(len(labels)), key=lambda i: (-scores[i], i))
    total_pos = sum(labels)
    ap = 0.0
    tp = 0
    prev_recall = 0.0
    for rank, idx in enumerate(order, start=1):
        if labels[idx] == 1:
            tp += 1
        recall = tp / total_pos
        precision = tp / rank
        ap += (recall - prev_recall) * precision
        prev_recall = recall
    return ap
