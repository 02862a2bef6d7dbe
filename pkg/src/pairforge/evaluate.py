"""Classification evaluation: average precision over the labelled pair set
and per-transformation-variant area under the recall curve."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class NoPositives(ValueError):
    pass


class NoPosSamples(ValueError):
    pass


class UnknownPairId(KeyError):
    pass


@dataclass(frozen=True)
class LabeledScores:
    labels: tuple[int, ...]
    scores: tuple[float, ...]
    pair_ids: tuple[str, ...] = ()
    variants: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.labels) != len(self.scores):
            raise ValueError("labels and scores must be parallel")
        if any(not 0.0 <= s <= 1.0 for s in self.scores):
            raise ValueError("scores must lie in [0, 1]")


@dataclass(frozen=True)
class RecallCurve:
    thresholds: tuple[float, ...]
    recalls: tuple[float, ...]


def average_precision(data: LabeledScores) -> float:
    """Prefix-scan AP: sort by score descending (stable on ties), accumulate
    (R_n - R_{n-1}) * P_n. Rank-based, so any strictly increasing transform
    of the scores leaves the value unchanged."""
    total_pos = sum(data.labels)
    if total_pos == 0:
        raise NoPositives("average precision needs at least one positive pair")
    order = sorted(range(len(data.labels)), key=lambda i: (-data.scores[i], i))
    ap = 0.0
    true_pos = 0
    prev_recall = 0.0
    for rank, idx in enumerate(order, start=1):
        if data.labels[idx] == 1:
            true_pos += 1
        recall = true_pos / total_pos
        ap += (recall - prev_recall) * (true_pos / rank)
        prev_recall = recall
    return ap


def recall_curve(data: LabeledScores, pos_label: int) -> RecallCurve:
    """Recall of the positive class against every decision threshold.

    Scores are similarity-oriented; for pos_label 0 they are complemented
    (s' = 1 - s) so that higher adjusted scores mean 'more positive'.
    Thresholds are the distinct adjusted scores with 0.0 and 1.0 added.
    """
    adjusted = _adjusted_scores(data, pos_label)
    pos = [s for s, y in zip(adjusted, data.labels) if y == pos_label]
    if not pos:
        raise NoPosSamples(f"no samples with label {pos_label}")
    thresholds = sorted({0.0, 1.0, *adjusted})
    recalls = tuple(sum(1 for s in pos if s >= t) / len(pos) for t in thresholds)
    return RecallCurve(tuple(thresholds), recalls)


def aurc(data: LabeledScores, pos_label: int) -> tuple[float, bool]:
    """(area, degenerate): trapezoidal area under the recall curve.

    When every adjusted score in the set is identical (single sample or a
    constant scorer) no ordering exists; the area is pinned at 0.5 and
    flagged degenerate.
    """
    adjusted = _adjusted_scores(data, pos_label)
    if not any(y == pos_label for y in data.labels):
        raise NoPosSamples(f"no samples with label {pos_label}")
    if len(set(adjusted)) <= 1:
        return 0.5, True
    curve = recall_curve(data, pos_label)
    area = 0.0
    for i in range(1, len(curve.thresholds)):
        width = curve.thresholds[i] - curve.thresholds[i - 1]
        area += width * (curve.recalls[i] + curve.recalls[i - 1]) / 2
    return area, False


def _adjusted_scores(data: LabeledScores, pos_label: int) -> list[float]:
    if pos_label == 1:
        return list(data.scores)
    return [1.0 - s for s in data.scores]


# --- report ------------------------------------------------------------------


@dataclass
class VariantRow:
    family: str
    variant: str
    label: int
    count: int
    aurc_by_scorer: dict[str, float] = field(default_factory=dict)
    degenerate_scorers: set[str] = field(default_factory=set)

    @property
    def degenerate(self) -> bool:
        return bool(self.degenerate_scorers)


@dataclass
class EvalReport:
    ap_by_scorer: dict[str, float]
    counts_by_scorer: dict[str, int]
    variant_rows: list[VariantRow]
    split: str = "test"

    def to_json(self) -> str:
        doc = {
            "split": self.split,
            "average_precision": {k: round(v * 100, 2) for k, v in sorted(self.ap_by_scorer.items())},
            "pair_counts": dict(sorted(self.counts_by_scorer.items())),
            "aurc": [
                {
                    "type": "SP" if row.label == 1 else "SA",
                    "family": row.family,
                    "variant": row.variant,
                    "count": row.count,
                    "degenerate_for": sorted(row.degenerate_scorers),
                    "by_scorer": {k: round(v * 100, 2) for k, v in sorted(row.aurc_by_scorer.items())},
                }
                for row in self.variant_rows
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        scorers = sorted(self.ap_by_scorer)
        lines = ["== Average precision (x100) =="]
        width = max([len(s) for s in scorers] + [8])
        lines.append(f"{'scorer':<{width}}  {'AP':>7}  {'pairs':>6}")
        for scorer in scorers:
            lines.append(f"{scorer:<{width}}  {self.ap_by_scorer[scorer] * 100:>7.2f}"
                         f"  {self.counts_by_scorer.get(scorer, 0):>6}")
        lines.append("")
        lines.append("== AURC per transformation variant (x100) ==")
        head = f"{'type':<4} {'family':<6} {'variant':<14} {'n':>5}"
        for scorer in scorers:
            head += f"  {scorer:>{max(len(scorer), 6)}}"
        lines.append(head)
        for row in self.variant_rows:
            kind = "SP" if row.label == 1 else "SA"
            line = f"{kind:<4} {row.family:<6} {row.variant:<14} {row.count:>5}"
            for scorer in scorers:
                cell_width = max(len(scorer), 6)
                value = row.aurc_by_scorer.get(scorer)
                cell = f"{value * 100:.2f}" if value is not None else "-"
                if scorer in row.degenerate_scorers and value is not None:
                    cell += "*"
                line += f"  {cell:>{cell_width}}"
            lines.append(line)
        if any(row.degenerate for row in self.variant_rows):
            lines.append("")
            lines.append("* degenerate variant: no score ordering, pinned at 50.00")
        return "\n".join(lines) + "\n"


def build_report(scored: dict[str, dict[str, float]], pairs: list, split: str = "test") -> EvalReport:
    """scored: scorer -> {pair_id -> score}; pairs supply labels and variants.

    AP runs over all scored pairs per scorer; AURC runs per variant with the
    variant's own label as positive class (score complementation for SA).
    """
    by_id = {p.pair_id: p for p in pairs}
    ap_by_scorer: dict[str, float] = {}
    counts: dict[str, int] = {}
    variant_rows: dict[tuple[str, str], VariantRow] = {}

    for scorer, scores in sorted(scored.items()):
        ids, labels, values, variants, families = [], [], [], [], []
        for pair_id, score in scores.items():
            pair = by_id.get(pair_id)
            if pair is None:
                raise UnknownPairId(pair_id)
            ids.append(pair_id)
            labels.append(pair.label)
            values.append(score)
            variants.append(pair.variant)
            families.append(pair.family)
        data = LabeledScores(tuple(labels), tuple(values), tuple(ids), tuple(variants))
        ap_by_scorer[scorer] = average_precision(data)
        counts[scorer] = len(ids)

        groups: dict[tuple[str, str], list[int]] = {}
        for i, (family, variant) in enumerate(zip(families, variants)):
            groups.setdefault((family, variant), []).append(i)
        for (family, variant), indices in groups.items():
            label = labels[indices[0]]
            subset = LabeledScores(
                tuple(labels[i] for i in indices),
                tuple(values[i] for i in indices),
            )
            area, degenerate = aurc(subset, pos_label=label)
            row = variant_rows.setdefault(
                (family, variant),
                VariantRow(family=family, variant=variant, label=label, count=len(indices)),
            )
            row.aurc_by_scorer[scorer] = area
            if degenerate:
                row.degenerate_scorers.add(scorer)

    ordered = sorted(variant_rows.values(), key=lambda r: (r.label, r.family, r.variant))
    return EvalReport(ap_by_scorer, counts, ordered, split=split)
