"""Average precision, recall curves, and AURC."""

import random

import pytest

from oracles import naive_average_precision
from pairforge.evaluate import (
    LabeledScores,
    NoPositives,
    NoPosSamples,
    aurc,
    average_precision,
    build_report,
    recall_curve,
)


def data(labels, scores):
    return LabeledScores(tuple(labels), tuple(scores))


class TestAveragePrecision:
    def test_perfect_ranking(self):
        assert average_precision(data([1, 0], [0.9, 0.1])) == 1.0

    def test_worked_example(self):
        assert average_precision(data([1, 0, 1], [0.8, 0.6, 0.4])) == pytest.approx(5 / 6, abs=1e-12)

    def test_all_positive(self):
        assert average_precision(data([1, 1, 1], [0.2, 0.9, 0.5])) == 1.0

    def test_no_positives(self):
        with pytest.raises(NoPositives):
            average_precision(data([0, 0], [0.5, 0.5]))

    def test_monotone_transform_invariance(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(2, 12)
            labels = [rng.randint(0, 1) for _ in range(n)]
            if sum(labels) == 0:
                labels[0] = 1
            scores = [round(rng.random(), 3) for _ in range(n)]
            base = average_precision(data(labels, scores))
            squashed = [s / 2 + 0.25 for s in scores]  # strictly increasing map
            assert average_precision(data(labels, squashed)) == pytest.approx(base, abs=1e-12)

    def test_oracle_equivalence_fuzz(self):
        rng = random.Random(1234)
        for _ in range(1000):
            n = rng.randint(1, 12)
            labels = [rng.randint(0, 1) for _ in range(n)]
            if sum(labels) == 0:
                labels[rng.randrange(n)] = 1
            scores = [round(rng.random(), 2) for _ in range(n)]  # ties likely
            got = average_precision(data(labels, scores))
            want = naive_average_precision(labels, scores)
            assert got == pytest.approx(want, abs=1e-12)


class TestRecallCurve:
    def test_single_pair(self):
        curve = recall_curve(data([1], [1.0]), pos_label=1)
        assert curve.thresholds == (0.0, 1.0)
        assert curve.recalls == (1.0, 1.0)

    def test_two_sa_pairs_worked_example(self):
        curve = recall_curve(data([0, 0], [0.1, 0.9]), pos_label=0)
        assert curve.thresholds == pytest.approx((0.0, 0.1, 0.9, 1.0), abs=1e-12)
        assert curve.recalls == (1.0, 1.0, 0.5, 0.0)

    def test_monotone_non_increasing(self):
        rng = random.Random(77)
        for _ in range(300):
            n = rng.randint(1, 15)
            labels = [rng.randint(0, 1) for _ in range(n)]
            pos = rng.randint(0, 1)
            if pos not in labels:
                labels[0] = pos
            scores = [round(rng.random(), 2) for _ in range(n)]
            curve = recall_curve(data(labels, scores), pos_label=pos)
            assert all(a >= b for a, b in zip(curve.recalls, curve.recalls[1:]))
            assert all(a < b for a, b in zip(curve.thresholds, curve.thresholds[1:]))

    def test_no_pos_samples(self):
        with pytest.raises(NoPosSamples):
            recall_curve(data([1, 1], [0.5, 0.6]), pos_label=0)


class TestAurc:
    def test_single_pair_is_half(self):
        area, degenerate = aurc(data([0], [0.05]), pos_label=0)
        assert area == 0.5 and degenerate

    def test_constant_scores_are_half(self):
        area, degenerate = aurc(data([1, 1, 1], [0.7, 0.7, 0.7]), pos_label=1)
        assert area == 0.5 and degenerate

    def test_all_ones_with_threshold_variety(self):
        area, degenerate = aurc(data([1, 1, 0], [1.0, 1.0, 0.3]), pos_label=1)
        assert area == 1.0 and not degenerate

    def test_two_sa_pair_worked_example(self):
        area, degenerate = aurc(data([0, 0], [0.1, 0.9]), pos_label=0)
        assert area == pytest.approx(0.725, abs=1e-12)
        assert not degenerate

    def test_raising_pos_score_lifts_recall_pointwise(self):
        # The trapezoid area itself is not monotone in single scores (moving
        # a score can merge thresholds and reshape chords), but the recall
        # curve it integrates is pointwise monotone.
        rng = random.Random(9)
        for _ in range(300):
            n = rng.randint(3, 10)
            scores = [round(rng.random(), 2) for _ in range(n)]
            labels = [1] * n
            i = rng.randrange(n)
            bumped = list(scores)
            bumped[i] = min(1.0, bumped[i] + rng.random() * (1 - bumped[i]))
            base = recall_curve(data(labels, scores), pos_label=1)
            new = recall_curve(data(labels, bumped), pos_label=1)
            for t in set(base.thresholds) | set(new.thresholds):
                r_base = sum(1 for s in scores if s >= t) / n
                r_new = sum(1 for s in bumped if s >= t) / n
                assert r_new >= r_base

    def test_range(self):
        rng = random.Random(31)
        for _ in range(300):
            n = rng.randint(1, 12)
            labels = [rng.randint(0, 1) for _ in range(n)]
            pos = rng.choice([0, 1])
            if pos not in labels:
                labels[0] = pos
            scores = [round(rng.random(), 2) for _ in range(n)]
            area, _ = aurc(data(labels, scores), pos_label=pos)
            assert 0.0 <= area <= 1.0


class _Pair:
    def __init__(self, pair_id, label, family, variant):
        self.pair_id = pair_id
        self.label = label
        self.family = family
        self.variant = variant


def _mini_pairs():
    pairs = []
    for i in range(4):
        pairs.append(_Pair(f"sp{i}", 1, "RV", "rename-naive"))
    for i in range(4):
        pairs.append(_Pair(f"sa{i}", 0, "AOM", "+→-"))
    pairs.append(_Pair("lone", 0, "IOM", "is not→is"))
    return pairs


class TestBuildReport:
    def test_perfect_scorer(self):
        pairs = _mini_pairs()
        jitter = {p.pair_id: 0.01 * i for i, p in enumerate(pairs)}
        scores = {p.pair_id: 0.9 * p.label + 0.05 * p.label * jitter[p.pair_id]
                  + (1 - p.label) * jitter[p.pair_id] * 0.5 for p in pairs}
        report = build_report({"oracle": scores}, pairs)
        assert report.ap_by_scorer["oracle"] == 1.0
        for row in report.variant_rows:
            if not row.degenerate:
                assert row.aurc_by_scorer["oracle"] > 0.5

    def test_constant_scorer_all_half(self):
        pairs = _mini_pairs()
        scores = {p.pair_id: 0.5 for p in pairs}
        report = build_report({"const": scores}, pairs)
        for row in report.variant_rows:
            assert row.aurc_by_scorer["const"] == 0.5
            assert "const" in row.degenerate_scorers

    def test_single_pair_variant_reports_fifty(self):
        pairs = _mini_pairs()
        scores = {p.pair_id: 0.1 + 0.05 * i for i, p in enumerate(pairs)}
        report = build_report({"m": scores}, pairs)
        lone = [r for r in report.variant_rows if r.variant == "is not→is"]
        assert len(lone) == 1
        assert lone[0].aurc_by_scorer["m"] == 0.5
        assert "m" in lone[0].degenerate_scorers
        assert lone[0].count == 1

    def test_unknown_pair_id(self):
        from pairforge.evaluate import UnknownPairId
        with pytest.raises(UnknownPairId):
            build_report({"m": {"ghost": 0.4}}, _mini_pairs())

    def test_counts_cross_foot(self):
        pairs = _mini_pairs()
        scores = {p.pair_id: 0.3 for p in pairs}
        report = build_report({"m": scores}, pairs)
        assert sum(r.count for r in report.variant_rows) == report.counts_by_scorer["m"]

    def test_text_and_json_render(self):
        pairs = _mini_pairs()
        scores = {p.pair_id: 0.2 + 0.1 * i for i, p in enumerate(pairs)}
        report = build_report({"m": scores}, pairs)
        text = report.to_text()
        assert "Average precision" in text and "AURC" in text
        import json
        doc = json.loads(report.to_json())
        assert set(doc) == {"split", "average_precision", "pair_counts", "aurc"}
        assert all("degenerate_for" in row for row in doc["aurc"])
