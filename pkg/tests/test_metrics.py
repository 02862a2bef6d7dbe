"""Match-based metric identities, worked examples, and oracle equivalence."""

import math
import random

import pytest

import paper_programs as P
from oracles import (
    exhaustive_meteor,
    naive_bleu,
    naive_chrf,
    naive_crystal_bleu,
    naive_rouge_l,
    naive_rouge_n,
)
from pairforge.metrics import (
    METRIC_NAMES,
    bleu,
    build_shared_set,
    chrf,
    codebleu,
    crystal_bleu,
    meteor,
    rouge,
    score_pair,
    tokenize_for_metrics,
    tokenize_with_flag,
)
from pairforge.transforms import Applied, rename_variable

TOKENS = "def f ( x ) : return x + 1".split()


class TestTokenizer:
    def test_simple(self):
        assert tokenize_for_metrics("a + b") == ["a", "+", "b"]

    def test_comment_dropped(self):
        assert tokenize_for_metrics("x=5 # c") == ["x", "=", "5"]

    def test_text_match_token_count(self):
        # hand enumeration over the rename-variable easy figure: 29 tokens
        assert len(tokenize_for_metrics(P.TEXT_MATCH)) == 29

    def test_string_single_token(self):
        assert tokenize_for_metrics("s = 'a b c'") == ["s", "=", "'a b c'"]

    def test_degraded_fallback(self):
        tokens, degraded = tokenize_with_flag("def f(:\n  $$$")
        assert degraded
        assert tokens == ["def", "f(:", "$$$"]


class TestIdentity:
    def test_exact_one(self):
        assert bleu(TOKENS, TOKENS).value == 1.0
        for mode in (1, 2, "L"):
            assert rouge(TOKENS, TOKENS, mode).value == 1.0
        assert chrf("a = b + 1", "a = b + 1").value == 1.0
        score = codebleu(P.BINARY_SEARCH, P.BINARY_SEARCH)
        assert score.value == 1.0
        assert all(v == 1.0 for v in score.components.values())

    def test_meteor_identity_formula(self):
        m = len(TOKENS)
        assert meteor(TOKENS, TOKENS).value == pytest.approx(1 - 0.5 / m ** 3, abs=1e-15)

    def test_crystal_identity_with_nonshared_remaining(self):
        shared = {1: {("x",)}, 2: set(), 3: set(), 4: set()}
        assert crystal_bleu(TOKENS, TOKENS, shared).value == 1.0


class TestBleu:
    def test_disjoint_zero(self):
        assert bleu(list("abcd"), list("efgh")).value == 0.0

    def test_worked_example(self):
        # p1=p2=p3=1, p4 smoothed to 1, BP = exp(1 - 4/3)
        assert bleu(list("abcd"), list("abc")).value == pytest.approx(math.exp(-1 / 3), abs=1e-12)

    def test_empty_candidate(self):
        assert bleu(TOKENS, []).value == 0.0


class TestRouge:
    def test_reversal(self):
        ref, cand = list("abc"), list("cba")
        assert rouge(ref, cand, 1).value == 1.0
        assert rouge(ref, cand, 2).value == 0.0
        assert rouge(ref, cand, "L").value == pytest.approx(1 / 3)

    def test_empty(self):
        assert rouge([], TOKENS, 1).value == 0.0
        assert rouge(TOKENS, [], "L").value == 0.0

    def test_f1_symmetry(self):
        rng = random.Random(3)
        for _ in range(200):
            a = [rng.choice("xyz") for _ in range(rng.randint(1, 8))]
            b = [rng.choice("xyz") for _ in range(rng.randint(1, 8))]
            assert rouge(a, b, 1).value == pytest.approx(rouge(b, a, 1).value, abs=1e-12)


class TestChrf:
    def test_empty_candidate(self):
        assert chrf("abc", "").value == 0.0

    def test_worked_example(self):
        assert chrf("abcd", "abce").value == pytest.approx(0.4791666666666667, abs=1e-12)
        assert chrf("abcd", "abce").value == pytest.approx(naive_chrf("abcd", "abce"), abs=1e-12)

    def test_whitespace_collapsed(self):
        assert chrf("a  b", "a b").value == 1.0


class TestMeteor:
    def test_disjoint(self):
        assert meteor(list("abcd"), list("efgh")).value == 0.0

    def test_worked_example_matches_exhaustive(self):
        ref, cand = list("abcd"), list("acbd")
        assert meteor(ref, cand).value == pytest.approx(0.5, abs=1e-12)
        assert meteor(ref, cand).value == pytest.approx(exhaustive_meteor(ref, cand), abs=1e-12)


class TestCrystalBleu:
    def test_reduces_to_bleu_when_empty(self):
        rng = random.Random(11)
        for _ in range(100):
            a = [rng.choice("pqrs") for _ in range(rng.randint(1, 9))]
            b = [rng.choice("pqrs") for _ in range(rng.randint(1, 9))]
            assert crystal_bleu(a, b, None).value == bleu(a, b).value
            assert crystal_bleu(a, b, {}).value == bleu(a, b).value

    def test_filtered_oracle_on_rename_pair(self):
        out = rename_variable(P.TEXT_MATCH, "naive")
        assert isinstance(out, Applied)
        corpus = [tokenize_for_metrics(src) for src in
                  (P.BINARY_SEARCH, P.SOLVE, P.TEXT_MATCH, P.TRIANGLE_AREA, P.COUNT_WAYS)]
        shared = build_shared_set(corpus, k=20)
        ref = tokenize_for_metrics(P.TEXT_MATCH)
        cand = tokenize_for_metrics(out.candidate)
        got = crystal_bleu(ref, cand, shared).value
        want = naive_crystal_bleu(ref, cand, shared)
        assert got == pytest.approx(want, abs=1e-9)


class TestSharedSet:
    def test_repeated_token(self):
        shared = build_shared_set([["a"] * 10], k=5)
        assert shared[1] == {("a",)}
        assert shared[2] == {("a", "a")}

    def test_k_zero(self):
        shared = build_shared_set([TOKENS], k=0)
        assert all(not s for s in shared.values())

    def test_deterministic_tie_break(self):
        corpus = [["b", "a"], ["a", "b"]]
        shared = build_shared_set(corpus, k=1)
        assert shared[1] == {("a",)}


class TestCodeBleu:
    def test_rename_invariance(self):
        out = rename_variable(P.BINARY_SEARCH, "naive")
        assert isinstance(out, Applied)
        score = codebleu(P.BINARY_SEARCH, out.candidate)
        assert score.components["ast_match"] == 1.0
        assert score.components["dataflow_match"] == 1.0
        assert score.components["bleu"] < 1.0

    def test_candidate_parse_failure(self):
        score = codebleu(P.BINARY_SEARCH, "def f(:")
        assert score.components["ast_match"] == 0.0
        assert score.components["dataflow_match"] == 0.0
        assert score.components.get("degraded") == 1.0

    def test_vacuous_dataflow(self):
        # neither side assigns anything: component is 1.0 by convention
        score = codebleu("def f(x):\n    return x\n", "def g(y):\n    return y\n")
        assert score.components["dataflow_match"] == 1.0

    def test_ref_edgeless_candidate_with_edges(self):
        score = codebleu("def f(x):\n    return x\n", "def g(y):\n    z = y\n    return z\n")
        assert score.components["dataflow_match"] == 0.0

    def test_bad_weights(self):
        with pytest.raises(ValueError):
            codebleu("x = 1", "x = 1", weights=(0.5, 0.5, 0.5, 0.5))


class TestOracleEquivalence:
    def test_bleu_chrf_rouge_vs_oracles(self):
        rng = random.Random(20240917)
        alphabet = ["a", "b", "c", "x", "y"]
        for _ in range(500):
            ref = [rng.choice(alphabet) for _ in range(rng.randint(0, 10))]
            cand = [rng.choice(alphabet) for _ in range(rng.randint(0, 10))]
            if cand:
                assert bleu(ref, cand).value == pytest.approx(naive_bleu(ref, cand), abs=1e-9)
            assert rouge(ref, cand, 1).value == pytest.approx(naive_rouge_n(ref, cand, 1), abs=1e-9)
            assert rouge(ref, cand, 2).value == pytest.approx(naive_rouge_n(ref, cand, 2), abs=1e-9)
            assert rouge(ref, cand, "L").value == pytest.approx(naive_rouge_l(ref, cand), abs=1e-9)
            assert chrf("".join(ref), "".join(cand)).value == pytest.approx(
                naive_chrf("".join(ref), "".join(cand)), abs=1e-9)


class TestRangeProperty:
    def test_all_metrics_within_unit_interval(self):
        rng = random.Random(7)
        vocab = ["x", "y", "+", "(", ")", "1", "return", "if"]
        shared = build_shared_set([[rng.choice(vocab) for _ in range(20)]], k=3)
        for _ in range(1000):
            ref = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            cand = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            values = [
                bleu(ref, cand).value,
                rouge(ref, cand, 1).value,
                rouge(ref, cand, 2).value,
                rouge(ref, cand, "L").value,
                meteor(ref, cand).value,
                chrf(" ".join(ref), " ".join(cand)).value,
                crystal_bleu(ref, cand, shared).value,
            ]
            assert all(0.0 <= v <= 1.0 for v in values), values


class TestScorePair:
    def test_all_registered_metrics_run(self):
        for name in METRIC_NAMES:
            score = score_pair(name, P.TEXT_MATCH, P.TEXT_MATCH)
            assert score.value == pytest.approx(1.0, abs=1e-2) or name == "meteor"

    def test_unknown(self):
        with pytest.raises(ValueError):
            score_pair("bleurt", "x", "y")
