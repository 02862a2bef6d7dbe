"""Whole-corpus invariants: every bundled function must round-trip the
lexer byte-for-byte, re-parse to a structurally identical tree, render
idempotently, and produce parseable transform outputs."""

import json
import random
from pathlib import Path

import pytest

from pairforge.corpus import load_corpus
from pairforge.dataset import generate
from pairforge.judge import PromptSpec, ProviderConfig, judge_pairs
from pairforge.metrics import build_shared_set, tokenize_for_metrics
from pairforge.subject import (
    bindings, code_texts, fresh_name, lex, parse, render, structurally_equal,
)
from pairforge.subject.analysis import Exhausted

ROOT = Path(__file__).parents[1]
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def corpus():
    functions, report = load_corpus(ROOT / "data" / "sample_corpus.jsonl")
    assert not report.skipped
    return functions


def test_lexer_byte_round_trip_whole_corpus(corpus):
    for fn in corpus:
        pos = 0
        for tok in lex(fn.source):
            assert fn.source[tok.start:tok.end] == tok.text
            assert tok.start >= pos
            pos = tok.end


def test_parse_render_round_trip_whole_corpus(corpus):
    for fn in corpus:
        mod = parse(fn.source)
        once = render(mod)
        again = parse(once)
        assert structurally_equal(mod, again), fn.task_id
        assert render(again) == once, fn.task_id


def test_bindings_soundness_whole_corpus(corpus):
    for fn in corpus:
        id_spans = {(t.start, t.end): t.text for t in lex(fn.source) if t.kind == "identifier"}
        for name, info in bindings(fn.source).items():
            assert info.count == len(info.spans)
            for span in info.spans:
                assert id_spans.get(span) == name, (fn.task_id, name)


def test_every_applied_candidate_parses(corpus):
    rng = random.Random(13)
    subset = rng.sample(corpus, 60)
    pairs, tally = generate(subset, seed=13)
    assert sum(tally.failed.values()) == 0
    for pair in pairs:
        parse(pair.reference)
        if pair.label == 1:
            parse(pair.candidate)
        else:
            lex(pair.candidate)  # altering flips must still lex


def test_dead_code_outputs_carry_a_dead_region(corpus):
    from pairforge.transforms import Applied, insert_dead_code
    from pairforge.transforms.base import dead_regions
    rng = random.Random(200)
    for fn in rng.sample(corpus, 40):
        out = insert_dead_code(fn.source, random.Random(rng.randrange(10000)))
        assert isinstance(out, Applied)
        assert dead_regions(parse(out.candidate)), out.detail


def test_rename_preserves_occurrence_count(corpus):
    from pairforge.subject import most_frequent_variable
    from pairforge.transforms import Applied, rename_variable
    rng = random.Random(77)
    for fn in rng.sample(corpus, 60):
        table = bindings(fn.source)
        target = most_frequent_variable(table)
        if target is None:
            continue
        out = rename_variable(fn.source, "naive")
        assert isinstance(out, Applied)
        new_ids = [t.text for t in lex(out.candidate) if t.kind == "identifier"]
        assert target not in new_ids
        assert new_ids.count("VAR_0") == table[target].count


def test_fresh_name_exhaustion():
    crowded = "\n".join(f"VAR_{i} = {i}" for i in range(1000))
    with pytest.raises(Exhausted):
        fresh_name(crowded, "VAR_")


def test_shared_set_top_ngrams_frozen(corpus):
    shared = build_shared_set([tokenize_for_metrics(fn.source) for fn in corpus], k=1)
    assert shared[1] == {(":",)}
    assert shared[2] == {(")", ":")}


def test_token_overlap_scores_golden():
    mini, _ = load_corpus(Path(__file__).parent / "data" / "mini_corpus.jsonl")
    pairs, _ = generate(mini[:6], kinds=("rename-naive", "AOM", "operand-swap"), seed=4)
    config = ProviderConfig(provider_url="mock:token-overlap")
    verdicts = judge_pairs(pairs, PromptSpec(), config)
    rows = [{"pair_id": p.pair_id, "variant": p.variant,
             "score": round(verdicts[p.pair_id].score, 12)} for p in pairs]
    frozen = json.loads((GOLDEN / "token_overlap_scores.json").read_text())
    assert rows == frozen


def test_rendered_code_behaves_identically(corpus):
    # the normalizing renderer must not change semantics: the re-rendered
    # function still passes the task's own assertions
    for fn in corpus:
        rendered = render(parse(fn.source))
        namespace: dict = {}
        exec(compile(rendered, f"<{fn.task_id}>", "exec"), namespace)
        for test in fn.tests:
            exec(compile(test, f"<{fn.task_id} test>", "exec"), namespace)
