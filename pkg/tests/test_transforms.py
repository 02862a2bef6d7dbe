"""Golden and property tests for the SP / SA transformations.

Golden expectations live under tests/golden/ and mirror the published
worked examples; comparisons are token-level (whitespace-insensitive) for
re-rendered outputs and byte-level for single-token splices.
"""

import itertools
import random
from pathlib import Path

import pytest

import paper_programs as P
from pairforge.subject import code_texts, parse, render
from pairforge.transforms import (
    Applied,
    NotApplicable,
    convert_loop,
    insert_dead_code,
    misuse_operator,
    rename_variable,
    select_dissimilar,
    swap_comparison_operands,
)

GOLDEN = Path(__file__).parent / "golden"

# seeds found once by searching the seeded template space; frozen here
DCI_BOX_SEED = 5
DCI_SIXPANEL_SEED = 10774
RN_SIXPANEL_SEED = 7


def golden(name: str) -> str:
    return (GOLDEN / name).read_text()


def assert_tokens_equal(actual: str, expected: str):
    assert code_texts(actual) == code_texts(expected)


class TestGoldenTransforms:
    def test_dci_box(self):
        out = insert_dead_code(P.DCI_BOX, random.Random(DCI_BOX_SEED))
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("box_dci.txt"))

    def test_loop_box(self):
        out = convert_loop(P.LOOP_BOX)
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("box_loop.txt"))

    def test_sixpanel_dci(self):
        out = insert_dead_code(P.BINARY_SEARCH, random.Random(DCI_SIXPANEL_SEED))
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("sixpanel_dci.txt"))

    def test_sixpanel_loop_panel_shows_no_change(self):
        # the published panel equals the normalized original: there is no for
        # loop and the while is not counter-style, so nothing converts
        out = convert_loop(P.BINARY_SEARCH)
        assert out == NotApplicable("loop-shape")
        assert code_texts(render(parse(P.BINARY_SEARCH))) == code_texts(golden("sixpanel_os.txt").replace("last >= first", "first <= last"))

    def test_sixpanel_operand_swap(self):
        out = swap_comparison_operands(P.BINARY_SEARCH)
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("sixpanel_os.txt"))

    def test_sixpanel_rename_cb_default_provider(self):
        out = rename_variable(P.BINARY_SEARCH, "cb")
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("sixpanel_rv_cb.txt"))

    def test_sixpanel_rename_naive(self):
        out = rename_variable(P.BINARY_SEARCH, "naive")
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("sixpanel_rv_naive.txt"))

    def test_sixpanel_rename_rn(self):
        from pairforge.subject import fresh_name
        out = rename_variable(P.BINARY_SEARCH, "rn", random.Random(RN_SIXPANEL_SEED))
        assert isinstance(out, Applied)
        name = fresh_name(P.BINARY_SEARCH, "", random.Random(RN_SIXPANEL_SEED))
        assert_tokens_equal(out.candidate, golden("sixpanel_rv_rn.txt").replace("{RN}", name))

    def test_forwhile_easy(self):
        out = convert_loop(P.SOLVE)
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("forwhile_easy.txt"))

    def test_forwhile_hard(self):
        out = convert_loop(P.ASCII_VALUE)
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("forwhile_hard.txt"))

    def test_os_easy(self):
        out = swap_comparison_operands(P.FIND_ZERO)
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("os_easy.txt"))

    def test_rv_cb_easy_injected_provider(self):
        out = rename_variable(P.FIND_ZERO, "cb", provider=lambda src, var: "center")
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("rv_cb_easy.txt"))

    def test_rv_naive_easy(self):
        out = rename_variable(P.TEXT_MATCH, "naive")
        assert isinstance(out, Applied)
        assert_tokens_equal(out.candidate, golden("rv_naive_easy.txt"))

    def test_aom_minus_to_plus(self):
        out = misuse_operator(P.BINOMIAL, "AOM")
        assert isinstance(out, Applied)
        assert out.variant == "-→+"
        assert out.candidate == P.BINOMIAL.replace("binomial_Coeff(n-1,k-1)", "binomial_Coeff(n+1,k-1)")

    def test_bom_true_to_false(self):
        out = misuse_operator(P.TEST_DISTINCT, "BOM")
        assert isinstance(out, Applied)
        assert out.variant == "True→False"
        assert out.candidate == P.TEST_DISTINCT.replace("return True", "return False")
        assert out.candidate.endswith("return False;\n")  # formatting untouched

    def test_iom_is_to_is_not(self):
        out = misuse_operator(P.SORT_MIXED, "IOM")
        assert isinstance(out, Applied)
        assert out.variant == "is→is not"
        assert out.candidate == P.SORT_MIXED.replace("type(i) is int", "type(i) is not int")

    def test_aom_plus_to_minus_augmented(self):
        out = misuse_operator(P.MAXIMUM_SUM, "AOM")
        assert isinstance(out, Applied)
        assert out.variant == "+→-"
        assert out.candidate == P.MAXIMUM_SUM.replace("sum+= y", "sum-= y")

    def test_aom_times_to_div(self):
        out = misuse_operator(P.FIND_VOLUME, "AOM")
        assert isinstance(out, Applied)
        assert out.variant == "*→/"
        assert out.candidate == P.FIND_VOLUME.replace("l * b", "l / b")

    def test_lom_and_to_or(self):
        out = misuse_operator(P.CHECK_STRING, "LOM")
        assert isinstance(out, Applied)
        assert out.variant == "and→or"
        assert out.candidate == P.CHECK_STRING.replace("flag_l and flag_n", "flag_l or flag_n")

    def test_lom_or_to_and(self):
        out = misuse_operator(P.COUNT_CHAR_POS, "LOM")
        assert isinstance(out, Applied)
        assert out.variant == "or→and"
        assert out.candidate == P.COUNT_CHAR_POS.replace(") or\n", ") and\n")


ALL_PROGRAMS = [P.BINARY_SEARCH, P.SOLVE, P.ASCII_VALUE, P.FIND_ZERO, P.TRIANGLE_AREA,
                P.TEXT_MATCH, P.BINOMIAL, P.MAXIMUM_SUM, P.FIND_VOLUME, P.TEST_DISTINCT,
                P.SORT_MIXED, P.CHECK_STRING, P.COUNT_CHAR_POS, P.COUNT_WAYS]


class TestRenameInvariants:
    def test_no_variables(self):
        assert rename_variable("def f(): return 1", "naive") == NotApplicable("no-variables")

    def test_occurrence_counts_preserved(self):
        from pairforge.subject import bindings, most_frequent_variable, lex
        for src in ALL_PROGRAMS:
            table = bindings(src)
            target = most_frequent_variable(table)
            if target is None:
                continue
            out = rename_variable(src, "naive")
            assert isinstance(out, Applied)
            ids = [t.text for t in lex(out.candidate) if t.kind == "identifier"]
            assert target not in ids
            assert ids.count("VAR_0") >= table[target].count

    def test_provider_failure(self):
        def boom(src, var):
            raise RuntimeError("no model")
        out = rename_variable(P.BINARY_SEARCH, "cb", provider=boom)
        assert out.__class__.__name__ == "Failed"

    def test_collision_bumps_with_2(self):
        out = rename_variable(P.TRIANGLE_AREA, "cb", provider=lambda s, v: "b")
        assert isinstance(out, Applied)
        assert "b2" in out.candidate


class TestOperandSwapInvariants:
    def test_involution_on_normalized_sources(self):
        for src in ALL_PROGRAMS:
            normalized = render(parse(src))
            first = swap_comparison_operands(normalized)
            if not isinstance(first, Applied):
                continue
            second = swap_comparison_operands(first.candidate)
            assert isinstance(second, Applied)
            assert code_texts(second.candidate) == code_texts(normalized)

    def test_exactly_one_comparison_differs(self):
        for src in ALL_PROGRAMS:
            normalized = render(parse(src))
            out = swap_comparison_operands(normalized)
            if not isinstance(out, Applied):
                continue
            before = code_texts(normalized)
            after = code_texts(out.candidate)
            assert len(before) == len(after)

    def test_symmetric_operator_still_applies(self):
        out = swap_comparison_operands("def f(x):\n    return x == x\n")
        assert isinstance(out, Applied)
        assert "x == x" in out.candidate

    def test_no_comparison(self):
        assert swap_comparison_operands("def f(x):\n    return x + 1\n") == \
            NotApplicable("no-comparison")

    def test_chained_only(self):
        out = swap_comparison_operands("def f(x, y, z):\n    return x < y < z\n")
        assert out == NotApplicable("chained")

    def test_membership_not_a_candidate(self):
        out = swap_comparison_operands("def f(x, s):\n    return x in s\n")
        assert out == NotApplicable("no-comparison")


class TestDeadCodeInvariants:
    def test_deterministic(self):
        a = insert_dead_code(P.BINARY_SEARCH, random.Random(99))
        b = insert_dead_code(P.BINARY_SEARCH, random.Random(99))
        assert a == b

    def test_removing_block_restores_tokens(self):
        for src in ALL_PROGRAMS:
            for seed in range(6):
                out = insert_dead_code(src, random.Random(seed))
                assert isinstance(out, Applied)
                base = code_texts(render(parse(src)))
                got = code_texts(out.candidate)
                assert len(got) > len(base)
                assert _is_subsequence(base, got)

    def test_inserted_guard_statically_unreachable(self):
        import ast as pyast
        for seed in range(30):
            out = insert_dead_code(P.BINARY_SEARCH, random.Random(seed))
            assert isinstance(out, Applied)
            # candidate must still be valid Python and behave identically:
            # executing both variants of a pure function is covered by the
            # harness tests; here we check the guard shapes statically
            tree = pyast.parse(out.candidate)
            assert any(kind in out.detail for kind in
                       ("if-false", "while-false", "for-range0", "self-compare", "unused constant"))

    def test_empty_module(self):
        assert insert_dead_code("", random.Random(0)) == NotApplicable("no-body")


class TestLoopInvariants:
    def test_no_loop(self):
        assert convert_loop("def f(x): return x\n") == NotApplicable("no-loop")

    def test_continue_hazard(self):
        src = "def f(xs):\n    for x in xs:\n        if x < 0:\n            continue\n        print(x)\n"
        assert convert_loop(src) == NotApplicable("continue-hazard")

    def test_nested_continue_is_fine(self):
        src = ("def f(xs):\n    for x in xs:\n        while x > 0:\n"
               "            if x == 2:\n                continue\n            x -= 1\n")
        out = convert_loop(src)
        assert isinstance(out, Applied)

    def test_while_to_for_counter_idiom(self):
        src = "def f(n):\n    total = 0\n    i = 0\n    while i < n:\n        total += i\n        i += 1\n    return total\n"
        out = convert_loop(src)
        assert isinstance(out, Applied)
        assert "for i in range(n):" in out.candidate
        assert "i += 1" not in out.candidate

    def test_while_to_for_le_bound_and_step(self):
        src = "def f(n):\n    i = 2\n    while i <= 10:\n        n += i\n        i += 3\n    return n\n"
        out = convert_loop(src)
        assert isinstance(out, Applied)
        assert "for i in range(2, 11, 3):" in out.candidate

    def test_roundtrip_for_while_for(self):
        once = convert_loop(P.LOOP_BOX)
        assert isinstance(once, Applied)
        back = convert_loop(once.candidate)
        assert isinstance(back, Applied)
        assert code_texts(back.candidate) == code_texts(render(parse(P.LOOP_BOX)))

    def test_range_loop_preserves_pieces(self):
        src = "def f(a, b):\n    out = 0\n    for k in range(a, b, 2):\n        out += k\n    return out\n"
        out = convert_loop(src)
        assert isinstance(out, Applied)
        for piece in ("k = a", "while k < b:", "k += 2"):
            assert piece in out.candidate

    def test_non_sequence_iter_rejected(self):
        src = "def f(d):\n    for k, v in d.items():\n        print(k, v)\n"
        assert convert_loop(src) == NotApplicable("loop-shape")


class TestMisuseInvariants:
    def test_single_token_difference(self):
        for src, family in itertools.product(ALL_PROGRAMS, ("AOM", "BOM", "COM", "IOM", "LOM")):
            out = misuse_operator(src, family)
            if not isinstance(out, Applied):
                continue
            before = code_texts(src)
            after = code_texts(out.candidate)
            if family == "IOM":
                before = _fuse_is_not(before)
                after = _fuse_is_not(after)
            assert len(before) == len(after)
            diffs = [i for i, (x, y) in enumerate(zip(before, after)) if x != y]
            assert len(diffs) == 1, (family, diffs)

    def test_involution(self):
        for src, family in itertools.product(ALL_PROGRAMS, ("AOM", "BOM", "COM", "IOM", "LOM")):
            out = misuse_operator(src, family)
            if not isinstance(out, Applied):
                continue
            back = misuse_operator(out.candidate, family)
            assert isinstance(back, Applied)
            assert back.candidate == src

    def test_unary_minus_excluded(self):
        out = misuse_operator("def f():\n    return -5\n", "AOM")
        assert out == NotApplicable("no-aom-operator")

    def test_string_contents_untouched(self):
        src = "def f():\n    return 'a + b' + 'c'\n"
        out = misuse_operator(src, "AOM")
        assert isinstance(out, Applied)
        assert "'a + b'" in out.candidate
        assert "'a + b' - 'c'" in out.candidate

    def test_outputs_lex(self):
        from pairforge.subject import lex
        for src, family in itertools.product(ALL_PROGRAMS, ("AOM", "BOM", "COM", "IOM", "LOM")):
            out = misuse_operator(src, family)
            if isinstance(out, Applied):
                lex(out.candidate)

    def test_dead_site_flagged(self):
        src = ("def f(x):\n    if False:\n        x = x + 1\n    return x\n")
        out = misuse_operator(src, "AOM")
        assert isinstance(out, Applied)
        assert out.dead_site

    def test_live_site_not_flagged(self):
        out = misuse_operator(P.BINOMIAL, "AOM")
        assert isinstance(out, Applied)
        assert not out.dead_site


class TestDissimilarSelection:
    def _corpus(self, n):
        from pairforge.corpus import SourceFunction
        return [SourceFunction(task_id=str(i), source=f"def f{i}():\n    return {i}\n")
                for i in range(n)]

    def test_five_from_large_corpus(self):
        corpus = self._corpus(200)
        picks = select_dissimilar(corpus, "17", random.Random(1))
        assert len(picks) == 5
        ids = [p.task_id for p in picks]
        assert len(set(ids)) == 5
        assert "17" not in ids

    def test_capped_by_corpus_size(self):
        corpus = self._corpus(3)
        picks = select_dissimilar(corpus, "0", random.Random(42))
        assert len(picks) == 2

    def test_singleton_corpus(self):
        corpus = self._corpus(1)
        assert select_dissimilar(corpus, "0", random.Random(0)) == []

    def test_deterministic(self):
        corpus = self._corpus(50)
        a = [p.task_id for p in select_dissimilar(corpus, "3", random.Random(42))]
        b = [p.task_id for p in select_dissimilar(corpus, "3", random.Random(42))]
        assert a == b


def _is_subsequence(needle: list[str], haystack: list[str]) -> bool:
    it = iter(haystack)
    return all(tok in it for tok in needle)


def _fuse_is_not(tokens: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(tokens):
        if tokens[i] == "is" and i + 1 < len(tokens) and tokens[i + 1] == "not":
            out.append("is not")
            i += 2
        else:
            out.append(tokens[i])
            i += 1
    return out


class TestRemoteSuggestionProvider:
    def test_wire_shape(self, monkeypatch):
        import pairforge.transforms.sp as sp_module
        captured = {}

        class FakeResponse:
            def raise_for_status(self):
                pass
            def json(self):
                return {"suggestion": "first"}

        def fake_post(url, json=None, timeout=None):
            captured.update({"url": url, "payload": json})
            return FakeResponse()

        import requests
        monkeypatch.setattr(requests, "post", fake_post)
        from pairforge.transforms import remote_suggestion_provider
        provider = remote_suggestion_provider("http://namer.local/suggest")
        out = rename_variable(P.BINARY_SEARCH, "cb", provider=provider)
        assert isinstance(out, Applied)
        assert "first2" in out.candidate
        assert captured["url"] == "http://namer.local/suggest"
        assert captured["payload"] == {"source": P.BINARY_SEARCH, "variable": "mid"}

    def test_remote_failure_is_failed_outcome(self, monkeypatch):
        import requests

        def fake_post(url, json=None, timeout=None):
            raise requests.ConnectionError("refused")

        monkeypatch.setattr(requests, "post", fake_post)
        from pairforge.transforms import remote_suggestion_provider
        provider = remote_suggestion_provider("http://namer.local/suggest")
        out = rename_variable(P.BINARY_SEARCH, "cb", provider=provider)
        assert out.__class__.__name__ == "Failed"


class TestLoopKeywordCounts:
    def test_for_to_while_swaps_exactly_one_loop_keyword(self):
        from pairforge.subject import lex
        for src in (P.LOOP_BOX, P.SOLVE, P.ASCII_VALUE):
            out = convert_loop(src)
            assert isinstance(out, Applied)
            def count(code, word):
                return sum(1 for t in lex(code) if t.kind == "keyword" and t.text == word)
            assert count(src, "for") - count(out.candidate, "for") == 1
            assert count(out.candidate, "while") - count(src, "while") == 1


class TestDirectedVariants:
    EQUILATERAL = (
        "def check_equilateral(x,y,z):\n"
        "    if x == y == z:\n"
        "        return True\n"
        "    else:\n"
        "        return False\n"
    )

    def test_bom_false_to_true_directed(self):
        # the directed search targets the first False even though a True
        # occurs earlier in the function
        out = misuse_operator(self.EQUILATERAL, "BOM", "False→True")
        assert isinstance(out, Applied)
        assert out.candidate == self.EQUILATERAL.replace("return False", "return True")

    def test_iom_is_not_to_is_directed(self):
        src = "def f(a):\n    return a is not None\n"
        out = misuse_operator(src, "IOM", "is not→is")
        assert isinstance(out, Applied)
        assert out.candidate == "def f(a):\n    return a is None\n"
        assert out.variant == "is not→is"

    def test_directed_miss_is_not_applicable(self):
        out = misuse_operator("def f(a, b):\n    return a + b\n", "AOM", "-→+")
        assert out == NotApplicable("no-aom-operator")

    def test_wrong_direction_for_family_raises(self):
        with pytest.raises(ValueError):
            misuse_operator("x = 1", "BOM", "and→or")

    @pytest.mark.parametrize("family,reason", [
        ("AOM", "no-aom-operator"), ("BOM", "no-bom-operator"),
        ("COM", "no-com-operator"), ("IOM", "no-iom-operator"),
        ("LOM", "no-lom-operator"),
    ])
    def test_not_applicable_reason_codes(self, family, reason):
        out = misuse_operator("def f(x):\n    return x\n", family)
        assert out == NotApplicable(reason)


def test_cb_provider_invalid_identifier_fails():
    out = rename_variable(P.BINARY_SEARCH, "cb", provider=lambda s, v: "not an ident!")
    assert out.__class__.__name__ == "Failed"
