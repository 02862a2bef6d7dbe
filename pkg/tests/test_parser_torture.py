"""Round-trip and transform robustness over awkward-but-real code patterns."""

import random

import pytest

from pairforge.subject import lex, parse, render, structurally_equal
from pairforge.transforms import (
    Applied,
    convert_loop,
    insert_dead_code,
    misuse_operator,
    rename_variable,
    swap_comparison_operands,
)

CASES = {
    "tabs": "def f(n):\n\tif n > 0:\n\t\treturn n\n\treturn 0\n",
    "semicolon_chain": "def f(a):\n    x = 1; y = 2; return x + y + a\n",
    "lambda_key": "def f(xs):\n    return sorted(xs, key=lambda t: t[1])\n",
    "nested_lambda": "def f():\n    g = lambda x: lambda y: x + y\n    return g(1)(2)\n",
    "import_alias": "import heapq as hq\ndef f(nums, n):\n    return hq.nlargest(n, nums)\n",
    "raw_string": "import re\ndef f(text):\n    return re.findall(r'[A-Z][a-z]*', text)\n",
    "fmt_percent": "def f(x):\n    return '%.2f' % x\n",
    "fmt_method": "def f(x):\n    return '{:05d}'.format(x)\n",
    "fstring": "def f(x):\n    return f'{x:>5}'\n",
    "global_stmt": "c = 0\ndef f():\n    global c\n    c += 1\n    return c\n",
    "try_else_finally": ("def f(x):\n    try:\n        y = 1 / x\n    except ZeroDivisionError:\n"
                         "        y = 0\n    else:\n        y += 1\n    finally:\n        pass\n    return y\n"),
    "while_else": "def f(n):\n    i = 0\n    while i < n:\n        i += 1\n    else:\n        i = -1\n    return i\n",
    "for_else": ("def f(xs):\n    for x in xs:\n        if x > 3:\n            break\n"
                 "    else:\n        return None\n    return x\n"),
    "class_method": "class Pt:\n    def __init__(self, x):\n        self.x = x\ndef f(a):\n    return Pt(a).x\n",
    "decorator": "from functools import lru_cache\n@lru_cache(maxsize=None)\ndef f(n):\n    return n * 2\n",
    "with_stmt": "def f(path):\n    with open(path) as h:\n        return h.read()\n",
    "raise_stmt": "def f(x):\n    if x < 0:\n        raise ValueError('neg')\n    return x\n",
    "del_stmt": "def f(d, k):\n    del d[k]\n    return d\n",
    "ternary_nested": "def f(a, b, c):\n    return a if a > b else (b if b > c else c)\n",
    "dict_items": "def f(d):\n    return [k for k, v in d.items() if v > 0]\n",
    "set_ops": "def f(a, b):\n    return set(a) & set(b)\n",
    "star_args": "def f(*args, **kw):\n    return len(args) + len(kw)\n",
    "default_mutable": "def f(x, acc=[]):\n    acc.append(x)\n    return acc\n",
    "multiline_call": "def f(a, b):\n    return max(\n        a,\n        b,\n    )\n",
    "backslash_continue": "def f(a, b):\n    total = a + \\\n        b\n    return total\n",
    "chained_compare": "def f(a, b, c):\n    return a < b < c\n",
    "unary_chain": "def f(x):\n    return --x + +x - ~x\n",
    "pow_unary": "def f(x):\n    return -x ** 2 + 2 ** -1\n",
    "string_concat_implicit": "def f():\n    return 'ab' 'cd'\n",
    "bytes_literal": "def f():\n    return b'\\x00ab'\n",
    "triple_docstring": 'def f(x):\n    """Doc.\n\n    More.\n    """\n    return x\n',
    "nested_comp": "def f(grid):\n    return [x for row in grid for x in row if x]\n",
    "dict_comp_tuple": "def f(xs):\n    return {(a, b): a * b for a, b in xs}\n",
    "genexp_arg": "def f(xs):\n    return sum(x * x for x in xs)\n",
    "not_in": "def f(x, xs):\n    return x not in xs\n",
    "is_not": "def f(a):\n    return a is not None\n",
    "aug_all": ("def f(x):\n    x //= 2\n    x **= 2\n    x %= 7\n    x <<= 1\n"
                "    x >>= 1\n    x &= 3\n    x |= 4\n    x ^= 5\n    return x\n"),
    "ann_assign": "def f():\n    total: int = 0\n    return total\n",
    "empty_return": "def f(x):\n    if x:\n        return\n    return 1\n",
    "kwarg_call": "def f(x):\n    print(x, end='')\n    return x\n",
    "matmul": "def f(a, b):\n    return a @ b\n",
    "slice_step_expr": "def f(s):\n    return s[len(s) - 1::-1]\n",
    "multi_target": "def f():\n    a = b = 5\n    return a + b\n",
    "starred_unpack": "def f(xs):\n    a, *rest = xs\n    return rest\n",
    "conditional_in_comp": "def f(xs):\n    return [x if x > 0 else -x for x in xs]\n",
    "number_zoo": "def f():\n    return 0x1F + 0o17 + 0b101 + 1_000 + 1.5e-3 + 3j\n",
    "return_annotation": "def f(xs: list) -> int:\n    return len(xs)\n",
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_round_trip_and_valid_python(name):
    src = CASES[name]
    mod = parse(src)
    once = render(mod)
    again = parse(once)
    assert structurally_equal(mod, again)
    assert render(again) == once
    compile(once, "<rendered>", "exec")  # the renderer must emit real Python


@pytest.mark.parametrize("name", sorted(CASES))
def test_transforms_never_crash_and_outputs_compile(name):
    src = CASES[name]
    outcomes = [
        rename_variable(src, "naive"),
        rename_variable(src, "rn", random.Random(1)),
        rename_variable(src, "cb"),
        insert_dead_code(src, random.Random(1)),
        swap_comparison_operands(src),
        convert_loop(src),
    ]
    outcomes.extend(misuse_operator(src, fam) for fam in ("AOM", "BOM", "COM", "IOM", "LOM"))
    for outcome in outcomes:
        if isinstance(outcome, Applied):
            lex(outcome.candidate)
            compile(outcome.candidate, "<candidate>", "exec")
