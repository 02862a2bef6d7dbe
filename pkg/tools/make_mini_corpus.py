#!/usr/bin/env python3
"""Build tests/data/mini_corpus.jsonl: 20 small functions with assertions.

Every assertion is executed here before it is written, so the corpus is
self-verified. The functions deliberately cover every transformation family,
including one fixture whose first arithmetic operator sits in dead code.
"""

import json
from pathlib import Path

TASKS = [
    ("add_numbers", '''def add_numbers(a, b):
    return a + b
''', ["assert add_numbers(2, 3) == 5",
      "assert add_numbers(-1, 1) == 0",
      "assert add_numbers(10, 20) == 30"]),

    ("is_even", '''def is_even(n):
    if n % 2 == 0:
        return True
    return False
''', ["assert is_even(4) == True",
      "assert is_even(7) == False",
      "assert is_even(0) == True"]),

    ("find_max", '''def find_max(xs):
    m = xs[0]
    for x in xs:
        if x > m:
            m = x
    return m
''', ["assert find_max([1, 5, 3]) == 5",
      "assert find_max([-2, -7]) == -2",
      "assert find_max([9]) == 9"]),

    ("count_up", '''def count_up(n):
    total = 0
    i = 0
    while i < n:
        total += i
        i += 1
    return total
''', ["assert count_up(5) == 10",
      "assert count_up(0) == 0",
      "assert count_up(1) == 0"]),

    ("sum_range", '''def sum_range(n):
    s = 0
    for i in range(n):
        s += i
    return s
''', ["assert sum_range(5) == 10",
      "assert sum_range(0) == 0",
      "assert sum_range(3) == 3"]),

    ("is_missing", '''def is_missing(x):
    if x is None:
        return True
    return len(x) == 0
''', ["assert is_missing(None) == True",
      "assert is_missing([]) == True",
      "assert is_missing([1]) == False"]),

    ("both_positive", '''def both_positive(a, b):
    return a > 0 and b > 0
''', ["assert both_positive(1, 2) == True",
      "assert both_positive(1, -2) == False",
      "assert both_positive(-1, 2) == False"]),

    ("either_negative", '''def either_negative(a, b):
    return a < 0 or b < 0
''', ["assert either_negative(-1, 2) == True",
      "assert either_negative(1, 2) == False",
      "assert either_negative(1, -2) == True"]),

    ("clamp", '''def clamp(x, lo, hi):
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x
''', ["assert clamp(5, 0, 10) == 5",
      "assert clamp(-5, 0, 10) == 0",
      "assert clamp(15, 0, 10) == 10"]),

    ("scale_values", '''def scale_values(xs, k):
    return [x * k for x in xs]
''', ["assert scale_values([1, 2], 3) == [3, 6]",
      "assert scale_values([], 3) == []",
      "assert scale_values([2], 0) == [0]"]),

    ("halve", '''def halve(n):
    return n / 2
''', ["assert halve(8) == 4.0",
      "assert halve(5) == 2.5",
      "assert halve(0) == 0.0"]),

    ("with_dead_branch", '''def with_dead_branch(n):
    if False:
        n = n * 3
    return n + 1
''', ["assert with_dead_branch(1) == 2",
      "assert with_dead_branch(-1) == 0",
      "assert with_dead_branch(10) == 11"]),

    ("abs_diff", '''def abs_diff(a, b):
    if a > b:
        return a - b
    return b - a
''', ["assert abs_diff(7, 3) == 4",
      "assert abs_diff(3, 7) == 4",
      "assert abs_diff(5, 5) == 0"]),

    ("repeat_string", '''def repeat_string(s, n):
    out = ""
    i = 0
    while i < n:
        out += s
        i += 1
    return out
''', ["assert repeat_string('ab', 2) == 'abab'",
      "assert repeat_string('x', 0) == ''",
      "assert repeat_string('q', 3) == 'qqq'"]),

    ("last_element", '''def last_element(xs):
    return xs[len(xs) - 1]
''', ["assert last_element([1, 2, 3]) == 3",
      "assert last_element(['a']) == 'a'",
      "assert last_element([5, 4]) == 4"]),

    ("contains_char", '''def contains_char(s, c):
    for ch in s:
        if ch == c:
            return True
    return False
''', ["assert contains_char('hello', 'e') == True",
      "assert contains_char('hello', 'z') == False",
      "assert contains_char('', 'a') == False"]),

    ("square_area", '''def square_area(side):
    return side * side
''', ["assert square_area(3) == 9",
      "assert square_area(0) == 0",
      "assert square_area(5) == 25"]),

    ("min_of_three", '''def min_of_three(a, b, c):
    m = a
    if b < m:
        m = b
    if c < m:
        m = c
    return m
''', ["assert min_of_three(3, 1, 2) == 1",
      "assert min_of_three(1, 2, 3) == 1",
      "assert min_of_three(3, 2, 1) == 1"]),

    ("is_same_object", '''def is_same_object(a, b):
    return a is b
''', ["assert is_same_object(is_same_object, is_same_object) == True",
      "assert is_same_object([], []) == False",
      "assert is_same_object(None, None) == True"]),

    ("vowel_count", '''def vowel_count(s):
    n = 0
    for ch in s:
        if ch in "aeiou":
            n += 1
    return n
''', ["assert vowel_count('hello') == 2",
      "assert vowel_count('xyz') == 0",
      "assert vowel_count('aeiou') == 5"]),
]


def main():
    out_path = Path(__file__).resolve().parents[1] / "tests" / "data" / "mini_corpus.jsonl"
    records = []
    for i, (name, code, tests) in enumerate(TASKS, start=1):
        namespace = {}
        exec(code, namespace)
        for test in tests:
            exec(test, namespace)
        records.append({"task_id": 9000 + i, "code": code, "test_list": tests,
                        "text": f"Write a function {name}."})
    with open(out_path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
    print(f"wrote {len(records)} tasks to {out_path}")


if __name__ == "__main__":
    main()
