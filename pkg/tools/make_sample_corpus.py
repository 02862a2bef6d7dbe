#!/usr/bin/env python3
"""Build data/sample_corpus.jsonl: a few hundred small single-function tasks
in the MBPP record schema (task_id, text, code, test_list).

The corpus is synthetic but hand-shaped: entry-level math, list, string, and
integer-sequence tasks of roughly 3-15 lines, heavy on explicit loops,
branches, and comparisons. Assertions are generated by executing each
function on fixed inputs, so every record is self-verified. Variants of an
entry rename identifiers and adjust inputs; tests are recomputed per variant.
"""

import json
import re
from pathlib import Path

# (function names, code template with {name}, identifier maps, call templates)
# Each name gets the identifier map at the same index (cycled); calls are
# formatted with the function name and evaluated to freeze expected outputs.
ENTRIES = [
    (("add_two_numbers", "sum_pair"),
     '''def {name}(a, b):
    return a + b
''', [{}, {"a": "x", "b": "y"}],
     ["{name}(2, 3)", "{name}(-4, 4)", "{name}(10, 25)"]),

    (("subtract_numbers", "difference_of"),
     '''def {name}(a, b):
    return a - b
''', [{}, {"a": "left", "b": "right"}],
     ["{name}(9, 4)", "{name}(3, 8)", "{name}(0, 0)"]),

    (("multiply_values", "product_pair"),
     '''def {name}(a, b):
    return a * b
''', [{}, {"a": "m", "b": "k"}],
     ["{name}(3, 4)", "{name}(-2, 5)", "{name}(7, 0)"]),

    (("safe_divide", "ratio_or_zero"),
     '''def {name}(a, b):
    if b == 0:
        return 0
    return a / b
''', [{}, {"a": "num", "b": "den"}],
     ["{name}(10, 2)", "{name}(5, 0)", "{name}(9, 3)"]),

    (("find_max_element", "largest_value", "max_in_list"),
     '''def {name}(xs):
    m = xs[0]
    for x in xs:
        if x > m:
            m = x
    return m
''', [{}, {"xs": "values", "m": "best", "x": "v"}, {"xs": "arr", "m": "top", "x": "item"}],
     ["{name}([3, 1, 7, 2])", "{name}([-5, -2, -9])", "{name}([4])"]),

    (("find_min_element", "smallest_value", "min_in_list"),
     '''def {name}(xs):
    m = xs[0]
    for x in xs:
        if x < m:
            m = x
    return m
''', [{}, {"xs": "nums", "m": "low", "x": "n"}, {"xs": "data", "m": "least", "x": "d"}],
     ["{name}([3, 1, 7, 2])", "{name}([-5, -2, -9])", "{name}([4])"]),

    (("sum_list", "total_of_list", "list_total"),
     '''def {name}(xs):
    total = 0
    for x in xs:
        total += x
    return total
''', [{}, {"xs": "nums", "total": "acc", "x": "n"}, {"xs": "items", "total": "s", "x": "it"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}([-1, 1, 10])"]),

    (("product_of_list", "multiply_all"),
     '''def {name}(xs):
    result = 1
    for x in xs:
        result *= x
    return result
''', [{}, {"xs": "nums", "result": "prod", "x": "n"}],
     ["{name}([1, 2, 3, 4])", "{name}([5])", "{name}([2, 0, 9])"]),

    (("count_evens", "even_count"),
     '''def {name}(xs):
    count = 0
    for x in xs:
        if x % 2 == 0:
            count += 1
    return count
''', [{}, {"xs": "nums", "count": "hits", "x": "value"}],
     ["{name}([1, 2, 3, 4])", "{name}([1, 3, 5])", "{name}([])"]),

    (("count_odds", "odd_count"),
     '''def {name}(xs):
    count = 0
    for x in xs:
        if x % 2 != 0:
            count += 1
    return count
''', [{}, {"xs": "seq", "count": "total", "x": "elem"}],
     ["{name}([1, 2, 3, 4])", "{name}([2, 4, 6])", "{name}([7])"]),

    (("reverse_list", "list_reversed"),
     '''def {name}(xs):
    out = []
    for x in xs:
        out = [x] + out
    return out
''', [{}, {"xs": "items", "out": "result", "x": "item"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}(['a', 'b'])"]),

    (("square_each", "squares_of"),
     '''def {name}(xs):
    return [x * x for x in xs]
''', [{}, {"xs": "nums", "x": "n"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}([-2, 4])"]),

    (("keep_positive", "filter_positive"),
     '''def {name}(xs):
    return [x for x in xs if x > 0]
''', [{}, {"xs": "values", "x": "v"}],
     ["{name}([1, -2, 3])", "{name}([-1, -2])", "{name}([0, 5])"]),

    (("is_sorted_ascending", "check_sorted"),
     '''def {name}(xs):
    for i in range(len(xs) - 1):
        if xs[i] > xs[i + 1]:
            return False
    return True
''', [{}, {"xs": "seq", "i": "pos"}],
     ["{name}([1, 2, 3])", "{name}([3, 1, 2])", "{name}([])"]),

    (("second_largest", "runner_up"),
     '''def {name}(xs):
    best = max(xs[0], xs[1])
    second = min(xs[0], xs[1])
    for x in xs[2:]:
        if x > best:
            second = best
            best = x
        elif x > second:
            second = x
    return second
''', [{}, {"xs": "nums", "best": "top", "second": "next_top", "x": "n"}],
     ["{name}([1, 5, 3, 4])", "{name}([10, 9])", "{name}([2, 8, 8, 1])"]),

    (("index_of_value", "find_position"),
     '''def {name}(xs, target):
    for i in range(len(xs)):
        if xs[i] == target:
            return i
    return -1
''', [{}, {"xs": "items", "target": "needle", "i": "idx"}],
     ["{name}([5, 2, 9], 9)", "{name}([5, 2, 9], 1)", "{name}([], 3)"]),

    (("count_matches", "occurrences_of"),
     '''def {name}(xs, target):
    count = 0
    for x in xs:
        if x == target:
            count += 1
    return count
''', [{}, {"xs": "data", "target": "wanted", "count": "n", "x": "d"}],
     ["{name}([1, 2, 2, 3], 2)", "{name}([1, 1], 5)", "{name}([], 0)"]),

    (("remove_value", "drop_all"),
     '''def {name}(xs, bad):
    out = []
    for x in xs:
        if x != bad:
            out.append(x)
    return out
''', [{}, {"xs": "items", "bad": "unwanted", "out": "kept", "x": "it"}],
     ["{name}([1, 2, 1, 3], 1)", "{name}([4, 4], 4)", "{name}([5], 9)"]),

    (("dot_product", "inner_product"),
     '''def {name}(a, b):
    total = 0
    for i in range(len(a)):
        total += a[i] * b[i]
    return total
''', [{}, {"a": "u", "b": "v", "total": "acc", "i": "k"}],
     ["{name}([1, 2], [3, 4])", "{name}([0, 0], [5, 6])", "{name}([2], [7])"]),

    (("cumulative_sum", "running_totals"),
     '''def {name}(xs):
    out = []
    total = 0
    for x in xs:
        total += x
        out.append(total)
    return out
''', [{}, {"xs": "nums", "out": "sums", "total": "acc", "x": "n"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}([5, -5])"]),

    (("all_positive", "every_positive"),
     '''def {name}(xs):
    for x in xs:
        if x <= 0:
            return False
    return True
''', [{}, {"xs": "vals", "x": "v"}],
     ["{name}([1, 2])", "{name}([1, 0])", "{name}([])"]),

    (("any_negative", "has_negative"),
     '''def {name}(xs):
    for x in xs:
        if x < 0:
            return True
    return False
''', [{}, {"xs": "values", "x": "item"}],
     ["{name}([1, -2])", "{name}([1, 2])", "{name}([])"]),

    (("max_abs_difference", "largest_gap"),
     '''def {name}(xs):
    return max(xs) - min(xs)
''', [{}, {"xs": "nums"}],
     ["{name}([1, 9, 4])", "{name}([5, 5])", "{name}([-3, 3])"]),

    (("pair_sums_to", "has_pair_with_sum"),
     '''def {name}(xs, goal):
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if xs[i] + xs[j] == goal:
                return True
    return False
''', [{}, {"xs": "nums", "goal": "target", "i": "a", "j": "b"}],
     ["{name}([1, 2, 3], 5)", "{name}([1, 2, 3], 7)", "{name}([], 0)"]),

    (("unique_preserve_order", "dedupe_list"),
     '''def {name}(xs):
    seen = []
    for x in xs:
        if x not in seen:
            seen.append(x)
    return seen
''', [{}, {"xs": "items", "seen": "uniq", "x": "it"}],
     ["{name}([1, 2, 1, 3])", "{name}([])", "{name}([4, 4, 4])"]),

    (("interleave_lists", "zip_flat"),
     '''def {name}(a, b):
    out = []
    for i in range(len(a)):
        out.append(a[i])
        out.append(b[i])
    return out
''', [{}, {"a": "first", "b": "second", "out": "mixed", "i": "k"}],
     ["{name}([1, 3], [2, 4])", "{name}([], [])", "{name}(['a'], ['b'])"]),

    (("rotate_left", "cycle_list"),
     '''def {name}(xs, k):
    n = len(xs)
    if n == 0:
        return []
    k = k % n
    return xs[k:] + xs[:k]
''', [{}, {"xs": "items", "k": "shift", "n": "length"}],
     ["{name}([1, 2, 3, 4], 1)", "{name}([1, 2], 5)", "{name}([], 2)"]),

    (("sum_of_squares", "squares_total"),
     '''def {name}(n):
    total = 0
    for i in range(1, n + 1):
        total += i * i
    return total
''', [{}, {"n": "limit", "total": "acc", "i": "k"}],
     ["{name}(3)", "{name}(1)", "{name}(5)"]),

    (("sum_of_cubes", "cubes_total"),
     '''def {name}(n):
    total = 0
    for i in range(1, n + 1):
        total += i * i * i
    return total
''', [{}, {"n": "upper", "total": "s", "i": "j"}],
     ["{name}(2)", "{name}(3)", "{name}(1)"]),

    (("factorial_of", "compute_factorial"),
     '''def {name}(n):
    result = 1
    i = 2
    while i <= n:
        result *= i
        i += 1
    return result
''', [{}, {"n": "num", "result": "fact", "i": "step"}],
     ["{name}(4)", "{name}(0)", "{name}(6)"]),

    (("fibonacci_number", "nth_fibonacci"),
     '''def {name}(n):
    a = 0
    b = 1
    for i in range(n):
        a, b = b, a + b
    return a
''', [{}, {"a": "prev", "b": "curr", "i": "step", "n": "idx"}],
     ["{name}(0)", "{name}(7)", "{name}(10)"]),

    (("is_prime_number", "prime_check"),
     '''def {name}(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True
''', [{}, {"n": "num", "i": "d"}],
     ["{name}(7)", "{name}(9)", "{name}(1)"]),

    (("gcd_of", "greatest_common_divisor"),
     '''def {name}(a, b):
    while b != 0:
        a, b = b, a % b
    return a
''', [{}, {"a": "x", "b": "y"}],
     ["{name}(12, 18)", "{name}(7, 3)", "{name}(10, 0)"]),

    (("digit_sum", "sum_of_digits"),
     '''def {name}(n):
    total = 0
    while n > 0:
        total += n % 10
        n = n // 10
    return total
''', [{}, {"n": "value", "total": "acc"}],
     ["{name}(123)", "{name}(9)", "{name}(405)"]),

    (("count_digits", "digit_length"),
     '''def {name}(n):
    if n == 0:
        return 1
    count = 0
    while n > 0:
        count += 1
        n = n // 10
    return count
''', [{}, {"n": "num", "count": "width"}],
     ["{name}(12345)", "{name}(0)", "{name}(7)"]),

    (("to_binary_string", "binary_repr"),
     '''def {name}(n):
    if n == 0:
        return "0"
    bits = ""
    while n > 0:
        bits = str(n % 2) + bits
        n = n // 2
    return bits
''', [{}, {"n": "value", "bits": "out"}],
     ["{name}(5)", "{name}(0)", "{name}(12)"]),

    (("power_of_two_check", "is_power_of_two"),
     '''def {name}(n):
    if n < 1:
        return False
    while n % 2 == 0:
        n = n // 2
    return n == 1
''', [{}, {"n": "value"}],
     ["{name}(8)", "{name}(6)", "{name}(1)"]),

    (("collatz_steps", "hailstone_length"),
     '''def {name}(n):
    steps = 0
    while n != 1:
        if n % 2 == 0:
            n = n // 2
        else:
            n = 3 * n + 1
        steps += 1
    return steps
''', [{}, {"n": "value", "steps": "count"}],
     ["{name}(1)", "{name}(6)", "{name}(27)"]),

    (("triangular_number", "nth_triangle"),
     '''def {name}(n):
    return n * (n + 1) // 2
''', [{}, {"n": "k"}],
     ["{name}(4)", "{name}(1)", "{name}(10)"]),

    (("average_of", "mean_value"),
     '''def {name}(xs):
    return sum(xs) / len(xs)
''', [{}, {"xs": "nums"}],
     ["{name}([2, 4, 6])", "{name}([5])", "{name}([1, 2])"]),

    (("median_of_three", "middle_value"),
     '''def {name}(a, b, c):
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    return b
''', [{}, {"a": "x", "b": "y", "c": "z"}],
     ["{name}(3, 1, 2)", "{name}(9, 9, 1)", "{name}(4, 5, 6)"]),

    (("clamp_value", "bound_between"),
     '''def {name}(x, lo, hi):
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x
''', [{}, {"x": "value", "lo": "low", "hi": "high"}],
     ["{name}(5, 0, 10)", "{name}(-2, 0, 10)", "{name}(99, 0, 10)"]),

    (("absolute_value", "magnitude_of"),
     '''def {name}(n):
    if n < 0:
        return -n
    return n
''', [{}, {"n": "x"}],
     ["{name}(-7)", "{name}(7)", "{name}(0)"]),

    (("sign_of", "number_sign"),
     '''def {name}(n):
    if n > 0:
        return 1
    if n < 0:
        return -1
    return 0
''', [{}, {"n": "value"}],
     ["{name}(9)", "{name}(-3)", "{name}(0)"]),

    (("rectangle_area", "area_of_rectangle"),
     '''def {name}(w, h):
    return w * h
''', [{}, {"w": "width", "h": "height"}],
     ["{name}(3, 4)", "{name}(5, 0)", "{name}(7, 2)"]),

    (("box_volume", "volume_of_box"),
     '''def {name}(l, b, h):
    return (l * b * h) / 2
''', [{}, {"l": "length", "b": "breadth", "h": "height"}],
     ["{name}(10, 8, 6)", "{name}(2, 2, 2)", "{name}(1, 1, 4)"]),

    (("perimeter_of_square", "square_perimeter"),
     '''def {name}(side):
    return 4 * side
''', [{}, {"side": "edge"}],
     ["{name}(5)", "{name}(0)", "{name}(12)"]),

    (("is_triangle_valid", "can_form_triangle"),
     '''def {name}(a, b, c):
    if a + b <= c or a + c <= b or b + c <= a:
        return False
    return True
''', [{}, {"a": "x", "b": "y", "c": "z"}],
     ["{name}(3, 4, 5)", "{name}(1, 1, 3)", "{name}(2, 2, 2)"]),

    (("is_equilateral", "equilateral_check"),
     '''def {name}(x, y, z):
    if x == y == z:
        return True
    else:
        return False
''', [{}, {"x": "a", "y": "b", "z": "c"}],
     ["{name}(2, 2, 2)", "{name}(2, 3, 2)", "{name}(1, 1, 1)"]),

    (("leap_year_check", "is_leap_year"),
     '''def {name}(year):
    if year % 400 == 0:
        return True
    if year % 100 == 0:
        return False
    return year % 4 == 0
''', [{}, {"year": "y"}],
     ["{name}(2000)", "{name}(1900)", "{name}(2024)"]),

    (("simple_interest", "interest_amount"),
     '''def {name}(p, r, t):
    return p * r * t // 100
''', [{}, {"p": "principal", "r": "rate", "t": "years"}],
     ["{name}(1000, 5, 2)", "{name}(500, 10, 1)", "{name}(0, 7, 3)"]),

    (("reverse_string", "string_reversed"),
     '''def {name}(s):
    out = ""
    for ch in s:
        out = ch + out
    return out
''', [{}, {"s": "text", "out": "result", "ch": "c"}],
     ["{name}('abc')", "{name}('')", "{name}('racecar')"]),

    (("is_palindrome", "palindrome_check"),
     '''def {name}(s):
    return s == s[::-1]
''', [{}, {"s": "word"}],
     ["{name}('level')", "{name}('python')", "{name}('')"]),

    (("count_vowels", "vowel_total"),
     '''def {name}(s):
    count = 0
    for ch in s:
        if ch in "aeiou":
            count += 1
    return count
''', [{}, {"s": "text", "count": "n", "ch": "letter"}],
     ["{name}('hello')", "{name}('xyz')", "{name}('aeiou')"]),

    (("count_consonants", "consonant_total"),
     '''def {name}(s):
    count = 0
    for ch in s:
        if ch.isalpha() and ch not in "aeiou":
            count += 1
    return count
''', [{}, {"s": "word", "count": "total", "ch": "c"}],
     ["{name}('hello')", "{name}('aeiou')", "{name}('b c')"]),

    (("count_uppercase", "uppercase_total"),
     '''def {name}(s):
    count = 0
    for ch in s:
        if ch.isupper():
            count += 1
    return count
''', [{}, {"s": "text", "count": "caps", "ch": "letter"}],
     ["{name}('HeLLo')", "{name}('abc')", "{name}('ABC')"]),

    (("first_repeated_char", "earliest_duplicate"),
     '''def {name}(s):
    seen = ""
    for ch in s:
        if ch in seen:
            return ch
        seen += ch
    return None
''', [{}, {"s": "text", "seen": "visited", "ch": "c"}],
     ["{name}('abca')", "{name}('abc')", "{name}('aa')"]),

    (("remove_vowels", "strip_vowels"),
     '''def {name}(s):
    out = ""
    for ch in s:
        if ch not in "aeiou":
            out += ch
    return out
''', [{}, {"s": "word", "out": "kept", "ch": "c"}],
     ["{name}('beautiful')", "{name}('xyz')", "{name}('aeiou')"]),

    (("swap_case_manual", "invert_case"),
     '''def {name}(s):
    out = ""
    for ch in s:
        if ch.isupper():
            out += ch.lower()
        else:
            out += ch.upper()
    return out
''', [{}, {"s": "text", "out": "flipped", "ch": "c"}],
     ["{name}('aBc')", "{name}('XYZ')", "{name}('')"]),

    (("starts_with_prefix", "has_prefix"),
     '''def {name}(s, prefix):
    if len(prefix) > len(s):
        return False
    return s[:len(prefix)] == prefix
''', [{}, {"s": "text", "prefix": "head"}],
     ["{name}('pytest', 'py')", "{name}('py', 'pytest')", "{name}('abc', '')"]),

    (("longest_word_length", "max_word_length"),
     '''def {name}(words):
    best = 0
    for w in words:
        if len(w) > best:
            best = len(w)
    return best
''', [{}, {"words": "tokens", "best": "longest", "w": "word"}],
     ["{name}(['a', 'abc', 'ab'])", "{name}([])", "{name}(['xy'])"]),

    (("make_acronym", "initials_of"),
     '''def {name}(words):
    out = ""
    for w in words:
        out += w[0].upper()
    return out
''', [{}, {"words": "parts", "out": "acro", "w": "part"}],
     ["{name}(['portable', 'network', 'graphics'])", "{name}(['ok'])", "{name}([])"]),

    (("count_words", "word_total"),
     '''def {name}(s):
    return len(s.split())
''', [{}, {"s": "sentence"}],
     ["{name}('a b c')", "{name}('')", "{name}('one')"]),

    (("capitalize_words", "title_words"),
     '''def {name}(s):
    out = []
    for w in s.split():
        out.append(w[0].upper() + w[1:])
    return " ".join(out)
''', [{}, {"s": "sentence", "out": "fixed", "w": "word"}],
     ["{name}('hello world')", "{name}('a')", "{name}('two words')"]),

    (("char_frequency", "letter_counts"),
     '''def {name}(s):
    freq = {{}}
    for ch in s:
        if ch in freq:
            freq[ch] += 1
        else:
            freq[ch] = 1
    return freq
''', [{}, {"s": "text", "freq": "counts", "ch": "c"}],
     ["{name}('aab')", "{name}('')", "{name}('xyx')"]),

    (("is_digit_string", "all_digits"),
     '''def {name}(s):
    if len(s) == 0:
        return False
    for ch in s:
        if not ch.isdigit():
            return False
    return True
''', [{}, {"s": "text", "ch": "c"}],
     ["{name}('123')", "{name}('12a')", "{name}('')"]),

    (("count_substring", "substring_occurrences"),
     '''def {name}(s, sub):
    count = 0
    for i in range(len(s) - len(sub) + 1):
        if s[i:i + len(sub)] == sub:
            count += 1
    return count
''', [{}, {"s": "text", "sub": "pattern", "count": "hits", "i": "pos"}],
     ["{name}('ababa', 'aba')", "{name}('aaa', 'a')", "{name}('abc', 'z')"]),

    (("caesar_shift_one", "shift_letters"),
     '''def {name}(s):
    out = ""
    for ch in s:
        out += chr(ord(ch) + 1)
    return out
''', [{}, {"s": "text", "out": "shifted", "ch": "c"}],
     ["{name}('abc')", "{name}('')", "{name}('yz')"]),

    (("ascii_total", "char_code_sum"),
     '''def {name}(s):
    total = 0
    for ch in s:
        total += ord(ch)
    return total
''', [{}, {"s": "text", "total": "acc", "ch": "c"}],
     ["{name}('ab')", "{name}('')", "{name}('A')"]),

    (("is_anagram_pair", "anagram_check"),
     '''def {name}(a, b):
    return sorted(a) == sorted(b)
''', [{}, {"a": "first", "b": "second"}],
     ["{name}('listen', 'silent')", "{name}('ab', 'abc')", "{name}('', '')"]),

    (("merge_sorted_lists", "merge_two_sorted"),
     '''def {name}(a, b):
    out = []
    i = 0
    j = 0
    while i < len(a) and j < len(b):
        if a[i] <= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    return out + a[i:] + b[j:]
''', [{}, {"a": "left", "b": "right", "out": "merged", "i": "p", "j": "q"}],
     ["{name}([1, 3], [2, 4])", "{name}([], [1])", "{name}([5, 6], [])"]),

    (("binary_search_list", "bisect_find"),
     '''def {name}(xs, item):
    first = 0
    last = len(xs) - 1
    found = False
    while first <= last and not found:
        mid = (first + last) // 2
        if xs[mid] == item:
            found = True
        else:
            if item < xs[mid]:
                last = mid - 1
            else:
                first = mid + 1
    return found
''', [{}, {"xs": "items", "item": "needle", "first": "lo", "last": "hi", "mid": "center", "found": "hit"}],
     ["{name}([1, 3, 5, 7], 5)", "{name}([1, 3, 5], 2)", "{name}([], 4)"]),

    (("bubble_pass", "one_bubble_pass"),
     '''def {name}(xs):
    out = list(xs)
    for i in range(len(out) - 1):
        if out[i] > out[i + 1]:
            out[i], out[i + 1] = out[i + 1], out[i]
    return out
''', [{}, {"xs": "nums", "out": "arr", "i": "k"}],
     ["{name}([3, 1, 2])", "{name}([1, 2])", "{name}([])"]),

    (("insertion_sorted", "sort_by_insertion"),
     '''def {name}(xs):
    out = []
    for x in xs:
        i = 0
        while i < len(out) and out[i] < x:
            i += 1
        out.insert(i, x)
    return out
''', [{}, {"xs": "values", "out": "sorted_vals", "x": "v", "i": "pos"}],
     ["{name}([3, 1, 2])", "{name}([])", "{name}([5, 5, 1])"]),

    (("nested_list_sum", "sum_of_rows"),
     '''def {name}(rows):
    total = 0
    for row in rows:
        for x in row:
            total += x
    return total
''', [{}, {"rows": "grid", "row": "line", "total": "acc", "x": "cell"}],
     ["{name}([[1, 2], [3]])", "{name}([[]])", "{name}([[5], [6], [7]])"]),

    (("max_row_sum", "largest_row_total"),
     '''def {name}(rows):
    best = -100000
    for row in rows:
        total = 0
        for x in row:
            total += x
        best = max(total, best)
    return best
''', [{}, {"rows": "lists", "row": "part", "best": "maxi", "total": "s", "x": "y"}],
     ["{name}([[1, 2], [3]])", "{name}([[0]])", "{name}([[-1], [-2]])"]),

    (("flatten_once", "flatten_rows"),
     '''def {name}(rows):
    out = []
    for row in rows:
        for x in row:
            out.append(x)
    return out
''', [{}, {"rows": "grid", "row": "chunk", "out": "flat", "x": "item"}],
     ["{name}([[1], [2, 3]])", "{name}([])", "{name}([[], [4]])"]),

    (("transpose_pairs", "swap_rows_cols"),
     '''def {name}(grid):
    return [[row[i] for row in grid] for i in range(len(grid[0]))]
''', [{}, {"grid": "matrix", "row": "line", "i": "col"}],
     ["{name}([[1, 2], [3, 4]])", "{name}([[1, 2, 3]])", "{name}([[7], [8]])"]),

    (("count_ways_tiles", "tiling_count"),
     '''def {name}(n):
    a = [0] * (n + 2)
    a[0] = 1
    a[1] = 1
    for i in range(2, n + 1):
        a[i] = a[i - 1] + a[i - 2]
    return a[n]
''', [{}, {"a": "ways", "i": "step", "n": "width"}],
     ["{name}(4)", "{name}(1)", "{name}(6)"]),

    (("sum_until_negative", "total_before_negative"),
     '''def {name}(xs):
    total = 0
    for x in xs:
        if x < 0:
            break
        total += x
    return total
''', [{}, {"xs": "nums", "total": "acc", "x": "n"}],
     ["{name}([1, 2, -1, 5])", "{name}([3, 4])", "{name}([-1, 9])"]),

    (("first_above_threshold", "first_exceeding"),
     '''def {name}(xs, limit):
    for x in xs:
        if x > limit:
            return x
    return None
''', [{}, {"xs": "values", "limit": "cutoff", "x": "v"}],
     ["{name}([1, 5, 3], 2)", "{name}([1, 2], 9)", "{name}([], 0)"]),

    (("is_none_check", "missing_check"),
     '''def {name}(value):
    if value is None:
        return True
    return False
''', [{}, {"value": "item"}],
     ["{name}(None)", "{name}(0)", "{name}('x')"]),

    (("same_identity", "identical_objects"),
     '''def {name}(a, b):
    return a is b
''', [{}, {"a": "first", "b": "second"}],
     ["{name}(None, None)", "{name}([], [])", "{name}(True, True)"]),

    (("default_if_none", "fallback_value"),
     '''def {name}(value, fallback):
    if value is not None:
        return value
    return fallback
''', [{}, {"value": "item", "fallback": "default"}],
     ["{name}(None, 5)", "{name}(3, 5)", "{name}('', 'x')"]),

    (("both_or_either", "logic_gate"),
     '''def {name}(a, b):
    if a and b:
        return 2
    if a or b:
        return 1
    return 0
''', [{}, {"a": "p", "b": "q"}],
     ["{name}(True, True)", "{name}(True, False)", "{name}(False, False)"]),

    (("truthy_count", "count_truthy"),
     '''def {name}(xs):
    count = 0
    for x in xs:
        if x:
            count += 1
    return count
''', [{}, {"xs": "flags", "count": "n", "x": "flag"}],
     ["{name}([True, False, True])", "{name}([])", "{name}([0, 1, 2])"]),

    (("xor_flags", "exactly_one"),
     '''def {name}(a, b):
    if a and not b:
        return True
    if b and not a:
        return True
    return False
''', [{}, {"a": "left", "b": "right"}],
     ["{name}(True, False)", "{name}(True, True)", "{name}(False, False)"]),

    (("grade_letter", "score_to_grade"),
     '''def {name}(score):
    if score >= 90:
        return "A"
    elif score >= 80:
        return "B"
    elif score >= 70:
        return "C"
    else:
        return "F"
''', [{}, {"score": "marks"}],
     ["{name}(95)", "{name}(85)", "{name}(40)"]),

    (("fizz_label", "fizzbuzz_word"),
     '''def {name}(n):
    if n % 15 == 0:
        return "FizzBuzz"
    if n % 3 == 0:
        return "Fizz"
    if n % 5 == 0:
        return "Buzz"
    return str(n)
''', [{}, {"n": "num"}],
     ["{name}(15)", "{name}(9)", "{name}(7)"]),

    (("century_of_year", "year_to_century"),
     '''def {name}(year):
    return (year + 99) // 100
''', [{}, {"year": "y"}],
     ["{name}(1905)", "{name}(2000)", "{name}(2001)"]),

    (("celsius_to_fahrenheit", "c_to_f"),
     '''def {name}(c):
    return c * 9 / 5 + 32
''', [{}, {"c": "celsius"}],
     ["{name}(0)", "{name}(100)", "{name}(-40)"]),

    (("min_max_pair", "extremes_of"),
     '''def {name}(xs):
    lo = xs[0]
    hi = xs[0]
    for x in xs:
        if x < lo:
            lo = x
        if x > hi:
            hi = x
    return (lo, hi)
''', [{}, {"xs": "nums", "lo": "least", "hi": "most", "x": "n"}],
     ["{name}([3, 1, 4])", "{name}([7])", "{name}([-1, -9, 5])"]),

    (("count_in_range", "values_between"),
     '''def {name}(xs, lo, hi):
    count = 0
    for x in xs:
        if x >= lo and x <= hi:
            count += 1
    return count
''', [{}, {"xs": "data", "lo": "low", "hi": "high", "count": "n", "x": "d"}],
     ["{name}([1, 5, 9], 2, 8)", "{name}([], 0, 1)", "{name}([3, 3], 3, 3)"]),

    (("list_equal_manual", "lists_match"),
     '''def {name}(a, b):
    if len(a) != len(b):
        return False
    for i in range(len(a)):
        if a[i] != b[i]:
            return False
    return True
''', [{}, {"a": "xs", "b": "ys", "i": "k"}],
     ["{name}([1, 2], [1, 2])", "{name}([1], [2])", "{name}([], [])"]),

    (("last_digit", "final_digit"),
     '''def {name}(n):
    return n % 10
''', [{}, {"n": "num"}],
     ["{name}(123)", "{name}(7)", "{name}(90)"]),

    (("swap_first_last", "exchange_ends"),
     '''def {name}(xs):
    if len(xs) < 2:
        return list(xs)
    out = list(xs)
    out[0], out[-1] = out[-1], out[0]
    return out
''', [{}, {"xs": "items", "out": "arr"}],
     ["{name}([1, 2, 3])", "{name}([4])", "{name}([5, 6])"]),

    (("string_to_length_list", "word_lengths"),
     '''def {name}(words):
    return [len(w) for w in words]
''', [{}, {"words": "tokens", "w": "t"}],
     ["{name}(['ab', 'c'])", "{name}([])", "{name}(['xyz'])"]),

    (("join_with_dash", "dash_join"),
     '''def {name}(words):
    return "-".join(words)
''', [{}, {"words": "parts"}],
     ["{name}(['a', 'b'])", "{name}([])", "{name}(['one'])"]),

    (("square_root_floor", "integer_sqrt"),
     '''def {name}(n):
    r = 0
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r
''', [{}, {"n": "value", "r": "root"}],
     ["{name}(16)", "{name}(17)", "{name}(0)"]),

    (("nth_power", "raise_to"),
     '''def {name}(base, exp):
    result = 1
    for i in range(exp):
        result *= base
    return result
''', [{}, {"base": "b", "exp": "e", "result": "acc", "i": "step"}],
     ["{name}(2, 5)", "{name}(3, 0)", "{name}(5, 2)"]),

    (("remainder_of", "mod_result"),
     '''def {name}(a, b):
    return a % b
''', [{}, {"a": "num", "b": "den"}],
     ["{name}(10, 3)", "{name}(9, 3)", "{name}(7, 7)"]),

    (("is_divisible_by", "divides_evenly"),
     '''def {name}(a, b):
    return a % b == 0
''', [{}, {"a": "num", "b": "d"}],
     ["{name}(10, 5)", "{name}(10, 3)", "{name}(0, 4)"]),

    (("trailing_zeros_factorial", "factorial_zero_count"),
     '''def {name}(n):
    count = 0
    p = 5
    while p <= n:
        count += n // p
        p *= 5
    return count
''', [{}, {"n": "num", "count": "zeros", "p": "power"}],
     ["{name}(10)", "{name}(25)", "{name}(4)"]),

    (("sum_even_indexed", "even_position_total"),
     '''def {name}(xs):
    total = 0
    for i in range(0, len(xs), 2):
        total += xs[i]
    return total
''', [{}, {"xs": "nums", "total": "acc", "i": "pos"}],
     ["{name}([1, 2, 3, 4])", "{name}([])", "{name}([9])"]),

    (("alternating_sum", "plus_minus_total"),
     '''def {name}(xs):
    total = 0
    sign = 1
    for x in xs:
        total += sign * x
        sign = -sign
    return total
''', [{}, {"xs": "nums", "total": "acc", "sign": "flip", "x": "n"}],
     ["{name}([5, 3, 2])", "{name}([])", "{name}([1, 1, 1, 1])"]),

    (("difference_of_squares", "square_difference"),
     '''def {name}(a, b):
    return a * a - b * b
''', [{}, {"a": "x", "b": "y"}],
     ["{name}(5, 3)", "{name}(2, 2)", "{name}(0, 4)"]),

    (("harmonic_like_sum", "reciprocal_sum_scaled"),
     '''def {name}(n):
    total = 0
    for i in range(1, n + 1):
        total += 100 // i
    return total
''', [{}, {"n": "limit", "total": "acc", "i": "k"}],
     ["{name}(3)", "{name}(1)", "{name}(5)"]),

    (("count_common_items", "shared_count"),
     '''def {name}(a, b):
    count = 0
    for x in a:
        if x in b:
            count += 1
    return count
''', [{}, {"a": "xs", "b": "ys", "count": "n", "x": "item"}],
     ["{name}([1, 2, 3], [2, 3, 4])", "{name}([], [1])", "{name}([5], [5])"]),

    (("difference_list", "items_only_in_first"),
     '''def {name}(a, b):
    return [x for x in a if x not in b]
''', [{}, {"a": "xs", "b": "ys", "x": "item"}],
     ["{name}([1, 2, 3], [2])", "{name}([], [1])", "{name}([4, 5], [])"]),

    (("zip_to_pairs", "pair_up"),
     '''def {name}(a, b):
    out = []
    for i in range(min(len(a), len(b))):
        out.append((a[i], b[i]))
    return out
''', [{}, {"a": "xs", "b": "ys", "out": "pairs", "i": "k"}],
     ["{name}([1, 2], ['a', 'b'])", "{name}([1], [])", "{name}([3, 4, 5], [6, 7])"]),

    (("dict_value_sum", "total_dict_values"),
     '''def {name}(d):
    total = 0
    for k in d:
        total += d[k]
    return total
''', [{}, {"d": "mapping", "total": "acc", "k": "key"}],
     ["{name}({{'a': 1, 'b': 2}})", "{name}({{}})", "{name}({{'x': 10}})"]),

    (("invert_mapping", "flip_dict"),
     '''def {name}(d):
    return {{v: k for k, v in d.items()}}
''', [{}, {"d": "mapping", "k": "key", "v": "val"}],
     ["{name}({{'a': 1}})", "{name}({{}})", "{name}({{'x': 'y', 'p': 'q'}})"]),

    (("tuple_swap", "reverse_pair"),
     '''def {name}(pair):
    return (pair[1], pair[0])
''', [{}, {"pair": "tup"}],
     ["{name}((1, 2))", "{name}(('a', 'b'))", "{name}((0, 0))"]),

    (("manhattan_distance", "grid_distance"),
     '''def {name}(x1, y1, x2, y2):
    dx = x1 - x2
    dy = y1 - y2
    if dx < 0:
        dx = -dx
    if dy < 0:
        dy = -dy
    return dx + dy
''', [{}, {"x1": "ax", "y1": "ay", "x2": "bx", "y2": "by", "dx": "ddx", "dy": "ddy"}],
     ["{name}(0, 0, 3, 4)", "{name}(1, 1, 1, 1)", "{name}(-2, 0, 2, 0)"]),

    (("repeat_each_item", "duplicate_elements"),
     '''def {name}(xs):
    out = []
    for x in xs:
        out.append(x)
        out.append(x)
    return out
''', [{}, {"xs": "items", "out": "doubled", "x": "it"}],
     ["{name}([1, 2])", "{name}([])", "{name}(['a'])"]),

    (("strip_spaces_manual", "remove_spaces"),
     '''def {name}(s):
    out = ""
    for ch in s:
        if ch != " ":
            out += ch
    return out
''', [{}, {"s": "text", "out": "packed", "ch": "c"}],
     ["{name}('a b c')", "{name}('   ')", "{name}('xy')"]),

    (("is_binary_string", "only_zeros_ones"),
     '''def {name}(s):
    for ch in s:
        if ch != "0" and ch != "1":
            return False
    return True
''', [{}, {"s": "bits", "ch": "c"}],
     ["{name}('0101')", "{name}('012')", "{name}('')"]),

    (("decimal_from_binary", "binary_to_int"),
     '''def {name}(bits):
    value = 0
    for ch in bits:
        value = value * 2 + int(ch)
    return value
''', [{}, {"bits": "s", "value": "acc", "ch": "bit"}],
     ["{name}('101')", "{name}('0')", "{name}('1111')"]),

    (("sum_positive_only", "positive_total"),
     '''def {name}(xs):
    total = 0
    for x in xs:
        if x > 0:
            total += x
    return total
''', [{}, {"xs": "nums", "total": "acc", "x": "n"}],
     ["{name}([1, -2, 3])", "{name}([-1, -2])", "{name}([])"]),

    (("weighted_total", "weight_sum"),
     '''def {name}(values, weights):
    total = 0
    for i in range(len(values)):
        total += values[i] * weights[i]
    return total
''', [{}, {"values": "vals", "weights": "wts", "total": "acc", "i": "k"}],
     ["{name}([1, 2], [10, 20])", "{name}([], [])", "{name}([3], [3])"]),

    (("longest_run_length", "max_streak"),
     '''def {name}(xs):
    if not xs:
        return 0
    best = 1
    run = 1
    for i in range(1, len(xs)):
        if xs[i] == xs[i - 1]:
            run += 1
        else:
            run = 1
        if run > best:
            best = run
    return best
''', [{}, {"xs": "seq", "best": "longest", "run": "streak", "i": "k"}],
     ["{name}([1, 1, 2, 2, 2])", "{name}([])", "{name}([3, 4, 5])"]),

    (("middle_element", "central_item"),
     '''def {name}(xs):
    return xs[len(xs) // 2]
''', [{}, {"xs": "items"}],
     ["{name}([1, 2, 3])", "{name}([1, 2, 3, 4])", "{name}([9])"]),

    (("ends_match", "first_equals_last"),
     '''def {name}(xs):
    return xs[0] == xs[-1]
''', [{}, {"xs": "seq"}],
     ["{name}([1, 2, 1])", "{name}([1, 2])", "{name}([7])"]),

    (("square_perimeter_points", "lattice_count"),
     '''def {name}(n):
    if n == 1:
        return 1
    return 4 * n - 4
''', [{}, {"n": "side"}],
     ["{name}(3)", "{name}(1)", "{name}(5)"]),

    (("double_until_exceeds", "doubling_steps"),
     '''def {name}(start, limit):
    steps = 0
    value = start
    while value <= limit:
        value = value * 2
        steps += 1
    return steps
''', [{}, {"start": "seed", "limit": "cap", "steps": "count", "value": "v"}],
     ["{name}(1, 10)", "{name}(5, 4)", "{name}(2, 64)"]),

    (("list_of_multiples", "first_multiples"),
     '''def {name}(m, n):
    return [m * i for i in range(1, n + 1)]
''', [{}, {"m": "base", "n": "count", "i": "k"}],
     ["{name}(3, 4)", "{name}(5, 0)", "{name}(1, 3)"]),

    (("sum_of_evens_up_to", "even_total_below"),
     '''def {name}(n):
    total = 0
    i = 0
    while i <= n:
        total += i
        i += 2
    return total
''', [{}, {"n": "limit", "total": "acc", "i": "k"}],
     ["{name}(10)", "{name}(0)", "{name}(7)"]),

    (("score_grade_stats", "exam_summary", "grade_breakdown"),
     '''def {name}(scores, cutoff):
    passed = 0
    failed = 0
    best = scores[0]
    for mark in scores:
        if mark >= cutoff:
            passed += 1
        else:
            failed += 1
        if mark > best:
            best = mark
    return (passed, failed, best)
''', [{}, {"scores": "marks", "cutoff": "threshold", "passed": "ok", "failed": "bad", "best": "highest", "mark": "entry"},
      {"scores": "results", "cutoff": "bar", "passed": "above", "failed": "below", "best": "peak", "mark": "res"}],
     ["{name}([55, 80, 90], 60)", "{name}([10], 60)", "{name}([60, 59], 60)"]),

    (("price_after_discount", "discounted_cost", "sale_price"),
     '''def {name}(price, percent):
    discount = price * percent / 100
    final = price - discount
    if final < 0:
        final = 0
    return final
''', [{}, {"price": "cost", "percent": "rate", "discount": "cut", "final": "remaining"},
      {"price": "amount", "percent": "pct", "discount": "reduction", "final": "payable"}],
     ["{name}(200, 10)", "{name}(50, 0)", "{name}(80, 25)"]),

    (("shipping_band", "parcel_fee", "postage_cost"),
     '''def {name}(weight):
    if weight <= 1:
        return 5
    elif weight <= 5:
        return 9
    elif weight <= 20:
        return 16
    else:
        return 30
''', [{}, {"weight": "kg"}, {"weight": "mass"}],
     ["{name}(1)", "{name}(4)", "{name}(25)"]),

    (("count_above_average", "above_mean_count", "over_average_total"),
     '''def {name}(values):
    mean = sum(values) / len(values)
    count = 0
    for v in values:
        if v > mean:
            count += 1
    return count
''', [{}, {"values": "samples", "mean": "avg", "count": "tally", "v": "sample"},
      {"values": "readings", "mean": "midpoint", "count": "hits", "v": "reading"}],
     ["{name}([1, 2, 3, 4])", "{name}([5, 5])", "{name}([10, 0, 0])"]),

    (("digits_reversed_number", "reverse_integer", "flip_number"),
     '''def {name}(n):
    result = 0
    while n > 0:
        result = result * 10 + n % 10
        n = n // 10
    return result
''', [{}, {"n": "num", "result": "rev"}, {"n": "value", "result": "mirrored"}],
     ["{name}(123)", "{name}(400)", "{name}(7)"]),

    (("balanced_parens_check", "parens_are_balanced", "valid_bracket_string"),
     '''def {name}(s):
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0
''', [{}, {"s": "text", "depth": "level", "ch": "c"}, {"s": "expr", "depth": "open_count", "ch": "symbol"}],
     ["{name}('(())')", "{name}('(()')", "{name}(')(')"]),

    (("run_length_encode", "compress_string", "rle_pairs"),
     '''def {name}(s):
    if s == "":
        return []
    out = []
    current = s[0]
    count = 1
    for ch in s[1:]:
        if ch == current:
            count += 1
        else:
            out.append((current, count))
            current = ch
            count = 1
    out.append((current, count))
    return out
''', [{}, {"s": "text", "out": "encoded", "current": "prev", "count": "run", "ch": "c"},
      {"s": "data", "out": "chunks", "current": "letter", "count": "times", "ch": "nxt"}],
     ["{name}('aab')", "{name}('')", "{name}('zzzz')"]),

    (("matching_ends_count", "same_edge_words", "boundary_match_total"),
     '''def {name}(words):
    count = 0
    for w in words:
        if len(w) > 0 and w[0] == w[-1]:
            count += 1
    return count
''', [{}, {"words": "tokens", "count": "total", "w": "tok"},
      {"words": "entries", "count": "matches", "w": "entry"}],
     ["{name}(['aba', 'bc', 'xx'])", "{name}([])", "{name}(['q'])"]),

    (("temperature_status", "heat_label", "weather_flag"),
     '''def {name}(celsius):
    if celsius >= 35 and celsius <= 45:
        return "hot"
    if celsius > 45 or celsius < -20:
        return "extreme"
    if celsius <= 0:
        return "freezing"
    return "mild"
''', [{}, {"celsius": "temp"}, {"celsius": "degrees"}],
     ["{name}(40)", "{name}(50)", "{name}(-5)"]),

    (("password_strong_enough", "strong_password_check", "credential_ok"),
     '''def {name}(pw):
    has_digit = False
    has_alpha = False
    for ch in pw:
        if ch.isdigit():
            has_digit = True
        if ch.isalpha():
            has_alpha = True
    return len(pw) >= 8 and has_digit and has_alpha
''', [{}, {"pw": "secret", "has_digit": "digit_seen", "has_alpha": "alpha_seen", "ch": "c"},
      {"pw": "phrase", "has_digit": "num_found", "has_alpha": "letter_found", "ch": "sym"}],
     ["{name}('abc12345')", "{name}('abcdefgh')", "{name}('a1')"]),

    (("bank_balance_after", "ledger_final", "account_result"),
     '''def {name}(start, changes):
    balance = start
    for delta in changes:
        balance += delta
        if balance < 0:
            balance = 0
    return balance
''', [{}, {"start": "opening", "changes": "movements", "balance": "funds", "delta": "move"},
      {"start": "initial", "changes": "ops", "balance": "current", "delta": "op"}],
     ["{name}(100, [-30, 20])", "{name}(10, [-50, 5])", "{name}(0, [])"]),

    (("nearest_to_zero", "closest_to_origin", "smallest_magnitude"),
     '''def {name}(xs):
    best = xs[0]
    for x in xs:
        if abs(x) < abs(best):
            best = x
    return best
''', [{}, {"xs": "nums", "best": "closest", "x": "n"}, {"xs": "deltas", "best": "winner", "x": "d"}],
     ["{name}([5, -2, 3])", "{name}([7])", "{name}([-1, 1])"]),

    (("split_even_odd", "partition_parity", "evens_and_odds"),
     '''def {name}(xs):
    evens = []
    odds = []
    for x in xs:
        if x % 2 == 0:
            evens.append(x)
        else:
            odds.append(x)
    return (evens, odds)
''', [{}, {"xs": "nums", "evens": "even_part", "odds": "odd_part", "x": "n"},
      {"xs": "values", "evens": "twos", "odds": "ones", "x": "v"}],
     ["{name}([1, 2, 3, 4])", "{name}([])", "{name}([2, 4])"]),

    (("letter_grade_points", "gpa_points", "grade_value"),
     '''def {name}(letter):
    table = {{"A": 4, "B": 3, "C": 2, "D": 1}}
    if letter in table:
        return table[letter]
    return 0
''', [{}, {"letter": "grade", "table": "points"}, {"letter": "mark", "table": "scale"}],
     ["{name}('A')", "{name}('D')", "{name}('F')"]),

    (("sum_of_divisors", "divisor_total", "aliquot_sum"),
     '''def {name}(n):
    total = 0
    i = 1
    while i <= n // 2:
        if n % i == 0:
            total += i
        i += 1
    return total
''', [{}, {"n": "num", "total": "acc", "i": "d"}, {"n": "value", "total": "s", "i": "k"}],
     ["{name}(12)", "{name}(7)", "{name}(1)"]),

    (("perfect_number_check", "is_perfect", "perfect_test"),
     '''def {name}(n):
    if n < 2:
        return False
    total = 0
    for i in range(1, n):
        if n % i == 0:
            total += i
    return total == n
''', [{}, {"n": "num", "total": "acc", "i": "d"}, {"n": "value", "total": "divsum", "i": "k"}],
     ["{name}(6)", "{name}(28)", "{name}(12)"]),

    (("armstrong_check", "narcissistic_test", "is_armstrong"),
     '''def {name}(n):
    digits = str(n)
    power = len(digits)
    total = 0
    for d in digits:
        total += int(d) ** power
    return total == n
''', [{}, {"n": "num", "digits": "chars", "power": "width", "total": "acc", "d": "c"},
      {"n": "value", "digits": "text", "power": "exp", "total": "s", "d": "digit"}],
     ["{name}(153)", "{name}(10)", "{name}(9)"]),

    (("caesar_decode_one", "unshift_letters", "shift_back"),
     '''def {name}(s):
    out = ""
    for ch in s:
        out += chr(ord(ch) - 1)
    return out
''', [{}, {"s": "text", "out": "plain", "ch": "c"}, {"s": "cipher", "out": "decoded", "ch": "sym"}],
     ["{name}('bcd')", "{name}('')", "{name}('z')"]),

    (("vote_winner", "majority_item", "most_common_entry"),
     '''def {name}(votes):
    best = None
    best_count = 0
    for v in votes:
        count = 0
        for w in votes:
            if w == v:
                count += 1
        if count > best_count:
            best_count = count
            best = v
    return best
''', [{}, {"votes": "ballots", "best": "leader", "best_count": "top_count", "v": "choice", "w": "other", "count": "n"},
      {"votes": "entries", "best": "winner", "best_count": "max_seen", "v": "a", "w": "b", "count": "freq"}],
     ["{name}(['a', 'b', 'a'])", "{name}([])", "{name}([3, 3, 2, 2, 2])"]),

    (("stack_depth_trace", "max_nesting", "deepest_level"),
     '''def {name}(s):
    depth = 0
    deepest = 0
    for ch in s:
        if ch == "(":
            depth += 1
            if depth > deepest:
                deepest = depth
        elif ch == ")":
            depth -= 1
    return deepest
''', [{}, {"s": "expr", "depth": "level", "deepest": "max_level", "ch": "c"},
      {"s": "text", "depth": "open_now", "deepest": "record", "ch": "tok"}],
     ["{name}('(())')", "{name}('()()')", "{name}('')"]),

    (("tax_owed", "income_tax", "tax_amount"),
     '''def {name}(income):
    if income <= 10000:
        return 0
    if income <= 40000:
        return (income - 10000) * 10 // 100
    base = 3000
    return base + (income - 40000) * 20 // 100
''', [{}, {"income": "salary", "base": "lower_band"}, {"income": "earnings", "base": "floor_tax"}],
     ["{name}(5000)", "{name}(20000)", "{name}(50000)"]),

    (("word_with_most_vowels", "vowel_heavy_word", "richest_word"),
     '''def {name}(words):
    best = ""
    best_count = -1
    for w in words:
        count = 0
        for ch in w:
            if ch in "aeiou":
                count += 1
        if count > best_count:
            best_count = count
            best = w
    return best
''', [{}, {"words": "tokens", "best": "pick", "best_count": "record", "w": "word", "ch": "c", "count": "n"},
      {"words": "names", "best": "chosen", "best_count": "top", "w": "name", "ch": "letter", "count": "vowels"}],
     ["{name}(['sky', 'sea', 'audio'])", "{name}(['x'])", "{name}([])"]),

    (("late_fee_for_days", "overdue_charge", "penalty_amount"),
     '''def {name}(days):
    fee = 0
    d = 0
    while d < days:
        if d < 7:
            fee += 1
        else:
            fee += 3
        d += 1
    return fee
''', [{}, {"days": "overdue", "fee": "charge", "d": "day"}, {"days": "count", "fee": "total", "d": "i"}],
     ["{name}(3)", "{name}(10)", "{name}(0)"]),

    (("common_prefix_length", "shared_prefix_size", "prefix_overlap"),
     '''def {name}(a, b):
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i
''', [{}, {"a": "first", "b": "second", "i": "pos"}, {"a": "s1", "b": "s2", "i": "k"}],
     ["{name}('flower', 'flow')", "{name}('abc', 'xbc')", "{name}('', 'a')"]),

    (("list_difference_sum", "gap_total", "step_distance"),
     '''def {name}(xs):
    total = 0
    for i in range(1, len(xs)):
        gap = xs[i] - xs[i - 1]
        if gap < 0:
            gap = -gap
        total += gap
    return total
''', [{}, {"xs": "points", "total": "distance", "i": "k", "gap": "step"},
      {"xs": "levels", "total": "movement", "i": "idx", "gap": "jump"}],
     ["{name}([1, 4, 2])", "{name}([5])", "{name}([])"]),

    (("np_candles_burned", "burn_hours", "candle_time"),
     '''def {name}(candles, rate):
    hours = 0
    remaining = candles
    while remaining >= rate:
        remaining -= rate
        hours += 1
    return hours
''', [{}, {"candles": "wax", "rate": "per_hour", "hours": "elapsed", "remaining": "left"},
      {"candles": "fuel", "rate": "usage", "hours": "ticks", "remaining": "stock"}],
     ["{name}(10, 3)", "{name}(2, 5)", "{name}(9, 3)"]),

    (("describe_number", "number_description", "classify_value"),
     '''def {name}(n):
    if n == 0:
        return "zero"
    if n > 0 and n % 2 == 0:
        return "positive even"
    if n > 0:
        return "positive odd"
    if n % 2 == 0:
        return "negative even"
    return "negative odd"
''', [{}, {"n": "num"}, {"n": "value"}],
     ["{name}(0)", "{name}(4)", "{name}(-3)"]),

    (("swap_adjacent_pairs", "pairwise_swap", "exchange_neighbors"),
     '''def {name}(xs):
    out = list(xs)
    i = 0
    while i + 1 < len(out):
        out[i], out[i + 1] = out[i + 1], out[i]
        i += 2
    return out
''', [{}, {"xs": "items", "out": "arr", "i": "pos"}, {"xs": "seq", "out": "swapped", "i": "k"}],
     ["{name}([1, 2, 3, 4])", "{name}([1, 2, 3])", "{name}([])"]),

    (("scrabble_like_score", "letter_points_total", "word_score"),
     '''def {name}(word):
    score = 0
    for ch in word:
        if ch in "aeiou":
            score += 1
        else:
            score += 2
    return score
''', [{}, {"word": "text", "score": "points", "ch": "c"}, {"word": "token", "score": "value", "ch": "letter"}],
     ["{name}('cab')", "{name}('')", "{name}('aa')"]),

    (("range_overlap_size", "interval_intersection", "common_span"),
     '''def {name}(a1, a2, b1, b2):
    lo = max(a1, b1)
    hi = min(a2, b2)
    if hi <= lo:
        return 0
    return hi - lo
''', [{}, {"a1": "s1", "a2": "e1", "b1": "s2", "b2": "e2", "lo": "left", "hi": "right"},
      {"a1": "x1", "a2": "x2", "b1": "y1", "b2": "y2", "lo": "begin", "hi": "finish"}],
     ["{name}(0, 5, 3, 9)", "{name}(0, 2, 4, 6)", "{name}(1, 10, 2, 3)"]),

    (("is_isogram", "no_repeat_letters", "all_unique_chars"),
     '''def {name}(word):
    seen = ""
    for ch in word:
        if ch in seen:
            return False
        seen += ch
    return True
''', [{}, {"word": "text", "seen": "used", "ch": "c"}, {"word": "s", "seen": "collected", "ch": "letter"}],
     ["{name}('lumber')", "{name}('letter')", "{name}('')"]),

    (("sum_mixed_signs", "signed_totals", "split_sign_sums"),
     '''def {name}(xs):
    pos = 0
    neg = 0
    for x in xs:
        if x >= 0:
            pos += x
        else:
            neg += x
    return (pos, neg)
''', [{}, {"xs": "nums", "pos": "gains", "neg": "losses", "x": "n"},
      {"xs": "entries", "pos": "plus", "neg": "minus", "x": "e"}],
     ["{name}([1, -2, 3])", "{name}([])", "{name}([-5, -5])"]),

    (("div_round_up", "ceil_divide", "chunks_needed"),
     '''def {name}(total, size):
    full = total // size
    if total % size != 0:
        full += 1
    return full
''', [{}, {"total": "items", "size": "per_box", "full": "boxes"},
      {"total": "bytes_count", "size": "block", "full": "blocks"}],
     ["{name}(10, 3)", "{name}(9, 3)", "{name}(1, 5)"]),

    (("progressive_double", "stake_after_losses", "doubling_stake"),
     '''def {name}(start, losses):
    stake = start
    for i in range(losses):
        stake = stake * 2
    return stake
''', [{}, {"start": "base", "losses": "rounds", "stake": "bet", "i": "r"},
      {"start": "seed", "losses": "times", "stake": "amount", "i": "t"}],
     ["{name}(5, 3)", "{name}(5, 0)", "{name}(1, 6)"]),

    (("filter_long_words", "words_longer_than", "keep_big_words"),
     '''def {name}(words, n):
    return [w for w in words if len(w) > n]
''', [{}, {"words": "tokens", "n": "cutoff", "w": "t"}, {"words": "names", "n": "minlen", "w": "nm"}],
     ["{name}(['a', 'abc', 'ab'], 1)", "{name}([], 2)", "{name}(['xy'], 5)"]),

    (("int_list_to_string", "join_numbers", "digits_to_text"),
     '''def {name}(xs):
    out = ""
    for x in xs:
        out += str(x)
    return out
''', [{}, {"xs": "nums", "out": "text", "x": "n"}, {"xs": "digits", "out": "joined", "x": "d"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}([7])"]),

    (("odd_index_values", "alternate_items", "every_second"),
     '''def {name}(xs):
    return [xs[i] for i in range(1, len(xs), 2)]
''', [{}, {"xs": "items", "i": "k"}, {"xs": "seq", "i": "pos"}],
     ["{name}([1, 2, 3, 4])", "{name}([1])", "{name}([])"]),

    (("compare_versions", "version_order", "semver_compare"),
     '''def {name}(a, b):
    pa = [int(x) for x in a.split(".")]
    pb = [int(x) for x in b.split(".")]
    for i in range(max(len(pa), len(pb))):
        va = pa[i] if i < len(pa) else 0
        vb = pb[i] if i < len(pb) else 0
        if va > vb:
            return 1
        if va < vb:
            return -1
    return 0
''', [{}, {"a": "left", "b": "right", "pa": "lparts", "pb": "rparts", "va": "lv", "vb": "rv", "i": "k"},
      {"a": "v1", "b": "v2", "pa": "first_nums", "pb": "second_nums", "va": "x1", "vb": "x2", "i": "pos"}],
     ["{name}('1.2', '1.10')", "{name}('2.0', '2')", "{name}('0.9', '1.0')"]),

    (("checkerboard_color", "square_color", "board_cell_shade"),
     '''def {name}(row, col):
    if (row + col) % 2 == 0:
        return "black"
    return "white"
''', [{}, {"row": "r", "col": "c"}, {"row": "y", "col": "x"}],
     ["{name}(0, 0)", "{name}(0, 1)", "{name}(3, 4)"]),

    (("accumulate_until_limit", "take_while_under", "collect_below_budget"),
     '''def {name}(costs, budget):
    chosen = []
    spent = 0
    for c in costs:
        if spent + c > budget:
            break
        chosen.append(c)
        spent += c
    return chosen
''', [{}, {"costs": "prices", "budget": "cap", "chosen": "cart", "spent": "used", "c": "price"},
      {"costs": "weights", "budget": "limit", "chosen": "loaded", "spent": "carried", "c": "w"}],
     ["{name}([3, 4, 5], 8)", "{name}([10], 5)", "{name}([], 9)"]),

    (("mirror_number_pairs", "pair_with_reverse", "attach_reversed"),
     '''def {name}(xs):
    out = []
    for x in xs:
        out.append((x, -x))
    return out
''', [{}, {"xs": "nums", "out": "pairs", "x": "n"}, {"xs": "values", "out": "mirrored", "x": "v"}],
     ["{name}([1, 2])", "{name}([])", "{name}([0])"]),

    (("is_almost_equal", "close_enough", "within_tolerance"),
     '''def {name}(a, b, tol):
    diff = a - b
    if diff < 0:
        diff = -diff
    return diff <= tol
''', [{}, {"a": "x", "b": "y", "tol": "eps", "diff": "delta"},
      {"a": "left", "b": "right", "tol": "margin", "diff": "gap"}],
     ["{name}(5, 7, 2)", "{name}(5, 8, 2)", "{name}(3, 3, 0)"]),

    (("repeated_digit_check", "has_double_digit", "adjacent_twins"),
     '''def {name}(n):
    text = str(n)
    for i in range(len(text) - 1):
        if text[i] == text[i + 1]:
            return True
    return False
''', [{}, {"n": "num", "text": "digits", "i": "k"}, {"n": "value", "text": "chars", "i": "pos"}],
     ["{name}(1223)", "{name}(1234)", "{name}(7)"]),

    (("game_of_doubles", "score_with_bonus", "streak_points"),
     '''def {name}(rolls):
    points = 0
    streak = 0
    for r in rolls:
        if r == 6:
            streak += 1
            points += r * streak
        else:
            streak = 0
            points += r
    return points
''', [{}, {"rolls": "throws", "points": "total", "streak": "chain", "r": "roll"},
      {"rolls": "turns", "points": "score", "streak": "combo", "r": "t"}],
     ["{name}([6, 6, 1])", "{name}([1, 2, 3])", "{name}([])"]),

    (("count_boundary_hits", "edge_touch_total", "limit_strikes"),
     '''def {name}(xs, lo, hi):
    hits = 0
    for x in xs:
        if x == lo or x == hi:
            hits += 1
    return hits
''', [{}, {"xs": "readings", "lo": "floor", "hi": "ceiling", "hits": "touches", "x": "r"},
      {"xs": "values", "lo": "low", "hi": "high", "hits": "count", "x": "v"}],
     ["{name}([0, 5, 10], 0, 10)", "{name}([3, 4], 0, 10)", "{name}([], 1, 2)"]),

    (("projectile_range_steps", "trajectory_cells", "flight_distance"),
     '''def {name}(speed, decay):
    distance = 0
    velocity = speed
    while velocity > 0:
        distance += velocity
        velocity = velocity - decay
    return distance * 2 // 2
''', [{}, {"speed": "v0", "decay": "drag", "distance": "travelled", "velocity": "v"},
      {"speed": "launch", "decay": "loss", "distance": "covered", "velocity": "current"}],
     ["{name}(10, 3)", "{name}(0, 1)", "{name}(5, 5)"]),

    (("quadratic_root_count", "discriminant_roots", "roots_of_quadratic"),
     '''def {name}(a, b, c):
    disc = b * b - 4 * a * c
    if disc > 0:
        return 2
    if disc == 0:
        return 1
    return 0
''', [{}, {"a": "qa", "b": "qb", "c": "qc", "disc": "delta"},
      {"a": "coef2", "b": "coef1", "c": "coef0", "disc": "det"}],
     ["{name}(1, 4, 1)", "{name}(1, 2, 1)", "{name}(1, 0, 1)"]),

    (("bmi_category", "body_mass_label", "weight_class"),
     '''def {name}(weight, height):
    bmi = weight / (height * height)
    if bmi < 18.5:
        return "under"
    if bmi < 25 and bmi >= 18.5:
        return "normal"
    if bmi >= 25 and bmi < 30:
        return "over"
    return "obese"
''', [{}, {"weight": "kg", "height": "meters", "bmi": "index"},
      {"weight": "mass", "height": "stature", "bmi": "ratio"}],
     ["{name}(50, 1.8)", "{name}(70, 1.75)", "{name}(110, 1.7)"]),

    (("variance_scaled", "spread_times_n", "scatter_measure"),
     '''def {name}(xs):
    n = len(xs)
    mean = sum(xs) / n
    total = 0
    for x in xs:
        diff = x - mean
        total += diff * diff
    return total / n
''', [{}, {"xs": "samples", "n": "count", "mean": "avg", "total": "acc", "x": "s", "diff": "dev"},
      {"xs": "data", "n": "size", "mean": "center", "total": "sq_sum", "x": "d", "diff": "offset"}],
     ["{name}([2, 4, 6])", "{name}([5, 5])", "{name}([1, 2])"]),

    (("compound_growth", "invested_value", "balance_growth"),
     '''def {name}(principal, rate, years):
    amount = principal
    y = 0
    while y < years:
        amount = amount + amount * rate // 100
        y += 1
    return amount
''', [{}, {"principal": "start", "rate": "pct", "years": "periods", "amount": "value", "y": "t"},
      {"principal": "deposit", "rate": "apr", "years": "n", "amount": "balance", "y": "period"}],
     ["{name}(100, 10, 2)", "{name}(100, 0, 5)", "{name}(50, 100, 1)"]),

    (("grid_path_count", "lattice_paths", "route_total"),
     '''def {name}(rows, cols):
    grid = [[1] * cols for r in range(rows)]
    for r in range(1, rows):
        for c in range(1, cols):
            grid[r][c] = grid[r - 1][c] + grid[r][c - 1]
    return grid[rows - 1][cols - 1]
''', [{}, {"rows": "height", "cols": "width", "grid": "table", "r": "i", "c": "j"},
      {"rows": "m", "cols": "n", "grid": "ways", "r": "y", "c": "x"}],
     ["{name}(2, 2)", "{name}(3, 3)", "{name}(1, 5)"]),

    (("energy_bill", "power_cost", "electricity_charge"),
     '''def {name}(units):
    if units <= 100:
        return units * 2
    if units <= 300:
        return 200 + (units - 100) * 3
    return 800 + (units - 300) * 5
''', [{}, {"units": "kwh"}, {"units": "consumed"}],
     ["{name}(80)", "{name}(200)", "{name}(400)"]),

    (("distance_squared", "sq_distance", "euclid_sq"),
     '''def {name}(x1, y1, x2, y2):
    dx = x2 - x1
    dy = y2 - y1
    return dx * dx + dy * dy
''', [{}, {"x1": "ax", "y1": "ay", "x2": "bx", "y2": "by", "dx": "run", "dy": "rise"},
      {"x1": "px", "y1": "py", "x2": "qx", "y2": "qy", "dx": "ddx", "dy": "ddy"}],
     ["{name}(0, 0, 3, 4)", "{name}(1, 1, 1, 1)", "{name}(-1, -1, 2, 3)"]),

    (("polynomial_at", "evaluate_poly", "poly_value"),
     '''def {name}(coeffs, x):
    result = 0
    power = 1
    for c in coeffs:
        result += c * power
        power *= x
    return result
''', [{}, {"coeffs": "terms", "x": "point", "result": "total", "power": "xn", "c": "coef"},
      {"coeffs": "poly", "x": "at", "result": "value", "power": "factor", "c": "a"}],
     ["{name}([1, 2, 3], 2)", "{name}([5], 9)", "{name}([], 3)"]),

    (("heron_area_rounded", "triangle_surface", "area_three_sides"),
     '''def {name}(a, b, c):
    if a + b <= c or a + c <= b or b + c <= a:
        return -1
    s = (a + b + c) / 2
    area = (s * (s - a) * (s - b) * (s - c)) ** 0.5
    area = round(area, 2)
    return area
''', [{}, {"a": "side1", "b": "side2", "c": "side3", "s": "semi", "area": "surface"},
      {"a": "p", "b": "q", "c": "r", "s": "half", "area": "result"}],
     ["{name}(3, 4, 5)", "{name}(1, 1, 3)", "{name}(6, 8, 10)"]),

    (("speed_fine", "ticket_amount", "overspeed_penalty"),
     '''def {name}(speed, limit):
    over = speed - limit
    if over <= 0:
        return 0
    if over < 10 and speed < 100:
        return 50
    if over < 20 or speed == 100:
        return 150
    return 300
''', [{}, {"speed": "velocity", "limit": "cap", "over": "excess"},
      {"speed": "measured", "limit": "allowed", "over": "delta"}],
     ["{name}(60, 60)", "{name}(65, 60)", "{name}(95, 60)"]),

    (("sum_alternating_signs", "seesaw_total", "zigzag_sum"),
     '''def {name}(n):
    total = 0
    for i in range(1, n + 1):
        if i % 2 == 0:
            total -= i
        else:
            total += i
    return total
''', [{}, {"n": "limit", "total": "acc", "i": "k"}, {"n": "upto", "total": "result", "i": "term"}],
     ["{name}(4)", "{name}(5)", "{name}(0)"]),

    (("stairs_with_skip", "jump_combinations", "step_ways"),
     '''def {name}(n):
    if n <= 1:
        return 1
    one_back = 1
    two_back = 1
    for i in range(2, n + 1):
        current = one_back + two_back
        two_back = one_back
        one_back = current
    return one_back
''', [{}, {"n": "steps", "one_back": "prev1", "two_back": "prev2", "current": "now", "i": "s"},
      {"n": "height", "one_back": "a", "two_back": "b", "current": "c", "i": "level"}],
     ["{name}(4)", "{name}(1)", "{name}(6)"]),

    (("profit_or_loss", "trade_result", "net_outcome"),
     '''def {name}(buy, sell, fee):
    gross = sell - buy
    net = gross - fee
    if net > 0:
        return "profit"
    if net < 0:
        return "loss"
    return "even"
''', [{}, {"buy": "cost", "sell": "price", "fee": "charge", "gross": "raw", "net": "final"},
      {"buy": "entry", "sell": "exit", "fee": "commission", "gross": "diff", "net": "result"}],
     ["{name}(10, 15, 2)", "{name}(10, 11, 1)", "{name}(10, 8, 1)"]),

    (("window_max_sum", "best_window_total", "max_subarray_fixed"),
     '''def {name}(xs, k):
    if len(xs) < k or k <= 0:
        return 0
    best = sum(xs[:k])
    current = best
    for i in range(k, len(xs)):
        current = current + xs[i] - xs[i - k]
        if current > best:
            best = current
    return best
''', [{}, {"xs": "nums", "k": "width", "best": "top", "current": "window", "i": "pos"},
      {"xs": "series", "k": "span", "best": "record", "current": "rolling", "i": "t"}],
     ["{name}([1, 4, 2, 10], 2)", "{name}([5], 2)", "{name}([3, 3, 3], 3)"]),

    (("dice_total_greater", "roll_beats_target", "dice_win_check"),
     '''def {name}(d1, d2, target):
    total = d1 + d2
    bonus = 0
    if d1 == d2:
        bonus = total / 2
    return total + bonus > target
''', [{}, {"d1": "first_die", "d2": "second_die", "target": "goal", "total": "sum_faces", "bonus": "extra"},
      {"d1": "a", "d2": "b", "target": "needed", "total": "points", "bonus": "pair_bonus"}],
     ["{name}(3, 3, 8)", "{name}(2, 5, 9)", "{name}(6, 6, 17)"]),

    (("char_positions_match", "index_equals_code", "alphabet_position_hits"),
     '''def {name}(text):
    count = 0
    for i in range(len(text)):
        if i == ord(text[i]) - ord('a') or i == ord(text[i]) - ord('A'):
            count += 1
    return count
''', [{}, {"text": "s", "count": "hits", "i": "pos"}, {"text": "word", "count": "matches", "i": "k"}],
     ["{name}('abc')", "{name}('xyz')", "{name}('aBc')"]),

    (("countdown_string", "launch_sequence", "reverse_count_text"),
     '''def {name}(n):
    parts = []
    value = n
    while value > 0:
        parts.append(str(value))
        value -= 1
    parts.append("go")
    return " ".join(parts)
''', [{}, {"n": "start", "parts": "words", "value": "v"}, {"n": "from_num", "parts": "chunks", "value": "cur"}],
     ["{name}(3)", "{name}(0)", "{name}(1)"]),

    (("mixed_op_checksum", "token_checksum", "weighted_mod_sum"),
     '''def {name}(xs):
    total = 0
    for i in range(len(xs)):
        if i % 2 == 0:
            total += xs[i] * 3
        else:
            total -= xs[i] // 2
    return total % 97
''', [{}, {"xs": "digits", "total": "acc", "i": "pos"}, {"xs": "codes", "total": "chk", "i": "k"}],
     ["{name}([1, 2, 3])", "{name}([])", "{name}([9, 9, 9, 9])"]),

    (("library_fine_report", "overdue_summary", "fine_statement"),
     '''def {name}(days_list, daily_fee, grace):
    total = 0
    worst = 0
    charged_items = 0
    for days in days_list:
        if days <= grace:
            continue
        overdue = days - grace
        fine = overdue * daily_fee
        if fine > 50:
            fine = 50 + (fine - 50) // 2
        total += fine
        charged_items += 1
        if days > worst:
            worst = days
    return (total, charged_items, worst)
''', [{}, {"days_list": "loans", "daily_fee": "rate", "grace": "free_days", "total": "owed",
           "worst": "longest", "charged_items": "billed", "days": "kept", "overdue": "late", "fine": "amount"},
      {"days_list": "records", "daily_fee": "per_day", "grace": "allowance", "total": "sum_due",
       "worst": "max_days", "charged_items": "hits", "days": "d", "overdue": "past", "fine": "charge"}],
     ["{name}([3, 10, 40], 2, 5)", "{name}([1, 2], 3, 5)", "{name}([100], 1, 0)"]),

    (("inventory_restock_plan", "stock_order_list", "replenish_schedule"),
     '''def {name}(levels, minimum, batch):
    orders = []
    total_units = 0
    below_count = 0
    for level in levels:
        if level >= minimum:
            orders.append(0)
            continue
        needed = minimum - level
        units = ((needed + batch - 1) // batch) * batch
        orders.append(units)
        total_units += units
        below_count += 1
    return (orders, total_units, below_count)
''', [{}, {"levels": "stock", "minimum": "floor_level", "batch": "pack", "orders": "plan",
           "total_units": "ordered", "below_count": "shortages", "level": "qty", "needed": "gap", "units": "amount"},
      {"levels": "counts", "minimum": "target", "batch": "lot", "orders": "requests",
       "total_units": "units_sum", "below_count": "low_items", "level": "count", "needed": "missing", "units": "lot_units"}],
     ["{name}([5, 20, 3], 10, 4)", "{name}([30], 10, 5)", "{name}([], 10, 5)"]),

    (("tournament_standings", "league_points", "season_table"),
     '''def {name}(results):
    wins = 0
    draws = 0
    losses = 0
    scored = 0
    conceded = 0
    for ours, theirs in results:
        scored += ours
        conceded += theirs
        if ours > theirs:
            wins += 1
        elif ours == theirs:
            draws += 1
        else:
            losses += 1
    points = wins * 3 + draws
    return (points, wins, draws, losses, scored - conceded)
''', [{}, {"results": "matches", "wins": "won", "draws": "tied", "losses": "lost",
           "scored": "goals_for", "conceded": "goals_against", "ours": "us", "theirs": "them", "points": "total"},
      {"results": "games", "wins": "victories", "draws": "splits", "losses": "defeats",
       "scored": "made", "conceded": "allowed", "ours": "home", "theirs": "away", "points": "score"}],
     ["{name}([(2, 1), (0, 0), (1, 3)])", "{name}([])", "{name}([(5, 0)])"]),

    (("histogram_ascii_rows", "bar_chart_lines", "count_bars"),
     '''def {name}(values):
    rows = []
    for v in values:
        if v <= 0:
            rows.append("")
            continue
        width = v
        if width > 10:
            width = 10
        bar = "#" * width
        if v > 10:
            bar += "+"
        rows.append(bar)
    return rows
''', [{}, {"values": "counts", "rows": "lines", "v": "count", "width": "w", "bar": "row"},
      {"values": "data", "rows": "chart", "v": "d", "width": "size", "bar": "marks"}],
     ["{name}([1, 12, 0])", "{name}([])", "{name}([10, 11])"]),

    (("parse_and_sum_digits", "digit_harvest", "extract_digit_total"),
     '''def {name}(text):
    total = 0
    count = 0
    current = 0
    in_number = False
    for ch in text:
        if ch.isdigit():
            current = current * 10 + int(ch)
            in_number = True
        else:
            if in_number:
                total += current
                count += 1
            current = 0
            in_number = False
    if in_number:
        total += current
        count += 1
    return (total, count)
''', [{}, {"text": "s", "total": "acc", "count": "numbers", "current": "value", "in_number": "reading", "ch": "c"},
      {"text": "line", "total": "grand", "count": "found", "current": "num", "in_number": "active", "ch": "sym"}],
     ["{name}('ab12cd3')", "{name}('xyz')", "{name}('7 and 8')"]),

    (("seat_allocation", "fill_rows", "assign_seats"),
     '''def {name}(people, row_size):
    full_rows = people // row_size
    leftover = people % row_size
    rows_used = full_rows
    if leftover > 0:
        rows_used += 1
    empty_seats = 0
    if leftover > 0:
        empty_seats = row_size - leftover
    return (rows_used, empty_seats)
''', [{}, {"people": "guests", "row_size": "per_row", "full_rows": "complete", "leftover": "extra",
           "rows_used": "rows_needed", "empty_seats": "spare"},
      {"people": "count", "row_size": "capacity", "full_rows": "whole", "leftover": "rem",
       "rows_used": "used", "empty_seats": "unused"}],
     ["{name}(10, 4)", "{name}(8, 4)", "{name}(0, 3)"]),

    (("moving_average_list", "rolling_means", "window_averages"),
     '''def {name}(xs, k):
    if k <= 0 or len(xs) < k:
        return []
    out = []
    window_sum = sum(xs[:k])
    out.append(window_sum / k)
    for i in range(k, len(xs)):
        window_sum += xs[i] - xs[i - k]
        out.append(window_sum / k)
    return out
''', [{}, {"xs": "series", "k": "width", "out": "means", "window_sum": "acc", "i": "t"},
      {"xs": "points", "k": "span", "out": "smoothed", "window_sum": "running", "i": "idx"}],
     ["{name}([1, 2, 3, 4], 2)", "{name}([5], 2)", "{name}([2, 4, 6], 3)"]),

    (("caesar_full_shift", "rotate_alphabet", "letter_rotation"),
     '''def {name}(text, shift):
    out = ""
    for ch in text:
        if ch.isalpha() and ch.islower():
            moved = ord(ch) - ord('a') + shift
            out += chr(ord('a') + moved % 26)
        elif ch.isalpha():
            moved = ord(ch) - ord('A') + shift
            out += chr(ord('A') + moved % 26)
        else:
            out += ch
    return out
''', [{}, {"text": "message", "shift": "key", "out": "cipher", "ch": "c", "moved": "pos"},
      {"text": "plain", "shift": "offset", "out": "encoded", "ch": "letter", "moved": "idx"}],
     ["{name}('abz', 1)", "{name}('Hello, World', 13)", "{name}('', 5)"]),

    (("matrix_diagonal_sums", "diag_totals", "cross_sums"),
     '''def {name}(grid):
    n = len(grid)
    main = 0
    anti = 0
    for i in range(n):
        main += grid[i][i]
        anti += grid[i][n - 1 - i]
    if n % 2 == 1:
        middle = grid[n // 2][n // 2]
        return (main, anti, main + anti - middle)
    return (main, anti, main + anti)
''', [{}, {"grid": "matrix", "n": "size", "main": "primary", "anti": "secondary", "i": "k", "middle": "center"},
      {"grid": "board", "n": "dim", "main": "down", "anti": "up", "i": "r", "middle": "mid"}],
     ["{name}([[1, 2], [3, 4]])", "{name}([[5]])", "{name}([[1, 0, 0], [0, 1, 0], [0, 0, 1]])"]),

    (("scoreboard_merge", "combine_rounds", "total_by_player"),
     '''def {name}(round1, round2):
    totals = {{}}
    for player, points in round1:
        if player in totals:
            totals[player] += points
        else:
            totals[player] = points
    for player, points in round2:
        if player in totals:
            totals[player] += points
        else:
            totals[player] = points
    best = None
    best_points = -1
    for player in totals:
        if totals[player] > best_points:
            best_points = totals[player]
            best = player
    return (best, best_points)
''', [{}, {"round1": "first_round", "round2": "second_round", "totals": "scores", "player": "who",
           "points": "pts", "best": "leader", "best_points": "top"},
      {"round1": "morning", "round2": "evening", "totals": "board", "player": "name",
       "points": "gain", "best": "winner", "best_points": "record"}],
     ["{name}([('a', 2)], [('a', 3), ('b', 4)])", "{name}([], [('x', 1)])", "{name}([('p', 5)], [])"]),

    (("password_retry_lockout", "login_simulation", "auth_attempts"),
     '''def {name}(attempts, correct, max_tries):
    tries = 0
    locked = False
    success = False
    for guess in attempts:
        if locked:
            break
        tries += 1
        if guess == correct:
            success = True
            break
        if tries >= max_tries:
            locked = True
    return (success, locked, tries)
''', [{}, {"attempts": "guesses", "correct": "secret", "max_tries": "limit", "tries": "used",
           "locked": "blocked", "success": "entered", "guess": "attempt"},
      {"attempts": "inputs", "correct": "password", "max_tries": "cap", "tries": "count",
       "locked": "frozen", "success": "ok", "guess": "entry"}],
     ["{name}(['a', 'b'], 'b', 3)", "{name}(['x', 'y', 'z'], 'q', 3)", "{name}([], 'p', 2)"]),

    (("longest_increasing_run", "climb_streak", "rising_span"),
     '''def {name}(xs):
    if not xs:
        return 0
    best = 1
    length = 1
    for i in range(1, len(xs)):
        if xs[i] > xs[i - 1]:
            length += 1
        else:
            length = 1
        if length > best:
            best = length
    return best
''', [{}, {"xs": "values", "best": "record", "length": "run", "i": "k"},
      {"xs": "prices", "best": "longest", "length": "streak", "i": "day"}],
     ["{name}([1, 2, 3, 1, 2])", "{name}([])", "{name}([5, 4, 3])"]),

    (("vowel_consonant_ratio_report", "letter_mix_stats", "text_composition"),
     '''def {name}(text):
    vowels = 0
    consonants = 0
    others = 0
    for ch in text:
        if not ch.isalpha():
            others += 1
        elif ch.lower() in "aeiou":
            vowels += 1
        else:
            consonants += 1
    letters = vowels + consonants
    if letters == 0:
        return (0, 0, others)
    return (vowels, consonants, others)
''', [{}, {"text": "s", "vowels": "v_count", "consonants": "c_count", "others": "rest", "ch": "c", "letters": "alpha_total"},
      {"text": "line", "vowels": "open_sounds", "consonants": "closed_sounds", "others": "symbols", "ch": "token", "letters": "letter_total"}],
     ["{name}('hello world')", "{name}('123')", "{name}('aeiou!')"]),

    (("count_jump_ways", "step_combinations", "hop_count"),
     '''def {name}(n):
    A = [0] * (n + 1)
    B = [0] * (n + 1)
    A[0] = 1
    A[1] = 0
    B[0] = 0
    B[1] = 1
    for i in range(2, n + 1):
        A[i] = A[i - 2] + 2 * B[i - 1]
        B[i] = A[i - 1] + B[i - 2]
    return A[n]
''', [{}, {"A": "P", "B": "Q", "i": "j"}, {"A": "u", "B": "w", "i": "t"}],
     ["{name}(4)", "{name}(2)", "{name}(7)"]),

    (("tribonacci_value", "three_step_seq", "triple_fib"),
     '''def {name}(n):
    t = [0] * (n + 3)
    t[0] = 0
    t[1] = 1
    t[2] = 1
    i = 3
    while i <= n:
        t[i] = t[i - 1] + t[i - 2] + t[i - 3]
        i += 1
    return t[n]
''', [{}, {"t": "f", "i": "k"}, {"t": "seq", "i": "j"}],
     ["{name}(5)", "{name}(2)", "{name}(8)"]),

    (("max_drop_value", "biggest_fall", "steepest_decline"),
     '''def {name}(xs):
    n = len(xs)
    if n < 2:
        return 0
    d = 0
    h = xs[0]
    for i in range(1, n):
        if xs[i] > h:
            h = xs[i]
        if h - xs[i] > d:
            d = h - xs[i]
    return d
''', [{}, {"xs": "a", "n": "m", "d": "drop", "h": "peak", "i": "j"},
      {"xs": "vals", "n": "size", "d": "g", "h": "p", "i": "k"}],
     ["{name}([9, 4, 7, 2])", "{name}([1, 2, 3])", "{name}([5])"]),

    (("pascal_row_values", "binomial_row", "triangle_row"),
     '''def {name}(n):
    r = [1]
    for i in range(n):
        r2 = [1]
        for j in range(len(r) - 1):
            r2.append(r[j] + r[j + 1])
        r2.append(1)
        r = r2
    return r
''', [{}, {"r": "row", "r2": "nxt", "i": "level", "j": "k"}, {"r": "cur", "r2": "below", "i": "step", "j": "t"}],
     ["{name}(3)", "{name}(0)", "{name}(5)"]),

    (("prefix_products_capped", "running_product_limit", "bounded_products"),
     '''def {name}(xs, cap):
    p = 1
    out = []
    for x in xs:
        p = p * x
        if p > cap:
            p = cap
        if p < -cap:
            p = -cap
        out.append(p)
    return out
''', [{}, {"xs": "a", "p": "acc", "out": "res", "x": "v", "cap": "limit"},
      {"xs": "nums", "p": "r", "out": "seq", "x": "n", "cap": "bound"}],
     ["{name}([2, 3, 4], 10)", "{name}([], 5)", "{name}([-2, 5], 6)"]),

    (("digit_root_value", "repeated_digit_sum", "collapse_digits"),
     '''def {name}(n):
    v = n
    while v >= 10:
        s = 0
        m = v
        while m > 0:
            s += m % 10
            m = m // 10
        v = s
    return v
''', [{}, {"v": "x", "s": "acc", "m": "rest"}, {"v": "cur", "s": "t", "m": "q"}],
     ["{name}(49)", "{name}(5)", "{name}(999)"]),

    (("smallest_missing_positive", "first_gap_number", "lowest_absent"),
     '''def {name}(xs):
    k = 1
    while True:
        found = False
        for x in xs:
            if x == k:
                found = True
                break
        if not found:
            return k
        k += 1
''', [{}, {"xs": "a", "k": "m", "found": "seen", "x": "v"},
      {"xs": "nums", "k": "probe", "found": "hit", "x": "n"}],
     ["{name}([1, 2, 4])", "{name}([2, 3])", "{name}([])"]),

    (("frequency_sorted_digits", "digit_histogram", "digit_counts_list"),
     '''def {name}(n):
    c = [0] * 10
    m = n
    if m == 0:
        c[0] = 1
    while m > 0:
        d = m % 10
        c[d] += 1
        m = m // 10
    return c
''', [{}, {"c": "h", "m": "rest", "d": "digit"}, {"c": "bins", "m": "left", "d": "x"}],
     ["{name}(122)", "{name}(0)", "{name}(9090)"]),

    (("cube_of", "third_power"),
     '''def {name}(n):
    return n * n * n
''', [{}, {"n": "x"}],
     ["{name}(3)", "{name}(-2)", "{name}(0)"]),

    (("double_plus_one", "twice_then_inc"),
     '''def {name}(n):
    return 2 * n + 1
''', [{}, {"n": "k"}],
     ["{name}(5)", "{name}(0)", "{name}(-3)"]),

    (("minutes_to_seconds", "mins_to_secs"),
     '''def {name}(m):
    return m * 60
''', [{}, {"m": "minutes"}],
     ["{name}(2)", "{name}(0)", "{name}(90)"]),

    (("circle_area_scaled", "disc_area_times_ten"),
     '''def {name}(r):
    return 314 * r * r // 100
''', [{}, {"r": "radius"}],
     ["{name}(1)", "{name}(10)", "{name}(3)"]),

    (("sum_two_smallest", "min_pair_total"),
     '''def {name}(xs):
    s = sorted(xs)
    return s[0] + s[1]
''', [{}, {"xs": "nums", "s": "ordered"}],
     ["{name}([5, 2, 9, 1])", "{name}([3, 3])", "{name}([10, 1, 1])"]),

    (("last_two_sum", "tail_pair_total"),
     '''def {name}(xs):
    return xs[-1] + xs[-2]
''', [{}, {"xs": "items"}],
     ["{name}([1, 2, 3])", "{name}([5, 5])", "{name}([9, 1, 0, 4])"]),

    (("is_adult_age", "age_gate"),
     '''def {name}(age):
    return age >= 18
''', [{}, {"age": "years"}],
     ["{name}(18)", "{name}(17)", "{name}(40)"]),

    (("bigger_of_two", "pick_larger"),
     '''def {name}(a, b):
    if a > b:
        return a
    return b
''', [{}, {"a": "x", "b": "y"}],
     ["{name}(3, 5)", "{name}(5, 3)", "{name}(4, 4)"]),

    (("negate_if_odd", "odd_flip"),
     '''def {name}(n):
    if n % 2 != 0:
        return -n
    return n
''', [{}, {"n": "v"}],
     ["{name}(3)", "{name}(4)", "{name}(0)"]),

    (("half_rounded_down", "floor_half"),
     '''def {name}(n):
    return n // 2
''', [{}, {"n": "value"}],
     ["{name}(9)", "{name}(8)", "{name}(-3)"]),

    (("string_times_three", "triple_text"),
     '''def {name}(s):
    return s + s + s
''', [{}, {"s": "text"}],
     ["{name}('ab')", "{name}('')", "{name}('x')"]),

    (("first_char_or_empty", "head_char"),
     '''def {name}(s):
    if len(s) == 0:
        return ""
    return s[0]
''', [{}, {"s": "word"}],
     ["{name}('abc')", "{name}('')", "{name}('z')"]),

    (("ends_with_digit", "trailing_digit_check"),
     '''def {name}(s):
    return len(s) > 0 and s[-1].isdigit()
''', [{}, {"s": "text"}],
     ["{name}('ab1')", "{name}('abc')", "{name}('')"]),

    (("list_span", "length_difference"),
     '''def {name}(a, b):
    return len(a) - len(b)
''', [{}, {"a": "xs", "b": "ys"}],
     ["{name}([1, 2, 3], [1])", "{name}([], [2, 2])", "{name}([1], [1])"]),

    (("not_equal_thirds", "differs_by_three"),
     '''def {name}(a, b):
    return a != b and a % 3 == b % 3
''', [{}, {"a": "x", "b": "y"}],
     ["{name}(3, 6)", "{name}(3, 4)", "{name}(5, 5)"]),

    (("hypotenuse_squared", "right_side_sq"),
     '''def {name}(a, b):
    return a ** 2 + b ** 2
''', [{}, {"a": "leg1", "b": "leg2"}],
     ["{name}(3, 4)", "{name}(0, 5)", "{name}(1, 1)"]),

    (("swap_halves", "rotate_half"),
     '''def {name}(xs):
    mid = len(xs) // 2
    return xs[mid:] + xs[:mid]
''', [{}, {"xs": "items", "mid": "cut"}],
     ["{name}([1, 2, 3, 4])", "{name}([1, 2, 3])", "{name}([])"]),

    (("percent_of", "fraction_as_percent"),
     '''def {name}(part, whole):
    return part * 100 // whole
''', [{}, {"part": "num", "whole": "den"}],
     ["{name}(1, 4)", "{name}(3, 3)", "{name}(0, 7)"]),

    (("litres_needed", "fuel_required"),
     '''def {name}(distance, rate):
    return distance * rate // 100
''', [{}, {"distance": "km", "rate": "per_hundred"}],
     ["{name}(200, 8)", "{name}(0, 9)", "{name}(150, 10)"]),

    (("wind_chill_int", "feels_like"),
     '''def {name}(temp, wind):
    return temp - wind * 2 // 3
''', [{}, {"temp": "celsius", "wind": "speed"}],
     ["{name}(10, 9)", "{name}(0, 0)", "{name}(-5, 12)"]),

    (("add_three", "triple_sum"),
     '''def {name}(a, b, c):
    return a + b + c
''', [{}, {"a": "x", "b": "y", "c": "z"}],
     ["{name}(1, 2, 3)", "{name}(0, 0, 0)", "{name}(-1, 5, 2)"]),

    (("next_number", "successor"),
     '''def {name}(n):
    return n + 1
''', [{}, {"n": "k"}],
     ["{name}(5)", "{name}(-1)", "{name}(99)"]),

    (("gap_to_ten", "missing_to_ten"),
     '''def {name}(n):
    return 10 - n
''', [{}, {"n": "have"}],
     ["{name}(4)", "{name}(10)", "{name}(12)"]),

    (("area_of_right_triangle", "tri_area_int"),
     '''def {name}(b, h):
    return b * h / 2
''', [{}, {"b": "base", "h": "height"}],
     ["{name}(4, 6)", "{name}(3, 3)", "{name}(0, 9)"]),

    (("odd_check", "parity_is_odd"),
     '''def {name}(n):
    return n % 2 != 0
''', [{}, {"n": "v"}],
     ["{name}(3)", "{name}(8)", "{name}(-1)"]),

    (("smaller_of_two", "pick_lower"),
     '''def {name}(a, b):
    if a < b:
        return a
    return b
''', [{}, {"a": "p", "b": "q"}],
     ["{name}(2, 7)", "{name}(7, 2)", "{name}(4, 4)"]),

    (("list_head_tail_product", "ends_product"),
     '''def {name}(xs):
    return xs[0] * xs[-1]
''', [{}, {"xs": "nums"}],
     ["{name}([2, 5, 3])", "{name}([4])", "{name}([1, 0]) "]),

    (("square_minus_self", "self_square_gap"),
     '''def {name}(n):
    return n * n - n
''', [{}, {"n": "x"}],
     ["{name}(5)", "{name}(1)", "{name}(-2)"]),

    (("boolean_to_int", "flag_as_number"),
     '''def {name}(flag):
    if flag:
        return 1
    return 0
''', [{}, {"flag": "b"}],
     ["{name}(True)", "{name}(False)", "{name}(1 > 2)"]),

    (("char_at_middle", "middle_letter"),
     '''def {name}(s):
    return s[len(s) // 2]
''', [{}, {"s": "word"}],
     ["{name}('abc')", "{name}('test')", "{name}('q')"]),

    (("ticket_queue_simulation", "service_order_trace", "queue_processing_log"),
     '''def {name}(arrivals, capacity, service_rate):
    waiting = 0
    served_total = 0
    turned_away = 0
    peak_queue = 0
    log = []
    for batch in arrivals:
        waiting += batch
        if waiting > capacity:
            turned_away += waiting - capacity
            waiting = capacity
        if waiting > peak_queue:
            peak_queue = waiting
        served = service_rate
        if served > waiting:
            served = waiting
        waiting -= served
        served_total += served
        log.append((served, waiting))
    while waiting > 0:
        served = service_rate
        if served > waiting:
            served = waiting
        waiting -= served
        served_total += served
        log.append((served, waiting))
    return (served_total, turned_away, peak_queue, log)
''', [{}, {"arrivals": "incoming", "capacity": "room", "service_rate": "per_tick", "waiting": "queue",
           "served_total": "handled", "turned_away": "rejected", "peak_queue": "max_queue",
           "log": "trace", "batch": "group", "served": "done"},
      {"arrivals": "waves", "capacity": "limit", "service_rate": "speed", "waiting": "pending",
       "served_total": "completed", "turned_away": "lost", "peak_queue": "high_water",
       "log": "history", "batch": "wave", "served": "processed"}],
     ["{name}([5, 3], 6, 2)", "{name}([], 4, 1)", "{name}([10], 4, 3)"]),

    (("bowling_simple_score", "pin_game_total", "frame_score_sum"),
     '''def {name}(rolls):
    total = 0
    frame = 0
    i = 0
    while frame < 10 and i < len(rolls):
        first = rolls[i]
        if first == 10:
            bonus = 0
            if i + 1 < len(rolls):
                bonus += rolls[i + 1]
            if i + 2 < len(rolls):
                bonus += rolls[i + 2]
            total += 10 + bonus
            i += 1
        else:
            second = 0
            if i + 1 < len(rolls):
                second = rolls[i + 1]
            if first + second == 10:
                bonus = 0
                if i + 2 < len(rolls):
                    bonus = rolls[i + 2]
                total += 10 + bonus
            else:
                total += first + second
            i += 2
        frame += 1
    return total
''', [{}, {"rolls": "throws", "total": "score", "frame": "round_no", "i": "pos",
           "first": "roll1", "second": "roll2", "bonus": "extra"},
      {"rolls": "pins", "total": "points", "frame": "turn", "i": "cursor",
       "first": "a", "second": "b", "bonus": "add"}],
     ["{name}([10, 3, 4])", "{name}([4, 5, 2, 2])", "{name}([])"]),

    (("csv_field_parser", "split_quoted_line", "parse_record_line"),
     '''def {name}(line):
    fields = []
    current = ""
    quoted = False
    for ch in line:
        if ch == '"':
            quoted = not quoted
        elif ch == "," and not quoted:
            fields.append(current)
            current = ""
        else:
            current += ch
    fields.append(current)
    cleaned = []
    for f in fields:
        trimmed = f.strip()
        cleaned.append(trimmed)
    return cleaned
''', [{}, {"line": "row", "fields": "parts", "current": "buf", "quoted": "inside",
           "ch": "c", "cleaned": "out", "f": "field", "trimmed": "t"},
      {"line": "text", "fields": "cells", "current": "acc", "quoted": "in_quotes",
       "ch": "sym", "cleaned": "final", "f": "cell", "trimmed": "stripped"}],
     ["{name}('a,b,c')", "{name}('x,\"y,z\"')", "{name}('')"]),

    (("elevator_travel_time", "lift_trip_cost", "floor_travel_total"),
     '''def {name}(stops, per_floor, per_stop):
    if not stops:
        return 0
    time = 0
    current = 0
    visits = 0
    for target in stops:
        distance = target - current
        if distance < 0:
            distance = -distance
        time += distance * per_floor
        time += per_stop
        visits += 1
        current = target
    time += current * per_floor
    return time
''', [{}, {"stops": "floors", "per_floor": "floor_cost", "per_stop": "door_cost", "time": "elapsed",
           "current": "at", "visits": "count", "target": "goal", "distance": "gap"},
      {"stops": "requests", "per_floor": "step_time", "per_stop": "pause", "time": "total",
       "current": "position", "visits": "n", "target": "dest", "distance": "travel"}],
     ["{name}([3, 1], 2, 1)", "{name}([], 2, 1)", "{name}([5], 1, 3)"]),

    (("long_division_report", "divide_with_steps", "quotient_trace"),
     '''def {name}(dividend, divisor):
    if divisor == 0:
        return None
    sign = 1
    a = dividend
    b = divisor
    if a < 0:
        sign = -sign
        a = -a
    if b < 0:
        sign = -sign
        b = -b
    quotient = 0
    remainder = 0
    digits = str(a)
    for ch in digits:
        remainder = remainder * 10 + int(ch)
        digit = 0
        while remainder >= b:
            remainder -= b
            digit += 1
        quotient = quotient * 10 + digit
    if sign < 0:
        quotient = -quotient
    return (quotient, remainder)
''', [{}, {"dividend": "num", "divisor": "den", "sign": "polarity", "a": "top", "b": "bottom",
           "quotient": "q", "remainder": "r", "digits": "chars", "ch": "c", "digit": "d"},
      {"dividend": "x", "divisor": "y", "sign": "s", "a": "p", "b": "m",
       "quotient": "result", "remainder": "left", "digits": "text", "ch": "t", "digit": "step"}],
     ["{name}(1234, 7)", "{name}(100, 0)", "{name}(-81, 9)"]),

    (("inventory_reconcile", "stock_audit", "warehouse_check"),
     '''def {name}(opening, received, shipped, damaged):
    expected = opening
    for r in received:
        expected += r
    for s in shipped:
        expected -= s
    for d in damaged:
        expected -= d
    status = "balanced"
    if expected < 0:
        status = "error"
        expected = 0
    low = False
    if expected < 10:
        low = True
    reorder = 0
    if low:
        reorder = 50 - expected
        if reorder < 0:
            reorder = 0
    return (expected, status, low, reorder)
''', [{}, {"opening": "start", "received": "inbound", "shipped": "outbound", "damaged": "losses",
           "expected": "onhand", "status": "state", "low": "needs_more", "reorder": "order_qty",
           "r": "rec", "s": "shp", "d": "dmg"},
      {"opening": "base", "received": "ins", "shipped": "outs", "damaged": "broken",
       "expected": "stock", "status": "flag", "low": "critical", "reorder": "topup",
       "r": "a", "s": "b", "d": "c"}],
     ["{name}(20, [5, 5], [10], [2])", "{name}(0, [], [5], [])", "{name}(100, [1], [2], [3])"]),

    (("roman_numeral_value", "roman_to_int", "decode_roman"),
     '''def {name}(s):
    values = {{"I": 1, "V": 5, "X": 10, "L": 50, "C": 100, "D": 500, "M": 1000}}
    total = 0
    prev = 0
    for ch in s:
        cur = values[ch]
        if prev < cur:
            total += cur - 2 * prev
        else:
            total += cur
        prev = cur
    return total
''', [{}, {"s": "numeral", "values": "table", "total": "acc", "prev": "last", "cur": "now", "ch": "c"},
      {"s": "text", "values": "lookup", "total": "result", "prev": "before", "cur": "value", "ch": "sym"}],
     ["{name}('XIV')", "{name}('III')", "{name}('MCMXC')"]),

    (("sieve_prime_count", "primes_below", "prime_tally"),
     '''def {name}(n):
    if n < 2:
        return 0
    flags = [True] * n
    flags[0] = False
    flags[1] = False
    i = 2
    while i * i < n:
        if flags[i]:
            j = i * i
            while j < n:
                flags[j] = False
                j += i
        i += 1
    count = 0
    for f in flags:
        if f:
            count += 1
    return count
''', [{}, {"flags": "sieve", "i": "p", "j": "q", "count": "total", "f": "flag", "n": "limit"},
      {"flags": "marks", "i": "a", "j": "b", "count": "hits", "f": "m", "n": "upper"}],
     ["{name}(10)", "{name}(2)", "{name}(30)"]),

    (("selection_sort_list", "sort_by_selection", "ordered_copy"),
     '''def {name}(xs):
    a = list(xs)
    n = len(a)
    for i in range(n - 1):
        m = i
        for j in range(i + 1, n):
            if a[j] < a[m]:
                m = j
        if m != i:
            a[i], a[m] = a[m], a[i]
    return a
''', [{}, {"a": "arr", "n": "size", "i": "pos", "j": "scan", "m": "low", "xs": "items"},
      {"a": "out", "n": "length", "i": "k", "j": "t", "m": "sel", "xs": "values"}],
     ["{name}([3, 1, 2])", "{name}([])", "{name}([5, -1, 4, 4])"]),

    (("date_day_of_year", "year_day_number", "ordinal_date"),
     '''def {name}(day, month, year):
    lengths = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]
    leap = False
    if year % 400 == 0:
        leap = True
    elif year % 100 == 0:
        leap = False
    elif year % 4 == 0:
        leap = True
    if leap:
        lengths[1] = 29
    total = 0
    m = 0
    while m < month - 1:
        total += lengths[m]
        m += 1
    return total + day
''', [{}, {"day": "d", "month": "mo", "year": "y", "lengths": "month_days", "leap": "is_leap", "total": "acc", "m": "i"},
      {"day": "dd", "month": "mm", "year": "yy", "lengths": "days_table", "leap": "leap_flag", "total": "passed", "m": "idx"}],
     ["{name}(1, 3, 2020)", "{name}(15, 1, 2021)", "{name}(31, 12, 1999)"]),

    (("expression_token_stats", "formula_profile", "token_tally"),
     '''def {name}(expr):
    digits = 0
    letters = 0
    operators = 0
    spaces = 0
    other = 0
    depth = 0
    max_depth = 0
    for ch in expr:
        if ch.isdigit():
            digits += 1
        elif ch.isalpha():
            letters += 1
        elif ch in "+-*/%":
            operators += 1
        elif ch == " ":
            spaces += 1
        elif ch == "(":
            depth += 1
            if depth > max_depth:
                max_depth = depth
        elif ch == ")":
            depth -= 1
        else:
            other += 1
    return (digits, letters, operators, max_depth)
''', [{}, {"expr": "formula", "digits": "nums", "letters": "alphas", "operators": "ops",
           "spaces": "blanks", "other": "misc", "depth": "level", "max_depth": "deepest", "ch": "c"},
      {"expr": "line", "digits": "digit_count", "letters": "letter_count", "operators": "op_count",
       "spaces": "gap_count", "other": "unknown", "depth": "nesting", "max_depth": "peak", "ch": "token"}],
     ["{name}('(a+1)*(b-2)')", "{name}('')", "{name}('x % 3')"]),

    (("grade_curve_report", "curved_scores", "adjusted_marks"),
     '''def {name}(scores, bonus):
    curved = []
    passed = 0
    failed = 0
    top = 0
    for s in scores:
        adjusted = s + bonus
        if adjusted > 100:
            adjusted = 100
        if adjusted < 0:
            adjusted = 0
        curved.append(adjusted)
        if adjusted >= 50:
            passed += 1
        else:
            failed += 1
        if adjusted > top:
            top = adjusted
    return (curved, passed, failed, top)
''', [{}, {"scores": "marks", "bonus": "lift", "curved": "updated", "passed": "ok", "failed": "ko",
           "top": "best", "s": "mark", "adjusted": "fixed"},
      {"scores": "raw", "bonus": "extra", "curved": "final", "passed": "above", "failed": "below",
       "top": "highest", "s": "r", "adjusted": "val"}],
     ["{name}([45, 80, 99], 5)", "{name}([], 10)", "{name}([-5, 200], 0)"]),

    (("text_justify_width", "pad_lines", "align_left_block"),
     '''def {name}(words, width):
    lines = []
    current = ""
    for w in words:
        if current == "":
            candidate = w
        else:
            candidate = current + " " + w
        if len(candidate) <= width:
            current = candidate
        else:
            lines.append(current)
            current = w
    if current != "":
        lines.append(current)
    padded = []
    for line in lines:
        extra = width - len(line)
        padded.append(line + " " * extra)
    return padded
''', [{}, {"words": "tokens", "width": "cols", "lines": "rows", "current": "buf",
           "candidate": "tentative", "w": "word", "padded": "out", "line": "row", "extra": "fill"},
      {"words": "parts", "width": "limit", "lines": "built", "current": "acc",
       "candidate": "tryline", "w": "p", "padded": "result", "line": "l", "extra": "pad"}],
     ["{name}(['ab', 'cd', 'e'], 5)", "{name}([], 4)", "{name}(['toolong'], 3)"]),

    (("matrix_multiply_2x2", "mat2_product", "two_by_two_mul"),
     '''def {name}(a, b):
    out = [[0, 0], [0, 0]]
    for i in range(2):
        for j in range(2):
            total = 0
            for k in range(2):
                total += a[i][k] * b[k][j]
            out[i][j] = total
    return out
''', [{}, {"a": "m1", "b": "m2", "out": "prod", "i": "r", "j": "c", "k": "t", "total": "acc"},
      {"a": "left", "b": "right", "out": "result", "i": "row", "j": "col", "k": "idx", "total": "cell"}],
     ["{name}([[1, 2], [3, 4]], [[5, 6], [7, 8]])",
      "{name}([[1, 0], [0, 1]], [[9, 8], [7, 6]])",
      "{name}([[0, 0], [0, 0]], [[1, 2], [3, 4]])"]),

    (("budget_envelope_split", "allocate_funds", "envelope_plan"),
     '''def {name}(amount, weights):
    total_weight = 0
    for w in weights:
        total_weight += w
    if total_weight == 0:
        return []
    shares = []
    assigned = 0
    for w in weights:
        share = amount * w // total_weight
        shares.append(share)
        assigned += share
    remainder = amount - assigned
    if shares and remainder > 0:
        shares[0] += remainder
    return shares
''', [{}, {"amount": "budget", "weights": "ratios", "total_weight": "ratio_sum", "shares": "parts",
           "assigned": "given", "w": "ratio", "share": "piece", "remainder": "leftover"},
      {"amount": "pool", "weights": "splits", "total_weight": "denom", "shares": "portions",
       "assigned": "allocated", "w": "split", "share": "cut", "remainder": "rest"}],
     ["{name}(100, [1, 1, 2])", "{name}(10, [])", "{name}(7, [1, 1])"]),
]


def apply_subs(code: str, subs: dict[str, str]) -> str:
    for old, new in subs.items():
        code = re.sub(rf"\b{re.escape(old)}\b", new, code)
    return code


def main():
    out_path = Path(__file__).resolve().parents[1] / "data" / "sample_corpus.jsonl"
    records = []
    task_id = 1
    for names, template, maps, calls in ENTRIES:
        for idx, name in enumerate(names):
            subs = maps[idx % len(maps)]
            code = apply_subs(template.format(name=name), subs)
            namespace: dict = {}
            exec(code, namespace)
            fn = namespace[name]
            tests = []
            for call in calls:
                expr = call.format(name=name)
                result = eval(expr, namespace)
                tests.append(f"assert {expr} == {result!r}")
            for test in tests:
                exec(test, dict(namespace))
            records.append({
                "task_id": task_id,
                "text": f"Write a python function {name}.",
                "code": code,
                "test_list": tests,
            })
            task_id += 1
    with open(out_path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
    print(f"wrote {len(records)} tasks to {out_path}")


if __name__ == "__main__":
    main()
