"""Semantic-preserving transformations: variable renames, dead-code insertion,
operand swaps, and for/while conversion. Every Applied output is a whole
re-rendered program labelled equivalent to its input."""

from __future__ import annotations

from random import Random
from typing import Callable

from ..subject import analysis
from ..subject import nodes as N
from ..subject.parser import parse
from ..subject.render import render
from ..subject.tokens import lex
from .base import Applied, Failed, NotApplicable, TransformOutcome, iter_suites, parse_snippet

SuggestionProvider = Callable[[str, str], str]

SP_VARIANTS = ("rename-naive", "rename-rn", "rename-cb", "dead-code", "operand-swap", "loop")


# --- rename variables -------------------------------------------------------


def default_suggestion_provider(source: str, variable: str) -> str:
    """Offline stand-in for a masked-LM namer: the most frequent *other*
    bound name (ties lexicographic), falling back to the variable itself."""
    table = analysis.bindings(source)
    others = [b for name, b in table.items() if name != variable]
    if not others:
        return variable
    best = min(others, key=lambda b: (-b.count, b.name))
    return best.name


def remote_suggestion_provider(url: str, timeout_s: float = 30.0) -> SuggestionProvider:
    """Masked-LM namer behind HTTP: POST {source, variable}, read {suggestion}."""
    def provider(source: str, variable: str) -> str:
        import requests

        response = requests.post(url, json={"source": source, "variable": variable},
                                 timeout=timeout_s)
        response.raise_for_status()
        return response.json()["suggestion"]
    return provider


def rename_variable(source: str, strategy: str, rng: Random | None = None,
                    provider: SuggestionProvider | None = None) -> TransformOutcome:
    """Rename the most frequent variable everywhere.

    strategy: 'naive' -> VAR_i; 'rn' -> seeded random string;
    'cb' -> provider suggestion, bumped with '2' until fresh.
    """
    if strategy not in ("naive", "rn", "cb"):
        raise ValueError(f"unknown strategy {strategy!r}")
    mod = parse(source)
    table = analysis.bindings(mod)
    target = analysis.most_frequent_variable(table)
    if target is None:
        return NotApplicable("no-variables")
    taken = analysis.taken_names(source)
    if strategy == "naive":
        new_name = analysis.fresh_name(source, "VAR_")
    elif strategy == "rn":
        if rng is None:
            raise ValueError("'rn' strategy needs a seeded generator")
        new_name = analysis.fresh_name(source, "", rng)
    else:
        if provider is None:
            provider = default_suggestion_provider
        try:
            suggestion = provider(source, target)
        except Exception as exc:  # provider contract: any raise is a failure
            return Failed(f"provider error: {exc}")
        if not suggestion.isidentifier():
            return Failed(f"provider returned invalid identifier {suggestion!r}")
        new_name = suggestion
        while new_name in taken:
            new_name += "2"
    count = _rename(mod, target, new_name)
    return Applied(
        candidate=render(mod),
        variant=f"rename-{strategy}",
        detail=f"renamed {target!r} -> {new_name!r} ({count} occurrences)",
    )


def _rename(mod: N.Module, old: str, new: str) -> int:
    count = 0
    for node in mod.walk():
        if isinstance(node, N.Name) and node.id == old:
            node.id = new
            count += 1
        elif isinstance(node, (N.FunctionDef, N.Lambda)):
            for param in node.params:
                if param.name == old:
                    param.name = new
                    count += 1
        if isinstance(node, N.Opaque):
            node.text, hits = _rename_in_text(node.text, old, new)
            count += hits
    return count


def _rename_in_text(text: str, old: str, new: str) -> tuple[str, int]:
    try:
        tokens = lex(text)
    except Exception:
        return text, 0
    spans = []
    prev = None
    for tok in tokens:
        if tok.kind == "identifier" and tok.text == old:
            if not (prev is not None and prev.kind == "delimiter" and prev.text == "."):
                spans.append((tok.start, tok.end))
        if tok.kind not in ("indent", "dedent", "newline", "comment"):
            prev = tok
    for start, end in reversed(spans):
        text = text[:start] + new + text[end:]
    return text, len(spans)


# --- dead code insertion ----------------------------------------------------

_FRESH_VAR_POOL = ("z", "w", "q", "u", "v")


def insert_dead_code(source: str, rng: Random) -> TransformOutcome:
    """Insert one statically unreachable block at a seeded location."""
    mod = parse(source)
    if not mod.body:
        return NotApplicable("no-body")
    template = rng.randrange(5)
    if template == 4:
        return _insert_showcase(mod, source)
    suites = _eligible_suites(mod)
    sites = [(suite, i) for suite in suites for i in range(len(suite) + 1)]
    suite, index = sites[rng.randrange(len(sites))]
    inner = _inner_statement(mod, source, rng)
    if template == 0:
        block = parse_snippet(f"if False:\n    {inner}\n")
        label = "if-false"
    elif template == 1:
        block = parse_snippet(f"while False:\n    {inner}\n")
        label = "while-false"
    elif template == 2:
        counter = _fresh_counter(source, rng)
        block = parse_snippet(f"for {counter} in range(0):\n    {inner}\n")
        label = "for-range0"
    else:
        counter = _fresh_counter(source, rng)
        block = parse_snippet(f"{counter} = 0\nwhile {counter} > {counter}:\n    {inner}\n")
        label = "self-compare"
    suite[index:index] = block
    return Applied(candidate=render(mod), variant="dead-code",
                   detail=f"{label} block ({inner!r})")


def _insert_showcase(mod: N.Module, source: str) -> TransformOutcome:
    """Unused constant after the first statement plus an unreachable print
    before the last one -- the two-part block shape."""
    suite = mod.body
    defs = [s for s in mod.body if isinstance(s, N.FunctionDef)]
    if defs:
        suite = defs[-1].body
    if not suite:
        return NotApplicable("no-body")
    taken = analysis.taken_names(source)
    var = next((v for v in _FRESH_VAR_POOL if v not in taken), None)
    if var is None:
        var = analysis.fresh_name(source, "_v_")
    n = len(suite)
    suite[min(1, n):min(1, n)] = parse_snippet(f"{var} = 10")
    guard = parse_snippet('if False:\n    print("This will never execute")\n')
    guard_at = len(suite) - 1 if n >= 2 else len(suite)
    suite[guard_at:guard_at] = guard
    return Applied(candidate=render(mod), variant="dead-code",
                   detail=f"unused constant {var} = 10 plus if-false guard")


def _eligible_suites(mod: N.Module) -> list[list[N.Stmt]]:
    structured: list[list[N.Stmt]] = []
    for suite in iter_suites(mod):
        if any(stmt.kind in ("for-loop", "while-loop", "if-branch") for stmt in suite):
            structured.append(suite)
    for node in mod.walk():
        if isinstance(node, (N.For, N.While)):
            structured.append(node.body)
        elif isinstance(node, N.If):
            structured.append(node.body)
            if node.orelse:
                structured.append(node.orelse)
    if structured:
        # preserve discovery order, drop duplicates
        seen: list[list[N.Stmt]] = []
        for suite in structured:
            if not any(suite is s for s in seen):
                seen.append(suite)
        return seen
    return list(iter_suites(mod))


def _inner_statement(mod: N.Module, source: str, rng: Random) -> str:
    assigns = [stmt for stmt in (s for suite in iter_suites(mod) for s in suite)
               if isinstance(stmt, N.Assign)]
    pick = rng.randrange(len(assigns) + 1)
    if pick < len(assigns):
        return render(assigns[pick]).strip()
    fresh = analysis.fresh_name(source, "_v_")
    return f"{fresh} = 0"


def _fresh_counter(source: str, rng: Random) -> str:
    taken = analysis.taken_names(source)
    k = rng.randrange(10)
    while f"_i_{k}" in taken:
        k += 1
    return f"_i_{k}"


# --- operand swap -----------------------------------------------------------

_MIRROR = {"<": ">", ">": "<", "<=": ">=", ">=": "<=",
           "==": "==", "!=": "!=", "is": "is", "is not": "is not"}


def swap_comparison_operands(source: str) -> TransformOutcome:
    """Mirror-swap the first binary comparison: a OP b -> b OP' a."""
    mod = parse(source)
    compares = sorted(
        (n for n in mod.walk() if isinstance(n, N.Compare)),
        key=lambda n: n.span[0],
    )
    saw_chained = False
    for node in compares:
        if len(node.ops) != 1:
            saw_chained = True
            continue
        op = node.ops[0]
        if op not in _MIRROR:
            continue  # membership tests have no order mirror
        node.left, node.comparators[0] = node.comparators[0], node.left
        node.ops[0] = _MIRROR[op]
        return Applied(candidate=render(mod), variant="operand-swap",
                       detail=f"swapped operands of {op!r}")
    if saw_chained:
        return NotApplicable("chained")
    return NotApplicable("no-comparison")


# --- loop transformation ----------------------------------------------------

_SEQ_CALL_FUNCS = ("list", "sorted", "str", "tuple")


def convert_loop(source: str) -> TransformOutcome:
    """Convert the first loop: counted/sequence for -> while, or the counter
    while idiom back to a range for."""
    mod = parse(source)
    located = _first_loop(mod)
    if located is None:
        return NotApplicable("no-loop")
    suite, index, loop = located
    if _has_continue(loop.body):
        return NotApplicable("continue-hazard")
    if isinstance(loop, N.For):
        return _for_to_while(mod, source, suite, index, loop)
    return _while_to_for(mod, suite, index, loop)


def _first_loop(mod: N.Module):
    best = None
    for suite in iter_suites(mod):
        for i, stmt in enumerate(suite):
            if isinstance(stmt, (N.For, N.While)):
                if best is None or stmt.span[0] < best[2].span[0]:
                    best = (suite, i, stmt)
    return best


def _has_continue(body: list[N.Stmt]) -> bool:
    for stmt in body:
        if isinstance(stmt, N.Continue):
            return True
        if isinstance(stmt, (N.For, N.While)):
            continue  # a continue below belongs to the nested loop
        for child in stmt.walk():
            if isinstance(child, N.Continue):
                return True
            if isinstance(child, (N.For, N.While)):
                break
    return False


def _int_literal(expr: N.Node | None):
    if isinstance(expr, N.Literal) and expr.lit_kind == "number":
        try:
            return int(expr.text)
        except ValueError:
            return None
    if isinstance(expr, N.UnaryOp) and expr.op == "-":
        inner = _int_literal(expr.operand)
        return -inner if inner is not None else None
    return None


def _for_to_while(mod, source, suite, index, loop: N.For) -> TransformOutcome:
    if not isinstance(loop.target, N.Name):
        return NotApplicable("loop-shape")
    var = loop.target.id
    it = loop.iter
    from ..subject.render import expr_text

    if isinstance(it, N.Call) and isinstance(it.func, N.Name) and it.func.id == "range" \
            and not it.kwarg_values and 1 <= len(it.args) <= 3 \
            and not any(isinstance(a, N.Starred) for a in it.args):
        if len(it.args) == 1:
            init, bound, step = "0", expr_text(it.args[0]), 1
        elif len(it.args) == 2:
            init, bound, step = expr_text(it.args[0]), expr_text(it.args[1]), 1
        else:
            step = _int_literal(it.args[2])
            if step is None or step == 0:
                return NotApplicable("loop-shape")
            init, bound = expr_text(it.args[0]), expr_text(it.args[1])
        cmp_op = "<" if step > 0 else ">"
        incr = f"{var} += {step}" if step > 0 else f"{var} -= {-step}"
        head = parse_snippet(f"{var} = {init}\nwhile {var} {cmp_op} {bound}:\n    pass\n")
        new_while = head[1]
        new_while.body = loop.body + parse_snippet(incr)
        suite[index:index + 1] = [head[0], new_while]
        detail = f"for {var} in range(...) -> while {var} {cmp_op} {bound}"
    else:
        if not _is_safe_sequence(it):
            return NotApplicable("loop-shape")
        seq = expr_text(it)
        idx = analysis.fresh_name(source, f"_i_{var}")
        head = parse_snippet(f"{idx} = 0\nwhile {idx} < len({seq}):\n    pass\n")
        new_while = head[1]
        new_while.body = (parse_snippet(f"{var} = {seq}[{idx}]")
                          + loop.body + parse_snippet(f"{idx} += 1"))
        suite[index:index + 1] = [head[0], new_while]
        detail = f"for {var} in seq -> indexed while over len({seq})"
    return Applied(candidate=render(mod), variant="loop", detail=detail)


def _is_safe_sequence(expr: N.Node) -> bool:
    if isinstance(expr, (N.Name, N.ListExpr, N.TupleExpr, N.Subscript, N.Attribute)):
        return True
    if isinstance(expr, N.Literal) and expr.lit_kind == "string":
        return True
    if isinstance(expr, N.Call) and isinstance(expr.func, N.Name):
        return expr.func.id in _SEQ_CALL_FUNCS
    return False


def _while_to_for(mod, suite, index, loop: N.While) -> TransformOutcome:
    from ..subject.render import expr_text

    test = loop.test
    if not (isinstance(test, N.Compare) and len(test.ops) == 1
            and test.ops[0] in ("<", "<=") and isinstance(test.left, N.Name)):
        return NotApplicable("loop-shape")
    var = test.left.id
    if index == 0:
        return NotApplicable("loop-shape")
    init_stmt = suite[index - 1]
    if not (isinstance(init_stmt, N.Assign) and len(init_stmt.targets) == 1
            and isinstance(init_stmt.targets[0], N.Name)
            and init_stmt.targets[0].id == var):
        return NotApplicable("loop-shape")
    if not loop.body:
        return NotApplicable("loop-shape")
    last = loop.body[-1]
    if not (isinstance(last, N.AugAssign) and last.op == "+="
            and isinstance(last.target, N.Name) and last.target.id == var):
        return NotApplicable("loop-shape")
    step = _int_literal(last.value)
    if step is None or step <= 0:
        return NotApplicable("loop-shape")
    init = expr_text(init_stmt.value)
    bound_expr = test.comparators[0]
    if test.ops[0] == "<":
        bound = expr_text(bound_expr)
    else:
        folded = _int_literal(bound_expr)
        bound = str(folded + 1) if folded is not None else f"{expr_text(bound_expr)} + 1"
    if step == 1 and init == "0":
        range_args = bound
    elif step == 1:
        range_args = f"{init}, {bound}"
    else:
        range_args = f"{init}, {bound}, {step}"
    new_for = parse_snippet(f"for {var} in range({range_args}):\n    pass\n")[0]
    new_for.body = loop.body[:-1] or parse_snippet("pass")
    suite[index - 1:index + 1] = [new_for]
    return Applied(candidate=render(mod), variant="loop",
                   detail=f"while {var} {test.ops[0]} ... -> for {var} in range({range_args})")
