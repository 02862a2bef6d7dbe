"""Normalizing pretty-printer for subject-language trees.

Output conventions: 4-space indents, one space around binary operators,
double-quoted strings where safe, minimal grouping parentheses, comments
reattached to their statements. Rendering then re-parsing yields a
structurally identical tree.
"""

from __future__ import annotations

from . import nodes as N

# Binding strength, loosest first. A child is parenthesized when it binds
# more loosely than its context requires.
_PREC = {
    "lambda": 1, "conditional-expr": 2, "or": 3, "and": 4, "not": 5,
    "comparison": 6, "|": 7, "^": 8, "&": 9, "<<": 10, ">>": 10,
    "+": 11, "-": 11, "*": 12, "/": 12, "//": 12, "%": 12, "@": 12,
    "unary": 13, "**": 14, "atom": 16,
}


def render(node: N.Node) -> str:
    """Render a Module (or single statement) to normalized source text."""
    lines: list[str] = []
    if isinstance(node, N.Module):
        body = node.body
        for i, stmt in enumerate(body):
            if i > 0 and isinstance(stmt, N.FunctionDef):
                lines.append("")
            _stmt_lines(stmt, 0, lines)
        for comment in node.dangling_comments:
            lines.append(comment)
    else:
        _stmt_lines(node, 0, lines)
    return "\n".join(lines) + "\n" if lines else ""


def expr_text(node: N.Node) -> str:
    """Render a single expression."""
    return _expr(node, 0)


# --- statements -------------------------------------------------------------


def _stmt_lines(stmt: N.Stmt, indent: int, lines: list[str]) -> None:
    pad = "    " * indent
    for comment in stmt.leading_comments:
        lines.append(pad + comment)

    def put(text: str) -> None:
        if stmt.trailing_comment:
            lines.append(pad + text + "  " + stmt.trailing_comment)
        else:
            lines.append(pad + text)

    kind = stmt.kind
    if kind == "function-def":
        params = ", ".join(_param(p) for p in stmt.params)
        returns = f" -> {_expr(stmt.returns, 0)}" if stmt.returns is not None else ""
        put(f"def {stmt.name}({params}){returns}:")
        _suite(stmt.body, indent + 1, lines)
    elif kind == "assignment":
        targets = " = ".join(_target_text(t) for t in stmt.targets)
        put(f"{targets} = {_target_text(stmt.value)}")
    elif kind == "annotated-assignment":
        text = f"{_expr(stmt.target, 0)}: {_expr(stmt.annotation, 0)}"
        if stmt.value is not None:
            text += f" = {_target_text(stmt.value)}"
        put(text)
    elif kind == "augmented-assignment":
        put(f"{_expr(stmt.target, 0)} {stmt.op} {_target_text(stmt.value)}")
    elif kind == "expression-statement":
        put(_expr(stmt.value, 0))
    elif kind == "return":
        put("return" if stmt.value is None else f"return {_target_text(stmt.value)}")
    elif kind == "if-branch":
        _render_if(stmt, indent, lines, pad, leader="if")
    elif kind == "while-loop":
        put(f"while {_expr(stmt.test, 0)}:")
        _suite(stmt.body, indent + 1, lines)
    elif kind == "for-loop":
        put(f"for {_target_text(stmt.target)} in {_expr(stmt.iter, 0)}:")
        _suite(stmt.body, indent + 1, lines)
    elif kind == "break":
        put("break")
    elif kind == "continue":
        put("continue")
    elif kind == "pass":
        put("pass")
    elif kind == "import":
        put("import " + ", ".join(n + (f" as {a}" if a else "") for n, a in stmt.names))
    elif kind == "from-import":
        names = ", ".join(n + (f" as {a}" if a else "") for n, a in stmt.names)
        put(f"from {stmt.module} import {names}")
    elif kind == "assert":
        text = f"assert {_expr(stmt.test, 0)}"
        if stmt.msg is not None:
            text += f", {_expr(stmt.msg, 0)}"
        put(text)
    elif kind == "opaque":
        chunk = stmt.text.split("\n")
        put(chunk[0])
        for line in chunk[1:]:
            lines.append(pad + line if line.strip() else "")
    else:  # pragma: no cover
        raise ValueError(f"cannot render statement kind {kind!r}")


def _render_if(stmt: N.If, indent: int, lines: list[str], pad: str, leader: str) -> None:
    head = f"{leader} {_expr(stmt.test, 0)}:"
    if stmt.trailing_comment and leader == "if":
        lines.append(pad + head + "  " + stmt.trailing_comment)
    else:
        lines.append(pad + head)
    _suite(stmt.body, indent + 1, lines)
    orelse = stmt.orelse
    if not orelse:
        return
    if (len(orelse) == 1 and isinstance(orelse[0], N.If)
            and orelse[0].is_elif and not orelse[0].leading_comments):
        _render_if(orelse[0], indent, lines, pad, leader="elif")
        return
    lines.append(pad + "else:")
    _suite(orelse, indent + 1, lines)


def _suite(body: list[N.Stmt], indent: int, lines: list[str]) -> None:
    if not body:
        lines.append("    " * indent + "pass")
        return
    for stmt in body:
        _stmt_lines(stmt, indent, lines)


def _param(p: N.Param) -> str:
    text = p.star + p.name
    if p.annotation is not None:
        text += f": {_expr(p.annotation, 0)}"
        if p.default is not None:
            text += f" = {_expr(p.default, 0)}"
    elif p.default is not None:
        text += f"={_expr(p.default, 0)}"
    return text


def _target_text(node: N.Node) -> str:
    # bare tuples on the statement level: a, b = ... / return a, b
    if isinstance(node, N.TupleExpr) and node.elts:
        return ", ".join(_expr(e, _PREC["conditional-expr"]) for e in node.elts) + (
            "," if len(node.elts) == 1 else "")
    return _expr(node, 0)


# --- expressions ------------------------------------------------------------


def _wrap(text: str, prec: int, limit: int) -> str:
    return f"({text})" if prec < limit else text


def _expr(node: N.Node, limit: int) -> str:
    kind = node.kind
    if kind == "name":
        return node.id
    if kind == "literal":
        return _literal(node)
    if kind == "tuple":
        if not node.elts:
            return "()"
        inner = ", ".join(_expr(e, _PREC["conditional-expr"]) for e in node.elts)
        if len(node.elts) == 1:
            inner += ","
        return f"({inner})"
    if kind == "list":
        return "[" + ", ".join(_expr(e, 0) for e in node.elts) + "]"
    if kind == "set":
        return "{" + ", ".join(_expr(e, 0) for e in node.elts) + "}"
    if kind == "dict":
        parts = []
        for k, v in zip(node.keys, node.values):
            if isinstance(k, N.Starred):
                parts.append(f"**{_expr(v, 0)}")
            else:
                parts.append(f"{_expr(k, 0)}: {_expr(v, 0)}")
        return "{" + ", ".join(parts) + "}"
    if kind == "starred":
        return node.stars + _expr(node.value, _PREC["or"])
    if kind == "comprehension":
        return _comprehension(node)
    if kind == "call":
        func = _expr(node.func, _PREC["atom"])
        if (len(node.args) == 1 and not node.kwarg_values
                and isinstance(node.args[0], N.Comprehension)
                and node.args[0].comp_kind == "genexp"):
            gen = node.args[0]
            inner = f"{_expr(gen.element, 0)} {_comp_clauses(gen)}"
            return _wrap(f"{func}({inner})", _PREC["atom"], limit)
        args = [_expr(a, _PREC["conditional-expr"]) for a in node.args]
        for name, value in zip(node.kwarg_names, node.kwarg_values):
            if name is None:
                args.append(f"**{_expr(value, 0)}")
            else:
                args.append(f"{name}={_expr(value, _PREC['conditional-expr'])}")
        return _wrap(f"{func}({', '.join(args)})", _PREC["atom"], limit)
    if kind == "attribute":
        return _wrap(f"{_expr(node.value, _PREC['atom'])}.{node.attr}", _PREC["atom"], limit)
    if kind == "subscript":
        return _wrap(f"{_expr(node.value, _PREC['atom'])}[{_index(node.index)}]",
                     _PREC["atom"], limit)
    if kind == "binary-op":
        prec = _PREC[node.op]
        if node.op == "**":
            # right-associative; unary operands on the left still need parens
            left = _expr(node.left, prec + 1)
            right = _expr(node.right, _PREC["unary"])
            return _wrap(f"{left} ** {right}", prec, limit)
        left = _expr(node.left, prec)
        right = _expr(node.right, prec + 1)
        return _wrap(f"{left} {node.op} {right}", prec, limit)
    if kind == "bool-op":
        prec = _PREC[node.op]
        inner = f" {node.op} ".join(_expr(v, prec + 1) for v in node.values)
        return _wrap(inner, prec, limit)
    if kind == "unary-op":
        if node.op == "not":
            prec = _PREC["not"]
            return _wrap(f"not {_expr(node.operand, prec)}", prec, limit)
        prec = _PREC["unary"]
        return _wrap(f"{node.op}{_expr(node.operand, prec)}", prec, limit)
    if kind in ("comparison", "identity-op"):
        prec = _PREC["comparison"]
        parts = [_expr(node.left, prec + 1)]
        for op, comparator in zip(node.ops, node.comparators):
            parts.append(op)
            parts.append(_expr(comparator, prec + 1))
        return _wrap(" ".join(parts), prec, limit)
    if kind == "conditional-expr":
        prec = _PREC["conditional-expr"]
        text = (f"{_expr(node.body, prec + 1)} if {_expr(node.test, prec + 1)}"
                f" else {_expr(node.orelse, prec)}")
        return _wrap(text, prec, limit)
    if kind == "lambda":
        prec = _PREC["lambda"]
        params = ", ".join(_param(p) for p in node.params)
        head = f"lambda {params}: " if params else "lambda: "
        return _wrap(head + _expr(node.body, prec), prec, limit)
    raise ValueError(f"cannot render expression kind {kind!r}")  # pragma: no cover


def _comprehension(node: N.Comprehension) -> str:
    clauses = _comp_clauses(node)
    if node.comp_kind == "list":
        return f"[{_expr(node.element, 0)} {clauses}]"
    if node.comp_kind == "set":
        return "{" + f"{_expr(node.element, 0)} {clauses}" + "}"
    if node.comp_kind == "dict":
        return "{" + f"{_expr(node.element, 0)}: {_expr(node.value, 0)} {clauses}" + "}"
    return f"({_expr(node.element, 0)} {clauses})"


def _comp_clauses(node: N.Comprehension) -> str:
    parts = []
    for gen in node.generators:
        parts.append(f"for {_target_text_comp(gen.target)} in {_expr(gen.iter, _PREC['not'])}")
        for cond in gen.ifs:
            parts.append(f"if {_expr(cond, _PREC['not'])}")
    return " ".join(parts)


def _target_text_comp(node: N.Node) -> str:
    if isinstance(node, N.TupleExpr) and node.elts:
        return ", ".join(_expr(e, _PREC["or"]) for e in node.elts)
    return _expr(node, _PREC["or"])


def _index(node: N.Node) -> str:
    if isinstance(node, N.SliceExpr):
        lower = _expr(node.lower, 0) if node.lower is not None else ""
        upper = _expr(node.upper, 0) if node.upper is not None else ""
        text = f"{lower}:{upper}"
        if node.has_step_colon:
            step = _expr(node.step, 0) if node.step is not None else ""
            text += f":{step}"
        return text
    if isinstance(node, N.TupleExpr) and node.elts:
        return ", ".join(_expr(e, _PREC["conditional-expr"]) for e in node.elts)
    return _expr(node, 0)


def _literal(node: N.Literal) -> str:
    if node.lit_kind == "string":
        return _string(node.text)
    if node.lit_kind == "number":
        text = node.text
        if text.startswith(".") and text[1:2].isdigit():
            return "0" + text
        if text.endswith("."):
            return text + "0"
        if "." in text and "e" not in text.lower() and not text.lower().startswith("0x"):
            head, tail = text.split(".", 1)
            if tail == "" or (tail in ("j", "J")):
                return head + ".0" + tail
        return text
    return node.text


def _string(text: str) -> str:
    # implicit concatenation was folded with a separating space
    if " " in text:
        first = text.split(" ", 1)[0]
        if first and first[-1] in "'\"" and len(first) > 1:
            return " ".join(_string(part) for part in _split_concat(text))
    i = 0
    while i < len(text) and text[i] not in "'\"":
        i += 1
    prefix, rest = text[:i], text[i:]
    if rest[:3] in ("'''", '"""'):
        return text
    quote, content = rest[0], rest[1:-1]
    if quote == "'" and "'" not in content and '"' not in content and "\\" not in content:
        return f'{prefix}"{content}"'
    return text


def _split_concat(text: str) -> list[str]:
    parts, depth, current = [], None, []
    i = 0
    while i < len(text):
        ch = text[i]
        current.append(ch)
        if depth is None:
            if ch in "'\"":
                depth = ch
        else:
            if ch == "\\":
                if i + 1 < len(text):
                    current.append(text[i + 1])
                    i += 1
            elif ch == depth:
                depth = None
                parts.append("".join(current).strip())
                current = []
        i += 1
    if "".join(current).strip():
        parts.append("".join(current).strip())
    return [p for p in parts if p]
