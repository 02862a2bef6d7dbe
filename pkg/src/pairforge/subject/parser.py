"""Recursive-descent parser for the subject language.

Covers the constructs found in small benchmark-style functions: defs,
assignments, loops, branches, returns, calls, comprehensions, slices,
lambdas, conditional expressions. Anything else (class, try, with, del,
global, raise, decorators, loop-else) is swallowed verbatim as an opaque
statement so rewrites can skip it instead of failing.
"""

from __future__ import annotations

from . import nodes as N
from .tokens import Token, lex

AUG_OPS = {"+=", "-=", "*=", "/=", "//=", "%=", "**=", "&=", "|=", "^=", "<<=", ">>="}
COMPARE_OPS = {"<", ">", "<=", ">=", "==", "!="}
OPAQUE_LEADERS = {"class", "try", "with", "del", "global", "nonlocal", "raise", "async", "match", "yield"}


class ParseError(ValueError):
    def __init__(self, message: str, token: Token | None, expected: str = ""):
        where = f"line {token.line}, col {token.col}" if token else "end of input"
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{where}: {message}{detail}")
        self.token = token
        self.expected = expected


class _OpaqueFallback(Exception):
    """Internal signal: re-read the current statement as an opaque block."""


class _Parser:
    def __init__(self, source: str):
        self.source = source
        raw = lex(source)
        self.comments = [t for t in raw if t.kind == "comment"]
        self.tokens = [t for t in raw if t.kind != "comment"]
        self.pos = 0

    # --- cursor helpers ---

    def peek(self, offset: int = 0) -> Token | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at(self, kind: str, text: str | None = None) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == kind and (text is None or tok.text == text)

    def at_text(self, *texts: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.text in texts and tok.kind in ("keyword", "operator", "delimiter")

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", None)
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            raise ParseError(f"unexpected token {tok.text!r}" if tok else "unexpected end of input",
                             tok, expected=text or kind)
        return self.advance()

    def skip_newlines(self) -> None:
        while self.at("newline"):
            self.advance()

    # --- entry point ---

    def parse_module(self) -> N.Module:
        mod = N.Module()
        self.skip_newlines()
        while self.peek() is not None:
            if self.at("indent"):
                raise ParseError("unexpected indent", self.peek())
            mod.body.extend(self.parse_line_statements())
            self.skip_newlines()
        if mod.body:
            mod.span = (mod.body[0].span[0], mod.body[-1].span[1])
        else:
            mod.span = (0, 0)
        self._attach_comments(mod)
        return mod

    # --- statements ---

    def parse_line_statements(self) -> list[N.Stmt]:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected statement", None)
        compound = tok.kind == "keyword" and tok.text in ("def", "if", "while", "for")
        opaque = (tok.kind == "keyword" and tok.text in OPAQUE_LEADERS) or (
            tok.kind == "operator" and tok.text == "@")
        if compound or opaque:
            return [self.parse_statement()]
        return self.parse_simple_chain()

    def parse_statement(self) -> N.Stmt:
        start = self.pos
        tok = self.peek()
        if tok is None:
            raise ParseError("expected statement", None)
        try:
            if tok.kind == "keyword":
                if tok.text in OPAQUE_LEADERS:
                    raise _OpaqueFallback
                handler = {
                    "def": self.parse_def, "if": self.parse_if,
                    "while": self.parse_while, "for": self.parse_for,
                }.get(tok.text)
                if handler is not None:
                    return handler()
            if tok.kind == "operator" and tok.text == "@":
                raise _OpaqueFallback
            chain = self.parse_simple_chain()
            if len(chain) != 1:
                raise ParseError("unexpected ';' chain", tok)
            return chain[0]
        except _OpaqueFallback:
            self.pos = start
            return self.parse_opaque()

    def parse_simple_chain(self) -> list[N.Stmt]:
        """Simple statements separated by ';', up to the end of the line."""
        body = [self.parse_small_statement()]
        while self.at_text(";"):
            self.advance()
            if self.at("newline") or self.at("dedent") or self.peek() is None:
                break
            body.append(self.parse_small_statement())
        if self.at("newline"):
            self.advance()
        elif not (self.peek() is None or self.at("dedent")):
            raise ParseError(f"unexpected token {self.peek().text!r}",
                             self.peek(), "end of statement")
        return body

    def parse_suite(self) -> list[N.Stmt]:
        self.expect("delimiter", ":")
        if not self.at("newline"):
            return self.parse_simple_chain()
        self.advance()
        self.skip_newlines()
        self.expect("indent")
        body = []
        self.skip_newlines()
        while not self.at("dedent") and self.peek() is not None:
            body.extend(self.parse_line_statements())
            self.skip_newlines()
        self.expect("dedent")
        return body

    def parse_def(self) -> N.FunctionDef:
        first = self.expect("keyword", "def")
        node = N.FunctionDef(name=self.expect("identifier").text)
        self.expect("delimiter", "(")
        node.params = self.parse_params()
        self.expect("delimiter", ")")
        if self.at_text("->"):
            self.advance()
            node.returns = self.parse_expr()
        node.body = self.parse_suite()
        node.span = (first.start, node.body[-1].span[1] if node.body else first.end)
        return node

    def parse_params(self) -> list[N.Param]:
        params: list[N.Param] = []
        while not self.at_text(")"):
            param = N.Param()
            tok = self.peek()
            if self.at_text("*"):
                self.advance()
                param.star = "*"
            elif self.at_text("**"):
                self.advance()
                param.star = "**"
            name_tok = self.expect("identifier")
            param.name = name_tok.text
            end = name_tok.end
            if self.at_text(":"):
                self.advance()
                param.annotation = self.parse_expr()
                end = param.annotation.span[1]
            if self.at_text("="):
                self.advance()
                param.default = self.parse_expr()
                end = param.default.span[1]
            param.span = (tok.start, end)
            params.append(param)
            if self.at_text(","):
                self.advance()
            else:
                break
        return params

    def parse_if(self) -> N.If:
        first = self.advance()  # 'if' or 'elif'
        node = N.If(test=self.parse_expr())
        node.body = self.parse_suite()
        end = node.body[-1].span[1]
        self.skip_newlines()
        if self.at("keyword", "elif"):
            nested = self.parse_if()
            nested.is_elif = True
            node.orelse = [nested]
            end = nested.span[1]
        elif self.at("keyword", "else"):
            self.advance()
            node.orelse = self.parse_suite()
            end = node.orelse[-1].span[1]
        node.span = (first.start, end)
        return node

    def parse_while(self) -> N.While:
        first = self.expect("keyword", "while")
        node = N.While(test=self.parse_expr())
        node.body = self.parse_suite()
        self.skip_newlines()
        if self.at("keyword", "else"):
            raise _OpaqueFallback  # loop-else: outside the subset
        node.span = (first.start, node.body[-1].span[1])
        return node

    def parse_for(self) -> N.For:
        first = self.expect("keyword", "for")
        node = N.For(target=self.parse_target_list())
        self.expect("keyword", "in")
        node.iter = self.parse_expr()
        node.body = self.parse_suite()
        self.skip_newlines()
        if self.at("keyword", "else"):
            raise _OpaqueFallback
        node.span = (first.start, node.body[-1].span[1])
        return node

    def parse_target_list(self) -> N.Node:
        items = [self.parse_target_atom()]
        while self.at_text(","):
            self.advance()
            if self.at("keyword", "in") or self.at_text("="):
                break
            items.append(self.parse_target_atom())
        if len(items) == 1:
            return items[0]
        tup = N.TupleExpr(elts=items)
        tup.span = (items[0].span[0], items[-1].span[1])
        return tup

    def parse_target_atom(self) -> N.Node:
        # Targets sit left of 'in'/'='; full expressions would swallow the
        # 'in' as a comparison, so stop at the postfix level.
        if self.at_text("*"):
            star = self.advance()
            inner = self.parse_postfix()
            node = N.Starred(stars="*", value=inner)
            node.span = (star.start, inner.span[1])
            return node
        return self.parse_postfix()

    def parse_return(self) -> N.Return:
        first = self.expect("keyword", "return")
        node = N.Return()
        end = first.end
        if not (self.at("newline") or self.at_text(";") or self.peek() is None or self.at("dedent")):
            node.value = self.parse_expr_list()
            end = node.value.span[1]
        node.span = (first.start, end)
        return node

    def parse_import(self) -> N.Import:
        first = self.expect("keyword", "import")
        node = N.Import()
        while True:
            name = self.parse_dotted_name()
            alias = None
            if self.at("keyword", "as"):
                self.advance()
                alias = self.expect("identifier").text
            node.names.append((name, alias))
            if self.at_text(","):
                self.advance()
            else:
                break
        node.span = (first.start, self.peek().start if self.peek() else first.end)
        return node

    def parse_from_import(self) -> N.FromImport:
        first = self.expect("keyword", "from")
        node = N.FromImport(module=self.parse_dotted_name())
        self.expect("keyword", "import")
        if self.at_text("*"):
            self.advance()
            node.names.append(("*", None))
        else:
            while True:
                name = self.expect("identifier").text
                alias = None
                if self.at("keyword", "as"):
                    self.advance()
                    alias = self.expect("identifier").text
                node.names.append((name, alias))
                if self.at_text(","):
                    self.advance()
                else:
                    break
        node.span = (first.start, self.peek().start if self.peek() else first.end)
        return node

    def parse_dotted_name(self) -> str:
        parts = [self.expect("identifier").text]
        while self.at_text("."):
            self.advance()
            parts.append(self.expect("identifier").text)
        return ".".join(parts)

    def parse_assert(self) -> N.Assert:
        first = self.expect("keyword", "assert")
        node = N.Assert(test=self.parse_expr())
        end = node.test.span[1]
        if self.at_text(","):
            self.advance()
            node.msg = self.parse_expr()
            end = node.msg.span[1]
        node.span = (first.start, end)
        return node

    def parse_tiny(self) -> N.Stmt:
        tok = self.advance()
        node = {"break": N.Break, "continue": N.Continue, "pass": N.Pass}[tok.text]()
        node.span = (tok.start, tok.end)
        return node

    def parse_small_statement(self) -> N.Stmt:
        """One simple statement; terminators are owned by parse_simple_chain."""
        tok = self.peek()
        if tok and tok.kind == "keyword":
            handler = {
                "return": self.parse_return, "pass": self.parse_tiny,
                "break": self.parse_tiny, "continue": self.parse_tiny,
                "import": self.parse_import, "from": self.parse_from_import,
                "assert": self.parse_assert,
            }.get(tok.text)
            if handler is None:
                raise ParseError(f"unexpected keyword {tok.text!r}", tok, "simple statement")
            return handler()
        return self.parse_small_assign_or_expr()

    def parse_small_assign_or_expr(self) -> N.Stmt:
        first_tok = self.peek()
        expr = self.parse_expr_list()
        if self.at_text(":") :
            # annotated assignment: x: int = 0
            self.advance()
            ann = self.parse_expr()
            node = N.AnnAssign(target=expr, annotation=ann)
            end = ann.span[1]
            if self.at_text("="):
                self.advance()
                node.value = self.parse_expr_list()
                end = node.value.span[1]
            node.span = (first_tok.start, end)
            return node
        if self.peek() and self.peek().text in AUG_OPS and self.peek().kind == "operator":
            op = self.advance().text
            value = self.parse_expr_list()
            node = N.AugAssign(target=expr, op=op, value=value)
            node.span = (first_tok.start, value.span[1])
            return node
        if self.at_text("="):
            targets = [expr]
            value = None
            while self.at_text("="):
                self.advance()
                value = self.parse_expr_list()
                targets.append(value)
            node = N.Assign(targets=targets[:-1], value=targets[-1])
            node.span = (first_tok.start, value.span[1])
            return node
        node = N.ExprStmt(value=expr)
        node.span = expr.span
        return node

    # --- opaque capture ---

    def parse_opaque(self) -> N.Opaque:
        first = self.peek()
        last_end = first.end
        # consume any decorator lines
        while self.at("operator", "@"):
            last_end = self._consume_logical_line()
        last_end = self._consume_block(last_end)
        # compound tails that belong to the same construct (try/except/else/finally)
        while self.at("keyword", "except") or self.at("keyword", "finally") or self.at("keyword", "else") or self.at("keyword", "elif"):
            last_end = self._consume_block(last_end)
        node = N.Opaque(text=self._rebase(first, last_end))
        node.span = (first.start, last_end)
        return node

    def _consume_logical_line(self) -> int:
        end = self.peek().end if self.peek() else 0
        while self.peek() is not None and not self.at("newline"):
            end = self.advance().end
        if self.at("newline"):
            self.advance()
        return end

    def _consume_block(self, last_end: int) -> int:
        last_end = max(last_end, self._consume_logical_line())
        if self.at("indent"):
            depth = 0
            while self.peek() is not None:
                tok = self.peek()
                if tok.kind == "indent":
                    depth += 1
                elif tok.kind == "dedent":
                    depth -= 1
                    if depth == 0:
                        self.advance()
                        break
                elif tok.kind != "newline":
                    last_end = max(last_end, tok.end)
                self.advance()
        return last_end

    def _rebase(self, first: Token, end: int) -> str:
        text = self.source[first.start:end]
        base = first.col
        lines = text.split("\n")
        out = [lines[0]]
        for line in lines[1:]:
            if line[:base].strip() == "":
                out.append(line[base:] if len(line) >= base else line.lstrip())
            else:
                out.append(line)
        return "\n".join(out)

    # --- expressions ---

    def parse_expr_list(self) -> N.Node:
        """Expression or bare tuple (a, b, c)."""
        first = self.parse_expr()
        if not self.at_text(","):
            return first
        elts = [first]
        while self.at_text(","):
            self.advance()
            if self.at("newline") or self.at_text("=", ")", "]", "}", ":", ";") or self.peek() is None:
                break
            if self.at_text("*"):
                elts.append(self.parse_target_atom())
            else:
                elts.append(self.parse_expr())
        tup = N.TupleExpr(elts=elts)
        tup.span = (first.span[0], elts[-1].span[1])
        return tup

    def parse_expr(self) -> N.Node:
        if self.at("keyword", "lambda"):
            return self.parse_lambda()
        node = self.parse_or_expr()
        if self.at("keyword", "if"):
            self.advance()
            test = self.parse_or_expr()
            self.expect("keyword", "else")
            orelse = self.parse_expr()
            out = N.IfExp(body=node, test=test, orelse=orelse)
            out.span = (node.span[0], orelse.span[1])
            return out
        return node

    def parse_lambda(self) -> N.Lambda:
        first = self.expect("keyword", "lambda")
        node = N.Lambda()
        if not self.at_text(":"):
            while True:
                param = N.Param()
                if self.at_text("*"):
                    self.advance()
                    param.star = "*"
                elif self.at_text("**"):
                    self.advance()
                    param.star = "**"
                tok = self.expect("identifier")
                param.name = tok.text
                param.span = (tok.start, tok.end)
                if self.at_text("="):
                    self.advance()
                    param.default = self.parse_expr()
                    param.span = (tok.start, param.default.span[1])
                node.params.append(param)
                if self.at_text(","):
                    self.advance()
                else:
                    break
        self.expect("delimiter", ":")
        node.body = self.parse_expr()
        node.span = (first.start, node.body.span[1])
        return node

    def parse_or_expr(self) -> N.Node:
        node = self.parse_and_expr()
        if not self.at("keyword", "or"):
            return node
        values = [node]
        while self.at("keyword", "or"):
            self.advance()
            values.append(self.parse_and_expr())
        out = N.BoolOp(op="or", values=values)
        out.span = (values[0].span[0], values[-1].span[1])
        return out

    def parse_and_expr(self) -> N.Node:
        node = self.parse_not_expr()
        if not self.at("keyword", "and"):
            return node
        values = [node]
        while self.at("keyword", "and"):
            self.advance()
            values.append(self.parse_not_expr())
        out = N.BoolOp(op="and", values=values)
        out.span = (values[0].span[0], values[-1].span[1])
        return out

    def parse_not_expr(self) -> N.Node:
        if self.at("keyword", "not"):
            first = self.advance()
            operand = self.parse_not_expr()
            node = N.UnaryOp(op="not", operand=operand)
            node.span = (first.start, operand.span[1])
            return node
        return self.parse_comparison()

    def parse_comparison(self) -> N.Node:
        node = self.parse_bitor()
        ops: list[str] = []
        comparators: list[N.Node] = []
        while True:
            op = self._comparison_op()
            if op is None:
                break
            comparators.append(self.parse_bitor())
            ops.append(op)
        if not ops:
            return node
        out = N.Compare(left=node, ops=ops, comparators=comparators)
        out.span = (node.span[0], comparators[-1].span[1])
        return out

    def _comparison_op(self) -> str | None:
        tok = self.peek()
        if tok is None:
            return None
        if tok.kind == "operator" and tok.text in COMPARE_OPS:
            self.advance()
            return tok.text
        if tok.kind == "keyword":
            nxt = self.peek(1)
            if tok.text == "is":
                self.advance()
                if self.at("keyword", "not"):
                    self.advance()
                    return "is not"
                return "is"
            if tok.text == "in":
                self.advance()
                return "in"
            if tok.text == "not" and nxt is not None and nxt.kind == "keyword" and nxt.text == "in":
                self.advance()
                self.advance()
                return "not in"
        return None

    def _binary_level(self, sub, ops: tuple[str, ...]):
        node = sub()
        while self.peek() is not None and self.peek().kind == "operator" and self.peek().text in ops:
            op = self.advance().text
            right = sub()
            out = N.BinOp(left=node, op=op, right=right)
            out.span = (node.span[0], right.span[1])
            node = out
        return node

    def parse_bitor(self) -> N.Node:
        return self._binary_level(self.parse_bitxor, ("|",))

    def parse_bitxor(self) -> N.Node:
        return self._binary_level(self.parse_bitand, ("^",))

    def parse_bitand(self) -> N.Node:
        return self._binary_level(self.parse_shift, ("&",))

    def parse_shift(self) -> N.Node:
        return self._binary_level(self.parse_arith, ("<<", ">>"))

    def parse_arith(self) -> N.Node:
        return self._binary_level(self.parse_term, ("+", "-"))

    def parse_term(self) -> N.Node:
        return self._binary_level(self.parse_unary, ("*", "/", "//", "%", "@"))

    def parse_unary(self) -> N.Node:
        tok = self.peek()
        if tok is not None and tok.kind == "operator" and tok.text in ("-", "+", "~"):
            self.advance()
            operand = self.parse_unary()
            node = N.UnaryOp(op=tok.text, operand=operand)
            node.span = (tok.start, operand.span[1])
            return node
        return self.parse_power()

    def parse_power(self) -> N.Node:
        base = self.parse_postfix()
        if self.at("operator", "**"):
            self.advance()
            exp = self.parse_unary()  # right-assoc, exponent may be unary
            node = N.BinOp(left=base, op="**", right=exp)
            node.span = (base.span[0], exp.span[1])
            return node
        return base

    def parse_postfix(self) -> N.Node:
        node = self.parse_atom()
        while True:
            if self.at_text("("):
                node = self.parse_call(node)
            elif self.at_text("["):
                first = self.advance()
                index = self.parse_subscript_index()
                closer = self.expect("delimiter", "]")
                out = N.Subscript(value=node, index=index)
                out.span = (node.span[0], closer.end)
                node = out
            elif self.at_text("."):
                self.advance()
                attr = self.expect("identifier")
                out = N.Attribute(value=node, attr=attr.text)
                out.span = (node.span[0], attr.end)
                node = out
            else:
                return node

    def parse_call(self, func: N.Node) -> N.Call:
        self.expect("delimiter", "(")
        node = N.Call(func=func)
        while not self.at_text(")"):
            if self.at_text("*"):
                star = self.advance()
                value = self.parse_expr()
                s = N.Starred(stars="*", value=value)
                s.span = (star.start, value.span[1])
                node.args.append(s)
            elif self.at_text("**"):
                self.advance()
                node.kwarg_names.append(None)
                node.kwarg_values.append(self.parse_expr())
            elif (self.peek() and self.peek().kind == "identifier"
                  and self.peek(1) is not None and self.peek(1).kind == "operator"
                  and self.peek(1).text == "="):
                name = self.advance().text
                self.advance()
                node.kwarg_names.append(name)
                node.kwarg_values.append(self.parse_expr())
            else:
                arg = self.parse_expr()
                if self.at("keyword", "for"):
                    arg = self.parse_comp_tail("genexp", arg)
                node.args.append(arg)
            if self.at_text(","):
                self.advance()
            else:
                break
        closer = self.expect("delimiter", ")")
        node.span = (func.span[0], closer.end)
        return node

    def parse_subscript_index(self) -> N.Node:
        def maybe_bound():
            if self.at_text(":", "]"):
                return None
            return self.parse_expr()

        first = self.peek()
        lower = maybe_bound()
        if self.at_text(":"):
            self.advance()
            node = N.SliceExpr(lower=lower, upper=maybe_bound())
            if self.at_text(":"):
                self.advance()
                node.has_step_colon = True
                node.step = maybe_bound()
            last = self.peek()
            node.span = (first.start, last.start if last else first.start)
            return node
        if lower is None:
            raise ParseError("empty subscript", self.peek())
        if self.at_text(","):
            elts = [lower]
            while self.at_text(","):
                self.advance()
                if self.at_text("]"):
                    break
                elts.append(self.parse_expr())
            tup = N.TupleExpr(elts=elts)
            tup.span = (lower.span[0], elts[-1].span[1])
            return tup
        return lower

    def parse_comp_tail(self, comp_kind: str, element: N.Node, value: N.Node | None = None) -> N.Comprehension:
        node = N.Comprehension(comp_kind=comp_kind, element=element, value=value)
        while self.at("keyword", "for"):
            self.advance()
            comp = N.CompFor(target=self.parse_target_list())
            self.expect("keyword", "in")
            comp.iter = self.parse_or_expr()
            while self.at("keyword", "if"):
                self.advance()
                comp.ifs.append(self.parse_or_expr())
            end = comp.ifs[-1].span[1] if comp.ifs else comp.iter.span[1]
            comp.span = (comp.target.span[0], end)
            node.generators.append(comp)
        node.span = (element.span[0], node.generators[-1].span[1])
        return node

    def parse_atom(self) -> N.Node:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected expression", None)
        if tok.kind == "identifier":
            self.advance()
            node = N.Name(id=tok.text)
            node.span = (tok.start, tok.end)
            return node
        if tok.kind == "number":
            self.advance()
            node = N.Literal(lit_kind="number", text=tok.text)
            node.span = (tok.start, tok.end)
            return node
        if tok.kind == "string":
            self.advance()
            node = N.Literal(lit_kind="string", text=tok.text)
            end = tok.end
            while self.at("string"):  # implicit concatenation
                nxt = self.advance()
                node.text += " " + nxt.text
                end = nxt.end
            node.span = (tok.start, end)
            return node
        if tok.kind == "boolean-literal":
            self.advance()
            node = N.Literal(lit_kind="bool", text=tok.text)
            node.span = (tok.start, tok.end)
            return node
        if tok.kind == "keyword" and tok.text == "None":
            self.advance()
            node = N.Literal(lit_kind="none", text="None")
            node.span = (tok.start, tok.end)
            return node
        if tok.kind == "keyword" and tok.text == "lambda":
            return self.parse_lambda()
        if tok.kind == "keyword" and tok.text == "not":
            return self.parse_not_expr()
        if self.at_text("("):
            return self.parse_paren()
        if self.at_text("["):
            return self.parse_list_display()
        if self.at_text("{"):
            return self.parse_brace_display()
        raise ParseError(f"unexpected token {tok.text!r}", tok, "expression")

    def parse_paren(self) -> N.Node:
        opener = self.expect("delimiter", "(")
        if self.at_text(")"):
            closer = self.advance()
            node = N.TupleExpr()
            node.span = (opener.start, closer.end)
            return node
        first = self.parse_expr()
        if self.at("keyword", "for"):
            comp = self.parse_comp_tail("genexp", first)
            closer = self.expect("delimiter", ")")
            comp.span = (opener.start, closer.end)
            return comp
        if self.at_text(","):
            elts = [first]
            while self.at_text(","):
                self.advance()
                if self.at_text(")"):
                    break
                elts.append(self.parse_expr())
            closer = self.expect("delimiter", ")")
            node = N.TupleExpr(elts=elts)
            node.span = (opener.start, closer.end)
            return node
        self.expect("delimiter", ")")
        return first  # grouping parens are not recorded

    def parse_list_display(self) -> N.Node:
        opener = self.expect("delimiter", "[")
        if self.at_text("]"):
            closer = self.advance()
            node = N.ListExpr()
            node.span = (opener.start, closer.end)
            return node
        first = self.parse_expr()
        if self.at("keyword", "for"):
            comp = self.parse_comp_tail("list", first)
            closer = self.expect("delimiter", "]")
            comp.span = (opener.start, closer.end)
            return comp
        elts = [first]
        while self.at_text(","):
            self.advance()
            if self.at_text("]"):
                break
            elts.append(self.parse_expr())
        closer = self.expect("delimiter", "]")
        node = N.ListExpr(elts=elts)
        node.span = (opener.start, closer.end)
        return node

    def parse_brace_display(self) -> N.Node:
        opener = self.expect("delimiter", "{")
        if self.at_text("}"):
            closer = self.advance()
            node = N.DictExpr()
            node.span = (opener.start, closer.end)
            return node
        if self.at_text("**"):
            self.advance()
            value = self.parse_expr()
            star = N.Starred(stars="**")
            star.span = value.span
            node = N.DictExpr(keys=[star], values=[value])
            return self._dict_rest(opener, node)
        first = self.parse_expr()
        if self.at_text(":"):
            self.advance()
            value = self.parse_expr()
            if self.at("keyword", "for"):
                comp = self.parse_comp_tail("dict", first, value)
                closer = self.expect("delimiter", "}")
                comp.span = (opener.start, closer.end)
                return comp
            node = N.DictExpr(keys=[first], values=[value])
            return self._dict_rest(opener, node)
        if self.at("keyword", "for"):
            comp = self.parse_comp_tail("set", first)
            closer = self.expect("delimiter", "}")
            comp.span = (opener.start, closer.end)
            return comp
        elts = [first]
        while self.at_text(","):
            self.advance()
            if self.at_text("}"):
                break
            elts.append(self.parse_expr())
        closer = self.expect("delimiter", "}")
        node = N.SetExpr(elts=elts)
        node.span = (opener.start, closer.end)
        return node

    def _dict_rest(self, opener: Token, node: N.DictExpr) -> N.DictExpr:
        while self.at_text(","):
            self.advance()
            if self.at_text("}"):
                break
            if self.at_text("**"):
                self.advance()
                value = self.parse_expr()
                star = N.Starred(stars="**")
                star.span = value.span
                node.keys.append(star)
                node.values.append(value)
            else:
                key = self.parse_expr()
                self.expect("delimiter", ":")
                node.keys.append(key)
                node.values.append(self.parse_expr())
        closer = self.expect("delimiter", "}")
        node.span = (opener.start, closer.end)
        return node

    # --- comment attachment ---

    def _attach_comments(self, mod: N.Module) -> None:
        stmts = [n for n in mod.walk() if isinstance(n, N.Stmt)]
        opaque_spans = [n.span for n in stmts if isinstance(n, N.Opaque)]
        line_of = {}
        for s in stmts:
            line = self.source.count("\n", 0, s.span[0]) + 1
            line_of.setdefault(line, s)
        ordered = sorted(stmts, key=lambda s: s.span[0])
        for c in self.comments:
            if any(a <= c.start < b for a, b in opaque_spans):
                continue  # lives inside verbatim text already
            owner = line_of.get(c.line)
            if owner is not None and owner.span[0] < c.start:
                owner.trailing_comment = c.text
                continue
            following = [s for s in ordered if s.span[0] > c.start]
            if following:
                following[0].leading_comments.append(c.text)
            else:
                mod.dangling_comments.append(c.text)


def parse(source: str) -> N.Module:
    """Parse source into a Module.

    Raises LexError/ParseError for input outside the supported grammar
    subset that cannot be captured opaquely.
    """
    return _Parser(source).parse_module()
