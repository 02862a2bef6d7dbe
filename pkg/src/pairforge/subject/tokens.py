"""Hand-rolled lexer for the subject language (Python-3 syntax subset).

Tokens carry byte spans into the original source so that the token stream
reproduces the input exactly and transforms can splice single tokens without
disturbing the surrounding formatting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .vocab import KEYWORDS


class LexError(ValueError):
    """Raised on characters or indentation outside the subject language."""

    def __init__(self, message: str, pos: int, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.pos = pos
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | keyword | operator | delimiter | number | string
    #            | boolean-literal | indent | dedent | newline | comment
    text: str
    start: int  # byte offset into the source, half-open span [start, end)
    end: int
    line: int
    col: int

    def __repr__(self):  # compact, for test failure output
        return f"<{self.kind} {self.text!r}@{self.line}:{self.col}>"


LAYOUT_KINDS = frozenset({"indent", "dedent", "newline"})

# Multi-char operators first so longest-match wins.
_OPERATORS = [
    "**=", "//=", "<<=", ">>=",
    "==", "!=", "<=", ">=", "->", "+=", "-=", "*=", "/=", "%=",
    "&=", "|=", "^=", "**", "//", "<<", ">>",
    "+", "-", "*", "/", "%", "@", "&", "|", "^", "~", "<", ">", "=",
]
_DELIMITERS = "()[]{},:.;"
_OPEN = "([{"
_CLOSE = ")]}"

_STRING_PREFIXES = {"r", "b", "u", "f", "rb", "br", "fr", "rf"}

_ID_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_ID_CONT = _ID_START | set("0123456789")
_DIGITS = set("0123456789")

_TABSIZE = 8


def _indent_width(prefix: str) -> int:
    width = 0
    for ch in prefix:
        if ch == "\t":
            width = (width // _TABSIZE + 1) * _TABSIZE
        else:
            width += 1
    return width


class _Lexer:
    def __init__(self, source: str):
        self.src = source
        self.n = len(source)
        self.i = 0
        self.line = 1
        self.line_start = 0
        self.paren_depth = 0
        self.indents = [0]
        self.tokens: list[Token] = []
        self.line_had_code = False

    def error(self, message: str) -> LexError:
        return LexError(message, self.i, self.line, self.i - self.line_start)

    def emit(self, kind: str, start: int, end: int) -> None:
        self.tokens.append(
            Token(kind, self.src[start:end], start, end, self.line, start - self.line_start)
        )

    def emit_synthetic(self, kind: str) -> None:
        pos = self.i
        self.tokens.append(Token(kind, "", pos, pos, self.line, pos - self.line_start))

    def run(self) -> list[Token]:
        self.handle_line_start()
        while self.i < self.n:
            ch = self.src[self.i]
            if ch == "\n":
                self.newline()
            elif ch in " \t\r":
                self.i += 1
            elif ch == "\\" and self.i + 1 < self.n and self.src[self.i + 1] == "\n":
                self.i += 2
                self.line += 1
                self.line_start = self.i
            elif ch == "#":
                self.comment()
            elif ch in _ID_START:
                self.word()
            elif ch in _DIGITS or (ch == "." and self.peek_is_digit()):
                self.number()
            elif ch in "'\"":
                self.string(self.i)
            elif ch in _DELIMITERS:
                if ch in _OPEN:
                    self.paren_depth += 1
                elif ch in _CLOSE:
                    self.paren_depth = max(0, self.paren_depth - 1)
                self.emit("delimiter", self.i, self.i + 1)
                self.i += 1
                self.line_had_code = True
            else:
                for op in _OPERATORS:
                    if self.src.startswith(op, self.i):
                        self.emit("operator", self.i, self.i + len(op))
                        self.i += len(op)
                        self.line_had_code = True
                        break
                else:
                    raise self.error(f"illegal character {ch!r}")
        if self.line_had_code:
            self.emit_synthetic("newline")
        while len(self.indents) > 1:
            self.indents.pop()
            self.emit_synthetic("dedent")
        return self.tokens

    def peek_is_digit(self) -> bool:
        return self.i + 1 < self.n and self.src[self.i + 1] in _DIGITS

    def newline(self) -> None:
        if self.paren_depth == 0 and self.line_had_code:
            self.emit("newline", self.i, self.i + 1)
        self.i += 1
        self.line += 1
        self.line_start = self.i
        if self.paren_depth == 0:
            self.line_had_code = False
            self.handle_line_start()

    def handle_line_start(self) -> None:
        # Measure indentation of the upcoming line; blank and comment-only
        # lines do not open or close blocks.
        j = self.i
        while j < self.n and self.src[j] in " \t":
            j += 1
        if j >= self.n or self.src[j] in "\n#":
            return
        width = _indent_width(self.src[self.i:j])
        if width > self.indents[-1]:
            self.indents.append(width)
            self.tokens.append(Token("indent", "", self.i, self.i, self.line, 0))
        else:
            while width < self.indents[-1]:
                self.indents.pop()
                self.tokens.append(Token("dedent", "", self.i, self.i, self.line, 0))
            if width != self.indents[-1]:
                self.i = j
                raise self.error("inconsistent dedent")

    def comment(self) -> None:
        start = self.i
        while self.i < self.n and self.src[self.i] != "\n":
            self.i += 1
        self.emit("comment", start, self.i)

    def word(self) -> None:
        start = self.i
        while self.i < self.n and self.src[self.i] in _ID_CONT:
            self.i += 1
        text = self.src[start:self.i]
        if text.lower() in _STRING_PREFIXES and self.i < self.n and self.src[self.i] in "'\"":
            self.string(start)
            return
        if text in ("True", "False"):
            kind = "boolean-literal"
        elif text in KEYWORDS:
            kind = "keyword"
        else:
            kind = "identifier"
        self.emit(kind, start, self.i)
        self.line_had_code = True

    def number(self) -> None:
        start = self.i
        src, n = self.src, self.n
        if src[self.i] == "0" and self.i + 1 < n and src[self.i + 1] in "xXoObB":
            self.i += 2
            while self.i < n and src[self.i] in "0123456789abcdefABCDEF_":
                self.i += 1
        else:
            while self.i < n and (src[self.i] in _DIGITS or src[self.i] == "_"):
                self.i += 1
            if self.i < n and src[self.i] == ".":
                self.i += 1
                while self.i < n and (src[self.i] in _DIGITS or src[self.i] == "_"):
                    self.i += 1
            if self.i < n and src[self.i] in "eE":
                j = self.i + 1
                if j < n and src[j] in "+-":
                    j += 1
                if j < n and src[j] in _DIGITS:
                    self.i = j
                    while self.i < n and src[self.i] in _DIGITS:
                        self.i += 1
            if self.i < n and src[self.i] in "jJ":
                self.i += 1
        self.emit("number", start, self.i)
        self.line_had_code = True

    def string(self, start: int) -> None:
        # start points at the prefix (if any); self.i may sit past it already.
        i = start
        while self.src[i] not in "'\"":
            i += 1
        quote = self.src[i]
        if self.src.startswith(quote * 3, i):
            closer, i = quote * 3, i + 3
        else:
            closer, i = quote, i + 1
        lines = 0
        while i < self.n:
            ch = self.src[i]
            if ch == "\\" and i + 1 < self.n:
                if self.src[i + 1] == "\n":
                    lines += 1
                i += 2
                continue
            if self.src.startswith(closer, i):
                i += len(closer)
                break
            if ch == "\n":
                if len(closer) == 1:
                    raise self.error("unterminated string literal")
                lines += 1
            i += 1
        else:
            raise self.error("unterminated string literal")
        self.emit("string", start, i)
        self.i = i
        self.line += lines
        if lines:
            self.line_start = self.src.rfind("\n", 0, i) + 1
        self.line_had_code = True


def lex(source: str) -> list[Token]:
    """Tokenize source; comments are preserved as tokens.

    Raises LexError on characters outside the subject language or on
    inconsistent indentation.
    """
    return _Lexer(source).run()


def code_tokens(tokens: list[Token]) -> list[Token]:
    """Drop layout (indent/dedent/newline) and comment tokens."""
    return [t for t in tokens if t.kind not in LAYOUT_KINDS and t.kind != "comment"]


def code_texts(source: str) -> list[str]:
    """Non-layout, non-comment token texts of source."""
    return [t.text for t in code_tokens(lex(source))]
