"""Lexing, parsing, binding analysis, and rendering of subject-language source."""

from .analysis import Binding, Exhausted, bindings, fresh_name, most_frequent_variable, taken_names
from .nodes import Module, structurally_equal
from .parser import ParseError, parse
from .render import expr_text, render
from .tokens import LexError, Token, code_texts, code_tokens, lex

__all__ = [
    "Binding", "Exhausted", "LexError", "Module", "ParseError", "Token",
    "bindings", "code_texts", "code_tokens", "expr_text", "fresh_name", "lex",
    "most_frequent_variable", "parse", "render", "structurally_equal", "taken_names",
]
