"""Tokenization for the match-based metrics: lexer tokens without layout or
comments, string literals kept whole. Falls back to whitespace splitting when
the input does not lex."""

from __future__ import annotations

from ..subject.tokens import LexError, code_texts


def tokenize_for_metrics(source: str) -> list[str]:
    tokens, _ = tokenize_with_flag(source)
    return tokens


def tokenize_with_flag(source: str) -> tuple[list[str], bool]:
    """(tokens, degraded): degraded means the lexer gave up."""
    try:
        return code_texts(source), False
    except (LexError, RecursionError):
        return source.split(), True
