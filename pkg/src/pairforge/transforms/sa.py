"""Semantic-altering transformations: operator misuse and dissimilar-code
selection. Operator misuse is a single-token splice on the original text so
the candidate stays maximally similar to the reference."""

from __future__ import annotations

from random import Random
from typing import Sequence

from ..subject import nodes as N
from ..subject.parser import parse
from ..subject.tokens import lex
from .base import Applied, NotApplicable, TransformOutcome, dead_regions, in_dead_region

SA_FAMILIES = ("AOM", "BOM", "COM", "IOM", "LOM")

# Directed variant tags follow the benchmark's breakdown rows; augmented and
# non-strict forms fold into their base row.
_AOM_FLIP = {"+": "-", "-": "+", "*": "/", "/": "*",
             "+=": "-=", "-=": "+=", "*=": "/=", "/=": "*="}
_AOM_VARIANT = {"+": "+→-", "+=": "+→-", "-": "-→+", "-=": "-→+",
                "*": "*→/", "*=": "*→/", "/": "/→*", "/=": "/→*"}
_COM_FLIP = {"==": "!=", "!=": "==", ">": "<", "<": ">", ">=": "<=", "<=": ">="}
_COM_VARIANT = {"==": "==→!=", "!=": "!=→==", ">": ">→<", ">=": ">→<",
                "<": "<→>", "<=": "<→>"}


# Directed variants per family, with the source tokens each one searches.
DIRECTED_VARIANTS = {
    "AOM": ("+→-", "-→+", "*→/", "/→*"),
    "BOM": ("True→False", "False→True"),
    "COM": ("==→!=", "!=→==", ">→<", "<→>"),
    "IOM": ("is→is not", "is not→is"),
    "LOM": ("and→or", "or→and"),
}
_VARIANT_SOURCES = {
    "+→-": ("+", "+="), "-→+": ("-", "-="), "*→/": ("*", "*="), "/→*": ("/", "/="),
    "True→False": ("True",), "False→True": ("False",),
    "==→!=": ("==",), "!=→==": ("!=",), ">→<": (">", ">="), "<→>": ("<", "<="),
    "is→is not": ("is",), "is not→is": ("is not",),
    "and→or": ("and",), "or→and": ("or",),
}


def misuse_operator(source: str, family: str, variant: str | None = None) -> TransformOutcome:
    """Flip the first operator of the family (or of one directed variant)
    to its semantic opposite."""
    if family not in SA_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if variant is not None and variant not in DIRECTED_VARIANTS[family]:
        raise ValueError(f"variant {variant!r} is not a {family} direction")
    site = _first_site(source, family, variant)
    if site is None:
        return NotApplicable(f"no-{family.lower()}-operator")
    start, end, replacement, found_variant = site
    candidate = source[:start] + replacement + source[end:]
    dead = in_dead_region(start, dead_regions(parse(source)))
    return Applied(candidate=candidate, variant=found_variant,
                   detail=f"{source[start:end]!r} -> {replacement!r} at offset {start}",
                   dead_site=dead)


def _first_site(source: str, family: str, variant: str | None = None):
    """(start, end, replacement, variant) of the first flippable token.

    With a directed variant, only that direction's source tokens count;
    otherwise any token of the family matches.
    """
    wanted = _VARIANT_SOURCES[variant] if variant is not None else None
    tokens = [t for t in lex(source)
              if t.kind not in ("indent", "dedent", "newline", "comment")]

    def allowed(text: str) -> bool:
        return wanted is None or text in wanted

    if family == "AOM":
        spans = _binary_arith_spans(source)
        for tok in tokens:
            if (tok.kind == "operator" and tok.text in _AOM_FLIP
                    and allowed(tok.text) and (tok.start, tok.end) in spans):
                return tok.start, tok.end, _AOM_FLIP[tok.text], _AOM_VARIANT[tok.text]
        return None
    if family == "BOM":
        for tok in tokens:
            if tok.kind == "boolean-literal" and allowed(tok.text):
                flipped = "False" if tok.text == "True" else "True"
                return tok.start, tok.end, flipped, f"{tok.text}→{flipped}"
        return None
    if family == "COM":
        for tok in tokens:
            if tok.kind == "operator" and tok.text in _COM_FLIP and allowed(tok.text):
                return tok.start, tok.end, _COM_FLIP[tok.text], _COM_VARIANT[tok.text]
        return None
    if family == "LOM":
        for tok in tokens:
            if tok.kind == "keyword" and tok.text in ("and", "or") and allowed(tok.text):
                flipped = "or" if tok.text == "and" else "and"
                return tok.start, tok.end, flipped, f"{tok.text}→{flipped}"
        return None
    # IOM: 'is' / 'is not' (membership tests are out of the family)
    for i, tok in enumerate(tokens):
        if tok.kind == "keyword" and tok.text == "is":
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            negated = nxt is not None and nxt.kind == "keyword" and nxt.text == "not"
            if negated and allowed("is not"):
                return tok.start, nxt.end, "is", "is not→is"
            if not negated and allowed("is"):
                return tok.start, tok.end, "is not", "is→is not"
    return None


def _binary_arith_spans(source: str) -> set[tuple[int, int]]:
    """Spans of +-*/ tokens acting as binary or augmented operators.

    Unary signs are excluded; operators inside opaque statements have no
    tree and are skipped too.
    """
    mod = parse(source)
    operator_tokens = [t for t in lex(source)
                       if t.kind == "operator" and t.text in _AOM_FLIP]
    spans: set[tuple[int, int]] = set()

    def first_between(text: str, lo: int, hi: int):
        for tok in operator_tokens:
            if lo <= tok.start and tok.end <= hi and tok.text == text:
                return (tok.start, tok.end)
        return None

    for node in mod.walk():
        if isinstance(node, N.BinOp) and node.op in ("+", "-", "*", "/"):
            span = first_between(node.op, node.left.span[1], node.right.span[0])
            if span:
                spans.add(span)
        elif isinstance(node, N.AugAssign) and node.op in _AOM_FLIP:
            span = first_between(node.op, node.target.span[1], node.value.span[0])
            if span:
                spans.add(span)
    return spans


def select_dissimilar(corpus: Sequence, anchor_task_id: str, rng: Random,
                      count: int = 5) -> list:
    """Pick up to `count` distinct other corpus functions as easy negatives.

    Returns the chosen SourceFunctions; pair assembly happens in the dataset
    layer. Deterministic for a fixed seed and corpus order.
    """
    others = [fn for fn in corpus if fn.task_id != anchor_task_id]
    if not any(fn.task_id == anchor_task_id for fn in corpus):
        raise ValueError(f"anchor {anchor_task_id!r} not in corpus")
    if not others:
        return []
    k = min(count, len(others))
    return rng.sample(others, k)
