"""Composite code similarity: surface BLEU, keyword-weighted BLEU, syntax
subtree matching, and def-use dataflow matching.

Subtree signatures strip identifier and literal texts, and dataflow variables
are alpha-renamed by first occurrence, so both structural components are
invariant under variable renaming.
"""

from __future__ import annotations

from collections import Counter

from ..subject import nodes as N
from ..subject.parser import parse
from ..subject.tokens import LexError
from ..subject.vocab import KEYWORDS
from .overlap import MetricScore, bleu, weighted_bleu
from .tokenizer import tokenize_with_flag

KEYWORD_WEIGHT = 5.0
_KEYWORD_WEIGHTS = {kw: KEYWORD_WEIGHT for kw in KEYWORDS}


def codebleu(reference: str, candidate: str,
             weights: tuple[float, float, float, float] = (0.25, 0.25, 0.25, 0.25)) -> MetricScore:
    if abs(sum(weights) - 1.0) > 1e-9:
        raise ValueError("component weights must sum to 1")
    alpha, beta, gamma, delta = weights
    ref_tokens, _ = tokenize_with_flag(reference)
    cand_tokens, degraded = tokenize_with_flag(candidate)
    surface = bleu(ref_tokens, cand_tokens).value
    weighted = weighted_bleu(ref_tokens, cand_tokens, _KEYWORD_WEIGHTS).value

    parse_failed = False
    try:
        ref_mod = parse(reference)
    except (LexError, ValueError, RecursionError):
        ref_mod = None
        parse_failed = True
    try:
        cand_mod = parse(candidate)
    except (LexError, ValueError, RecursionError):
        cand_mod = None
        parse_failed = True

    if ref_mod is None or cand_mod is None:
        ast_match = dataflow = 0.0
    else:
        ast_match = _subtree_match(ref_mod, cand_mod)
        dataflow = _dataflow_match(ref_mod, cand_mod)

    value = alpha * surface + beta * weighted + gamma * ast_match + delta * dataflow
    components = {
        "bleu": surface,
        "weighted_bleu": weighted,
        "ast_match": ast_match,
        "dataflow_match": dataflow,
    }
    if parse_failed or degraded:
        components["degraded"] = 1.0
    return MetricScore(value, components)


# --- syntax subtrees ---------------------------------------------------------


def _signature(node: N.Node):
    kind = node.kind
    if kind == "name":
        return ("name",)
    if kind == "literal":
        return ("literal", node.lit_kind)
    if kind == "opaque":
        return ("opaque",)
    salient = ""
    if kind in ("binary-op", "bool-op", "unary-op", "augmented-assignment"):
        salient = node.op
    elif kind in ("comparison", "identity-op"):
        salient = ",".join(node.ops)
    elif kind == "attribute":
        salient = node.attr
    elif kind == "comprehension":
        salient = node.comp_kind
    return (kind, salient) + tuple(_signature(c) for c in node.children())


def _subtrees(mod: N.Module) -> Counter:
    counts: Counter = Counter()
    for node in mod.walk():
        if isinstance(node, N.Module):
            continue
        if any(True for _ in node.children()):
            counts[_signature(node)] += 1
    return counts


def _subtree_match(ref_mod: N.Module, cand_mod: N.Module) -> float:
    ref_counts = _subtrees(ref_mod)
    if not ref_counts:
        return 1.0 if not _subtrees(cand_mod) else 0.0
    cand_counts = _subtrees(cand_mod)
    matched = sum(min(c, cand_counts[sig]) for sig, c in ref_counts.items())
    return matched / sum(ref_counts.values())


# --- dataflow ----------------------------------------------------------------


def _alpha_map(mod: N.Module) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for node in mod.walk():
        names = []
        if isinstance(node, N.Name):
            names = [node.id]
        elif isinstance(node, (N.FunctionDef, N.Lambda)):
            names = [p.name for p in node.params]
        for name in names:
            if name not in mapping:
                mapping[name] = f"var_{len(mapping)}"
    return mapping


def _names_in(expr: N.Node | None) -> list[str]:
    if expr is None:
        return []
    return [n.id for n in expr.walk() if isinstance(n, N.Name)]


def _target_names(expr: N.Node | None) -> list[str]:
    if expr is None:
        return []
    if isinstance(expr, N.Name):
        return [expr.id]
    if isinstance(expr, (N.TupleExpr, N.ListExpr)):
        out = []
        for item in expr.elts:
            out.extend(_target_names(item))
        return out
    if isinstance(expr, N.Starred):
        return _target_names(expr.value)
    if isinstance(expr, (N.Subscript, N.Attribute)):
        return _target_names(expr.value)
    return []


def _dataflow_edges(mod: N.Module) -> Counter:
    rename = _alpha_map(mod)
    edges: Counter = Counter()

    def add(targets: list[str], sources: list[str]) -> None:
        for t in targets:
            for s in sources:
                edges[(rename.get(t, t), rename.get(s, s))] += 1

    for node in mod.walk():
        if isinstance(node, N.Assign):
            sources = _names_in(node.value)
            for target in node.targets:
                add(_target_names(target), sources)
        elif isinstance(node, N.AugAssign):
            targets = _target_names(node.target)
            add(targets, targets + _names_in(node.value))
        elif isinstance(node, N.AnnAssign) and node.value is not None:
            add(_target_names(node.target), _names_in(node.value))
        elif isinstance(node, N.For):
            add(_target_names(node.target), _names_in(node.iter))
        elif isinstance(node, N.CompFor):
            add(_target_names(node.target), _names_in(node.iter))
    return edges


def _dataflow_match(ref_mod: N.Module, cand_mod: N.Module) -> float:
    ref_edges = _dataflow_edges(ref_mod)
    cand_edges = _dataflow_edges(cand_mod)
    if not ref_edges:
        return 1.0 if not cand_edges else 0.0
    matched = sum(min(c, cand_edges[e]) for e, c in ref_edges.items())
    return matched / sum(ref_edges.values())
