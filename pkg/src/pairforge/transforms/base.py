"""Shared transform outcome types and tree helpers."""

from __future__ import annotations

from dataclasses import dataclass

from ..subject import nodes as N
from ..subject import parse


@dataclass(frozen=True)
class Applied:
    candidate: str
    variant: str = ""
    detail: str = ""
    dead_site: bool = False


@dataclass(frozen=True)
class NotApplicable:
    reason: str


@dataclass(frozen=True)
class Failed:
    error: str


TransformOutcome = Applied | NotApplicable | Failed


def parse_snippet(text: str) -> list[N.Stmt]:
    """Parse a code fragment into statements for grafting into a tree."""
    return parse(text).body


def iter_suites(mod: N.Module):
    """Yield every statement list in the tree (module body, def/loop/branch bodies)."""
    yield mod.body
    for node in mod.walk():
        if isinstance(node, (N.FunctionDef, N.While, N.For)):
            yield node.body
        elif isinstance(node, N.If):
            yield node.body
            if node.orelse:
                yield node.orelse


def is_false_literal(expr: N.Node | None) -> bool:
    if isinstance(expr, N.Literal):
        return (expr.lit_kind == "bool" and expr.text == "False") or (
            expr.lit_kind == "number" and expr.text in ("0", "0.0"))
    return False


def is_zero_range(expr: N.Node | None) -> bool:
    return (isinstance(expr, N.Call) and isinstance(expr.func, N.Name)
            and expr.func.id == "range" and len(expr.args) == 1
            and isinstance(expr.args[0], N.Literal) and expr.args[0].text == "0")


def is_self_compare(expr: N.Node | None) -> bool:
    """x > x / x < x with the same plain name on both sides."""
    return (isinstance(expr, N.Compare) and len(expr.ops) == 1
            and expr.ops[0] in ("<", ">") and isinstance(expr.left, N.Name)
            and isinstance(expr.comparators[0], N.Name)
            and expr.left.id == expr.comparators[0].id)


def dead_regions(mod: N.Module) -> list[tuple[int, int]]:
    """Byte spans of statements that can never execute."""
    regions: list[tuple[int, int]] = []

    def body_region(body: list[N.Stmt]) -> None:
        spans = [s.span for s in body if s.span != (-1, -1)]
        if spans:
            regions.append((min(a for a, _ in spans), max(b for _, b in spans)))

    for node in mod.walk():
        if isinstance(node, N.If) and is_false_literal(node.test):
            body_region(node.body)
        elif isinstance(node, N.While) and (is_false_literal(node.test) or is_self_compare(node.test)):
            body_region(node.body)
        elif isinstance(node, N.For) and is_zero_range(node.iter):
            body_region(node.body)
    for suite in iter_suites(mod):
        for i, stmt in enumerate(suite):
            if isinstance(stmt, (N.Return, N.Break, N.Continue)) and i + 1 < len(suite):
                body_region(suite[i + 1:])
                break
    return regions


def in_dead_region(offset: int, regions: list[tuple[int, int]]) -> bool:
    return any(a <= offset < b for a, b in regions)
