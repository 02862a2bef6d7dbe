"""Variable binding analysis and fresh identifier generation."""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from random import Random

from . import nodes as N
from .parser import parse
from .tokens import lex
from .vocab import BUILTINS, KEYWORDS


class Exhausted(RuntimeError):
    """No fresh identifier found within the candidate budget."""


@dataclass
class Binding:
    name: str
    count: int = 0
    spans: list[tuple[int, int]] = field(default_factory=list)
    is_parameter: bool = False
    is_loop_target: bool = False
    is_assigned: bool = False


def bindings(source_or_module: str | N.Module) -> dict[str, Binding]:
    """Locally bound variable names with all their occurrence spans.

    Parameters count (the transforms rename them too); the function's own
    name, attribute names, string contents, keywords, builtins that are only
    read, and imported module names are all excluded. Opaque statements are
    not analyzed.
    """
    mod = parse(source_or_module) if isinstance(source_or_module, str) else source_or_module
    bound: dict[str, Binding] = {}
    excluded: set[str] = set()

    def bind(name: str, **flag) -> Binding:
        info = bound.setdefault(name, Binding(name))
        for key, value in flag.items():
            if value:
                setattr(info, key, True)
        return info

    def bind_target(expr: N.Node, *, loop: bool = False) -> None:
        if isinstance(expr, N.Name):
            bind(expr.id, is_loop_target=loop, is_assigned=not loop)
        elif isinstance(expr, (N.TupleExpr, N.ListExpr)):
            for item in expr.elts:
                bind_target(item, loop=loop)
        elif isinstance(expr, N.Starred) and expr.value is not None:
            bind_target(expr.value, loop=loop)
        # subscript/attribute targets mutate an existing binding

    for node in mod.walk():
        if isinstance(node, N.FunctionDef):
            excluded.add(node.name)
            for param in node.params:
                bind(param.name, is_parameter=True)
        elif isinstance(node, N.Assign):
            for target in node.targets:
                bind_target(target)
        elif isinstance(node, (N.AugAssign, N.AnnAssign)):
            bind_target(node.target)
        elif isinstance(node, N.For):
            bind_target(node.target, loop=True)
        elif isinstance(node, N.CompFor):
            bind_target(node.target, loop=True)
        elif isinstance(node, N.Lambda):
            for param in node.params:
                bind(param.name, is_parameter=True)
        elif isinstance(node, N.Import):
            for name, alias in node.names:
                excluded.add(alias or name.split(".")[0])
        elif isinstance(node, N.FromImport):
            for name, alias in node.names:
                excluded.add(alias or name)

    for name in excluded:
        bound.pop(name, None)

    for node in mod.walk():
        if isinstance(node, N.Name) and node.id in bound:
            info = bound[node.id]
            info.count += 1
            info.spans.append(node.span)
        elif isinstance(node, (N.FunctionDef, N.Lambda)):
            for param in node.params:
                if param.name in bound:
                    info = bound[param.name]
                    info.count += 1
                    start = param.span[0] + len(param.star)
                    info.spans.append((start, start + len(param.name)))

    for info in bound.values():
        info.spans.sort()
    return bound


def most_frequent_variable(table: dict[str, Binding]) -> str | None:
    """Highest occurrence count; ties go to the earliest first occurrence."""
    if not table:
        return None
    return min(table.values(), key=lambda b: (-b.count, b.spans[0] if b.spans else (1 << 60,))).name


def taken_names(source: str) -> set[str]:
    names = {t.text for t in lex(source) if t.kind in ("identifier", "keyword", "boolean-literal")}
    return names | KEYWORDS


_LETTERS = string.ascii_lowercase
_DIGITS = string.digits


def fresh_name(source: str, stem: str, rng: Random | None = None, *, length: int = 6) -> str:
    """A valid identifier absent from source.

    With a stem, candidates are stem, stem0, stem1, ... (a trailing '_' skips
    the bare stem). With an empty stem, a seeded random name: first char
    alphabetic, half letters / half digits overall.
    """
    taken = taken_names(source) | BUILTINS
    if stem:
        candidates = []
        if not stem.endswith("_"):
            candidates.append(stem)
        candidates.extend(f"{stem}{i}" for i in range(1000))
        for cand in candidates:
            if cand not in taken:
                return cand
        raise Exhausted(f"no fresh name for stem {stem!r}")
    if rng is None:
        raise ValueError("random mode needs a seeded generator")
    n_letters = length // 2  # counting the alphabetic first char
    for _ in range(1000):
        head = rng.choice(_LETTERS)
        tail = [rng.choice(_LETTERS) for _ in range(n_letters - 1)]
        tail += [rng.choice(_DIGITS) for _ in range(length - n_letters)]
        rng.shuffle(tail)
        cand = head + "".join(tail)
        if cand not in taken and cand not in KEYWORDS:
            return cand
    raise Exhausted("no fresh random name in 1000 draws")
