"""Corpus ingestion: one JSONL record per single-function task (MBPP schema)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .subject import LexError, ParseError, parse
from .subject import nodes as N


class SchemaError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class SourceFunction:
    task_id: str
    source: str
    tests: tuple[str, ...] = ()
    entry_point: str = ""
    text: str = ""  # optional natural-language description


@dataclass
class LoadReport:
    loaded: int = 0
    skipped: list[tuple[str, str]] = field(default_factory=list)  # (task_id, reason)

    def summary(self) -> str:
        head = f"loaded {self.loaded} functions, skipped {len(self.skipped)}"
        if not self.skipped:
            return head
        reasons = ", ".join(f"{tid}: {why}" for tid, why in self.skipped[:5])
        more = "" if len(self.skipped) <= 5 else f", +{len(self.skipped) - 5} more"
        return f"{head} ({reasons}{more})"


def function_from_record(task_id: str, code: str, tests: list[str], text: str = "") -> SourceFunction:
    """Validate one record against the grammar subset; raises on rejects."""
    mod = parse(code)
    defs = [s for s in mod.body if isinstance(s, N.FunctionDef)]
    if not defs:
        raise ValueError("no function definition")
    return SourceFunction(
        task_id=str(task_id),
        source=code,
        tests=tuple(tests),
        entry_point=defs[-1].name,
        text=text,
    )


def load_corpus(path: str | Path) -> tuple[list[SourceFunction], LoadReport]:
    """Read an MBPP-schema JSONL file.

    Records that fail to parse under the grammar subset are skipped and
    reported; missing schema fields raise SchemaError with the line number.
    """
    path = Path(path)
    functions: list[SourceFunction] = []
    report = LoadReport()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(line_no, f"invalid JSON: {exc}") from exc
            if record.get("_meta") is not None or record.get("meta") is not None:
                continue  # provenance header line
            for fld in ("task_id", "code", "test_list"):
                if fld not in record:
                    raise SchemaError(line_no, f"missing field {fld!r}")
            try:
                fn = function_from_record(
                    record["task_id"], record["code"], list(record["test_list"]),
                    record.get("text", ""),
                )
            except (ParseError, LexError, ValueError) as exc:
                report.skipped.append((str(record["task_id"]), str(exc)))
                continue
            functions.append(fn)
            report.loaded += 1
    return functions, report
