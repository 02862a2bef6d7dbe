"""Pair generation, split assignment, statistics, serialization, and
execution-based label validation."""

from __future__ import annotations

import hashlib
import json
import subprocess
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from random import Random

from .corpus import SourceFunction
from .transforms import (
    Applied,
    Failed,
    NotApplicable,
    convert_loop,
    insert_dead_code,
    misuse_operator,
    rename_variable,
    select_dissimilar,
    swap_comparison_operands,
)
from .transforms.sa import DIRECTED_VARIANTS

SP_KINDS = ("rename-naive", "rename-rn", "rename-cb", "dead-code", "operand-swap", "loop")
SA_KINDS = ("AOM", "BOM", "COM", "IOM", "LOM", "DCS")
ALL_KINDS = SP_KINDS + SA_KINDS

_FAMILY_OF_SP = {"rename-naive": "RV", "rename-rn": "RV", "rename-cb": "RV",
                 "dead-code": "DCI", "operand-swap": "OS", "loop": "LT"}


class InvalidRatios(ValueError):
    pass


class HarnessUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class CodePair:
    pair_id: str
    task_id: str
    reference: str
    candidate: str
    label: int
    family: str
    variant: str
    seed: int
    split: str = ""
    detail: str = ""

    def to_record(self) -> dict:
        return {
            "pair_id": self.pair_id, "task_id": self.task_id,
            "reference": self.reference, "candidate": self.candidate,
            "label": self.label, "family": self.family, "variant": self.variant,
            "split": self.split, "seed": self.seed, "detail": self.detail,
        }

    @classmethod
    def from_record(cls, record: dict) -> "CodePair":
        return cls(
            pair_id=record["pair_id"], task_id=record["task_id"],
            reference=record["reference"], candidate=record["candidate"],
            label=int(record["label"]), family=record["family"],
            variant=record["variant"], seed=int(record["seed"]),
            split=record.get("split", ""), detail=record.get("detail", ""),
        )


@dataclass(frozen=True)
class SplitSpec:
    ratios: tuple[float, float, float] = (0.60, 0.16, 0.24)
    seed: int = 0

    def __post_init__(self):
        if any(not 0.0 < r < 1.0 for r in self.ratios):
            raise InvalidRatios(f"each ratio must be in (0, 1), got {self.ratios}")
        if abs(sum(self.ratios) - 1.0) > 1e-9:
            raise InvalidRatios(f"ratios must sum to 1, got {self.ratios}")


@dataclass
class GenerationTally:
    applied: Counter = field(default_factory=Counter)
    not_applicable: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)

    def summary(self) -> str:
        return (f"applied={sum(self.applied.values())} "
                f"not_applicable={sum(self.not_applicable.values())} "
                f"failed={sum(self.failed.values())}")


def pair_id_for(task_id: str, family: str, variant: str, seed: int, partner: str = "") -> str:
    key = f"{task_id}|{family}|{variant}|{seed}|{partner}"
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]


def generate(corpus: list[SourceFunction], kinds=ALL_KINDS, seed: int = 0,
             provider=None) -> tuple[list[CodePair], GenerationTally]:
    """Apply every requested transformation to every function.

    Deterministic for a fixed seed: each (function, kind) gets its own
    generator keyed by a stable string.
    """
    if not corpus:
        raise ValueError("corpus is empty")
    pairs: list[CodePair] = []
    tally = GenerationTally()
    for fn in corpus:
        for kind in kinds:
            rng = Random(f"{seed}:{fn.task_id}:{kind}")
            if kind == "DCS":
                for other in select_dissimilar(corpus, fn.task_id, rng):
                    pairs.append(CodePair(
                        pair_id=pair_id_for(fn.task_id, "DCS", "dissimilar", seed, other.task_id),
                        task_id=fn.task_id, reference=fn.source, candidate=other.source,
                        label=0, family="DCS", variant="dissimilar", seed=seed,
                        detail=f"paired with {other.task_id}",
                    ))
                    tally.applied["DCS"] += 1
                continue
            for outcome in _apply(fn, kind, rng, provider):
                if isinstance(outcome, Applied):
                    family = _FAMILY_OF_SP.get(kind, kind)
                    label = 1 if kind in SP_KINDS else 0
                    detail = outcome.detail
                    if outcome.dead_site:
                        detail = f"dead_site=true; {detail}"
                    if kind == "operand-swap" and _same_tokens(fn.source, outcome.candidate):
                        detail = f"degenerate-symmetric; {detail}"
                    pairs.append(CodePair(
                        pair_id=pair_id_for(fn.task_id, family, outcome.variant, seed),
                        task_id=fn.task_id, reference=fn.source, candidate=outcome.candidate,
                        label=label, family=family, variant=outcome.variant,
                        seed=seed, detail=detail,
                    ))
                    tally.applied[kind] += 1
                elif isinstance(outcome, NotApplicable):
                    tally.not_applicable[f"{kind}:{outcome.reason}"] += 1
                else:
                    tally.failed[f"{kind}:{outcome.error}"] += 1
    return pairs, tally


def _same_tokens(reference: str, candidate: str) -> bool:
    from .metrics.tokenizer import tokenize_with_flag

    return tokenize_with_flag(reference)[0] == tokenize_with_flag(candidate)[0]


def _apply(fn: SourceFunction, kind: str, rng: Random, provider):
    """One outcome per SP kind; one outcome per directed variant for SA
    operator misuse (a function with both + and - yields both AOM pairs)."""
    try:
        if kind == "rename-naive":
            return [rename_variable(fn.source, "naive")]
        if kind == "rename-rn":
            return [rename_variable(fn.source, "rn", rng)]
        if kind == "rename-cb":
            return [rename_variable(fn.source, "cb", provider=provider)]
        if kind == "dead-code":
            return [insert_dead_code(fn.source, rng)]
        if kind == "operand-swap":
            return [swap_comparison_operands(fn.source)]
        if kind == "loop":
            return [convert_loop(fn.source)]
        if kind in SA_KINDS:
            return [misuse_operator(fn.source, kind, variant)
                    for variant in DIRECTED_VARIANTS[kind]]
    except Exception as exc:  # a transform bug must not sink the batch
        return [Failed(f"{type(exc).__name__}: {exc}")]
    raise ValueError(f"unknown transform kind {kind!r}")


def split_pairs(pairs: list[CodePair], spec: SplitSpec) -> list[CodePair]:
    """Assign splits by original task_id so no function spans two splits.

    Remainder policy: floor(train), floor(valid), rest to test.
    """
    task_ids = sorted({p.task_id for p in pairs})
    Random(spec.seed).shuffle(task_ids)
    n = len(task_ids)
    n_train = int(n * spec.ratios[0])
    n_valid = int(n * spec.ratios[1])
    assignment: dict[str, str] = {}
    for i, task_id in enumerate(task_ids):
        if i < n_train:
            assignment[task_id] = "train"
        elif i < n_train + n_valid:
            assignment[task_id] = "valid"
        else:
            assignment[task_id] = "test"
    return [replace(p, split=assignment[p.task_id]) for p in pairs]


@dataclass
class DatasetStats:
    per_split: dict[str, dict[str, int]]
    per_variant: dict[str, dict[str, int]]  # "family/variant" -> split -> count

    def cross_foots(self) -> bool:
        for split, row in self.per_split.items():
            sp = sum(counts.get(split, 0) for key, counts in self.per_variant.items()
                     if key.startswith(("RV/", "DCI/", "OS/", "LT/")))
            sa = sum(counts.get(split, 0) for key, counts in self.per_variant.items()
                     if not key.startswith(("RV/", "DCI/", "OS/", "LT/")))
            if sp != row["sp"] or sa != row["sa"] or sp + sa != row["pairs"]:
                return False
        return True

    def to_json(self) -> str:
        return json.dumps({"per_split": self.per_split, "per_variant": self.per_variant},
                          indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        splits = ("train", "valid", "test")
        lines = ["== Split overview =="]
        lines.append(f"{'split':<7} {'pairs':>7} {'functions':>10} {'SP':>7} {'SA':>7}")
        for split in splits:
            row = self.per_split.get(split, {"pairs": 0, "functions": 0, "sp": 0, "sa": 0})
            lines.append(f"{split:<7} {row['pairs']:>7} {row['functions']:>10} "
                         f"{row['sp']:>7} {row['sa']:>7}")
        lines.append("")
        lines.append("== Per-transformation counts ==")
        lines.append(f"{'type':<5} {'family':<7} {'variant':<14} {'test':>6} {'train':>6} {'valid':>6}")
        def sort_key(item):
            key = item[0]
            is_sp = key.startswith(("RV/", "DCI/", "OS/", "LT/"))
            return (is_sp, key)
        for key, counts in sorted(self.per_variant.items(), key=sort_key):
            family, variant = key.split("/", 1)
            kind = "SP" if family in ("RV", "DCI", "OS", "LT") else "SA"
            lines.append(f"{kind:<5} {family:<7} {variant:<14} "
                         f"{counts.get('test', 0):>6} {counts.get('train', 0):>6} {counts.get('valid', 0):>6}")
        return "\n".join(lines) + "\n"


def stats(pairs: list[CodePair]) -> DatasetStats:
    per_split: dict[str, dict[str, int]] = {}
    per_variant: dict[str, dict[str, int]] = {}
    for pair in pairs:
        split = pair.split or "unsplit"
        row = per_split.setdefault(split, {"pairs": 0, "functions": 0, "sp": 0, "sa": 0})
        row["pairs"] += 1
        row["sp" if pair.label == 1 else "sa"] += 1
        variant_row = per_variant.setdefault(f"{pair.family}/{pair.variant}", {})
        variant_row[split] = variant_row.get(split, 0) + 1
    functions: dict[str, set] = {}
    for pair in pairs:
        functions.setdefault(pair.split or "unsplit", set()).add(pair.task_id)
    for split, ids in functions.items():
        per_split[split]["functions"] = len(ids)
    return DatasetStats(per_split, per_variant)


# --- serialization -----------------------------------------------------------


def write_pairs(path: str | Path, pairs: list[CodePair], meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if meta is not None:
            handle.write(json.dumps({"_meta": meta}, sort_keys=True, ensure_ascii=False) + "\n")
        for pair in pairs:
            handle.write(json.dumps(pair.to_record(), sort_keys=True, ensure_ascii=False) + "\n")


def read_pairs(path: str | Path) -> tuple[list[CodePair], dict]:
    meta: dict = {}
    pairs: list[CodePair] = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            if "_meta" in record:
                meta = record["_meta"]
                continue
            pairs.append(CodePair.from_record(record))
    return pairs, meta


# --- execution-based validation ----------------------------------------------


@dataclass(frozen=True)
class ValidationVerdict:
    pair_id: str
    status: str  # pass | fail | error | timeout | skipped
    failed_tests: tuple[int, ...] = ()
    message: str = ""


def validate(pairs: list[CodePair], corpus: list[SourceFunction],
             harness_cmd: list[str] | None, policy: str = "off",
             timeout_s: float = 5.0, workers: int = 4) -> tuple[list[CodePair], list[ValidationVerdict]]:
    """Run candidates against their original assertions via the harness.

    off: unchanged. warn: verdicts attached, nothing dropped. strict: SP
    pairs must pass every test; SA pairs that fail nothing are dropped.
    """
    if policy == "off":
        return pairs, []
    if policy not in ("warn", "strict"):
        raise ValueError(f"unknown validation policy {policy!r}")
    if not harness_cmd:
        raise HarnessUnavailable("no harness command configured")
    tests_by_task = {fn.task_id: list(fn.tests) for fn in corpus}

    def run_one(pair: CodePair) -> ValidationVerdict:
        tests = tests_by_task.get(pair.task_id, [])
        if not tests:
            return ValidationVerdict(pair.pair_id, "skipped", message="no tests")
        request = {"code": pair.candidate, "tests": tests, "timeout_s": timeout_s}
        try:
            proc = subprocess.run(
                harness_cmd, input=json.dumps(request).encode("utf-8"),
                stdout=subprocess.PIPE, stderr=subprocess.PIPE,
                timeout=timeout_s + 10,
            )
        except FileNotFoundError as exc:
            raise HarnessUnavailable(f"cannot spawn harness: {exc}") from exc
        except subprocess.TimeoutExpired:
            return ValidationVerdict(pair.pair_id, "timeout", message="broker timeout")
        if proc.returncode != 0:
            return ValidationVerdict(pair.pair_id, "error",
                                     message=proc.stderr.decode("utf-8", "replace")[:200])
        try:
            verdict = json.loads(proc.stdout.decode("utf-8"))
        except json.JSONDecodeError:
            return ValidationVerdict(pair.pair_id, "error", message="malformed harness output")
        return ValidationVerdict(pair.pair_id, verdict.get("status", "error"),
                                 tuple(verdict.get("failed", [])),
                                 verdict.get("message", ""))

    # probe once up front so an unusable harness fails loudly, not per pair
    try:
        probe = subprocess.run(harness_cmd, input=b"{}", stdout=subprocess.PIPE,
                               stderr=subprocess.PIPE, timeout=30)
    except (FileNotFoundError, NotADirectoryError, PermissionError) as exc:
        raise HarnessUnavailable(f"cannot spawn harness: {exc}") from exc
    except subprocess.TimeoutExpired as exc:
        raise HarnessUnavailable(f"harness probe hung: {exc}") from exc

    with ThreadPoolExecutor(max_workers=workers) as pool:
        verdicts = list(pool.map(run_one, pairs))

    if policy == "warn":
        return pairs, verdicts
    by_id = {v.pair_id: v for v in verdicts}
    kept: list[CodePair] = []
    for pair in pairs:
        verdict = by_id[pair.pair_id]
        if verdict.status == "skipped":
            kept.append(pair)
        elif pair.label == 1:
            if verdict.status == "pass":
                kept.append(pair)
        else:
            equivalent = verdict.status == "pass" and not verdict.failed_tests
            if not equivalent:
                kept.append(pair)
    return kept, verdicts
