"""LLM-as-judge scoring: prompt construction, YES/NO token-probability
extraction, and a provider-agnostic completion transport with hermetic mocks.

The judge never samples continuations for the score; only the probability
mass on the first generated token's YES/NO variants matters.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .metrics.overlap import ngram_counts
from .metrics.tokenizer import tokenize_with_flag

ZERO_SHOT_TEMPLATE = (
    'You are a helpful and honest code assistant expert in Python. '
    'Is there a functional equivalence between the Code1 and Code2? '
    'Please respond either "YES" or "NO".\n'
    "\n"
    "### Code1:\n"
    "{code_1}\n"
    "\n"
    "### Code2:\n"
    "{code_2}\n"
    "\n"
    "### Response:\n"
)

COT_CUE = "Let's think step by step."

MODES = ("zero-shot", "few-shot", "cot")

# Default two-shot demonstrations: one equivalent pair (a counted loop and its
# while form) and one broken pair (a sign flip in a recursive call).
_DEMO_SP = (
    "total = 0\nfor i in range(n):\n    total += i",
    "total = 0\ni = 0\nwhile i < n:\n    total += i\n    i += 1",
    "YES",
)
_DEMO_SA = (
    "def binomial_coefficient(n, k):\n    if k > n:\n        return 0\n"
    "    if k == 0 or k == n:\n        return 1\n"
    "    return binomial_coefficient(n - 1, k - 1) + binomial_coefficient(n - 1, k)",
    "def binomial_coefficient(n, k):\n    if k > n:\n        return 0\n"
    "    if k == 0 or k == n:\n        return 1\n"
    "    return binomial_coefficient(n + 1, k - 1) + binomial_coefficient(n - 1, k)",
    "NO",
)


class MissingDemonstrations(ValueError):
    pass


class AbstainError(RuntimeError):
    """Neither YES nor NO received any probability mass."""


class TransportError(RuntimeError):
    pass


@dataclass(frozen=True)
class PromptSpec:
    mode: str = "zero-shot"
    demonstrations: tuple[tuple[str, str, str], ...] = (_DEMO_SP, _DEMO_SA)
    template: str = ZERO_SHOT_TEMPLATE

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class ProviderConfig:
    provider_url: str = "mock:echo-label"
    model: str = ""
    max_new_tokens: int = 3
    top_p: float = 0.9
    temperature: float = 0.2
    top_k: int = 5
    num_return_sequences: int = 3
    do_sample: bool = True
    auth_token_env: str = "PAIRFORGE_AUTH_TOKEN"
    timeout_s: float = 30.0
    max_retries: int = 3
    retry_backoff_s: float = 0.5

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError("timeout must be positive")

    @property
    def scorer_name(self) -> str:
        label = self.model or self.provider_url
        return label


@dataclass(frozen=True)
class JudgeVerdict:
    pair_id: str
    p_yes: float
    p_no: float
    score: float
    raw: str = ""
    mode: str = "zero-shot"


def build_prompt(reference: str, candidate: str, spec: PromptSpec) -> str:
    """Fill the fixed template; cot inserts its cue before the response
    marker; few-shot prepends the worked demonstrations."""
    body = spec.template.format(code_1=reference.rstrip("\n"), code_2=candidate.rstrip("\n"))
    if spec.mode == "zero-shot":
        return body
    if spec.mode == "cot":
        marker = "### Response:\n"
        return body.replace(marker, f"{COT_CUE}\n\n{marker}")
    demos = spec.demonstrations
    if len(demos) < 2 or {d[2].strip().upper() for d in demos} != {"YES", "NO"}:
        raise MissingDemonstrations(
            "few-shot needs at least two demonstrations covering YES and NO")
    instruction, _, rest = spec.template.partition("\n\n")
    blocks = [instruction]
    for code_1, code_2, answer in demos:
        blocks.append(f"### Code1:\n{code_1.rstrip()}\n\n### Code2:\n"
                      f"{code_2.rstrip()}\n\n### Response:\n{answer}")
    query = rest.format(code_1=reference.rstrip("\n"), code_2=candidate.rstrip("\n"))
    blocks.append(query.rstrip("\n") + "\n")
    return "\n\n".join(blocks)


def extract_score(distribution: dict[str, float]) -> tuple[float, float, float]:
    """(p_yes, p_no, score) from a first-token distribution; case and
    leading-space variants fold together."""
    p_yes = p_no = 0.0
    for token, prob in distribution.items():
        if prob < 0:
            raise ValueError(f"negative probability for {token!r}")
        folded = token.strip().casefold()
        if folded == "yes":
            p_yes += prob
        elif folded == "no":
            p_no += prob
    if p_yes + p_no == 0.0:
        raise AbstainError("no probability mass on YES/NO")
    return p_yes, p_no, p_yes / (p_yes + p_no)


# --- transports --------------------------------------------------------------


class MockEchoLabel:
    """YES probability equals the pair label: a perfect oracle judge."""

    def complete(self, prompt: str, pair) -> dict[str, float]:
        label = float(pair.label)
        return {"YES": label, "NO": 1.0 - label}


class MockTokenOverlap:
    """YES probability is the clipped unigram overlap of the two codes."""

    def complete(self, prompt: str, pair) -> dict[str, float]:
        ref, _ = tokenize_with_flag(pair.reference)
        cand, _ = tokenize_with_flag(pair.candidate)
        if not ref or not cand:
            overlap = 0.0
        else:
            ref_c, cand_c = ngram_counts(ref, 1), ngram_counts(cand, 1)
            hits = sum(min(c, ref_c[g]) for g, c in cand_c.items() if g in ref_c)
            overlap = hits / max(len(ref), len(cand))
        return {"YES": overlap, "NO": 1.0 - overlap}


class HttpTransport:
    """JSON-over-HTTP completion client reading first-token top-logprobs."""

    def __init__(self, config: ProviderConfig):
        self.config = config

    def complete(self, prompt: str, pair=None) -> dict[str, float]:
        import os

        import requests

        payload = {
            "model": self.config.model,
            "prompt": prompt,
            "max_tokens": self.config.max_new_tokens,
            "temperature": self.config.temperature,
            "top_p": self.config.top_p,
            "top_k": self.config.top_k,
            "logprobs": True,
            "top_logprobs": 20,
        }
        headers = {"Content-Type": "application/json"}
        token = os.environ.get(self.config.auth_token_env, "")
        if token:
            headers["Authorization"] = f"Bearer {token}"
        last_error: Exception | None = None
        for attempt in range(self.config.max_retries):
            try:
                response = requests.post(self.config.provider_url, json=payload,
                                         headers=headers, timeout=self.config.timeout_s)
                response.raise_for_status()
                return _first_token_distribution(response.json())
            except (requests.RequestException, ValueError, KeyError) as exc:
                last_error = exc
                if attempt + 1 < self.config.max_retries:
                    time.sleep(self.config.retry_backoff_s * (2 ** attempt))
        raise TransportError(f"provider unreachable after "
                             f"{self.config.max_retries} attempts: {last_error}")


def _first_token_distribution(doc: dict) -> dict[str, float]:
    choice = doc["choices"][0]
    logprobs = choice.get("logprobs") or {}
    if "top_logprobs" in logprobs and logprobs["top_logprobs"]:
        first = logprobs["top_logprobs"][0]
        return {tok: math.exp(lp) for tok, lp in first.items()}
    content = logprobs.get("content") or []
    if content:
        first = content[0].get("top_logprobs", [])
        return {e["token"]: math.exp(e["logprob"]) for e in first}
    raise ValueError("response carries no top-logprobs")


def make_transport(config: ProviderConfig):
    url = config.provider_url
    if url.startswith("mock:"):
        name = url[len("mock:"):]
        if name == "echo-label":
            return MockEchoLabel()
        if name == "token-overlap":
            return MockTokenOverlap()
        raise ValueError(f"unknown mock provider {name!r}")
    return HttpTransport(config)


# --- pair judging ------------------------------------------------------------


def judge_pair(pair, spec: PromptSpec, config: ProviderConfig, transport=None) -> JudgeVerdict:
    if transport is None:
        transport = make_transport(config)
    prompt = build_prompt(pair.reference, pair.candidate, spec)
    distribution = transport.complete(prompt, pair)
    try:
        p_yes, p_no, score = extract_score(distribution)
    except AbstainError as exc:
        raise AbstainError(f"pair {pair.pair_id}: {exc}") from exc
    raw = max(distribution, key=distribution.get) if distribution else ""
    return JudgeVerdict(pair_id=pair.pair_id, p_yes=p_yes, p_no=p_no,
                        score=score, raw=raw, mode=spec.mode)


def judge_pairs(pairs, spec: PromptSpec, config: ProviderConfig, transport=None,
                max_inflight: int = 1) -> dict[str, JudgeVerdict]:
    """Judge a batch; verdicts are keyed by pair_id so the in-flight fan-out
    never affects the result."""
    if transport is None:
        transport = make_transport(config)
    if max_inflight <= 1:
        return {pair.pair_id: judge_pair(pair, spec, config, transport) for pair in pairs}
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=max_inflight) as pool:
        futures = {pair.pair_id: pool.submit(judge_pair, pair, spec, config, transport)
                   for pair in pairs}
        return {pair_id: future.result() for pair_id, future in futures.items()}
