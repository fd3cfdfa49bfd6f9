"""Sentence scorers: token-level conditional log-probabilities.

Three scorer implementations share one contract: given a (context, target)
request they return the target's tokens with their natural-log conditional
probabilities.  Context tokens are conditioned on but never scored.

* :class:`NGramScorer` -- deterministic additive-smoothing n-gram model,
  the offline reference scorer.
* :class:`UniformScorer` -- every token costs ``-log(V)``; useful for metric
  identity checks.
* :class:`RemoteScorer` -- HTTP client for the neural scorer service
  (``POST /v1/score``, ``POST /v1/score_batch``, ``GET /v1/health``).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"

MODE_CAUSAL = "causal"
MODE_MASKED_PLL = "masked_pll"

SUM_TOLERANCE = 1e-9
REMOTE_SUM_TOLERANCE = 1e-6


class ScoringError(RuntimeError):
    pass


class UnsupportedModeError(ScoringError):
    pass


class RemoteScorerError(ScoringError):
    """Transport failure or a response violating the scorer contract."""


class BatchScoreError(ScoringError):
    def __init__(self, failures: list[tuple[int, Exception]]):
        self.failures = failures
        detail = "; ".join(f"[{i}] {exc}" for i, exc in failures[:5])
        more = "" if len(failures) <= 5 else f" (+{len(failures) - 5} more)"
        super().__init__(f"{len(failures)} request(s) failed: {detail}{more}")


@dataclass(frozen=True)
class ScoreRequest:
    context: str
    target: str
    mode: str = MODE_CAUSAL

    def __post_init__(self) -> None:
        if not self.target:
            raise ValueError("target must be non-empty")
        if self.mode not in (MODE_CAUSAL, MODE_MASKED_PLL):
            raise ValueError(f"unknown scoring mode {self.mode!r}")


@dataclass(frozen=True)
class ScoredSequence:
    tokens: tuple[str, ...]
    token_log_probs: tuple[float, ...]
    log_prob: float

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.token_log_probs):
            raise ValueError("tokens and token_log_probs must align")
        if any(not math.isfinite(lp) for lp in self.token_log_probs):
            raise ValueError("token log probabilities must be finite")
        if abs(self.log_prob - sum(self.token_log_probs)) > SUM_TOLERANCE:
            raise ValueError("log_prob must equal the sum of token log probabilities")

    @classmethod
    def from_token_log_probs(cls, tokens, token_log_probs) -> "ScoredSequence":
        lps = tuple(float(x) for x in token_log_probs)
        return cls(tokens=tuple(tokens), token_log_probs=lps, log_prob=sum(lps))


def tokenize(text: str) -> list[str]:
    """Reference tokenizer: lowercase, whitespace split, terminal period -> EOS."""
    tokens: list[str] = []
    for raw in text.lower().split():
        if raw.endswith("."):
            word = raw[:-1]
            if word:
                tokens.append(word)
            tokens.append(EOS)
        else:
            tokens.append(raw)
    return tokens


# ---------------------------------------------------------------------------
# N-gram scorer


@dataclass
class NGramScorerModel:
    """Additive-smoothing n-gram counts over the reference tokenization.

    The predictable vocabulary excludes BOS (which is only ever conditioned
    on), so every next-token distribution sums to one exactly.
    """

    order: int
    alpha: float
    vocabulary: tuple[str, ...]
    counts: dict[tuple[str, ...], dict[str, int]] = field(default_factory=dict)
    context_totals: dict[tuple[str, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._vocab_set = frozenset(self.vocabulary)

    def normalize_token(self, token: str) -> str:
        return token if token in self._vocab_set or token == BOS else UNK

    def token_log_prob(self, token: str, context: tuple[str, ...]) -> float:
        token = self.normalize_token(token)
        width = self.order - 1
        window = context[-width:] if width > 0 else ()
        context = tuple(self.normalize_token(t) for t in window)
        count = self.counts.get(context, {}).get(token, 0)
        total = self.context_totals.get(context, 0)
        v = len(self.vocabulary)
        return math.log((count + self.alpha) / (total + self.alpha * v))

    def next_token_distribution(self, context: tuple[str, ...]) -> dict[str, float]:
        return {tok: math.exp(self.token_log_prob(tok, context)) for tok in self.vocabulary}


def train_ngram(corpus: list[str], order: int, alpha: float) -> NGramScorerModel:
    """Count n-grams over the corpus; every string is one padded sequence."""
    if not corpus:
        raise ValueError("training corpus must be non-empty")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if alpha <= 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    vocab: set[str] = {EOS, UNK}
    sequences: list[list[str]] = []
    for text in corpus:
        tokens = tokenize(text)
        vocab.update(tokens)
        sequences.append(tokens)
    model = NGramScorerModel(order=order, alpha=alpha, vocabulary=tuple(sorted(vocab)))
    for tokens in sequences:
        padded = [BOS] * (order - 1) + tokens
        for i in range(order - 1, len(padded)):
            context = tuple(padded[i - order + 1 : i])
            token = padded[i]
            bucket = model.counts.setdefault(context, {})
            bucket[token] = bucket.get(token, 0) + 1
            model.context_totals[context] = model.context_totals.get(context, 0) + 1
    return model


class NGramScorer:
    """Causal scorer over an :class:`NGramScorerModel` (left-to-right only)."""

    modes = (MODE_CAUSAL,)

    def __init__(self, model: NGramScorerModel):
        self.model = model

    @property
    def identity(self) -> dict:
        return {
            "kind": "ngram",
            "order": self.model.order,
            "alpha": self.model.alpha,
            "vocabulary_size": len(self.model.vocabulary),
        }

    def score(self, request: ScoreRequest) -> ScoredSequence:
        if request.mode != MODE_CAUSAL:
            raise UnsupportedModeError("the n-gram scorer supports causal mode only")
        model = self.model
        context_tokens = tokenize(request.context) if request.context else []
        target_tokens = tokenize(request.target)
        sequence = [BOS] * (model.order - 1) + context_tokens + target_tokens
        start = (model.order - 1) + len(context_tokens)
        log_probs = []
        for i in range(start, len(sequence)):
            context = tuple(sequence[i - model.order + 1 : i])
            log_probs.append(model.token_log_prob(sequence[i], context))
        return ScoredSequence.from_token_log_probs(target_tokens, log_probs)


class UniformScorer:
    """Every token scored at probability 1/V regardless of context."""

    modes = (MODE_CAUSAL,)

    def __init__(self, vocab_size: int = 50):
        if vocab_size < 1:
            raise ValueError("vocab_size must be positive")
        self.vocab_size = vocab_size

    @property
    def identity(self) -> dict:
        return {"kind": "uniform", "vocab_size": self.vocab_size}

    def score(self, request: ScoreRequest) -> ScoredSequence:
        if request.mode != MODE_CAUSAL:
            raise UnsupportedModeError("the uniform scorer supports causal mode only")
        tokens = tokenize(request.target)
        lp = -math.log(self.vocab_size)
        return ScoredSequence.from_token_log_probs(tokens, [lp] * len(tokens))


# ---------------------------------------------------------------------------
# Remote client


def _validate_remote_payload(payload: dict) -> ScoredSequence:
    """Reject any response violating the scored-sequence contract."""
    try:
        tokens = payload["tokens"]
        lps = payload["token_log_probs"]
        total = payload["log_prob"]
    except (KeyError, TypeError) as exc:
        raise RemoteScorerError(f"malformed scorer response: missing {exc}") from None
    if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
        raise RemoteScorerError("scorer response tokens must be a list of strings")
    if not isinstance(lps, list) or len(lps) != len(tokens):
        raise RemoteScorerError("scorer response token_log_probs must align with tokens")
    values = []
    for lp in lps:
        if not isinstance(lp, (int, float)) or not math.isfinite(lp) or lp > 0.0:
            raise RemoteScorerError(f"invalid token log probability {lp!r}")
        values.append(float(lp))
    if not isinstance(total, (int, float)) or not math.isfinite(total):
        raise RemoteScorerError(f"invalid log_prob {total!r}")
    # The service's own sum is cross-checked; the client-side sum is kept.
    if abs(sum(values) - float(total)) > REMOTE_SUM_TOLERANCE:
        raise RemoteScorerError(
            f"service sum {total} disagrees with token sum {sum(values)}"
        )
    return ScoredSequence.from_token_log_probs(tokens, values)


class RemoteScorer:
    """Client for the HTTP scorer service.

    Requests are idempotent, so transport errors are retried with backoff;
    responses failing the contract are rejected, never repaired.
    """

    def __init__(self, base_url: str, timeout: float = 60.0, max_retries: int = 3,
                 session=None):
        import requests

        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.max_retries = max_retries
        self._session = session if session is not None else requests.Session()
        self._requests = requests
        self._health: dict | None = None

    def _request(self, method: str, path: str, json_body=None) -> dict:
        url = f"{self.base_url}{path}"
        last_error: Exception | None = None
        for attempt in range(self.max_retries):
            try:
                response = self._session.request(
                    method, url, json=json_body, timeout=self.timeout
                )
            except self._requests.RequestException as exc:
                last_error = exc
                time.sleep(min(0.25 * 2**attempt, 2.0))
                continue
            if response.status_code != 200:
                raise RemoteScorerError(
                    f"{method} {url} -> HTTP {response.status_code}: {response.text[:200]}"
                )
            try:
                return response.json()
            except ValueError as exc:
                raise RemoteScorerError(f"{url} returned non-JSON body") from exc
        raise RemoteScorerError(f"{method} {url} failed after {self.max_retries} attempts: {last_error}")

    def health(self) -> dict:
        payload = self._request("GET", "/v1/health")
        if "model_id" not in payload or "modes" not in payload:
            raise RemoteScorerError("health response must carry model_id and modes")
        self._health = payload
        return payload

    @property
    def modes(self) -> tuple[str, ...]:
        if self._health is None:
            self.health()
        return tuple(self._health["modes"])

    @property
    def identity(self) -> dict:
        if self._health is None:
            self.health()
        return {"kind": "remote", "model_id": self._health["model_id"]}

    def score(self, request: ScoreRequest) -> ScoredSequence:
        payload = self._request(
            "POST",
            "/v1/score",
            {"context": request.context, "target": request.target, "mode": request.mode},
        )
        return _validate_remote_payload(payload)

    def score_batch(self, requests_: list[ScoreRequest]) -> list[ScoredSequence]:
        payload = self._request(
            "POST",
            "/v1/score_batch",
            {
                "items": [
                    {"context": r.context, "target": r.target, "mode": r.mode}
                    for r in requests_
                ]
            },
        )
        items = payload.get("items")
        if not isinstance(items, list) or len(items) != len(requests_):
            raise RemoteScorerError("score_batch response must align with the request list")
        return [_validate_remote_payload(item) for item in items]


# ---------------------------------------------------------------------------
# Generic entry points


def score(request: ScoreRequest, scorer) -> ScoredSequence:
    """Score one request with any scorer honoring the shared contract."""
    if request.mode not in getattr(scorer, "modes", (MODE_CAUSAL,)):
        raise UnsupportedModeError(
            f"scorer {scorer!r} does not support mode {request.mode!r}"
        )
    return scorer.score(request)


def batch_score(requests_: list[ScoreRequest], scorer,
                max_in_flight: int = 1) -> list[ScoredSequence]:
    """Score many requests; results are positionally aligned with the input
    and identical to a sequential map regardless of max_in_flight."""
    if max_in_flight < 1:
        raise ValueError("max_in_flight must be positive")
    if not requests_:
        return []
    if max_in_flight == 1:
        results: list[ScoredSequence | None] = []
        failures: list[tuple[int, Exception]] = []
        for i, request in enumerate(requests_):
            try:
                results.append(score(request, scorer))
            except Exception as exc:  # noqa: BLE001 - aggregated and re-raised
                failures.append((i, exc))
                results.append(None)
        if failures:
            raise BatchScoreError(failures)
        return results  # type: ignore[return-value]

    results = [None] * len(requests_)
    failures = []
    with ThreadPoolExecutor(max_workers=max_in_flight) as pool:
        futures = {pool.submit(score, request, scorer): i for i, request in enumerate(requests_)}
        for future, i in futures.items():
            try:
                results[i] = future.result()
            except Exception as exc:  # noqa: BLE001
                failures.append((i, exc))
    if failures:
        raise BatchScoreError(sorted(failures, key=lambda f: f[0]))
    return results  # type: ignore[return-value]
