"""Model backends: causal next-token scoring and masked pseudo-log-likelihood.

One loaded model serves one mode. Causal models score the target span
left-to-right conditioned on the concatenated context; masked models score
each target position with that single position masked and the full sequence
(context included) visible. Both return the model's own token pieces for the
target span, so detokenizing them reconstructs the target string up to the
tokenizer's whitespace conventions (reported in the health metadata).
"""

from __future__ import annotations

from dataclasses import dataclass

import torch

MODE_CAUSAL = "causal"
MODE_MASKED_PLL = "masked_pll"

#: Context and target are joined with a single space; every context sentence
#: already carries its terminal period, so the boundary reads ". ".
SEPARATOR = " "


class ModelLoadError(RuntimeError):
    pass


@dataclass(frozen=True)
class ModelHandle:
    model_id: str
    modes: tuple[str, ...]
    tokenizer_id: str
    device: str


@dataclass(frozen=True)
class SpanScore:
    tokens: tuple[str, ...]
    token_log_probs: tuple[float, ...]
    resolved_text: str

    @property
    def log_prob(self) -> float:
        return float(sum(self.token_log_probs))


def _detect_mode(config) -> str:
    names = " ".join(getattr(config, "architectures", None) or [])
    if "ForMaskedLM" in names:
        return MODE_MASKED_PLL
    if "ForCausalLM" in names or "LMHeadModel" in names:
        return MODE_CAUSAL
    raise ModelLoadError(
        f"cannot infer the scoring mode from architectures {names!r}; pass --mode"
    )


class ScorerBackend:
    """A loaded model plus its tokenizer, pinned to one scoring mode."""

    def __init__(self, model_id: str, device: str = "cpu", mode: str = "auto"):
        from transformers import AutoConfig, AutoModelForCausalLM, AutoModelForMaskedLM, AutoTokenizer

        try:
            config = AutoConfig.from_pretrained(model_id)
            resolved = _detect_mode(config) if mode == "auto" else mode
            if resolved == MODE_CAUSAL:
                self.model = AutoModelForCausalLM.from_pretrained(model_id)
            elif resolved == MODE_MASKED_PLL:
                self.model = AutoModelForMaskedLM.from_pretrained(model_id)
            else:
                raise ModelLoadError(f"unknown mode {mode!r}")
            self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        except ModelLoadError:
            raise
        except Exception as exc:  # transformers raises a zoo of types here
            raise ModelLoadError(f"cannot load {model_id!r}: {exc}") from exc
        self.mode = resolved
        self.device = torch.device(device)
        self.model.to(self.device)
        self.model.eval()
        self.handle = ModelHandle(
            model_id=model_id,
            modes=(resolved,),
            tokenizer_id=type(self.tokenizer).__name__,
            device=str(self.device),
        )
        if resolved == MODE_MASKED_PLL and self.tokenizer.mask_token_id is None:
            raise ModelLoadError(f"{model_id!r} has no mask token; cannot serve masked_pll")

    # -- shared encoding

    def _encode(self, context: str, target: str) -> tuple[list[int], list[int], str]:
        """Context ids and target-span ids under the concatenation rule.

        The target is tokenized with its separating space attached, so its
        first token is conditioned on the full context including the period.
        """
        context = context.strip()
        if context:
            resolved = context + SEPARATOR + target
            context_ids = self.tokenizer.encode(context, add_special_tokens=False)
            target_ids = self.tokenizer.encode(SEPARATOR + target, add_special_tokens=False)
        else:
            resolved = target
            context_ids = []
            target_ids = self.tokenizer.encode(target, add_special_tokens=False)
        if not target_ids:
            raise ValueError("target tokenizes to an empty sequence")
        return context_ids, target_ids, resolved

    def whitespace_convention(self) -> str:
        return (
            "context and target are joined with '. '; the target span is "
            "tokenized with a leading space when a context is present"
        )

    # -- causal

    def _score_causal(self, context: str, target: str) -> SpanScore:
        context_ids, target_ids, resolved = self._encode(context, target)
        bos = self.tokenizer.bos_token_id
        prefix = [bos] if bos is not None else []
        ids = prefix + context_ids + target_ids
        if len(ids) < 2:
            raise ValueError("sequence too short to score")
        input_ids = torch.tensor([ids], device=self.device)
        with torch.no_grad():
            logits = self.model(input_ids).logits[0]
        log_probs = torch.log_softmax(logits.float(), dim=-1)
        start = len(prefix) + len(context_ids)
        lps = []
        for pos in range(start, len(ids)):
            if pos == 0:
                raise ValueError(
                    "cannot score the first token of a model without a BOS token"
                )
            lps.append(float(log_probs[pos - 1, ids[pos]]))
        tokens = tuple(self.tokenizer.convert_ids_to_tokens(target_ids))
        return SpanScore(tokens=tokens, token_log_probs=tuple(lps), resolved_text=resolved)

    # -- masked pseudo-log-likelihood

    def _score_masked(self, context: str, target: str) -> SpanScore:
        context_ids, target_ids, resolved = self._encode(context, target)
        tokenizer = self.tokenizer
        cls_id = tokenizer.cls_token_id
        sep_id = tokenizer.sep_token_id
        prefix = [cls_id] if cls_id is not None else []
        suffix = [sep_id] if sep_id is not None else []
        ids = prefix + context_ids + target_ids + suffix
        start = len(prefix) + len(context_ids)
        positions = list(range(start, start + len(target_ids)))
        base = torch.tensor([ids], device=self.device)
        # one masked copy per target position; context stays visible
        batch = base.repeat(len(positions), 1)
        for row, pos in enumerate(positions):
            batch[row, pos] = tokenizer.mask_token_id
        with torch.no_grad():
            logits = self.model(batch).logits
        log_probs = torch.log_softmax(logits.float(), dim=-1)
        lps = [
            float(log_probs[row, pos, ids[pos]])
            for row, pos in enumerate(positions)
        ]
        tokens = tuple(tokenizer.convert_ids_to_tokens(target_ids))
        return SpanScore(tokens=tokens, token_log_probs=tuple(lps), resolved_text=resolved)

    def score(self, context: str, target: str, mode: str) -> SpanScore:
        if mode not in self.handle.modes:
            raise UnsupportedMode(f"model {self.handle.model_id!r} serves {self.handle.modes}")
        if mode == MODE_CAUSAL:
            return self._score_causal(context, target)
        return self._score_masked(context, target)


class UnsupportedMode(ValueError):
    pass
