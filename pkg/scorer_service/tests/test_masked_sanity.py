"""Masked-LM sanity over a real corpus sample: every pseudo-log-likelihood
response must satisfy the span-alignment invariant and yield finite
priming-effect values. The sample is 20 active-structure core items produced
by the corpus generator's CLI (tests/fixtures/core_sample.jsonl); the sign of
the effect is model-dependent and deliberately not asserted."""

import math


def _context_text(sentences) -> str:
    return " ".join(s["text"] + "." for s in sentences)


def _squash(text: str) -> str:
    return "".join(text.split())


def test_masked_pll_on_core_sample(masked_client, masked_backend, core_sample_items):
    assert len(core_sample_items) == 20
    effects = []
    for item in core_sample_items:
        target_text = item["target"]["text"] + "."
        diffs = []
        for pair in item["prime_pairs"]:
            lps = {}
            for side, context_sentences in (
                ("congruent", pair["congruent"]),
                ("incongruent", pair["incongruent"]),
            ):
                response = masked_client.post(
                    "/v1/score",
                    json={
                        "context": _context_text(context_sentences),
                        "target": target_text,
                        "mode": "masked_pll",
                    },
                )
                assert response.status_code == 200
                payload = response.json()
                rebuilt = masked_backend.tokenizer.convert_tokens_to_string(
                    payload["tokens"]
                )
                assert _squash(rebuilt) == _squash(target_text)
                assert abs(payload["log_prob"] - sum(payload["token_log_probs"])) <= 1e-6
                assert math.isfinite(payload["log_prob"])
                lps[side] = payload["log_prob"]
            diffs.append(lps["congruent"] - lps["incongruent"])
        pe = sum(diffs) / len(diffs)
        assert math.isfinite(pe)
        effects.append(pe)
    mean_pe = sum(effects) / len(effects)
    assert math.isfinite(mean_pe)
    print(f"[PASS] masked pseudo-log-likelihood: 20 targets, finite PE (mean {mean_pe:+.3f})")
