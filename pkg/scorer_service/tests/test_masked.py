import math


def _squash(text: str) -> str:
    return "".join(text.split())


def test_masked_span_alignment(masked_backend):
    context = "The nurse purchased the beer."
    target = "The colonel followed the guest."
    span = masked_backend.score(context, target, "masked_pll")
    rebuilt = masked_backend.tokenizer.convert_tokens_to_string(list(span.tokens))
    assert _squash(rebuilt) == _squash(target)
    assert all(math.isfinite(lp) and lp <= 0 for lp in span.token_log_probs)


def test_masked_scores_every_target_token_once(masked_backend):
    target = "The colonel followed the guest."
    span = masked_backend.score("", target, "masked_pll")
    encoded = masked_backend.tokenizer.encode(target, add_special_tokens=False)
    assert len(span.token_log_probs) == len(encoded)


def test_masked_sees_bidirectional_context(masked_backend):
    # changing a later word moves the pseudo-log-likelihood of earlier ones
    a = masked_backend.score("", "The colonel followed the guest.", "masked_pll")
    b = masked_backend.score("", "The colonel followed the nurse.", "masked_pll")
    assert a.token_log_probs[0] != b.token_log_probs[0]


def test_masked_context_is_visible_but_unscored(masked_backend):
    target = "The guest"
    with_ctx = masked_backend.score("The nurse purchased the beer.", target, "masked_pll")
    without = masked_backend.score("", target, "masked_pll")
    assert len(with_ctx.tokens) == len(without.tokens)
    assert with_ctx.log_prob != without.log_prob
