import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from primingkit import ScoreRequest, batch_score, score, train_ngram
from primingkit.scoring import (
    BatchScoreError,
    EOS,
    NGramScorer,
    ScoredSequence,
    UNK,
    UniformScorer,
    UnsupportedModeError,
    tokenize,
)


def test_tokenize_strips_terminal_periods():
    assert tokenize("The beer was purchased. An engine is wrapped.") == [
        "the", "beer", "was", "purchased", EOS, "an", "engine", "is", "wrapped", EOS,
    ]
    assert tokenize("a b") == ["a", "b"]


# ---------------------------------------------------------------------------
# training


def test_train_single_sentence_smoothing():
    # corpus ["a b"]: vocabulary {a, b, EOS, UNK}, count(a -> b) = 1 of 1
    alpha = 0.5
    model = train_ngram(["a b"], order=2, alpha=alpha)
    assert len(model.vocabulary) == 4
    expected = (1 + alpha) / (1 + alpha * 4)
    assert math.exp(model.token_log_prob("b", ("a",))) == pytest.approx(expected, abs=1e-12)


def test_train_deterministic():
    corpus = ["a b c", "a c b", "b a"]
    m1 = train_ngram(corpus, order=3, alpha=0.2)
    m2 = train_ngram(corpus, order=3, alpha=0.2)
    assert m1.vocabulary == m2.vocabulary
    assert m1.counts == m2.counts
    assert m1.context_totals == m2.context_totals


def test_train_rejects_bad_inputs():
    with pytest.raises(ValueError):
        train_ngram([], order=2, alpha=0.1)
    with pytest.raises(ValueError):
        train_ngram(["a"], order=0, alpha=0.1)
    with pytest.raises(ValueError):
        train_ngram(["a"], order=2, alpha=0.0)


# ---------------------------------------------------------------------------
# scoring oracles


def test_bigram_hand_counts():
    # counts: (BOS)->a twice; (a)->b once, (a)->c once; V = {a,b,c,EOS,UNK} = 5
    model = train_ngram(["a b", "a c"], order=2, alpha=1.0)
    result = NGramScorer(model).score(ScoreRequest("", "a b."))
    expected = math.log(3 / 7) + math.log(2 / 7) + math.log(1 / 5)
    assert result.tokens == ("a", "b", EOS)
    assert result.log_prob == pytest.approx(expected, abs=1e-12)


def test_unigram_order_supported():
    model = train_ngram(["a a b"], order=1, alpha=1.0)
    # P(a) = (2+1)/(3+4), P(b) = (1+1)/(3+4)
    result = NGramScorer(model).score(ScoreRequest("", "a b"))
    assert result.log_prob == pytest.approx(math.log(3 / 7) + math.log(2 / 7), abs=1e-12)


def test_unknown_token_maps_to_unk():
    model = train_ngram(["a b"], order=2, alpha=0.5)
    scorer = NGramScorer(model)
    novel = scorer.score(ScoreRequest("", "a z"))
    explicit = scorer.score(ScoreRequest("", f"a {UNK}"))
    assert novel.log_prob == pytest.approx(explicit.log_prob, abs=1e-12)


def test_uniform_scorer_closed_form():
    result = UniformScorer(vocab_size=50).score(ScoreRequest("", "one two three"))
    assert result.log_prob == pytest.approx(3 * math.log(1 / 50), abs=1e-12)


def test_context_conditioning_additivity(fixture_lexicon):
    from primingkit import synthesize_training_corpus

    corpus = synthesize_training_corpus(
        fixture_lexicon, 300, {"ACT": 1, "PASS": 1, "DO": 1, "PO": 1}, seed=4
    )
    scorer = NGramScorer(train_ngram(corpus, order=3, alpha=0.1))
    rng = random.Random(9)
    for _ in range(100):
        context = rng.choice(corpus)
        target = rng.choice(corpus)
        direct = scorer.score(ScoreRequest(context, target)).log_prob
        whole = scorer.score(ScoreRequest("", context + " " + target)).log_prob
        context_only = scorer.score(ScoreRequest("", context)).log_prob
        assert direct == pytest.approx(whole - context_only, abs=1e-9)


def test_normalization_over_random_contexts():
    corpus = ["a b c d", "b c a", "d a b", "c c d a"]
    model = train_ngram(corpus, order=3, alpha=0.3)
    rng = random.Random(1)
    vocab = list(model.vocabulary) + ["<s>"]
    for _ in range(100):
        context = tuple(rng.choice(vocab) for _ in range(2))
        total = sum(model.next_token_distribution(context).values())
        assert total == pytest.approx(1.0, abs=1e-9)


def test_smoothing_pulls_toward_uniform():
    corpus = ["a a a b"]
    low = train_ngram(corpus, order=2, alpha=0.01)
    high = train_ngram(corpus, order=2, alpha=100.0)
    v = len(low.vocabulary)
    p_low = math.exp(low.token_log_prob("a", ("a",)))
    p_high = math.exp(high.token_log_prob("a", ("a",)))
    assert abs(p_high - 1 / v) < abs(p_low - 1 / v)


# ---------------------------------------------------------------------------
# request/response contracts


def test_score_request_validation():
    with pytest.raises(ValueError):
        ScoreRequest("ctx", "")
    with pytest.raises(ValueError):
        ScoreRequest("ctx", "x", mode="nonsense")


def test_unsupported_mode_rejected():
    model = train_ngram(["a b"], order=2, alpha=0.5)
    with pytest.raises(UnsupportedModeError):
        score(ScoreRequest("", "a b", mode="masked_pll"), NGramScorer(model))


def test_scored_sequence_invariants():
    with pytest.raises(ValueError):
        ScoredSequence(tokens=("a",), token_log_probs=(-1.0, -2.0), log_prob=-3.0)
    with pytest.raises(ValueError):
        ScoredSequence(tokens=("a",), token_log_probs=(float("nan"),), log_prob=0.0)
    with pytest.raises(ValueError):
        ScoredSequence(tokens=("a", "b"), token_log_probs=(-1.0, -2.0), log_prob=-3.5)
    ok = ScoredSequence.from_token_log_probs(["a", "b"], [-1.0, -2.0])
    assert ok.log_prob == pytest.approx(-3.0)


# ---------------------------------------------------------------------------
# batch scoring


def _requests(n):
    return [ScoreRequest("", f"tok{i} tok{(i * 7) % n}") for i in range(n)]


def test_batch_empty():
    assert batch_score([], UniformScorer(), max_in_flight=4) == []


def test_batch_positional_alignment():
    scorer = UniformScorer(vocab_size=10)
    requests = _requests(12)
    results = batch_score(requests, scorer, max_in_flight=3)
    permuted = list(reversed(requests))
    permuted_results = batch_score(permuted, scorer, max_in_flight=3)
    assert [r.log_prob for r in permuted_results] == [r.log_prob for r in reversed(results)]


def test_batch_concurrency_determinism(fixture_lexicon):
    from primingkit import synthesize_training_corpus

    corpus = synthesize_training_corpus(
        fixture_lexicon, 200, {"DO": 1, "PO": 1}, seed=11
    )
    scorer = NGramScorer(train_ngram(corpus, order=3, alpha=0.1))
    requests = [ScoreRequest(corpus[i % 50], corpus[(i * 13) % 200]) for i in range(1000)]
    sequential = batch_score(requests, scorer, max_in_flight=1)
    concurrent = batch_score(requests, scorer, max_in_flight=8)
    assert [r.log_prob for r in sequential] == [r.log_prob for r in concurrent]
    assert [r.tokens for r in sequential] == [r.tokens for r in concurrent]


def test_batch_aggregates_errors_with_indices():
    scorer = UniformScorer()
    requests = [
        ScoreRequest("", "fine"),
        ScoreRequest("", "fine", mode="masked_pll"),
        ScoreRequest("", "fine"),
        ScoreRequest("", "also bad", mode="masked_pll"),
    ]
    with pytest.raises(BatchScoreError) as err:
        batch_score(requests, scorer, max_in_flight=2)
    assert [i for i, _ in err.value.failures] == [1, 3]


# ---------------------------------------------------------------------------
# property: target tokens only are scored


@settings(max_examples=25)
@given(st.integers(2, 4), st.floats(0.05, 2.0))
def test_token_count_matches_target(order, alpha):
    model = train_ngram(["a b c", "c b a"], order=order, alpha=alpha)
    result = NGramScorer(model).score(ScoreRequest("a b c.", "c b."))
    assert list(result.tokens) == ["c", "b", EOS]
    assert len(result.token_log_probs) == 3
    assert all(lp < 0 for lp in result.token_log_probs)
