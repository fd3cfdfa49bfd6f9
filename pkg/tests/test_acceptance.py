"""Acceptance suite: every release criterion, at its stated tolerance.

Each test prints one [PASS] line on success (run with ``pytest -s`` to see
them); a failing assertion is the corresponding [FAIL].
"""

import json
import random
import time

import pytest

from primingkit import (
    ConditionSpec,
    PairedScore,
    ScoreRequest,
    aggregate,
    build_corpus,
    classify_behavior,
    cochran_sample_size,
    synthesize_training_corpus,
    train_ngram,
    validate_items,
)
from primingkit.cli import main, sample_size_note
from primingkit.generator import (
    RECENCY_CONTEXT_LENGTH,
    build_structure,
    default_condition_matrix,
    resolve_similarity_threshold,
)
from primingkit.metrics import group_paired_scores, mean_ci, priming_effect
from primingkit.scoring import NGramScorer, UniformScorer, batch_score
from primingkit.sentences import Construction, join_context, sentence_with_period


def _ok(message: str) -> None:
    print(f"[PASS] {message}")


def _score_corpus(items, scorer):
    rows = []
    for item in items:
        target_text = sentence_with_period(item.target)
        requests = []
        for pair in item.prime_pairs:
            requests.append(ScoreRequest(join_context(pair.congruent), target_text))
            requests.append(ScoreRequest(join_context(pair.incongruent), target_text))
        results = batch_score(requests, scorer)
        for j in range(len(item.prime_pairs)):
            rows.append(
                PairedScore(item.item_id, j, results[2 * j].log_prob,
                            results[2 * j + 1].log_prob)
            )
    return rows


# ---------------------------------------------------------------------------
# Criterion: metric identities (uniform scorer, antisymmetry, shift invariance)


def test_uniform_scorer_zero_priming_effect(data_lexicon):
    started = time.monotonic()
    cond = ConditionSpec(name="core", targets_per_structure=100,
                         primes_per_target=10, seed=101)
    corpus = build_corpus(cond, data_lexicon)
    scorer = UniformScorer(vocab_size=50)
    for structure, items in corpus.items():
        rows = _score_corpus(items, scorer)
        targets = group_paired_scores(rows)
        assert len(targets) == 100
        for target in targets:
            assert abs(target.pe) <= 1e-12
        mean = sum(t.pe for t in targets) / len(targets)
        assert abs(mean) <= 1e-12
    elapsed = time.monotonic() - started
    assert elapsed < 10.0, f"uniform-scorer identity took {elapsed:.1f}s"
    _ok(f"uniform scorer: mean PE = 0 within 1e-12 on 100 targets x 4 structures "
        f"({elapsed:.1f}s < 10s)")


def test_antisymmetry_exact():
    rng = random.Random(7)
    for _ in range(500):
        rows = [
            PairedScore("t", i, -rng.uniform(1, 60), -rng.uniform(1, 60))
            for i in range(rng.randint(1, 10))
        ]
        swapped = [
            PairedScore("t", r.prime_pair_index, r.lp_incongruent, r.lp_congruent)
            for r in rows
        ]
        pe = priming_effect(rows).pe
        pe_swapped = priming_effect(swapped).pe
        assert abs(pe_swapped + pe) <= 1e-12 * max(1.0, abs(pe))
    _ok("antisymmetry: swapping score roles negates every per-target PE (<= 1e-12 relative)")


def test_shift_invariance():
    rng = random.Random(11)
    for _ in range(500):
        rows = [
            PairedScore("t", i, -rng.uniform(1, 60), -rng.uniform(1, 60))
            for i in range(rng.randint(1, 10))
        ]
        offset = rng.uniform(-30, 30)
        shifted = [
            PairedScore("t", r.prime_pair_index, r.lp_congruent + offset,
                        r.lp_incongruent + offset)
            for r in rows
        ]
        base = priming_effect(rows).pe
        moved = priming_effect(shifted).pe
        assert abs(moved - base) <= 1e-9 * max(1.0, abs(base))
    _ok("shift invariance: constant offsets to both conditionals leave PE unchanged")


# ---------------------------------------------------------------------------
# Criterion: corpus constraint suite


def test_full_core_corpus_validates_clean(data_lexicon):
    started = time.monotonic()
    cond = ConditionSpec(name="core", targets_per_structure=1500,
                         primes_per_target=10, seed=42)
    corpus = build_corpus(cond, data_lexicon)
    total_pairs = 0
    for structure, items in corpus.items():
        assert len(items) == 1500
        total_pairs += sum(len(item.prime_pairs) for item in items)
        violations = validate_items(items, cond, data_lexicon)
        assert violations == [], violations[:5]
    assert total_pairs == 60_000
    elapsed = time.monotonic() - started
    assert elapsed < 300.0, f"core corpus suite took {elapsed:.1f}s"
    _ok(f"core corpus: 60,000 pairs generated and validated with 0 violations "
        f"({elapsed:.1f}s < 300s)")


def test_condition_variants_validate_clean(data_lexicon):
    threshold = resolve_similarity_threshold(data_lexicon, seed=202)
    conditions = [
        c for c in default_condition_matrix(seed=202, targets_per_structure=5,
                                            primes_per_target=10)
        if c.name != "core"
    ]
    for cond in conditions:
        if cond.name.startswith("sem_sim"):
            cond = ConditionSpec(**{**cond.__dict__, "similarity_threshold": threshold})
        corpus = build_corpus(cond, data_lexicon)
        for structure, items in corpus.items():
            resolved = items[0].condition
            violations = validate_items(items, resolved, data_lexicon)
            assert violations == [], (cond.condition_id, structure, violations[:5])
            for item in items:
                for pair in item.prime_pairs:
                    if cond.name == "recency":
                        assert len(pair.congruent) == RECENCY_CONTEXT_LENGTH
                        assert len(pair.incongruent) == 1
                    elif cond.name == "cumulative":
                        assert len(pair.congruent) == cond.k
                        assert len(pair.incongruent) == 1
                if cond.name == "identical":
                    assert item.prime_pairs[0].congruent[0].text == item.target.text
                if cond.name == "complexity":
                    complex_target = [
                        np for np in item.target.spec.role_nps().values() if np.is_complex
                    ]
                    assert len(complex_target) == (1 if cond.mode in ("target", "both") else 0)
        _ok(f"condition {cond.condition_id}: 50-pair scale, 0 violations")


# ---------------------------------------------------------------------------
# Criterion: n-gram priming oracle (biased behavior by construction)


def test_skewed_trigram_shows_biased_priming(fixture_lexicon):
    train_lines = synthesize_training_corpus(
        fixture_lexicon, 3000, {"DO": 0.9, "PO": 0.1}, seed=55
    )
    scorer = NGramScorer(train_ngram(train_lines, order=3, alpha=0.1))
    cond = ConditionSpec(name="core", targets_per_structure=200,
                         primes_per_target=10, seed=56)
    summaries = {}
    for structure in (Construction.DO, Construction.PO):
        items = build_structure(cond, fixture_lexicon, structure)
        targets = group_paired_scores(_score_corpus(items, scorer))
        mean, ci = mean_ci([t.pe for t in targets])
        summaries[structure.value] = (mean, ci)
    do_mean, _ = summaries["DO"]
    po_mean, _ = summaries["PO"]
    assert do_mean > 0.0, f"DO mean PE {do_mean} not positive"
    assert po_mean < 0.0, f"PO mean PE {po_mean} not negative"
    label = classify_behavior(summaries["DO"], summaries["PO"])
    assert label == "biased"
    _ok(f"skewed trigram oracle: DO mean PE {do_mean:+.3f} > 0, "
        f"PO mean PE {po_mean:+.3f} < 0, classified biased")


# ---------------------------------------------------------------------------
# Criterion: additivity oracle


def test_additivity_over_1000_random_pairs(fixture_lexicon):
    lines = synthesize_training_corpus(
        fixture_lexicon, 400, {"ACT": 1, "PASS": 1, "DO": 1, "PO": 1}, seed=77
    )
    scorer = NGramScorer(train_ngram(lines, order=3, alpha=0.1))
    rng = random.Random(78)
    worst = 0.0
    for _ in range(1000):
        context = rng.choice(lines)
        target = rng.choice(lines)
        direct = scorer.score(ScoreRequest(context, target)).log_prob
        whole = scorer.score(ScoreRequest("", context + " " + target)).log_prob
        prefix = scorer.score(ScoreRequest("", context)).log_prob
        worst = max(worst, abs(direct - (whole - prefix)))
    assert worst <= 1e-9
    _ok(f"additivity: 1000 random (context, target) pairs within 1e-9 (worst {worst:.2e})")


# ---------------------------------------------------------------------------
# Criterion: sample-size utility and its report note


def test_sample_size_value_and_report_note(capsys):
    assert cochran_sample_size(2.576, 0.01, 0.5) == 16_589
    note = sample_size_note()
    assert note["formula"]["pairs"] == 16_589
    assert note["default_corpus_pairs_per_structure"] == 15_000
    assert "15000" in note["note"] or "15,000" in note["note"]
    _ok("sample size: formula yields 16,589; report carries the 15,000 default "
        "with a discrepancy note")


# ---------------------------------------------------------------------------
# Criterion: end-to-end determinism


def test_pipeline_runs_are_byte_identical(tmp_path, fixture_dir):
    config = {
        "lexicon": {"dir": str(fixture_dir)},
        "conditions": [
            {"name": "core", "targets_per_structure": 5, "primes_per_target": 3, "seed": 9}
        ],
        "scorer": {
            "kind": "ngram", "order": 3, "alpha": 0.1,
            "train": {"source": "synthetic", "n_pairs": 400,
                      "weights": {"ACT": 1, "PASS": 1, "DO": 1, "PO": 1}, "seed": 10},
        },
    }
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(config))
    assert main(["run", "--config", str(config_path), "--out", str(tmp_path / "one")]) == 0
    assert main([
        "run", "--manifest", str(tmp_path / "one" / "manifest.json"),
        "--out", str(tmp_path / "two"),
    ]) == 0
    for artifact in ("report.csv", "report.json"):
        first = (tmp_path / "one" / artifact).read_bytes()
        second = (tmp_path / "two" / artifact).read_bytes()
        assert first == second, f"{artifact} differs between runs"
    corpora_one = sorted(p.name for p in (tmp_path / "one").glob("corpus__*.jsonl"))
    for name in corpora_one:
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()
    _ok("determinism: generate -> ngram-score -> report twice from one manifest, "
        "byte-identical corpora and reports")
