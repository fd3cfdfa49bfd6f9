"""Model-dependent acceptance checks against a live scorer service.

These require a running scorer service (see scorer_service/) loaded with
gpt2-large and are skipped unless PRIMINGKIT_SCORER_URL points at one:

    python -m scorer_service --model gpt2-large --port 8321
    PRIMINGKIT_SCORER_URL=http://127.0.0.1:8321 pytest tests/test_acceptance_secondary.py -s
"""

import os

import pytest

from primingkit import ConditionSpec, PairedScore, RemoteScorer, ScoreRequest, aggregate
from primingkit.generator import build_structure
from primingkit.metrics import group_paired_scores
from primingkit.sentences import Construction, join_context, sentence_with_period

SERVICE_URL = os.environ.get("PRIMINGKIT_SCORER_URL", "")

pytestmark = pytest.mark.skipif(
    not SERVICE_URL,
    reason="set PRIMINGKIT_SCORER_URL to a running scorer service to enable",
)

REFERENCE_PREFERENCE = {"ACT": 0.605, "PASS": 0.810, "PO": 0.654, "DO": 0.721}
REFERENCE_IDENTICAL_PE = {"ACT": 2.5, "PASS": 7.2, "PO": 9.2, "DO": 10.1}


@pytest.fixture(scope="module")
def scorer():
    remote = RemoteScorer(SERVICE_URL, timeout=300.0)
    health = remote.health()
    if "gpt2-large" not in health.get("model_id", ""):
        pytest.skip(f"service runs {health.get('model_id')!r}, these checks expect gpt2-large")
    return remote


def _score_items(items, scorer):
    rows = []
    for item in items:
        target_text = sentence_with_period(item.target)
        requests = []
        for pair in item.prime_pairs:
            requests.append(ScoreRequest(join_context(pair.congruent), target_text))
            requests.append(ScoreRequest(join_context(pair.incongruent), target_text))
        results = scorer.score_batch(requests)
        for j in range(len(item.prime_pairs)):
            rows.append(
                PairedScore(item.item_id, j, results[2 * j].log_prob,
                            results[2 * j + 1].log_prob)
            )
    return rows


@pytest.fixture(scope="module")
def core_reports(scorer, data_lexicon):
    cond = ConditionSpec(name="core", targets_per_structure=150,
                         primes_per_target=10, seed=2024)
    targets = {}
    for structure in (Construction.ACT, Construction.PASS, Construction.DO, Construction.PO):
        items = build_structure(cond, data_lexicon, structure)
        targets[structure.value] = group_paired_scores(_score_items(items, scorer))
    counterpart = {"ACT": "PASS", "PASS": "ACT", "DO": "PO", "PO": "DO"}
    return {
        name: aggregate(targets[name], targets[counterpart[name]],
                        condition="core", structure=name,
                        other_structure_name=counterpart[name])
        for name in targets
    }


def test_core_priming_positive_for_all_structures(core_reports):
    for name, report in core_reports.items():
        assert report.ci99[0] > 0.0, f"{name}: CI99 lower bound {report.ci99[0]:.3f} <= 0"
        print(f"[PASS] {name}: mean PE {report.mean_pe:+.3f}, CI99 low {report.ci99[0]:+.3f} > 0")


def test_preference_rates_near_reference(core_reports):
    for name, report in core_reports.items():
        reference = REFERENCE_PREFERENCE[name]
        assert abs(report.preference_rate - reference) <= 0.10, (
            f"{name}: preference {report.preference_rate:.3f} vs reference {reference:.3f}"
        )
        print(f"[PASS] {name}: preference rate {report.preference_rate:.3f} "
              f"within 0.10 of {reference:.3f}")


def test_identical_condition_ceiling(scorer, data_lexicon):
    cond = ConditionSpec(name="identical", targets_per_structure=150,
                         primes_per_target=10, seed=2025)
    for structure in (Construction.ACT, Construction.PASS, Construction.DO, Construction.PO):
        items = build_structure(cond, data_lexicon, structure)
        targets = group_paired_scores(_score_items(items, scorer))
        mean = sum(t.pe for t in targets) / len(targets)
        reference = REFERENCE_IDENTICAL_PE[structure.value]
        assert abs(mean - reference) <= 1.5, (
            f"{structure.value}: identical-condition PE {mean:.2f} vs {reference:.2f}"
        )
        print(f"[PASS] {structure.value}: identical-condition ceiling {mean:.2f} "
              f"within 1.5 of {reference:.2f}")
