"""Priming Effect computation and statistical aggregation.

The per-pair effect is the difference between the target's log-probability
under the congruent context and under the content-matched incongruent one;
per-target effects average over the target's prime pairs, and condition-level
reports add a 99% confidence interval, the congruent-preference rate, and a
behavior label derived from the two structures of the alternation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import stats

BEHAVIOR_SYMMETRIC = "symmetric"
BEHAVIOR_ASYMMETRIC = "asymmetric"
BEHAVIOR_BIASED = "biased"
BEHAVIOR_NULL = "null"

CI_LEVEL = 0.99


@dataclass(frozen=True)
class PairedScore:
    target_id: str
    prime_pair_index: int
    lp_congruent: float
    lp_incongruent: float


@dataclass(frozen=True)
class TargetPE:
    target_id: str
    pe: float
    n_pairs: int
    preference_count: int


@dataclass(frozen=True)
class StructureSummary:
    structure: str
    mean_pe: float
    ci99: tuple[float, float]


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    structure: str
    mean_pe: float
    ci99: tuple[float, float]
    preference_rate: float
    n_targets: int
    n_pairs: int
    behavior_inputs: StructureSummary
    behavior: str


def priming_effect(scores: list[PairedScore]) -> TargetPE:
    """Mean congruent-minus-incongruent difference for one target.

    Preference counts use strict inequality: an exact tie is not a preference.
    """
    if not scores:
        raise ValueError("priming_effect requires at least one paired score")
    target_id = scores[0].target_id
    if any(s.target_id != target_id for s in scores):
        raise ValueError("paired scores mix target ids")
    for s in scores:
        if not (math.isfinite(s.lp_congruent) and math.isfinite(s.lp_incongruent)):
            raise ValueError(f"non-finite log probability for target {target_id!r}")
    diffs = [s.lp_congruent - s.lp_incongruent for s in scores]
    preference = sum(1 for s in scores if s.lp_congruent > s.lp_incongruent)
    return TargetPE(
        target_id=target_id,
        pe=sum(diffs) / len(diffs),
        n_pairs=len(diffs),
        preference_count=preference,
    )


def group_paired_scores(scores: list[PairedScore]) -> list[TargetPE]:
    """Per-target effects, in first-appearance order of target ids."""
    by_target: dict[str, list[PairedScore]] = {}
    for s in scores:
        by_target.setdefault(s.target_id, []).append(s)
    return [priming_effect(group) for group in by_target.values()]


def mean_ci(values: list[float], method: str = "t", level: float = CI_LEVEL) -> tuple[float, tuple[float, float]]:
    """Mean and two-sided confidence interval of the mean.

    method="t" uses the Student-t quantile on n-1 degrees of freedom;
    method="normal" uses the normal quantile (an option for large n).
    """
    n = len(values)
    if n < 2:
        raise ValueError("confidence interval undefined for fewer than two values")
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / (n - 1)
    sd = math.sqrt(var)
    q = (1.0 + level) / 2.0
    if method == "t":
        quantile = float(stats.t.ppf(q, n - 1))
    elif method == "normal":
        quantile = float(stats.norm.ppf(q))
    else:
        raise ValueError(f"unknown CI method {method!r}")
    half_width = quantile * sd / math.sqrt(n)
    return mean, (mean - half_width, mean + half_width)


def _ci_sign(mean: float, ci: tuple[float, float]) -> str:
    lo, hi = ci
    if lo > 0.0:
        return "positive"
    if hi < 0.0:
        return "negative"
    return "zero"


def classify_behavior(report_x: tuple[float, tuple[float, float]],
                      report_y: tuple[float, tuple[float, float]]) -> str:
    """Behavior label from the (mean, ci99) of the alternation's two structures.

    symmetric: both intervals above zero; asymmetric: one above zero, one
    straddling it; biased: one above and one below zero; null: anything else.
    """
    signs = {_ci_sign(*report_x), _ci_sign(*report_y)}
    if signs == {"positive"}:
        return BEHAVIOR_SYMMETRIC
    if signs == {"positive", "zero"}:
        return BEHAVIOR_ASYMMETRIC
    if signs == {"positive", "negative"}:
        return BEHAVIOR_BIASED
    return BEHAVIOR_NULL


def aggregate(targets: list[TargetPE], other_structure: list[TargetPE],
              condition: str = "", structure: str = "", other_structure_name: str = "",
              ci_method: str = "t") -> ConditionReport:
    """Condition-level report for one structure, classified against the
    alternation's other structure."""
    if not targets or not other_structure:
        raise ValueError("aggregate requires targets for both structures")
    mean, ci = mean_ci([t.pe for t in targets], method=ci_method)
    other_mean, other_ci = mean_ci([t.pe for t in other_structure], method=ci_method)
    total_pairs = sum(t.n_pairs for t in targets)
    preference_rate = sum(t.preference_count for t in targets) / total_pairs
    return ConditionReport(
        condition=condition,
        structure=structure,
        mean_pe=mean,
        ci99=ci,
        preference_rate=preference_rate,
        n_targets=len(targets),
        n_pairs=total_pairs,
        behavior_inputs=StructureSummary(
            structure=other_structure_name, mean_pe=other_mean, ci99=other_ci
        ),
        behavior=classify_behavior((mean, ci), (other_mean, other_ci)),
    )


def cochran_sample_size(z: float, margin: float, p: float) -> int:
    """Classic sample-size bound n = z^2 p (1-p) / margin^2.

    The result is truncated to an integer (never below one); callers that
    want a conservative bound can pass the margin accordingly.
    """
    if z <= 0:
        raise ValueError(f"z must be positive, got {z}")
    if not 0.0 < margin <= 1.0:
        raise ValueError(f"margin must lie in (0, 1], got {margin}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    value = (z * z * p * (1.0 - p)) / (margin * margin)
    return max(1, int(value))
