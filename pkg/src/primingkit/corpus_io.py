"""File formats: corpus JSONL, score JSONL, and report CSV/JSON.

One prime-target item per corpus line; serialization is canonical (sorted
keys, compact separators) so identical corpora are byte-identical.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .generator import ConditionSpec, PrimePair, PrimeTargetItem
from .metrics import ConditionReport, PairedScore
from .sentences import Construction, NounPhraseSpec, PPSpec, Sentence, SentenceSpec

SCHEMA_VERSION = 1


class CorpusFormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Sentence (de)serialization


def _np_to_dict(np_spec: NounPhraseSpec | None):
    if np_spec is None:
        return None
    pp = None
    if np_spec.pp is not None:
        pp = {
            "kind": np_spec.pp.kind,
            "noun": np_spec.pp.noun,
            "determiner": np_spec.pp.determiner,
            "adjective": np_spec.pp.adjective,
        }
    return {
        "noun": np_spec.noun,
        "determiner": np_spec.determiner,
        "adjective": np_spec.adjective,
        "pp": pp,
    }


def _np_from_dict(data) -> NounPhraseSpec | None:
    if data is None:
        return None
    pp = None
    if data.get("pp") is not None:
        raw = data["pp"]
        pp = PPSpec(
            kind=raw["kind"],
            noun=raw["noun"],
            determiner=raw.get("determiner"),
            adjective=raw.get("adjective"),
        )
    return NounPhraseSpec(
        noun=data["noun"],
        determiner=data["determiner"],
        adjective=data.get("adjective"),
        pp=pp,
    )


def sentence_to_dict(sentence: Sentence) -> dict:
    spec = sentence.spec
    return {
        "text": sentence.text,
        "construction": spec.construction.value,
        "spec": {
            "construction": spec.construction.value,
            "verb": spec.verb,
            "tense": spec.tense,
            "agent": _np_to_dict(spec.agent),
            "patient": _np_to_dict(spec.patient),
            "recipient": _np_to_dict(spec.recipient),
            "pronoun_subject": spec.pronoun_subject,
            "auxiliary": spec.auxiliary,
            "implausible": spec.implausible,
        },
        "content_lemmas": sorted(sentence.content_lemmas),
        "function_words": sorted(sentence.function_words),
    }


def sentence_from_dict(data) -> Sentence:
    raw = data["spec"]
    spec = SentenceSpec(
        construction=Construction(raw["construction"]),
        verb=raw["verb"],
        tense=raw["tense"],
        agent=_np_from_dict(raw.get("agent")),
        patient=_np_from_dict(raw.get("patient")),
        recipient=_np_from_dict(raw.get("recipient")),
        pronoun_subject=raw.get("pronoun_subject"),
        auxiliary=raw.get("auxiliary"),
        implausible=raw.get("implausible", False),
    )
    return Sentence(
        spec=spec,
        text=data["text"],
        content_lemmas=frozenset(data["content_lemmas"]),
        function_words=frozenset(data["function_words"]),
    )


# ---------------------------------------------------------------------------
# Condition (de)serialization


def condition_to_dict(cond: ConditionSpec) -> dict:
    return {
        "name": cond.name,
        "position": cond.position,
        "k": cond.k,
        "mode": cond.mode,
        "targets_per_structure": cond.targets_per_structure,
        "primes_per_target": cond.primes_per_target,
        "seed": cond.seed,
        "similarity_threshold": cond.similarity_threshold,
    }


def condition_from_dict(data) -> ConditionSpec:
    return ConditionSpec(
        name=data["name"],
        position=data.get("position"),
        k=data.get("k"),
        mode=data.get("mode"),
        targets_per_structure=data.get("targets_per_structure", 1500),
        primes_per_target=data.get("primes_per_target", 10),
        seed=data.get("seed", 0),
        similarity_threshold=data.get("similarity_threshold"),
    )


# ---------------------------------------------------------------------------
# Corpus JSONL


def item_to_dict(item: PrimeTargetItem) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "item_id": item.item_id,
        "condition": condition_to_dict(item.condition),
        "structure": item.structure.value,
        "alternation": item.alternation,
        "target": sentence_to_dict(item.target),
        "prime_pairs": [
            {
                "congruent": [sentence_to_dict(s) for s in pair.congruent],
                "incongruent": [sentence_to_dict(s) for s in pair.incongruent],
            }
            for pair in item.prime_pairs
        ],
    }


def item_from_dict(data) -> PrimeTargetItem:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CorpusFormatError(
            f"unsupported corpus schema version {data.get('schema_version')!r}"
        )
    return PrimeTargetItem(
        item_id=data["item_id"],
        condition=condition_from_dict(data["condition"]),
        structure=Construction(data["structure"]),
        alternation=data["alternation"],
        target=sentence_from_dict(data["target"]),
        prime_pairs=tuple(
            PrimePair(
                congruent=tuple(sentence_from_dict(s) for s in pair["congruent"]),
                incongruent=tuple(sentence_from_dict(s) for s in pair["incongruent"]),
            )
            for pair in data["prime_pairs"]
        ),
    )


def dumps_canonical(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def write_corpus(path: str | Path, items: list[PrimeTargetItem]) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        for item in items:
            handle.write(dumps_canonical(item_to_dict(item)))
            handle.write("\n")


def read_corpus(path: str | Path) -> list[PrimeTargetItem]:
    path = Path(path)
    items = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                items.append(item_from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise CorpusFormatError(f"{path.name}:{line_no}: {exc}") from exc
    return items


# ---------------------------------------------------------------------------
# Scores JSONL


def score_row_to_dict(condition_id: str, structure: str, scorer_id: str,
                      row: PairedScore) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "condition": condition_id,
        "structure": structure,
        "scorer_id": scorer_id,
        "target_id": row.target_id,
        "prime_pair_index": row.prime_pair_index,
        "lp_congruent": row.lp_congruent,
        "lp_incongruent": row.lp_incongruent,
    }


def read_scores(path: str | Path) -> list[dict]:
    path = Path(path)
    rows = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                PairedScore(
                    target_id=data["target_id"],
                    prime_pair_index=int(data["prime_pair_index"]),
                    lp_congruent=float(data["lp_congruent"]),
                    lp_incongruent=float(data["lp_incongruent"]),
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise CorpusFormatError(f"{path.name}:{line_no}: {exc}") from exc
            rows.append(data)
    return rows


# ---------------------------------------------------------------------------
# Reports


REPORT_COLUMNS = (
    "condition",
    "structure",
    "n_targets",
    "n_pairs",
    "mean_pe",
    "ci99_lo",
    "ci99_hi",
    "preference_rate",
    "behavior",
    "counterpart_structure",
    "scorer_id",
)


def write_report_csv(path: str | Path, rows: list[dict]) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=REPORT_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({col: row.get(col, "") for col in REPORT_COLUMNS})


def report_to_row(report: ConditionReport, scorer_id: str = "") -> dict:
    return {
        "condition": report.condition,
        "structure": report.structure,
        "n_targets": report.n_targets,
        "n_pairs": report.n_pairs,
        "mean_pe": f"{report.mean_pe:.10g}",
        "ci99_lo": f"{report.ci99[0]:.10g}",
        "ci99_hi": f"{report.ci99[1]:.10g}",
        "preference_rate": f"{report.preference_rate:.10g}",
        "behavior": report.behavior,
        "counterpart_structure": report.behavior_inputs.structure,
        "scorer_id": scorer_id,
    }
