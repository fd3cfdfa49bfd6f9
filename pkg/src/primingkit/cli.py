"""Command-line front end: generate -> validate -> score -> report.

Every stage reads and writes explicit file artifacts so that expensive
scoring is never repeated and any stage can be re-run or resumed.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 scorer failure.
Every failure also writes a one-line JSON error record to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus_io
from .generator import (
    ConditionSpec,
    GenerationError,
    STRUCTURES,
    build_corpus,
    build_structure,
    default_condition_matrix,
    synthesize_training_corpus,
)
from .lexicon import DEFAULT_FREQUENCY_CUTOFF, LexiconError, lexicon_fingerprint, load_lexicon
from .manifest import ManifestError, OutputLock, RunManifest, config_hash
from .metrics import (
    PairedScore,
    cochran_sample_size,
    group_paired_scores,
    mean_ci,
    aggregate,
)
from .scoring import (
    BatchScoreError,
    MODE_CAUSAL,
    NGramScorer,
    RemoteScorer,
    ScoreRequest,
    ScoringError,
    UniformScorer,
    batch_score,
    train_ngram,
)
from .sentences import Construction, join_context, sentence_with_period
from .validator import validate_items

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_SCORER = 3

SCORER_URL_ENV = "PRIMINGKIT_SCORER_URL"

COUNTERPART_STRUCTURE = {"ACT": "PASS", "PASS": "ACT", "DO": "PO", "PO": "DO"}

#: Default corpus sizing: 1500 targets x 10 primes per structure.
DEFAULT_PAIRS_PER_STRUCTURE = 15_000
SAMPLE_SIZE_Z = 2.576
SAMPLE_SIZE_MARGIN = 0.01
SAMPLE_SIZE_P = 0.5


class CliError(RuntimeError):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _error_record(message: str, exit_code: int) -> None:
    sys.stderr.write(json.dumps({"error": message, "exit_code": exit_code}) + "\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        _error_record(f"usage: {message}", EXIT_USAGE)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Config handling


def _load_config(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config {path}: {exc}", EXIT_USAGE) from exc


def _conditions_from_config(config: dict) -> list[ConditionSpec]:
    raw = config.get("conditions")
    if raw == "default_matrix":
        base = config.get("matrix_defaults", {})
        return default_condition_matrix(
            seed=base.get("seed", 0),
            targets_per_structure=base.get("targets_per_structure", 1500),
            primes_per_target=base.get("primes_per_target", 10),
        )
    if not isinstance(raw, list) or not raw:
        raise CliError("config needs a non-empty 'conditions' list", EXIT_USAGE)
    try:
        return [corpus_io.condition_from_dict(entry) for entry in raw]
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad condition entry: {exc}", EXIT_USAGE) from exc


def _load_lexicon_from(config: dict):
    section = config.get("lexicon", {})
    directory = section.get("dir")
    if not directory:
        raise CliError("config needs lexicon.dir", EXIT_USAGE)
    cutoff = section.get("frequency_cutoff", DEFAULT_FREQUENCY_CUTOFF)
    try:
        return load_lexicon(directory, cutoff), directory
    except LexiconError as exc:
        raise CliError(f"lexicon error: {exc}", EXIT_VALIDATION) from exc


def build_scorer(config: dict, lex=None, url_override: str | None = None):
    kind = config.get("kind")
    if kind == "uniform":
        return UniformScorer(vocab_size=config.get("vocab_size", 50))
    if kind == "ngram":
        train = config.get("train", {})
        source = train.get("source")
        if source == "file":
            path = Path(train["path"])
            if not path.is_file():
                raise CliError(f"training corpus not found: {path}", EXIT_SCORER)
            corpus = [line for line in path.read_text().splitlines() if line.strip()]
        elif source == "synthetic":
            if lex is None:
                raise CliError("synthetic training needs a lexicon", EXIT_USAGE)
            corpus = synthesize_training_corpus(
                lex,
                n_pairs=train.get("n_pairs", 2000),
                weights=train.get("weights", {"ACT": 1, "PASS": 1, "DO": 1, "PO": 1}),
                seed=train.get("seed", 0),
            )
        else:
            raise CliError("ngram scorer needs train.source = file | synthetic", EXIT_USAGE)
        model = train_ngram(corpus, order=config.get("order", 3), alpha=config.get("alpha", 0.1))
        return NGramScorer(model)
    if kind == "remote":
        base_url = url_override or os.environ.get(SCORER_URL_ENV) or config.get("base_url")
        if not base_url:
            raise CliError(
                f"remote scorer needs a base URL (flag, {SCORER_URL_ENV}, or config)",
                EXIT_USAGE,
            )
        scorer = RemoteScorer(base_url, timeout=config.get("timeout", 120.0))
        try:
            scorer.health()
        except ScoringError as exc:
            raise CliError(f"scorer service health check failed for {base_url}: {exc}",
                           EXIT_SCORER) from exc
        return scorer
    raise CliError(f"unknown scorer kind {kind!r}", EXIT_USAGE)


def _scorer_identity(scorer) -> dict:
    try:
        return dict(scorer.identity)
    except ScoringError as exc:
        raise CliError(f"cannot identify scorer: {exc}", EXIT_SCORER) from exc


def _scorer_id(scorer) -> str:
    identity = _scorer_identity(scorer)
    if identity.get("kind") == "remote":
        return f"remote:{identity.get('model_id', '?')}"
    if identity.get("kind") == "ngram":
        return f"ngram:o{identity['order']}:a{identity['alpha']}"
    if identity.get("kind") == "uniform":
        return f"uniform:{identity['vocab_size']}"
    return str(identity)


# ---------------------------------------------------------------------------
# generate


def _corpus_filename(cond: ConditionSpec, structure: Construction) -> str:
    return f"corpus__{cond.condition_id}__{structure.value}.jsonl"


def cmd_generate(args) -> int:
    if args.config:
        config = _load_config(args.config)
        lex, lexicon_dir = _load_lexicon_from(config)
        conditions = _conditions_from_config(config)
    else:
        lexicon_dir = args.lexicon_dir
        if not lexicon_dir:
            raise CliError("--lexicon-dir (or --config) is required", EXIT_USAGE)
        try:
            lex = load_lexicon(lexicon_dir, args.frequency_cutoff)
        except LexiconError as exc:
            raise CliError(f"lexicon error: {exc}", EXIT_VALIDATION) from exc
        try:
            conditions = [
                ConditionSpec(
                    name=args.condition,
                    position=args.position,
                    k=args.k,
                    mode=args.mode,
                    targets_per_structure=args.targets,
                    primes_per_target=args.primes_per_target,
                    seed=args.seed,
                )
            ]
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc

    structures = [Construction(args.structure)] if args.structure else list(STRUCTURES)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    artifacts: dict[str, str] = {}
    with OutputLock(out_dir):
        for cond in conditions:
            try:
                if set(structures) == set(STRUCTURES):
                    corpus = build_corpus(cond, lex)
                else:
                    corpus = {s: build_structure(cond, lex, s) for s in structures}
            except GenerationError as exc:
                raise CliError(f"generation failed: {exc}", EXIT_VALIDATION) from exc
            for structure, items in corpus.items():
                path = out_dir / _corpus_filename(cond, structure)
                if path.exists() and not args.force:
                    raise CliError(
                        f"{path} exists; pass --force to overwrite", EXIT_USAGE
                    )
                corpus_io.write_corpus(path, items)
                artifacts[f"{cond.condition_id}/{structure.value}"] = path.name
                print(f"wrote {path} ({len(items)} items)")

        manifest = RunManifest(
            resolved_config={
                "lexicon_dir": str(lexicon_dir),
                "frequency_cutoff": lex.frequency_cutoff,
                "conditions": [corpus_io.condition_to_dict(c) for c in conditions],
                "structures": [s.value for s in structures],
            },
            seed=conditions[0].seed,
            lexicon_fingerprint=lexicon_fingerprint(lexicon_dir),
            scorer={},
            conditions=[c.condition_id for c in conditions],
            artifacts={"corpora": artifacts},
        )
        manifest.write(out_dir)
    return EXIT_OK


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args) -> int:
    try:
        items = corpus_io.read_corpus(args.corpus)
    except (OSError, corpus_io.CorpusFormatError) as exc:
        raise CliError(f"cannot parse corpus: {exc}", EXIT_VALIDATION) from exc
    if not items:
        raise CliError(f"no items in {args.corpus}", EXIT_VALIDATION)
    try:
        lex = load_lexicon(args.lexicon_dir, args.frequency_cutoff)
    except LexiconError as exc:
        raise CliError(f"lexicon error: {exc}", EXIT_VALIDATION) from exc
    cond = items[0].condition
    violations = validate_items(items, cond, lex)
    for item_id, violation in violations:
        print(f"{item_id}: {violation}")
    print(
        f"checked {len(items)} items ({sum(len(i.prime_pairs) for i in items)} prime pairs): "
        f"{len(violations)} violation(s)"
    )
    return EXIT_OK if not violations else EXIT_VALIDATION


# ---------------------------------------------------------------------------
# score


def _score_item(item, scorer, mode: str, max_in_flight: int) -> list[PairedScore]:
    requests = []
    target_text = sentence_with_period(item.target)
    for pair in item.prime_pairs:
        requests.append(ScoreRequest(join_context(pair.congruent), target_text, mode))
        requests.append(ScoreRequest(join_context(pair.incongruent), target_text, mode))
    results = batch_score(requests, scorer, max_in_flight=max_in_flight)
    rows = []
    for j in range(len(item.prime_pairs)):
        rows.append(
            PairedScore(
                target_id=item.item_id,
                prime_pair_index=j,
                lp_congruent=results[2 * j].log_prob,
                lp_incongruent=results[2 * j + 1].log_prob,
            )
        )
    return rows


def _resume_prefix(path: Path, items) -> tuple[list[str], int]:
    """Lines covering fully scored leading targets, and the resume index."""
    raw_lines = [line for line in path.read_text().splitlines() if line.strip()]
    counts: dict[str, int] = {}
    order: list[str] = []
    for line in raw_lines:
        target_id = json.loads(line)["target_id"]
        if target_id not in counts:
            order.append(target_id)
        counts[target_id] = counts.get(target_id, 0) + 1
    keep_lines: list[str] = []
    resume_at = 0
    offset = 0
    for item in items:
        expected = len(item.prime_pairs)
        if (
            resume_at < len(order)
            and order[resume_at] == item.item_id
            and counts[item.item_id] == expected
        ):
            keep_lines.extend(raw_lines[offset : offset + expected])
            offset += expected
            resume_at += 1
        else:
            break
    return keep_lines, resume_at


def score_corpus_file(corpus_path: str | Path, out_path: str | Path, scorer,
                      mode: str = MODE_CAUSAL, max_in_flight: int = 1,
                      resume: bool = False) -> int:
    """Score every (target, prime pair); one checkpoint unit per target."""
    items = corpus_io.read_corpus(corpus_path)
    if not items:
        raise CliError(f"no items in {corpus_path}", EXIT_VALIDATION)
    out_path = Path(out_path)
    scorer_id = _scorer_id(scorer)
    condition_id = items[0].condition.condition_id
    structure = items[0].structure.value

    start_index = 0
    prefix: list[str] = []
    if resume and out_path.exists():
        prefix, start_index = _resume_prefix(out_path, items)
    elif out_path.exists() and not resume:
        raise CliError(f"{out_path} exists; pass --resume to continue", EXIT_USAGE)

    with out_path.open("w", encoding="utf-8") as handle:
        for line in prefix:
            handle.write(line + "\n")
        handle.flush()
        for item in items[start_index:]:
            try:
                rows = _score_item(item, scorer, mode, max_in_flight)
            except (ScoringError, BatchScoreError) as exc:
                raise CliError(f"scoring failed at {item.item_id}: {exc}", EXIT_SCORER) from exc
            for row in rows:
                handle.write(
                    corpus_io.dumps_canonical(
                        corpus_io.score_row_to_dict(condition_id, structure, scorer_id, row)
                    )
                    + "\n"
                )
            handle.flush()
    return len(items) - start_index


def cmd_score(args) -> int:
    lex = None
    scorer_config = _scorer_config_from_args(args)
    if scorer_config["kind"] == "ngram" and scorer_config.get("train", {}).get("source") == "synthetic":
        if not args.lexicon_dir:
            raise CliError("synthetic n-gram training needs --lexicon-dir", EXIT_USAGE)
        try:
            lex = load_lexicon(args.lexicon_dir, args.frequency_cutoff)
        except LexiconError as exc:
            raise CliError(f"lexicon error: {exc}", EXIT_VALIDATION) from exc
    scorer = build_scorer(scorer_config, lex, url_override=args.scorer_url)
    Path(args.out).mkdir(parents=True, exist_ok=True)
    with OutputLock(args.out):
        for corpus_path in args.corpus:
            out_path = Path(args.out) / (
                Path(corpus_path).stem.replace("corpus__", "scores__") + ".jsonl"
            )
            scored = score_corpus_file(
                corpus_path, out_path, scorer,
                mode=args.mode, max_in_flight=args.max_in_flight, resume=args.resume,
            )
            print(f"wrote {out_path} ({scored} newly scored targets)")
    return EXIT_OK


def _scorer_config_from_args(args) -> dict:
    if args.scorer == "uniform":
        return {"kind": "uniform", "vocab_size": args.vocab_size}
    if args.scorer == "ngram":
        if args.train_corpus:
            train = {"source": "file", "path": args.train_corpus}
        else:
            train = {
                "source": "synthetic",
                "n_pairs": args.train_pairs,
                "weights": json.loads(args.train_weights),
                "seed": args.train_seed,
            }
        return {"kind": "ngram", "order": args.ngram_order, "alpha": args.ngram_alpha, "train": train}
    if args.scorer == "remote":
        return {"kind": "remote"}
    raise CliError(f"unknown scorer {args.scorer!r}", EXIT_USAGE)


# ---------------------------------------------------------------------------
# report


def sample_size_note() -> dict:
    formula_pairs = cochran_sample_size(SAMPLE_SIZE_Z, SAMPLE_SIZE_MARGIN, SAMPLE_SIZE_P)
    return {
        "formula": {
            "z": SAMPLE_SIZE_Z,
            "margin": SAMPLE_SIZE_MARGIN,
            "p": SAMPLE_SIZE_P,
            "pairs": formula_pairs,
        },
        "default_corpus_pairs_per_structure": DEFAULT_PAIRS_PER_STRUCTURE,
        "note": (
            f"the default corpus ships 1500 targets x 10 primes = "
            f"{DEFAULT_PAIRS_PER_STRUCTURE} pairs per structure, while the "
            f"z^2*p*(1-p)/margin^2 bound at z={SAMPLE_SIZE_Z}, margin={SAMPLE_SIZE_MARGIN} "
            f"suggests {formula_pairs}; both figures are reported rather than reconciled"
        ),
    }


def build_reports(score_rows: list[dict], ci_method: str = "t") -> tuple[list[dict], list[dict]]:
    """Aggregate score rows into report rows (CSV) and full records (JSON)."""
    groups: dict[tuple[str, str, str], list[PairedScore]] = {}
    for row in score_rows:
        key = (row["condition"], row["scorer_id"], row["structure"])
        groups.setdefault(key, []).append(
            PairedScore(
                target_id=row["target_id"],
                prime_pair_index=row["prime_pair_index"],
                lp_congruent=row["lp_congruent"],
                lp_incongruent=row["lp_incongruent"],
            )
        )
    csv_rows: list[dict] = []
    json_rows: list[dict] = []
    for (condition, scorer_id, structure) in sorted(groups):
        targets = group_paired_scores(groups[(condition, scorer_id, structure)])
        counterpart = COUNTERPART_STRUCTURE.get(structure, "")
        other_key = (condition, scorer_id, counterpart)
        record = {
            "condition": condition,
            "scorer_id": scorer_id,
            "structure": structure,
            "n_targets": len(targets),
            "n_pairs": sum(t.n_pairs for t in targets),
            "per_target_pe": {t.target_id: t.pe for t in targets},
        }
        if other_key in groups:
            other_targets = group_paired_scores(groups[other_key])
            report = aggregate(
                targets, other_targets,
                condition=condition, structure=structure,
                other_structure_name=counterpart, ci_method=ci_method,
            )
            mean, ci = report.mean_pe, report.ci99
            record.update(
                mean_pe=mean, ci99=list(ci),
                preference_rate=report.preference_rate,
                behavior=report.behavior,
                counterpart={
                    "structure": counterpart,
                    "mean_pe": report.behavior_inputs.mean_pe,
                    "ci99": list(report.behavior_inputs.ci99),
                },
            )
            row = corpus_io.report_to_row(report, scorer_id=scorer_id)
        else:
            mean, ci = mean_ci([t.pe for t in targets], method=ci_method)
            rate = sum(t.preference_count for t in targets) / max(
                1, sum(t.n_pairs for t in targets)
            )
            record.update(
                mean_pe=mean, ci99=list(ci), preference_rate=rate,
                behavior="null", counterpart=None,
            )
            row = {
                "condition": condition,
                "structure": structure,
                "n_targets": len(targets),
                "n_pairs": sum(t.n_pairs for t in targets),
                "mean_pe": f"{mean:.10g}",
                "ci99_lo": f"{ci[0]:.10g}",
                "ci99_hi": f"{ci[1]:.10g}",
                "preference_rate": f"{rate:.10g}",
                "behavior": "null",
                "counterpart_structure": "",
                "scorer_id": scorer_id,
            }
        csv_rows.append(row)
        json_rows.append(record)
    return csv_rows, json_rows


PLOT_GROUPS = (
    ("core_by_scorer", lambda c: c == "core"),
    ("similarity_panel", lambda c: c.startswith("sem_sim")),
    ("overlap_panel", lambda c: c.startswith("overlap") or c == "identical"),
    ("implausible_panel", lambda c: c == "implausible_prime"),
    ("recency", lambda c: c.startswith("recency_pos")),
    ("cumulativity", lambda c: c.startswith("cumulative_k")),
    ("complexity", lambda c: c.startswith("complexity_")),
)


def _panel_parameter(condition: str) -> dict:
    if condition.startswith("recency_pos"):
        return {"position": int(condition.removeprefix("recency_pos"))}
    if condition.startswith("cumulative_k"):
        return {"k": int(condition.removeprefix("cumulative_k"))}
    if condition.startswith("complexity_"):
        return {"mode": condition.removeprefix("complexity_")}
    return {}


def write_plot_data(out_dir: Path, json_rows: list[dict]) -> list[str]:
    plots_dir = out_dir / "plots"
    plots_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, predicate in PLOT_GROUPS:
        rows = [
            {
                **{k: v for k, v in record.items() if k != "per_target_pe"},
                **_panel_parameter(record["condition"]),
            }
            for record in json_rows
            if predicate(record["condition"])
        ]
        if not rows:
            continue
        path = plots_dir / f"{name}.json"
        path.write_text(json.dumps(rows, indent=2, sort_keys=True) + "\n")
        written.append(str(path))
    return written


def cmd_report(args) -> int:
    rows: list[dict] = []
    for path in args.scores:
        try:
            rows.extend(corpus_io.read_scores(path))
        except (OSError, corpus_io.CorpusFormatError) as exc:
            raise CliError(f"cannot parse scores: {exc}", EXIT_VALIDATION) from exc
    if not rows:
        raise CliError("no score rows found", EXIT_VALIDATION)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with OutputLock(out_dir):
        csv_rows, json_rows = build_reports(rows, ci_method=args.ci_method)
        corpus_io.write_report_csv(out_dir / "report.csv", csv_rows)
        note = sample_size_note()
        report_payload = {
            "schema_version": corpus_io.SCHEMA_VERSION,
            "sample_size_note": note,
            "reports": json_rows,
        }
        (out_dir / "report.json").write_text(
            json.dumps(report_payload, indent=2, sort_keys=True) + "\n"
        )
        print(f"wrote {out_dir / 'report.csv'} and report.json ({len(csv_rows)} rows)")
        print(
            f"sample-size note: formula pairs = {note['formula']['pairs']}, "
            f"default corpus pairs per structure = "
            f"{note['default_corpus_pairs_per_structure']}"
        )
        if args.plot_data:
            for path in write_plot_data(out_dir, json_rows):
                print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# run (full pipeline)


def cmd_run(args) -> int:
    if args.manifest:
        manifest = RunManifest.load(args.manifest)
        config = manifest.resolved_config.get("pipeline_config")
        if config is None:
            raise CliError("manifest does not embed a pipeline config", EXIT_USAGE)
    else:
        if not args.config:
            raise CliError("run needs --config or --manifest", EXIT_USAGE)
        config = _load_config(args.config)

    lex, lexicon_dir = _load_lexicon_from(config)
    conditions = _conditions_from_config(config)
    scorer_section = config.get("scorer")
    if not scorer_section:
        raise CliError("config needs a 'scorer' section", EXIT_USAGE)
    out_dir = Path(args.out or config.get("output", {}).get("dir", "runs/out"))
    out_dir.mkdir(parents=True, exist_ok=True)

    fingerprint = lexicon_fingerprint(lexicon_dir)
    if args.manifest:
        recorded = RunManifest.load(args.manifest).lexicon_fingerprint
        if recorded != fingerprint:
            raise CliError(
                "lexicon files changed since the manifest was written "
                f"({recorded[:12]} != {fingerprint[:12]})",
                EXIT_VALIDATION,
            )

    scorer = build_scorer(scorer_section, lex, url_override=args.scorer_url)
    mode = scorer_section.get("mode", MODE_CAUSAL)
    max_in_flight = scorer_section.get("max_in_flight", 1)

    artifacts: dict = {"corpora": {}, "scores": {}}
    with OutputLock(out_dir):
        score_paths = []
        for cond in conditions:
            try:
                corpus = build_corpus(cond, lex)
            except GenerationError as exc:
                raise CliError(f"generation failed: {exc}", EXIT_VALIDATION) from exc
            for structure, items in corpus.items():
                corpus_path = out_dir / _corpus_filename(cond, structure)
                corpus_io.write_corpus(corpus_path, items)
                artifacts["corpora"][f"{cond.condition_id}/{structure.value}"] = corpus_path.name
                scores_path = out_dir / f"scores__{cond.condition_id}__{structure.value}.jsonl"
                score_corpus_file(
                    corpus_path, scores_path, scorer,
                    mode=mode, max_in_flight=max_in_flight,
                    resume=scores_path.exists(),
                )
                artifacts["scores"][f"{cond.condition_id}/{structure.value}"] = scores_path.name
                score_paths.append(scores_path)

        rows = []
        for path in score_paths:
            rows.extend(corpus_io.read_scores(path))
        csv_rows, json_rows = build_reports(rows, ci_method=config.get("ci_method", "t"))
        corpus_io.write_report_csv(out_dir / "report.csv", csv_rows)
        (out_dir / "report.json").write_text(
            json.dumps(
                {
                    "schema_version": corpus_io.SCHEMA_VERSION,
                    "sample_size_note": sample_size_note(),
                    "reports": json_rows,
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
        artifacts["report_csv"] = "report.csv"
        artifacts["report_json"] = "report.json"

        manifest = RunManifest(
            resolved_config={"pipeline_config": config},
            seed=conditions[0].seed,
            lexicon_fingerprint=fingerprint,
            scorer=_scorer_identity(scorer),
            conditions=[c.condition_id for c in conditions],
            artifacts=artifacts,
        )
        manifest.write(out_dir)
    print(f"pipeline complete: {out_dir} (config hash {config_hash(config)[:12]})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument wiring


def _add_common_lexicon_args(parser) -> None:
    parser.add_argument("--lexicon-dir", help="directory with the lexicon files")
    parser.add_argument("--frequency-cutoff", type=int, default=DEFAULT_FREQUENCY_CUTOFF)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primingkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build prime-target corpora")
    gen.add_argument("--config", help="pipeline config JSON (conditions + lexicon)")
    gen.add_argument("--condition", default="core")
    gen.add_argument("--position", type=int, default=None, help="recency prime position (1..4)")
    gen.add_argument("--k", type=int, default=None, help="cumulative prime count (1..5)")
    gen.add_argument("--mode", default=None, help="complexity mode (prime|target|both)")
    gen.add_argument("--structure", choices=[s.value for s in STRUCTURES])
    gen.add_argument("--targets", type=int, default=1500)
    gen.add_argument("--primes-per-target", type=int, default=10)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.add_argument("--force", action="store_true", help="overwrite existing corpus files")
    _add_common_lexicon_args(gen)
    gen.set_defaults(func=cmd_generate)

    val = sub.add_parser("validate", help="check a corpus against its condition constraints")
    val.add_argument("--corpus", required=True)
    _add_common_lexicon_args(val)
    val.set_defaults(func=cmd_validate)

    sc = sub.add_parser("score", help="score corpora into paired log-probability files")
    sc.add_argument("--corpus", nargs="+", required=True)
    sc.add_argument("--out", required=True)
    sc.add_argument("--scorer", choices=["uniform", "ngram", "remote"], required=True)
    sc.add_argument("--mode", default=MODE_CAUSAL)
    sc.add_argument("--max-in-flight", type=int, default=1)
    sc.add_argument("--resume", action="store_true")
    sc.add_argument("--vocab-size", type=int, default=50)
    sc.add_argument("--ngram-order", type=int, default=3)
    sc.add_argument("--ngram-alpha", type=float, default=0.1)
    sc.add_argument("--train-corpus", help="text file, one training segment per line")
    sc.add_argument("--train-pairs", type=int, default=2000)
    sc.add_argument("--train-weights", default='{"ACT": 1, "PASS": 1, "DO": 1, "PO": 1}')
    sc.add_argument("--train-seed", type=int, default=0)
    sc.add_argument("--scorer-url", help=f"scorer service base URL (overrides {SCORER_URL_ENV})")
    _add_common_lexicon_args(sc)
    sc.set_defaults(func=cmd_score)

    rep = sub.add_parser("report", help="aggregate scores into condition reports")
    rep.add_argument("--scores", nargs="+", required=True)
    rep.add_argument("--out", required=True)
    rep.add_argument("--ci-method", choices=["t", "normal"], default="t")
    rep.add_argument("--plot-data", action="store_true")
    rep.set_defaults(func=cmd_report)

    run = sub.add_parser("run", help="generate + score + report from one config")
    run.add_argument("--config")
    run.add_argument("--manifest", help="replay the resolved config of a previous run")
    run.add_argument("--out")
    run.add_argument("--scorer-url", help=f"scorer service base URL (overrides {SCORER_URL_ENV})")
    run.set_defaults(func=cmd_run)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _error_record(str(exc), exc.exit_code)
        return exc.exit_code
    except ManifestError as exc:
        _error_record(str(exc), EXIT_VALIDATION)
        return EXIT_VALIDATION
    except (LexiconError, GenerationError) as exc:
        _error_record(str(exc), EXIT_VALIDATION)
        return EXIT_VALIDATION
    except ScoringError as exc:
        _error_record(str(exc), EXIT_SCORER)
        return EXIT_SCORER


if __name__ == "__main__":
    raise SystemExit(main())
