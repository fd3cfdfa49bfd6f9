import json
from pathlib import Path

import pytest

from primingkit.cli import main
from primingkit.corpus_io import read_corpus, read_scores


def _run(argv, capsys=None):
    code = main([str(a) for a in argv])
    return code


def _generate(tmp_path, fixture_dir, targets=3, primes=2, condition="core", extra=()):
    out = tmp_path / "corpora"
    code = _run([
        "generate", "--condition", condition, "--structure", "DO",
        "--targets", targets, "--primes-per-target", primes, "--seed", 7,
        "--lexicon-dir", fixture_dir, "--out", out, *extra,
    ])
    assert code == 0
    return out / "corpus__core__DO.jsonl"


def test_generate_small_corpus(tmp_path, fixture_dir):
    corpus_path = _generate(tmp_path, fixture_dir)
    items = read_corpus(corpus_path)
    assert len(items) == 3
    assert sum(len(i.prime_pairs) for i in items) == 6
    assert (corpus_path.parent / "manifest.json").is_file()


def test_generate_refuses_overwrite(tmp_path, fixture_dir, capsys):
    _generate(tmp_path, fixture_dir)
    code = _run([
        "generate", "--condition", "core", "--structure", "DO",
        "--targets", 3, "--primes-per-target", 2, "--seed", 7,
        "--lexicon-dir", fixture_dir, "--out", tmp_path / "corpora",
    ])
    assert code == 1
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert "--force" in record["error"]


def test_generate_is_reproducible(tmp_path, fixture_dir):
    first = _generate(tmp_path / "a", fixture_dir)
    second = _generate(tmp_path / "b", fixture_dir)
    assert first.read_bytes() == second.read_bytes()


def test_generate_rejects_locked_directory(tmp_path, fixture_dir, capsys):
    out = tmp_path / "corpora"
    out.mkdir()
    (out / ".primingkit.lock").write_text("999999")
    code = _run([
        "generate", "--condition", "core", "--structure", "DO",
        "--targets", 2, "--primes-per-target", 2, "--seed", 7,
        "--lexicon-dir", fixture_dir, "--out", out,
    ])
    assert code != 0


def test_validate_clean_corpus(tmp_path, fixture_dir, capsys):
    corpus_path = _generate(tmp_path, fixture_dir)
    assert _run(["validate", "--corpus", corpus_path, "--lexicon-dir", fixture_dir]) == 0
    assert "0 violation(s)" in capsys.readouterr().out


def test_validate_flags_injected_overlap(tmp_path, fixture_dir, capsys, fixture_lexicon):
    import dataclasses

    from primingkit import realize
    from primingkit.corpus_io import write_corpus
    from primingkit.generator import PrimePair
    from primingkit.sentences import alternate

    corpus_path = _generate(tmp_path, fixture_dir)
    items = read_corpus(corpus_path)
    # rebuild the first congruent prime around the target's verb
    item = items[0]
    prime_spec = dataclasses.replace(
        item.prime_pairs[0].congruent[0].spec, verb=item.target.spec.verb,
        implausible=True,  # sidestep selection checks; only the overlap matters here
    )
    prime = realize(prime_spec, fixture_lexicon)
    pair = PrimePair(congruent=(prime,),
                     incongruent=(realize(alternate(prime_spec), fixture_lexicon),))
    items[0] = dataclasses.replace(item, prime_pairs=(pair,) + item.prime_pairs[1:])
    write_corpus(corpus_path, items)
    code = _run(["validate", "--corpus", corpus_path, "--lexicon-dir", fixture_dir])
    assert code == 2
    assert "overlap" in capsys.readouterr().out


def test_validate_flags_tampered_metadata(tmp_path, fixture_dir, capsys):
    corpus_path = _generate(tmp_path, fixture_dir)
    lines = [json.loads(line) for line in corpus_path.read_text().splitlines()]
    prime = lines[0]["prime_pairs"][0]["congruent"][0]
    prime["spec"]["verb"] = lines[0]["target"]["spec"]["verb"]
    corpus_path.write_text("\n".join(json.dumps(x) for x in lines) + "\n")
    code = _run(["validate", "--corpus", corpus_path, "--lexicon-dir", fixture_dir])
    assert code == 2
    assert "spec_consistency" in capsys.readouterr().out


def test_validate_empty_corpus(tmp_path, fixture_dir, capsys):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    code = _run(["validate", "--corpus", empty, "--lexicon-dir", fixture_dir])
    assert code == 2
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert "no items" in record["error"]


def test_score_uniform(tmp_path, fixture_dir):
    corpus_path = _generate(tmp_path, fixture_dir)
    out = tmp_path / "scores"
    code = _run([
        "score", "--corpus", corpus_path, "--out", out,
        "--scorer", "uniform", "--vocab-size", 50,
    ])
    assert code == 0
    rows = read_scores(out / "scores__core__DO.jsonl")
    assert len(rows) == 6
    assert all(row["lp_congruent"] == row["lp_incongruent"] for row in rows)


def test_score_resume_matches_uninterrupted(tmp_path, fixture_dir):
    corpus_path = _generate(tmp_path, fixture_dir, targets=4, primes=3)
    out = tmp_path / "scores"
    _run(["score", "--corpus", corpus_path, "--out", out, "--scorer", "uniform"])
    full_path = out / "scores__core__DO.jsonl"
    full = full_path.read_bytes()
    # keep only the first target's rows and resume
    lines = full_path.read_text().splitlines()
    full_path.write_text("\n".join(lines[:3]) + "\n")
    code = _run([
        "score", "--corpus", corpus_path, "--out", out,
        "--scorer", "uniform", "--resume",
    ])
    assert code == 0
    assert full_path.read_bytes() == full


def test_score_remote_health_failure_exits_3(tmp_path, fixture_dir, capsys):
    corpus_path = _generate(tmp_path, fixture_dir)
    code = _run([
        "score", "--corpus", corpus_path, "--out", tmp_path / "scores",
        "--scorer", "remote", "--scorer-url", "http://127.0.0.1:1",
    ])
    assert code == 3
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert "127.0.0.1:1" in record["error"]


def test_report_zero_differences(tmp_path, fixture_dir, capsys):
    corpus_path = _generate(tmp_path, fixture_dir)
    scores = tmp_path / "scores"
    _run(["score", "--corpus", corpus_path, "--out", scores, "--scorer", "uniform"])
    out = tmp_path / "report"
    code = _run(["report", "--scores", scores / "scores__core__DO.jsonl", "--out", out])
    assert code == 0
    printed = capsys.readouterr().out
    assert "16589" in printed and "15000" in printed
    payload = json.loads((out / "report.json").read_text())
    row = payload["reports"][0]
    assert row["mean_pe"] == 0.0
    assert row["behavior"] == "null"
    assert payload["sample_size_note"]["formula"]["pairs"] == 16589
    assert payload["sample_size_note"]["default_corpus_pairs_per_structure"] == 15000


def test_report_pools_disjoint_files(tmp_path, fixture_dir):
    corpus_path = _generate(tmp_path, fixture_dir, targets=4, primes=2)
    scores = tmp_path / "scores"
    _run(["score", "--corpus", corpus_path, "--out", scores, "--scorer", "uniform"])
    score_file = scores / "scores__core__DO.jsonl"
    lines = score_file.read_text().splitlines()
    half_a = tmp_path / "half_a.jsonl"
    half_b = tmp_path / "half_b.jsonl"
    half_a.write_text("\n".join(lines[:4]) + "\n")
    half_b.write_text("\n".join(lines[4:]) + "\n")
    _run(["report", "--scores", half_a, half_b, "--out", tmp_path / "pooled"])
    _run(["report", "--scores", score_file, "--out", tmp_path / "single"])
    pooled = (tmp_path / "pooled" / "report.csv").read_bytes()
    single = (tmp_path / "single" / "report.csv").read_bytes()
    assert pooled == single


def test_report_classifies_engineered_bias(tmp_path):
    rows = []
    for structure, sign in (("DO", 1.0), ("PO", -1.0)):
        for i in range(40):
            rows.append({
                "schema_version": 1, "condition": "core", "structure": structure,
                "scorer_id": "ngram:test", "target_id": f"{structure}-{i}",
                "prime_pair_index": 0,
                "lp_congruent": -10.0 + sign * (1.0 + 0.01 * (i % 5)),
                "lp_incongruent": -10.0,
            })
    scores = tmp_path / "bias.jsonl"
    scores.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    out = tmp_path / "report"
    assert _run(["report", "--scores", scores, "--out", out]) == 0
    payload = json.loads((out / "report.json").read_text())
    by_structure = {r["structure"]: r for r in payload["reports"]}
    assert by_structure["DO"]["behavior"] == "biased"
    assert by_structure["PO"]["behavior"] == "biased"


def test_report_plot_data_groups(tmp_path, fixture_dir):
    corpus_path = _generate(tmp_path, fixture_dir)
    scores = tmp_path / "scores"
    _run(["score", "--corpus", corpus_path, "--out", scores, "--scorer", "uniform"])
    out = tmp_path / "report"
    _run([
        "report", "--scores", scores / "scores__core__DO.jsonl",
        "--out", out, "--plot-data",
    ])
    assert (out / "plots" / "core_by_scorer.json").is_file()


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["generate"])  # missing --out
    assert err.value.code == 1


def test_run_pipeline_reports_are_byte_identical(tmp_path, fixture_dir):
    config = {
        "lexicon": {"dir": str(fixture_dir)},
        "conditions": [
            {"name": "core", "targets_per_structure": 3, "primes_per_target": 2, "seed": 5}
        ],
        "scorer": {
            "kind": "ngram", "order": 3, "alpha": 0.1,
            "train": {"source": "synthetic", "n_pairs": 200,
                      "weights": {"DO": 0.9, "PO": 0.1}, "seed": 2},
        },
    }
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(config))
    for name in ("run1", "run2"):
        assert _run(["run", "--config", config_path, "--out", tmp_path / name]) == 0
    for artifact in ("report.csv", "report.json"):
        assert (tmp_path / "run1" / artifact).read_bytes() == (
            tmp_path / "run2" / artifact
        ).read_bytes()
    manifest = json.loads((tmp_path / "run1" / "manifest.json").read_text())
    assert manifest["scorer"]["kind"] == "ngram"
    assert manifest["artifacts"]["report_csv"] == "report.csv"


def test_run_from_manifest_replays(tmp_path, fixture_dir):
    config = {
        "lexicon": {"dir": str(fixture_dir)},
        "conditions": [
            {"name": "core", "targets_per_structure": 2, "primes_per_target": 2, "seed": 5}
        ],
        "scorer": {"kind": "uniform", "vocab_size": 50},
    }
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(config))
    assert _run(["run", "--config", config_path, "--out", tmp_path / "first"]) == 0
    assert _run([
        "run", "--manifest", tmp_path / "first" / "manifest.json",
        "--out", tmp_path / "second",
    ]) == 0
    assert (tmp_path / "first" / "report.csv").read_bytes() == (
        tmp_path / "second" / "report.csv"
    ).read_bytes()
