#!/usr/bin/env python3
"""End-to-end demo with the offline trigram scorer.

Trains a trigram on sentence pairs skewed 90/10 toward double-object datives,
builds a small core corpus, scores it, and prints the per-structure report.
The skew makes the scorer favour any double-object prime, so the dative rows
come out "biased" (DO positive, PO negative) by construction.

    python scripts/run_demo.py [--targets 200] [--out runs/demo]
"""

import argparse
import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from primingkit.cli import main  # noqa: E402


def run(targets: int, out: Path) -> int:
    config = {
        "lexicon": {"dir": str(REPO / "src" / "primingkit" / "data")},
        "conditions": [
            {"name": "core", "targets_per_structure": targets,
             "primes_per_target": 10, "seed": 7}
        ],
        "scorer": {
            "kind": "ngram", "order": 3, "alpha": 0.1,
            "train": {"source": "synthetic", "n_pairs": 3000,
                      "weights": {"DO": 0.9, "PO": 0.1}, "seed": 13},
        },
    }
    out.mkdir(parents=True, exist_ok=True)
    config_path = out / "config.json"
    config_path.write_text(json.dumps(config, indent=2))
    code = main(["run", "--config", str(config_path), "--out", str(out)])
    if code == 0:
        print((out / "report.csv").read_text())
    return code


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--targets", type=int, default=200)
    parser.add_argument("--out", type=Path, default=REPO / "runs" / "demo")
    args = parser.parse_args()
    raise SystemExit(run(args.targets, args.out))
