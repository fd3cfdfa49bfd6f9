#!/usr/bin/env python3
"""Generate the full default condition matrix at release scale.

All 22 condition variants x 4 target structures at 1,500 targets x 10 primes
(~1.3M prime-target pairs) plus validation.  Expect this to run for a while
and to write a few GB of JSONL.

    python scripts/generate_matrix.py --out runs/matrix [--targets 1500] [--validate]
"""

import argparse
import sys
import time
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from primingkit import load_lexicon, validate_items  # noqa: E402
from primingkit.corpus_io import write_corpus  # noqa: E402
from primingkit.generator import build_corpus, default_condition_matrix  # noqa: E402


def run(out: Path, targets: int, primes: int, seed: int, validate: bool) -> int:
    lex = load_lexicon(REPO / "src" / "primingkit" / "data")
    out.mkdir(parents=True, exist_ok=True)
    total_pairs = 0
    for cond in default_condition_matrix(seed=seed, targets_per_structure=targets,
                                         primes_per_target=primes):
        started = time.monotonic()
        corpus = build_corpus(cond, lex)
        cond_pairs = 0
        for structure, items in corpus.items():
            path = out / f"corpus__{cond.condition_id}__{structure.value}.jsonl"
            write_corpus(path, items)
            cond_pairs += sum(len(i.prime_pairs) for i in items)
            if validate:
                violations = validate_items(items, items[0].condition, lex)
                if violations:
                    print(f"!! {path}: {len(violations)} violations", file=sys.stderr)
                    return 2
        total_pairs += cond_pairs
        print(f"{cond.condition_id:24s} {cond_pairs:7d} pairs "
              f"({time.monotonic() - started:6.1f}s)")
    print(f"total: {total_pairs} prime-target pairs under {out}")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=REPO / "runs" / "matrix")
    parser.add_argument("--targets", type=int, default=1500)
    parser.add_argument("--primes", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--validate", action="store_true")
    args = parser.parse_args()
    raise SystemExit(run(args.out, args.targets, args.primes, args.seed, args.validate))
