"""Start the scorer service.

    python -m scorer_service --model gpt2-large --port 8321
    python -m scorer_service --model bert-base-uncased --mode masked_pll
"""

import argparse

from .app import create_app
from .models import ScorerBackend


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="scorer_service", description=__doc__)
    parser.add_argument("--model", required=True,
                        help="model id or local path loadable by transformers")
    parser.add_argument("--port", type=int, default=8321)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--mode", default="auto",
                        choices=["auto", "causal", "masked_pll"],
                        help="scoring mode; auto infers it from the model config")
    args = parser.parse_args(argv)

    backend = ScorerBackend(args.model, device=args.device, mode=args.mode)
    import uvicorn

    uvicorn.run(create_app(backend), host=args.host, port=args.port, log_level="info")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
