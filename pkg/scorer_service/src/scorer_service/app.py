"""HTTP surface: /v1/score, /v1/score_batch, /v1/health.

Status codes: 400 malformed request, 422 unsupported scoring mode, 503 model
not loaded. Responses carry the model's own token pieces for the target span,
their natural-log probabilities, and their sum; the resolved concatenated
string is echoed for debugging.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .models import MODE_CAUSAL, MODE_MASKED_PLL, ScorerBackend, UnsupportedMode

KNOWN_MODES = (MODE_CAUSAL, MODE_MASKED_PLL)


def _validate_item(raw) -> tuple[str, str, str] | JSONResponse:
    if not isinstance(raw, dict):
        return JSONResponse({"error": "request body must be an object"}, status_code=400)
    context = raw.get("context", "")
    target = raw.get("target")
    mode = raw.get("mode", MODE_CAUSAL)
    if not isinstance(context, str):
        return JSONResponse({"error": "context must be a string"}, status_code=400)
    if not isinstance(target, str) or not target:
        return JSONResponse({"error": "target must be a non-empty string"}, status_code=400)
    if not isinstance(mode, str) or mode not in KNOWN_MODES:
        return JSONResponse({"error": f"unknown mode {mode!r}"}, status_code=400)
    return context, target, mode


def create_app(backend: ScorerBackend | None) -> FastAPI:
    app = FastAPI(title="scorer-service", docs_url=None, redoc_url=None)
    app.state.backend = backend

    def _not_loaded() -> JSONResponse:
        return JSONResponse({"error": "model not loaded"}, status_code=503)

    def _score_one(item) -> dict | JSONResponse:
        parsed = _validate_item(item)
        if isinstance(parsed, JSONResponse):
            return parsed
        context, target, mode = parsed
        backend = app.state.backend
        try:
            span = backend.score(context, target, mode)
        except UnsupportedMode as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        except ValueError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return {
            "tokens": list(span.tokens),
            "token_log_probs": list(span.token_log_probs),
            "log_prob": span.log_prob,
            "model_id": backend.handle.model_id,
            "resolved_text": span.resolved_text,
        }

    @app.get("/v1/health")
    def health():
        backend = app.state.backend
        if backend is None:
            return _not_loaded()
        return {
            "model_id": backend.handle.model_id,
            "modes": list(backend.handle.modes),
            "device": backend.handle.device,
            "whitespace": backend.whitespace_convention(),
        }

    @app.post("/v1/score")
    async def score(request: Request):
        if app.state.backend is None:
            return _not_loaded()
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON"}, status_code=400)
        return _score_one(body)

    @app.post("/v1/score_batch")
    async def score_batch(request: Request):
        if app.state.backend is None:
            return _not_loaded()
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON"}, status_code=400)
        items = body.get("items") if isinstance(body, dict) else None
        if not isinstance(items, list):
            return JSONResponse({"error": "body must carry an 'items' list"}, status_code=400)
        results = []
        for index, item in enumerate(items):
            outcome = _score_one(item)
            if isinstance(outcome, JSONResponse):
                detail = outcome.body.decode()
                return JSONResponse(
                    {"error": f"item {index}: {detail}"}, status_code=outcome.status_code
                )
            results.append(outcome)
        return {"items": results}

    return app
