"""Run manifests: enough provenance to reproduce a pipeline run exactly.

A manifest records the resolved configuration (and its digest), the seed, the
lexicon fingerprint, the scorer identity, and every artifact the run wrote.
Re-running from the same manifest reproduces byte-identical corpora and, for
deterministic scorers, byte-identical reports; only the manifest's own
timestamps differ between runs.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

MANIFEST_NAME = "manifest.json"
LOCK_NAME = ".primingkit.lock"


class ManifestError(RuntimeError):
    pass


def config_hash(config: dict) -> str:
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass
class RunManifest:
    resolved_config: dict
    seed: int
    lexicon_fingerprint: str
    scorer: dict
    conditions: list[str]
    artifacts: dict = field(default_factory=dict)
    created_utc: str = ""
    schema_version: int = 1

    @property
    def digest(self) -> str:
        return config_hash(self.resolved_config)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "created_utc": self.created_utc,
            "config_hash": self.digest,
            "resolved_config": self.resolved_config,
            "seed": self.seed,
            "lexicon_fingerprint": self.lexicon_fingerprint,
            "scorer": self.scorer,
            "conditions": self.conditions,
            "artifacts": self.artifacts,
        }

    def write(self, directory: str | Path) -> Path:
        self.created_utc = datetime.now(timezone.utc).isoformat()
        path = Path(directory) / MANIFEST_NAME
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
        return path

    @classmethod
    def load(cls, path: str | Path) -> "RunManifest":
        path = Path(path)
        if path.is_dir():
            path = path / MANIFEST_NAME
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ManifestError(f"cannot load manifest {path}: {exc}") from exc
        recorded = data.get("config_hash")
        manifest = cls(
            resolved_config=data["resolved_config"],
            seed=data["seed"],
            lexicon_fingerprint=data["lexicon_fingerprint"],
            scorer=data.get("scorer", {}),
            conditions=data.get("conditions", []),
            artifacts=data.get("artifacts", {}),
            created_utc=data.get("created_utc", ""),
        )
        if recorded and recorded != manifest.digest:
            raise ManifestError(f"manifest {path} was edited: config hash mismatch")
        return manifest


class OutputLock:
    """Rejects concurrent runs against one output directory."""

    def __init__(self, directory: str | Path):
        self.path = Path(directory) / LOCK_NAME
        self._held = False

    def __enter__(self) -> "OutputLock":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        try:
            fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise ManifestError(
                f"output directory is locked by another run ({self.path}); "
                "remove the lock file if that run is dead"
            ) from None
        with os.fdopen(fd, "w") as handle:
            handle.write(str(os.getpid()))
        self._held = True
        return self

    def __exit__(self, *exc_info) -> None:
        if self._held:
            try:
                self.path.unlink()
            except OSError:
                pass
            self._held = False
