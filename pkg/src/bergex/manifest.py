"""Run manifests and canonical JSON.

Every command emits a canonical (sorted-keys, compact) JSON document and a
manifest recording the command, parameters, seed, tool version, input hashes,
and output hashes. Replaying a manifest re-executes the command and must
reproduce the result byte for byte; timings are deliberately kept out of the
documents."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

SCHEMA = "bergex/1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def hash_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    command: str
    parameters: dict
    seed: int | None
    version: str
    input_hashes: dict
    outputs: dict

    def to_doc(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "version": self.version,
            "input_hashes": self.input_hashes,
            "outputs": self.outputs,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "RunManifest":
        try:
            return cls(
                command=doc["command"],
                parameters=doc["parameters"],
                seed=doc.get("seed"),
                version=doc["version"],
                input_hashes=doc.get("input_hashes", {}),
                outputs=doc.get("outputs", {}),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed manifest: {exc}") from exc


def build_manifest(command: str, parameters: dict, seed: int | None,
                   version: str, input_paths, result_text: str,
                   output_files: dict | None = None) -> RunManifest:
    hashes = {str(p): hash_file(p) for p in input_paths}
    outputs = {"result_sha256": sha256_text(result_text)}
    if output_files:
        outputs.update({str(p): hash_file(p) for p in output_files})
    return RunManifest(command, parameters, seed, version, hashes, outputs)
