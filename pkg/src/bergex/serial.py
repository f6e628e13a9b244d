"""Line-oriented text and JSON serialization for graphs and hypergraphs.

Text format::

    HG n r m          header, then m lines of r space-separated vertices
    GR n m            header, then m lines of 2 vertices (repeats = parallel)

JSON mirror: ``{"kind": "hypergraph"|"graph", "n": ..., "r": ..., "edges": [...]}``.
Both formats are accepted on input (sniffed); emission is text by default and
JSON with ``--json``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Hypergraph, Multigraph


class InputFormatError(ValueError):
    """Raised when an input document cannot be parsed."""


def to_text(obj) -> str:
    if isinstance(obj, Hypergraph):
        lines = [f"HG {obj.n} {obj.r} {len(obj.edges)}"]
        lines += [" ".join(map(str, e)) for e in obj.edges]
    elif isinstance(obj, Multigraph):
        lines = [f"GR {obj.n} {len(obj.edges)}"]
        lines += [f"{u} {v}" for u, v in obj.edges]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def to_json_doc(obj) -> dict:
    if isinstance(obj, Hypergraph):
        return {"kind": "hypergraph", "n": obj.n, "r": obj.r,
                "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, Multigraph):
        return {"kind": "graph", "n": obj.n, "r": 2,
                "edges": [list(e) for e in obj.edges]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json_doc(doc: dict):
    try:
        kind = doc["kind"]
        n = doc["n"]
        edges = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"malformed JSON object document: {exc}") from exc
    try:
        if kind == "hypergraph":
            return Hypergraph(n, doc["r"], edges)
        if kind == "graph":
            return Multigraph(n, edges)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputFormatError(str(exc)) from exc
    raise InputFormatError(f"unknown kind {kind!r}")


def parse_text(text: str):
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise InputFormatError("empty document")
    head = rows[0]
    try:
        if head[0] == "HG":
            n, r, m = int(head[1]), int(head[2]), int(head[3])
            if len(rows) - 1 != m:
                raise InputFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
            edges = [tuple(int(x) for x in row) for row in rows[1:]]
            return Hypergraph(n, r, edges)
        if head[0] == "GR":
            n, m = int(head[1]), int(head[2])
            if len(rows) - 1 != m:
                raise InputFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
            edges = []
            for row in rows[1:]:
                if len(row) != 2:
                    raise InputFormatError(f"graph edge line must have 2 vertices: {row}")
                edges.append((int(row[0]), int(row[1])))
            return Multigraph(n, edges)
    except InputFormatError:
        raise
    except (ValueError, IndexError) as exc:
        raise InputFormatError(str(exc)) from exc
    raise InputFormatError(f"unknown header {head[0]!r} (expected HG or GR)")


def parse(text: str):
    """Parse either format, sniffing JSON by a leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"invalid JSON: {exc}") from exc
        return from_json_doc(doc)
    return parse_text(text)


def load(path) -> Hypergraph | Multigraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    return parse(text)


def dump(obj, path, as_json: bool = False) -> None:
    if as_json:
        Path(path).write_text(json.dumps(to_json_doc(obj), sort_keys=True) + "\n")
    else:
        Path(path).write_text(to_text(obj))
