"""Checksummed JSON cache for computed payloads.

Files carry {"schema": 1, "sha256": <hex>, "payload": ...}; a wrong schema
or digest invalidates the file and the value is recomputed. Serialization is
canonical (sorted keys, fixed separators) so reruns are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

SCHEMA = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def payload_digest(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def store(cache_dir, key: str, payload) -> Path:
    path = Path(cache_dir) / f"{key}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    body = {"schema": SCHEMA, "sha256": payload_digest(payload), "payload": payload}
    path.write_text(canonical_json(body) + "\n", encoding="utf-8")
    return path


def load(cache_dir, key: str):
    """The cached payload, or None when absent, unreadable or corrupt."""
    path = Path(cache_dir) / f"{key}.json"
    if not path.is_file():
        return None
    try:
        body = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    if not isinstance(body, dict) or body.get("schema") != SCHEMA:
        return None
    payload = body.get("payload")
    if body.get("sha256") != payload_digest(payload):
        return None
    return payload


def cached(cache_dir, key: str, compute):
    """compute() with a pass-through JSON cache; cache_dir=None disables it."""
    if cache_dir is None:
        return compute()
    hit = load(cache_dir, key)
    if hit is not None:
        return hit
    payload = compute()
    store(cache_dir, key, payload)
    return payload
