"""Helpers for writing dataset files in tests."""

import json
from pathlib import Path


def write_dataset(
    root,
    platforms,
    identities=(),
    edges=(),
    posts=(),
    ground_truth=(),
    counts=None,
    name="fixture",
):
    """Write manifest + ndjson files; returns the manifest path.

    ``platforms`` is a list of (id, directed) pairs; record arguments are
    plain dicts written one per line.
    """
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    files = {}
    for kind, records in (
        ("identities", identities),
        ("edges", edges),
        ("posts", posts),
        ("ground_truth", ground_truth),
    ):
        files[kind] = f"{kind}.ndjson"
        with open(root / files[kind], "w", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record) + "\n")
    manifest = {
        "name": name,
        "platforms": [{"id": pid, "directed": directed} for pid, directed in platforms],
        "files": files,
    }
    if counts is not None:
        manifest["counts"] = counts
    path = root / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2), encoding="utf-8")
    return path


def ident(platform, user_id, username, **extra):
    record = {"platform": platform, "user_id": user_id, "username": username}
    record.update(extra)
    return record


def edge(platform, from_id, to_id):
    return {"platform": platform, "from_id": from_id, "to_id": to_id}


def post(platform, author_id, text, timestamp=None):
    record = {"platform": platform, "author_id": author_id, "text": text}
    if timestamp is not None:
        record["timestamp"] = timestamp
    return record


def gt_link(sp, sid, tp, tid, provenance="manual"):
    return {
        "source": {"platform": sp, "user_id": sid},
        "target": {"platform": tp, "user_id": tid},
        "provenance": provenance,
    }
