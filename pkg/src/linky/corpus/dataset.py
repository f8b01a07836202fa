"""Dataset loading, validation, canonical export, and ego-network lookup.

A dataset is one manifest plus four NDJSON files (identities, edges, posts,
ground truth). Loading enforces referential integrity up front; the returned
:class:`Dataset` is treated as immutable afterwards and is safe to share
across concurrent readers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import (
    DanglingAuthor,
    DanglingEdge,
    DuplicateGroundTruth,
    DuplicateIdentity,
    MalformedRecord,
    SelfLoopEdge,
    UnknownIdentity,
    UnknownPlatform,
)
from . import records as rec
from .records import IdentityRef, Platform, RelationshipEdge, UserIdentity

RECORD_KINDS = ("identities", "edges", "posts", "ground_truth")


@dataclass
class DatasetManifest:
    name: str
    platforms: list
    files: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "platforms": [{"id": p.id, "directed": p.directed} for p in self.platforms],
            "files": dict(sorted(self.files.items())),
            "counts": dict(sorted(self.counts.items())),
        }


class Dataset:
    """Validated in-memory dataset with adjacency and author indexes."""

    def __init__(self, name, platforms, identities, edges, posts, ground_truth):
        self.name = name
        self.platforms = {p.id: p for p in platforms}
        if len(self.platforms) != len(platforms):
            raise MalformedRecord("duplicate platform id in manifest")

        self._identities: dict = {}
        self._by_platform: dict = {p.id: [] for p in platforms}
        for ident in identities:
            if ident.platform not in self.platforms:
                raise UnknownPlatform(f"identity {ident.user_id!r} references unknown platform {ident.platform!r}")
            if not ident.username:
                raise MalformedRecord(f"identity {ident.platform}/{ident.user_id} has an empty username")
            ref = ident.ref
            if ref in self._identities:
                raise DuplicateIdentity(f"identity {ident.platform}/{ident.user_id} defined twice")
            self._identities[ref] = ident
            self._by_platform[ident.platform].append(ident)

        self.edges: list = []
        self._adj: dict = {}
        self._incident: dict = {}
        seen_edges = set()
        for edge in edges:
            edge = self._canonical_edge(edge)
            key = (edge.platform, edge.from_id, edge.to_id)
            if key in seen_edges:
                continue
            seen_edges.add(key)
            idx = len(self.edges)
            self.edges.append(edge)
            for uid, other in ((edge.from_id, edge.to_id), (edge.to_id, edge.from_id)):
                ref = (edge.platform, uid)
                self._adj.setdefault(ref, {})[other] = None
                self._incident.setdefault(ref, []).append(idx)

        self.posts: list = []
        self._posts_by_author: dict = {}
        for post in posts:
            if post.platform not in self.platforms:
                raise UnknownPlatform(f"post references unknown platform {post.platform!r}")
            if IdentityRef(post.platform, post.author_id) not in self._identities:
                raise DanglingAuthor(f"post author {post.platform}/{post.author_id} does not exist")
            self.posts.append(post)
            self._posts_by_author.setdefault((post.platform, post.author_id), []).append(post)

        self.ground_truth: list = []
        seen_links = set()
        for link in ground_truth:
            if link.source.platform == link.target.platform:
                raise MalformedRecord(
                    f"ground-truth link endpoints share platform {link.source.platform!r}"
                )
            for end in (link.source, link.target):
                if end.platform not in self.platforms:
                    raise UnknownPlatform(f"ground-truth link references unknown platform {end.platform!r}")
                if end not in self._identities:
                    raise UnknownIdentity(f"ground-truth link references missing identity {end.platform}/{end.user_id}")
            key = (link.source, link.target.platform)
            if key in seen_links:
                raise DuplicateGroundTruth(
                    f"source {link.source.platform}/{link.source.user_id} linked twice toward {link.target.platform!r}"
                )
            seen_links.add(key)
            self.ground_truth.append(link)

    def _canonical_edge(self, edge: RelationshipEdge) -> RelationshipEdge:
        if edge.platform not in self.platforms:
            raise UnknownPlatform(f"edge references unknown platform {edge.platform!r}")
        if edge.from_id == edge.to_id:
            raise SelfLoopEdge(f"self-loop on {edge.platform}/{edge.from_id}")
        for uid in (edge.from_id, edge.to_id):
            if IdentityRef(edge.platform, uid) not in self._identities:
                raise DanglingEdge(f"edge endpoint {edge.platform}/{uid} does not exist")
        if not self.platforms[edge.platform].directed and edge.from_id > edge.to_id:
            return RelationshipEdge(edge.platform, edge.to_id, edge.from_id)
        return edge

    # -- lookups ---------------------------------------------------------

    @property
    def counts(self) -> dict:
        return {
            "identities": len(self._identities),
            "edges": len(self.edges),
            "posts": len(self.posts),
            "ground_truth": len(self.ground_truth),
        }

    def platform(self, platform_id: str) -> Platform:
        try:
            return self.platforms[platform_id]
        except KeyError:
            raise UnknownPlatform(f"unknown platform {platform_id!r}") from None

    def identities_of(self, platform_id: str) -> list:
        self.platform(platform_id)
        return list(self._by_platform[platform_id])

    def identity(self, platform_id: str, user_id: str) -> UserIdentity:
        ident = self._identities.get(IdentityRef(platform_id, user_id))
        if ident is None:
            raise UnknownIdentity(f"unknown identity {platform_id}/{user_id}")
        return ident

    def has_identity(self, platform_id: str, user_id: str) -> bool:
        return IdentityRef(platform_id, user_id) in self._identities

    def identities(self) -> list:
        return list(self._identities.values())

    def posts_of(self, platform_id: str, user_id: str) -> list:
        return list(self._posts_by_author.get((platform_id, user_id), []))

    def ego_network(self, platform_id: str, user_id: str):
        """Neighbors of one identity plus all edges among ego and neighbors.

        Adjacency is direction-insensitive: ``v`` is a neighbor of ``u`` iff
        at least one stored edge connects them either way.
        """
        ego = self.identity(platform_id, user_id)
        neighbor_ids = sorted(self._adj.get((platform_id, user_id), {}))
        nodes = {user_id}
        nodes.update(neighbor_ids)
        edge_idx = set()
        for uid in nodes:
            for idx in self._incident.get((platform_id, uid), []):
                edge = self.edges[idx]
                if edge.from_id in nodes and edge.to_id in nodes:
                    edge_idx.add(idx)
        neighbors = [self.identity(platform_id, uid) for uid in neighbor_ids]
        induced = sorted((self.edges[i] for i in edge_idx), key=lambda e: (e.from_id, e.to_id))
        return ego, neighbors, induced


# -- file I/O ------------------------------------------------------------


def _read_ndjson(path: Path, parser):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            obj = rec.parse_json_line(raw, str(path), lineno)
            out.append(parser(obj, str(path), lineno))
    return out


def read_manifest(manifest_path) -> DatasetManifest:
    path = Path(manifest_path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"manifest is not valid JSON: {exc.msg}", path=str(path)) from exc
    if not isinstance(obj, dict) or "platforms" not in obj:
        raise MalformedRecord("manifest must be a JSON object with a 'platforms' list", path=str(path))
    platforms = []
    for entry in obj["platforms"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise MalformedRecord("platform entries need an 'id'", path=str(path))
        platforms.append(Platform(id=entry["id"], directed=bool(entry.get("directed", True))))
    return DatasetManifest(
        name=obj.get("name", path.parent.name),
        platforms=platforms,
        files=dict(obj.get("files", {})),
        counts=dict(obj.get("counts", {})),
    )


def load_dataset(manifest_path):
    """Load and validate a dataset; returns ``(manifest, dataset)``.

    Stated manifest counts, when present, are checked against the actual
    record counts; the returned manifest always carries verified counts.
    """
    path = Path(manifest_path)
    manifest = read_manifest(path)
    base = path.parent

    def _load(kind, parser):
        rel = manifest.files.get(kind)
        if rel is None:
            return []
        return _read_ndjson(base / rel, parser)

    identities = _load("identities", rec.identity_from_json)
    edges = _load("edges", rec.edge_from_json)
    posts = _load("posts", rec.post_from_json)
    ground_truth = _load("ground_truth", rec.link_from_json)

    dataset = Dataset(manifest.name, manifest.platforms, identities, edges, posts, ground_truth)
    actual = dataset.counts
    for kind, stated in manifest.counts.items():
        if kind in actual and stated != actual[kind]:
            raise MalformedRecord(
                f"manifest states {stated} {kind} but files contain {actual[kind]}", path=str(path)
            )
    manifest.counts = actual
    return manifest, dataset


def export_dataset(dataset: Dataset, out_dir, name: str | None = None) -> DatasetManifest:
    """Write the dataset in canonical form; a byte-stable fixpoint.

    Records are sorted, keys sorted, optional fields omitted. Exporting a
    loaded dataset and re-loading it round-trips record for record.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    identities = sorted(dataset.identities(), key=lambda i: (i.platform, i.user_id))
    edges = sorted(dataset.edges, key=lambda e: (e.platform, e.from_id, e.to_id))
    posts = sorted(
        dataset.posts,
        key=lambda p: (p.platform, p.author_id, p.timestamp if p.timestamp is not None else -1, p.text),
    )
    links = sorted(dataset.ground_truth, key=lambda l: (l.source, l.target))

    def _write(filename, objs, encoder):
        with open(out / filename, "w", encoding="utf-8") as fh:
            for obj in objs:
                fh.write(rec.dumps_record(encoder(obj)) + "\n")

    _write("identities.ndjson", identities, rec.identity_to_json)
    _write("edges.ndjson", edges, rec.edge_to_json)
    _write("posts.ndjson", posts, rec.post_to_json)
    _write("ground_truth.ndjson", links, rec.link_to_json)

    manifest = DatasetManifest(
        name=name or dataset.name,
        platforms=sorted(dataset.platforms.values(), key=lambda p: p.id),
        files={kind: f"{kind}.ndjson" for kind in RECORD_KINDS},
        counts=dataset.counts,
    )
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return manifest
