"""Record types for multi-platform user datasets, plus their NDJSON codecs.

All files are newline-delimited JSON, one record per line. The canonical
serialization (sorted keys, compact separators, optional fields omitted
when null) is what :func:`dumps_record` emits; loading accepts any key
order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from ..errors import MalformedRecord

PROVENANCES = ("declared-bio", "manual", "synthetic")

_PLATFORM_ID_RE = re.compile(r"^[a-z0-9_-]+$")


@dataclass(frozen=True)
class Platform:
    """One online social network; directedness is fixed per platform."""

    id: str
    directed: bool = True

    def __post_init__(self):
        if not _PLATFORM_ID_RE.match(self.id):
            raise MalformedRecord(f"platform id must be a short lowercase token, got {self.id!r}")


@dataclass(frozen=True, order=True)
class IdentityRef:
    platform: str
    user_id: str

    def to_json(self) -> dict:
        return {"platform": self.platform, "user_id": self.user_id}

    @classmethod
    def from_json(cls, obj: dict) -> "IdentityRef":
        return cls(platform=obj["platform"], user_id=obj["user_id"])


@dataclass(frozen=True)
class UserIdentity:
    """One account on one platform (profile attributes only)."""

    platform: str
    user_id: str
    username: str
    screen_name: str | None = None
    bio: str | None = None
    profile_image_ref: str | None = None

    @property
    def ref(self) -> IdentityRef:
        return IdentityRef(self.platform, self.user_id)


@dataclass(frozen=True)
class RelationshipEdge:
    platform: str
    from_id: str
    to_id: str


@dataclass(frozen=True)
class ContentPost:
    platform: str
    author_id: str
    text: str
    timestamp: int | None = None


@dataclass(frozen=True)
class GroundTruthLink:
    source: IdentityRef
    target: IdentityRef
    provenance: str

    @property
    def pair(self) -> tuple:
        return (self.source, self.target)


def dumps_record(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _drop_none(obj: dict) -> dict:
    return {k: v for k, v in obj.items() if v is not None}


def identity_to_json(ident: UserIdentity) -> dict:
    return _drop_none(
        {
            "platform": ident.platform,
            "user_id": ident.user_id,
            "username": ident.username,
            "screen_name": ident.screen_name,
            "bio": ident.bio,
            "profile_image_ref": ident.profile_image_ref,
        }
    )


def edge_to_json(edge: RelationshipEdge) -> dict:
    return {"platform": edge.platform, "from_id": edge.from_id, "to_id": edge.to_id}


def post_to_json(post: ContentPost) -> dict:
    return _drop_none(
        {
            "platform": post.platform,
            "author_id": post.author_id,
            "text": post.text,
            "timestamp": post.timestamp,
        }
    )


def link_to_json(link: GroundTruthLink) -> dict:
    return {
        "source": link.source.to_json(),
        "target": link.target.to_json(),
        "provenance": link.provenance,
    }


def _require(obj: dict, keys: tuple, path: str, line: int):
    for key in keys:
        if key not in obj:
            raise MalformedRecord(f"missing field {key!r}", path=path, line=line)
        if not isinstance(obj[key], str):
            raise MalformedRecord(f"field {key!r} must be a string", path=path, line=line)


def parse_json_line(raw: str, path: str, line: int) -> dict:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc.msg}", path=path, line=line) from exc
    if not isinstance(obj, dict):
        raise MalformedRecord("record must be a JSON object", path=path, line=line)
    return obj


def identity_from_json(obj: dict, path: str = "<memory>", line: int = 0) -> UserIdentity:
    _require(obj, ("platform", "user_id", "username"), path, line)
    if not obj["username"]:
        raise MalformedRecord("username must be non-empty", path=path, line=line)
    return UserIdentity(
        platform=obj["platform"],
        user_id=obj["user_id"],
        username=obj["username"],
        screen_name=obj.get("screen_name"),
        bio=obj.get("bio"),
        profile_image_ref=obj.get("profile_image_ref"),
    )


def edge_from_json(obj: dict, path: str = "<memory>", line: int = 0) -> RelationshipEdge:
    _require(obj, ("platform", "from_id", "to_id"), path, line)
    return RelationshipEdge(platform=obj["platform"], from_id=obj["from_id"], to_id=obj["to_id"])


def post_from_json(obj: dict, path: str = "<memory>", line: int = 0) -> ContentPost:
    _require(obj, ("platform", "author_id"), path, line)
    text = obj.get("text", "")
    if not isinstance(text, str):
        raise MalformedRecord("field 'text' must be a string", path=path, line=line)
    ts = obj.get("timestamp")
    if ts is not None and not isinstance(ts, int):
        raise MalformedRecord("field 'timestamp' must be an integer", path=path, line=line)
    return ContentPost(platform=obj["platform"], author_id=obj["author_id"], text=text, timestamp=ts)


def link_from_json(obj: dict, path: str = "<memory>", line: int = 0) -> GroundTruthLink:
    for key in ("source", "target"):
        if key not in obj or not isinstance(obj[key], dict):
            raise MalformedRecord(f"field {key!r} must be an object", path=path, line=line)
        _require(obj[key], ("platform", "user_id"), path, line)
    provenance = obj.get("provenance")
    if provenance not in PROVENANCES:
        raise MalformedRecord(
            f"provenance must be one of {PROVENANCES}, got {provenance!r}", path=path, line=line
        )
    return GroundTruthLink(
        source=IdentityRef.from_json(obj["source"]),
        target=IdentityRef.from_json(obj["target"]),
        provenance=provenance,
    )
