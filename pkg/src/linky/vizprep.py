"""Visualization payloads: word clouds, synchronized ego views, pair views.

Everything here is a pure function over an immutable dataset/solution
snapshot and serializes to the JSON shapes the HTTP API returns. Layout is
left to the client; the contractual parts are term counts, the circular
node ordering (degree descending, username ascending), and which nodes are
highlighted as cross-network linked.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .corpus import Dataset
from .corpus.records import IdentityRef, UserIdentity
from .errors import NoCandidates, UnknownSource
from .stopwords import DEFAULT_STOPWORDS

DEFAULT_TOP_N = 50

_TOKEN_RE = re.compile(r"[^\W_]+")  # unicode alphanumerics, no underscore


@dataclass(frozen=True)
class WordCloud:
    terms: list  # (term, count), count descending then term ascending

    def to_json(self) -> list:
        return [{"term": t, "count": c} for t, c in self.terms]


def word_cloud(posts, stopwords=None, top_n: int = DEFAULT_TOP_N) -> WordCloud:
    """Aggregate term counts over all posts.

    Tokens are lowercased alphanumeric runs; single characters and
    stopwords are dropped. Counts are invariant to post order and to how
    text is split across posts.
    """
    if top_n < 1:
        raise ValueError(f"top_n must be >= 1, got {top_n}")
    if stopwords is None:
        stopwords = DEFAULT_STOPWORDS
    counts: Counter = Counter()
    for post in posts:
        for token in _TOKEN_RE.findall(post.text.lower()):
            if len(token) >= 2 and token not in stopwords:
                counts[token] += 1
    ranked = sorted(counts.items(), key=lambda tc: (-tc[1], tc[0]))[:top_n]
    return WordCloud(terms=ranked)


@dataclass(frozen=True)
class EgoViewNode:
    ref: IdentityRef
    username: str
    screen_name: str | None
    bio: str | None
    degree: int
    position: int

    def to_json(self) -> dict:
        return {
            "ref": self.ref.to_json(),
            "username": self.username,
            "screen_name": self.screen_name,
            "bio": self.bio,
            "degree": self.degree,
            "position": self.position,
        }


@dataclass
class EgoView:
    ego: IdentityRef
    directed: bool
    nodes: list  # EgoViewNode, ordered by position
    edges: list  # (from node index, to node index)
    linked_highlight: list = field(default_factory=list)  # sorted node indices
    counterpart_of: dict = field(default_factory=dict)  # node index -> IdentityRef

    def node_refs(self) -> set:
        return {node.ref for node in self.nodes}

    def to_json(self) -> dict:
        return {
            "ego": self.ego.to_json(),
            "directed": self.directed,
            "nodes": [node.to_json() for node in self.nodes],
            "edges": [list(pair) for pair in self.edges],
            "linked_highlight": list(self.linked_highlight),
            "counterpart_of": {str(i): ref.to_json() for i, ref in sorted(self.counterpart_of.items())},
        }


def _normalize_link_map(link_map) -> dict:
    """Pairs (or GroundTruthLink-likes) -> ref -> set of linked refs, both ways."""
    linked: dict = {}
    for entry in link_map or ():
        if hasattr(entry, "source"):
            a, b = entry.source, entry.target
        else:
            a, b = entry
        linked.setdefault(a, set()).add(b)
        linked.setdefault(b, set()).add(a)
    return linked


def ego_view(dataset: Dataset, ref: IdentityRef, link_map=(), counterpart=None) -> EgoView:
    """Ego plus neighbors, circularly ordered by descending degree.

    A node is highlighted iff the link map pairs it with some node present
    in the counterpart view (``counterpart`` is the other platform's
    EgoView, or a set of identity refs). Without a counterpart nothing can
    be synchronized, so no node is highlighted.
    """
    ego, neighbors, edges = dataset.ego_network(ref.platform, ref.user_id)
    members = [ego] + neighbors

    degree: Counter = Counter()
    for edge in edges:
        degree[edge.from_id] += 1
        degree[edge.to_id] += 1

    ordered = sorted(members, key=lambda i: (-degree[i.user_id], i.username, i.user_id))
    nodes = [
        EgoViewNode(
            ref=ident.ref,
            username=ident.username,
            screen_name=ident.screen_name,
            bio=ident.bio,
            degree=degree[ident.user_id],
            position=pos,
        )
        for pos, ident in enumerate(ordered)
    ]
    index_of = {node.ref.user_id: node.position for node in nodes}
    edge_pairs = [(index_of[e.from_id], index_of[e.to_id]) for e in edges]

    highlight: list = []
    counterpart_of: dict = {}
    if counterpart is not None:
        other_refs = counterpart.node_refs() if isinstance(counterpart, EgoView) else set(counterpart)
        linked = _normalize_link_map(link_map)
        for node in nodes:
            partners = sorted(linked.get(node.ref, frozenset()) & other_refs)
            if partners:
                highlight.append(node.position)
                counterpart_of[node.position] = partners[0]

    return EgoView(
        ego=ego.ref,
        directed=dataset.platform(ref.platform).directed,
        nodes=nodes,
        edges=edge_pairs,
        linked_highlight=highlight,
        counterpart_of=counterpart_of,
    )


def _profile_json(ident: UserIdentity) -> dict:
    return {
        "platform": ident.platform,
        "user_id": ident.user_id,
        "username": ident.username,
        "screen_name": ident.screen_name,
        "bio": ident.bio,
        "profile_image_ref": ident.profile_image_ref,
        "has_image": ident.profile_image_ref is not None,
    }


@dataclass
class CandidateTab:
    rank: int
    score: float
    target: UserIdentity
    target_cloud: WordCloud
    target_ego: EgoView
    source_ego: EgoView

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "score": self.score,
            "target": _profile_json(self.target),
            "target_cloud": self.target_cloud.to_json(),
            "target_ego": self.target_ego.to_json(),
            "source_ego": self.source_ego.to_json(),
        }


@dataclass
class PairView:
    method_id: str
    source: UserIdentity
    source_cloud: WordCloud
    tabs: list  # CandidateTab, ordered by rank

    def to_json(self) -> dict:
        return {
            "method_id": self.method_id,
            "source": _profile_json(self.source),
            "source_cloud": self.source_cloud.to_json(),
            "tabs": [tab.to_json() for tab in self.tabs],
        }


def build_link_map(workspace, solution) -> set:
    """Synchronization pairs: ground truth plus the method's rank-1 picks."""
    pairs = set()
    for link in workspace.dataset.ground_truth:
        if link.source.platform == solution.source_platform and link.target.platform == solution.target_platform:
            pairs.add((link.source, link.target))
    for source_id, candidates in solution.predictions.items():
        if candidates:
            pairs.add(
                (
                    IdentityRef(solution.source_platform, source_id),
                    IdentityRef(solution.target_platform, candidates[0].target_id),
                )
            )
    return pairs


def pair_view(workspace, method_id: str, source_id: str, k: int = 3, stopwords=None) -> PairView:
    """Side-by-side comparison payload for one source and its top candidates.

    Each candidate tab carries the target's profile, word cloud and ego
    view, plus the source ego view with highlights synchronized against
    that candidate (highlights depend on which tab is selected).
    """
    solution = workspace.solution(method_id)
    dataset = workspace.dataset
    if not dataset.has_identity(solution.source_platform, source_id):
        raise UnknownSource(f"unknown source {solution.source_platform}/{source_id}")
    source = dataset.identity(solution.source_platform, source_id)
    candidates = solution.predictions.get(source_id, [])
    if not candidates:
        raise NoCandidates(f"method {method_id!r} has no candidates for source {source_id!r}")

    link_map = build_link_map(workspace, solution)
    source_cloud = word_cloud(dataset.posts_of(source.platform, source.user_id), stopwords)
    source_base = ego_view(dataset, source.ref)

    tabs = []
    for cand in candidates[:k]:
        target = dataset.identity(solution.target_platform, cand.target_id)
        target_base = ego_view(dataset, target.ref)
        synced_source = ego_view(dataset, source.ref, link_map, counterpart=target_base)
        synced_target = ego_view(dataset, target.ref, link_map, counterpart=source_base)
        tabs.append(
            CandidateTab(
                rank=cand.rank,
                score=cand.score,
                target=target,
                target_cloud=word_cloud(dataset.posts_of(target.platform, target.user_id), stopwords),
                target_ego=synced_target,
                source_ego=synced_source,
            )
        )
    return PairView(method_id=method_id, source=source, source_cloud=source_cloud, tabs=tabs)
