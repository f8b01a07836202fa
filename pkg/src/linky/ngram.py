"""Character n-gram index over usernames.

Usernames are lowercased and cut into overlapping character n-grams. Each
gram is weighted by its occurrence count in the name times the inverse name
frequency (INF): the reciprocal of the number of distinct indexed names
containing the gram. Ranking a query against the corpus accumulates dot
products along posting lists and normalizes by Euclidean norms, so only
names sharing at least one gram with the query are ever scored.

Floating-point discipline: every dot product and norm is accumulated in
sorted-gram order, and scores are computed as ``dot / (qnorm * cnorm)``.
This keeps the posting-traversal fast path bit-compatible with a
brute-force pairwise evaluation of the same formula.
"""

from __future__ import annotations

import pickle
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateNameId, EmptyUsername, SnapshotError

DEFAULT_GRAM_LEN = 3

_SNAPSHOT_FORMAT = "linky-ngram-index"
_SNAPSHOT_VERSION = 1


def tokenize(username: str, n: int = DEFAULT_GRAM_LEN) -> Counter:
    """Multiset of character n-grams of the lowercased username.

    All characters are kept (digits, underscores, symbols). Names shorter
    than ``n`` fall back to a single gram holding the whole normalized name,
    so every identity stays rankable.
    """
    if n < 1:
        raise ValueError(f"gram length must be >= 1, got {n}")
    name = username.lower()
    if not name:
        raise EmptyUsername("username is empty")
    if len(name) < n:
        return Counter({name: 1})
    return Counter(name[i : i + n] for i in range(len(name) - n + 1))


@dataclass(frozen=True)
class SparseNameVector:
    """Gram -> weight map for one name; weight = count * INF."""

    owner: str
    entries: dict = field(default_factory=dict)

    def norm(self) -> float:
        acc = 0.0
        for g in sorted(self.entries):
            w = self.entries[g]
            acc += w * w
        return sqrt(acc)


def cosine_similarity(v1: SparseNameVector, v2: SparseNameVector) -> float:
    """Cosine of two sparse name vectors, in [0, 1] for nonnegative weights."""
    a, b = v1.entries, v2.entries
    shared = sorted(a.keys() & b.keys())
    if not shared:
        return 0.0
    dot = 0.0
    for g in shared:
        dot += a[g] * b[g]
    return dot / (v1.norm() * v2.norm())


class InvertedIndex:
    """Immutable posting-list index over a fixed username corpus.

    Built once via :func:`build_index`; afterwards safe for unbounded
    concurrent querying. Postings are stored as numpy position/weight
    arrays so score accumulation for one query gram is a single
    scatter-add.
    """

    def __init__(self, n, ids, names, postings, norms):
        self._n = n
        self._ids = ids
        self._names = names
        self._pos = {nid: i for i, nid in enumerate(ids)}
        self._postings = postings  # gram -> (positions int32, counts float64)
        self._weights = {g: counts * (1.0 / len(pos)) for g, (pos, counts) in postings.items()}
        self._inf = {g: 1.0 / len(pos) for g, (pos, _) in postings.items()}
        self._norms = norms

    @property
    def n(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return len(self._ids)

    @property
    def name_ids(self) -> list:
        return list(self._ids)

    def normalized_name(self, name_id: str) -> str:
        return self._names[self._pos[name_id]]

    def norm(self, name_id: str) -> float:
        return float(self._norms[self._pos[name_id]])

    def grams(self) -> Iterable[str]:
        return self._postings.keys()

    def postings(self, gram: str) -> list:
        """Posting list for one gram as (name_id, occurrence count) pairs."""
        pos, counts = self._postings.get(gram, (None, None))
        if pos is None:
            return []
        return [(self._ids[p], int(c)) for p, c in zip(pos, counts)]

    def name_count(self, gram: str) -> int:
        entry = self._postings.get(gram)
        return 0 if entry is None else len(entry[0])

    def inf(self, gram: str) -> float:
        """Inverse name frequency; 1.0 for grams no indexed name contains."""
        return self._inf.get(gram, 1.0)

    def vectorize(self, username: str) -> SparseNameVector:
        """INF-weighted sparse vector for any username, indexed or not."""
        counts = tokenize(username, self._n)
        entries = {g: c * self._inf.get(g, 1.0) for g, c in counts.items()}
        return SparseNameVector(owner=username.lower(), entries=entries)

    def candidate_mask(self, name_ids: Iterable[str]) -> np.ndarray:
        """Boolean mask over index positions for a candidate restriction."""
        mask = np.zeros(len(self._ids), dtype=bool)
        for nid in name_ids:
            mask[self._pos[nid]] = True
        return mask

    def top_k(self, username: str, k: int, candidates=None) -> list:
        """Ranked ``(name_id, score)`` list, best first, length <= k.

        Only names sharing at least one gram with the query are scored;
        everything else has implicit score 0 and is omitted. Ties break on
        ascending normalized username, then ascending name id. ``candidates``
        restricts scoring to the given name ids (or a precomputed mask from
        :meth:`candidate_mask`).
        """
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        counts = tokenize(username, self._n)

        qnorm_sq = 0.0
        scores = np.zeros(len(self._ids))
        for g in sorted(counts):
            qw = counts[g] * self._inf.get(g, 1.0)
            qnorm_sq += qw * qw
            hit = self._postings.get(g)
            if hit is not None:
                scores[hit[0]] += qw * self._weights[g]
        qnorm = sqrt(qnorm_sq)

        if candidates is not None:
            mask = candidates if isinstance(candidates, np.ndarray) else self.candidate_mask(candidates)
            scores = np.where(mask, scores, 0.0)

        cand = np.flatnonzero(scores)
        if cand.size == 0:
            return []
        vals = scores[cand] / (qnorm * self._norms[cand])

        if cand.size > k:
            kth = np.partition(vals, cand.size - k)[cand.size - k]
            keep = vals >= kth
            cand, vals = cand[keep], vals[keep]
        order = sorted(
            range(cand.size),
            key=lambda i: (-vals[i], self._names[cand[i]], self._ids[cand[i]]),
        )[:k]
        return [(self._ids[cand[i]], float(vals[i])) for i in order]

    def bulk_top_k(self, usernames: Sequence[str], k: int, candidates=None, workers: int = 1) -> list:
        """Rank many queries; results in input order, independent of scheduling."""
        if candidates is not None and not isinstance(candidates, np.ndarray):
            candidates = self.candidate_mask(candidates)
        if workers <= 1:
            return [self.top_k(q, k, candidates) for q in usernames]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda q: self.top_k(q, k, candidates), usernames))

    def save(self, path) -> None:
        """Write a versioned binary snapshot; reload with :meth:`load`."""
        payload = {
            "format": _SNAPSHOT_FORMAT,
            "version": _SNAPSHOT_VERSION,
            "n": self._n,
            "ids": self._ids,
            "names": self._names,
            "postings": self._postings,
            "norms": self._norms,
        }
        with open(path, "wb") as fh:
            pickle.dump(payload, fh, protocol=pickle.HIGHEST_PROTOCOL)

    @classmethod
    def load(cls, path) -> "InvertedIndex":
        with open(path, "rb") as fh:
            payload = pickle.load(fh)
        if not isinstance(payload, dict) or payload.get("format") != _SNAPSHOT_FORMAT:
            raise SnapshotError(f"not an index snapshot: {path}")
        if payload.get("version") != _SNAPSHOT_VERSION:
            raise SnapshotError(
                f"unsupported snapshot version {payload.get('version')!r}, expected {_SNAPSHOT_VERSION}"
            )
        return cls(payload["n"], payload["ids"], payload["names"], payload["postings"], payload["norms"])


def build_index(names: Iterable, n: int = DEFAULT_GRAM_LEN) -> InvertedIndex:
    """Build the inverted index from ``(name_id, username)`` pairs.

    INF is computed over the whole given corpus; output is deterministic
    for a fixed input order.
    """
    ids: list = []
    usernames: list = []
    seen = set()
    for nid, username in names:
        if nid in seen:
            raise DuplicateNameId(f"duplicate name id {nid!r}")
        seen.add(nid)
        ids.append(nid)
        usernames.append(username)

    raw: dict = {}  # gram -> ([positions], [counts])
    normalized: list = []
    for i, username in enumerate(usernames):
        counts = tokenize(username, n)
        normalized.append(username.lower())
        for g, c in counts.items():
            entry = raw.get(g)
            if entry is None:
                entry = raw[g] = ([], [])
            entry[0].append(i)
            entry[1].append(c)

    postings = {
        g: (np.asarray(pos, dtype=np.int32), np.asarray(cnt, dtype=np.float64))
        for g, (pos, cnt) in raw.items()
    }
    inf = {g: 1.0 / len(pos) for g, (pos, _) in postings.items()}

    norms = np.empty(len(ids))
    for i, username in enumerate(usernames):
        counts = tokenize(username, n)
        acc = 0.0
        for g in sorted(counts):
            w = counts[g] * inf[g]
            acc += w * w
        norms[i] = sqrt(acc)

    return InvertedIndex(n, ids, normalized, postings, norms)


def vectorize(index: InvertedIndex, username: str) -> SparseNameVector:
    return index.vectorize(username)


def top_k(index: InvertedIndex, username: str, k: int, candidates=None) -> list:
    return index.top_k(username, k, candidates)
