"""Linkage methods and their solutions.

A solution is one method's ranked predictions for a dataset: per source
identity, an ordered candidate list with scores. The built-in baseline
ranks target usernames by n-gram cosine similarity; external methods are
imported from solution files. A workspace is the on-disk home for one
dataset plus its stored solutions.

Solution file format (NDJSON): one header record
``{method_id, display_name, source_platform, target_platform, parameters}``
followed by one record per source,
``{source_id, candidates: [{target_id, score}, ...]}`` in rank order.
Imported scores are opaque; they are never compared across methods.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from pathlib import Path

from . import evaluation
from .corpus import Dataset, export_dataset, load_dataset
from .corpus.records import IdentityRef, dumps_record
from .errors import (
    DuplicateCandidate,
    DuplicateMethodId,
    EmptyPlatform,
    IoFailure,
    MalformedSolution,
    UnknownIdentityRef,
    UnknownMethod,
    WorkspaceNotLoaded,
)
from .ngram import build_index

DEFAULT_GRAM_LEN = 3
DEFAULT_TOP_K = 3

_METHOD_ID_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")
_ORIGINS = ("builtin-baseline", "imported")


@dataclass(frozen=True)
class MethodDescriptor:
    method_id: str
    display_name: str
    origin: str = "imported"
    parameters: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RankedCandidate:
    target_id: str
    score: float
    rank: int


@dataclass
class Solution:
    method: MethodDescriptor
    source_platform: str
    target_platform: str
    predictions: dict  # source user_id -> list[RankedCandidate]

    def candidate_ref(self, candidate: RankedCandidate) -> IdentityRef:
        return IdentityRef(self.target_platform, candidate.target_id)

    def __eq__(self, other):
        if not isinstance(other, Solution):
            return NotImplemented
        return (
            self.method == other.method
            and self.source_platform == other.source_platform
            and self.target_platform == other.target_platform
            and self.predictions == other.predictions
        )


def run_baseline(
    dataset: Dataset,
    source_platform: str,
    target_platform: str,
    n: int = DEFAULT_GRAM_LEN,
    k: int = DEFAULT_TOP_K,
    method_id: str | None = None,
    display_name: str | None = None,
) -> Solution:
    """Rank every source identity against all target identities.

    One index is built over the union of source and target usernames, so
    INF weights reflect both platforms. Output is a pure function of the
    dataset records and (n, k).
    """
    sources = dataset.identities_of(source_platform)
    targets = dataset.identities_of(target_platform)
    if not sources:
        raise EmptyPlatform(f"platform {source_platform!r} has no identities")
    if not targets:
        raise EmptyPlatform(f"platform {target_platform!r} has no identities")

    corpus = [
        (f"{ident.platform}:{ident.user_id}", ident.username)
        for ident in sorted(sources + targets, key=lambda i: (i.platform, i.user_id))
    ]
    index = build_index(corpus, n)
    target_mask = index.candidate_mask(f"{target_platform}:{t.user_id}" for t in targets)

    predictions: dict = {}
    for ident in sorted(sources, key=lambda i: i.user_id):
        ranked = index.top_k(ident.username, k, candidates=target_mask)
        if ranked:
            predictions[ident.user_id] = [
                RankedCandidate(target_id=nid.split(":", 1)[1], score=score, rank=pos + 1)
                for pos, (nid, score) in enumerate(ranked)
            ]

    method = MethodDescriptor(
        method_id=method_id or f"baseline-{n}gram",
        display_name=display_name or f"Username {n}-gram baseline",
        origin="builtin-baseline",
        parameters={"k": k, "n": n},
    )
    return Solution(method, source_platform, target_platform, predictions)


# -- solution files --------------------------------------------------------


def parse_solution_text(text: str, dataset: Dataset) -> Solution:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedSolution("solution file is empty")

    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise MalformedSolution(f"header is not valid JSON: {exc.msg}", line=1) from exc
    if not isinstance(header, dict) or "method_id" not in header:
        raise MalformedSolution("first record must be a header with a method_id", line=1)
    method_id = header["method_id"]
    if not isinstance(method_id, str) or not _METHOD_ID_RE.match(method_id):
        raise MalformedSolution(f"method_id {method_id!r} is not a valid token", line=1)
    for key in ("source_platform", "target_platform"):
        if not isinstance(header.get(key), str):
            raise MalformedSolution(f"header is missing {key!r}", line=1)
    source_platform = header["source_platform"]
    target_platform = header["target_platform"]
    dataset.platform(source_platform)
    dataset.platform(target_platform)
    origin = header.get("origin", "imported")
    if origin not in _ORIGINS:
        raise MalformedSolution(f"origin must be one of {_ORIGINS}, got {origin!r}", line=1)
    parameters = header.get("parameters", {})
    if not isinstance(parameters, dict):
        raise MalformedSolution("header parameters must be an object", line=1)

    predictions: dict = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise MalformedSolution(f"invalid JSON: {exc.msg}", line=lineno) from exc
        if not isinstance(obj, dict) or not isinstance(obj.get("source_id"), str):
            raise MalformedSolution("prediction record needs a source_id", line=lineno)
        source_id = obj["source_id"]
        if not dataset.has_identity(source_platform, source_id):
            raise UnknownIdentityRef(
                f"source {source_platform}/{source_id} is not in the dataset", line=lineno
            )
        if source_id in predictions:
            raise MalformedSolution(f"source {source_id!r} listed twice", line=lineno)
        raw_candidates = obj.get("candidates", [])
        if not isinstance(raw_candidates, list):
            raise MalformedSolution("candidates must be a list", line=lineno)
        candidates = []
        seen_targets = set()
        prev_score = None
        for pos, cand in enumerate(raw_candidates):
            if not isinstance(cand, dict) or not isinstance(cand.get("target_id"), str):
                raise MalformedSolution("candidate needs a target_id", line=lineno)
            target_id = cand["target_id"]
            if not dataset.has_identity(target_platform, target_id):
                raise UnknownIdentityRef(
                    f"target {target_platform}/{target_id} is not in the dataset", line=lineno
                )
            if target_id in seen_targets:
                raise DuplicateCandidate(
                    f"target {target_id!r} listed twice for source {source_id!r} (line {lineno})"
                )
            seen_targets.add(target_id)
            score = cand.get("score")
            if isinstance(score, bool) or not isinstance(score, (int, float)):
                raise MalformedSolution(f"candidate score must be numeric, got {score!r}", line=lineno)
            score = float(score)
            if prev_score is not None and score > prev_score:
                raise MalformedSolution(
                    f"scores must be non-increasing in rank order ({score} after {prev_score})",
                    line=lineno,
                )
            prev_score = score
            candidates.append(RankedCandidate(target_id=target_id, score=score, rank=pos + 1))
        predictions[source_id] = candidates

    method = MethodDescriptor(
        method_id=method_id,
        display_name=header.get("display_name", method_id),
        origin=origin,
        parameters=parameters,
    )
    return Solution(method, source_platform, target_platform, predictions)


def import_solution(path, dataset: Dataset) -> Solution:
    return parse_solution_text(Path(path).read_text(encoding="utf-8"), dataset)


def serialize_solution(solution: Solution) -> str:
    header = {
        "method_id": solution.method.method_id,
        "display_name": solution.method.display_name,
        "origin": solution.method.origin,
        "parameters": solution.method.parameters,
        "source_platform": solution.source_platform,
        "target_platform": solution.target_platform,
    }
    out = [dumps_record(header)]
    for source_id in sorted(solution.predictions):
        candidates = sorted(solution.predictions[source_id], key=lambda c: c.rank)
        out.append(
            dumps_record(
                {
                    "source_id": source_id,
                    "candidates": [{"target_id": c.target_id, "score": c.score} for c in candidates],
                }
            )
        )
    return "\n".join(out) + "\n"


def export_solution(solution: Solution, path) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_solution(solution))
    except OSError as exc:
        raise IoFailure(f"cannot write solution to {path}: {exc}") from exc


# -- workspace --------------------------------------------------------------


@dataclass(frozen=True)
class MethodSummary:
    descriptor: MethodDescriptor
    source_platform: str
    target_platform: str
    report: evaluation.EvaluationReport | None


class Workspace:
    """One ingested dataset plus its stored solutions, under a root directory.

    Mutations (ingest, store, import) are serialized by a lock and swap the
    solution snapshot atomically, so concurrent readers never observe a
    half-imported state.
    """

    def __init__(self, root):
        self.root = Path(root)
        self._lock = threading.Lock()
        self._dataset: Dataset | None = None
        self._solutions: dict | None = None

    # -- lifecycle -----------------------------------------------------

    @classmethod
    def ingest(cls, manifest_path, root) -> "Workspace":
        _, dataset = load_dataset(manifest_path)
        ws = cls(root)
        export_dataset(dataset, ws.root)
        (ws.root / "solutions").mkdir(exist_ok=True)
        ws._dataset = dataset
        return ws

    @classmethod
    def open(cls, root) -> "Workspace":
        ws = cls(root)
        if not ws.manifest_path.exists():
            raise WorkspaceNotLoaded(f"no ingested dataset under {ws.root}")
        return ws

    @property
    def manifest_path(self) -> Path:
        return self.root / "manifest.json"

    @property
    def solutions_dir(self) -> Path:
        return self.root / "solutions"

    @property
    def dataset(self) -> Dataset:
        if self._dataset is None:
            if not self.manifest_path.exists():
                raise WorkspaceNotLoaded(f"no ingested dataset under {self.root}")
            _, self._dataset = load_dataset(self.manifest_path)
        return self._dataset

    # -- solutions -------------------------------------------------------

    def _loaded(self) -> dict:
        if self._solutions is None:
            solutions = {}
            if self.solutions_dir.is_dir():
                for path in sorted(self.solutions_dir.glob("*.ndjson")):
                    sol = import_solution(path, self.dataset)
                    solutions[sol.method.method_id] = sol
            self._solutions = solutions
        return self._solutions

    def method_ids(self) -> list:
        return sorted(self._loaded())

    def solution(self, method_id: str) -> Solution:
        try:
            return self._loaded()[method_id]
        except KeyError:
            raise UnknownMethod(f"no stored solution with method_id {method_id!r}") from None

    def store_solution(self, solution: Solution, replace: bool = False) -> Solution:
        with self._lock:
            current = dict(self._loaded())
            method_id = solution.method.method_id
            if method_id in current and not replace:
                raise DuplicateMethodId(f"method {method_id!r} already stored (use replace)")
            self.solutions_dir.mkdir(parents=True, exist_ok=True)
            export_solution(solution, self.solutions_dir / f"{method_id}.ndjson")
            current[method_id] = solution
            self._solutions = current
        return solution

    def import_text(self, text: str, replace: bool = False) -> Solution:
        return self.store_solution(parse_solution_text(text, self.dataset), replace=replace)

    def import_file(self, path, replace: bool = False) -> Solution:
        return self.store_solution(import_solution(path, self.dataset), replace=replace)

    def run_baseline(
        self,
        source_platform: str,
        target_platform: str,
        n: int = DEFAULT_GRAM_LEN,
        k: int = DEFAULT_TOP_K,
        method_id: str | None = None,
        replace: bool = False,
    ) -> Solution:
        solution = run_baseline(self.dataset, source_platform, target_platform, n=n, k=k, method_id=method_id)
        return self.store_solution(solution, replace=replace)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, method_id: str) -> evaluation.EvaluationReport:
        return evaluation.evaluate(self.solution(method_id), self.dataset.ground_truth)

    def diff(self, method_a: str, method_b: str, criterion: str = evaluation.DEFAULT_CRITERION):
        return evaluation.diff(
            self.solution(method_a), self.solution(method_b), self.dataset.ground_truth, criterion
        )

    def list_methods(self) -> list:
        """One summary per stored solution, sorted by method_id."""
        out = []
        for method_id in self.method_ids():
            solution = self._loaded()[method_id]
            try:
                report = self.evaluate(method_id)
            except evaluation.NoGroundTruth:
                report = None
            out.append(
                MethodSummary(
                    descriptor=solution.method,
                    source_platform=solution.source_platform,
                    target_platform=solution.target_platform,
                    report=report,
                )
            )
        return out
