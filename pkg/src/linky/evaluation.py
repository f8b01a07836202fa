"""Scoring linkage solutions against ground truth.

Only source identities that appear in the ground truth for the solution's
platform pair are scored. A source whose true counterpart is missing from
its stored candidate list (or that has no stored list at all) contributes a
reciprocal rank of 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidParameter, NoGroundTruth, PlatformMismatch

DEFAULT_CRITERION = "rank1"


@dataclass(frozen=True)
class EvaluationReport:
    method_id: str
    n_evaluated: int
    prec_at_1: float
    mrr: float
    per_user: dict

    def to_json(self) -> dict:
        return {
            "method_id": self.method_id,
            "n_evaluated": self.n_evaluated,
            "prec_at_1": self.prec_at_1,
            "mrr": self.mrr,
        }


@dataclass(frozen=True)
class DiffReport:
    method_a: str
    method_b: str
    criterion: str
    correct_in_a_not_b: list

    def to_json(self) -> dict:
        return {
            "method_a": self.method_a,
            "method_b": self.method_b,
            "criterion": self.criterion,
            "correct_in_a_not_b": list(self.correct_in_a_not_b),
        }


def _truth_pairs(solution, ground_truth) -> dict:
    return {
        link.source.user_id: link.target.user_id
        for link in ground_truth
        if link.source.platform == solution.source_platform
        and link.target.platform == solution.target_platform
    }


def _rank_of_truth(candidates, truth_id: str) -> int:
    """1-based rank of the true counterpart, 0 if absent."""
    for cand in candidates:
        if cand.target_id == truth_id:
            return cand.rank
    return 0


def evaluate(solution, ground_truth) -> EvaluationReport:
    pairs = _truth_pairs(solution, ground_truth)
    if not pairs:
        raise NoGroundTruth(
            f"no ground truth for platform pair {solution.source_platform} -> {solution.target_platform}"
        )
    per_user = {}
    for source_id in sorted(pairs):
        rank = _rank_of_truth(solution.predictions.get(source_id, []), pairs[source_id])
        per_user[source_id] = 1.0 / rank if rank else 0.0
    n = len(per_user)
    prec = sum(1 for rr in per_user.values() if rr == 1.0) / n
    mrr = sum(per_user.values()) / n
    return EvaluationReport(
        method_id=solution.method.method_id,
        n_evaluated=n,
        prec_at_1=prec,
        mrr=mrr,
        per_user=per_user,
    )


def parse_criterion(criterion: str) -> int:
    """Rank cutoff for a correctness criterion: 'rank1' or 'topK'."""
    if criterion == "rank1":
        return 1
    if criterion.startswith("top") and criterion[3:].isdigit() and int(criterion[3:]) >= 1:
        return int(criterion[3:])
    raise InvalidParameter(f"criterion must be 'rank1' or 'topK', got {criterion!r}")


def correct_sources(solution, ground_truth, criterion: str = DEFAULT_CRITERION) -> set:
    """Source ids whose true counterpart sits within the criterion cutoff."""
    cutoff = parse_criterion(criterion)
    pairs = _truth_pairs(solution, ground_truth)
    out = set()
    for source_id, truth_id in pairs.items():
        rank = _rank_of_truth(solution.predictions.get(source_id, []), truth_id)
        if 1 <= rank <= cutoff:
            out.add(source_id)
    return out


def diff(solution_a, solution_b, ground_truth, criterion: str = DEFAULT_CRITERION) -> DiffReport:
    """Sources correct under A's criterion and incorrect under B's."""
    if (solution_a.source_platform, solution_a.target_platform) != (
        solution_b.source_platform,
        solution_b.target_platform,
    ):
        raise PlatformMismatch(
            f"{solution_a.method.method_id} links {solution_a.source_platform}->{solution_a.target_platform} "
            f"but {solution_b.method.method_id} links {solution_b.source_platform}->{solution_b.target_platform}"
        )
    pairs = _truth_pairs(solution_a, ground_truth)
    if not pairs:
        raise NoGroundTruth(
            f"no ground truth for platform pair {solution_a.source_platform} -> {solution_a.target_platform}"
        )
    good_a = correct_sources(solution_a, ground_truth, criterion)
    good_b = correct_sources(solution_b, ground_truth, criterion)
    return DiffReport(
        method_a=solution_a.method.method_id,
        method_b=solution_b.method.method_id,
        criterion=criterion,
        correct_in_a_not_b=sorted(good_a - good_b),
    )


def write_report(report: EvaluationReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n")


def write_diff(report: DiffReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n")
