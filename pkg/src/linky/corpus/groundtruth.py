"""Ground-truth links from self-declared counterpart handles in bios.

A configurable regex pattern list pulls candidate handles out of
source-platform bios; a link is emitted only when the extracted handle
equals (case-insensitively) the username of an existing target-platform
identity. Matching is deliberately exact so the ground truth itself stays
free of fuzzy false positives.
"""

from __future__ import annotations

import re

from ..errors import InvalidPattern
from .dataset import Dataset
from .records import GroundTruthLink


def _compile(patterns) -> list:
    compiled = []
    for raw in patterns:
        try:
            compiled.append(re.compile(raw, re.IGNORECASE))
        except re.error as exc:
            raise InvalidPattern(f"pattern {raw!r} does not compile: {exc}") from exc
    if not compiled:
        raise InvalidPattern("at least one handle pattern is required")
    return compiled


def extract_ground_truth(dataset: Dataset, source_platform: str, target_platform: str, handle_patterns) -> list:
    """Scan source-platform bios for declared target-platform usernames.

    At most one link per source identity; candidate handles are considered
    in bio order (match position, then pattern order) and the first one
    that resolves to an existing target identity wins. Output provenance is
    always ``declared-bio``.
    """
    dataset.platform(source_platform)
    dataset.platform(target_platform)
    patterns = _compile(handle_patterns)

    by_username: dict = {}
    for ident in dataset.identities_of(target_platform):
        key = ident.username.lower()
        # Duplicate target usernames resolve to the smallest user_id.
        if key not in by_username or ident.user_id < by_username[key].user_id:
            by_username[key] = ident

    links = []
    for ident in sorted(dataset.identities_of(source_platform), key=lambda i: i.user_id):
        if not ident.bio:
            continue
        candidates = []
        for p_idx, pattern in enumerate(patterns):
            for match in pattern.finditer(ident.bio):
                handle = match.group(1) if pattern.groups else match.group(0)
                if handle:
                    candidates.append((match.start(), p_idx, handle))
        for _, _, handle in sorted(candidates, key=lambda c: (c[0], c[1])):
            target = by_username.get(handle.lower())
            if target is not None:
                links.append(GroundTruthLink(source=ident.ref, target=target.ref, provenance="declared-bio"))
                break
    return links
