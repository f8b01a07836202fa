"""Exception hierarchy for the linky workbench.

Every error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can map failures without string matching. ``DataError`` covers bad
input data of any kind; anything else escaping to the CLI is an internal
error.
"""


class LinkyError(Exception):
    code = "internal_error"


class DataError(LinkyError):
    """Invalid input data: bad records, broken references, bad parameters."""

    code = "data_error"


class MalformedRecord(DataError):
    code = "malformed_record"

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f" ({path}" + (f", line {line})" if line is not None else ")")
        elif line is not None:
            where = f" (line {line})"
        super().__init__(message + where)


class DuplicateIdentity(DataError):
    code = "duplicate_identity"


class DanglingEdge(DataError):
    code = "dangling_edge"


class SelfLoopEdge(DanglingEdge):
    code = "self_loop_edge"


class DanglingAuthor(DataError):
    code = "dangling_author"


class DuplicateGroundTruth(DataError):
    code = "duplicate_ground_truth"


class UnknownPlatform(DataError):
    code = "unknown_platform"


class EmptyPlatform(DataError):
    code = "empty_platform"


class UnknownIdentity(DataError):
    code = "unknown_identity"


class InvalidPattern(DataError):
    code = "invalid_pattern"


class InvalidParameter(DataError):
    code = "invalid_parameter"


class EmptyUsername(DataError):
    code = "empty_username"


class DuplicateNameId(DataError):
    code = "duplicate_name_id"


class SnapshotError(DataError):
    code = "snapshot_error"


class MalformedSolution(DataError):
    code = "malformed_solution"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message + (f" (line {line})" if line is not None else ""))


class UnknownIdentityRef(DataError):
    code = "unknown_identity_ref"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message + (f" (line {line})" if line is not None else ""))


class DuplicateCandidate(DataError):
    code = "duplicate_candidate"


class DuplicateMethodId(DataError):
    code = "duplicate_method_id"


class UnknownMethod(DataError):
    code = "unknown_method"


class UnknownSource(DataError):
    code = "unknown_source"


class NoCandidates(DataError):
    code = "no_candidates"


class NoGroundTruth(DataError):
    code = "no_ground_truth"


class PlatformMismatch(DataError):
    code = "platform_mismatch"


class WorkspaceNotLoaded(DataError):
    code = "workspace_not_loaded"


class IoFailure(LinkyError):
    code = "io_failure"
