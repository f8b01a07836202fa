"""linky: cross-network user identity linkage workbench.

Builds the username n-gram similarity baseline, manages and evaluates
linkage solutions from multiple methods, and serves per-pair comparison
payloads to an analyst UI.
"""

__version__ = "0.1.0"

from . import corpus, evaluation, linkage, ngram, vizprep  # noqa: F401
from .errors import DataError, LinkyError  # noqa: F401
