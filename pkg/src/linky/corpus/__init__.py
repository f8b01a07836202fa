"""Dataset management: records, loading, synthesis, and ego networks."""

from .dataset import Dataset, DatasetManifest, export_dataset, load_dataset, read_manifest
from .groundtruth import extract_ground_truth
from .records import (
    ContentPost,
    GroundTruthLink,
    IdentityRef,
    Platform,
    RelationshipEdge,
    UserIdentity,
)
from .synthetic import SyntheticDataset, generate_synthetic_dataset, generate_usernames

__all__ = [
    "ContentPost",
    "Dataset",
    "DatasetManifest",
    "GroundTruthLink",
    "IdentityRef",
    "Platform",
    "RelationshipEdge",
    "SyntheticDataset",
    "UserIdentity",
    "export_dataset",
    "extract_ground_truth",
    "generate_synthetic_dataset",
    "generate_usernames",
    "load_dataset",
    "read_manifest",
]
