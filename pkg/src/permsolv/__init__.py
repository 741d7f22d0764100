"""Permutation groups, solvability and nilpotency of two-generated subgroups,
real elements of simple groups, and graphs on groups.

Hot kernels run under numba when available; set ``PERMSOLV_PURE_NUMPY=1``
to force the numpy implementations.
"""

from .atlas import build, default_manifest, load_manifest, parse_spec
from .errors import CapExceeded, PermSolvError
from .graphs import class_graph, element_graph, expanded_graph
from .group import PermGroup
from .harness import VerdictReport, run_corpus
from .perm import CycleType, Permutation, parse_perm
from .structure import (
    centralizer,
    conjugacy_classes,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    p_core,
    solvable_radical,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "CycleType",
    "parse_perm",
    "PermGroup",
    "build",
    "parse_spec",
    "load_manifest",
    "default_manifest",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "centralizer",
    "conjugacy_classes",
    "solvable_radical",
    "p_core",
    "element_graph",
    "class_graph",
    "expanded_graph",
    "VerdictReport",
    "run_corpus",
    "CapExceeded",
    "PermSolvError",
]
