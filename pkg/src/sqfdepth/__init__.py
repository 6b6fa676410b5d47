"""Squarefree powers of monomial ideals and their normalized depth function.

Depth is computed from first principles: multigraded Betti numbers of S/I
over a prime field via Hochster's formula, projective dimension as the top
nonzero homological degree, and depth by Auslander-Buchsbaum.
"""

from .betti import (
    BettiTable,
    DepthReport,
    GProfile,
    betti_table,
    depth,
    depth_report,
    g_profile,
    proj_dim,
    regularity,
)
from .errors import (
    AmbientMismatch,
    DegenerateSample,
    InvalidExponent,
    InvalidFamilyParameter,
    InvalidGenerator,
    NotATree,
    ParseError,
    SpaceTooLarge,
    SqfdepthError,
    ZeroIdeal,
)
from .family import FamilyReport, build_family, verify_theorem
from .graphs import (
    Graph,
    edge_ideal,
    independence_domination,
    is_tree,
    maximal_independent_sets,
    minimal_vertex_covers,
    random_tree,
    tree_depth_via_lemma,
    tree_from_pruefer,
)
from .homology import FieldSpec, InducedComplex, induced_faces, reduced_homology_dims
from .ideals import Ideal, Monomial, minimize_generators
from .search import Finding, ScanResult, SearchConfig, random_ideal, scan

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BettiTable",
    "DegenerateSample",
    "DepthReport",
    "FamilyReport",
    "FieldSpec",
    "Finding",
    "GProfile",
    "Graph",
    "Ideal",
    "InducedComplex",
    "InvalidExponent",
    "InvalidFamilyParameter",
    "InvalidGenerator",
    "Monomial",
    "NotATree",
    "ParseError",
    "ScanResult",
    "SearchConfig",
    "SpaceTooLarge",
    "SqfdepthError",
    "ZeroIdeal",
    "betti_table",
    "build_family",
    "depth",
    "depth_report",
    "edge_ideal",
    "g_profile",
    "independence_domination",
    "induced_faces",
    "is_tree",
    "maximal_independent_sets",
    "minimal_vertex_covers",
    "minimize_generators",
    "proj_dim",
    "random_ideal",
    "random_tree",
    "reduced_homology_dims",
    "regularity",
    "scan",
    "tree_depth_via_lemma",
    "tree_from_pruefer",
    "verify_theorem",
]
