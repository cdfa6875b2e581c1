"""Binomial edge ideals, weakly closed graphs and F-purity in positive characteristic."""

from .bei import (
    BinomialEdgeIdeal,
    CutSet,
    PathPacking,
    PrimeComponent,
    bei,
    cut_sets,
    ideal_height,
    is_unmixed,
    koenig_fpure_expected,
    koenig_type,
    minimal_primes,
    non_fpurity_certificate,
    verify_colon_formula,
)
from .fedder import FedderReport, fedder, fedder_is_fpure, is_fpure
from .graphs import Graph, GraphInputError, build_graph, complement
from .kernels import BACKEND as KERNEL_BACKEND
from .recognition import find_weakly_closed_labeling, is_chordal, is_weakly_closed

__version__ = "0.1.0"

__all__ = [
    "BinomialEdgeIdeal", "CutSet", "PathPacking", "PrimeComponent", "bei", "cut_sets", "ideal_height",
    "is_unmixed", "koenig_fpure_expected", "koenig_type", "minimal_primes", "non_fpurity_certificate",
    "verify_colon_formula", "FedderReport", "fedder", "fedder_is_fpure", "is_fpure", "Graph",
    "GraphInputError", "build_graph", "complement", "KERNEL_BACKEND", "find_weakly_closed_labeling",
    "is_chordal", "is_weakly_closed", "__version__",
]
