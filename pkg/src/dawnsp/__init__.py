"""Unweighted shortest paths via Boolean frontier operations over CSR/CSC."""

from .analysis import (
    MemoryModel,
    WccSummary,
    eccentricity,
    memory_model,
    weakly_connected_components,
)
from .engine import (
    ApspResult,
    FrontierState,
    SsspResult,
    apsp,
    msssp,
    sssp,
    sssp_bovm,
    sssp_sovm,
)
from .errors import (
    CapacityError,
    ConfigurationError,
    DawnError,
    DomainError,
    GraphBoundsError,
    GraphFormatError,
    UnsupportedFormatError,
)
from .graph import CscGraph, CsrGraph, EdgeList, build_csr, from_edges, transpose
from .io import load_csr, load_edge_list, load_graph, load_matrix_market, save_csr

__version__ = "0.1.0"

__all__ = [
    "ApspResult",
    "CapacityError",
    "ConfigurationError",
    "CscGraph",
    "CsrGraph",
    "DawnError",
    "DomainError",
    "EdgeList",
    "FrontierState",
    "GraphBoundsError",
    "GraphFormatError",
    "MemoryModel",
    "SsspResult",
    "UnsupportedFormatError",
    "WccSummary",
    "apsp",
    "build_csr",
    "eccentricity",
    "from_edges",
    "load_csr",
    "load_edge_list",
    "load_graph",
    "load_matrix_market",
    "memory_model",
    "msssp",
    "save_csr",
    "sssp",
    "sssp_bovm",
    "sssp_sovm",
    "transpose",
    "weakly_connected_components",
]
