"""Information-content complexity measures of undirected graphs."""

from __future__ import annotations

from .canon import automorphism_order, canonical_form, canonical_graph, is_isomorphic, omega
from .codec import Description, all_descriptions, decode, encode
from .ensemble import (
    EnumerationResult, ExperimentRow, ba_random, correlate, enumerate_graphs, er_random,
    sparse_sweep_experiment, write_csv,
)
from .graph_core import Graph, complement, degree_sequence, edge_index, from_edge_list
from .measures import (
    ComplexityReport, Method, complexity, complexity_report, compression_error,
    derived_entropy, method_selector, offdiagonal_complexity, zcomplexity,
    zcomplexity_class_sweep,
)
from .rle_compressor import (
    CompressedDescription, Variant, compress, decompress, empty_full_closed_form, zeta,
)

__version__ = "0.1.0"

__all__ = [
    "CompressedDescription", "ComplexityReport", "Description", "EnumerationResult",
    "ExperimentRow", "Graph", "Method", "Variant", "all_descriptions", "automorphism_order",
    "ba_random", "canonical_form", "canonical_graph", "complement", "complexity",
    "complexity_report", "compress", "compression_error", "correlate", "decode",
    "decompress", "degree_sequence", "derived_entropy", "edge_index", "empty_full_closed_form",
    "encode", "enumerate_graphs", "er_random", "from_edge_list", "is_isomorphic",
    "method_selector", "offdiagonal_complexity", "omega", "sparse_sweep_experiment",
    "write_csv", "zcomplexity", "zcomplexity_class_sweep", "zeta",
]
