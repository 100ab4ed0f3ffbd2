"""Spectral analysis of general (non-uniform) hypergraphs."""

from .errors import HspecError, InputError, NotConverged
from .hypercore import (
    Hypergraph,
    VertexTypeProfile,
    complete_r_graph,
    connected_components,
    edge_types,
    random_r_graph,
    validate,
    vertex_profile,
)
from .comb import alpha, binom
from .tensor import AdjacencyOperator
from .spectral import PowerIterationConfig, SpectralResult, spectral_radius
from .lagrange import evaluate_L, maximize_L, predicted_L
from .clique import CliqueResult, clique_number, is_clique
from .bounds import BoundRecord, BoundReport, ReportConfig, full_report


__version__ = "0.1.0"
