"""F-index of total transformation graphs: indices, transforms, closed forms and a verifier."""

from .formats import parse_graph6, to_graph6
from .formulas import aux_edge_count_formula, aux_m1_formula, f_complement_formula, f_formula
from .generators import generate
from .graph import EdgeLabel, Graph, GraphError, complement, graph_from_edge_list, graphs_equal
from .indices import IndexSet, edge_form_check, index_set
from .transforms import (
    DegreePrediction,
    TransformKind,
    predicted_degrees,
    transform,
    verify_complement_pairing,
)
from .verify import CorpusReport, CorpusSpec, VerificationReport, oracle_f, verify_corpus, verify_graph

__all__ = [
    "CorpusReport",
    "CorpusSpec",
    "DegreePrediction",
    "EdgeLabel",
    "Graph",
    "GraphError",
    "IndexSet",
    "TransformKind",
    "VerificationReport",
    "aux_edge_count_formula",
    "aux_m1_formula",
    "complement",
    "edge_form_check",
    "f_complement_formula",
    "f_formula",
    "generate",
    "graph_from_edge_list",
    "graphs_equal",
    "index_set",
    "oracle_f",
    "parse_graph6",
    "predicted_degrees",
    "to_graph6",
    "transform",
    "verify_complement_pairing",
    "verify_corpus",
    "verify_graph",
]
