"""A_alpha spectra of joined unions of graphs and of power graphs of finite groups."""

from .graph import (Graph, JoinedUnionSpec, build_basic, degree_info, disjoint_union, join,
                    joined_union, read_edge_list, write_edge_list)
from .spectra import (Spectrum, a_alpha_matrix, eig_quotient, eig_symmetric, multiplicity_of,
                      spectra_match, spectrum_of)
from .closed_forms import (SpectralPrediction, predict_complete_multipartite, predict_join_three,
                           predict_join_two, predict_joined_union, predict_named,
                           predict_power_cyclic, predict_power_group)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "JoinedUnionSpec",
    "build_basic",
    "degree_info",
    "disjoint_union",
    "join",
    "joined_union",
    "read_edge_list",
    "write_edge_list",
    "Spectrum",
    "a_alpha_matrix",
    "eig_quotient",
    "eig_symmetric",
    "multiplicity_of",
    "spectra_match",
    "spectrum_of",
    "SpectralPrediction",
    "predict_complete_multipartite",
    "predict_join_three",
    "predict_join_two",
    "predict_joined_union",
    "predict_named",
    "predict_power_cyclic",
    "predict_power_group",
]
