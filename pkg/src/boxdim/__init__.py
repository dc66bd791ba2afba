"""Boxicity, cubicity and their reductions, with brute-force oracles."""

from .approx import (ApproxParams, DisconnectedGraph, approx_box, approx_box_parts, approx_cube,
                     augment_supergraph, partition_vertices)
from .errors import BoxdimError, CapabilityError, DimensionExceeded, InvalidRepresentation, ParseError
from .exact import exact_box_large_clique
from .graph import Graph, clique_residual_split, complement, format_graph, min_vertex_cover, parse_graph
from .intervals import (IntervalRep, Verdict, format_box_rep, is_nice, nicefy, parse_box_rep, realize,
                        saturate_to_clique, validate_box_rep)
from .nice import EndpointOrder, enumerate_nice_supergraphs, separation_family
from .oracle import (linear_extensions, oracle_boxicity, oracle_chain_cover, oracle_cubicity,
                     oracle_poset_dimension)
from .reductions import (BipartiteGraph, Poset, chain_cover_approx, chain_graphs_from_box_rep,
                         check_chain_cover, kimble_split, parse_bipartite, parse_poset, poset_bipartite,
                         posetdim_approx)
from .unit import (UnitIntervalRep, decompose_interval_to_units, format_cube_rep, parse_cube_rep,
                   unit_interval_rep, validate_cube_rep)

__version__ = "0.1.0"

__all__ = [
    "ApproxParams",
    "DisconnectedGraph",
    "approx_box",
    "approx_box_parts",
    "approx_cube",
    "augment_supergraph",
    "partition_vertices",
    "BoxdimError",
    "CapabilityError",
    "DimensionExceeded",
    "InvalidRepresentation",
    "ParseError",
    "exact_box_large_clique",
    "Graph",
    "clique_residual_split",
    "complement",
    "format_graph",
    "min_vertex_cover",
    "parse_graph",
    "IntervalRep",
    "Verdict",
    "format_box_rep",
    "is_nice",
    "nicefy",
    "parse_box_rep",
    "realize",
    "saturate_to_clique",
    "validate_box_rep",
    "EndpointOrder",
    "enumerate_nice_supergraphs",
    "separation_family",
    "linear_extensions",
    "oracle_boxicity",
    "oracle_chain_cover",
    "oracle_cubicity",
    "oracle_poset_dimension",
    "BipartiteGraph",
    "Poset",
    "chain_cover_approx",
    "chain_graphs_from_box_rep",
    "check_chain_cover",
    "kimble_split",
    "parse_bipartite",
    "parse_poset",
    "poset_bipartite",
    "posetdim_approx",
    "UnitIntervalRep",
    "decompose_interval_to_units",
    "format_cube_rep",
    "parse_cube_rep",
    "unit_interval_rep",
    "validate_cube_rep",
]
