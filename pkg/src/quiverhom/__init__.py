"""Exact-arithmetic Hom/Ext calculator for quiver representations.

The package computes the two-term complex differential attached to an
ordered pair of representations, reads off Hom and Ext^1 dimensions from
its rank, constructs exceptional representations for real roots, and ships
verification suites that sweep whole families of quivers for maximal-rank
and Ext-vanishing behaviour.  All arithmetic is exact: a prime field by
default, the rationals on request.
"""
from .linalg import (ExactMatrix, FieldSpec, is_max_rank, kernel_basis,
                     rank)
from .quiver import (Arrow, DimVector, Quiver, QuiverParseError, dual_quiver,
                     euler_form, parse_quiver, restrict, serialize_quiver,
                     symmetrized_form)
from .rep import (HomReport, Representation, dual_rep, gl_act, hom_differential,
                  hom_report, is_exceptional, is_ext_nontrivial_couple,
                  random_rep, rep_from_dict, rep_from_json, rep_to_dict,
                  rep_to_json, thin_rep, zero_rep)
from .roots import (classify_root, delta_profile, extending_vertices,
                    hill_arithmetic_checks, is_hill, is_real_root, is_thin,
                    minimal_imaginary_root, positive_roots, real_roots_extended)
from .shapes import (GraphShape, StarData, all_orientations, classify_graph,
                     named_quiver, orient, path_graph, random_orientations,
                     standard_graph, star_graph)
from .exceptional import (ConstructionConfig, ConstructionFailure, MaxRankScan,
                          PairTable, arrow_ranks_max, construct_exceptional,
                          construct_for_roots, pair_table, scan_max_rank)
from .catalog import (CatalogEntry, catalog_entries, catalog_table,
                      reoriented_square_pair, reoriented_square_quiver,
                      square_quiver, triangle_quiver, verify_couples,
                      verify_rp_properties, verify_single_degree)
from .verify import (SuiteResult, duality_spotcheck, expected_positive_roots,
                     hom_dim_bruteforce, run_catalog, run_dynkin,
                     run_euler_fuzz, run_extended, run_hill)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "CatalogEntry", "ConstructionConfig", "ConstructionFailure",
    "DimVector", "ExactMatrix", "FieldSpec", "GraphShape", "HomReport",
    "MaxRankScan", "PairTable", "Quiver", "QuiverParseError", "Representation",
    "StarData", "SuiteResult", "all_orientations", "arrow_ranks_max",
    "catalog_entries", "catalog_table", "classify_graph", "classify_root",
    "construct_exceptional", "construct_for_roots", "delta_profile",
    "dual_quiver", "dual_rep", "duality_spotcheck", "euler_form",
    "expected_positive_roots", "extending_vertices", "gl_act",
    "hill_arithmetic_checks", "hom_differential", "hom_dim_bruteforce",
    "hom_report", "is_exceptional", "is_ext_nontrivial_couple", "is_hill",
    "is_max_rank", "is_real_root", "is_thin", "kernel_basis",
    "minimal_imaginary_root", "named_quiver", "orient", "pair_table",
    "parse_quiver", "path_graph", "positive_roots",
    "random_orientations", "random_rep", "rank", "real_roots_extended",
    "reoriented_square_pair", "reoriented_square_quiver", "rep_from_dict",
    "rep_from_json", "rep_to_dict", "rep_to_json", "restrict", "run_catalog",
    "run_dynkin", "run_euler_fuzz", "run_extended", "run_hill",
    "scan_max_rank", "serialize_quiver", "square_quiver", "standard_graph",
    "star_graph", "symmetrized_form", "thin_rep", "triangle_quiver",
    "verify_couples", "verify_rp_properties", "verify_single_degree",
    "zero_rep",
]
