"""Exact degree resistance distance and Kirchhoff invariants of cactus graphs."""

from .blocks import BlockDecomposition, block_decomposition, cactus_check
from .canon import CanonicalForm, are_isomorphic, canonical_form
from .enumeration import CactusCorpus, brute_force_cacti_oracle, enumerate_cacti
from .exact import Rational, RationalMatrix, determinant_exact, format_rational, solve_exact
from .families import (
    EndCycle,
    Family,
    build_cycle_pendant,
    build_g0,
    build_g3,
    build_g4,
    build_g5,
    build_g8,
    build_g10,
    closed_forms_cycle,
    closed_forms_cycle_pendant,
    corollary_closed_forms,
    find_end_cycles,
    g0_closed_form,
    lemma7_transform,
    sigma_transform,
)
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph, is_connected
from .harness import RankedEntry, VerificationOutcome, rank_extremal, run_suite
from .invariants import (
    InvariantReport,
    d_v,
    degree_distance,
    degree_resistance_distance,
    dr_via_cut_decomposition,
    invariant_report,
    kf_v,
    kirchhoff_index,
    wiener,
)
from .resistance import (
    ResistanceMatrix,
    effective_resistance,
    kirchhoff_spectral_estimate,
    laplacian,
    resistance_matrix,
    spanning_tree_count,
)

__version__ = "0.1.0"
