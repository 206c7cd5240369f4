from wickenum.common_domain.enum.convergence_verdict import ConvergenceVerdict
from wickenum.common_domain.enum.graph_filter import GraphFilter
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.enum.output_format import OutputFormat
from wickenum.common_domain.enum.split_choice import SplitChoice
from wickenum.common_domain.enum.verification_status import VerificationStatus

from wickenum.common_domain.messages.ErrorMessages import ErrorMessages
from wickenum.common_domain.validation_error import WickenumValidationError
from wickenum.common_domain.engine_errors import (
    WickenumEngineException,
    ScaleExceeded,
    NonzeroConstantTerm,
    BadConstantTerm,
    UnknownVariable,
    LaurentExponent,
    UntruncatedSeries,
    NotConnected,
    InvalidCover,
    OddEulerDefect,
)
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_domain.verification_report import CoefficientMismatch, VerificationReport
from wickenum.common_domain.run_config import RunConfig

from wickenum.common_util.exact_codec import ExactCodec
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.common_util.trace_level_logger import TRACE_LEVEL

from wickenum.algebra.exact_poly import ExactPoly, VariableRegistry, entry_symbol, falling_factorial, binomial_in
from wickenum.algebra.truncated_series import TruncatedSeries, series_exp, series_log, ring_arithmetic

from wickenum.wick.edge_multiset import EdgeMultiset, Pairing
from wickenum.wick.pairing_enumerator import enumerate_pairings, count_pairings, wick_value
from wickenum.wick.wick_integrator import integrate, integrate_symbolic, specialize_dimension

from wickenum.digraph.edge_set import EdgeSet, ClosedTrail, CycleDecomposition
from wickenum.digraph.eulerian_enumerator import is_eulerian, components, enumerate_eulerian, enumerate_symmetric
from wickenum.digraph.trail_decomposer import (
    transition_cycle_counts,
    trail_decomposition_r_values,
    enumerate_trail_decompositions,
)
from wickenum.digraph.cycle_decomposer import enumerate_cycle_decompositions, count_cycle_decompositions, is_even

from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.integrands.integrand_builder import (
    build_omega,
    build_zeta,
    build_eta,
    specialize_eta,
    build_xi,
    trace_power,
    build_psi_truncated,
)
from wickenum.integrands.integrand_integrator import build_integrand, integrate_spec

from wickenum.census.simple_graph import SimpleGraph
from wickenum.census.graph_canonizer import canonical_form, automorphisms, automorphism_order
from wickenum.census.graph_generator import generate_graphs, generate_graphs_up_to, generate_nimple_by_edges
from wickenum.census.cover_enumerator import (
    DirectedCycleDoubleCover,
    DcdcOrbit,
    enumerate_tdc,
    enumerate_dcdc,
    aut_order_with_dcdc,
    dcdc_orbits,
)
from wickenum.census.planarity import KuratowskiCertificate, is_planar, faces_if_planar, kuratowski_certificate
from wickenum.census.planar_graph_oracle import p_distribution, p_oracle, p_total
from wickenum.census.census_rhs import rhs_main7, rhs_main2
from wickenum.census.census_writer import CensusEntry, CensusWriter, census_entry

from wickenum.fatgraph.fat_graph import FatGraph, Multigraph, contract
from wickenum.fatgraph.relevant_pair_enumerator import RelevantClass, enumerate_relevant, rhs_main3
from wickenum.fatgraph.map_counter import map_count, map_genus_distribution, verify_bipz

from wickenum.verification.verification_report_builder import VerificationReportBuilder

from wickenum.iharaselberg.transition_digraph import TransitionDigraph, build_dprime
from wickenum.iharaselberg.walk_enumerator import ClosedWalkD, enumerate_aperiodic_walks
from wickenum.iharaselberg.rotation_number import rotation_number
from wickenum.iharaselberg.selberg_product import truncated_product, verify_prr, observation_bijection
from wickenum.iharaselberg.necklaces import (
    lyndon_words,
    necklace_count,
    necklace_count_formula,
    coin_lemma_check,
    witt_check,
)

from wickenum.verification.planar_convergence import PlanarConvergenceHarness
from wickenum.verification.identity_verifier import IdentityVerifier
