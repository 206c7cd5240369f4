from wickenum.algebra.exact_poly import ExactPoly
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.integrands.integrand_builder import (
    build_eta,
    build_omega,
    build_psi_truncated,
    build_xi,
    build_zeta,
)
from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.wick.wick_integrator import integrate, integrate_symbolic

logger = get_logger(__name__)


def build_integrand(spec: IntegrandSpec) -> ExactPoly:
    """
    The integrand an IntegrandSpec describes. In symbolic mode it is built at the reference dimension, keeping only
    carriers whose support is an initial segment 1..k.
    """
    symbolic = spec.n is None
    n = spec.resolved_reference_dimension() if symbolic else spec.n
    match spec.kind:
        case IntegrandKind.OMEGA_R:
            return build_omega(n, spec.r, spec.max_edges, spec.pairable_only, symbolic)
        case IntegrandKind.ZETA:
            return build_zeta(n, spec.max_edges, spec.pairable_only, symbolic)
        case IntegrandKind.ETA:
            return build_eta(n, spec.max_edges, spec.pairable_only, symbolic)
        case IntegrandKind.XI:
            return build_xi(n, spec.max_edges, spec.pairable_only, symbolic)
        case IntegrandKind.PSI:
            return build_psi_truncated(n, spec.degrees, spec.max_z_order, spec.max_edges)
    raise ValueError(f"Unsupported integrand kind {spec.kind}")


def integrate_spec(spec: IntegrandSpec) -> ExactPoly:
    """Gaussian integral of the integrand; no matrix entries remain, N stays symbolic."""
    integrand = build_integrand(spec)
    with logger.trace_block(f"integrating {spec.kind} ({len(integrand)} terms)"):
        if spec.n is None:
            return integrate_symbolic(integrand, spec.resolved_reference_dimension())
        return integrate(integrand)
