from fractions import Fraction

from wickenum.algebra.exact_poly import ExactPoly, VariableRegistry, binomial_in, parse_entry_symbol
from wickenum.common_util.trace_level_logger import get_logger
from wickenum.wick.pairing_enumerator import count_sorted_pairings

logger = get_logger(__name__)


class _EntryLayout:
    """Splits a registry into matrix-entry slots and scalar slots, and maps scalars into the output registry."""

    def __init__(self, registry: VariableRegistry):
        self.entry_positions = registry.entry_positions
        self.entry_pairs = [parse_entry_symbol(registry.names[position]) for position in self.entry_positions]
        entry_set = set(self.entry_positions)
        self.scalar_positions = [position for position in range(len(registry.names)) if position not in entry_set]
        scalar_names = [registry.names[position] for position in self.scalar_positions]
        self.output_registry = VariableRegistry.of(set(scalar_names) | {"N"})
        self.scalar_targets = [self.output_registry.positions[name] for name in scalar_names]
        self.n_position = self.output_registry.positions["N"]

    def entry_items(self, exponents: tuple[int, ...]) -> list[tuple[int, int]]:
        items = []
        for pair, position in zip(self.entry_pairs, self.entry_positions):
            if exponents[position]:
                items.extend([pair] * exponents[position])
        return items

    def scalar_vector(self, exponents: tuple[int, ...], entry_degree: int) -> tuple[int, ...]:
        vector = [0] * len(self.output_registry.names)
        for source, target in zip(self.scalar_positions, self.scalar_targets):
            vector[target] = exponents[source]
        vector[self.n_position] -= entry_degree // 2
        return tuple(vector)


def _accumulate(bucket: dict, key: tuple[int, ...], value: Fraction) -> None:
    total = bucket.get(key, 0) + value
    if total:
        bucket[key] = total
    else:
        bucket.pop(key, None)


def integrate(integrand: ExactPoly) -> ExactPoly:
    """
    Gaussian integral of a polynomial in matrix entries: each entry monomial is replaced by its Wick value
    (pairing count times N^(-degree/2)); scalar variables pass through.
    """
    layout = _EntryLayout(integrand.registry)
    result: dict[tuple[int, ...], Fraction] = {}
    for exponents, coefficient in integrand.terms.items():
        items = layout.entry_items(exponents)
        if len(items) % 2:
            continue
        count = count_sorted_pairings(tuple(sorted(items))) if items else 1
        if count:
            _accumulate(result, layout.scalar_vector(exponents, len(items)), coefficient * count)
    logger.debug(f"integrated {len(integrand)} terms into {len(result)}")
    return ExactPoly(layout.output_registry, result).restricted_to_used()


def integrate_symbolic(integrand: ExactPoly, reference_dimension: int) -> ExactPoly:
    """
    Integral with N kept symbolic, for a label-invariant integrand built at a reference dimension K.

    Only terms whose index support is exactly {1..k} are integrated, each standing for its C(N, k) relabelled
    copies. The result is exact for every term that involves at most K indices.
    """
    layout = _EntryLayout(integrand.registry)
    by_support: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for exponents, coefficient in integrand.terms.items():
        items = layout.entry_items(exponents)
        if len(items) % 2:
            continue
        support = {index for pair in items for index in pair}
        if support and max(support) != len(support):
            continue
        if len(support) > reference_dimension:
            raise ValueError(f"Term uses {len(support)} indices, beyond reference dimension {reference_dimension}")
        count = count_sorted_pairings(tuple(sorted(items))) if items else 1
        if count:
            bucket = by_support.setdefault(len(support), {})
            _accumulate(bucket, layout.scalar_vector(exponents, len(items)), coefficient * count)
    result = ExactPoly.zero()
    for support_size in sorted(by_support):
        result = result + ExactPoly(layout.output_registry, by_support[support_size]) * binomial_in("N", support_size)
    return result.restricted_to_used()


def specialize_dimension(poly: ExactPoly, n: int) -> ExactPoly:
    return poly.specialize("N", n)
