from fractions import Fraction
from typing import Iterable, Mapping

from wickenum.algebra.exact_poly import ExactPoly, variable_sort_key
from wickenum.common_domain.engine_errors import BadConstantTerm, NonzeroConstantTerm, UntruncatedSeries
from wickenum.common_util.exact_codec import ExactCodec
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)

TruncationBounds = dict[tuple[str, ...], int]


def normalize_bounds(bounds: Mapping[str | Iterable[str], int] | None) -> TruncationBounds:
    """A bare variable name bounds that variable alone; a collection of names bounds the group's total degree."""
    normalized: TruncationBounds = {}
    for group, limit in (bounds or {}).items():
        if limit < 0:
            raise ValueError(f"Truncation bound for {group} must be nonnegative, got {limit}")
        key = (group,) if isinstance(group, str) else tuple(sorted(set(group), key=variable_sort_key))
        normalized[key] = min(limit, normalized.get(key, limit))
    return normalized


def merge_bounds(first: TruncationBounds, second: TruncationBounds) -> TruncationBounds:
    merged = dict(first)
    for group, limit in second.items():
        merged[group] = min(limit, merged.get(group, limit))
    return merged


class TruncatedSeries:
    """
    Formal power series kept as an ExactPoly together with its truncation bounds. Every result is truncated eagerly.
    """

    __slots__ = ("payload", "truncation")

    def __init__(self, payload: ExactPoly, truncation: Mapping[str | Iterable[str], int] | None = None):
        self.truncation = normalize_bounds(truncation)
        self.payload = payload.truncate(self.truncation)

    def _with(self, payload: ExactPoly, truncation: TruncationBounds) -> "TruncatedSeries":
        return TruncatedSeries(payload, truncation)

    def _split(self, other) -> tuple[ExactPoly, TruncationBounds]:
        if isinstance(other, TruncatedSeries):
            return other.payload, merge_bounds(self.truncation, other.truncation)
        if isinstance(other, (ExactPoly, int, Fraction)):
            return ExactPoly.one() * other, self.truncation
        return None, self.truncation

    def __add__(self, other) -> "TruncatedSeries":
        payload, bounds = self._split(other)
        if payload is None:
            return NotImplemented
        return self._with(self.payload + payload, bounds)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self._with(-self.payload, self.truncation)

    def __sub__(self, other) -> "TruncatedSeries":
        payload, bounds = self._split(other)
        if payload is None:
            return NotImplemented
        return self._with(self.payload - payload, bounds)

    def __mul__(self, other) -> "TruncatedSeries":
        payload, bounds = self._split(other)
        if payload is None:
            return NotImplemented
        return self._with(self.payload.mul_truncated(payload, bounds), bounds)

    __rmul__ = __mul__

    def scaled(self, factor) -> "TruncatedSeries":
        return self._with(self.payload.scaled(factor), self.truncation)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.truncation == other.truncation and self.payload == other.payload
        if isinstance(other, (ExactPoly, int, Fraction)):
            return self.payload == other
        return NotImplemented

    __hash__ = None

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        return self.payload.coefficient(monomial)

    def extract(self, partial_monomial: Mapping[str, int]) -> ExactPoly:
        return self.payload.extract(partial_monomial)

    def __repr__(self):
        return f"TruncatedSeries({self.payload}, bounds={self.truncation})"


def _require_controlled(series: TruncatedSeries) -> None:
    # every nonconstant term must have positive degree in some bounded group, and no group may go negative
    payload = series.payload
    positions = payload.registry.positions
    groups = [tuple(positions[name] for name in group if name in positions) for group in series.truncation]
    for named, _ in payload.items():
        if not named:
            continue
        exponents = [0] * len(payload.registry.names)
        for name, exponent in named.items():
            exponents[positions[name]] = exponent
        degrees = [sum(exponents[position] for position in group) for group in groups]
        if any(degree < 0 for degree in degrees) or not any(degree > 0 for degree in degrees):
            raise UntruncatedSeries(ExactCodec.encode_monomial(named), dict(series.truncation))


def series_exp(series: TruncatedSeries) -> TruncatedSeries:
    constant = series.payload.constant_term
    if constant != 0:
        raise NonzeroConstantTerm(ExactCodec.encode_rational(constant))
    _require_controlled(series)
    result = TruncatedSeries(ExactPoly.one(), series.truncation)
    power = result
    order = 0
    while True:
        order += 1
        power = (power * series).scaled(Fraction(1, order))
        if power.payload.is_zero:
            break
        result = result + power
    logger.debug(f"series_exp used {order - 1} nonvanishing powers")
    return result


def series_log(series: TruncatedSeries) -> TruncatedSeries:
    constant = series.payload.constant_term
    if constant != 1:
        raise BadConstantTerm(ExactCodec.encode_rational(constant))
    shifted = series - 1
    _require_controlled(shifted)
    result = TruncatedSeries(ExactPoly.zero(), series.truncation)
    power = TruncatedSeries(ExactPoly.one(), series.truncation)
    order = 0
    while True:
        order += 1
        power = power * shifted
        if power.payload.is_zero:
            break
        sign = 1 if order % 2 else -1
        result = result + power.scaled(Fraction(sign, order))
    logger.debug(f"series_log used {order - 1} nonvanishing powers")
    return result


def ring_arithmetic(a, b, op: str):
    """
    Dispatches add, sub, mul and neg. The result is a TruncatedSeries whenever either operand is one.
    """
    if op == "neg":
        return -a
    if isinstance(b, TruncatedSeries) and not isinstance(a, TruncatedSeries):
        a = TruncatedSeries(a, b.truncation)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unsupported ring operation '{op}'")
