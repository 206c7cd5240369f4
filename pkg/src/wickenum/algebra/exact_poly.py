import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping

from wickenum.common_domain.engine_errors import LaurentExponent, UnknownVariable
from wickenum.common_util.exact_codec import ExactCodec

LAURENT_VARIABLES = frozenset({"N", "y"})
EXPONENT_LIMIT = 2**31

_SCALAR_RANK = {"N": 0, "y": 1, "z": 2, "x": 3}
_ENTRY_PATTERN = re.compile(r"^M_(\d+)_(\d+)$")
_INDEXED_PATTERN = re.compile(r"^([A-Za-z]+)_(\d+)$")


def entry_symbol(i: int, j: int) -> str:
    return f"M_{i}_{j}"


@lru_cache(maxsize=None)
def parse_entry_symbol(name: str) -> tuple[int, int] | None:
    match = _ENTRY_PATTERN.match(name)
    if match is None:
        return None
    return int(match.group(1)), int(match.group(2))


@lru_cache(maxsize=None)
def variable_sort_key(name: str) -> tuple:
    # scalars N, y, z, x first; indexed scalars (z_2, ...) next; matrix entries last, by index pair
    if name in _SCALAR_RANK:
        return 0, _SCALAR_RANK[name], "", 0, 0
    entry = parse_entry_symbol(name)
    if entry is not None:
        return 2, 0, "", entry[0], entry[1]
    match = _INDEXED_PATTERN.match(name)
    if match is not None:
        return 1, 0, match.group(1), int(match.group(2)), 0
    return 1, 1, name, 0, 0


class VariableRegistry:
    """
    Ordered set of variable names. Registries are interned: always obtain them through VariableRegistry.of().
    """

    __slots__ = ("names", "positions", "non_laurent_positions", "entry_positions")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(set(names), key=variable_sort_key))
        self.positions = {name: index for index, name in enumerate(self.names)}
        self.non_laurent_positions = tuple(
            index for index, name in enumerate(self.names) if name not in LAURENT_VARIABLES
        )
        self.entry_positions = tuple(
            index for index, name in enumerate(self.names) if parse_entry_symbol(name) is not None
        )

    @staticmethod
    def of(names: Iterable[str] = ()) -> "VariableRegistry":
        return _interned_registry(frozenset(names))

    def union(self, other: "VariableRegistry") -> "VariableRegistry":
        if self is other:
            return self
        return _registry_union(self, other)

    def without(self, names: Iterable[str]) -> "VariableRegistry":
        return VariableRegistry.of(set(self.names) - set(names))

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.positions

    def __eq__(self, other):
        return isinstance(other, VariableRegistry) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableRegistry({list(self.names)})"


@lru_cache(maxsize=None)
def _interned_registry(names: frozenset) -> VariableRegistry:
    return VariableRegistry(names)


@lru_cache(maxsize=4096)
def _registry_union(first: VariableRegistry, second: VariableRegistry) -> VariableRegistry:
    return VariableRegistry.of(set(first.names) | set(second.names))


@lru_cache(maxsize=4096)
def _embedding(source: VariableRegistry, target: VariableRegistry) -> tuple[int, ...]:
    return tuple(target.positions[name] for name in source.names)


def _embed_terms(terms: dict, source: VariableRegistry, target: VariableRegistry) -> dict:
    if source is target:
        return terms
    mapping = _embedding(source, target)
    width = len(target.names)
    embedded = {}
    for exponents, coefficient in terms.items():
        widened = [0] * width
        for index, exponent in enumerate(exponents):
            widened[mapping[index]] = exponent
        embedded[tuple(widened)] = coefficient
    return embedded


def _canonical_order_key(exponents: tuple[int, ...]) -> tuple:
    # graded lexicographic over the registry order
    return sum(exponents), tuple(-exponent for exponent in exponents)


class ExactPoly:
    """
    Multivariate Laurent polynomial with exact rational coefficients. Immutable.

    Terms map dense exponent tuples (one slot per registry variable) to nonzero Fractions. Only the variables in
    LAURENT_VARIABLES may carry negative exponents.
    """

    __slots__ = ("_registry", "_terms")

    def __init__(self, registry: VariableRegistry, terms: Mapping[tuple[int, ...], object] | None = None):
        self._registry = registry
        self._terms = {}
        if terms:
            arity = len(registry.names)
            for exponents, coefficient in terms.items():
                exponents = tuple(exponents)
                if len(exponents) != arity:
                    raise ValueError(f"Exponent vector {exponents} does not match registry arity {arity}")
                _check_exponents(registry, exponents)
                coefficient = Fraction(coefficient)
                if coefficient:
                    self._terms[exponents] = self._terms.get(exponents, 0) + coefficient
            self._terms = {exponents: value for exponents, value in self._terms.items() if value}

    @classmethod
    def _trusted(cls, registry: VariableRegistry, terms: dict) -> "ExactPoly":
        poly = cls.__new__(cls)
        poly._registry = registry
        poly._terms = terms
        return poly

    # ---- constructors -------------------------------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls._trusted(VariableRegistry.of(), {})

    @classmethod
    def one(cls) -> "ExactPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value) -> "ExactPoly":
        value = Fraction(value)
        return cls._trusted(VariableRegistry.of(), {(): value} if value else {})

    @classmethod
    def variable(cls, name: str) -> "ExactPoly":
        return cls.monomial({name: 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coefficient=1) -> "ExactPoly":
        registry = VariableRegistry.of(exponents.keys())
        vector = tuple(exponents[name] for name in registry.names)
        return cls(registry, {vector: coefficient})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], object]]) -> "ExactPoly":
        terms = list(terms)
        names = set()
        for exponents, _ in terms:
            names.update(exponents.keys())
        registry = VariableRegistry.of(names)
        collected = {}
        for exponents, coefficient in terms:
            vector = [0] * len(registry.names)
            for name, exponent in exponents.items():
                vector[registry.positions[name]] = exponent
            vector = tuple(vector)
            collected[vector] = collected.get(vector, 0) + Fraction(coefficient)
        return cls(registry, collected)

    @classmethod
    def from_json_terms(cls, json_terms: list[dict]) -> "ExactPoly":
        return cls.from_terms(
            (term["exps"], ExactCodec.decode_rational(term["coeff"])) for term in json_terms
        )

    # ---- inspection ---------------------------------------------------------------------------------------------

    @property
    def registry(self) -> VariableRegistry:
        return self._registry

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self._registry.names), Fraction(0))

    @property
    def is_constant(self) -> bool:
        zero_vector = (0,) * len(self._registry.names)
        return all(exponents == zero_vector for exponents in self._terms)

    @property
    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for exponents in self._terms:
            used.update(self._registry.names[index] for index, exponent in enumerate(exponents) if exponent)
        return tuple(sorted(used, key=variable_sort_key))

    def __len__(self):
        return len(self._terms)

    def items(self) -> list[tuple[dict[str, int], Fraction]]:
        """Terms in canonical order, exponents given by name with zero exponents omitted."""
        names = self._registry.names
        ordered = []
        for exponents in sorted(self._terms, key=_canonical_order_key):
            named = {names[index]: exponent for index, exponent in enumerate(exponents) if exponent}
            ordered.append((named, self._terms[exponents]))
        return ordered

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        vector = [0] * len(self._registry.names)
        for name, exponent in monomial.items():
            if name not in self._registry.positions:
                raise UnknownVariable(name)
            vector[self._registry.positions[name]] = exponent
        return self._terms.get(tuple(vector), Fraction(0))

    def extract(self, partial_monomial: Mapping[str, int]) -> "ExactPoly":
        """Coefficient of a partial monomial, as a polynomial in the remaining variables."""
        fixed = {}
        for name, exponent in partial_monomial.items():
            if name in self._registry.positions:
                fixed[self._registry.positions[name]] = exponent
            elif exponent != 0:
                return ExactPoly.zero()
        remaining = self._registry.without(name for name in partial_monomial if name in self._registry)
        kept_positions = [self._registry.positions[name] for name in remaining.names]
        extracted = {}
        for exponents, coefficient in self._terms.items():
            if all(exponents[position] == exponent for position, exponent in fixed.items()):
                extracted[tuple(exponents[position] for position in kept_positions)] = coefficient
        return ExactPoly._trusted(remaining, extracted)

    def group_degree(self, exponents: tuple[int, ...], group: Iterable[str]) -> int:
        positions = self._registry.positions
        return sum(exponents[positions[name]] for name in group if name in positions)

    def max_degree_in(self, group: Iterable[str]) -> int:
        group = tuple(group)
        return max((self.group_degree(exponents, group) for exponents in self._terms), default=0)

    # ---- arithmetic ---------------------------------------------------------------------------------------------

    def _aligned_with(self, other: "ExactPoly") -> tuple[VariableRegistry, dict, dict]:
        if self._registry is other._registry:
            return self._registry, self._terms, other._terms
        registry = self._registry.union(other._registry)
        return (
            registry,
            _embed_terms(self._terms, self._registry, registry),
            _embed_terms(other._terms, other._registry, registry),
        )

    def __add__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        registry, mine, theirs = self._aligned_with(other)
        result = dict(mine)
        for exponents, coefficient in theirs.items():
            value = result.get(exponents, 0) + coefficient
            if value:
                result[exponents] = value
            else:
                result.pop(exponents, None)
        return ExactPoly._trusted(registry, result)

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly._trusted(self._registry, {exponents: -value for exponents, value in self._terms.items()})

    def __sub__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "ExactPoly":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ExactPoly.zero()
        registry, mine, theirs = self._aligned_with(other)
        result = {}
        for left_exponents, left_value in mine.items():
            for right_exponents, right_value in theirs.items():
                exponents = tuple(a + b for a, b in zip(left_exponents, right_exponents))
                value = result.get(exponents, 0) + left_value * right_value
                if value:
                    result[exponents] = value
                else:
                    result.pop(exponents, None)
        return ExactPoly._trusted(registry, result)

    __rmul__ = __mul__

    def mul_truncated(self, other: "ExactPoly", bounds: Mapping[tuple[str, ...], int]) -> "ExactPoly":
        """Product restricted to the terms within bounds; pairs of terms that cannot fit are never multiplied."""
        if not bounds:
            return self * other
        registry, mine, theirs = self._aligned_with(other)
        groups = [
            (tuple(registry.positions[name] for name in group if name in registry.positions), limit)
            for group, limit in bounds.items()
        ]

        def bucketed(terms: dict) -> dict[tuple[int, ...], dict]:
            buckets: dict[tuple[int, ...], dict] = {}
            for exponents, value in terms.items():
                key = tuple(sum(exponents[position] for position in positions) for positions, _ in groups)
                buckets.setdefault(key, {})[exponents] = value
            return buckets

        limits = [limit for _, limit in groups]
        result = {}
        right_buckets = bucketed(theirs)
        for left_key, left_terms in bucketed(mine).items():
            for right_key, right_terms in right_buckets.items():
                if any(a + b > limit for a, b, limit in zip(left_key, right_key, limits)):
                    continue
                for left_exponents, left_value in left_terms.items():
                    for right_exponents, right_value in right_terms.items():
                        exponents = tuple(a + b for a, b in zip(left_exponents, right_exponents))
                        value = result.get(exponents, 0) + left_value * right_value
                        if value:
                            result[exponents] = value
                        else:
                            result.pop(exponents, None)
        return ExactPoly._trusted(registry, result)

    def scaled(self, factor) -> "ExactPoly":
        factor = Fraction(factor)
        if not factor:
            return ExactPoly.zero()
        return ExactPoly._trusted(
            self._registry, {exponents: value * factor for exponents, value in self._terms.items()}
        )

    def __truediv__(self, divisor) -> "ExactPoly":
        if isinstance(divisor, ExactPoly):
            if len(divisor) != 1:
                raise ZeroDivisionError("Only division by a single nonzero term is supported")
            return self * divisor.inverse()
        return self.scaled(1 / Fraction(divisor))

    def inverse(self) -> "ExactPoly":
        """Inverse of a single-term polynomial; the term's variables must all be Laurent."""
        if len(self._terms) != 1:
            raise ZeroDivisionError("Only a single nonzero term can be inverted")
        (exponents, value) = next(iter(self._terms.items()))
        inverted = tuple(-exponent for exponent in exponents)
        _check_exponents(self._registry, inverted)
        return ExactPoly._trusted(self._registry, {inverted: 1 / value})

    def __pow__(self, power: int) -> "ExactPoly":
        if power < 0:
            return self.inverse() ** (-power)
        result = ExactPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _, mine, theirs = self._aligned_with(other)
        return mine == theirs

    def __hash__(self):
        return hash(frozenset((tuple(sorted(named.items())), value) for named, value in self.items()))

    # ---- transformations ----------------------------------------------------------------------------------------

    def truncate(self, bounds: Mapping[tuple[str, ...], int]) -> "ExactPoly":
        if not bounds:
            return self
        groups = [
            (tuple(self._registry.positions[name] for name in group if name in self._registry.positions), limit)
            for group, limit in bounds.items()
        ]
        kept = {
            exponents: value
            for exponents, value in self._terms.items()
            if all(sum(exponents[position] for position in positions) <= limit for positions, limit in groups)
        }
        if len(kept) == len(self._terms):
            return self
        return ExactPoly._trusted(self._registry, kept)

    def substitute(self, variable: str, replacement) -> "ExactPoly":
        replacement = _coerce(replacement)
        if variable not in self._registry.positions:
            return self
        position = self._registry.positions[variable]
        rest_registry = self._registry.without([variable])
        kept_positions = [self._registry.positions[name] for name in rest_registry.names]
        by_power: dict[int, dict] = {}
        for exponents, value in self._terms.items():
            rest = tuple(exponents[index] for index in kept_positions)
            bucket = by_power.setdefault(exponents[position], {})
            bucket[rest] = value
        result = ExactPoly.zero()
        for power in sorted(by_power):
            if power < 0 and len(replacement) != 1:
                raise LaurentExponent(variable, power)
            result = result + ExactPoly._trusted(rest_registry, by_power[power]) * (replacement**power)
        return result

    def specialize(self, variable: str, value) -> "ExactPoly":
        return self.substitute(variable, ExactPoly.constant(value))

    def restricted_to_used(self) -> "ExactPoly":
        registry = VariableRegistry.of(self.used_variables)
        if registry is self._registry:
            return self
        kept_positions = [self._registry.positions[name] for name in registry.names]
        return ExactPoly._trusted(
            registry,
            {tuple(exponents[index] for index in kept_positions): value for exponents, value in self._terms.items()},
        )

    # ---- serialization ------------------------------------------------------------------------------------------

    def to_json_terms(self) -> list[dict]:
        return [
            {"exps": named, "coeff": ExactCodec.encode_rational(value)}
            for named, value in self.items()
        ]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for named, value in self.items():
            monomial = ExactCodec.encode_monomial(named)
            if monomial == "1":
                parts.append(_format_rational(value))
            elif value == 1:
                parts.append(monomial)
            elif value == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{_format_rational(value)}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ExactPoly({self})"


def _format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _check_exponents(registry: VariableRegistry, exponents: tuple[int, ...]) -> None:
    for index, exponent in enumerate(exponents):
        if not -EXPONENT_LIMIT <= exponent < EXPONENT_LIMIT:
            raise LaurentExponent(registry.names[index], exponent)
    for index in registry.non_laurent_positions:
        if exponents[index] < 0:
            raise LaurentExponent(registry.names[index], exponents[index])


def _coerce(value):
    if isinstance(value, ExactPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactPoly.constant(value)
    return NotImplemented


def falling_factorial(variable: str, k: int) -> ExactPoly:
    """variable (variable - 1) ... (variable - k + 1); the empty product is 1."""
    result = ExactPoly.one()
    symbol = ExactPoly.variable(variable)
    for offset in range(k):
        result = result * (symbol - offset)
    return result


def binomial_in(variable: str, k: int) -> ExactPoly:
    return falling_factorial(variable, k).scaled(Fraction(1, factorial(k)))
