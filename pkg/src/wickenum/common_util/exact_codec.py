import re
from fractions import Fraction

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class ExactCodec:
    """
    Text encoding of exact rationals. Every value is written as "p/q" (q > 0, lowest terms), integers included,
    so downstream consumers never have to guess whether a field is integral or lossy.
    """

    @staticmethod
    def encode_rational(value) -> str:
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def decode_rational(text: str) -> Fraction:
        match = _RATIONAL_PATTERN.match(text)
        if match is None:
            raise ValueError(f"Invalid rational literal: '{text}'")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError(f"Invalid rational literal: '{text}' has a zero denominator")
        return Fraction(numerator, denominator)

    @staticmethod
    def encode_monomial(exponents: dict[str, int]) -> str:
        # human-readable key, e.g. "N^-1*y^2"; the empty monomial is "1"
        if not exponents:
            return "1"
        parts = []
        for name, exponent in exponents.items():
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)
