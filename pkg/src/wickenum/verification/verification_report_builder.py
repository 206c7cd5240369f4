from fractions import Fraction
from typing import Any

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.verification_status import VerificationStatus
from wickenum.common_domain.validation_error import WickenumValidationError
from wickenum.common_domain.verification_report import CoefficientMismatch, VerificationReport
from wickenum.common_util.exact_codec import ExactCodec


class VerificationReportBuilder:
    @staticmethod
    def coefficient_or_zero(poly: ExactPoly, monomial: dict[str, int]) -> Fraction:
        if any(exponent and name not in poly.registry for name, exponent in monomial.items()):
            return Fraction(0)
        return poly.coefficient({name: exponent for name, exponent in monomial.items() if name in poly.registry})

    @staticmethod
    def diff(lhs: ExactPoly, rhs: ExactPoly, section: str | None = None) -> tuple[list[CoefficientMismatch], int]:
        """Mismatching coefficients in canonical term order, and the number of distinct monomials compared."""
        difference = lhs - rhs
        mismatches = [
            CoefficientMismatch(
                monomial=monomial,
                lhs=ExactCodec.encode_rational(VerificationReportBuilder.coefficient_or_zero(lhs, monomial)),
                rhs=ExactCodec.encode_rational(VerificationReportBuilder.coefficient_or_zero(rhs, monomial)),
                section=section,
            )
            for monomial, _ in difference.items()
        ]
        compared = {tuple(sorted(monomial.items())) for monomial, _ in lhs.items()}
        compared |= {tuple(sorted(monomial.items())) for monomial, _ in rhs.items()}
        return mismatches, len(compared)

    @staticmethod
    def build_report(
        identity: IdentityKind,
        mismatches: list[CoefficientMismatch],
        compared_terms: int,
        n: int | None = None,
        degree_bound: int | None = None,
        details: dict[str, Any] | None = None,
        errors: list[WickenumValidationError] | None = None,
    ) -> VerificationReport:
        passed = not mismatches and not errors
        return VerificationReport(
            identity=identity,
            n=n,
            degree_bound=degree_bound,
            status=VerificationStatus.PASS if passed else VerificationStatus.MISMATCH,
            mismatches=mismatches,
            compared_terms=compared_terms,
            details=details or {},
            errors=errors,
        )

    @staticmethod
    def compare(
        identity: IdentityKind,
        lhs: ExactPoly,
        rhs: ExactPoly,
        n: int | None = None,
        degree_bound: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> VerificationReport:
        if n is not None:
            lhs, rhs = lhs.specialize("N", n), rhs.specialize("N", n)
        mismatches, compared = VerificationReportBuilder.diff(lhs, rhs)
        return VerificationReportBuilder.build_report(identity, mismatches, compared, n, degree_bound, details)

    @staticmethod
    def compare_sections(
        identity: IdentityKind,
        sections: dict[str, tuple[ExactPoly, ExactPoly]],
        n: int | None = None,
        degree_bound: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> VerificationReport:
        all_mismatches = []
        total = 0
        for section, (lhs, rhs) in sections.items():
            if n is not None:
                lhs, rhs = lhs.specialize("N", n), rhs.specialize("N", n)
            mismatches, compared = VerificationReportBuilder.diff(lhs, rhs, section)
            all_mismatches.extend(mismatches)
            total += compared
        return VerificationReportBuilder.build_report(identity, all_mismatches, total, n, degree_bound, details)
