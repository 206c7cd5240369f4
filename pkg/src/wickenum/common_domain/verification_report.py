from typing import Any

from pydantic import BaseModel, Field

from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.verification_status import VerificationStatus
from wickenum.common_domain.validation_error import WickenumValidationError


class CoefficientMismatch(BaseModel):
    monomial: dict[str, int]  # nonzero exponents only
    lhs: str  # exact rational "p/q", or a serialized polynomial for symbolic residues
    rhs: str
    section: str | None = None


class VerificationReport(BaseModel):
    identity: IdentityKind
    n: int | None = None  # None means N was kept symbolic
    degree_bound: int | None = None
    status: VerificationStatus = VerificationStatus.MISMATCH
    mismatches: list[CoefficientMismatch] = Field(default_factory=list)
    compared_terms: int = 0
    details: dict[str, Any] = Field(default_factory=dict)
    errors: list[WickenumValidationError] | None = None

    @property
    def passed(self) -> bool:
        return self.status == VerificationStatus.PASS
