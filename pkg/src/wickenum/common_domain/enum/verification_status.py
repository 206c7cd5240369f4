from enum import StrEnum


class VerificationStatus(StrEnum):
    PASS = "pass"
    MISMATCH = "mismatch"
