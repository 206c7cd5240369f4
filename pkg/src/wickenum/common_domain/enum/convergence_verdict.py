from enum import StrEnum


class ConvergenceVerdict(StrEnum):
    CONVERGING = "converging"
    NOT_CONVERGING = "not_converging"
    UNREACHABLE = "unreachable"
    INSUFFICIENT_SWEEP = "insufficient_sweep"
