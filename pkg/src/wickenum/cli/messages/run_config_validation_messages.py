from enum import Enum


class RunConfigValidationMessages(Enum):
    MISSING_IDENTITY = ("missing-identity", "Command 'verify' needs an identity.")
    MISSING_KIND = ("missing-kind", "Command 'integrate' needs --kind.")
    MISSING_R = ("missing-r", "Integrand omega_r needs --r.")
    MISSING_MAX_EDGES = ("missing-max-edges", "Integrand {0} needs --max-edges.")
    ODD_MAX_EDGES = ("odd-max-edges", "Invalid --max-edges for {0}: {1} (must be even)")
    MISSING_DEGREES = ("missing-degrees", "Integrand psi needs --degrees and --max-z-order.")
    MISSING_N_MAX = ("missing-n-max", "Command '{0}' needs --n-max.")
    INVALID_DIMENSION = ("invalid-dimension", "Invalid matrix dimension: {0}")
    INVALID_BOUND = ("invalid-bound", "Invalid value for '{0}': {1}")
    INVALID_SWEEP = ("invalid-sweep", "Invalid dimension sweep: {0}")
    INVALID_S_OF_N = ("invalid-s-of-n", "Invalid s(N) selector: {0}")
    INVALID_TOTAL = ("invalid-total", "Invalid coin total range: {0}")
    INVALID_JOBS = ("invalid-jobs", "Invalid job count: {0}")
    CONFIG_VALIDATION_FAILED = ("config-validation-failed", "Run configuration validation failed.")

    def __init__(self, key, message):
        self.key = key
        self.message = message
