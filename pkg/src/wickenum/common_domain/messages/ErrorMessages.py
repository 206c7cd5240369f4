from enum import Enum


class ErrorMessages(Enum):
    SCALE_EXCEEDED_ERROR = (
        "wickenum_error:scale:exceeded",
        "Bound '{0}' = {1} exceeds the desk-scale limit {2}. Set WICKENUM_SCALE_OVERRIDE to lift it (unsupported).",
    )
    NONZERO_CONSTANT_TERM_ERROR = (
        "wickenum_error:algebra:nonzero_constant_term",
        "Series exponential requires a zero constant term; found {0}.",
    )
    BAD_CONSTANT_TERM_ERROR = (
        "wickenum_error:algebra:bad_constant_term",
        "Series logarithm requires constant term 1; found {0}.",
    )
    UNKNOWN_VARIABLE_ERROR = ("wickenum_error:algebra:unknown_variable", "Variable '{0}' is not registered.")
    LAURENT_EXPONENT_ERROR = (
        "wickenum_error:algebra:laurent_exponent",
        "Exponent {1} is not allowed for variable '{0}'.",
    )
    UNTRUNCATED_SERIES_ERROR = (
        "wickenum_error:algebra:untruncated_series",
        "Term {0} is not controlled by any truncation bound {1}; the expansion would not terminate.",
    )
    NOT_CONNECTED_ERROR = ("wickenum_error:census:not_connected", "Graph with edges {0} is not connected.")
    INVALID_COVER_ERROR = ("wickenum_error:census:invalid_cover", "Not a directed cycle double cover: {0}")
    ODD_EULER_DEFECT_ERROR = (
        "wickenum_error:fatgraph:odd_euler_defect",
        "Euler relation gives 2g = {0} for a fat graph with c={1}, e={2}, v={3}, f={4}.",
    )
    IDENTITY_SIDE_ERROR = ("wickenum_error:verification:side", "Computing side '{0}' failed: {1}")
    CONFIG_ERROR = ("wickenum_error:cli:config", "Invalid run configuration: {0}")

    def __init__(self, key, message):
        self.key = key
        self.message = message
