from wickenum.common_domain.messages.ErrorMessages import ErrorMessages


class WickenumEngineException(Exception):
    error_message: ErrorMessages = None

    def __init__(self, *message_args):
        super().__init__(self.error_message.message.format(*message_args))
        self.message_args = message_args

    @property
    def error_key(self) -> str:
        return self.error_message.key


class ScaleExceeded(WickenumEngineException):
    error_message = ErrorMessages.SCALE_EXCEEDED_ERROR

    def __init__(self, limit_name: str, requested, limit):
        super().__init__(limit_name, requested, limit)
        self.limit_name = limit_name
        self.requested = requested
        self.limit = limit


class NonzeroConstantTerm(WickenumEngineException):
    error_message = ErrorMessages.NONZERO_CONSTANT_TERM_ERROR


class BadConstantTerm(WickenumEngineException):
    error_message = ErrorMessages.BAD_CONSTANT_TERM_ERROR


class UnknownVariable(WickenumEngineException):
    error_message = ErrorMessages.UNKNOWN_VARIABLE_ERROR


class LaurentExponent(WickenumEngineException):
    error_message = ErrorMessages.LAURENT_EXPONENT_ERROR


class UntruncatedSeries(WickenumEngineException):
    error_message = ErrorMessages.UNTRUNCATED_SERIES_ERROR


class NotConnected(WickenumEngineException):
    error_message = ErrorMessages.NOT_CONNECTED_ERROR


class InvalidCover(WickenumEngineException):
    error_message = ErrorMessages.INVALID_COVER_ERROR


class OddEulerDefect(WickenumEngineException):
    error_message = ErrorMessages.ODD_EULER_DEFECT_ERROR
