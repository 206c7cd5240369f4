class RunConfigValidationException(Exception):
    pass
