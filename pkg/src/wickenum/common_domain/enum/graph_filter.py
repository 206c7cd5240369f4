from enum import StrEnum


class GraphFilter(StrEnum):
    ALL = "all"
    CONNECTED = "connected"
    NIMPLE = "nimple"
