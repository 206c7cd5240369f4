from enum import StrEnum


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
