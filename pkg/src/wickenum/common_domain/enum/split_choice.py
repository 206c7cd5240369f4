from enum import StrEnum


class SplitChoice(StrEnum):
    FIRST_PAIR = "first-pair"  # first two occurrences along the canonical rotation
    LAST_PAIR = "last-pair"
