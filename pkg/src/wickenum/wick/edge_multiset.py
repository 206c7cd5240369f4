from collections import Counter
from typing import Mapping

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from wickenum.algebra.exact_poly import parse_entry_symbol


class EdgeMultiset(BaseModel):
    """
    Multiset of directed index pairs (i, j), the entry part of a monomial in matrix entries.
    Items are kept sorted so that equal multisets hash equally.
    """

    model_config = ConfigDict(frozen=True)

    items: tuple[tuple[int, int], ...] = ()
    dimension: int | None = None  # None leaves the dimension open (symbolic N)

    # noinspection PyNestedDecorators
    @field_validator("items", mode="before")
    @classmethod
    def sort_items(cls, value) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(tuple(pair) for pair in value))

    @model_validator(mode="after")
    def validate_indices(self) -> "EdgeMultiset":
        upper = self.dimension
        for i, j in self.items:
            if i < 1 or j < 1 or (upper is not None and (i > upper or j > upper)):
                raise ValueError(f"Index pair ({i}, {j}) is outside 1..{upper if upper is not None else 'N'}")
        return self

    @classmethod
    def from_entry_exponents(cls, exponents: Mapping[str, int], dimension: int | None = None) -> "EdgeMultiset":
        items = []
        for name, exponent in exponents.items():
            pair = parse_entry_symbol(name)
            if pair is None:
                raise ValueError(f"'{name}' is not a matrix-entry symbol")
            items.extend([pair] * exponent)
        return cls(items=items, dimension=dimension)

    def counts(self) -> Counter:
        return Counter(self.items)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({index for pair in self.items for index in pair}))

    def __len__(self):
        return len(self.items)


class Pairing(BaseModel):
    """Perfect matching of the positions of an EdgeMultiset into mutually reversed pairs."""

    model_config = ConfigDict(frozen=True)

    pairs: tuple[tuple[int, int], ...]

    # noinspection PyNestedDecorators
    @field_validator("pairs", mode="before")
    @classmethod
    def sort_pairs(cls, value) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(tuple(sorted(pair)) for pair in value))

    def is_proper_for(self, multiset: EdgeMultiset) -> bool:
        positions = [position for pair in self.pairs for position in pair]
        if sorted(positions) != list(range(len(multiset.items))):
            return False
        return all(multiset.items[p] == multiset.items[q][::-1] for p, q in self.pairs)
