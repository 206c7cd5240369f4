from collections import Counter
from functools import lru_cache
from math import factorial, prod

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.wick.edge_multiset import EdgeMultiset, Pairing


def enumerate_pairings(multiset: EdgeMultiset) -> list[Pairing]:
    """All proper pairings, enumerated over positions so repeated items are counted with multiplicity."""
    items = multiset.items
    if len(items) % 2:
        return []
    pairings = []
    matched = [False] * len(items)
    chosen: list[tuple[int, int]] = []

    def extend():
        try:
            first = matched.index(False)
        except ValueError:
            pairings.append(Pairing(pairs=list(chosen)))
            return
        matched[first] = True
        partner = items[first][::-1]
        for position in range(first + 1, len(items)):
            if not matched[position] and items[position] == partner:
                matched[position] = True
                chosen.append((first, position))
                extend()
                chosen.pop()
                matched[position] = False
        matched[first] = False

    extend()
    return pairings


@lru_cache(maxsize=65536)
def count_sorted_pairings(items: tuple[tuple[int, int], ...]) -> int:
    counts = Counter(items)
    total = 1
    for (i, j), multiplicity in counts.items():
        if i < j:
            if counts.get((j, i), 0) != multiplicity:
                return 0
            total *= factorial(multiplicity)
        elif i == j:
            if multiplicity % 2:
                return 0
            total *= _double_factorial(multiplicity - 1)
        elif counts.get((j, i), 0) != multiplicity:
            return 0
    return total


def _double_factorial(value: int) -> int:
    return prod(range(value, 0, -2)) if value > 0 else 1


def count_pairings(multiset: EdgeMultiset) -> int:
    """
    Closed form of len(enumerate_pairings(multiset)): m! for every unordered pair {i, j} occurring m times in each
    direction, and (c - 1)!! for a loop (i, i) occurring c times.
    """
    if len(multiset.items) % 2:
        return 0
    return count_sorted_pairings(multiset.items)


def wick_value(multiset: EdgeMultiset) -> ExactPoly:
    count = count_pairings(multiset)
    if count == 0:
        return ExactPoly.zero()
    return ExactPoly.monomial({"N": -(len(multiset.items) // 2)}, count)
