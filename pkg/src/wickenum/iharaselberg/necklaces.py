from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterator, Mapping

from sympy import factorint
from sympy.utilities.iterables import multiset_permutations

from wickenum.algebra.exact_poly import ExactPoly
from wickenum.algebra.truncated_series import TruncatedSeries
from wickenum.common_domain.desk_scale_limits import DeskScaleLimits
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)


def lyndon_words(alphabet_size: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """Every Lyndon word of length at most max_length over 0..alphabet_size-1, in lexicographic order (Duval)."""
    word = [-1]
    while word:
        word[-1] += 1
        yield tuple(word)
        period = len(word)
        while len(word) < max_length:
            word.append(word[-period])
        while word and word[-1] == alphabet_size - 1:
            word.pop()


def is_lyndon(word: tuple) -> bool:
    return all(word < word[shift:] + word[:shift] for shift in range(1, len(word)))


def content_of(word: tuple[int, ...], alphabet_size: int) -> tuple[int, ...]:
    counts = [0] * alphabet_size
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def necklace_count(content: tuple[int, ...]) -> int:
    """Aperiodic necklaces (Lyndon words) with exactly content[i] copies of letter i, by brute force."""
    total = sum(content)
    if total == 0:
        return 0
    words = (word for word in lyndon_words(len(content), total) if len(word) == total)
    return sum(1 for word in words if content_of(word, len(content)) == content)


def mobius(d: int) -> int:
    exponents = factorint(d).values()
    if any(exponent > 1 for exponent in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def necklace_count_formula(content: tuple[int, ...]) -> int:
    """(1/n) sum over d dividing gcd(content) of mobius(d) (n/d)! / prod (m_i/d)!."""
    total = sum(content)
    if total == 0:
        return 0
    common = 0
    for count in content:
        common = gcd(common, count)
    value = Fraction(0)
    for d in range(1, common + 1):
        if common % d == 0:
            multinomial = factorial(total // d) // prod(factorial(count // d) for count in content)
            value += mobius(d) * multinomial
    return int(value / total)


def coin_arrangement_counts(coins: Mapping[str, int]) -> dict[int, int]:
    """
    b_k for k >= 1: the number of ways to lay out all coins as k pairwise distinct aperiodic circular words.
    """
    kinds = sorted(kind for kind, count in coins.items() if count > 0)
    target = tuple(coins[kind] for kind in kinds)
    total = sum(target)
    if total < 1:
        raise ValueError("At least one coin is needed")
    DeskScaleLimits.ensure_within("coin_total", total)
    letters = [index for index, count in enumerate(target) for _ in range(count)]
    words: list[tuple[int, ...]] = []
    for length in range(1, total + 1):
        for chosen in _sub_multisets(letters, length):
            words.extend(tuple(word) for word in multiset_permutations(list(chosen)) if is_lyndon(tuple(word)))

    # 0/1 knapsack over distinct words: (content, word count) -> arrangements
    states: dict[tuple[tuple[int, ...], int], int] = {(tuple([0] * len(kinds)), 0): 1}
    for word in words:
        content = content_of(word, len(kinds))
        for (used, k), ways in list(states.items()):
            combined = tuple(a + b for a, b in zip(used, content))
            if any(a > b for a, b in zip(combined, target)):
                continue
            key = (combined, k + 1)
            states[key] = states.get(key, 0) + ways
    counts = {k: ways for (used, k), ways in states.items() if used == target and k > 0}
    logger.debug(f"coins {dict(coins)}: {len(words)} circular words, counts {counts}")
    return dict(sorted(counts.items()))


def _sub_multisets(letters: list[int], length: int) -> Iterator[tuple[int, ...]]:
    def choose(start: int, remaining: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield chosen
            return
        previous = None
        for index in range(start, len(letters)):
            if letters[index] == previous:
                continue
            previous = letters[index]
            yield from choose(index + 1, remaining - 1, chosen + (letters[index],))

    yield from choose(0, length, ())


def coin_lemma_check(coins: Mapping[str, int]) -> Fraction:
    """The alternating sum of b_k over k; zero for every collection of at least two coins."""
    if sum(coins.values()) < 2:
        raise ValueError("The alternating sum is taken over collections of at least two coins")
    counts = coin_arrangement_counts(coins)
    return Fraction(sum((1 if k % 2 else -1) * ways for k, ways in counts.items()))


def _content_vectors(k: int, max_degree: int) -> list[tuple[int, ...]]:
    vectors = [()]
    for _ in range(k):
        vectors = [vector + (value,) for vector in vectors for value in range(max_degree + 1)]
    return sorted(
        (vector for vector in vectors if 0 < sum(vector) <= max_degree), key=lambda vector: (sum(vector), vector)
    )


def witt_product(k: int, max_degree: int) -> ExactPoly:
    """prod over nonzero content vectors m of (1 - z^m)^M(m), up to total degree max_degree in z_1..z_k."""
    DeskScaleLimits.ensure_within("witt_variables", k)
    DeskScaleLimits.ensure_within("witt_degree", max_degree)
    names = [f"z_{index}" for index in range(1, k + 1)]
    product = TruncatedSeries(ExactPoly.one(), {tuple(names): max_degree})
    for vector in _content_vectors(k, max_degree):
        exponent = necklace_count(vector)
        if not exponent:
            continue
        factor = ExactPoly.one() - ExactPoly.monomial(dict(zip(names, vector)))
        for _ in range(exponent):
            product = product * factor
    return product.payload


def witt_target(k: int) -> ExactPoly:
    return ExactPoly.one() - sum((ExactPoly.variable(f"z_{index}") for index in range(1, k + 1)), ExactPoly.zero())


def witt_check(k: int, max_degree: int) -> bool:
    return witt_product(k, max_degree) == witt_target(k)
