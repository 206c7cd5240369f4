from collections import Counter

from wickenum.common_domain.enum.split_choice import SplitChoice
from wickenum.iharaselberg.transition_digraph import TransitionDigraph
from wickenum.iharaselberg.walk_enumerator import ClosedWalkD


def _rotation(dp: TransitionDigraph, edges: tuple[int, ...], split: SplitChoice) -> int:
    tails = [dp.edges[edge_id].tail for edge_id in edges]
    if len(set(tails)) == len(tails):
        return -1
    counts = Counter(edges)
    repeated = [edge_id for edge_id, count in counts.items() if count > 1]
    if not repeated:
        # only a joint repeats
        return 0
    first = min(repeated)
    if dp.is_split(first):
        return 0
    positions = [index for index, edge_id in enumerate(edges) if edge_id == first]
    match split:
        case SplitChoice.LAST_PAIR:
            p, q = positions[-2], positions[-1]
        case _:
            p, q = positions[0], positions[1]
    head = edges[p:q]
    tail = edges[q:] + edges[:p]
    left = _rotation(dp, head, split)
    if left == 0:
        return 0
    return left * _rotation(dp, tail, split)


def rotation_number(
    walk: ClosedWalkD | tuple[int, ...], dp: TransitionDigraph, split: SplitChoice = SplitChoice.FIRST_PAIR
) -> int:
    """
    -1 for a walk visiting no node twice. Otherwise, with a the first repeated edge in the global order: 0 when a is
    a split edge, else the product over the two closed walks obtained by cutting at two occurrences of a. A walk that
    repeats only a joint gets 0.
    """
    edges = walk.edges if isinstance(walk, ClosedWalkD) else tuple(walk)
    return _rotation(dp, edges, split)
