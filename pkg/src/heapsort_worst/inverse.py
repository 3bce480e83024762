"""Running Heapsort backwards.

``unfixheap`` undoes a FixHeap so that redoing it costs the maximum number of
comparisons; ``unremovemax`` undoes a RemoveMax (a "pull down"). Chaining the
first gives worst-case MakeHeap inputs, chaining the second builds heaps move
by move from the 1-element heap.
"""

from typing import Sequence

from .bitmath import leftmost_descendant, path_to
from .heap import HeapError, removemax

__all__ = [
    "InvalidMove",
    "pulldown",
    "unfixheap",
    "unremovemax",
    "gen_makeheap_worst",
    "creative_sequence",
]


class InvalidMove(HeapError):
    def __init__(self, index, position=None):
        self.index = index
        self.position = position
        where = "" if position is None else f" (pull #{position})"
        super().__init__(f"pulling down node {index} does not yield a heap{where}")


def _shift_path(a: list, i: int, j: int):
    """Move every value on the path i -> j one step deeper; return old a[j]."""
    removed = a[j]
    while j != i:
        parent = j >> 1
        a[j] = a[parent]
        j = parent
    return removed


def pulldown(values: Sequence[int], i: int, j: int):
    """Remove node j and demote its ancestors from i down; the removed value fills i.

    Returns ``(removed_value, new_values)``.
    """
    n = len(values)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) outside a tree of {n} nodes")
    if i == j or i not in path_to(j):
        raise ValueError(f"{j} is not a proper descendant of {i}")
    a = [0, *values]
    removed = _shift_path(a, i, j)
    a[i] = removed
    return removed, a[1:]


def _subtree_is_heap(a: list, i: int, n: int) -> bool:
    stack = [i]
    while stack:
        m = stack.pop()
        for c in (2 * m, 2 * m + 1):
            if c <= n:
                if a[c] > a[m]:
                    return False
                stack.append(c)
    return True


def _unfix_inplace(a: list, i: int, n: int) -> None:
    j = leftmost_descendant(i, n)
    if j != i:
        a[i] = _shift_path(a, i, j)


def unfixheap(values: Sequence[int], i: int) -> list[int]:
    """Inverse of fixheap(., i) that makes the redo as expensive as possible.

    The leftmost leaf below i is pulled up into i; the identity when i is a leaf.
    """
    n = len(values)
    if not 1 <= i <= n:
        raise IndexError(f"node {i} is outside a tree of {n} nodes")
    a = [0, *values]
    if not _subtree_is_heap(a, i, n):
        raise HeapError(f"subtree at node {i} is not a heap")
    _unfix_inplace(a, i, n)
    return a[1:]


def unremovemax_inplace(a: list, n: int, k: int) -> None:
    """Pull down node k of the heap ``a[1..n]``; afterwards ``a[1..n+1]`` is a heap.

    ``a`` has an unused slot 0 and must already have room for ``a[n + 1]``.
    """
    if not 1 <= k <= n:
        raise IndexError(f"node {k} is outside a heap of {n} nodes")
    if a[k] > a[(n + 1) >> 1]:
        raise InvalidMove(k)
    a[n + 1] = _shift_path(a, 1, k)
    a[1] = n + 1


def unremovemax(values: Sequence[int], k: int) -> list[int]:
    """The unique heap H' on N+1 nodes with H'.removemax() == (N+1, values) whose
    last node is the former node k."""
    n = len(values)
    a = [0, *values, 0]
    unremovemax_inplace(a, n, k)
    return a[1:]


def gen_makeheap_worst(values: Sequence[int]) -> list[int]:
    """An array that makeheap turns into ``values`` with the most comparisons."""
    n = len(values)
    a = [0, *values]
    for i in range(1, n // 2 + 1):
        _unfix_inplace(a, i, n)
    return a[1:]


def creative_sequence(values: Sequence[int]) -> list[int]:
    """Pull-down values that build ``values`` from the 1-element heap."""
    h = list(values)
    pulls = []
    while len(h) > 1:
        pulls.append(h[-1])
        h = removemax(h).result[1]
    pulls.reverse()
    return pulls
