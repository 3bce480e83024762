"""Heapsort instrumented to count key comparisons.

Heaps are plain lists of values in index order: ``h[0]`` is node 1, ``h[k-1]``
is node k. Keys are a permutation of 1..N, so there are no ties. All public
functions take such lists and return fresh ones; node indices in arguments
are 1-based.

Cost convention for sifting down: at a node with two children one
child-vs-child comparison and one child-vs-demotee comparison are made; at a
node with one child a single child-vs-demotee comparison; none at a leaf.
"""

from typing import NamedTuple, Sequence

__all__ = [
    "CountedRun",
    "HeapError",
    "NotAPermutation",
    "OrderViolation",
    "validate",
    "is_heap",
    "fixheap",
    "makeheap",
    "removemax",
    "removeall",
    "heapsort",
]


class CountedRun(NamedTuple):
    result: object
    comparisons: int


class HeapError(ValueError):
    pass


class NotAPermutation(HeapError):
    def __init__(self, values):
        super().__init__(f"not a permutation of 1..{len(values)}")


class OrderViolation(HeapError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"node {index} is larger than its parent")


def check_permutation(values: Sequence[int]) -> None:
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        raise NotAPermutation(values)


def first_order_violation(values: Sequence[int]):
    """1-based index of the first node larger than its parent, or None."""
    for j in range(2, len(values) + 1):
        if values[j // 2 - 1] < values[j - 1]:
            return j
    return None


def validate(candidate: Sequence[int]) -> list[int]:
    """Return a copy of ``candidate`` if it is a heap on a permutation of 1..N."""
    values = list(candidate)
    check_permutation(values)
    bad = first_order_violation(values)
    if bad is not None:
        raise OrderViolation(bad)
    return values


def is_heap(values: Sequence[int]) -> bool:
    return first_order_violation(values) is None


def sift_down(a: list, i: int, n: int) -> int:
    """Sift ``a[i]`` down within ``a[1..n]`` (slot 0 unused); return comparisons."""
    v = a[i]
    count = 0
    half = n >> 1
    while i <= half:
        c = i << 1
        if c < n:
            count += 2
            if a[c + 1] > a[c]:
                c += 1
        else:
            count += 1
        if a[c] < v:
            break
        a[i] = a[c]
        i = c
    a[i] = v
    return count


def fixheap(values: Sequence[int], i: int) -> CountedRun:
    """Repair the almost heap rooted at node i by demoting its root."""
    n = len(values)
    if not 1 <= i <= n:
        raise IndexError(f"node {i} is outside a tree of {n} nodes")
    a = [0, *values]
    count = sift_down(a, i, n)
    return CountedRun(a[1:], count)


def _makeheap_inplace(a: list, n: int) -> int:
    count = 0
    for i in range(n >> 1, 0, -1):
        count += sift_down(a, i, n)
    return count


def makeheap(values: Sequence[int]) -> CountedRun:
    """Bottom-up heap construction: fixheap at N//2, ..., 1."""
    check_permutation(values)
    a = [0, *values]
    count = _makeheap_inplace(a, len(values))
    return CountedRun(a[1:], count)


def removemax(values: Sequence[int]) -> CountedRun:
    """Remove the root; the last node becomes the patch and is sifted down.

    Result is ``(max_value, remaining_heap)``.
    """
    n = len(values)
    if n == 0:
        raise HeapError("cannot remove from an empty heap")
    a = [0, *values]
    top = a[1]
    a[1] = a[n]
    count = sift_down(a, 1, n - 1) if n > 1 else 0
    return CountedRun((top, a[1:n]), count)


def _removeall_inplace(a: list, n: int) -> int:
    count = 0
    for last in range(n, 1, -1):
        top = a[1]
        a[1] = a[last]
        a[last] = top
        count += sift_down(a, 1, last - 1)
    return count


def removeall(values: Sequence[int]) -> CountedRun:
    """N successive removemax calls; result is the ascending array."""
    if len(values) == 0:
        raise HeapError("cannot deconstruct an empty heap")
    a = [0, *values]
    count = _removeall_inplace(a, len(values))
    return CountedRun(a[1:], count)


def heapsort(values: Sequence[int]) -> CountedRun:
    """makeheap followed by removeall, counting both phases."""
    check_permutation(values)
    a = [0, *values]
    n = len(values)
    count = _makeheap_inplace(a, n)
    count += _removeall_inplace(a, n)
    return CountedRun(a[1:], count)
