"""Worst-case inputs at any size: the win(N) heap for the deconstruction phase
and the matching MakeHeap input for the whole sort."""

from typing import Iterator, NamedTuple

from .formulas import heapsort_max, makeheap_max, removeall_max
from .game import strategy_win
from .heap import _makeheap_inplace, _removeall_inplace
from .inverse import InvalidMove, gen_makeheap_worst

__all__ = [
    "SweepRow",
    "HeapBuilder",
    "worst_heap",
    "worst_array",
    "iter_worst_heaps",
    "measure",
    "sweep",
]


class SweepRow(NamedTuple):
    N: int
    makeheap_measured: int
    makeheap_formula: int
    removeall_measured: int
    removeall_formula: int
    total_measured: int
    total_formula: int
    match: bool

    @classmethod
    def of(cls, n, mh, mh_f, ra, ra_f, tot, tot_f) -> "SweepRow":
        return cls(n, mh, mh_f, ra, ra_f, tot, tot_f,
                   mh == mh_f and ra == ra_f and tot == tot_f)


class HeapBuilder:
    """Applies pull downs (by value) to a growing heap, starting from [1]."""

    def __init__(self):
        self.a = [0, 1]
        self.pos = [0, 1]
        self.pulls = []

    @property
    def size(self) -> int:
        return len(self.a) - 1

    def heap(self) -> list[int]:
        return self.a[1:]

    def pull(self, v: int) -> None:
        a, pos = self.a, self.pos
        n = len(a) - 1
        k = pos[v]
        if a[k] > a[(n + 1) >> 1]:
            raise InvalidMove(k, len(self.pulls) + 1)
        while k > 1:
            parent = k >> 1
            w = a[parent]
            a[k] = w
            pos[w] = k
            k = parent
        n += 1
        a[1] = n
        pos.append(1)
        a.append(v)
        pos[v] = n
        self.pulls.append(v)


def worst_heap(n: int) -> list[int]:
    """Heap on n nodes that maximizes RemoveAll comparisons (built by win(n))."""
    b = HeapBuilder()
    for v in strategy_win(n).pulls:
        b.pull(v)
    return b.heap()


def worst_array(n: int) -> list[int]:
    """Input array on which Heapsort does the most comparisons."""
    return gen_makeheap_worst(worst_heap(n))


def iter_worst_heaps(n_from: int, n_to: int) -> Iterator[tuple[int, list[int]]]:
    """Yield ``(N, worst_heap(N))`` for N in order, reusing game prefixes."""
    b = HeapBuilder()
    for n in range(max(n_from, 2), n_to + 1):
        pulls = strategy_win(n).pulls
        done = len(b.pulls)
        if done >= len(pulls) or tuple(b.pulls) != pulls[:done]:
            b = HeapBuilder()
            done = 0
        for v in pulls[done:]:
            b.pull(v)
        yield n, b.heap()


def measure(n: int, heap: list[int]) -> SweepRow:
    """Count both phases of Heapsort on the worst-case array built from ``heap``."""
    a = [0, *gen_makeheap_worst(heap)]
    built = _makeheap_inplace(a, n)
    if a[1:] != heap:
        raise AssertionError(f"MakeHeap did not rebuild the heap for N={n}")
    deconstructed = _removeall_inplace(a, n)
    return SweepRow.of(
        n,
        built, makeheap_max(n),
        deconstructed, removeall_max(n),
        built + deconstructed, heapsort_max(n),
    )


def sweep(n_from: int, n_to: int) -> Iterator[SweepRow]:
    for n, heap in iter_worst_heaps(n_from, n_to):
        yield measure(n, heap)
