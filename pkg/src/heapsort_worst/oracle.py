"""Brute-force ground truth at small sizes.

Heaps are enumerated through the game tree: every heap on N nodes is built by
exactly one sequence of valid pull downs from the 1-element heap, so a
depth-first walk over valid moves visits each heap once.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from . import formulas
from .bitmath import floor_lg
from .game import loss
from .heap import _makeheap_inplace, _removeall_inplace, removemax
from .inverse import unremovemax

__all__ = [
    "OracleReport",
    "OracleLimitError",
    "PERM_CEILING",
    "HEAP_CEILING",
    "WORSTSET_CEILING",
    "valid_moves",
    "iter_heaps",
    "count_pull_sequences",
    "perm_worst",
    "heap_worst_removeall",
    "enumerate_worstcase_heaps",
    "singularity_check",
    "max_lossless_run",
    "lossless_run_check",
    "removemax_max_check",
    "full_lossless_run_check",
]

PERM_CEILING = 9
HEAP_CEILING = 11
WORSTSET_CEILING = 13


class OracleLimitError(ValueError):
    """Requested size is outside what the oracle enumerates."""


@dataclass
class OracleReport:
    n: int
    max_count: int
    witness: list
    formula_value: int

    @property
    def agrees(self) -> bool:
        return self.max_count == self.formula_value


def _check_size(n, lo, hi, what):
    if not lo <= n <= hi:
        raise OracleLimitError(f"{what} needs {lo} <= N <= {hi}, got {n}")


def valid_moves(h: list) -> list[int]:
    """1-based indices k whose pull down keeps the heap property."""
    n = len(h)
    bound = h[(n + 1) // 2 - 1]
    return [k for k in range(1, n + 1) if h[k - 1] <= bound]


def iter_heaps(n: int, start: Optional[list] = None) -> Iterator[list]:
    """All heaps on n nodes reachable from ``start`` (default: the 1-element heap)."""
    root = [1] if start is None else list(start)
    if n < len(root):
        return
    stack = [root]
    while stack:
        h = stack.pop()
        if len(h) == n:
            yield h
            continue
        for k in valid_moves(h):
            stack.append(unremovemax(h, k))


def count_pull_sequences(n: int) -> int:
    """Number of valid pull-down sequences of length n - 1 from the 1-element heap."""
    def walk(h):
        if len(h) == n:
            return 1
        return sum(walk(unremovemax(h, k)) for k in valid_moves(h))
    return walk([1])


def perm_worst(n: int, phase: str = "heapsort", ceiling: int = PERM_CEILING) -> OracleReport:
    """Maximum comparisons over all n! input orders."""
    _check_size(n, 1, ceiling, "permutation oracle")
    if phase not in ("makeheap", "heapsort"):
        raise ValueError(f"unknown phase {phase!r}")
    best, witness = -1, None
    for perm in permutations(range(1, n + 1)):
        a = [0, *perm]
        count = _makeheap_inplace(a, n)
        if phase == "heapsort":
            count += _removeall_inplace(a, n)
        if count > best:
            best, witness = count, list(perm)
    expected = formulas.makeheap_max(n) if phase == "makeheap" else (
        formulas.heapsort_max(n) if n >= 2 else 0)
    return OracleReport(n, best, witness, expected)


def _removeall_count(h):
    return _removeall_inplace([0, *h], len(h))


def heap_worst_removeall(n: int, ceiling: int = HEAP_CEILING) -> OracleReport:
    """Maximum RemoveAll comparisons over every heap on n nodes."""
    _check_size(n, 2, ceiling, "heap oracle")
    best, witness = -1, None
    for h in iter_heaps(n):
        count = _removeall_count(h)
        if count > best:
            best, witness = count, h
    return OracleReport(n, best, witness, formulas.removeall_max(n))


def enumerate_worstcase_heaps(n: int, ceiling: int = WORSTSET_CEILING) -> list[list[int]]:
    """All heaps on n nodes whose build loses no more credit than necessary.

    Walks move sequences whose accumulated loss stays within the minimum
    possible total for n - 1 moves and keeps the size-n heaps that use it all.
    """
    _check_size(n, 1, ceiling, "worst-case enumeration")
    budget = formulas.sum_lambda_star(n - 1) if n >= 2 else 0
    found = []
    stack = [([1], 0)]
    while stack:
        h, lost = stack.pop()
        size = len(h)
        if size == n:
            if lost == budget:
                found.append(h)
            continue
        for k in valid_moves(h):
            spent = lost + loss(size, k)
            if spent <= budget:
                stack.append((unremovemax(h, k), spent))
    found.sort(reverse=True)
    return found


def singularity_check(n: int, ceiling: int = WORSTSET_CEILING) -> bool:
    """True iff no worst-case heap on n = 2**ceil(lg n) - 4 nodes has a lossless move."""
    if n < 12 or n != (1 << (n - 1).bit_length()) - 4:
        raise ValueError(f"{n} is not of the form 2**k - 4 with k >= 4")
    _check_size(n, 12, ceiling, "singularity check")
    for h in enumerate_worstcase_heaps(n, ceiling):
        if any(loss(n, k) == 0 for k in valid_moves(h)):
            return False
    return True


def _longest_lossless(h: list, limit: int) -> int:
    """Longest lossless pull run from ``h``, exploring at most ``limit`` moves deep."""
    n0 = len(h)
    top = n0 + limit
    a = [0, *h] + [0] * limit
    free = {s: [k for k in range(1, s + 1) if loss(s, k) == 0] for s in range(n0, top)}

    def walk(s):
        if s == top:
            return 0
        best = 0
        bound = a[(s + 1) >> 1]
        for k in free[s]:
            v = a[k]
            if v > bound:
                continue
            j = k
            while j > 1:
                a[j] = a[j >> 1]
                j >>= 1
            a[1] = s + 1
            a[s + 1] = v
            depth = 1 + walk(s + 1)
            # undo: lift the path back up and put v back at k
            j = 1
            path = k.bit_length() - 1
            while path > 0:
                child = k >> (path - 1)
                a[j] = a[child]
                j = child
                path -= 1
            a[k] = v
            a[s + 1] = 0
            if depth > best:
                best = depth
                if best == limit:
                    break
        return best

    return walk(n0)


def max_lossless_run(m: int, ceiling: int = 15) -> int:
    """Longest run of consecutive lossless pulls from any complete worst-case heap on m nodes."""
    if m < 7 or m & (m + 1):
        raise ValueError(f"{m} is not a complete heap size >= 7")
    _check_size(m, 7, ceiling, "lossless run check")
    return max(_longest_lossless(h, m) for h in enumerate_worstcase_heaps(m, ceiling))


def lossless_run_check(m: int, ceiling: int = 15) -> bool:
    """No complete worst-case heap on m nodes admits more than m - 2 lossless pulls in a row."""
    return max_lossless_run(m, ceiling) <= m - 2


def removemax_max_check(n: int) -> bool:
    """Brute maximum of a single RemoveMax over all heaps on n nodes vs the closed form."""
    _check_size(n, 3, HEAP_CEILING, "RemoveMax check")
    best = max(removemax(h).comparisons for h in iter_heaps(n))
    return best == floor_lg(n - 1) + floor_lg(n - 2)


def full_lossless_run_check(n: int) -> bool:
    """For n a power of two: a heap admits n - 1 lossless pulls in a row exactly
    when its last node is 1 and that node's parent is 2."""
    if n < 2 or n & (n - 1):
        raise ValueError(f"{n} is not a power of two")
    _check_size(n, 2, HEAP_CEILING, "full lossless run check")
    for h in iter_heaps(n):
        admits = _has_lossless_run(h, n - 1)
        if admits != (h[n - 1] == 1 and h[n // 2 - 1] == 2):
            return False
    return True


def _has_lossless_run(h, steps):
    if steps == 0:
        return True
    size = len(h)
    return any(
        loss(size, k) == 0 and _has_lossless_run(unremovemax(h, k), steps - 1)
        for k in valid_moves(h)
    )
