"""Exact integer helpers for implicit 1-based binary trees.

Nodes are numbered 1..N with the children of ``m`` at ``2m`` and ``2m + 1``.
Everything here is bit arithmetic; no floating point.
"""

__all__ = [
    "floor_lg",
    "ceil_lg",
    "s2",
    "e2",
    "num_children",
    "subtree_depth",
    "leftmost_descendant",
    "path_to",
]


def _positive(n, name="n"):
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def floor_lg(n: int) -> int:
    """Return the unique d with 2**d <= n < 2**(d+1)."""
    _positive(n)
    return n.bit_length() - 1


def ceil_lg(n: int) -> int:
    """Return the least d with 2**d >= n."""
    _positive(n)
    return (n - 1).bit_length()


def s2(n: int) -> int:
    """Number of 1-bits in the binary representation of n."""
    _positive(n)
    return bin(n).count("1")


def e2(n: int) -> int:
    """Exponent of 2 in the prime factorization of n."""
    _positive(n)
    return (n & -n).bit_length() - 1


def num_children(m: int, n: int) -> int:
    """Number of children of node m in a tree of n nodes (0, 1 or 2)."""
    _positive(m, "m")
    if m > n:
        raise ValueError(f"node {m} is outside a tree of {n} nodes")
    twice = 2 * m
    if twice > n:
        return 0
    return 1 if twice == n else 2


def subtree_depth(i: int, n: int) -> int:
    """Height of the subtree rooted at i: the d with i*2**d <= n < i*2**(d+1)."""
    _positive(i, "i")
    if i > n:
        raise ValueError(f"node {i} is outside a tree of {n} nodes")
    # n // i has the same floor-log as n / i since i*2**d <= n  <=>  2**d <= n // i
    return (n // i).bit_length() - 1


def leftmost_descendant(i: int, n: int) -> int:
    """Index of the leaf reached from i by always taking the left child."""
    return i << subtree_depth(i, n)


def path_to(j: int) -> list[int]:
    """Ancestors of j from the root down to j inclusive."""
    _positive(j, "j")
    return [j >> s for s in range(j.bit_length() - 1, -1, -1)]
