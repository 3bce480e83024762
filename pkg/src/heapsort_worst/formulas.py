"""Closed forms for worst-case comparison counts and the game's payoffs.

Integer formulas use shifts and bit counts only. The epsilon form of the
Heapsort count and the bounds on 2*s2(N) + e2(N) are real-valued.
"""

import math

from .bitmath import ceil_lg, e2, floor_lg, s2

__all__ = [
    "DELTA",
    "c_of",
    "makeheap_max",
    "removeall_max",
    "heapsort_max",
    "heapsort_max_closed",
    "heapsort_max_pow2",
    "theta",
    "epsilon",
    "heapsort_max_epsilon",
    "lambda_star",
    "sum_lambda_star",
    "lambda_win",
    "lambda_win_total",
    "p_par",
    "p_ub",
    "p_ub_literal",
    "f_s2e2",
    "f_recurrence",
    "in_exception_set",
    "f_bound1",
    "f_bound2",
    "f_bound2_violations",
]

#: Supremum of epsilon over the integers, 1 - lg e + lg lg e.
DELTA = 1 - math.log2(math.e) + math.log2(math.log2(math.e))


def _at_least(n, lo):
    if n < lo:
        raise ValueError(f"N must be at least {lo}, got {n}")


def c_of(n: int) -> int:
    """1 when N <= 2**ceil(lg N) - 4, else 0."""
    _at_least(n, 1)
    return 1 if n <= (1 << ceil_lg(n)) - 4 else 0


def makeheap_max(n: int) -> int:
    _at_least(n, 1)
    return 2 * n - 2 * s2(n) - e2(n)


def removeall_max(n: int) -> int:
    _at_least(n, 2)
    d = floor_lg(n - 1)
    return 2 * (n - 1) * d - (1 << (d + 2)) + min(d, 2) + 4 + c_of(n)


def heapsort_max(n: int) -> int:
    """Worst case of the whole sort, defined as the sum of the two phases."""
    return makeheap_max(n) + removeall_max(n)


def heapsort_max_closed(n: int) -> int:
    """Single closed form in terms of ceil(lg N); equals heapsort_max."""
    _at_least(n, 2)
    d = ceil_lg(n)
    return (2 * (n - 1) * d - (1 << (d + 1)) - 2 * s2(n) - e2(n)
            + min(d, 3) + 5 + c_of(n))


def heapsort_max_pow2(n: int) -> int:
    """(2N - 3) * lg(N/2) + 3, valid for N = 2**k >= 8."""
    if n < 8 or n & (n - 1):
        raise ValueError("defined for powers of two >= 8")
    return (2 * n - 3) * (floor_lg(n) - 1) + 3


def theta(n: int) -> float:
    _at_least(n, 2)
    return ceil_lg(n - 1) - math.log2(n - 1)


def epsilon(n: int) -> float:
    t = theta(n)
    return 1 + t - 2.0 ** t


def heapsort_max_epsilon(n: int) -> float:
    """Real-valued form; rounds to heapsort_max(N)."""
    _at_least(n, 2)
    return (2 * (n - 1) * (math.log2((n - 1) / 2) + epsilon(n))
            - 2 * s2(n) - e2(n) + min(floor_lg(n - 1), 2) + 6 + c_of(n))


def lambda_star(i: int) -> int:
    """Delayed loss: 1 exactly at sizes 2**ceil(lg i) - 4."""
    _at_least(i, 1)
    return 1 if i == (1 << ceil_lg(i)) - 4 else 0


def sum_lambda_star(n: int) -> int:
    """Sum of lambda_star(i) for i = 2..n."""
    _at_least(n, 1)
    return max(floor_lg(n + 4), 3) - 3


def lambda_win(n: int, i: int) -> int:
    """Loss taken by win(N) at its move i (1 <= i < N)."""
    _at_least(n, 2)
    if not 1 <= i < n:
        raise ValueError(f"win({n}) makes moves 1..{n - 1}, not {i}")
    complete = (1 << floor_lg(n + 1)) - 1
    if n <= 7 or n == (1 << ceil_lg(n)) - 1 or i < complete:
        return 1 if i >= 8 and i & (i - 1) == 0 else 0
    return 1 if i == (1 << ceil_lg(i)) - 4 else 0


def lambda_win_total(n: int) -> int:
    _at_least(n, 2)
    return max(floor_lg(n + 3), 3) - 3


def p_par(n: int) -> int:
    """Payoff of the first N - 1 moves of par."""
    _at_least(n, 2)
    d = floor_lg(n - 1)
    return 2 * (n - 1) * d - (1 << (d + 2)) + min(d, 2) + 4


def _ub_prefix(x: int) -> int:
    # sum of cr_max(i) for i = 2..x, zero for x = 1
    d = floor_lg(x)
    return (2 * x + 1) * d - (1 << (d + 2)) + 4


def p_ub(n: int, m: int) -> int:
    """Sum of cr_max(i) for i = n..m (upper-bound payoff of those moves).

    ``m == n - 1`` is accepted as the empty range.
    """
    if n < 2 or m < n - 1:
        raise ValueError(f"need 2 <= n <= m, got ({n}, {m})")
    return _ub_prefix(m) - _ub_prefix(n - 1)


def p_ub_literal(n: int, m: int) -> int:
    return sum(floor_lg(i) + floor_lg(i - 1) for i in range(n, m + 1))


def f_s2e2(n: int) -> int:
    """2*s2(N) + e2(N)."""
    return 2 * s2(n) + e2(n)


def f_recurrence(n: int) -> int:
    """2*s2(N) + e2(N) by peeling off the top bit of N - 1."""
    _at_least(n, 1)
    extra = 0
    while n & (n - 1):
        extra += 2
        n -= 1 << floor_lg(n - 1)
    return extra + 2 + floor_lg(n)


def in_exception_set(n: int) -> bool:
    """Membership in {2**k : k >= 3} U {2**m * (2**k + 1) : k, m >= 1}."""
    if n >= 8 and n & (n - 1) == 0:
        return True
    if n < 2 or n & 1:
        return False
    odd = n >> e2(n)
    return odd >= 3 and (odd - 1) & (odd - 2) == 0


def f_bound1(n: int) -> float:
    _at_least(n, 2)
    return 2 * math.log2(n - (1 << floor_lg(n - 1)) + 1) + 2


def f_bound2(n: int) -> float:
    """Candidate tighter bound for N outside the exception set.

    2*lg(N - 2**a - 2**b + 1) + 2 with a = floor(lg(N - 1)) and
    b = floor(lg(N - 1 - 2**a)). Not a valid bound everywhere; see
    ``f_bound2_violations``. Needs N - 2**a >= 2.
    """
    _at_least(n, 2)
    rest = n - (1 << floor_lg(n - 1))
    if rest < 2:
        raise ValueError(f"bound undefined for N = {n}")
    return 2 * math.log2(rest - (1 << floor_lg(rest - 1)) + 1) + 2


def f_bound2_violations(limit: int) -> list[int]:
    """N in 2..limit outside the exception set where f(N) > f_bound2(N)."""
    out = []
    for n in range(2, limit + 1):
        if in_exception_set(n) or n - (1 << floor_lg(n - 1)) < 2:
            continue
        if f_s2e2(n) > f_bound2(n) + 1e-9:
            out.append(n)
    return out
