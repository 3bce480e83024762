import math

import pytest
from hypothesis import given, strategies as st

from heapsort_worst.bitmath import (
    ceil_lg, e2, floor_lg, leftmost_descendant, num_children, path_to, s2, subtree_depth,
)

sizes = st.integers(1, 1 << 40)


@pytest.mark.parametrize("n, want", [(1, 0), (12, 3), (1024, 10)])
def test_floor_lg(n, want):
    assert floor_lg(n) == want


@pytest.mark.parametrize("n, want", [(1, 0), (12, 4), (500, 9)])
def test_ceil_lg(n, want):
    assert ceil_lg(n) == want


def test_digit_sum_and_valuation():
    assert s2(1) == 1 and s2(500) == 6 and s2(1 << 30) == 1
    assert e2(7) == 0 and e2(500) == 2 and e2(1 << 30) == 30


@pytest.mark.parametrize("m, want", [(6, 1), (7, 0), (5, 2)])
def test_num_children(m, want):
    assert num_children(m, 12) == want


@pytest.mark.parametrize("i, depth, leaf", [(1, 3, 8), (3, 2, 12), (7, 0, 7)])
def test_subtree_depth_and_leftmost_leaf(i, depth, leaf):
    assert subtree_depth(i, 12) == depth
    assert leftmost_descendant(i, 12) == leaf


def test_path_to():
    assert path_to(1) == [1]
    assert path_to(7) == [1, 3, 7]
    assert path_to(12) == [1, 3, 6, 12]


@pytest.mark.parametrize("fn", [floor_lg, ceil_lg, s2, e2])
def test_rejects_nonpositive(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_rejects_node_outside_tree():
    with pytest.raises(ValueError):
        num_children(13, 12)
    with pytest.raises(ValueError):
        subtree_depth(13, 12)


@given(sizes)
def test_lg_brackets(n):
    assert 1 << floor_lg(n) <= n < 1 << (floor_lg(n) + 1)
    assert 1 << ceil_lg(n) >= n
    assert ceil_lg(n) == 0 or 1 << (ceil_lg(n) - 1) < n


@given(sizes)
def test_digits_against_string_forms(n):
    bits = bin(n)[2:]
    assert s2(n) == bits.count("1")
    assert e2(n) == len(bits) - len(bits.rstrip("0"))


@given(st.integers(1, 1 << 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_subtree_depth_is_two_sided(case):
    n, i = case
    d = subtree_depth(i, n)
    assert i << d <= n < i << (d + 1)
    leaf = leftmost_descendant(i, n)
    assert num_children(leaf, n) == 0 and i in path_to(leaf)


@given(st.integers(1, 1 << 30))
def test_path_is_halving_chain(j):
    p = path_to(j)
    assert p[0] == 1 and p[-1] == j and len(p) == floor_lg(j) + 1
    assert all(b >> 1 == a for a, b in zip(p, p[1:]))


def test_floor_lg_matches_float_log_for_small_n():
    assert all(floor_lg(n) == math.floor(math.log2(n)) for n in range(1, 5000))
