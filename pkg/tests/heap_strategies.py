"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from heapsort_worst.inverse import unremovemax_inplace
from heapsort_worst.oracle import valid_moves


def build_heap(choices):
    """Replay pull downs starting from [1]; each choice picks one of the valid moves."""
    a = [0, 1]
    for c in choices:
        n = len(a) - 1
        moves = valid_moves(a[1:])
        a.append(0)
        unremovemax_inplace(a, n, moves[c % len(moves)])
    return a[1:]


def heaps(min_size=1, max_size=64):
    return st.lists(
        st.integers(0, 1 << 16), min_size=min_size - 1, max_size=max_size - 1
    ).map(build_heap)


def heap_and_node(min_size=1, max_size=64):
    return heaps(min_size, max_size).flatmap(
        lambda h: st.tuples(st.just(h), st.integers(1, len(h)))
    )
