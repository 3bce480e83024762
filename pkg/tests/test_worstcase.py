import json
from pathlib import Path

import pytest

from heapsort_worst.formulas import heapsort_max, removeall_max
from heapsort_worst.game import play, strategy_win
from heapsort_worst.heap import heapsort, makeheap, removeall
from heapsort_worst.inverse import InvalidMove, creative_sequence
from heapsort_worst.worstcase import (
    HeapBuilder, SweepRow, iter_worst_heaps, measure, sweep, worst_array, worst_heap,
)

GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_500.json").read_text())


def test_golden_500():
    assert list(strategy_win(500).pulls) == GOLDEN["pulls"]
    assert worst_heap(500) == GOLDEN["heap"]
    assert worst_array(500) == GOLDEN["array"]
    assert makeheap(GOLDEN["array"]) == (GOLDEN["heap"], GOLDEN["makeheap"])
    assert removeall(GOLDEN["heap"]).comparisons == GOLDEN["removeall"]
    assert heapsort(GOLDEN["array"]).comparisons == GOLDEN["heapsort"]


def test_small_heaps():
    assert worst_heap(2) == [2, 1]
    assert worst_heap(12) == [12, 11, 7, 9, 10, 2, 3, 6, 8, 5, 4, 1]
    assert creative_sequence(worst_heap(12)) == [1, 1, 1, 1, 2, 1, 1, 4, 1, 4, 1]


def test_builder_rejects_bad_pull():
    b = HeapBuilder()
    for v in (1, 1, 1, 1, 2, 1):
        b.pull(v)
    with pytest.raises(InvalidMove):
        b.pull(7)


def test_incremental_heaps_equal_fresh_playback():
    for n, h in iter_worst_heaps(2, 300):
        assert h == play([1], strategy_win(n).pulls).final_heap


def test_measure_row():
    row = measure(500, worst_heap(500))
    assert tuple(row) == (500, 986, 986, 6967, 6967, 7953, 7953, True)
    assert SweepRow._fields[0] == "N" and SweepRow._fields[-1] == "match"


def test_sweep_small_range():
    rows = list(sweep(2, 260))
    assert [r.N for r in rows] == list(range(2, 261))
    assert all(r.match for r in rows)


def test_measure_flags_wrong_heap():
    # a heap that is not worst case: measured RemoveAll falls short of the formula
    h = list(range(9, 0, -1))
    row = measure(9, h)
    assert removeall(h).comparisons < removeall_max(9)
    assert not row.match


def test_worst_array_total():
    for n in (2, 3, 7, 12, 33, 64, 65):
        assert heapsort(worst_array(n)).comparisons == heapsort_max(n)
