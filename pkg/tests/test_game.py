import pytest
from hypothesis import given, strategies as st

from heapsort_worst.formulas import lambda_star, lambda_win, p_par, removeall_max
from heapsort_worst.game import (
    credit, cr_max, is_lossless, level_loss, loss, par_pulls, play, strategy_par, strategy_win,
)
from heapsort_worst.heap import removeall, removemax
from heapsort_worst.inverse import InvalidMove, unremovemax
from heapsort_worst.oracle import iter_heaps, valid_moves

from heap_strategies import heaps

H7 = [7, 6, 3, 4, 5, 2, 1]
H12 = [12, 11, 7, 9, 10, 2, 3, 6, 8, 5, 4, 1]
H15 = [15, 12, 14, 9, 11, 13, 3, 4, 6, 10, 5, 7, 8, 2, 1]
H17 = [17, 16, 15, 12, 11, 13, 14, 9, 6, 10, 5, 7, 8, 2, 3, 1, 4]


def test_credit_examples():
    assert credit(7, 7) == 4
    assert credit(12, 12) == 5
    assert credit(1, 1) == 0


def test_cr_max_and_loss_examples():
    assert [cr_max(i) for i in (12, 2, 7)] == [6, 1, 4]
    assert loss(12, 12) == 1 and loss(7, 7) == 0 and loss(12, 8) == 0


def test_is_lossless_examples():
    assert is_lossless(12, 8) and is_lossless(12, 11)
    assert not is_lossless(12, 3)


def test_play():
    log = play([1], [1, 1, 1, 1, 2, 1])
    assert log.final_heap == H7 and log.payoff == 14
    log = play([1], [1])
    assert log.final_heap == [2, 1] and log.payoff == 0
    assert play(H15, [1, 4]).final_heap == H17


def test_play_snapshots_and_bad_move():
    log = play([1], [1, 1], snapshots=True)
    assert log.heaps == [[1], [2, 1], [3, 2, 1]]
    with pytest.raises(InvalidMove):
        play(H7, [7])


def test_par_prefixes():
    assert par_pulls(6) == [1, 1, 1, 1, 2, 1]
    assert par_pulls(14) == [1, 1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1]
    assert par_pulls(14)[6:] == [1, 2, 1, 2, 2, 1, 2, 1]
    assert strategy_par(15).pulls == tuple(par_pulls(14))


def test_win_examples():
    assert strategy_win(12).pulls == (1, 1, 1, 1, 2, 1, 1, 4, 1, 4, 1)
    assert play([1], strategy_win(12).pulls).final_heap == H12
    log28 = play([1], strategy_win(28).pulls)
    assert log28.pulls[-13:] == [1, 4] * 6 + [1]
    assert all(r.loss == 0 for r in log28.records[-13:])
    log30 = play([1], strategy_win(30).pulls)
    assert log30.pulls[27:29] == [1, 2]
    assert log30.records[27].loss == 1


def test_level_loss():
    par = play([1], par_pulls(30))
    assert level_loss(par, 2) == 0
    assert level_loss(par, 3) == 1
    assert level_loss(play([1], strategy_win(28).pulls), 4) == 0
    with pytest.raises(ValueError):
        level_loss(par, 6)


def test_credit_rejects_bad_index():
    with pytest.raises(ValueError):
        credit(5, 6)


def test_credit_equals_removemax_cost_on_small_heaps():
    for n in range(1, 9):
        for h in iter_heaps(n):
            for k in valid_moves(h):
                bigger = unremovemax(h, k)
                assert removemax(bigger).comparisons == credit(n, k)


@given(heaps(max_size=40), st.integers(0, 1 << 16))
def test_credit_matches_measured(h, pick):
    moves = valid_moves(h)
    k = moves[pick % len(moves)]
    n = len(h)
    assert removemax(unremovemax(h, k)).comparisons == credit(n, k)


def test_is_lossless_agrees_with_loss_structurally():
    # k is valid for some heap iff it is not a proper ancestor of (n + 1) // 2
    for n in range(2, 300):
        anchor = (n + 1) >> 1
        for k in range(1, n + 1):
            j = anchor
            while j > k:
                j >>= 1
            if j == k and k != anchor:
                continue
            assert is_lossless(n, k) == (loss(n, k) == 0), (n, k)


def test_payoff_is_removeall_count():
    for n in range(2, 80):
        log = play([1], strategy_win(n).pulls)
        assert removeall(log.final_heap).comparisons == log.payoff == removeall_max(n)


def test_par_loss_pattern_and_payoff():
    log = play([1], par_pulls(600))
    for r in log.records[1:]:
        i = r.size_before
        assert r.loss == (1 if i >= 8 and i & (i - 1) == 0 else 0), i
    for n in (2, 7, 12, 100, 601):
        assert play([1], par_pulls(n - 1)).payoff == p_par(n)


def test_win_loss_per_move():
    for n in (8, 12, 28, 30, 100, 250, 500):
        log = play([1], strategy_win(n).pulls)
        assert [r.loss for r in log.records[1:]] == [lambda_win(n, i) for i in range(2, n)]


def test_win_meets_the_minimum_loss_exactly_at_lambda_star():
    for n in range(2, 200):
        log = play([1], strategy_win(n).pulls)
        assert log.accumulated_loss == sum(lambda_star(i) for i in range(2, n))
