"""Worst-case inputs and exact comparison counts for Heapsort."""

from .bitmath import ceil_lg, e2, floor_lg, leftmost_descendant, num_children, path_to, s2, subtree_depth
from .formulas import (
    heapsort_max,
    heapsort_max_closed,
    heapsort_max_epsilon,
    lambda_star,
    lambda_win_total,
    makeheap_max,
    p_ub,
    removeall_max,
    sum_lambda_star,
)
from .game import GameLog, PullSchedule, credit, cr_max, is_lossless, loss, play, strategy_par, strategy_win
from .heap import (
    CountedRun,
    HeapError,
    NotAPermutation,
    OrderViolation,
    fixheap,
    heapsort,
    is_heap,
    makeheap,
    removeall,
    removemax,
)
from .hereditary import HereditaryCensus, enumerate_hereditary, is_hereditary
from .inverse import InvalidMove, creative_sequence, gen_makeheap_worst, pulldown, unfixheap, unremovemax
from .worstcase import SweepRow, sweep, worst_array, worst_heap

__version__ = "0.1.0"
