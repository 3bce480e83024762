"""The solitaire game of pull downs.

A move at heap size i pulls down the node at index k (an ``unremovemax``).
Its credit is what the matching forward RemoveMax will pay, its loss is the
shortfall from the best credit possible at size i. Strategies are sequences
of pull-down values, which is how traces are recorded.
"""

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .bitmath import ceil_lg, floor_lg, num_children
from .heap import validate
from .inverse import InvalidMove

__all__ = [
    "MoveRecord",
    "GameLog",
    "PullSchedule",
    "credit",
    "cr_max",
    "loss",
    "is_lossless",
    "play",
    "par_pulls",
    "strategy_par",
    "strategy_win",
    "level_loss",
]


@dataclass(frozen=True)
class MoveRecord:
    size_before: int
    move_index: int
    pull_value: int
    credit: int
    loss: int


@dataclass
class GameLog:
    records: list[MoveRecord]
    final_heap: list[int]
    payoff: int
    accumulated_loss: int
    heaps: list[list[int]] = field(default_factory=list)

    @property
    def pulls(self) -> list[int]:
        return [r.pull_value for r in self.records]

    @property
    def moves(self) -> list[int]:
        return [r.move_index for r in self.records]


@dataclass(frozen=True)
class PullSchedule:
    strategy_name: str
    pulls: tuple[int, ...]


def credit(i: int, k: int) -> int:
    """Comparisons RemoveMax will spend undoing a pull down of node k at size i."""
    if not 1 <= k <= i:
        raise ValueError(f"move {k} is outside a heap of {i} nodes")
    if k == 1:
        # the patch stops at the root: only the root's children are examined
        return num_children(1, i)
    return 2 * (floor_lg(k) - 1) + num_children(k >> 1, i) + num_children(k, i)


def cr_max(i: int) -> int:
    """Largest credit any move can score at heap size i >= 2."""
    if i < 2:
        raise ValueError("cr_max needs a heap of at least 2 nodes")
    return floor_lg(i) + floor_lg(i - 1)


def loss(i: int, k: int) -> int:
    if i == 1:
        return 0
    return cr_max(i) - credit(i, k)


def is_lossless(n: int, k: int) -> bool:
    """Structural test for a zero-loss move k in a heap of n nodes."""
    top = 1 << floor_lg(n)
    if k == top or 2 * k == top:
        return True
    if top <= k and 2 * (k >> 1) < n:
        return True
    return top <= 2 * k < n


def _game(start: Sequence[int], pulls: Sequence[int], snapshots: bool):
    n = len(start)
    a = [0, *validate(start)] + [0] * len(pulls)
    pos = [0] * (n + len(pulls) + 1)
    for idx in range(1, n + 1):
        pos[a[idx]] = idx
    records = []
    heaps = [a[1 : n + 1]] if snapshots else []
    payoff = lost = 0
    for number, v in enumerate(pulls, start=1):
        k = pos[v] if 1 <= v <= n else 0
        if k == 0 or a[k] > a[(n + 1) >> 1]:
            raise InvalidMove(k, number)
        cr = credit(n, k)
        ls = loss(n, k)
        records.append(MoveRecord(n, k, v, cr, ls))
        if n >= 2:
            payoff += cr
            lost += ls
        # shift the root-to-k path one level down, v lands in the new last slot
        j = k
        while j > 1:
            parent = j >> 1
            a[j] = a[parent]
            pos[a[j]] = j
            j = parent
        n += 1
        a[1] = n
        pos[n] = 1
        a[n] = v
        pos[v] = n
        if snapshots:
            heaps.append(a[1 : n + 1])
    return GameLog(records, a[1 : n + 1], payoff, lost, heaps)


def play(start: Sequence[int], pulls: Sequence[int], snapshots: bool = False) -> GameLog:
    """Apply pull downs (given by value) to ``start``.

    With ``snapshots`` the log also keeps every intermediate heap, starting
    with ``start`` itself.
    """
    return _game(start, pulls, snapshots)


def _par_iter() -> Iterator[int]:
    yield from (1, 1, 1, 1, 2, 1)
    level = 3
    while True:
        yield from (1, 2, 1, 2)
        for _ in range((1 << (level - 1)) - 2):
            yield 2
            yield 1
        level += 1


def par_pulls(count: int) -> list[int]:
    """The first ``count`` pull values of the level-by-level strategy par."""
    out = []
    if count <= 0:
        return out
    for v in _par_iter():
        out.append(v)
        if len(out) == count:
            return out
    return out


def strategy_par(limit: int) -> PullSchedule:
    """par truncated to the limit - 1 pulls that build a heap of ``limit`` nodes."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    return PullSchedule("par", tuple(par_pulls(limit - 1)))


def strategy_win(n: int) -> PullSchedule:
    """The N - 1 pulls of win(N): par up to the last complete heap, then greedy.

    The greedy part alternates pulls of 1 and 4 in the last level, takes the
    unavoidable loss by pulling 1 at move 2I - 2 and finishes with a pull of 2.
    """
    if n < 2:
        raise ValueError("N must be at least 2")
    name = f"win({n})"
    if n <= 7 or n == (1 << ceil_lg(n)) - 1:
        return PullSchedule(name, tuple(par_pulls(n - 1)))
    complete = (1 << floor_lg(n + 1)) - 1
    pulls = par_pulls(complete - 1)
    last = n - 1
    for move in range(complete, min(2 * complete - 3, last) + 1):
        pulls.append(1 if (move - complete) % 2 == 0 else 4)
    if last >= 2 * complete - 2:
        pulls.append(1)
    if last >= 2 * complete - 1:
        pulls.append(2)
    return PullSchedule(name, tuple(pulls))


def level_loss(log: GameLog, level: int) -> int:
    """Total loss of the moves made at sizes 2**level - 1 .. 2**(level+1) - 2.

    A game that stops inside the level contributes the moves it made.
    """
    lo, hi = (1 << level) - 1, (1 << (level + 1)) - 2
    covered = [r for r in log.records if lo <= r.size_before <= hi]
    if not covered:
        raise ValueError(f"game log does not reach level {level}")
    return sum(r.loss for r in covered)
