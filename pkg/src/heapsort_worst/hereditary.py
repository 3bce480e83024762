"""Hereditary worst-case heaps: worst-case heaps all of whose residues are
worst-case too.

Such a heap is built by moves that each lose exactly the delayed loss for
their size, so a depth-first walk that only takes those moves finds all of
them. The walk dies out at 22 nodes.

Within that range the only size that forces a loss is 12, where every
worst-case heap has exactly two valid moves, both losing one credit: its last
node and that node's parent. The census taking only the last node at such
sizes has 1017 heaps; taking both gives all 1865 hereditary worst-case heaps.
"""

from dataclasses import dataclass, field

from .formulas import lambda_star
from .game import loss
from .inverse import creative_sequence, unremovemax
from .oracle import valid_moves

__all__ = ["HereditaryCensus", "enumerate_hereditary", "is_hereditary"]


@dataclass
class HereditaryCensus:
    heaps: list[list[int]]
    sequences: list[list[int]]
    per_size_counts: dict[int, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.heaps)

    @property
    def max_size(self) -> int:
        return max(self.per_size_counts)

    def __contains__(self, heap) -> bool:
        return list(heap) in self.heaps

    def to_dict(self) -> dict:
        return {
            "total": self.count,
            "max_size": self.max_size,
            "per_size_counts": {str(k): v for k, v in sorted(self.per_size_counts.items())},
            "heaps": [
                {"n": len(h), "values": h, "creative_sequence": s}
                for h, s in zip(self.heaps, self.sequences)
            ],
        }


def enumerate_hereditary(lossy_moves: str = "last") -> HereditaryCensus:
    """Pre-order walk of the tree of greedy creative sequences, sizes 1 and up.

    Moves are tried in ascending index order. ``lossy_moves`` selects which
    moves are followed at sizes where a loss is due: ``"last"`` only pulls
    down the last node, ``"all"`` follows every move with the due loss.
    """
    if lossy_moves not in ("last", "all"):
        raise ValueError(f"lossy_moves must be 'last' or 'all', not {lossy_moves!r}")
    heaps, sequences, sizes = [], [], {}

    def visit(h, pulls):
        size = len(h)
        heaps.append(h)
        sequences.append(pulls)
        sizes[size] = sizes.get(size, 0) + 1
        target = lambda_star(size) if size >= 2 else 0
        for k in valid_moves(h):
            if target and lossy_moves == "last" and k != size:
                continue
            if loss(size, k) == target:
                visit(unremovemax(h, k), pulls + [h[k - 1]])

    visit([1], [])
    return HereditaryCensus(heaps, sequences, sizes)


def is_hereditary(heap) -> bool:
    """True iff every move of the heap's creative sequence loses exactly lambda_star."""
    h = [1]
    for v in creative_sequence(heap):
        size = len(h)
        k = h.index(v) + 1
        if loss(size, k) != (lambda_star(size) if size >= 2 else 0):
            return False
        h = unremovemax(h, k)
    return True
