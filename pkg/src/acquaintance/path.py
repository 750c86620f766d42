"""Odd-even transposition strategy on the path and its closed-form analysis.

The public functions take 1-based vertex numbers where they describe the
analysis (``trajectory``, ``predicted_meeting_bound``); strategies themselves
are emitted on the 0-based path ``0 - 1 - ... - n-1``.

Round ``r`` (counting from 1) swaps every path edge ``(i, i+1)`` whose 1-based
lower end ``i`` has the same parity as ``r``.  After ``n`` rounds the line is
reversed; all pairs are already acquainted after ``n - 2`` rounds.
"""

from __future__ import annotations

from .exceptions import DegenerateAdjacentError, VertexOutOfRangeError
from .graph import family
from .strategy import Strategy


def odd_even_round(n: int, r: int) -> frozenset:
    """0-based edges swapped in round ``r`` (1-based) on an ``n``-vertex path."""
    start = 0 if r % 2 == 1 else 1
    return frozenset((i, i + 1) for i in range(start, n - 1, 2))


def path_strategy(n: int, full: bool = False) -> Strategy:
    """Odd-even strategy on ``family("path", n)``.

    ``full=False`` gives the ``n - 2`` round acquaintance strategy (empty for
    ``n <= 2``); ``full=True`` gives all ``n`` rounds, which reverse the line.
    """
    length = n if full else max(n - 2, 0)
    return Strategy(family("path", n), tuple(odd_even_round(n, r) for r in range(1, length + 1)))


def _reflect(x: int, n: int) -> int:
    # fold the integers onto 1..n, bouncing with a one-round pause at each end
    y = (x - 1) % (2 * n) + 1
    return y if y <= n else 2 * n + 1 - y


def trajectory(i: int, t: int, n: int) -> int:
    """1-based vertex of the agent that started on vertex ``i`` after ``t`` rounds.

    Odd starters climb to ``n``, wait a round and come back down; even starters
    mirror this towards vertex 1.
    """
    if not 1 <= i <= n:
        raise VertexOutOfRangeError(f"start {i} not in 1..{n}")
    if t < 0:
        raise ValueError("round must be non-negative")
    return _reflect(i + t if i % 2 == 1 else i - t, n)


def predicted_meeting_bound(i: int, j: int, n: int) -> int:
    """Round by which the agents starting on 1-based vertices ``i < j`` have met.

    Pairs with ``j - i`` even are covered by ``n - i - 1`` (both odd) or by
    its mirror image ``j - 2`` (both even).  An odd ``i`` and even ``j`` walk
    towards each other and meet by round ``j - i - 2``; an even ``i`` and odd
    ``j`` meet at round ``n - (j - i + 1) / 2``.  Every bound is at most
    ``n - 2``.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise VertexOutOfRangeError(f"({i}, {j}) not within 1..{n}")
    if i > j:
        i, j = j, i
    if j - i < 2:
        raise DegenerateAdjacentError(f"agents {i} and {j} start adjacent (round 0)")
    if i % 2 == j % 2:
        return n - i - 1 if i % 2 == 1 else j - 2
    if i % 2 == 1:
        return j - i - 2
    return n - (j - i + 1) // 2
