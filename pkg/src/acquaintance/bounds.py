"""Closed-form bounds on acquaintance time.

The barbell lower bound counts configurations: with ``k`` swaps across the
bridge, ``2k`` configurations have agents acquainted with everyone on both
bridge ends, and the remaining agents of the two cliques can only meet while
both sit on the bridge.  Any ``m``-round strategy therefore satisfies
``m + 1 >= 2k + (ceil(n/2) - k) * (floor(n/2) - k)`` for some integer ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BarbellBound:
    n: int
    best_k: int
    min_over_k: int
    lower_bound: int
    real_min: Fraction
    real_argmin: Fraction

    def per_k(self) -> dict:
        """Configuration count for every ``k`` in ``0..floor(n/2)``."""
        return {k: barbell_configurations(self.n, k) for k in range(self.n // 2 + 1)}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "per_k": {str(k): v for k, v in self.per_k().items()},
            "best_k": self.best_k,
            "min_over_k": self.min_over_k,
            "lower_bound": self.lower_bound,
            "real_min": str(self.real_min),
            "real_argmin": str(self.real_argmin),
            "real_lower_bound": math.ceil(self.real_min) - 1,
        }


def barbell_configurations(n: int, k: int) -> int:
    """Configurations needed when ``k`` swaps cross the bridge of ``B_n``."""
    big, small = (n + 1) // 2, n // 2
    return 2 * k + (big - k) * (small - k)


def barbell_lower_bound(n: int) -> BarbellBound:
    """Lower bound ``m >= n - 2`` on the rounds of any strategy for ``B_n``.

    The bound minimises over integer ``k`` in ``0..floor(n/2)``.  The count
    ``k^2 - (n-2)k + ceil(n/2)floor(n/2)`` is a convex quadratic with vertex
    ``(n-2)/2``, so only the integers next to the vertex need checking.  The
    real relaxation is reported alongside and gives the same integer bound.
    """
    if n < 2:
        raise ValueError(f"barbell bound needs n >= 2, got {n}")
    lo = (n - 2) // 2
    candidates = [k for k in (lo, lo + 1) if 0 <= k <= n // 2]
    best_k = min(candidates, key=lambda k: (barbell_configurations(n, k), k))
    best = barbell_configurations(n, best_k)
    argmin = Fraction(n - 2, 2)
    real_min = ((n + 1) // 2) * (n // 2) - Fraction((n - 2) ** 2, 4)
    bound = BarbellBound(n, best_k, best, best - 1, real_min, argmin)
    assert bound.lower_bound == n - 2, (n, bound.lower_bound)
    assert math.ceil(real_min) - 1 == n - 2, (n, real_min)
    return bound


def contour_bound(n: int, max_deg: int) -> int:
    """The ``20 * Δ * n`` round budget of the contour strategy."""
    if n < 0 or max_deg < 0:
        raise ValueError("n and max_deg must be non-negative")
    return 20 * max_deg * n
