"""Acquaintance strategies for arbitrary connected graphs via tree contours.

The odd-even path strategy is run on the marked positions of a spanning
tree's contour.  Exchanging two agents that sit on consecutive marks is a
short forward-then-back run of swaps along the walk (a :class:`SwapJob`, at
most five tree edges).  Jobs of one virtual round whose vertex footprints
overlap get different colours; each colour class then runs in lockstep over
five sub-rounds.  With at most ``4 * Δ_T`` colours every virtual round costs
at most ``20 * Δ_T`` rounds on the graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from .bounds import contour_bound
from .contour import Contour, contour as build_marked_contour
from .exceptions import ColorOverflowError
from .graph import Graph, max_degree, spanning_tree
from .simulator import RunReport, run
from .strategy import Strategy

STEPS_PER_COLOR = 5
PATH_ROUNDS = ("n", "n-2")


class SwapJob(NamedTuple):
    """Exchange of the agents on marks ``virtual_index`` and ``virtual_index + 1``.

    ``gamma_interval`` is the pair of walk positions ``(i, j)``;
    ``edge_sequence`` lists the ``2 * (j - i) - 1`` tree edges to swap in
    order and ``footprint`` the tree vertices the exchange touches.
    """

    virtual_index: int
    gamma_interval: tuple
    edge_sequence: tuple
    footprint: frozenset
    color: int | None = None


def swap_job(c: Contour, k: int) -> SwapJob:
    i, j = c.marks[k], c.marks[k + 1]
    # walk i -> j, then back from j - 1 to i
    forward = c.steps[i:j]
    return SwapJob(k, (i, j), forward + forward[-2::-1], frozenset(c.positions[i : j + 1]))


def jobs_for_round(c: Contour, r: int) -> list[SwapJob]:
    """Uncoloured jobs emulating round ``r`` (1-based) of the odd-even strategy.

    The marks act as virtual path vertices; round ``r`` exchanges the pairs
    ``(k, k + 1)`` with ``k + 1`` of the same parity as ``r``.
    """
    if r < 1:
        raise ValueError(f"rounds are numbered from 1, got {r}")
    marks, steps, pos = c.marks, c.steps, c.positions
    jobs = []
    # same construction as swap_job, unrolled: this runs once per parity per synthesis
    for k in range(0 if r % 2 else 1, len(marks) - 1, 2):
        i, j = marks[k], marks[k + 1]
        forward = steps[i:j]
        jobs.append(SwapJob(k, (i, j), forward + forward[-2::-1], frozenset(pos[i : j + 1])))
    return jobs


def conflict_color(jobs: list[SwapJob], max_deg: int) -> list[SwapJob]:
    """Greedy colouring of one round's jobs; overlapping footprints conflict.

    Jobs are coloured in ascending ``virtual_index`` with the smallest colour
    not already taken by a conflicting job.  Needing more than
    ``4 * max_deg`` colours raises :class:`ColorOverflowError`.
    """
    limit = 4 * max_deg
    used = defaultdict(int)  # vertex -> bitmask of colours of jobs covering it
    out = []
    for k, interval, seq, footprint, _ in sorted(jobs):
        taken = 0
        for v in footprint:
            taken |= used[v]
        color = (~taken & (taken + 1)).bit_length() - 1  # lowest free colour
        if color >= limit:
            raise ColorOverflowError(f"job {k} needs colour {color}, only {limit} allowed")
        bit = 1 << color
        for v in footprint:
            used[v] |= bit
        out.append(SwapJob(k, interval, seq, footprint, color))
    return out


def expand_round(jobs: list[SwapJob]) -> list[frozenset]:
    """Sub-rounds realising one coloured round: five per colour, in colour order."""
    steps = {}  # colour -> one edge list per sub-round
    for jb in jobs:
        slots = steps.get(jb.color)
        if slots is None:
            slots = steps[jb.color] = [[] for _ in range(STEPS_PER_COLOR)]
        for s, e in enumerate(jb.edge_sequence):
            slots[s].append(e)
    return [frozenset(edges) for col in sorted(steps) for edges in steps[col]]


@dataclass
class SynthesisReport:
    strategy: Strategy
    tree_max_degree: int
    graph_max_degree: int
    rounds_used: int
    bound: int
    graph_bound: int
    max_colors: int
    completion_round: int | None
    verified: bool
    contour: Contour = field(repr=False)
    run: RunReport = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "rounds_used": self.rounds_used,
            "bound": self.bound,
            "graph_bound": self.graph_bound,
            "tree_max_degree": self.tree_max_degree,
            "graph_max_degree": self.graph_max_degree,
            "completion_round": self.completion_round,
            "max_colors": self.max_colors,
            "verified": self.verified,
        }


def synthesize(
    g: Graph, root: int = 0, policy: str = "dfs", path_rounds: str = "n"
) -> SynthesisReport:
    """Build, verify and report the contour strategy for a connected graph.

    ``path_rounds="n"`` emulates the full reversal (always complete);
    ``"n-2"`` emulates only the first ``n - 2`` path rounds, which is
    checked by simulation but carries no guarantee.
    """
    if path_rounds not in PATH_ROUNDS:
        raise ValueError(f"path_rounds must be one of {PATH_ROUNDS}, got {path_rounds!r}")
    tree = spanning_tree(g, root, policy)
    c = build_marked_contour(tree)
    n = g.n
    delta_t = tree.max_degree()

    # jobs depend only on the parity of the virtual round
    blocks = {}
    max_colors = 0
    for parity in (1, 2):
        colored = conflict_color(jobs_for_round(c, parity), delta_t) if n else []
        max_colors = max(max_colors, len({jb.color for jb in colored}))
        blocks[parity % 2] = expand_round(colored)

    virtual_rounds = n if path_rounds == "n" else max(n - 2, 0)
    odd, even = blocks[1], blocks[0]
    rounds = (odd + even) * (virtual_rounds // 2) + (odd if virtual_rounds % 2 else [])
    while rounds and not rounds[-1]:
        rounds.pop()
    strategy = Strategy(g, tuple(rounds))
    report = run(g, strategy)
    delta_g = max_degree(g)
    return SynthesisReport(
        strategy=strategy,
        tree_max_degree=delta_t,
        graph_max_degree=delta_g,
        rounds_used=len(rounds),
        bound=contour_bound(n, delta_t),
        graph_bound=contour_bound(n, delta_g),
        max_colors=max_colors,
        completion_round=report.completion_round,
        verified=report.valid and report.all_acquainted,
        contour=c,
        run=report,
    )
