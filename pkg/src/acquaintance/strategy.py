"""The :class:`Strategy` value and its JSON form."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InvalidMatchingError
from .graph import Graph, make_matching, matching_problem


@dataclass(frozen=True)
class Strategy:
    """Ordered sequence of matchings (rounds) on ``graph``.

    Rounds may be empty.  Construction does not validate the rounds; call
    :meth:`validate` or run the strategy through the simulator.
    """

    graph: Graph
    rounds: tuple

    def __len__(self):
        return len(self.rounds)

    def validate(self) -> None:
        for r, m in enumerate(self.rounds, start=1):
            problem = matching_problem(self.graph, m)
            if problem is not None:
                raise InvalidMatchingError(problem, round_index=r)

    def edges_used(self) -> frozenset:
        return frozenset().union(*set(self.rounds))

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "rounds": [[list(e) for e in sorted(m)] for m in self.rounds],
        }


def make_strategy(graph: Graph, rounds) -> Strategy:
    return Strategy(graph, tuple(make_matching(m) for m in rounds))
