"""Run strategies and track which agents have become acquainted.

Agent ``i`` starts on vertex ``i``.  After the initial placement and after
every round, each pair of agents on adjacent vertices is marked acquainted.
The relation lives in a triangular byte table indexed by agent pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .exceptions import InvalidMatchingError
from .graph import Edge, Graph, matching_problem
from .strategy import Strategy


def pair_index(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    return b * (b - 1) // 2 + a


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass
class SimulationState:
    """Arrangement of agents plus the acquaintance table.

    ``agent_at[v]`` is the agent on vertex ``v``.  ``acquainted`` is a
    bytearray over agent pairs (see :func:`pair_index`) and ``known`` counts
    its set entries.
    """

    agent_at: list
    acquainted: bytearray
    known: int = 0
    round: int = 0

    def copy(self) -> "SimulationState":
        return SimulationState(
            list(self.agent_at), bytearray(self.acquainted), self.known, self.round
        )

    def is_acquainted(self, a: int, b: int) -> bool:
        return a != b and bool(self.acquainted[pair_index(a, b)])

    def acquainted_pairs(self) -> set:
        n = len(self.agent_at)
        return {(a, b) for b in range(n) for a in range(b) if self.acquainted[pair_index(a, b)]}

    def all_acquainted(self) -> bool:
        return self.known == pair_count(len(self.agent_at))


def init_state(g: Graph) -> SimulationState:
    table = bytearray(pair_count(g.n))
    for u, v in g.edges:
        table[v * (v - 1) // 2 + u] = 1  # edges are stored with u < v
    return SimulationState(list(range(g.n)), table, len(g.edges))


def _apply_in_place(s: SimulationState, g: Graph, m: Iterable[Edge]) -> None:
    agent_at = s.agent_at
    moved = []
    for u, v in m:
        agent_at[u], agent_at[v] = agent_at[v], agent_at[u]
        moved.append(u)
        moved.append(v)
    # only agents that moved can have new neighbours
    adj = g.adjacency
    table = s.acquainted
    for u in moved:
        a = agent_at[u]
        for w in adj[u]:
            b = agent_at[w]
            k = b * (b - 1) // 2 + a if a < b else a * (a - 1) // 2 + b
            if not table[k]:
                table[k] = 1
                s.known += 1
    s.round += 1


def apply_matching(s: SimulationState, g: Graph, m: Iterable[Edge]) -> SimulationState:
    """Return the state after swapping the agents on every edge of ``m``."""
    m = list(m)
    problem = matching_problem(g, m)
    if problem is not None:
        raise InvalidMatchingError(problem)
    out = s.copy()
    _apply_in_place(out, g, m)
    return out


@dataclass
class RunReport:
    valid: bool
    rounds_applied: int
    all_acquainted: bool
    completion_round: int | None
    acquainted_pair_count: int
    pair_count: int
    history: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "rounds_applied": self.rounds_applied,
            "all_acquainted": self.all_acquainted,
            "completion_round": self.completion_round,
            "acquainted_pair_count": self.acquainted_pair_count,
            "pair_count": self.pair_count,
        }


def run(
    g: Graph,
    strategy: Strategy,
    *,
    check: bool = True,
    record_history: bool = False,
    trace: Callable[[int, frozenset, int], None] | None = None,
) -> RunReport:
    """Execute ``strategy`` on ``g`` from the identity arrangement.

    ``completion_round`` is the first round after which every pair is
    acquainted (0 if the graph starts complete) or ``None``.  With
    ``check`` each round is validated as a matching first and an
    :class:`InvalidMatchingError` names the offending round.  ``trace`` is
    called as ``trace(round, matching, newly_acquainted)`` after each round;
    ``record_history`` keeps the acquainted-pair count after every round
    (index 0 is the initial configuration).
    """
    n = g.n
    total = pair_count(n)
    # agent x agent table; faster to index than the triangular one
    met = [bytearray(n) for _ in range(n)]
    for u, v in g.edges:
        met[u][v] = met[v][u] = 1
    known = len(g.edges)
    completion = 0 if known == total else None
    history = [known] if record_history else []
    edges = g.edges
    adj = g.adjacency
    agent_at = list(range(n))
    rounds = strategy.rounds
    # strategies reuse round objects: validate and plan each distinct one once
    checked = set()
    plans = {}

    def check_round(m, r):
        if len({x for e in m for x in e}) != 2 * len(m) or not edges.issuperset(m):
            # slow path also accepts edges written as (v, u)
            problem = matching_problem(g, m)
            if problem is not None:
                raise InvalidMatchingError(problem, round_index=r)
        checked.add(m)

    def plan_for(m, r):
        if check:
            check_round(m, r)
        # (vertex, neighbour) pairs to look at after the swap; the two agents
        # on a swapped edge were already adjacent before it
        pairs = [(x, w) for u, v in m for x, y in ((u, v), (v, u)) for w in adj[x] if w != y]
        plan = plans[m] = (tuple(m), pairs)
        return plan

    r = 0
    if completion is None:
        for m in rounds:
            r += 1
            before = known
            if m:
                swaps, pairs = plans.get(m) or plan_for(m, r)
                for u, v in swaps:
                    agent_at[u], agent_at[v] = agent_at[v], agent_at[u]
                # only agents that moved can have new neighbours
                for u, w in pairs:
                    a = agent_at[u]
                    b = agent_at[w]
                    row = met[a]
                    if not row[b]:
                        row[b] = met[b][a] = 1
                        known += 1
            if record_history:
                history.append(known)
            if trace is not None:
                trace(r, m, known - before)
            if known == total:
                completion = r
                break
    # everyone has met: later rounds only need validating
    for r in range(r + 1, len(rounds) + 1):
        m = rounds[r - 1]
        if check and m and m not in checked:
            check_round(m, r)
        if record_history:
            history.append(known)
        if trace is not None:
            trace(r, m, 0)
    return RunReport(
        valid=True,
        rounds_applied=len(rounds),
        all_acquainted=known == total,
        completion_round=completion,
        acquainted_pair_count=known,
        pair_count=total,
        history=history,
    )


def final_arrangement(n: int, rounds: Iterable[Iterable[Edge]]) -> list[int]:
    """``agent_at`` after applying ``rounds`` to the identity arrangement."""
    agent_at = list(range(n))
    for m in rounds:
        for u, v in m:
            agent_at[u], agent_at[v] = agent_at[v], agent_at[u]
    return agent_at
