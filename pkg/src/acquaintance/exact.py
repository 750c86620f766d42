"""Exact acquaintance time of small graphs by exhaustive search.

:func:`exact_ac` runs a breadth-first search over (arrangement, acquaintance)
states where every non-empty matching is a move.  :func:`exact_ac_iddfs` is
an independently written iterative-deepening search used to cross-check it;
the two share no helpers beyond the :class:`Graph` type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import BudgetExceededError, DisconnectedError
from .graph import Graph, is_connected

DEFAULT_MAX_STATES = 50_000_000


def enumerate_matchings(g: Graph) -> list[frozenset]:
    """All non-empty matchings of ``g``.

    Ordered by size, then lexicographically by sorted edge list.
    """
    edges = g.sorted_edges()
    found = []

    def extend(start, used, chosen):
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u in used or v in used:
                continue
            chosen.append(edges[idx])
            found.append(tuple(chosen))
            extend(idx + 1, used | {u, v}, chosen)
            chosen.pop()

    extend(0, frozenset(), [])
    found.sort(key=lambda m: (len(m), m))
    return [frozenset(m) for m in found]


@dataclass(frozen=True)
class ExactResult:
    ac: int
    states_explored: int

    def to_dict(self) -> dict:
        return {"ac": self.ac, "states_explored": self.states_explored}


def solve_exact(
    g: Graph, max_states: int = DEFAULT_MAX_STATES, prune: bool = True
) -> ExactResult:
    """Breadth-first search for the shortest acquaintance strategy.

    States are deduplicated on the exact (arrangement, acquaintance) pair.
    With ``prune`` a state is also dropped when an already visited state has
    the same arrangement and a superset of its acquaintances.  Raises
    :class:`BudgetExceededError` once more than ``max_states`` states have
    been stored.
    """
    if not is_connected(g):
        raise DisconnectedError("acquaintance time is undefined for disconnected graphs")
    n = g.n
    bit = {}
    for b in range(n):
        for a in range(b):
            bit[(a, b)] = bit[(b, a)] = 1 << (b * (b - 1) // 2 + a)
    goal = (1 << (n * (n - 1) // 2)) - 1
    edges = g.sorted_edges()
    moves = [tuple(m) for m in enumerate_matchings(g)]

    adj_cache = {}

    def adjacent_mask(arr):
        mask = adj_cache.get(arr)
        if mask is None:
            mask = 0
            for u, v in edges:
                mask |= bit[(arr[u], arr[v])]
            adj_cache[arr] = mask
        return mask

    start = tuple(range(n))
    mask0 = adjacent_mask(start)
    if mask0 == goal:
        return ExactResult(0, 1)

    visited = {start: [mask0] if prune else {mask0}}
    explored = 1
    frontier = [(start, mask0)]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for arr, mask in frontier:
            for m in moves:
                new = list(arr)
                for u, v in m:
                    new[u], new[v] = new[v], new[u]
                new = tuple(new)
                nmask = mask | adjacent_mask(new)
                if nmask == goal:
                    return ExactResult(depth, explored)
                if prune:
                    seen = visited.setdefault(new, [])
                    if any(old & nmask == nmask for old in seen):
                        continue
                    # drop stored masks the new one dominates
                    seen[:] = [old for old in seen if old & nmask != old]
                    seen.append(nmask)
                else:
                    seen = visited.setdefault(new, set())
                    if nmask in seen:
                        continue
                    seen.add(nmask)
                explored += 1
                if explored > max_states:
                    raise BudgetExceededError(explored, max_states)
                nxt.append((new, nmask))
        frontier = nxt
    raise AssertionError("search exhausted without reaching full acquaintance")


def exact_ac(g: Graph, max_states: int = DEFAULT_MAX_STATES, prune: bool = True) -> int:
    """Acquaintance time of ``g``: the fewest rounds after which all agents have met."""
    return solve_exact(g, max_states, prune).ac


def exact_ac_iddfs(g: Graph, max_depth: int | None = None) -> int:
    """Acquaintance time by iterative-deepening depth-first search.

    Written independently of :func:`solve_exact`: agents are tracked in a
    dict, acquaintances as a frozenset of frozenset pairs, and matchings are
    generated on the fly by include/exclude recursion over the edges.
    """
    if not is_connected(g):
        raise DisconnectedError("acquaintance time is undefined for disconnected graphs")
    n = g.n
    edge_list = sorted(g.edges)
    everyone = frozenset(frozenset((a, b)) for a in range(n) for b in range(a + 1, n))

    def meetings(where):
        return frozenset(frozenset((where[u], where[v])) for u, v in edge_list)

    def matchings(idx, blocked):
        if idx == len(edge_list):
            yield []
            return
        yield from matchings(idx + 1, blocked)
        u, v = edge_list[idx]
        if u not in blocked and v not in blocked:
            for rest in matchings(idx + 1, blocked | {u, v}):
                yield [(u, v)] + rest

    all_moves = [m for m in matchings(0, frozenset()) if m]
    failed = {}  # (arrangement, acquaintances) -> largest budget known to fail

    def search(where, known, budget):
        if known == everyone:
            return True
        if budget == 0:
            return False
        key = (tuple(where[v] for v in range(n)), known)
        if failed.get(key, -1) >= budget:
            return False
        for m in all_moves:
            moved = dict(where)
            for u, v in m:
                moved[u], moved[v] = where[v], where[u]
            if search(moved, known | meetings(moved), budget - 1):
                return True
        failed[key] = budget
        return False

    start = {v: v for v in range(n)}
    limit = max_depth if max_depth is not None else n * n
    for depth in range(limit + 1):
        if search(start, meetings(start), depth):
            return depth
    raise RuntimeError(f"no strategy found within {limit} rounds")
