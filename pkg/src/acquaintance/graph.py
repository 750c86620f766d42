"""Undirected simple graphs, standard families, spanning trees and matchings.

Vertices are always the integers ``0..n-1``.  Every value here is immutable,
so graphs and trees can be shared freely between strategies and simulations.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .exceptions import (
    DisconnectedError,
    SelfLoopError,
    TooSmallError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]
Matching = frozenset  # frozenset[Edge], each edge normalised to (u, v) with u < v

FAMILIES = ("path", "cycle", "complete", "star", "barbell")
TREE_POLICIES = ("dfs", "degree_greedy")


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`, which validates and normalises
    the edge list; the constructor assumes ``edges`` is already clean.
    """

    n: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = [[] for _ in range(self.n)]
        # walking edges in sorted order leaves every neighbour list ascending
        for u, v in sorted(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(map(tuple, nbrs)))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Validate ``edges`` and return the normalised graph.

    Duplicate edges (in either orientation) collapse to one; self-loops and
    endpoints outside ``0..n-1`` raise.
    """
    if n < 0:
        raise TooSmallError(f"vertex count must be non-negative, got {n}")
    clean = set()
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            bad = v if 0 <= u < n else u
            raise VertexOutOfRangeError(f"vertex {bad} not in 0..{n - 1}")
        clean.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(clean))


def family(kind: str, n: int) -> Graph:
    """Canonically labelled member of a standard family.

    ``barbell`` joins a clique on ``0..ceil(n/2)-1`` to a clique on the rest
    by the bridge ``(ceil(n/2)-1, ceil(n/2))``.
    """
    if n < 1:
        raise TooSmallError(f"{kind} needs n >= 1, got {n}")
    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        if n < 3:
            raise TooSmallError(f"cycle needs n >= 3, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif kind == "barbell":
        a = (n + 1) // 2
        edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
        edges += [(i, j) for i in range(a, n) for j in range(i + 1, n)]
        if n >= 2:
            edges.append((a - 1, a))
    else:
        raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}")
    return build_graph(n, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def max_degree(g: Graph) -> int:
    return max(map(len, g.adjacency), default=0)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in ascending original id."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return build_graph(len(keep), edges)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi ``G(n, p)`` drawn from the given generator."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def giant_component(g: Graph) -> Graph:
    """Largest component with ids compacted; ties go to the smallest vertex."""
    if g.n == 0:
        return g
    comps = components(g)
    best = max(comps, key=len)  # max keeps the first of equal-size components
    return induced_subgraph(g, best)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree via a random Prüfer sequence."""
    if n <= 1:
        return build_graph(max(n, 0), [])
    return build_graph(n, prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n))


def random_connected_graph(n: int, extra_edges: int, rng: random.Random) -> Graph:
    """Random labelled tree plus up to ``extra_edges`` random chords."""
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    for _ in range(extra_edges):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add(normalize_edge(u, v))
    return build_graph(n, edges)


def prufer_to_edges(seq: list[int], n: int) -> list[Edge]:
    """Decode a Prüfer sequence of length ``n - 2`` into tree edges."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(normalize_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append(normalize_edge(u, v))
    return edges


# --------------------------------------------------------------------------
# spanning trees


@dataclass(frozen=True)
class SpanningTree:
    """Rooted spanning tree of ``graph``.

    ``parent[root] == root``; ``children`` lists are in ascending id order.
    """

    graph: Graph
    root: int
    parent: tuple
    level: tuple
    children: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def tree_edges(self) -> frozenset:
        return frozenset(
            normalize_edge(v, p) for v, p in enumerate(self.parent) if v != self.root
        )

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (v != self.root)

    def max_degree(self) -> int:
        if self.n < 2:
            return 0
        counts = list(map(len, self.children))
        top = max(counts)
        # non-root vertices add their parent edge; only the root can hold the
        # maximum child count without it
        if counts[self.root] == top and counts.count(top) == 1:
            return top
        return top + 1

    def as_graph(self) -> Graph:
        return Graph(self.n, self.tree_edges)


def tree_from_parents(
    g: Graph, root: int, parent: list[int], validate: bool = True
) -> SpanningTree:
    """Assemble a :class:`SpanningTree` from a parent array.

    ``validate=False`` skips :func:`check_spanning_tree`, for callers whose
    construction already guarantees the invariants.
    """
    n = g.n
    children = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if v != root:
            children[p].append(v)
    level = [-1] * n
    level[root] = 0
    stack = [root]
    while stack:
        u = stack.pop()
        for c in children[u]:
            level[c] = level[u] + 1
            stack.append(c)
    # enumerate() visits children in ascending id already
    tree = SpanningTree(g, root, tuple(parent), tuple(level), tuple(map(tuple, children)))
    if validate:
        check_spanning_tree(tree)
    return tree


def check_spanning_tree(tree: SpanningTree) -> None:
    """Raise ``ValueError`` unless ``tree`` satisfies the spanning tree invariants."""
    g = tree.graph
    n = g.n
    if tree.n != n:
        raise ValueError("parent array length differs from vertex count")
    if n == 0:
        return
    if tree.parent[tree.root] != tree.root:
        raise ValueError("root must be its own parent")
    edges = tree.tree_edges
    if len(edges) != n - 1:
        raise ValueError(f"expected {n - 1} tree edges, found {len(edges)}")
    if not edges <= g.edges:
        raise ValueError("tree uses an edge absent from the graph")
    if not is_connected(Graph(n, edges)):
        raise ValueError("tree edges do not connect the graph")
    for v in range(n):
        if v != tree.root and tree.level[v] != tree.level[tree.parent[v]] + 1:
            raise ValueError(f"level of vertex {v} inconsistent with its parent")


def spanning_tree(g: Graph, root: int = 0, policy: str = "dfs") -> SpanningTree:
    """Rooted spanning tree of a connected graph.

    ``dfs`` explores children in ascending id.  ``degree_greedy`` grows the
    tree by always taking the frontier edge whose tree-side endpoint has the
    smallest current tree degree (ties: smaller tree-side id, then smaller
    new vertex).  The greedy rule is a cheap heuristic for low-degree trees,
    with no optimality guarantee.
    """
    if not 0 <= root < max(g.n, 1):
        raise VertexOutOfRangeError(f"root {root} not in 0..{g.n - 1}")
    if policy not in TREE_POLICIES:
        raise ValueError(f"unknown tree policy {policy!r}; expected one of {TREE_POLICIES}")
    if g.n == 0:
        return SpanningTree(g, root, (), (), ())
    parent = _dfs_parents(g, root) if policy == "dfs" else _greedy_parents(g, root)
    if -1 in parent:
        raise DisconnectedError("spanning tree requested for a disconnected graph")
    # both growth rules only ever attach a new vertex along a graph edge
    return tree_from_parents(g, root, parent, validate=False)


def _dfs_parents(g: Graph, root: int) -> list[int]:
    parent = [-1] * g.n
    parent[root] = root
    # explicit stack of (vertex, next neighbour index) mimics recursive DFS
    adj = g.adjacency
    # stack of neighbour iterators mimics recursive DFS
    stack = [(root, iter(adj[root]))]
    while stack:
        u, nbrs = stack[-1]
        for w in nbrs:
            if parent[w] == -1:
                parent[w] = u
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
    return parent


def _greedy_parents(g: Graph, root: int) -> list[int]:
    parent = [-1] * g.n
    parent[root] = root
    tdeg = [0] * g.n
    heap = [(0, root, w) for w in g.adjacency[root]]
    heapq.heapify(heap)
    while heap:
        d, u, w = heapq.heappop(heap)
        if parent[w] != -1:
            continue
        if d != tdeg[u]:
            # stale key; degrees only grow, so re-queue at the current value
            heapq.heappush(heap, (tdeg[u], u, w))
            continue
        parent[w] = u
        tdeg[u] += 1
        tdeg[w] += 1
        for x in g.adjacency[w]:
            if parent[x] == -1:
                heapq.heappush(heap, (tdeg[w], w, x))
    return parent


# --------------------------------------------------------------------------
# matchings


def make_matching(edges: Iterable[Iterable[int]]) -> Matching:
    return frozenset(normalize_edge(*map(int, e)) for e in edges)


def matching_problem(g: Graph, m: Iterable[Edge]) -> str | None:
    """Describe why ``m`` is not a matching of ``g``, or return ``None``."""
    used = set()
    for u, v in m:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return f"({u}, {v}) is not an edge of the graph"
        if u in used or v in used:
            return f"edge ({u}, {v}) shares an endpoint with another matched edge"
        used.add(u)
        used.add(v)
    return None


def is_matching(g: Graph, m: Iterable[Edge]) -> bool:
    return matching_problem(g, m) is None
