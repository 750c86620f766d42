"""Input validation helpers in the spirit of ``sklearn.utils.validation``.

:func:`check_graph` is the single entry point that turns the graph-like
inputs accepted across the package into a :class:`Graph`.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

import numpy as np

from .exceptions import DisconnectedError, ParseError, VertexOutOfRangeError
from .graph import Graph, build_graph, is_connected
from .strategy import Strategy, make_strategy


def check_graph(X, *, connected: bool = False) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepted inputs:

    * a :class:`Graph` (returned as is);
    * a mapping ``{"n": int, "edges": [[u, v], ...]}`` (the JSON form);
    * a pair ``(n, edges)``;
    * a square symmetric 0/1 adjacency matrix (array-like);
    * any object exposing ``nodes`` and ``edges`` like a networkx graph, whose
      nodes are relabelled ``0..n-1`` in sorted order.

    With ``connected=True`` a disconnected graph raises
    :class:`DisconnectedError`.
    """
    g = _to_graph(X)
    if connected and not is_connected(g):
        raise DisconnectedError(f"graph with {g.n} vertices is not connected")
    return g


def _to_graph(X) -> Graph:
    if isinstance(X, Graph):
        return X
    if isinstance(X, Mapping):
        return graph_from_dict(X)
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(index[u], index[v]) for u, v in X.edges])
    if isinstance(X, tuple) and len(X) == 2 and np.isscalar(X[0]):
        return build_graph(int(X[0]), X[1])
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square adjacency matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(A) != 0):
        raise ValueError("adjacency matrix has self-loops on the diagonal")
    rows, cols = np.nonzero(np.triu(A, k=1))
    return build_graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def check_vertex(v, n: int, name: str = "vertex") -> int:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
        raise VertexOutOfRangeError(f"{name} {v!r} not in 0..{n - 1}")
    return int(v)


def check_is_fitted(estimator, attributes) -> None:
    """Raise ``sklearn.exceptions.NotFittedError`` if ``attributes`` are missing."""
    from sklearn.utils.validation import check_is_fitted as _check

    _check(estimator, attributes)


# --------------------------------------------------------------------------
# JSON


def graph_from_dict(data) -> Graph:
    try:
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("n must be an integer")
        edges = [tuple(e) for e in data["edges"]]
        if any(len(e) != 2 for e in edges):
            raise TypeError("every edge must be a pair")
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc
    return build_graph(n, edges)


def strategy_from_dict(data, graph: Graph | None = None) -> Strategy:
    """Read the strategy JSON form; ``graph`` overrides the embedded one."""
    try:
        g = graph if graph is not None else graph_from_dict(data["graph"])
        rounds = [[(int(u), int(v)) for u, v in m] for m in data["rounds"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed strategy JSON: {exc}") from exc
    return make_strategy(g, rounds)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_dict(loads(fh.read()))


def read_strategy(path, graph: Graph | None = None) -> Strategy:
    with open(path, encoding="utf-8") as fh:
        return strategy_from_dict(loads(fh.read()), graph)
