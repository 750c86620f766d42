"""Estimator-style wrappers so strategies compose with scikit-learn tooling.

Each estimator keeps its constructor arguments untouched (``get_params`` /
``set_params`` / ``clone`` work) and stores everything learned by ``fit`` in
attributes with a trailing underscore.  ``fit`` accepts any graph-like input
understood by :func:`~acquaintance.validation.check_graph`.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .exact import DEFAULT_MAX_STATES, solve_exact
from .graph import family
from .path import path_strategy
from .simulator import final_arrangement, run
from .synthesis import synthesize
from .validation import check_graph, check_is_fitted


class _StrategyMixin:
    """``transform`` routes a labelling of the vertices through the fitted strategy."""

    def transform(self, X):
        """Apply the fitted strategy to ``X``, a sequence of agent labels by vertex.

        Returns the labels by vertex after the last round.
        """
        check_is_fitted(self, "strategy_")
        X = list(X)
        if len(X) != self.n_vertices_:
            raise ValueError(f"expected {self.n_vertices_} labels, got {len(X)}")
        perm = final_arrangement(self.n_vertices_, self.strategy_.rounds)
        return [X[a] for a in perm]

    def fit_transform(self, X, y=None, **fit_params):
        self.fit(X, y, **fit_params)
        return self.transform(range(self.n_vertices_))


class ContourAcquaintance(_StrategyMixin, BaseEstimator):
    """Contour-emulated odd-even strategy for an arbitrary connected graph.

    Parameters
    ----------
    root : int, default=0
        Root of the spanning tree, where the contour walk starts.
    tree_policy : {"dfs", "degree_greedy"}, default="dfs"
        How the spanning tree is grown.
    path_rounds : {"n", "n-2"}, default="n"
        Number of path rounds emulated.  Only ``"n"`` is guaranteed complete.

    Attributes
    ----------
    strategy_ : Strategy
    report_ : SynthesisReport
    contour_ : Contour
    n_vertices_ : int
    rounds_used_ : int
    completion_round_ : int or None
    """

    def __init__(self, root=0, tree_policy="dfs", path_rounds="n"):
        self.root = root
        self.tree_policy = tree_policy
        self.path_rounds = path_rounds

    def fit(self, X, y=None):
        g = check_graph(X, connected=True)
        report = synthesize(g, self.root, self.tree_policy, self.path_rounds)
        self.report_ = report
        self.strategy_ = report.strategy
        self.contour_ = report.contour
        self.n_vertices_ = g.n
        self.rounds_used_ = report.rounds_used
        self.completion_round_ = report.completion_round
        return self


class PathAcquaintance(_StrategyMixin, BaseEstimator):
    """Odd-even transposition strategy; ``fit`` requires a path ``0-1-...-n-1``."""

    def __init__(self, full=False):
        self.full = full

    def fit(self, X, y=None):
        g = check_graph(X, connected=True)
        if g != family("path", max(g.n, 1)) and g.n > 0:
            raise ValueError("PathAcquaintance needs the canonically labelled path")
        self.strategy_ = path_strategy(g.n, self.full)
        self.n_vertices_ = g.n
        self.run_ = run(g, self.strategy_)
        self.completion_round_ = self.run_.completion_round
        return self


class ExactAcquaintance(BaseEstimator):
    """Breadth-first exact acquaintance time; small graphs only.

    Attributes
    ----------
    ac_ : int
        Acquaintance time of the fitted graph.
    states_explored_ : int
    """

    def __init__(self, max_states=DEFAULT_MAX_STATES, prune=True):
        self.max_states = max_states
        self.prune = prune

    def fit(self, X, y=None):
        g = check_graph(X, connected=True)
        result = solve_exact(g, self.max_states, self.prune)
        self.ac_ = result.ac
        self.states_explored_ = result.states_explored
        return self

    def predict(self, X):
        """Acquaintance time of each graph in ``X`` (fits nothing)."""
        return [solve_exact(check_graph(x, connected=True), self.max_states, self.prune).ac
                for x in X]
