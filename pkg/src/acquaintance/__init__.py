"""Acquaintance strategies on graphs.

Agents sit one per vertex; each round swaps the agents along a matching, and
agents on adjacent vertices become acquainted.  The package builds, verifies
and certifies strategies that make every pair of agents meet.
"""

from .bounds import BarbellBound, barbell_lower_bound, contour_bound
from .contour import Contour, build_contour, contour, mark_positions, to_dot, visit_counts
from .estimators import ContourAcquaintance, ExactAcquaintance, PathAcquaintance
from .exact import ExactResult, enumerate_matchings, exact_ac, exact_ac_iddfs, solve_exact
from .exceptions import *  # noqa: F401,F403
from .graph import (
    Graph,
    SpanningTree,
    build_graph,
    family,
    is_connected,
    is_matching,
    max_degree,
    spanning_tree,
)
from .path import path_strategy, predicted_meeting_bound, trajectory
from .simulator import RunReport, SimulationState, apply_matching, init_state, run
from .strategy import Strategy
from .synthesis import SwapJob, SynthesisReport, conflict_color, jobs_for_round, synthesize
from .validation import check_graph

__version__ = "0.1.0"
