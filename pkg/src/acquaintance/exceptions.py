"""Exception hierarchy shared by every module of the package."""


class AcquaintanceError(Exception):
    """Base class for all errors raised by :mod:`acquaintance`."""


class SelfLoopError(AcquaintanceError, ValueError):
    pass


class VertexOutOfRangeError(AcquaintanceError, ValueError):
    pass


class TooSmallError(AcquaintanceError, ValueError):
    pass


class DisconnectedError(AcquaintanceError, ValueError):
    pass


class DegenerateAdjacentError(AcquaintanceError, ValueError):
    pass


class ParseError(AcquaintanceError, ValueError):
    pass


class InvalidMatchingError(AcquaintanceError, ValueError):
    """A round is not a matching of the graph.

    ``round_index`` is the 1-based round at which the strategy broke, or
    ``None`` when a single matching was checked in isolation.
    """

    def __init__(self, message, round_index=None):
        if round_index is not None:
            message = f"round {round_index}: {message}"
        super().__init__(message)
        self.round_index = round_index


class ContourGapError(AcquaintanceError, RuntimeError):
    """Consecutive marked contour positions are more than 3 steps apart."""


class ColorOverflowError(AcquaintanceError, RuntimeError):
    """Conflict colouring needed more than ``4 * max_degree`` colours."""


class BudgetExceededError(AcquaintanceError, RuntimeError):
    def __init__(self, states_explored, budget):
        super().__init__(
            f"state budget of {budget} exceeded after exploring {states_explored} states"
        )
        self.states_explored = states_explored
        self.budget = budget
