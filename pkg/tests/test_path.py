import pytest

from acquaintance.exceptions import DegenerateAdjacentError, VertexOutOfRangeError
from acquaintance.graph import family
from acquaintance.path import odd_even_round, path_strategy, predicted_meeting_bound, trajectory
from acquaintance.simulator import final_arrangement, run


def positions_over_time(n, rounds):
    """1-based vertex of each 1-based starting agent after every round, by direct swapping."""
    where = list(range(1, n + 1))  # where[v] = agent on 1-based vertex v + 1
    history = [{a: v + 1 for v, a in enumerate(where)}]
    for m in rounds:
        for u, v in m:
            where[u], where[v] = where[v], where[u]
        history.append({a: v + 1 for v, a in enumerate(where)})
    return history


def test_p3():
    assert path_strategy(3).rounds == (frozenset({(0, 1)}),)


def test_p2_empty():
    assert path_strategy(2).rounds == ()
    assert path_strategy(1).rounds == ()


def test_p5_rounds():
    s = path_strategy(5)
    assert s.rounds == (
        frozenset({(0, 1), (2, 3)}),
        frozenset({(1, 2), (3, 4)}),
        frozenset({(0, 1), (2, 3)}),
    )
    rep = run(family("path", 5), s)
    assert rep.all_acquainted and rep.acquainted_pair_count == 10


def test_full_length():
    assert len(path_strategy(7, full=True).rounds) == 7


def test_round_parity():
    assert odd_even_round(6, 1) == {(0, 1), (2, 3), (4, 5)}
    assert odd_even_round(6, 2) == {(1, 2), (3, 4)}


@pytest.mark.parametrize("n", range(2, 65))
def test_full_strategy_reverses(n):
    final = final_arrangement(n, path_strategy(n, full=True).rounds)
    # vertex n - v (0-based) holds the agent that started on v
    assert final == list(range(n - 1, -1, -1))


def test_completeness_up_to_256():
    for n in range(2, 257):
        s = path_strategy(n)
        assert all(len(m) <= n // 2 for m in s.rounds)
        rep = run(family("path", n), s)
        assert rep.all_acquainted, n
        if n >= 3:
            # never earlier than n - 2 either
            assert rep.completion_round == n - 2


def test_trajectory_examples():
    for n in range(2, 10):
        assert trajectory(1, n - 1, n) == n
        for i in range(1, n + 1):
            assert trajectory(i, 0, n) == i
    assert trajectory(2, 1, 5) == 1


@pytest.mark.parametrize("n", range(1, 33))
def test_trajectory_matches_simulation(n):
    history = positions_over_time(n, path_strategy(n, full=True).rounds)
    for t in range(n + 1):
        for i in range(1, n + 1):
            assert trajectory(i, t, n) == history[t][i], (i, t, n)


def test_trajectory_rejects_bad_start():
    with pytest.raises(VertexOutOfRangeError):
        trajectory(0, 1, 5)
    with pytest.raises(ValueError):
        trajectory(1, -1, 5)


def test_meeting_bound_examples():
    assert predicted_meeting_bound(1, 4, 6) == 1
    assert predicted_meeting_bound(2, 5, 6) == 4
    assert predicted_meeting_bound(1, 3, 5) == 3
    # argument order does not matter
    assert predicted_meeting_bound(4, 1, 6) == 1


def test_meeting_bound_adjacent_is_degenerate():
    with pytest.raises(DegenerateAdjacentError):
        predicted_meeting_bound(2, 3, 6)
    with pytest.raises(DegenerateAdjacentError):
        predicted_meeting_bound(3, 3, 6)


def test_meeting_bound_range_checked():
    with pytest.raises(VertexOutOfRangeError):
        predicted_meeting_bound(1, 7, 6)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 10, 17, 32, 64])
def test_meeting_bound_against_simulation(n):
    history = positions_over_time(n, path_strategy(n).rounds)
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            met = next(t for t, pos in enumerate(history) if abs(pos[i] - pos[j]) == 1)
            bound = predicted_meeting_bound(i, j, n)
            assert met <= bound <= n - 2, (i, j, n, met, bound)

