import itertools
import random

import pytest

from acquaintance.graph import build_graph, random_connected_graph


def decode_prufer(seq, n):
    """Textbook O(n^2) Prüfer decoding, kept separate from the library's heap version."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def labeled_trees(n, step=1):
    """All labelled trees on ``n`` vertices, or every ``step``-th Prüfer sequence."""
    if n == 1:
        yield build_graph(1, [])
        return
    seqs = itertools.product(range(n), repeat=n - 2)
    for seq in itertools.islice(seqs, 0, None, step):
        yield build_graph(n, decode_prufer(seq, n))


def random_graph_corpus(count=200, max_n=200, seed=20240611):
    """Seeded random connected graphs: random trees with a random number of chords."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        extra = rng.choice([0, n // 4, n, 2 * n])
        out.append(random_connected_graph(n, extra, rng))
    return out


def connected_graphs_upto(max_n):
    """Every connected labelled graph on 1..max_n vertices."""
    from acquaintance.graph import is_connected

    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if is_connected(g):
                yield g


@pytest.fixture(scope="session")
def random_graphs():
    return random_graph_corpus()


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run exhaustive slow sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
