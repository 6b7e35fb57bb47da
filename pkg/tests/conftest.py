import itertools
import math

import numpy as np
import pytest

from gencheeger import Graph, demand_graph, generate, st_edge_graph


@pytest.fixture
def k2():
    return Graph(2, [(0, 1, 1.0)])


@pytest.fixture
def p3():
    return generate("path", 3)


@pytest.fixture
def c4():
    return generate("cycle", 4)


def all_cuts(n):
    """Every nonempty proper subset, both orientations (naive scan)."""
    for r in range(1, n):
        for s in itertools.combinations(range(n), r):
            yield set(s)


def naive_cap(g, s):
    return sum(w for u, v, w in g.edges if (u in s) != (v in s))


def naive_vol(g, s):
    return sum(w for u, v, w in g.edges for x in (u, v) if x in s)


def naive_min(g, ratio):
    return min(r for r in (ratio(s) for s in all_cuts(g.n)) if r is not None)


def random_pairs(count, lo, hi, seed, p_g=(0.3, 0.8), p_h=(0.35, 0.8)):
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(lo, hi + 1))
        g = generate("gnp", n, float(rng.uniform(*p_g)), seed=int(rng.integers(2**32)))
        h = generate("gnp", n, float(rng.uniform(*p_h)), seed=int(rng.integers(2**32)))
        out.append((g, h))
    return out


def rel_close(a, b, rtol):
    return math.isclose(a, b, rel_tol=rtol, abs_tol=0.0)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
