from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from bartholdi.graph import Graph, random_graph
from bartholdi.linalg import IntPoly

DATA = Path(__file__).parent / "data"

EXAMPLE_DEGREES = (2, 2, 2, 3, 4, 5, 6)

# printed polynomial, highest power first (u^24 .. u^0)
EXAMPLE_DESCENDING = [
    1, 0, -37, 70, 435, -1708, -183, 11646, -21726, -6800, 80478, -111316, 3094,
    171768, -209950, 49164, 134181, -163728, 66487, 23310, -44185, 26068, -8475, 1526, -120,
]

CORPUS_PROBS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))


def corpus_graph(seed: int) -> Graph:
    """Seeded member of the 200-graph agreement corpus (n cycles through 1..8)."""
    return random_graph(1 + seed % 8, CORPUS_PROBS[seed % 5], seed)


@pytest.fixture(scope="session")
def corpus():
    return [corpus_graph(s) for s in range(200)]


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# independent oracles -------------------------------------------------------


def det_cofactor(M):
    """Laplace expansion along the first row; works for any ring elements."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= M[i][perm[i]]
            if prod == 0:
                break
        total += -prod if inv % 2 else prod
    return total


def lagrange_interpolate(xs, ys) -> IntPoly:
    """Integer-coefficient polynomial through the points (exact, via Fractions)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        for t in range(n):
            coeffs[t] += ys[i] * basis[t] / denom
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly(int(c) for c in coeffs)


# acceptance summary --------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
