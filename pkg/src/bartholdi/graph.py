"""Simple undirected graphs: parsing, degree sequences and generators.

Vertices are ``0 .. n-1``. Edges are stored as pairs ``(u, v)`` with
``u < v`` in lexicographic order, so two graphs with the same vertex count
and edge set compare equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import GraphFormatError, NotGraphicalError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for e in self.edges:
            u, v = e
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge {e} is not a canonical pair for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edges must be strictly increasing")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from arbitrary (unordered, unsorted) pairs.

        Loops and repeated edges raise ``GraphFormatError``.
        """
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def adjacency(self) -> list[list[int]]:
        A = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            A[u][v] = A[v][u] = 1
        return A

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def to_edge_list(self) -> str:
        """Canonical edge-list text; always carries the ``n`` header."""
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    ``#`` starts a comment line, an optional ``n <count>`` header fixes the
    vertex count, and every other non-blank line holds two vertex indices.
    Without a header the vertex count is one more than the largest index.
    """
    header_n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if header_n is not None:
                raise GraphFormatError("repeated 'n' header", lineno)
            if pairs:
                raise GraphFormatError("'n' header must precede edges", lineno)
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            header_n = _parse_index(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = (_parse_index(t, lineno) for t in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        pairs.append(((u, v) if u < v else (v, u), lineno))

    seen = set()
    for e, lineno in pairs:
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}", lineno)
        seen.add(e)

    n = 1 + max((v for (_, v), _ in pairs), default=-1)
    if header_n is not None:
        if header_n < n:
            raise GraphFormatError(f"header n={header_n} but vertex {n - 1} used")
        n = header_n
    return Graph(n, tuple(sorted(seen)))


def _parse_index(token: str, lineno: int) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise GraphFormatError(f"malformed token {token!r}", lineno) from None
    if value < 0:
        raise GraphFormatError(f"negative index {value}", lineno)
    return value


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return g.degrees()


def erdos_gallai_failure(degrees: Sequence[int]) -> int | None:
    """Index of the first violated Erdős–Gallai inequality, or None.

    Returns 0 for a negative entry, an entry ``>= n``, or an odd sum.
    """
    n = len(degrees)
    if any(d < 0 or d > n - 1 for d in degrees) or sum(degrees) % 2:
        return 0
    d = sorted(degrees, reverse=True)
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return k
    return None


def realize_degree_sequence(degrees: Sequence[int]) -> Graph:
    """Havel–Hakimi realization with deterministic tie-breaking.

    Vertex ``i`` receives degree ``degrees[i]``. At each step the vertex with
    the largest residual degree (lowest index on ties) is joined to the next
    largest residual vertices (lowest index on ties).
    """
    degrees = [int(d) for d in degrees]
    bad = erdos_gallai_failure(degrees)
    if bad is not None:
        if bad == 0:
            msg = "degree sequence has an odd sum or an out-of-range entry"
        else:
            msg = f"Erdős–Gallai inequality fails at k={bad}"
        raise NotGraphicalError(degrees, bad, msg)

    residual = list(degrees)
    edges = []
    while True:
        order = sorted(range(len(residual)), key=lambda v: (-residual[v], v))
        if not order or residual[order[0]] == 0:
            break
        v = order[0]
        need = residual[v]
        targets = order[1 : 1 + need]
        if len(targets) < need or residual[targets[-1]] == 0:
            # unreachable once Erdős–Gallai has passed
            raise NotGraphicalError(degrees, 0, "Havel–Hakimi stalled")
        residual[v] = 0
        for w in targets:
            residual[w] -= 1
            edges.append((v, w))
    return Graph.from_edges(len(degrees), edges)


def random_graph(n: int, p, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) driven by ``random.Random(seed)``.

    Pairs are visited in lexicographic order and each one draws a single
    ``random()``; the edge is kept when the draw is below ``p``. The
    comparison is done against an exact ``Fraction`` so ``p`` may be given
    as a string like ``"1/2"``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if Fraction(rng.random()) < p]
    return Graph(n, tuple(edges))


def rewire(g: Graph, swaps: int, seed: int, max_tries: int | None = None) -> Graph:
    """Apply degree-preserving double-edge swaps.

    Used to produce different realizations of one degree sequence. Swaps
    that would create a loop or a repeated edge are rejected and retried.
    """
    rng = random.Random(seed)
    edges = list(g.edges)
    present = set(edges)
    if len(edges) < 2:
        return g
    max_tries = max_tries if max_tries is not None else 100 * max(swaps, 1)
    done = tries = 0
    while done < swaps and tries < max_tries:
        tries += 1
        i, j = rng.sample(range(len(edges)), 2)
        (a, b), (c, d) = edges[i], edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        new1 = (min(a, d), max(a, d))
        new2 = (min(c, b), max(c, b))
        if a == d or c == b or new1 == new2 or new1 in present or new2 in present:
            continue
        present -= {edges[i], edges[j]}
        present |= {new1, new2}
        edges[i], edges[j] = new1, new2
        done += 1
    return Graph(g.n, tuple(sorted(edges)))


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of ``g`` (in edge order)."""
    incident = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    pairs = set()
    for inc in incident:
        pairs.update(combinations(inc, 2))
    return Graph(g.m, tuple(sorted(pairs)))


def line_graph_edge_count(degrees: Iterable[int]) -> int:
    return sum(comb(d, 2) for d in degrees)


# small named families, mostly for tests and the CLI


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and ``leaves`` leaves."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))
