"""Coefficients of the reduced Bartholdi polynomial by counting sink stars.

A sink star with ``q >= 2`` leaves is a set of ``q`` arcs sharing one head
vertex; a vertex of degree ``d`` sinks ``C(d, q)`` of them. A collection of
sink stars is *legal* when its sink vertices are pairwise distinct. For a
partition ``p`` of ``k`` into parts ``>= 2``, the count of legal collections
whose leaf counts are exactly the parts of ``p``, times the determinant of
the partition's prototype matrix, summed over ``p`` and signed by
``(-1)^m``, gives ``d_k``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .graph import Graph
from .linalg import IntPoly, Matrix, block_diagonal, determinant
from .zeta import ReducedZetaResult


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 2 for c in self.parts):
            raise ValueError("every part must be at least 2")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_min2(k: int, caps: Sequence[int] | None = None) -> list[Partition]:
    """Partitions of ``k`` into parts >= 2, lexicographically descending.

    ``caps[i]``, when given, bounds the ``i``-th largest part and the length
    of ``caps`` bounds the number of parts. Passing the degree sequence in
    non-increasing order keeps exactly the partitions that can be placed on
    distinct sink vertices.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: list[Partition] = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        i = len(prefix)
        if caps is not None:
            if i >= len(caps):
                return
            max_part = min(max_part, caps[i])
        for c in range(min(remaining, max_part), 1, -1):
            if remaining - c == 1:
                continue
            prefix.append(c)
            rec(remaining - c, c, prefix)
            prefix.pop()

    rec(k, k, [])
    return out


def _ones_minus_identity(c: int) -> Matrix:
    return [[0 if i == j else 1 for j in range(c)] for i in range(c)]


def prototype_matrix(p: Partition) -> Matrix:
    """Block-diagonal matrix with one ``ones(c) - I`` block per part ``c``."""
    return block_diagonal([_ones_minus_identity(c) for c in p.parts])


def prototype_det_closed(p: Partition) -> int:
    return prod((-1) ** (c - 1) * (c - 1) for c in p.parts)


@lru_cache(maxsize=None)
def _prototype_det(parts: tuple[int, ...]) -> int:
    p = Partition(parts)
    direct = determinant(prototype_matrix(p))
    closed = prototype_det_closed(p)
    assert direct == closed, f"prototype determinant mismatch for {p}: {direct} != {closed}"
    return direct


def prototype_det(p: Partition) -> int:
    """Determinant of the prototype matrix, cross-checked against its closed form."""
    return _prototype_det(p.parts)


def _m_from_degrees(degrees) -> int:
    total = sum(degrees)
    if total % 2:
        raise ValueError("degree sum must be even")
    return total // 2


def sink_star_count(degrees: Sequence[int], q: int) -> int:
    """Number of sink stars with ``q`` leaves: sum of C(d(v), q)."""
    if q < 2:
        raise ValueError("a sink star needs at least 2 leaves")
    return sum(comb(d, q) for d in degrees if d >= q)


def vertex_bridge_tally(degrees: Sequence[int]):
    """Vertex bridges (2-leaf sink stars) grouped by sink degree.

    Returns ``(b, c, per_vertex)``: ``b`` counts degree-2 vertices, ``c`` is
    the number of bridges sunk at vertices of degree >= 3, and
    ``per_vertex`` maps each such vertex to its bridge count C(d, 2).
    """
    b = sum(1 for d in degrees if d == 2)
    per_vertex = {v: comb(d, 2) for v, d in enumerate(degrees) if d >= 3}
    return b, sum(per_vertex.values()), per_vertex


def legal_pair_count(degrees: Sequence[int]) -> int:
    """Unordered pairs of vertex bridges with distinct sinks."""
    b, c, per_vertex = vertex_bridge_tally(degrees)
    return comb(b + c, 2) - sum(comb(cv, 2) for cv in per_vertex.values())


def legal_set_count(degrees: Sequence[int], p: Partition) -> int:
    """Legal collections of sink stars, one per part of ``p``.

    A dynamic program over vertices counts ordered assignments of the parts
    to distinct sinks, weighted by C(d(v), c); dividing by the factorials of
    the part multiplicities gives unordered collections.
    """
    mult = Counter(p.parts)
    values = sorted(mult, reverse=True)
    start = tuple(mult[v] for v in values)
    dp = {start: 1}
    for d in degrees:
        if d < 2:
            continue
        weights = [comb(d, c) for c in values]
        nxt = dict(dp)
        for state, w in dp.items():
            for j, rem in enumerate(state):
                if rem and weights[j]:
                    s = state[:j] + (rem - 1,) + state[j + 1 :]
                    nxt[s] = nxt.get(s, 0) + w * rem * weights[j]
        dp = nxt
    ordered = dp.get(tuple(0 for _ in values), 0)
    denom = prod(factorial(r) for r in mult.values())
    q, r = divmod(ordered, denom)
    assert r == 0, "ordered legal-set count not divisible by part multiplicities"
    return q


def d2_closed(degrees: Sequence[int]) -> int:
    """(-1)^(m+1) times the line-graph edge count."""
    m = _m_from_degrees(degrees)
    return (-1) ** (m + 1) * sum(comb(d, 2) for d in degrees)


def d3_closed(degrees: Sequence[int]) -> int:
    m = _m_from_degrees(degrees)
    return (-1) ** m * 2 * sum(comb(d, 3) for d in degrees if d >= 3)


def d4_closed(degrees: Sequence[int]) -> int:
    m = _m_from_degrees(degrees)
    return (-1) ** m * (legal_pair_count(degrees) - 3 * sum(comb(d, 4) for d in degrees if d >= 4))


@dataclass(frozen=True)
class StarRow:
    partition: Partition
    legal_sets: int
    prototype_det: int

    @property
    def term(self) -> int:
        return self.legal_sets * self.prototype_det


@dataclass(frozen=True)
class StarCountBreakdown:
    k: int
    m: int
    rows: tuple[StarRow, ...]

    @property
    def d(self) -> int:
        return (-1) ** self.m * sum(r.term for r in self.rows)

    def to_dict(self):
        return {
            "k": self.k,
            "m": self.m,
            "sign": (-1) ** self.m,
            "rows": [
                {
                    "partition": list(r.partition.parts),
                    "legal_sets": str(r.legal_sets),
                    "prototype_det": str(r.prototype_det),
                    "term": str(r.term),
                }
                for r in self.rows
            ],
            "d_k": str(self.d),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        header = ("partition", "det(prototype)", "legal sets", "term")
        body = [
            (str(r.partition), str(r.prototype_det), str(r.legal_sets), str(r.term))
            for r in self.rows
        ]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = ["  ".join(x.ljust(w) for x, w in zip(header, widths))]
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in body]
        lines.append(f"d_{self.k} = (-1)^{self.m} * {sum(r.term for r in self.rows)} = {self.d}")
        return "\n".join(lines)


def dk_from_degrees(degrees: Sequence[int], k: int, prune: bool = True) -> StarCountBreakdown:
    """Breakdown of ``d_k`` for any graph with this degree sequence.

    With ``prune`` (the default) partitions that cannot be placed on
    distinct sinks are skipped; they would contribute zero rows.
    """
    degrees = list(degrees)
    m = _m_from_degrees(degrees)
    if not 0 <= k <= 2 * m:
        raise ValueError(f"k={k} outside [0, {2 * m}]")
    caps = sorted((d for d in degrees if d >= 2), reverse=True) if prune else None
    rows = tuple(
        StarRow(p, legal_set_count(degrees, p), prototype_det(p))
        for p in partitions_min2(k, caps)
    )
    return StarCountBreakdown(k, m, rows)


def dk_combinatorial(g: Graph, k: int, prune: bool = True) -> StarCountBreakdown:
    return dk_from_degrees(g.degrees(), k, prune)


def reduced_poly_from_degrees(degrees: Sequence[int]) -> IntPoly:
    m = _m_from_degrees(degrees)
    d = [dk_from_degrees(degrees, k).d for k in range(2 * m + 1)]
    return IntPoly(reversed(d))


def reduced_poly_combinatorial(g: Graph) -> ReducedZetaResult:
    return ReducedZetaResult(g.n, g.m, "stars", reduced_poly_from_degrees(g.degrees()))
