"""Symmetric digraph of a graph and the matrices of its oriented line graph.

Arc ``i`` (``0 <= i < m``) runs along edge ``i`` from its smaller endpoint
to its larger one; arc ``i + m`` is its inverse. All matrices here are
indexed by arc number in that layout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .errors import BoundExceededError
from .graph import Graph, line_graph
from .linalg import IntPoly, Matrix, matmul, transpose
from .report import Report

# brute-force guards for walk enumeration
MAX_WALK_ARCS = 16
MAX_WALK_LENGTH = 8


@dataclass(frozen=True)
class ArcSystem:
    m: int
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    n: int = 0

    @property
    def size(self) -> int:
        return 2 * self.m

    def inverse(self, a: int) -> int:
        return (a + self.m) % (2 * self.m)

    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.tails, self.heads))


def build_arcs(g: Graph) -> ArcSystem:
    tails = [u for u, _ in g.edges] + [v for _, v in g.edges]
    heads = [v for _, v in g.edges] + [u for u, _ in g.edges]
    return ArcSystem(g.m, tuple(tails), tuple(heads), g.n)


def matrix_T(a: ArcSystem) -> Matrix:
    """Non-backtracking (oriented line graph) adjacency matrix."""
    N = a.size
    T = [[0] * N for _ in range(N)]
    for i in range(N):
        h = a.heads[i]
        back = a.inverse(i)
        row = T[i]
        for j in range(N):
            if a.tails[j] == h and j != back:
                row[j] = 1
    return T


def matrix_J(m: int) -> Matrix:
    """The arc-inversion permutation matrix, swapping ``i`` and ``i + m``."""
    N = 2 * m
    J = [[0] * N for _ in range(N)]
    for i in range(N):
        J[i][(i + m) % N] = 1
    return J


def matrix_B(a: ArcSystem) -> Matrix:
    """Arc continuation matrix: ``B[i][j] = 1`` iff arc j starts where arc i ends."""
    N = a.size
    return [[1 if a.tails[j] == a.heads[i] else 0 for j in range(N)] for i in range(N)]


def matrix_JT(a: ArcSystem) -> Matrix:
    """J·T, computed as a row permutation of T."""
    T = matrix_T(a)
    return [list(T[a.inverse(i)]) for i in range(a.size)]


def _blocks(T: Matrix, m: int):
    top, bottom = T[:m], T[m:]
    return (
        [row[:m] for row in top],
        [row[m:] for row in top],
        [row[:m] for row in bottom],
        [row[m:] for row in bottom],
    )


def check_structure(T: Matrix, J: Matrix, g: Graph | None = None) -> Report:
    """Check the block structure of T in the inverse-paired arc layout.

    With ``T = [[A, B], [C, D]]`` in m x m blocks: B and C are symmetric with
    zero diagonals, D is the transpose of A, ``T^T = J T J``, and, when the
    source graph is given, ``A + B + C + A^T`` is the adjacency matrix of its
    line graph. A and D also have zero diagonals, which holds because loops
    are rejected at construction.
    """
    m = len(T) // 2
    A, Bk, C, D = _blocks(T, m)
    rep = Report("structure")
    rep.record("B_symmetric", Bk == transpose(Bk) if m else True)
    rep.record("C_symmetric", C == transpose(C) if m else True)
    rep.record("B_C_zero_diagonal", all(Bk[i][i] == 0 and C[i][i] == 0 for i in range(m)))
    rep.record("D_is_A_transpose", D == transpose(A) if m else True)
    rep.record("A_D_zero_diagonal", all(A[i][i] == 0 and D[i][i] == 0 for i in range(m)))
    rep.record("T_transpose_is_JTJ", transpose(T) == matmul(matmul(J, T), J) if T else True)
    if g is not None:
        L = line_graph(g).adjacency()
        S = [[A[i][j] + Bk[i][j] + C[i][j] + A[j][i] for j in range(m)] for i in range(m)]
        rep.record("blocks_sum_to_line_graph", S == L)
    return rep


def closed_walk_bump_poly(a: ArcSystem, k: int, max_arcs: int = MAX_WALK_ARCS,
                          max_length: int = MAX_WALK_LENGTH, backend=None) -> IntPoly:
    """Sum of ``u**bumps`` over closed arc walks of length ``k``, by enumeration."""
    if k < 1:
        raise ValueError("walk length must be at least 1")
    if a.size > max_arcs or k > max_length:
        raise BoundExceededError(
            f"walk enumeration limited to {max_arcs} arcs and length {max_length}"
            f" (got {a.size} arcs, length {k})"
        )
    counts = kernels.closed_walk_bump_counts(a.tails, a.heads, a.m, k, backend=backend)
    return IntPoly(counts)


def matrix_to_text(M: Matrix) -> str:
    return "\n".join("".join(str(x) for x in row) for row in M) + ("\n" if M else "")


def matrix_to_json(M: Matrix) -> str:
    return json.dumps(M)
