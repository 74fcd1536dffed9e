"""Brute-force verifiers for small graphs.

Everything here enumerates: arc subsets for the semi-principal minor
expansion, closed arc walks for the bump-count trace identity. The fast
pipelines are never consulted on the enumeration side, only compared
against afterwards.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import kernels
from .arcs import ArcSystem, build_arcs, closed_walk_bump_poly, matrix_J, matrix_T
from .errors import BoundExceededError
from .graph import Graph
from .linalg import IntPoly, Matrix, determinant, matmul, trace
from .report import Report
from .zeta import reduced_bartholdi_det

MAX_MINOR_ARCS = 16
EXHAUSTIVE_LIMIT = 10**5
SAMPLE_SIZE = 10**4


@dataclass(frozen=True)
class MinorIndexSet:
    """Rows ``alpha`` (ascending arc indices) and their inverse arcs as columns."""

    alpha: tuple[int, ...]
    alpha_prime: tuple[int, ...]

    @classmethod
    def of(cls, alpha, m: int) -> "MinorIndexSet":
        alpha = tuple(sorted(alpha))
        return cls(alpha, tuple((i + m) % (2 * m) for i in alpha))


def minor_matrix(T: Matrix, idx: MinorIndexSet) -> Matrix:
    return [[T[i][j] for j in idx.alpha_prime] for i in idx.alpha]


def _guard(N: int, max_arcs: int):
    if N > max_arcs:
        raise BoundExceededError(f"brute force limited to {max_arcs} arcs, got {N}")


def semi_principal_minor_sums(T: Matrix, max_arcs: int = MAX_MINOR_ARCS, backend=None) -> list[int]:
    """All per-size sums of semi-principal minors, index ``k`` for size ``k``."""
    N = len(T)
    _guard(N, max_arcs)
    return kernels.semi_principal_minor_sums(T, N // 2, backend=backend)


def semi_principal_minor_sum(T: Matrix, k: int, max_arcs: int = MAX_MINOR_ARCS, backend=None) -> int:
    N = len(T)
    if not 0 <= k <= N:
        raise ValueError(f"k={k} outside [0, {N}]")
    return semi_principal_minor_sums(T, max_arcs, backend)[k]


def semi_principal_minor_sum_naive(T: Matrix, k: int) -> int:
    """Sum via explicit subsets and ``linalg.determinant``; no pruning."""
    N = len(T)
    m = N // 2
    return sum(determinant(minor_matrix(T, MinorIndexSet.of(a, m))) for a in combinations(range(N), k))


def verify_minor_expansion(g: Graph, max_arcs: int = MAX_MINOR_ARCS, backend=None) -> Report:
    """Compare size-k minor sums with ``(-1)^m d_k`` from the determinant pipeline."""
    rep = Report("minor_expansion", info={"n": g.n, "m": g.m})
    a = build_arcs(g)
    sums = semi_principal_minor_sums(matrix_T(a), max_arcs, backend)
    d = reduced_bartholdi_det(g).d_values()
    sign = (-1) ** g.m
    for k, (s, dk) in enumerate(zip(sums, d)):
        rep.record("coefficients", s == sign * dk, {"k": k, "minor_sum": s, "sign_times_d_k": sign * dk})
    return rep


def _subsets(N: int, q: int, rng: random.Random):
    if comb(N, q) <= EXHAUSTIVE_LIMIT:
        yield from combinations(range(N), q)
    else:
        for _ in range(SAMPLE_SIZE):
            yield tuple(sorted(rng.sample(range(N), q)))


def _is_permutation(S: Matrix) -> bool:
    return all(sorted(row) == [0] * (len(row) - 1) + [1] for row in S) and all(
        sum(col) == 1 for col in zip(*S)
    )


def verify_minor_structure(T: Matrix, a: ArcSystem | None = None, seed: int = 0,
                           max_arcs: int = MAX_MINOR_ARCS) -> Report:
    """Structural facts about semi-principal minor matrices.

    * ``transitive``: for distinct i, j, k, ``T[i][j'] = T[k][j'] = 1``
      forces ``T[i][k'] = T[k][i'] = 1``;
    * ``symmetric_zero_diagonal``: every minor matrix is symmetric with a
      zero diagonal;
    * ``odd_not_permutation``: odd-sized minor matrices are never
      permutation matrices;
    * ``nonzero_needs_shared_heads``: a nonzero minor only arises when each
      selected arc shares its head with another selected arc (needs ``a``);
    * ``grouped_by_head``: entry (x, y) of the minor matrix is 1 exactly
      when the two arcs are distinct and share a head (needs ``a``).

    Subsets are enumerated exhaustively when there are at most
    ``EXHAUSTIVE_LIMIT`` of a given size, else ``SAMPLE_SIZE`` are drawn
    with a seeded generator.
    """
    N = len(T)
    _guard(N, max_arcs)
    m = N // 2
    rep = Report("minor_structure", info={"arcs": N})
    inv = [(i + m) % N for i in range(N)] if N else []

    for i, j, k in combinations(range(N), 3):
        for x, y, z in ((i, j, k), (j, i, k), (k, i, j)):
            # y plays the shared column; x and z the two rows
            if T[x][inv[y]] and T[z][inv[y]]:
                rep.record("transitive", T[x][inv[z]] == 1 and T[z][inv[x]] == 1, [x, y, z])
    rep.checks.setdefault("transitive", True)

    rng = random.Random(seed)
    for q in range(1, N + 1):
        for alpha in _subsets(N, q, rng):
            idx = MinorIndexSet(alpha, tuple(inv[i] for i in alpha))
            S = minor_matrix(T, idx)
            sym = all(S[x][y] == S[y][x] for x in range(q) for y in range(x)) and all(
                S[x][x] == 0 for x in range(q)
            )
            rep.record("symmetric_zero_diagonal", sym, list(alpha))
            if q % 2:
                rep.record("odd_not_permutation", not _is_permutation(S), list(alpha))
            if a is not None:
                heads = [a.heads[i] for i in alpha]
                shared = all(heads.count(h) > 1 for h in heads)
                if not shared:
                    rep.record("nonzero_needs_shared_heads", determinant(S) == 0, list(alpha))
                grouped = all(
                    S[x][y] == (1 if x != y and heads[x] == heads[y] else 0)
                    for x in range(q)
                    for y in range(q)
                )
                rep.record("grouped_by_head", grouped, list(alpha))
    for name in ("symmetric_zero_diagonal", "odd_not_permutation"):
        rep.checks.setdefault(name, True)
    if a is not None:
        rep.checks.setdefault("nonzero_needs_shared_heads", True)
        rep.checks.setdefault("grouped_by_head", True)
    return rep


def trace_power_poly(T: Matrix, J: Matrix, k: int) -> IntPoly:
    """tr((T + uJ)^k) by exact polynomial-matrix powering.

    The power is held as a list of integer matrices indexed by the power of
    ``u``; multiplying by ``T + uJ`` shifts the ``J`` contribution up one.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    N = len(T)
    layers = [T, J]
    for _ in range(k - 1):
        nxt = [[[0] * N for _ in range(N)] for _ in range(len(layers) + 1)]
        for e, L in enumerate(layers):
            LT = matmul(L, T)
            LJ = matmul(L, J)
            for i in range(N):
                r0, r1 = nxt[e][i], nxt[e + 1][i]
                for j in range(N):
                    r0[j] += LT[i][j]
                    r1[j] += LJ[i][j]
        layers = nxt
    return IntPoly(trace(L) for L in layers)


def verify_trace_identity(g: Graph, k_max: int, backend=None) -> Report:
    """Check tr((T + uJ)^k) against the bump-count walk enumeration for k <= k_max.

    Also checks that the u = 0 value equals tr(T^k), the count of closed
    walks without backtracking.
    """
    a = build_arcs(g)
    T, J = matrix_T(a), matrix_J(g.m)
    rep = Report("trace_identity", info={"n": g.n, "m": g.m, "k_max": k_max})
    Tk = None
    for k in range(1, k_max + 1):
        walks = closed_walk_bump_poly(a, k, backend=backend)
        traced = trace_power_poly(T, J, k)
        rep.record("trace_equals_walks", traced == walks,
                   {"k": k, "trace": list(traced.coeffs), "walks": list(walks.coeffs)})
        Tk = T if Tk is None else matmul(Tk, T)
        rep.record("u0_is_nonbacktracking", traced(0) == trace(Tk), {"k": k})
    rep.checks.setdefault("trace_equals_walks", True)
    rep.checks.setdefault("u0_is_nonbacktracking", True)
    return rep


def enumerate_legal_sets(g: Graph, parts) -> set[frozenset]:
    """Explicit legal collections of sink stars with the given leaf counts.

    Each collection is a frozenset of stars, each star a frozenset of arc
    indices sharing a head; sinks are pairwise distinct. Exponential, for
    tiny graphs only.
    """
    a = build_arcs(g)
    into = [[i for i in range(a.size) if a.heads[i] == v] for v in range(g.n)]
    parts = list(parts)
    found: set[frozenset] = set()

    def rec(idx, used, stars):
        if idx == len(parts):
            found.add(frozenset(stars))
            return
        for v in range(g.n):
            if v in used or len(into[v]) < parts[idx]:
                continue
            for star in combinations(into[v], parts[idx]):
                rec(idx + 1, used | {v}, stars + [frozenset(star)])

    rec(0, frozenset(), [])
    return found
