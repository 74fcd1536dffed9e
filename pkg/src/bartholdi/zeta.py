"""Ihara and Bartholdi determinant expressions and the reduced polynomial.

The reduced Bartholdi polynomial of a graph with m edges is
``det(T + uJ)``, a degree-2m polynomial in ``u`` whose coefficient of
``u**(2m-k)`` is written ``d_k``. Two pipelines live here:

* ``reduced_bartholdi_det`` uses ``T + uJ = J (JT + uI)`` and takes the
  exact characteristic polynomial of the integer matrix ``JT``;
* ``reduced_bartholdi_product`` uses the fact that ``JT`` is block diagonal
  by arc tail, each block being all-ones minus identity, so the determinant
  factors over vertices.

The star-counting pipeline is in ``bartholdi.stars``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arcs import build_arcs, matrix_B, matrix_J, matrix_JT, matrix_T
from .errors import PoleError
from .graph import Graph
from .linalg import IntPoly, charpoly, det_rational, poly_product


@dataclass(frozen=True)
class ReducedZetaResult:
    n: int
    m: int
    method: str
    poly: IntPoly
    extra: dict = field(default_factory=dict, compare=False)

    def coefficient_d(self, k: int) -> int:
        return coefficient_d(self, k)

    def d_values(self) -> list[int]:
        return [self.poly.coeff(2 * self.m - k) for k in range(2 * self.m + 1)]

    def coeffs_ascending(self) -> list[int]:
        return [self.poly.coeff(i) for i in range(2 * self.m + 1)]

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "method": self.method,
            "coeffs_ascending": [str(c) for c in self.coeffs_ascending()],
            "d": {str(k): str(d) for k, d in enumerate(self.d_values())},
        }
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        return self.poly.format("u")


def coefficient_d(r: ReducedZetaResult, k: int) -> int:
    """Coefficient of ``u**(2m-k)``."""
    if not 0 <= k <= 2 * r.m:
        raise ValueError(f"k={k} outside [0, {2 * r.m}]")
    return r.poly.coeff(2 * r.m - k)


def ihara_reciprocal(g: Graph, charpoly_method: str = "faddeev") -> IntPoly:
    """det(I - tT) as a polynomial in t."""
    a = build_arcs(g)
    return charpoly(matrix_T(a), charpoly_method).reverse(a.size)


def reduced_bartholdi_det(g: Graph, charpoly_method: str = "faddeev") -> ReducedZetaResult:
    """det(T + uJ) via the characteristic polynomial of JT.

    det(T + uJ) = det(J) det(JT + uI) = (-1)^m c(-u) with c(x) = det(xI - JT).
    """
    a = build_arcs(g)
    c = charpoly(matrix_JT(a), charpoly_method)
    poly = c.substitute_neg() * (-1) ** g.m
    return ReducedZetaResult(g.n, g.m, "det", poly)


def _vertex_factor(d: int) -> IntPoly:
    if d == 0:
        return IntPoly([1])
    return IntPoly([d - 1, 1]) * IntPoly([-1, 1]) ** (d - 1)


def reduced_bartholdi_product(g: Graph) -> ReducedZetaResult:
    """Closed product ``(-1)^m * prod_v (u + d(v) - 1) (u - 1)^(d(v) - 1)``.

    Follows from JT being block diagonal by arc tail with blocks
    ``ones(d) - I``, whose eigenvalues are ``d - 1`` once and ``-1`` with
    multiplicity ``d - 1``. Depends on the degree sequence only.
    """
    return ReducedZetaResult(g.n, g.m, "product", reduced_product_from_degrees(g.degrees()))


def reduced_product_from_degrees(degrees) -> IntPoly:
    degrees = list(degrees)
    m, odd = divmod(sum(degrees), 2)
    if odd:
        raise ValueError("degree sum must be even")
    return poly_product(_vertex_factor(d) for d in degrees) * (-1) ** m


def _edge_matrices(g: Graph, u: Fraction, t: Fraction):
    a = build_arcs(g)
    T, J, B = matrix_T(a), matrix_J(g.m), matrix_B(a)
    N = a.size
    via_b = [
        [(1 if i == j else 0) - (B[i][j] - (1 - u) * J[i][j]) * t for j in range(N)]
        for i in range(N)
    ]
    via_t = [
        [(1 if i == j else 0) - (T[i][j] + u * J[i][j]) * t for j in range(N)]
        for i in range(N)
    ]
    return via_b, via_t


def bartholdi_edge_eval(g: Graph, u, t) -> Fraction:
    """det(I - (B - (1-u)J) t), checked against det(I - (T + uJ) t).

    The two matrices are identical entrywise because T = B - J; that
    identity is asserted before a single determinant is taken.
    """
    u, t = Fraction(u), Fraction(t)
    via_b, via_t = _edge_matrices(g, u, t)
    assert via_b == via_t, "edge forms differ: T != B - J"
    return det_rational(via_t)


def bartholdi_vertex_eval(g: Graph, u, t) -> Fraction:
    """Vertex-side expression on n x n matrices.

    ``(1 - (1-u)^2 t^2)^(m-n) * det(I - tA + (1-u)(D - (1-u)I) t^2)``.
    Raises ``PoleError`` when the prefactor base vanishes and m < n.
    """
    u, t = Fraction(u), Fraction(t)
    n, m = g.n, g.m
    base = 1 - (1 - u) ** 2 * t**2
    exponent = m - n
    if base == 0 and exponent < 0:
        raise PoleError(f"prefactor base vanishes at u={u}, t={t} with m - n = {exponent}")
    A = g.adjacency()
    deg = g.degrees()
    s = 1 - u
    M = [
        [
            (1 if i == j else 0)
            - t * A[i][j]
            + (s * ((deg[i] if i == j else 0) - (s if i == j else 0)) * t**2)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return base**exponent * det_rational(M)


@dataclass(frozen=True)
class BartholdiEvaluation:
    u: Fraction
    t: Fraction
    edge_value: Fraction
    vertex_value: Fraction | None

    @property
    def agree(self) -> bool | None:
        if self.vertex_value is None:
            return None
        return self.edge_value == self.vertex_value

    def to_dict(self):
        return {
            "u": str(self.u),
            "t": str(self.t),
            "edge_form": str(self.edge_value),
            "vertex_form": None if self.vertex_value is None else str(self.vertex_value),
            "agreement": self.agree,
        }


def bartholdi_evaluate(g: Graph, u, t) -> BartholdiEvaluation:
    """Both determinant forms at one point; the vertex form is None at a pole."""
    u, t = Fraction(u), Fraction(t)
    edge = bartholdi_edge_eval(g, u, t)
    try:
        vertex = bartholdi_vertex_eval(g, u, t)
    except PoleError:
        vertex = None
    return BartholdiEvaluation(u, t, edge, vertex)


def random_rational_points(count: int, seed: int, bound: int = 9) -> list[tuple[Fraction, Fraction]]:
    """Seeded ``(u, t)`` pairs with numerators in [-bound, bound], denominators in [1, bound]."""
    rng = random.Random(seed)

    def draw():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return [(draw(), draw()) for _ in range(count)]
