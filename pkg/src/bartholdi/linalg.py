"""Exact integer linear algebra and dense univariate integer polynomials.

Matrices are plain lists of lists of Python ints (or ``Fraction`` for the
rational determinant). Nothing in this module touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

Matrix = list[list[int]]


class IntPoly:
    """Dense polynomial with integer coefficients, ascending by power.

    Instances are immutable and kept canonical: no trailing zero
    coefficients, the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * power + [coeff])

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation at an int or ``Fraction``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_neg(self) -> "IntPoly":
        """p(-x)."""
        return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def reverse(self, n: int | None = None) -> "IntPoly":
        """x^n p(1/x); ``n`` defaults to the degree and must not be below it.

        For ``p = charpoly(M)`` and ``n = dim M`` this is ``det(I - xM)``.
        """
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} in length {n}")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def descending(self, length: int | None = None) -> list[int]:
        """Coefficients from the top power down, optionally zero-padded on top."""
        c = list(self.coeffs)
        if length is not None:
            c += [0] * (length - len(c))
        return c[::-1]

    def format(self, var: str = "x") -> str:
        """Human form, highest power first: ``u^4 - 37u^2 + 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                mono = var if power == 1 else f"{var}^{power}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()


def poly_product(polys: Iterable[IntPoly]) -> IntPoly:
    return reduce(lambda a, b: a * b, polys, IntPoly([1]))


# matrices


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n: int) -> Matrix:
    return [[0] * n for _ in range(n)]


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*M)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    return [[s * a for a in row] for row in A]


def matmul(A, B):
    """Product skipping zero entries of ``A``; fast when ``A`` is sparse."""
    if not A:
        return []
    width = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * width
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                if a == 1:
                    for j in range(width):
                        acc[j] += bk[j]
                else:
                    for j in range(width):
                        acc[j] += a * bk[j]
        out.append(acc)
    return out


def trace(M) -> int:
    return sum(M[i][i] for i in range(len(M)))


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off : off + len(row)] = row
        off += len(b)
    return out


def _check_square(M):
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; every division is checked exact."""
    n = _check_square(M)
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                num = akk * rowi[j] - aik * rowk[j]
                q, r = divmod(num, prev)
                assert r == 0, "inexact Bareiss division"
                rowi[j] = q
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_rational(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a matrix with rational entries.

    Each row is scaled by the lcm of its denominators, the integer
    determinant is taken with Bareiss, then the scaling is divided out.
    """
    n = _check_square(M)
    scale = 1
    rows = []
    for row in M:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * den) for x in fr])
        scale *= den
    return Fraction(determinant(rows), scale) if n else Fraction(1)


def charpoly_faddeev(M: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - M) by the Faddeev–LeVerrier recurrence.

    The division by ``k`` at step ``k`` is exact over the integers; a
    nonzero remainder means a bug and trips an assertion.
    """
    n = _check_square(M)
    A = [list(r) for r in M]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = zeros(n)
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            Mk[i][i] += c_prev
        AM = matmul(A, Mk)
        q, r = divmod(-trace(AM), k)
        assert r == 0, f"Faddeev-LeVerrier division by {k} is not exact"
        coeffs[n - k] = q
        Mk = AM
    return IntPoly(coeffs)


def charpoly_berkowitz(M: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - M) by Berkowitz's division-free algorithm."""
    n = _check_square(M)
    if n == 0:
        return IntPoly([1])
    # descending coefficients of the leading r x r principal block
    prev = [1, -M[0][0]]
    for r in range(1, n):
        row = M[r][:r]
        col = [M[i][r] for i in range(r)]
        t = [1, -M[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum(a * b for a, b in zip(row, v) if a))
            v = [sum(M[i][j] * v[j] for j in range(r) if M[i][j]) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                s += t[i - j] * prev[j]
            new.append(s)
        prev = new
    return IntPoly.from_descending(prev)


_CHARPOLY = {"faddeev": charpoly_faddeev, "berkowitz": charpoly_berkowitz}


def charpoly(M: Sequence[Sequence[int]], method: str = "faddeev") -> IntPoly:
    """Characteristic polynomial det(xI - M), monic of degree dim M."""
    try:
        fn = _CHARPOLY[method]
    except KeyError:
        raise ValueError(f"unknown charpoly method {method!r}") from None
    return fn(M)
