"""Exact arithmetic primitives.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`; both are
unbounded and exact, which is all the arrays in this package need.  On top of that
this module provides memoized Stirling tables, binomials, dense integer polynomials
and truncated bivariate power series over the rationals.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

__all__ = [
    "StirlingTable",
    "stirling2",
    "stirling1_signed",
    "binomial",
    "factorial",
    "IntPolynomial",
    "falling_factorial_poly",
    "BivariateSeries",
    "series_reciprocal",
]


class StirlingTable:
    """Triangular table of Stirling numbers that grows geometrically on demand.

    ``kind`` is ``"second"`` for S(n, m) or ``"first_signed"`` for s(n, m).
    Rows are exposed as tuples; the table never mutates a row once published.
    """

    def __init__(self, kind: str, initial: int = 16):
        if kind not in ("second", "first_signed"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        self._grow(initial)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._rows)

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            target = max(n, 2 * (len(rows) - 1))
            while len(rows) <= target:
                p = len(rows) - 1  # previous row index
                prev = rows[p]
                row = [0] * (p + 2)
                for m in range(1, p + 2):
                    left = prev[m - 1]
                    up = prev[m] if m <= p else 0
                    if self.kind == "second":
                        row[m] = m * up + left
                    else:
                        row[m] = left - p * up
                rows.append(tuple(row))

    def __call__(self, n: int, m: int) -> int:
        if n < 0 or m < 0 or m > n:
            return 0
        if n > self.max_n:
            self._grow(n)
        return self._rows[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        if n > self.max_n:
            self._grow(n)
        return self._rows[n]


_S2 = StirlingTable("second")
_S1 = StirlingTable("first_signed")


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind; 0 outside the triangle."""
    return _S2(n, m)


def stirling1_signed(n: int, m: int) -> int:
    """Signed Stirling number of the first kind, the coefficients of (q)_n."""
    return _S1(n, m)


def binomial(n: int, m: int) -> int:
    if n < 0 or m < 0 or m > n:
        return 0
    return comb(n, m)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial with integer coefficients, ``coeffs[d]`` for q^d."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) - other.coeff(i) for i in range(n))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(d * c for d, c in enumerate(self.coeffs) if d)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def falling_factorial_poly(l: int) -> IntPolynomial:
    """(q)_l = q(q-1)...(q-l+1) in the monomial basis."""
    p = IntPolynomial([1])
    for j in range(l):
        p = p * IntPolynomial([-j, 1])
    return p


class BivariateSeries:
    """Power series in x, y truncated at total x-degree ``order_x`` and y-degree ``order_y``.

    ``coefficients[a][b]`` is the raw Taylor coefficient of x^a y^b (not scaled by
    factorials).  All arithmetic is exact and closed under the truncation.
    """

    __slots__ = ("order_x", "order_y", "coefficients")

    def __init__(self, order_x: int, order_y: int, coefficients=None):
        if order_x < 0 or order_y < 0:
            raise ValueError("truncation orders must be non-negative")
        self.order_x = order_x
        self.order_y = order_y
        if coefficients is None:
            coefficients = [[Fraction(0)] * (order_y + 1) for _ in range(order_x + 1)]
        else:
            coefficients = [
                [Fraction(coefficients[a][b]) if a < len(coefficients) and b < len(coefficients[a]) else Fraction(0)
                 for b in range(order_y + 1)]
                for a in range(order_x + 1)
            ]
        self.coefficients = coefficients

    @classmethod
    def constant(cls, c, order_x: int, order_y: int) -> "BivariateSeries":
        s = cls(order_x, order_y)
        s.coefficients[0][0] = Fraction(c)
        return s

    @classmethod
    def from_function(cls, f: Callable[[int, int], Fraction], order_x: int, order_y: int) -> "BivariateSeries":
        return cls(order_x, order_y, [[f(a, b) for b in range(order_y + 1)] for a in range(order_x + 1)])

    @classmethod
    def exp_x(cls, order_x: int, order_y: int) -> "BivariateSeries":
        return cls.from_function(lambda a, b: Fraction(1, factorial(a)) if b == 0 else Fraction(0), order_x, order_y)

    @classmethod
    def exp_y(cls, order_x: int, order_y: int) -> "BivariateSeries":
        return cls.from_function(lambda a, b: Fraction(1, factorial(b)) if a == 0 else Fraction(0), order_x, order_y)

    @classmethod
    def exp_xy(cls, order_x: int, order_y: int) -> "BivariateSeries":
        """e^{x+y}."""
        return cls.from_function(lambda a, b: Fraction(1, factorial(a) * factorial(b)), order_x, order_y)

    def _check(self, other: "BivariateSeries") -> None:
        if (self.order_x, self.order_y) != (other.order_x, other.order_y):
            raise ValueError("series truncation orders differ")

    def __getitem__(self, ab: tuple[int, int]) -> Fraction:
        a, b = ab
        return self.coefficients[a][b]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (self.order_x, self.order_y, self.coefficients) == (other.order_x, other.order_y, other.coefficients)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        return BivariateSeries(self.order_x, self.order_y,
                               [[p + q for p, q in zip(r, s)] for r, s in zip(self.coefficients, other.coefficients)])

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.order_x, self.order_y, [[-p for p in r] for r in self.coefficients])

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other) -> "BivariateSeries":
        if isinstance(other, (int, Fraction)):
            return BivariateSeries(self.order_x, self.order_y, [[p * other for p in r] for r in self.coefficients])
        self._check(other)
        X, Y = self.order_x, self.order_y
        A, B = self.coefficients, other.coefficients
        out = [[Fraction(0)] * (Y + 1) for _ in range(X + 1)]
        for i in range(X + 1):
            for j in range(Y + 1):
                a = A[i][j]
                if not a:
                    continue
                for p in range(X + 1 - i):
                    row_b, row_o = B[p], out[i + p]
                    for q in range(Y + 1 - j):
                        if row_b[q]:
                            row_o[j + q] += a * row_b[q]
        return BivariateSeries(X, Y, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivariateSeries":
        if e < 0:
            return series_reciprocal(self) ** (-e)
        result = BivariateSeries.constant(1, self.order_x, self.order_y)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def egf_coefficient(self, a: int, b: int) -> Fraction:
        """a! b! times the x^a y^b coefficient."""
        return self.coefficients[a][b] * factorial(a) * factorial(b)

    def __repr__(self) -> str:
        return f"BivariateSeries({self.order_x}, {self.order_y}, {self.coefficients!r})"


def series_reciprocal(s: BivariateSeries) -> BivariateSeries:
    """Multiplicative inverse of ``s`` up to its truncation orders."""
    c0 = s.coefficients[0][0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    X, Y = s.order_x, s.order_y
    S = s.coefficients
    t = [[Fraction(0)] * (Y + 1) for _ in range(X + 1)]
    inv0 = 1 / c0
    for a in range(X + 1):
        for b in range(Y + 1):
            acc = Fraction(1) if a == b == 0 else Fraction(0)
            for i in range(a + 1):
                Si, ti = S[i], t[a - i]
                for j in range(b + 1):
                    if (i or j) and Si[j]:
                        acc -= Si[j] * ti[b - j]
            t[a][b] = acc * inv0
    return BivariateSeries(X, Y, t)

