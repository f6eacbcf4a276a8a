"""Chromatic polynomials of complete bipartite graphs K_{n,k}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .exact_core import (
    BivariateSeries,
    IntPolynomial,
    falling_factorial_poly,
    stirling1_signed,
    stirling2,
)
from .matrix_enum import BudgetExceeded

__all__ = [
    "ChromaticPoly",
    "chr_bipartite",
    "chr_bipartite_monomial",
    "count_colorings_bruteforce",
    "b_via_chromatic",
    "c_via_chromatic",
    "d_via_chromatic",
    "egf_grid",
]


@dataclass(frozen=True)
class ChromaticPoly:
    n: int
    k: int
    poly: IntPolynomial

    def __call__(self, q: int) -> int:
        return self.poly(q)

    def __str__(self) -> str:
        return str(self.poly)


@lru_cache(maxsize=None)
def _falling(l: int) -> IntPolynomial:
    return falling_factorial_poly(l)


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")


@lru_cache(maxsize=None)
def chr_bipartite(n: int, k: int) -> ChromaticPoly:
    """Sum of S(n,i) S(k,j) (q)_{i+j}: colour each side by a set partition."""
    _check(n, k)
    p = IntPolynomial()
    for i in range(n + 1):
        for j in range(k + 1):
            c = stirling2(n, i) * stirling2(k, j)
            if c:
                p = p + _falling(i + j) * c
    return ChromaticPoly(n, k, p)


def chr_bipartite_monomial(n: int, k: int) -> ChromaticPoly:
    """Same polynomial, coefficient of q^m read off as sum S(n,i) S(k,j) s(i+j, m)."""
    _check(n, k)
    coeffs = [0] * (n + k + 1)
    for i in range(n + 1):
        for j in range(k + 1):
            c = stirling2(n, i) * stirling2(k, j)
            if not c:
                continue
            for m in range(i + j + 1):
                coeffs[m] += c * stirling1_signed(i + j, m)
    return ChromaticPoly(n, k, IntPolynomial(coeffs))


def count_colorings_bruteforce(n: int, k: int, q: int, budget: int = 1 << 22) -> int:
    """Proper q-colourings of K_{n,k}, scanning all q^(n+k) assignments."""
    _check(n, k)
    if q < 0:
        raise ValueError("q must be non-negative")
    if q ** (n + k) > budget:
        raise BudgetExceeded(f"{q}^{n + k} assignments exceeds budget {budget}")
    total = 0
    for colours in product(range(q), repeat=n + k):
        left, right = colours[:n], colours[n:]
        if all(a != b for a in left for b in right):
            total += 1
    return total


def b_via_chromatic(n: int, k: int) -> int:
    return (-1) ** (n + k) * chr_bipartite(n, k)(-1)


def c_via_chromatic(n: int, k: int) -> int:
    return (-1) ** (n + k) * chr_bipartite(n, k + 1).poly.coeff(1)


def d_via_chromatic(n: int, k: int) -> int:
    return (-1) ** (n + k) * chr_bipartite(n + 1, k + 1).poly.derivative()(1)


def egf_grid(q: int, nmax: int, kmax: int) -> list[list[Fraction]]:
    """n! k! [x^n y^k] (e^x + e^y - 1)^q."""
    base = (BivariateSeries.exp_x(nmax, kmax) + BivariateSeries.exp_y(nmax, kmax)
            - BivariateSeries.constant(1, nmax, kmax))
    s = base ** q
    return [[s.egf_coefficient(a, b) for b in range(kmax + 1)] for a in range(nmax + 1)]
