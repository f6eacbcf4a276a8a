"""The poly-Bernoulli array B(n,k) and its relatives C(n,k), D(n,k).

Each array is reachable through several independent routes (closed Stirling
formula, alternating sieve, row recursion, double EGF, and the combinatorial
routes that live in other modules).  The dispatcher :func:`value` exposes them
all under one signature so grids can be cross-checked.

Boundary conventions (matrix-counting semantics, the empty matrix counts once):

* B(n,0) = B(0,k) = 1
* C(n,0) = 1 for all n, C(0,k) = 0 for k >= 1
* D(0,0) = 1, D(n,0) = D(0,k) = 0 otherwise
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial

from .exact_core import BivariateSeries, binomial, series_reciprocal, stirling2

__all__ = [
    "Seq",
    "Method",
    "UnsupportedMethod",
    "DomainError",
    "boundary_value",
    "poly_bernoulli",
    "c_relative",
    "d_relative",
    "value",
    "table",
    "vesztergombi_f",
    "egf_table",
    "binomial_transform_check",
]


class Seq(str, Enum):
    B = "B"
    C = "C"
    D = "D"


class Method(str, Enum):
    closed = "closed"
    sieve = "sieve"
    recursion = "recursion"
    egf = "egf"
    permanent = "permanent"
    chromatic = "chromatic"
    enumeration = "enumeration"


class UnsupportedMethod(ValueError):
    pass


class DomainError(ValueError):
    pass


def _check_args(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got ({n}, {k})")


def boundary_value(seq: Seq, n: int, k: int) -> int | None:
    """Value fixed by convention on the n=0 / k=0 boundary, else None."""
    seq = Seq(seq)
    if seq is Seq.B:
        return 1 if n == 0 or k == 0 else None
    if seq is Seq.C:
        if k == 0:
            return 1
        if n == 0:
            return 0
        return None
    if n == 0 or k == 0:
        return 1 if n == k == 0 else 0
    return None


# closed Stirling formulas -------------------------------------------------

def b_closed(n: int, k: int) -> int:
    return sum(factorial(m) ** 2 * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1)
               for m in range(min(n, k) + 1))


def c_closed(n: int, k: int) -> int:
    return sum(factorial(m) ** 2 * stirling2(n + 1, m + 1) * stirling2(k, m)
               for m in range(min(n, k) + 1))


def d_closed(n: int, k: int) -> int:
    return sum(factorial(m) ** 2 * stirling2(n, m) * stirling2(k, m)
               for m in range(min(n, k) + 1))


# alternating sieve formulas ----------------------------------------------

def b_sieve(n: int, k: int) -> int:
    s = sum((-1) ** m * factorial(m) * stirling2(n, m) * (m + 1) ** k for m in range(n + 1))
    return (-1) ** n * s


def _c_sieve_raw(a: int, b: int) -> int:
    # the alternating sum with (m+1)^b weights; evaluates to C(b, a)
    return sum((-1) ** (a + m) * factorial(m) * (m + 1) ** b * stirling2(a + 1, m + 1) for m in range(a + 1))


def c_sieve(n: int, k: int) -> int:
    # summation runs over the column index: C(n,k) = sum_m (-1)^{k+m} m! (m+1)^n S(k+1,m+1)
    return _c_sieve_raw(k, n)


def d_sieve(n: int, k: int) -> int:
    # 0**0 == 1 handles the k = 0 column
    return sum((-1) ** (n + m) * factorial(m) * m ** k * stirling2(n + 1, m + 1) for m in range(n + 1))


def vesztergombi_f(r: int, n: int, k: int) -> int:
    """sum_{m=0}^{n} (-1)^{n+m} (m+r)! (m+r)^k S(n+1, m+1).

    This counts permutations of [n+k+r] with -(k+r) < pi(i) - i < n+r, so
    f(0,n,k) = D(n,k), f(1,n,k) = C(n+1,k) and f(2,n,k) = B(n+1,k+1).
    """
    if min(r, n, k) < 0:
        raise DomainError("r, n, k must be non-negative")
    return sum((-1) ** (n + m) * factorial(m + r) * (m + r) ** k * stirling2(n + 1, m + 1)
               for m in range(n + 1))


# recursions ---------------------------------------------------------------

class _RecursionTable:
    """Column-by-column table for X(n, k+1) in terms of column k."""

    def __init__(self, seq: Seq):
        self.seq = seq
        self.cols: list[list[int]] = []
        self.nmax = -1
        self._lock = threading.Lock()

    def _first_column(self, nmax: int) -> list[int]:
        if self.seq is Seq.D:
            return [1] + [0] * nmax
        return [1] * (nmax + 1)

    def _next_column(self, prev: list[int]) -> list[int]:
        nmax = len(prev) - 1
        out = [0] * (nmax + 1)
        for n in range(nmax + 1):
            if self.seq is Seq.B:
                out[n] = prev[n] + sum(binomial(n, m) * prev[n - m + 1] for m in range(1, n + 1))
            elif self.seq is Seq.C:
                out[n] = sum(binomial(n, m) * prev[n - m + 1] for m in range(1, n + 1))
            else:
                out[n] = sum(binomial(n, m) * (prev[n - m] + prev[n - m + 1]) for m in range(1, n + 1))
        return out

    def get(self, n: int, k: int) -> int:
        if n > self.nmax or k >= len(self.cols):
            self._build(max(n, 2 * self.nmax, 8), max(k, 2 * (len(self.cols) - 1), 8))
        return self.cols[k][n]

    def _build(self, nmax: int, kmax: int) -> None:
        with self._lock:
            if nmax > self.nmax:
                cols = [self._first_column(nmax)]
                for _ in range(kmax):
                    cols.append(self._next_column(cols[-1]))
                self.cols, self.nmax = cols, nmax
            while len(self.cols) <= kmax:
                self.cols.append(self._next_column(self.cols[-1]))


_RECURSION = {s: _RecursionTable(s) for s in Seq}


# EGF ----------------------------------------------------------------------

def egf_table(seq: Seq, nmax: int, kmax: int) -> list[list[Fraction]]:
    """n! k! [x^n y^k] of the double EGF, as a (nmax+1) x (kmax+1) grid of Fractions."""
    seq = Seq(seq)
    ex = BivariateSeries.exp_x(nmax, kmax)
    ey = BivariateSeries.exp_y(nmax, kmax)
    exy = BivariateSeries.exp_xy(nmax, kmax)
    inv = series_reciprocal(ex + ey - exy)
    if seq is Seq.B:
        s = exy * inv
    elif seq is Seq.C:
        s = ex * inv
    else:
        s = inv
    return [[s.egf_coefficient(a, b) for b in range(kmax + 1)] for a in range(nmax + 1)]


_EGF_CACHE: dict[Seq, list[list[Fraction]]] = {}


def _egf_value(seq: Seq, n: int, k: int) -> int:
    t = _EGF_CACHE.get(seq)
    if t is None or n >= len(t) or k >= len(t[0]):
        size = max(n, k, 8)
        t = egf_table(seq, size, size)
        _EGF_CACHE[seq] = t
    v = t[n][k]
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral EGF coefficient {v} at ({n},{k})")
    return v.numerator


# dispatch -----------------------------------------------------------------

_CLOSED = {Seq.B: b_closed, Seq.C: c_closed, Seq.D: d_closed}
_SIEVE = {Seq.B: b_sieve, Seq.C: c_sieve, Seq.D: d_sieve}


def _via_other_module(seq: Seq, n: int, k: int, method: Method) -> int:
    if method is Method.permanent:
        from .perm_enum import band_matrix, band_preset, permanent_ryser
        return permanent_ryser(band_matrix(band_preset(seq, n, k)))
    if method is Method.chromatic:
        from . import chromatic
        return {Seq.B: chromatic.b_via_chromatic, Seq.C: chromatic.c_via_chromatic,
                Seq.D: chromatic.d_via_chromatic}[seq](n, k)
    from .matrix_enum import PRESETS, Restriction, count_avoiding
    r = {Seq.B: Restriction.none, Seq.C: Restriction.cols_nonzero, Seq.D: Restriction.rows_and_cols_nonzero}[seq]
    return count_avoiding(n, k, PRESETS["L"], r)


def value(seq: Seq, n: int, k: int, method: Method | str = Method.closed) -> int:
    """B, C or D at (n, k) by the requested route."""
    seq = Seq(seq)
    try:
        method = Method(method)
    except ValueError:
        raise UnsupportedMethod(f"unknown method {method!r}") from None
    _check_args(n, k)
    if method is Method.closed:
        return _CLOSED[seq](n, k)
    if method is Method.sieve:
        return _SIEVE[seq](n, k)
    if method is Method.recursion:
        return _RECURSION[seq].get(n, k)
    if method is Method.egf:
        return _egf_value(seq, n, k)
    return _via_other_module(seq, n, k, method)


def poly_bernoulli(n: int, k: int, method: Method | str = Method.closed) -> int:
    return value(Seq.B, n, k, method)


def c_relative(n: int, k: int, method: Method | str = Method.closed) -> int:
    return value(Seq.C, n, k, method)


def d_relative(n: int, k: int, method: Method | str = Method.closed) -> int:
    return value(Seq.D, n, k, method)


def table(seq: Seq, nmax: int, kmax: int, method: Method | str = Method.closed) -> list[list[int]]:
    return [[value(seq, n, k, method) for k in range(kmax + 1)] for n in range(nmax + 1)]


# binomial transforms ------------------------------------------------------

@dataclass
class RelationCheck:
    name: str
    applicable: bool
    lhs: int | None = None
    rhs: int | None = None

    @property
    def ok(self) -> bool:
        return not self.applicable or self.lhs == self.rhs


@dataclass
class TransformReport:
    n: int
    k: int
    relations: list[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.relations)

    def as_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "ok": self.ok,
            "relations": [
                {"name": r.name, "applicable": r.applicable, "ok": r.ok,
                 "lhs": None if r.lhs is None else str(r.lhs),
                 "rhs": None if r.rhs is None else str(r.rhs)}
                for r in self.relations
            ],
        }


def binomial_transform_check(n: int, k: int) -> TransformReport:
    """Check B = binomial transform of C (over columns), C = transform of D (over rows), and the double transform."""
    _check_args(n, k)
    rep = TransformReport(n, k)
    # (i) k >= 0, n >= 1 (n = 0 holds as well under the boundary convention)
    rep.relations.append(RelationCheck(
        "B=sum_i binom(k,i) C(n,i)", True, b_closed(n, k),
        sum(binomial(k, i) * c_closed(n, i) for i in range(k + 1))))
    ok2 = n >= 1 and k >= 1
    rep.relations.append(RelationCheck(
        "C=sum_i binom(n,i) D(i,k)", ok2,
        c_closed(n, k) if ok2 else None,
        sum(binomial(n, i) * d_closed(i, k) for i in range(1, n + 1)) if ok2 else None))
    rep.relations.append(RelationCheck(
        "B=1+sum_ij binom(n,i) binom(k,j) D(i,j)", ok2,
        b_closed(n, k) if ok2 else None,
        1 + sum(binomial(n, i) * binomial(k, j) * d_closed(i, j)
                for i in range(1, n + 1) for j in range(1, k + 1)) if ok2 else None))
    return rep
