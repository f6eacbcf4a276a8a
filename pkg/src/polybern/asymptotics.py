"""Published asymptotic forms for the diagonals D(n,n) and C(n,n), in mpmath."""
from __future__ import annotations

import mpmath

from .sequences import Seq, value

__all__ = ["d_diagonal_asymptote", "c_diagonal_asymptote", "ratio"]

_DPS = 50


def d_diagonal_asymptote(n: int) -> mpmath.mpf:
    """sqrt(1/(2 pi (1 - ln 2))) (n!)^2 / (ln 2)^(2n)."""
    with mpmath.workdps(_DPS):
        ln2 = mpmath.log(2)
        return mpmath.sqrt(1 / (2 * mpmath.pi * (1 - ln2))) * mpmath.factorial(n) ** 2 / ln2 ** (2 * n)


def c_diagonal_asymptote(n: int) -> mpmath.mpf:
    """(2n)! / (2 ln 2 sqrt(1 - ln 2)) / (2 ln 2)^(2n), the o(1) term dropped."""
    with mpmath.workdps(_DPS):
        ln2 = mpmath.log(2)
        lead = 1 / (2 * ln2 * mpmath.sqrt(1 - ln2))
        return lead * (1 / (2 * ln2)) ** (2 * n) * mpmath.factorial(2 * n)


def ratio(seq: Seq | str, n: int) -> float:
    """Exact diagonal value divided by its asymptote."""
    seq = Seq(seq)
    form = {Seq.D: d_diagonal_asymptote, Seq.C: c_diagonal_asymptote}.get(seq)
    if form is None:
        raise ValueError("asymptotes are available for C and D only")
    with mpmath.workdps(_DPS):
        return float(mpmath.mpf(value(seq, n, n)) / form(n))
