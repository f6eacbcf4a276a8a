"""Diagonal sums of B and C, and the rational expression conjectured to equal the B diagonal."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_core import stirling2
from .sequences import Seq, value

__all__ = ["DiagonalReport", "diagonal_sum", "three_p_n", "check_stephan", "PRINTED_PREFIX"]

# largest N for which a diagonal value was published alongside the conjecture
PRINTED_PREFIX = 7


def diagonal_sum(seq: Seq | str, N: int) -> int:
    """Sum over n+k = N.  For C only n >= 1 is taken, so the C sums start at N = 1."""
    seq = Seq(seq)
    if N < 0:
        raise ValueError("N must be non-negative")
    lo = 1 if seq is Seq.C else 0
    return sum(value(seq, n, N - n) for n in range(lo, N + 1))


def three_p_n(N: int) -> Fraction:
    if N < 0:
        raise ValueError("N must be non-negative")
    total = Fraction(0)
    inner = Fraction(0)
    for j in range(1, N + 2):
        i = j - 1
        inner += Fraction(3 ** i, (2 * i + 1) * comb(2 * i, i))
        total += (-1) ** j * factorial(j) * stirling2(N + 1, j) * Fraction(comb(2 * j, j), 3 ** (j - 1)) * inner
    return (-1) ** (N + 1) * total / 2


@dataclass(frozen=True)
class DiagonalReport:
    N: int
    diag_sum: int
    three_p_n: Fraction
    in_printed_range: bool

    @property
    def equal(self) -> bool:
        return self.three_p_n.denominator == 1 and self.three_p_n.numerator == self.diag_sum

    def as_dict(self) -> dict:
        return {"N": self.N, "diag_sum": str(self.diag_sum), "three_p_n": str(self.three_p_n),
                "equal": self.equal, "in_printed_range": self.in_printed_range}


def check_stephan(N_max: int) -> list[DiagonalReport]:
    """Evidence for N = 0..N_max.  N = 0 and N beyond the published prefix are flagged."""
    return [DiagonalReport(N, diagonal_sum(Seq.B, N), three_p_n(N), 1 <= N <= PRINTED_PREFIX)
            for N in range(N_max + 1)]
