"""Akiyama-Tanigawa (AT) and Chen (BT) triangle algorithms over the rationals.

Both consume a seed row a_{0,0}, a_{0,1}, ... and produce the left edge a_{n,0}.
Only the first n+1 seed terms influence a_{n,0}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exact_core import stirling2
from .sequences import Seq

__all__ = [
    "TriangleRow",
    "at_step",
    "bt_step",
    "at_run",
    "bt_run",
    "at_closed",
    "bt_closed",
    "triangle",
    "make_seed",
    "bernoulli_numbers",
    "pb_via_transforms",
]

Rational = Fraction | int


@dataclass(frozen=True)
class TriangleRow:
    entries: tuple[Fraction, ...]
    generation: int = 0

    @classmethod
    def seed(cls, values: Sequence[Rational]) -> "TriangleRow":
        return cls(tuple(Fraction(v) for v in values), 0)


def _as_row(row: TriangleRow | Sequence[Rational]) -> TriangleRow:
    return row if isinstance(row, TriangleRow) else TriangleRow.seed(row)


def at_step(row: TriangleRow | Sequence[Rational]) -> TriangleRow:
    """a_{n+1,i} = (i+1)(a_{n,i} - a_{n,i+1})."""
    row = _as_row(row)
    a = row.entries
    if len(a) < 2:
        raise ValueError("a step needs at least two entries")
    return TriangleRow(tuple((i + 1) * (a[i] - a[i + 1]) for i in range(len(a) - 1)), row.generation + 1)


def bt_step(row: TriangleRow | Sequence[Rational]) -> TriangleRow:
    """b_{n+1,i} = i b_{n,i} - (i+1) b_{n,i+1}."""
    row = _as_row(row)
    b = row.entries
    if len(b) < 2:
        raise ValueError("a step needs at least two entries")
    return TriangleRow(tuple(i * b[i] - (i + 1) * b[i + 1] for i in range(len(b) - 1)), row.generation + 1)


_STEP = {"at": at_step, "bt": bt_step}


def _prefix(seed: Sequence[Rational], n: int) -> TriangleRow:
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(seed) < n + 1:
        raise ValueError(f"seed of length {len(seed)} is too short for n={n}")
    return TriangleRow.seed(seed[:n + 1])


def triangle(rule: str, seed: Sequence[Rational], n: int) -> list[TriangleRow]:
    """Rows 0..n of the triangle grown from the first n+1 seed terms."""
    step = _STEP[rule]
    rows = [_prefix(seed, n)]
    for _ in range(n):
        rows.append(step(rows[-1]))
    return rows


def at_run(seed: Sequence[Rational], n: int) -> Fraction:
    return triangle("at", seed, n)[-1].entries[0]


def bt_run(seed: Sequence[Rational], n: int) -> Fraction:
    return triangle("bt", seed, n)[-1].entries[0]


def at_closed(seed: Sequence[Rational], n: int) -> Fraction:
    """sum_i (-1)^i i! S(n+1,i+1) a_{0,i}."""
    s = _prefix(seed, n).entries
    return sum(((-1) ** i * factorial(i) * stirling2(n + 1, i + 1) * s[i] for i in range(n + 1)), Fraction(0))


def bt_closed(seed: Sequence[Rational], n: int) -> Fraction:
    """sum_i (-1)^i i! S(n,i) b_{0,i}.

    The sign is (-1)^i: two steps of the rule give b_{2,0} = -b_{0,1} + 2 b_{0,2}.
    """
    s = _prefix(seed, n).entries
    return sum(((-1) ** i * factorial(i) * stirling2(n, i) * s[i] for i in range(n + 1)), Fraction(0))


def make_seed(spec: str, length: int) -> list[Fraction]:
    """``bernoulli`` -> 1/(i+1); ``pow:k`` -> i^k; ``powplus:k`` -> (i+1)^k."""
    if spec == "bernoulli":
        return [Fraction(1, i + 1) for i in range(length)]
    name, _, arg = spec.partition(":")
    if name in ("pow", "powplus") and arg.isdigit():
        k = int(arg)
        shift = 1 if name == "powplus" else 0
        return [Fraction((i + shift) ** k) for i in range(length)]
    raise ValueError(f"unknown seed {spec!r}")


def bernoulli_numbers(m: int) -> list[Fraction]:
    """B_0..B_m from sum_{j=0}^{i} C(i+1,j) B_j = 0 (so B_1 = -1/2)."""
    out: list[Fraction] = []
    for i in range(m + 1):
        if i == 0:
            out.append(Fraction(1))
            continue
        out.append(-sum((comb(i + 1, j) * out[j] for j in range(i)), Fraction(0)) / (i + 1))
    return out


def pb_via_transforms(seq: Seq | str, n: int, k: int) -> int:
    """B, C, D at (n,k) read off a transform of a power seed.

    BT((i+1)^k) has left edge (-1)^n B(n,k) and AT(i^k) has (-1)^n D(n,k).
    AT((i+1)^n) has left edge (-1)^i C(n,i), so C is read at index k.
    """
    seq = Seq(seq)
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    if seq is Seq.B:
        v = (-1) ** n * bt_run(make_seed(f"powplus:{k}", n + 1), n)
    elif seq is Seq.D:
        v = (-1) ** n * at_run(make_seed(f"pow:{k}", n + 1), n)
    else:
        v = (-1) ** k * at_run(make_seed(f"powplus:{n}", k + 1), k)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral transform output {v}")
    return v.numerator
