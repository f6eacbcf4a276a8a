"""Exhaustive permutation families: distance-window (band) permutations,
excedance-set classes and Callan permutations, plus Ryser's permanent.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .matrix_enum import DEFAULT_BUDGET, BinaryMatrix, BudgetExceeded, SearchBudget
from .sequences import Seq

__all__ = [
    "BandSpec",
    "band_preset",
    "f_window",
    "enumerate_band",
    "count_band",
    "band_matrix",
    "permanent_ryser",
    "ExcedanceVariant",
    "excedance_set",
    "weak_excedance_set",
    "in_excedance_class",
    "enumerate_excedance_class",
    "count_excedance_class",
    "Sym",
    "L",
    "R",
    "TaggedPermutation",
    "parse_tagged",
    "format_tagged",
    "is_callan",
    "blocks",
    "reverse_blocks",
    "BoundaryClass",
    "enumerate_callan",
    "count_callan",
]

Permutation = tuple[int, ...]


# restricted permutations ------------------------------------------------------

def _restricted(admissible: Sequence[int], budget: SearchBudget) -> Iterator[Permutation]:
    """Permutations of [N] (1-based) with pi(i) in the bitmask admissible[i-1], lexicographic.

    A branch is cut as soon as some unfilled position has no unused admissible value.
    """
    N = len(admissible)
    out = [0] * N

    def rec(pos: int, used: int):
        if pos == N:
            yield tuple(out)
            return
        free = admissible[pos] & ~used
        while free:
            low = free & -free
            free ^= low
            budget.tick()
            nused = used | low
            if all(admissible[j] & ~nused for j in range(pos + 1, N)):
                out[pos] = low.bit_length()
                yield from rec(pos + 1, nused)

    if all(admissible):
        yield from rec(0, 0)


def _mask(values: Iterable[int]) -> int:
    m = 0
    for v in values:
        m |= 1 << (v - 1)
    return m


# band (Vesztergombi) permutations -------------------------------------------------

@dataclass(frozen=True)
class BandSpec:
    """Window -(k+r) <(=) pi(i) - i <(=) n+r on permutations of [ground].

    ``ground`` defaults to n+k+r, the set on which the alternating
    f(r,n,k) sum is a count; pass n+k to get the literal window on S_{n+k}.
    """

    r: int
    n: int
    k: int
    low_strict: bool
    high_strict: bool
    ground: int | None = None

    @property
    def size(self) -> int:
        return self.n + self.k + self.r if self.ground is None else self.ground

    @property
    def low(self) -> int:
        return -(self.k + self.r)

    @property
    def high(self) -> int:
        return self.n + self.r

    def admits(self, i: int, j: int) -> bool:
        """May position i carry value j?"""
        d = j - i
        lo_ok = d > self.low if self.low_strict else d >= self.low
        hi_ok = d < self.high if self.high_strict else d <= self.high
        return lo_ok and hi_ok

    def admissible_masks(self) -> list[int]:
        N = self.size
        return [_mask(j for j in range(1, N + 1) if self.admits(i, j)) for i in range(1, N + 1)]


def band_preset(seq: Seq | str, n: int, k: int) -> BandSpec:
    """V (B), V* (C) and V** (D)."""
    seq = Seq(seq)
    if seq is Seq.B:
        return BandSpec(0, n, k, False, False)
    if seq is Seq.C:
        return BandSpec(0, n, k, False, True)
    return BandSpec(0, n, k, True, True)


def f_window(r: int, n: int, k: int, ground: int | None = None) -> BandSpec:
    return BandSpec(r, n, k, True, True, ground)


def enumerate_band(spec: BandSpec, budget: int = DEFAULT_BUDGET) -> Iterator[Permutation]:
    return _restricted(spec.admissible_masks(), SearchBudget(budget))


def count_band(spec: BandSpec, budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_band(spec, budget))


def band_matrix(spec: BandSpec) -> BinaryMatrix:
    """a_ij = 1 iff position j may carry value i (1-based), so per(A) counts the band."""
    N = spec.size
    rows = []
    for i in range(1, N + 1):
        rows.append(sum(1 << (j - 1) for j in range(1, N + 1) if spec.admits(j, i)))
    return BinaryMatrix(N, N, tuple(rows))


def permanent_ryser(m: BinaryMatrix, max_size: int = 24) -> int:
    """Ryser's inclusion-exclusion over column subsets, visited in Gray-code order."""
    if m.n_rows != m.n_cols:
        raise ValueError(f"permanent needs a square matrix, got {m.n_rows}x{m.n_cols}")
    N = m.n_rows
    if N == 0:
        return 1
    if N > max_size:
        raise BudgetExceeded(f"Ryser permanent limited to size {max_size}")
    cols = m.transpose().rows  # cols[j]: bitmask of rows with a 1 in column j
    sums = [0] * N
    total = 0
    gray = 0
    for step in range(1, 1 << N):
        j = (step & -step).bit_length() - 1
        gray ^= 1 << j
        delta = 1 if (gray >> j) & 1 else -1
        c = cols[j]
        while c:
            low = c & -c
            sums[low.bit_length() - 1] += delta
            c ^= low
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if gray.bit_count() % 2 else prod
    return total if N % 2 == 0 else -total


# excedance classes ------------------------------------------------------------------

class ExcedanceVariant(str, Enum):
    E = "E"  # E(pi) <= [k] <= WE(pi): counted by B
    Estar = "Estar"  # E(pi) = [k]: counted by C
    Estarstar = "Estarstar"  # E(pi) = [k], no fixed points: counted by D
    WE_exact = "WE_exact"  # WE(pi) = [k] taken literally: counted by C(k, n)


def excedance_set(p: Permutation) -> set[int]:
    return {i for i, v in enumerate(p, start=1) if v > i}


def weak_excedance_set(p: Permutation) -> set[int]:
    return {i for i, v in enumerate(p, start=1) if v >= i}


def in_excedance_class(p: Permutation, k: int, variant: ExcedanceVariant | str) -> bool:
    variant = ExcedanceVariant(variant)
    head = set(range(1, k + 1))
    if variant is ExcedanceVariant.E:
        return excedance_set(p) <= head <= weak_excedance_set(p)
    if variant is ExcedanceVariant.WE_exact:
        return weak_excedance_set(p) == head
    if excedance_set(p) != head:
        return False
    return variant is ExcedanceVariant.Estar or all(v != i for i, v in enumerate(p, start=1))


def _excedance_masks(n: int, k: int, variant: ExcedanceVariant) -> list[int]:
    N = n + k
    masks = []
    for i in range(1, N + 1):
        if i <= k:
            strict = variant in (ExcedanceVariant.Estar, ExcedanceVariant.Estarstar)
            vals = range(i + 1 if strict else i, N + 1)
        else:
            strict = variant in (ExcedanceVariant.Estarstar, ExcedanceVariant.WE_exact)
            vals = range(1, i if strict else i + 1)
        masks.append(_mask(vals))
    return masks


def enumerate_excedance_class(n: int, k: int, variant: ExcedanceVariant | str,
                              budget: int = DEFAULT_BUDGET) -> Iterator[Permutation]:
    variant = ExcedanceVariant(variant)
    return _restricted(_excedance_masks(n, k, variant), SearchBudget(budget))


def count_excedance_class(n: int, k: int, variant: ExcedanceVariant | str, budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_excedance_class(n, k, variant, budget))


# Callan permutations -----------------------------------------------------------------

class Sym(NamedTuple):
    side: str  # "L" or "R"
    value: int

    def __str__(self) -> str:
        return f"{self.value}'" if self.side == "R" else str(self.value)


def L(i: int) -> Sym:
    return Sym("L", i)


def R(j: int) -> Sym:
    return Sym("R", j)


TaggedPermutation = tuple[Sym, ...]


def parse_tagged(text: str) -> TaggedPermutation:
    """Parse ``"2 1' 1"``; an apostrophe marks a right value."""
    out = []
    for tok in text.split():
        if tok.endswith("'"):
            out.append(R(int(tok[:-1])))
        else:
            out.append(L(int(tok)))
    return tuple(out)


def format_tagged(p: Sequence[Sym]) -> str:
    return " ".join(str(s) for s in p)


def alphabet_size(p: Sequence[Sym]) -> tuple[int, int]:
    return sum(1 for s in p if s.side == "L"), sum(1 for s in p if s.side == "R")


def is_tagged_permutation(p: Sequence[Sym], n: int, k: int) -> bool:
    return sorted(p) == [L(i) for i in range(1, n + 1)] + [R(j) for j in range(1, k + 1)]


def blocks(p: Sequence[Sym]) -> list[tuple[Sym, ...]]:
    """Maximal runs of same-sided symbols."""
    out: list[list[Sym]] = []
    for s in p:
        if out and out[-1][-1].side == s.side:
            out[-1].append(s)
        else:
            out.append([s])
    return [tuple(b) for b in out]


def is_callan(p: Sequence[Sym]) -> bool:
    return all(a.value < b.value for a, b in zip(p, p[1:]) if a.side == b.side)


def reverse_blocks(p: Sequence[Sym]) -> TaggedPermutation:
    return tuple(s for b in reversed(blocks(p)) for s in b)


_SIDE = {"any": None, "left": "L", "right": "R"}


@dataclass(frozen=True)
class BoundaryClass:
    first: str = "any"
    last: str = "any"

    def __post_init__(self):
        if self.first not in _SIDE or self.last not in _SIDE:
            raise ValueError("boundary sides are 'any', 'left' or 'right'")

    @classmethod
    def parse(cls, text: str) -> "BoundaryClass":
        short = {"*": "any", "l": "left", "r": "right"}
        a, b = text.split(",")
        return cls(short.get(a.strip(), a.strip()), short.get(b.strip(), b.strip()))

    def matches(self, p: Sequence[Sym]) -> bool:
        # the empty word satisfies every boundary condition
        if not p:
            return True
        f, l = _SIDE[self.first], _SIDE[self.last]
        return (f is None or p[0].side == f) and (l is None or p[-1].side == l)


def enumerate_callan(n: int, k: int, boundary: BoundaryClass = BoundaryClass(),
                     budget: int = DEFAULT_BUDGET) -> Iterator[TaggedPermutation]:
    """All Callan permutations on L(1..n) + R(1..k) in the given boundary class."""
    b = SearchBudget(budget)
    first, last = _SIDE[boundary.first], _SIDE[boundary.last]
    total = n + k
    out: list[Sym] = []
    left_free = [True] * (n + 1)
    right_free = [True] * (k + 1)

    def rec():
        pos = len(out)
        if pos == total:
            if last is None or not out or out[-1].side == last:
                yield tuple(out)
            return
        prev = out[-1] if out else None
        for side, free, size in (("L", left_free, n), ("R", right_free, k)):
            if pos == 0 and first is not None and side != first:
                continue
            start = prev.value + 1 if prev is not None and prev.side == side else 1
            for v in range(start, size + 1):
                if not free[v]:
                    continue
                b.tick()
                free[v] = False
                out.append(Sym(side, v))
                yield from rec()
                out.pop()
                free[v] = True

    yield from rec()


def count_callan(n: int, k: int, boundary: BoundaryClass = BoundaryClass(), budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_callan(n, k, boundary, budget))
