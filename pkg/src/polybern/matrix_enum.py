"""0/1 matrices avoiding forbidden submatrices, and lonesum matrices.

Counting is a depth-first, row-by-row search.  For 2x2 forbidden sets every
column pair carries a 4-bit record of the (top, bottom) value pairs already
seen, so a new row is rejected the moment it completes a forbidden pattern and
identical partial states are merged through memoization.  Arbitrary pattern
shapes fall back to an incremental check of the new row against all earlier
row combinations.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterator, Sequence

__all__ = [
    "BinaryMatrix",
    "PatternSet",
    "PRESETS",
    "Restriction",
    "BudgetExceeded",
    "NotLonesum",
    "SearchBudget",
    "contains_pattern",
    "count_avoiding",
    "count_avoiding_naive",
    "enumerate_avoiding",
    "all_matrices",
    "is_lonesum_reconstruction",
    "LonesumDecomposition",
    "lonesum_decompose",
    "lonesum_compose",
]

DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """Exhaustive search would visit more nodes than allowed."""


class NotLonesum(ValueError):
    pass


@dataclass(frozen=True)
class BinaryMatrix:
    """Rectangular 0/1 matrix; bit j of ``rows[i]`` is entry (i, j)."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0 or len(self.rows) != self.n_rows:
            raise ValueError("row count does not match n_rows")
        full = (1 << self.n_cols) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError(f"row {r:b} has bits beyond column {self.n_cols}")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], n_cols: int | None = None) -> "BinaryMatrix":
        if n_cols is None:
            n_cols = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != n_cols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, v in enumerate(row) if v))
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def from_strings(cls, data: Sequence[str], n_cols: int | None = None) -> "BinaryMatrix":
        for s in data:
            if set(s) - {"0", "1"}:
                raise ValueError(f"bad matrix row {s!r}")
        return cls.from_lists([[int(c) for c in s] for s in data], n_cols)

    @classmethod
    def zeros(cls, n: int, k: int) -> "BinaryMatrix":
        return cls(n, k, (0,) * n)

    @classmethod
    def ones(cls, n: int, k: int) -> "BinaryMatrix":
        return cls(n, k, ((1 << k) - 1,) * n)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.n_cols)) for r in self.rows]

    def transpose(self) -> "BinaryMatrix":
        cols = tuple(sum(((r >> j) & 1) << i for i, r in enumerate(self.rows)) for j in range(self.n_cols))
        return BinaryMatrix(self.n_cols, self.n_rows, cols)

    def row_sums(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def col_sums(self) -> list[int]:
        return [sum((r >> j) & 1 for r in self.rows) for j in range(self.n_cols)]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class PatternSet:
    name: str
    patterns: tuple[BinaryMatrix, ...]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("a pattern set needs at least one pattern")

    @classmethod
    def from_strings(cls, name: str, *patterns: Sequence[str]) -> "PatternSet":
        return cls(name, tuple(BinaryMatrix.from_strings(p) for p in patterns))

    @property
    def all_2x2(self) -> bool:
        return all(p.n_rows == 2 and p.n_cols == 2 for p in self.patterns)


PRESETS: dict[str, PatternSet] = {
    "L": PatternSet.from_strings("L", ["10", "01"], ["01", "10"]),
    "Gamma": PatternSet.from_strings("Gamma", ["11", "10"], ["11", "11"]),
    "P": PatternSet.from_strings("P", ["01", "10"], ["11", "10"]),
    "Q": PatternSet.from_strings("Q", ["11", "10"], ["10", "11"]),
}


def pattern_set(name_or_set: str | PatternSet) -> PatternSet:
    if isinstance(name_or_set, PatternSet):
        return name_or_set
    key = {"gamma": "Gamma", "l": "L", "p": "P", "q": "Q"}.get(name_or_set.lower(), name_or_set)
    try:
        return PRESETS[key]
    except KeyError:
        raise ValueError(f"unknown pattern preset {name_or_set!r}") from None


class Restriction(str, Enum):
    none = "none"
    cols_nonzero = "cols_nonzero"  # the (c|) classes
    rows_and_cols_nonzero = "rows_and_cols_nonzero"  # the (r|c|) classes


@dataclass
class SearchBudget:
    """Upper bound on visited search nodes."""

    max_nodes: int = DEFAULT_BUDGET
    visited: int = 0

    def tick(self, n: int = 1) -> None:
        self.visited += n
        if self.visited > self.max_nodes:
            raise BudgetExceeded(f"search exceeded {self.max_nodes} nodes")


def _submatrix_equals(m: BinaryMatrix, rows: Sequence[int], cols: Sequence[int], p: BinaryMatrix) -> bool:
    for a, i in enumerate(rows):
        mr, pr = m.rows[i], p.rows[a]
        for b, j in enumerate(cols):
            if ((mr >> j) & 1) != ((pr >> b) & 1):
                return False
    return True


def contains_pattern(m: BinaryMatrix, p: BinaryMatrix) -> bool:
    """True iff some order-preserving row and column selection of ``m`` equals ``p``."""
    if p.n_rows > m.n_rows or p.n_cols > m.n_cols:
        return False
    col_choices = list(combinations(range(m.n_cols), p.n_cols))
    for rows in combinations(range(m.n_rows), p.n_rows):
        for cols in col_choices:
            if _submatrix_equals(m, rows, cols, p):
                return True
    return False


def avoids(m: BinaryMatrix, s: PatternSet) -> bool:
    return not any(contains_pattern(m, p) for p in s.patterns)


def _satisfies(m: BinaryMatrix, r: Restriction) -> bool:
    if r is Restriction.none:
        return True
    full = (1 << m.n_cols) - 1
    covered = 0
    for row in m.rows:
        covered |= row
    if covered != full:
        return False
    return r is Restriction.cols_nonzero or all(m.rows)


def all_matrices(n: int, k: int) -> Iterator[BinaryMatrix]:
    for rows in product(range(1 << k), repeat=n):
        yield BinaryMatrix(n, k, rows)


def count_avoiding_naive(n: int, k: int, s: PatternSet | str, r: Restriction | str = Restriction.none) -> int:
    """Filter all 2^(nk) matrices; an oracle for small shapes only."""
    s, r = pattern_set(s), Restriction(r)
    return sum(1 for m in all_matrices(n, k) if _satisfies(m, r) and avoids(m, s))


# 2x2 fast path --------------------------------------------------------------

def _pair_tables(k: int, s: PatternSet):
    pairs = list(combinations(range(k), 2))
    # forbidden[b]: mask of top codes t such that (t over b) is a pattern; code = 2*left + right
    forbidden = [0] * 4
    for p in s.patterns:
        t = 2 * p[0, 0] + p[0, 1]
        b = 2 * p[1, 0] + p[1, 1]
        forbidden[b] |= 1 << t
    codes = []  # codes[v][idx] = bottom code of row value v on pair idx
    for v in range(1 << k):
        codes.append(tuple(2 * ((v >> j1) & 1) + ((v >> j2) & 1) for j1, j2 in pairs))
    return pairs, forbidden, codes


def _advance(state: tuple[int, ...], code_row: tuple[int, ...], forbidden: list[int]):
    new = []
    for seen, b in zip(state, code_row):
        if seen & forbidden[b]:
            return None
        new.append(seen | (1 << b))
    return tuple(new)


class _PairCounter:
    def __init__(self, k: int, s: PatternSet, r: Restriction, budget: SearchBudget):
        self.k = k
        self.full = (1 << k) - 1
        self.r = r
        self.budget = budget
        self.pairs, self.forbidden, self.codes = _pair_tables(k, s)
        self.values = [v for v in range(1 << k) if v or r is not Restriction.rows_and_cols_nonzero]
        self.memo: dict = {}

    def count(self, rows_left: int, state: tuple[int, ...], covered: int) -> int:
        if rows_left == 0:
            if self.r is Restriction.none or covered == self.full:
                return 1
            return 0
        key = (rows_left, state, covered)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for v in self.values:
            self.budget.tick()
            nxt = _advance(state, self.codes[v], self.forbidden)
            if nxt is not None:
                total += self.count(rows_left - 1, nxt, covered | v)
        self.memo[key] = total
        return total


def _count_after_first_row(args) -> int:
    n, k, s, r, v, max_nodes = args
    pc = _PairCounter(k, s, r, SearchBudget(max_nodes))
    state = _advance(tuple(0 for _ in pc.pairs), pc.codes[v], pc.forbidden)
    return pc.count(n - 1, state, v)


# generic path -----------------------------------------------------------------

def _new_row_ok(rows: list[int], k: int, s: PatternSet) -> bool:
    """Does appending rows[-1] avoid creating a pattern that ends on the new row?"""
    last = len(rows) - 1
    m = BinaryMatrix(len(rows), k, tuple(rows))
    for p in s.patterns:
        if p.n_rows > len(rows) or p.n_cols > k:
            continue
        col_choices = list(combinations(range(k), p.n_cols))
        for head in combinations(range(last), p.n_rows - 1):
            sel = head + (last,)
            for cols in col_choices:
                if _submatrix_equals(m, sel, cols, p):
                    return False
    return True


def _dfs_rows(n: int, k: int, s: PatternSet, r: Restriction, budget: SearchBudget) -> Iterator[tuple[int, ...]]:
    full = (1 << k) - 1
    values = [v for v in range(1 << k) if v or r is not Restriction.rows_and_cols_nonzero]
    fast = s.all_2x2
    if fast:
        pairs, forbidden, codes = _pair_tables(k, s)
    rows: list[int] = []

    def rec(state, covered):
        if len(rows) == n:
            if r is Restriction.none or covered == full:
                yield tuple(rows)
            return
        for v in values:
            budget.tick()
            rows.append(v)
            if fast:
                nxt = _advance(state, codes[v], forbidden)
                if nxt is not None:
                    yield from rec(nxt, covered | v)
            elif _new_row_ok(rows, k, s):
                yield from rec(None, covered | v)
            rows.pop()

    init = tuple(0 for _ in pairs) if fast else None
    yield from rec(init, 0)


def enumerate_avoiding(n: int, k: int, s: PatternSet | str, r: Restriction | str = Restriction.none,
                       budget: int = DEFAULT_BUDGET) -> Iterator[BinaryMatrix]:
    """Yield every n x k matrix avoiding ``s`` under restriction ``r``, in row-lexicographic order."""
    s, r = pattern_set(s), Restriction(r)
    for rows in _dfs_rows(n, k, s, r, SearchBudget(budget)):
        yield BinaryMatrix(n, k, rows)


def count_avoiding(n: int, k: int, s: PatternSet | str, r: Restriction | str = Restriction.none,
                   budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    """|M_n^k(S)| under the given restriction, by pruned depth-first search.

    ``jobs > 1`` splits the search over the first row across processes; each
    worker gets the full node budget for its own subtree.
    """
    if n < 0 or k < 0:
        raise ValueError("shape must be non-negative")
    s, r = pattern_set(s), Restriction(r)
    if not s.all_2x2:
        return sum(1 for _ in _dfs_rows(n, k, s, r, SearchBudget(budget)))
    if jobs > 1 and n >= 1:
        pc = _PairCounter(k, s, r, SearchBudget(budget))
        args = [(n, k, s, r, v, budget) for v in pc.values]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return sum(ex.map(_count_after_first_row, args))
    pc = _PairCounter(k, s, r, SearchBudget(budget))
    return pc.count(n, tuple(0 for _ in pc.pairs), 0)


# lonesum ------------------------------------------------------------------------

def _conjugate(parts: Sequence[int], length: int) -> list[int]:
    return [sum(1 for p in parts if p > j) for j in range(length)]


def _count_same_sums(m: BinaryMatrix, limit: int = 2) -> int:
    rs, cs = m.row_sums(), m.col_sums()
    k = m.n_cols
    by_weight: dict[int, list[int]] = {}
    for v in range(1 << k):
        by_weight.setdefault(v.bit_count(), []).append(v)
    found = 0
    for rows in product(*(by_weight.get(w, []) for w in rs)):
        if BinaryMatrix(m.n_rows, k, rows).col_sums() == cs:
            found += 1
            if found >= limit:
                break
    return found


def is_lonesum_reconstruction(m: BinaryMatrix, method: str = "staircase") -> bool:
    """True iff no other matrix of this shape has the same row and column sums.

    ``staircase``: the row-sum partition's conjugate must equal the sorted column
    sums (the Ferrers filling is then the only one).  ``bruteforce`` enumerates
    every matrix with the given row sums; meant for shapes up to about 4x4.
    """
    if method == "bruteforce":
        return _count_same_sums(m) == 1
    if method != "staircase":
        raise ValueError(f"unknown method {method!r}")
    return sorted(m.col_sums(), reverse=True) == _conjugate(m.row_sums(), m.n_cols)


@dataclass(frozen=True)
class LonesumDecomposition:
    """Ordinary row/column classes of a lonesum matrix, each ordered by increasing sum.

    Entry (i, j) is 1 iff i is in ordinary row class a, j in ordinary column
    class b (1-based) and a + b > order.
    """

    n_rows: int
    n_cols: int
    order: int
    row_classes: tuple[tuple[int, ...], ...]
    col_classes: tuple[tuple[int, ...], ...]
    zero_rows: tuple[int, ...]
    zero_cols: tuple[int, ...]


def _classes(values: Sequence[int], weight) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    zero = tuple(groups.pop(0, []))
    ordered = sorted(groups.items(), key=lambda kv: weight(kv[0]))
    return tuple(tuple(g) for _, g in ordered), zero


def lonesum_decompose(m: BinaryMatrix) -> LonesumDecomposition:
    if not avoids(m, PRESETS["L"]):
        raise NotLonesum("matrix contains a 2x2 permutation submatrix")
    rc, zr = _classes(m.rows, int.bit_count)
    cc, zc = _classes(m.transpose().rows, int.bit_count)
    if len(rc) != len(cc):
        raise AssertionError("lonesum matrix with unequal class counts")
    return LonesumDecomposition(m.n_rows, m.n_cols, len(rc), rc, cc, zr, zc)


def lonesum_compose(d: LonesumDecomposition) -> BinaryMatrix:
    rows = [0] * d.n_rows
    for a, rcls in enumerate(d.row_classes, start=1):
        mask = 0
        for b, ccls in enumerate(d.col_classes, start=1):
            if a + b > d.order:
                for j in ccls:
                    mask |= 1 << j
        for i in rcls:
            rows[i] = mask
    return BinaryMatrix(d.n_rows, d.n_cols, tuple(rows))
