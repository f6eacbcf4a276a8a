"""Constructive bijections between the combinatorial families, with inverses.

Also hosts the acyclic-orientation model of complete bipartite graphs, since
its coding matrix is the lonesum matrix.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .matrix_enum import (
    PRESETS,
    BinaryMatrix,
    BudgetExceeded,
    Restriction,
    avoids,
    enumerate_avoiding,
)
from .perm_enum import (
    BoundaryClass,
    ExcedanceVariant,
    L,
    R,
    Sym,
    TaggedPermutation,
    alphabet_size,
    blocks,
    enumerate_callan,
    enumerate_excedance_class,
    is_callan,
    reverse_blocks,
)

__all__ = [
    "PreconditionError",
    "OrientedBipartite",
    "orientation_is_acyclic",
    "count_orientations",
    "callan_phi",
    "callan_psi",
    "callan_swap",
    "callan_ll_split",
    "callan_ll_join",
    "zigzag_to_permutation",
    "check_all",
]


class PreconditionError(ValueError):
    pass


# orientations ------------------------------------------------------------------

def _is_acyclic(n_vertices: int, edges: Sequence[tuple[int, int]]) -> bool:
    """Kahn's algorithm."""
    indeg = [0] * n_vertices
    out: list[list[int]] = [[] for _ in range(n_vertices)]
    for a, b in edges:
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(n_vertices) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n_vertices


@dataclass(frozen=True)
class OrientedBipartite:
    """Orientation of K_{n,k} on parts u_1..u_n, v_1..v_k.

    ``orientation[i, j] == 1`` iff the edge u_i v_j points v_j -> u_i.
    """

    orientation: BinaryMatrix

    @property
    def n(self) -> int:
        return self.orientation.n_rows

    @property
    def k(self) -> int:
        return self.orientation.n_cols

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges on vertex ids u_i -> i, v_j -> n + j."""
        n = self.n
        return [((n + j, i) if self.orientation[i, j] else (i, n + j))
                for i in range(n) for j in range(self.k)]

    def sinks(self) -> set[int]:
        has_out = {a for a, _ in self.edges()}
        return set(range(self.n + self.k)) - has_out

    def sources(self) -> set[int]:
        has_in = {b for _, b in self.edges()}
        return set(range(self.n + self.k)) - has_in


def orientation_is_acyclic(o: OrientedBipartite | BinaryMatrix) -> bool:
    if isinstance(o, BinaryMatrix):
        o = OrientedBipartite(o)
    return _is_acyclic(o.n + o.k, o.edges())


ORIENTATION_VARIANTS = ("all", "unique_sink", "unique_source_sink")


def count_orientations(n: int, k: int, variant: str = "all", max_edges: int = 16) -> int:
    """Acyclic orientations of K_{n,k}, K_{n,k+1} with the extra v as only sink,
    or K_{n+1,k+1} with extra u as only source and extra v as only sink.

    Every orientation of the (augmented) graph is generated and tested.
    """
    if variant not in ORIENTATION_VARIANTS:
        raise ValueError(f"unknown orientation variant {variant!r}")
    rows = n + (variant == "unique_source_sink")
    cols = k + (variant != "all")
    if rows * cols > max_edges:
        raise BudgetExceeded(f"{rows * cols} edges exceeds the {max_edges}-edge budget")
    # extra u is row `n`, extra v is column `k`
    u_id, v_id = n, rows + k
    total = 0
    for bits in product(range(1 << cols), repeat=rows):
        o = OrientedBipartite(BinaryMatrix(rows, cols, bits))
        if not orientation_is_acyclic(o):
            continue
        if variant == "all":
            total += 1
            continue
        if o.sinks() != {v_id}:
            continue
        if variant == "unique_source_sink" and o.sources() != {u_id}:
            continue
        total += 1
    return total


# Callan maps -----------------------------------------------------------------------

def _require_callan(p: Sequence[Sym]) -> None:
    if not is_callan(p):
        raise PreconditionError("not a Callan permutation")


def callan_phi(p: Sequence[Sym]) -> TaggedPermutation:
    """C_n^k(*,l) -> C_{n-1}^{k+1}(*,r).

    The largest left value n becomes the new right value k+1; if n is not
    last, the right block right after it moves to the end.
    """
    _require_callan(p)
    if not p or p[-1].side != "L":
        raise PreconditionError("callan_phi needs a permutation ending with a left value")
    n, k = alphabet_size(p)
    p = list(p)
    pos = p.index(L(n))
    if pos == len(p) - 1:
        return tuple(p[:-1]) + (R(k + 1),)
    end = pos + 1
    while p[end].side == "R":
        end += 1
    moved = p[pos + 1:end]
    return tuple(p[:pos]) + (R(k + 1),) + tuple(p[end:]) + tuple(moved)


def callan_psi(p: Sequence[Sym]) -> TaggedPermutation:
    """C_n^k(*,r) -> C_{n+1}^{k-1}(*,l); the inverse of :func:`callan_phi`."""
    _require_callan(p)
    if not p or p[-1].side != "R":
        raise PreconditionError("callan_psi needs a permutation ending with a right value")
    n, k = alphabet_size(p)
    p = list(p)
    pos = p.index(R(k))
    if pos == len(p) - 1:
        return tuple(p[:-1]) + (L(n + 1),)
    tail = blocks(p)[-1]
    body = p[:len(p) - len(tail)]
    return tuple(body[:pos]) + (L(n + 1),) + tail + tuple(body[pos + 1:])


def callan_swap(p: Sequence[Sym]) -> TaggedPermutation:
    """Exchange the roles of left and right values: C_n^k -> C_k^n."""
    return tuple(Sym("R" if s.side == "L" else "L", s.value) for s in p)


def callan_ll_split(p: Sequence[Sym]) -> tuple[str, TaggedPermutation]:
    """C_n^k(l,l) -> C_{n-1}^{k+1}(l,r) (tag ``"lr"``) or C_{n-1}^k(r,l) (tag ``"rl"``)."""
    _require_callan(p)
    if not p or p[0].side != "L" or p[-1].side != "L":
        raise PreconditionError("callan_ll_split needs a permutation starting and ending with left values")
    n, _ = alphabet_size(p)
    if p[0] == L(n):
        return "rl", tuple(p[1:])
    return "lr", callan_phi(p)


def callan_ll_join(branch: str, q: Sequence[Sym]) -> TaggedPermutation:
    if branch == "rl":
        n, _ = alphabet_size(q)
        return (L(n + 1),) + tuple(q)
    if branch == "lr":
        return callan_psi(q)
    raise ValueError(f"unknown branch {branch!r}")


# zig-zag paths ------------------------------------------------------------------------

def zigzag_to_permutation(m: BinaryMatrix, allow_zero_columns: bool = False) -> tuple[int, ...]:
    """Permutation of [n+k] read off the zig-zag paths of a P-avoiding n x k matrix.

    Columns carry labels 1..k left to right, rows carry labels k+1..k+n from
    the bottom row up.  A path enters at the top of a column (or the left end
    of a row), travels down (right), turns right (down) at every 1 it meets, and
    pi(start label) is the label of the column bottom or row end where it exits.
    Column labels become excedances and empty rows become fixed points.
    """
    if not avoids(m, PRESETS["P"]):
        raise PreconditionError("matrix contains a pattern from P")
    n, k = m.n_rows, m.n_cols
    if not allow_zero_columns and any(c == 0 for c in m.col_sums()):
        raise PreconditionError("matrix has an all-zero column")

    def row_label(r: int) -> int:
        return k + n - r

    def walk(r: int, c: int, down: bool) -> int:
        while True:
            if r >= n:
                return c + 1
            if c >= k:
                return row_label(r)
            if m[r, c]:
                down = not down
                if down:
                    r += 1
                else:
                    c += 1
            elif down:
                r += 1
            else:
                c += 1

    pi = [0] * (n + k)
    for c in range(k):
        pi[c] = walk(0, c, True)
    for r in range(n):
        pi[row_label(r) - 1] = walk(r, 0, False)
    return tuple(pi)


# exhaustive check suite --------------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failures": self.failures,
                "ok": self.failures == 0, "detail": self.detail}


def _shapes(max_total: int, min_n: int = 0, min_k: int = 0):
    for n in range(min_n, max_total + 1):
        for k in range(min_k, max_total + 1 - n):
            yield n, k


def _phi_psi_suite(max_total: int) -> SuiteResult:
    res = SuiteResult("phi/psi round trip and image")
    for n, k in _shapes(max_total, min_n=1):
        dom = list(enumerate_callan(n, k, BoundaryClass("any", "left")))
        target = set(enumerate_callan(n - 1, k + 1, BoundaryClass("any", "right")))
        images = [callan_phi(p) for p in dom]
        res.checked += len(dom)
        res.failures += sum(1 for p, q in zip(dom, images) if callan_psi(q) != p)
        if set(images) != target or len(set(images)) != len(dom):
            res.failures += 1
            res.detail += f"image mismatch at ({n},{k}); "
    return res


def _swap_suite(max_total: int) -> SuiteResult:
    res = SuiteResult("swap involution and C(n,k)=C(k+1,n-1) image")
    for n, k in _shapes(max_total, min_n=1):
        dom = list(enumerate_callan(n, k))
        res.checked += len(dom)
        res.failures += sum(1 for p in dom if callan_swap(callan_swap(p)) != p or not is_callan(callan_swap(p)))
        star_l = list(enumerate_callan(n, k, BoundaryClass("any", "left")))
        swapped = {callan_swap(p) for p in star_l}
        if swapped != set(enumerate_callan(k, n, BoundaryClass("any", "right"))):
            res.failures += 1
            res.detail += f"swap image mismatch at ({n},{k}); "
        if n + k <= max_total:
            via_psi = {callan_psi(q) for q in swapped}
            if via_psi != set(enumerate_callan(k + 1, n - 1, BoundaryClass("any", "left"))):
                res.failures += 1
                res.detail += f"psi.swap image mismatch at ({n},{k}); "
    return res


def _reversal_suite(max_total: int) -> SuiteResult:
    res = SuiteResult("block reversal closure")
    for n, k in _shapes(max_total):
        dom = list(enumerate_callan(n, k))
        res.checked += len(dom)
        rev = [reverse_blocks(p) for p in dom]
        res.failures += sum(1 for q in rev if not is_callan(q))
        if set(rev) != set(dom):
            res.failures += 1
        c = Counter((p[0].side, p[-1].side) for p in dom if p)
        if c[("L", "R")] != c[("R", "L")]:
            res.failures += 1
    return res


def _ll_split_suite(max_total: int) -> SuiteResult:
    res = SuiteResult("ll-split disjoint exhaustive cover")
    for n, k in _shapes(max_total, min_n=1):
        dom = list(enumerate_callan(n, k, BoundaryClass("left", "left")))
        res.checked += len(dom)
        split = [callan_ll_split(p) for p in dom]
        res.failures += sum(1 for p, (b, q) in zip(dom, split) if callan_ll_join(b, q) != p)
        lr = {q for b, q in split if b == "lr"}
        rl = {q for b, q in split if b == "rl"}
        want_lr = set(enumerate_callan(n - 1, k + 1, BoundaryClass("left", "right")))
        want_rl = set(enumerate_callan(n - 1, k, BoundaryClass("right", "left")))
        if lr != want_lr or rl != want_rl or len(lr) + len(rl) != len(dom):
            res.failures += 1
            res.detail += f"cover mismatch at ({n},{k}); "
    return res


_ZIGZAG_LEVELS = (
    (Restriction.none, ExcedanceVariant.E),
    (Restriction.cols_nonzero, ExcedanceVariant.Estar),
    (Restriction.rows_and_cols_nonzero, ExcedanceVariant.Estarstar),
)


def _zigzag_suite(max_side: int) -> SuiteResult:
    res = SuiteResult("zig-zag bijection onto excedance classes")
    for n in range(max_side + 1):
        for k in range(max_side + 1):
            for restriction, variant in _ZIGZAG_LEVELS:
                dom = list(enumerate_avoiding(n, k, "P", restriction))
                images = [zigzag_to_permutation(m, allow_zero_columns=True) for m in dom]
                res.checked += len(dom)
                target = set(enumerate_excedance_class(n, k, variant))
                if len(set(images)) != len(dom) or set(images) != target:
                    res.failures += 1
                    res.detail += f"{restriction.value} mismatch at ({n},{k}); "
    return res


def _orientation_suite(max_cells: int) -> SuiteResult:
    res = SuiteResult("orientation acyclic iff lonesum coding")
    L_set = PRESETS["L"]
    for n in range(max_cells + 1):
        for k in range(max_cells + 1):
            if n * k > max_cells or (n * k == 0 and max(n, k) > 4):
                continue
            for bits in product(range(1 << k), repeat=n):
                m = BinaryMatrix(n, k, bits)
                res.checked += 1
                if orientation_is_acyclic(m) != avoids(m, L_set):
                    res.failures += 1
    return res


def check_all(max_total: int = 7, zigzag_side: int = 3, orientation_cells: int = 12) -> list[SuiteResult]:
    """Run every exhaustive bijection check at the given sizes."""
    return [
        _phi_psi_suite(max_total),
        _swap_suite(max_total),
        _reversal_suite(max_total),
        _ll_split_suite(max_total),
        _zigzag_suite(zigzag_side),
        _orientation_suite(orientation_cells),
    ]
