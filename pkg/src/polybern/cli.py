"""Command-line front end.  Data goes to stdout, diagnostics to stderr.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 budget exceeded,
4 OEIS data unavailable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .matrix_enum import PRESETS, BudgetExceeded, Restriction, count_avoiding
from .sequences import Seq, table, value

EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET, EXIT_UNAVAILABLE = 1, 2, 3, 4

FAMILIES = ("lonesum", "gamma", "p", "q", "band", "permanent", "excedance", "callan", "orientation")

_RESTRICTION = {Seq.B: Restriction.none, Seq.C: Restriction.cols_nonzero, Seq.D: Restriction.rows_and_cols_nonzero}
_PATTERN = {"lonesum": "L", "gamma": "Gamma", "p": "P", "q": "Q"}


@dataclass(frozen=True)
class Cell:
    family: str
    seq: str
    n: int
    k: int


def _family_count(cell: Cell) -> int:
    from . import bijections, perm_enum

    seq, n, k, fam = Seq(cell.seq), cell.n, cell.k, cell.family
    if fam in _PATTERN:
        return count_avoiding(n, k, PRESETS[_PATTERN[fam]], _RESTRICTION[seq])
    if fam == "band":
        return perm_enum.count_band(perm_enum.band_preset(seq, n, k))
    if fam == "permanent":
        return perm_enum.permanent_ryser(perm_enum.band_matrix(perm_enum.band_preset(seq, n, k)))
    if fam == "excedance":
        variant = {Seq.B: "E", Seq.C: "Estar", Seq.D: "Estarstar"}[seq]
        return perm_enum.count_excedance_class(n, k, variant)
    if fam == "callan":
        boundary = {Seq.B: "*,*", Seq.C: "*,l", Seq.D: "l,r"}[seq]
        return perm_enum.count_callan(n, k, perm_enum.BoundaryClass.parse(boundary))
    if fam == "orientation":
        variant = {Seq.B: "all", Seq.C: "unique_sink", Seq.D: "unique_source_sink"}[seq]
        return bijections.count_orientations(n, k, variant)
    raise ValueError(f"unknown family {fam!r}")


def check_cell(cell: Cell) -> dict:
    got = _family_count(cell)
    want = value(Seq(cell.seq), cell.n, cell.k)
    return {"family": cell.family, "seq": cell.seq, "n": cell.n, "k": cell.k,
            "expected": str(want), "got": str(got), "ok": got == want}


def verify_grid(nmax: int, kmax: int, families=FAMILIES, jobs: int = 1) -> dict:
    cells = [Cell(f, s.value, n, k) for f in families for s in Seq
             for n in range(nmax + 1) for k in range(kmax + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(check_cell, cells, chunksize=4))
    else:
        results = [check_cell(c) for c in cells]
    bad = [r for r in results if not r["ok"]]
    return {"nmax": nmax, "kmax": kmax, "families": list(families), "checked": len(results),
            "ok": not bad, "mismatches": bad}


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


# subcommands -----------------------------------------------------------------------

def cmd_table(a) -> int:
    grid = table(Seq(a.seq), a.nmax, a.kmax, a.method)
    if a.format == "json":
        _dump({"seq": a.seq, "method": a.method, "rows": [[str(v) for v in row] for row in grid]})
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n\\k"] + list(range(a.kmax + 1)))
        for n, row in enumerate(grid):
            w.writerow([n] + row)
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(a) -> int:
    fams = tuple(f.strip().lower() for f in a.families.split(",")) if a.families else FAMILIES
    unknown = [f for f in fams if f not in FAMILIES]
    if unknown:
        print(f"unknown families: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_grid(a.nmax, a.kmax, fams, a.jobs)
    _dump(report)
    return 0 if report["ok"] else EXIT_MISMATCH


def cmd_bijections(a) -> int:
    from .bijections import check_all

    if not a.check:
        print("nothing to do; pass --check", file=sys.stderr)
        return EXIT_USAGE
    results = [r.as_dict() for r in check_all(a.max_total, a.zigzag_side, a.orientation_cells)]
    ok = all(r["ok"] for r in results)
    _dump({"ok": ok, "suites": results})
    return 0 if ok else EXIT_MISMATCH


def cmd_transform(a) -> int:
    from .transforms import make_seed, triangle

    try:
        seed = make_seed(a.seed, a.n + 1)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    rows = triangle(a.rule, seed, a.n)
    _dump({"rule": a.rule, "seed": a.seed, "n": a.n,
           "rows": [[_frac(x) for x in r.entries] for r in rows],
           "edge": [_frac(r.entries[0]) for r in rows]})
    return 0


def cmd_chromatic(a) -> int:
    from .chromatic import chr_bipartite

    p = chr_bipartite(a.n, a.k)
    out = {"n": a.n, "k": a.k, "poly": str(p), "coeffs": [str(c) for c in p.poly.coeffs]}
    if a.eval is not None:
        out["eval"] = {"q": a.eval, "value": str(p(a.eval))}
    if a.coeff is not None:
        out["coeff"] = {"degree": a.coeff, "value": str(p.poly.coeff(a.coeff))}
    if a.derive_at is not None:
        out["derivative"] = {"q": a.derive_at, "value": str(p.poly.derivative()(a.derive_at))}
    _dump(out)
    return 0


def cmd_diagonal(a) -> int:
    from .diagonal import diagonal_sum

    lo = 1 if a.seq == "C" else 0
    _dump({"seq": a.seq, "sums": [{"N": N, "value": str(diagonal_sum(a.seq, N))} for N in range(lo, a.nmax + 1)]})
    return 0


def cmd_conjecture(a) -> int:
    from .diagonal import check_stephan

    _dump([r.as_dict() for r in check_stephan(a.nmax)])
    return 0


def cmd_oeis(a) -> int:
    from pathlib import Path

    from .oeis_io import OEISConfig, Unavailable, compare_sequence

    cfg = OEISConfig(offline=a.offline)
    if a.cache_dir:
        cfg.cache_dir = Path(a.cache_dir)
    try:
        rep = compare_sequence(a.seq, config=cfg)
    except Unavailable as e:
        print(str(e), file=sys.stderr)
        return EXIT_UNAVAILABLE
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    _dump(rep.as_dict())
    return 0 if rep.ok else EXIT_MISMATCH


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polybern", description="Poly-Bernoulli numbers and their combinatorics.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a B, C or D table")
    t.add_argument("--seq", choices=["B", "C", "D"], required=True)
    t.add_argument("--nmax", type=_nonneg, default=5)
    t.add_argument("--kmax", type=_nonneg, default=5)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--method", choices=["closed", "sieve", "recursion", "egf", "permanent", "chromatic",
                                        "enumeration"], default="closed")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="cross-check every combinatorial family against the closed forms")
    v.add_argument("--nmax", type=_nonneg, default=3)
    v.add_argument("--kmax", type=_nonneg, default=3)
    v.add_argument("--families", default="", help="comma list from: " + ",".join(FAMILIES))
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijections", help="exhaustive bijection checks")
    b.add_argument("--check", action="store_true")
    b.add_argument("--max-total", type=_nonneg, default=7)
    b.add_argument("--zigzag-side", type=_nonneg, default=3)
    b.add_argument("--orientation-cells", type=_nonneg, default=12)
    b.set_defaults(func=cmd_bijections)

    tr = sub.add_parser("transform", help="Akiyama-Tanigawa or Chen triangle")
    tr.add_argument("--rule", choices=["at", "bt"], required=True)
    tr.add_argument("--seed", required=True, help="bernoulli | pow:k | powplus:k")
    tr.add_argument("--n", type=_nonneg, required=True)
    tr.set_defaults(func=cmd_transform)

    c = sub.add_parser("chromatic", help="chromatic polynomial of K_{n,k}")
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--k", type=_nonneg, required=True)
    c.add_argument("--eval", type=int)
    c.add_argument("--coeff", type=_nonneg)
    c.add_argument("--derive-at", type=int)
    c.set_defaults(func=cmd_chromatic)

    d = sub.add_parser("diagonal", help="diagonal sums")
    d.add_argument("--seq", choices=["B", "C"], required=True)
    d.add_argument("--nmax", type=_nonneg, default=7)
    d.set_defaults(func=cmd_diagonal)

    cj = sub.add_parser("conjecture", help="diagonal sum against the 3P_N expression")
    cj.add_argument("--nmax", type=_nonneg, default=7)
    cj.set_defaults(func=cmd_conjecture)

    o = sub.add_parser("oeis", help="compare with an OEIS b-file")
    o.add_argument("--seq", required=True, help="A099594, A098830 or A136127")
    o.add_argument("--offline", action="store_true")
    o.add_argument("--cache-dir")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
