"""Run the family cross-check grid at a chosen size, optionally in parallel."""
import argparse
import json
import time

from polybern.cli import FAMILIES, verify_grid


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--families", default=",".join(f for f in FAMILIES if f != "orientation"))
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = verify_grid(args.nmax, args.kmax, tuple(args.families.split(",")), args.jobs)
    print(json.dumps({"checked": rep["checked"], "ok": rep["ok"], "mismatches": rep["mismatches"],
                      "seconds": round(time.perf_counter() - t0, 2)}, indent=2))


if __name__ == "__main__":
    main()
