"""Tabulate the B diagonal sum against the 3P_N rational expression."""
import argparse

from polybern.diagonal import check_stephan


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=40)
    args = ap.parse_args()
    print(f"{'N':>3}  {'equal':>5}  diagonal sum")
    for r in check_stephan(args.nmax):
        print(f"{r.N:>3}  {str(r.equal):>5}  {r.diag_sum}")


if __name__ == "__main__":
    main()
