"""Ratio of the exact diagonals D(n,n), C(n,n) to their published asymptotic forms.

The D column drifts to zero like 1/sqrt(n); sqrt(n) * ratio is printed to show it settles.
"""
import argparse
import math

from polybern.asymptotics import ratio


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="*", default=[5, 10, 20, 40, 80, 160, 320])
    args = ap.parse_args()
    print(f"{'n':>5}  {'D ratio':>10}  {'sqrt(n)*D':>10}  {'C ratio':>10}")
    for n in args.n:
        d = ratio("D", n)
        print(f"{n:>5}  {d:10.6f}  {math.sqrt(n) * d:10.6f}  {ratio('C', n):10.6f}")


if __name__ == "__main__":
    main()
