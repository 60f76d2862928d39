"""Compare Monte Carlo estimates of the mean EMD on the simplex with exact M_n.

Usage: python3 scripts/monte_carlo.py [--trials 1000000] [--seed 1] [--ns 2,3,5]
"""

import argparse

from emd1d.expectation import m_value, monte_carlo_mean_emd


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--ns", default="2,3,5")
    args = ap.parse_args()

    print(f"{'n':>3} {'exact':>10} {'estimate':>10} {'std err':>10} {'z':>7}")
    for n in (int(x) for x in args.ns.split(",")):
        exact = m_value(n, n)
        est, se = monte_carlo_mean_emd(n, args.trials, args.seed)
        z = (est - float(exact)) / se
        print(f"{n:>3} {float(exact):>10.6f} {est:>10.6f} {se:>10.2e} {z:>+7.2f}")


if __name__ == "__main__":
    main()
