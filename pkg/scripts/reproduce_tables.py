"""Print the limiting-mean tables and the unit-normalized mean table.

Usage: python3 scripts/reproduce_tables.py [--nmax 5] [--smax-list 1,2,3,4,5,10,30,1000,10000]
"""

import argparse

from emd1d.expectation import m_tilde, m_value
from emd1d.genfun import mean_emd_unit_normalized
from emd1d.ingest import render_decimal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--s-list", default="1,2,3,4,5,10,30,1000,10000")
    ap.add_argument("--n-list", default="2,3,4,5,12")
    args = ap.parse_args()

    print("M_{p,q}")
    print("p\\q " + " ".join(f"{q:>6}" for q in range(1, args.nmax + 1)))
    for p in range(1, args.nmax + 1):
        cells = (render_decimal(m_value(p, q), 3) for q in range(1, args.nmax + 1))
        print(f"{p:>3} " + " ".join(f"{c:>6}" for c in cells))

    print("\nM~_n, n = 2..12")
    print(" ".join(render_decimal(m_tilde(n), 4) for n in range(2, 13)))

    ns = [int(x) for x in args.n_list.split(",")]
    print("\nmean unit-normalized EMD")
    print("    s " + " ".join(f"{'n=' + str(n):>7}" for n in ns))
    for s in (int(x) for x in args.s_list.split(",")):
        cells = (render_decimal(mean_emd_unit_normalized(n, s), 4) for n in ns)
        print(f"{s:>5} " + " ".join(f"{c:>7}" for c in cells))


if __name__ == "__main__":
    main()
