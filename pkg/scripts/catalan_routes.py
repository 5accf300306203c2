#!/usr/bin/env python3
"""Print the disc amplitude by three independent routes, plus the genus
split of the one-boundary counts.

Usage: python scripts/catalan_routes.py [K_MAX]
"""

import sys

sys.path.insert(0, "src")

from dessins import partition as pt
from dessins import tutte
from dessins.series import solve_disc


def main(k_max: int = 6) -> None:
    u = solve_disc(k_max + 1)
    c = pt.connected(pt.partition_function(k_max, with_marker=True))
    print(f"{'k':>3} {'tutte':>10} {'disc series':>12} {'flow route':>11}")
    for k in range(k_max + 1):
        rt = tutte.r_tilde(0, 1, (2 * k,))
        ds = u.coeff(2 * k + 1)
        if k == 0:
            fl = 1  # vacuum normalization
        else:
            fl = pt.count(c, pt.CountKey(0, 1, k + 1, (2 * k,))) * 2 * k
        print(f"{k:>3} {str(rt):>10} {str(ds):>12} {str(fl):>11}")
        assert rt == ds == fl

    print("\ngenus split of the weighted counts with one positive boundary:")
    print(f"{'alpha':>6} {'genus':>6} {'n_minus':>8} {'count':>8}")
    for a in range(2, 2 * k_max + 1, 2):
        d = a // 2
        for g in range(d // 2 + 1):
            n_minus = d + 1 - 2 * g
            if n_minus < 1:
                continue
            val = pt.count(c, pt.CountKey(g, 1, n_minus, (a,)))
            if val:
                print(f"{a:>6} {g:>6} {n_minus:>8} {str(val):>8}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
