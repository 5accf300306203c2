#!/usr/bin/env python3
"""Timed comparison of the four counting routes on a window of keys.

For every boundary profile with sum(alpha) <= S_MAX, compute the weighted
dessin count by (a) the cut-and-join flow, (b) the Tutte recursion, (c) the
matrix route (degree <= 2 only), and (d) brute-force enumeration, and report
timings and the agreement status.

Usage: python scripts/route_comparison.py [S_MAX]
"""

import sys
import time

sys.path.insert(0, "src")

from dessins import maps, opmatrix, tutte
from dessins import partition as pt


def partitions_of(total, mx):
    if total == 0:
        yield ()
        return
    for p in range(min(total, mx), 0, -1):
        for rest in partitions_of(total - p, p):
            yield (p,) + rest


def main(s_max: int = 8) -> None:
    t0 = time.time()
    c = pt.connected(pt.partition_function(s_max // 2, with_marker=True))
    t_flow = time.time() - t0

    keys = []
    for total in range(2, s_max + 1, 2):
        d = total // 2
        for alpha in partitions_of(total, total):
            for n_minus in range(1, d + 2):
                g2 = d + 2 - len(alpha) - n_minus
                if g2 >= 0 and g2 % 2 == 0:
                    keys.append(pt.CountKey(g2 // 2, len(alpha), n_minus, alpha))

    t0 = time.time()
    flow = {k: pt.count(c, k) for k in keys}
    t_extract = time.time() - t0

    t0 = time.time()
    bad = 0
    for k in keys:
        prod = 1
        for a in k.alpha:
            prod *= a
        if tutte.r_tilde(k.g, k.n_plus, k.alpha) != prod * flow[k]:
            bad += 1
    t_tutte = time.time() - t0

    t0 = time.time()
    for k in keys:
        spec = maps.EnumSpec(k.euler_degree, 0, k.n_plus, k.n_minus, k.alpha, g=k.g)
        if maps.count_dessins(spec) != flow[k]:
            bad += 1
    t_brute = time.time() - t0

    t0 = time.time()
    matrix_bad = len(opmatrix.vacuum_consistency_check(2, 8))
    t_matrix = time.time() - t0

    print(f"keys checked: {len(keys)} (sum alpha <= {s_max})")
    print(f"flow layers:   {t_flow:7.2f}s")
    print(f"extraction:    {t_extract:7.2f}s")
    print(f"tutte route:   {t_tutte:7.2f}s")
    print(f"brute force:   {t_brute:7.2f}s")
    print(f"matrix route:  {t_matrix:7.2f}s (layers d <= 2)")
    print(f"disagreements: {bad + matrix_bad}")
    if bad + matrix_bad:
        sys.exit(1)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
