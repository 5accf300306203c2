r"""Command-line front end.

Subcommands:

* ``zfun``    -- print partition-function layers (t0-reduced).
* ``counts``  -- exact weighted dessin counts for a boundary profile.
* ``verify``  -- run verification suites; exit status 1 on any residual.
* ``tr``      -- topological-recursion differentials with pole data.
* ``export``  -- JSON/CSV dumps (kernel blocks, map lists, count tables).

Exit codes: 0 success, 1 verification residual, 2 usage error, 3 resource
budget exceeded.  All numeric output is exact; fractions are rendered as
"p/q" strings, never floats.  Output is deterministic for a fixed
configuration, independent of the worker count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Sequence

from . import maps, opmatrix, partition as pt, spectral, tutte
from . import operators as ops


SUITES = (
    "cutjoin",
    "witt",
    "virasoro",
    "tutte",
    "oracle",
    "opmatrix",
    "loop",
    "bergman",
    "tr",
    "norbury",
    "adjoint",
    "bivalent",
)

EXIT_OK = 0
EXIT_RESIDUAL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# zfun
# ---------------------------------------------------------------------------


def cmd_zfun(args) -> int:
    if args.bivalent:
        z = pt.partition_function_bivalent(args.dmax0, args.dmax, with_marker=args.marker)
    else:
        z = pt.partition_function(args.dmax, with_marker=args.marker)
    rows = [
        {"m": m, "d": d, "poly": poly.as_str()}
        for (m, d), poly in z.items()
    ]
    if args.format == "json":
        _emit(_json_dumps({"marker": args.marker, "layers": rows}), args.out)
    else:
        buf = io.StringIO()
        for r in rows:
            buf.write(f"q0^{r['m']} q1^{r['d']}: {r['poly']}\n" if args.bivalent else f"q^{r['d']}: {r['poly']}\n")
        _emit(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------


def _count_rows(alpha: Sequence[int], g_filter: int | None, m: int) -> List[dict]:
    total = sum(alpha) - m
    rows = []
    if total < 0 or total % 2:
        return rows
    d = total // 2
    n_plus = len(alpha)
    z = (
        pt.partition_function(d, with_marker=True)
        if m == 0
        else pt.partition_function_bivalent(m, d, with_marker=True)
    )
    c = pt.connected(z)
    for g in range(0, d // 2 + 2):
        n_minus = d + 2 - 2 * g - n_plus
        if n_minus < 1:
            continue
        if g_filter is not None and g != g_filter:
            continue
        key = pt.CountKey(g, n_plus, n_minus, tuple(sorted(alpha)), m)
        val = pt.count(c, key)
        rows.append(
            {
                "g": g,
                "n_plus": n_plus,
                "n_minus": n_minus,
                "m": m,
                "alpha": " ".join(str(a) for a in alpha),
                "count": _frac_str(val),
            }
        )
    return rows


def cmd_counts(args) -> int:
    alpha = tuple(int(a) for a in args.alpha.replace(",", " ").split())
    if not alpha or any(a < 1 for a in alpha):
        print("error: alpha must be positive integers", file=sys.stderr)
        return EXIT_USAGE
    if args.nplus is not None and args.nplus != len(alpha):
        print("error: --nplus must match the number of alpha entries", file=sys.stderr)
        return EXIT_USAGE
    rows = _count_rows(alpha, args.g, args.m)
    if args.format == "json":
        _emit(_json_dumps({"rows": rows}), args.out)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["g", "n_plus", "n_minus", "m", "alpha", "count"])
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_witt(args) -> List[str]:
    out = []
    for i in range(-1, 5):
        for j in range(i, 5):
            expect = ops.virasoro_l(i + j) if i != j else None
            res = ops.commutator_check(
                ops.virasoro_l(i), ops.virasoro_l(j), expect, i - j,
                args.deg_cap, args.var_cap,
            )
            out.extend(f"[L{i},L{j}] residual at {m.as_str()}" for m, _ in res)
    return out


def _suite_virasoro(args) -> List[str]:
    z = pt.partition_function(args.dmax)
    res = pt.virasoro_residuals(z, i_max=6)
    return [f"L{i} residual at degree {w}: {p.as_str()}" for i, w, p in res]


def _suite_cutjoin(args) -> List[str]:
    return opmatrix.cutjoin_matrix_check(2, 8)


def _suite_opmatrix(args) -> List[str]:
    return opmatrix.vacuum_consistency_check(2, 8)


def _suite_adjoint(args) -> List[str]:
    out = opmatrix.adjoint_check(0, 2, 1, 6)
    out.extend(opmatrix.adjoint_check(0, 2, 2, 6))
    return out


def _suite_tutte(args) -> List[str]:
    from math import factorial

    out = []
    z = pt.partition_function(min(args.dmax, 4))
    for d in range(min(args.dmax, 4) + 1):
        layer = z.layer(d)
        for mono, coeff in layer.terms.items():
            parts = mono.partition()
            mu_fact = 1
            for v in set(parts):
                mu_fact *= factorial(parts.count(v))
            if tutte.r_tilde_nc(parts, d) != coeff * mu_fact:
                out.append(f"layer {d} monomial {mono.as_str()}: tutte route disagrees")
    return out


def _oracle_keys(s_max: int):
    def parts_of(t, mx):
        if t == 0:
            yield ()
            return
        for p in range(min(t, mx), 0, -1):
            for rest in parts_of(t - p, p):
                yield (p,) + rest

    for tot in range(2, s_max + 1, 2):
        d = tot // 2
        for alpha in parts_of(tot, tot):
            n = len(alpha)
            for n_minus in range(1, d + 2):
                g2 = d + 2 - n - n_minus
                if g2 < 0 or g2 % 2:
                    continue
                yield pt.CountKey(g2 // 2, n, n_minus, alpha)


def _suite_oracle(args) -> List[str]:
    # three-route agreement on every stable key with sum(alpha) <= s_max;
    # for fixed (g, alpha) the edge-count identity pins n_minus, so
    # r_tilde(g, n, alpha) = prod(alpha) * count(key) term by term
    out = []
    s_max = args.s_max
    d_max = s_max // 2
    c = pt.connected(pt.partition_function(d_max, with_marker=True))
    for key in _oracle_keys(s_max):
        want = pt.count(c, key)
        spec = maps.EnumSpec(key.euler_degree, 0, key.n_plus, key.n_minus, key.alpha, g=key.g)
        got = maps.count_dessins(spec, budget=args.n_budget)
        if got != want:
            out.append(f"{key}: enumeration {got} != partition {want}")
        prod = 1
        for a in key.alpha:
            prod *= a
        if tutte.r_tilde(key.g, key.n_plus, key.alpha) != prod * want:
            out.append(f"{key}: tutte route != partition route")
    return out


def _suite_bivalent(args) -> List[str]:
    out = []
    res = ops.commutator_check(ops.w0(), ops.w1(), None, 0, args.deg_cap, args.var_cap)
    out.extend(f"[W0,W1] residual at {m.as_str()}" for m, _ in res)
    b1 = pt.partition_function_bivalent(3, 3)
    b2 = pt.partition_function_bivalent(3, 3, q1_first=True)
    for k in set(b1.layers) | set(b2.layers):
        if b1.layers.get(k) != b2.layers.get(k):
            out.append(f"bivalent flow order disagrees at layer {k}")
    c = pt.connected(pt.partition_function_bivalent(4, 2, with_marker=True))
    for (v4, v2) in [(0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (2, 1), (0, 4)]:
        n_darts = 4 * v4 + 2 * v2
        if n_darts > min(args.n_budget, 12):
            continue
        tbl = maps._dessin_table(v4, v2, True, min(args.n_budget, 16))
        for (g, n_minus, perims), _cnt in tbl.items():
            alpha = tuple(perims)
            key = pt.CountKey(g, len(alpha), n_minus, alpha, m=v2)
            want = pt.count(c, key)
            got = maps.count_dessins(
                maps.EnumSpec(v4, v2, len(alpha), n_minus, alpha, g=g),
                budget=min(args.n_budget, 16),
            )
            if want != got:
                out.append(f"bivalent {key}: enumeration {got} != partition {want}")
    return out


def _suite_loop(args) -> List[str]:
    out = []
    for g, n in [(0, 1), (0, 2), (1, 1), (0, 3)]:
        out.extend(spectral.loop_check(g, n, args.order))
    return out


def _suite_bergman(args) -> List[str]:
    out = spectral.bergman_check(max(args.order, 10))
    out.extend(spectral.bergman_full_identity(3))
    return out


def _suite_tr(args) -> List[str]:
    out = []
    for g, n, hi in [(0, 3, args.order), (1, 1, args.order + 1)]:
        out.extend(spectral.tr_agreement_check(g, n, hi))
    return out


def _suite_norbury(args) -> List[str]:
    out = spectral.tree_series_check(8)
    out.extend(spectral.norbury_substitution_check(1, 1, 9))
    out.extend(spectral.norbury_substitution_check(0, 3, 8))
    return out


SUITE_FNS = {
    "witt": _suite_witt,
    "virasoro": _suite_virasoro,
    "cutjoin": _suite_cutjoin,
    "opmatrix": _suite_opmatrix,
    "adjoint": _suite_adjoint,
    "tutte": _suite_tutte,
    "oracle": _suite_oracle,
    "bivalent": _suite_bivalent,
    "loop": _suite_loop,
    "bergman": _suite_bergman,
    "tr": _suite_tr,
    "norbury": _suite_norbury,
}


def cmd_verify(args) -> int:
    names = SUITES if args.suites == ["all"] else args.suites
    unknown = [s for s in names if s not in SUITE_FNS]
    if unknown:
        print(f"error: unknown suites {unknown}; known: {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    any_residual = False
    report = {}
    for name in names:
        try:
            findings = SUITE_FNS[name](args)
        except maps.BudgetExceeded as exc:
            print(f"suite {name}: budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        report[name] = findings
        status = "PASS" if not findings else "FAIL"
        print(f"{status} {name}" + (f" ({len(findings)} residuals)" if findings else ""))
        for f in findings[:20]:
            print(f"    {f}")
        any_residual = any_residual or bool(findings)
    if args.out:
        _emit(_json_dumps({k: v for k, v in report.items()}), args.out)
    return EXIT_RESIDUAL if any_residual else EXIT_OK


# ---------------------------------------------------------------------------
# tr
# ---------------------------------------------------------------------------


def cmd_tr(args) -> int:
    try:
        om = spectral.tr_omega(args.g, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = om.to_json_dict()
    payload["expansion"] = {
        " ".join(str(x) for x in e): _frac_str(c)
        for e, c in sorted(om.expand_at_infinity(args.order).items())
    }
    _emit(_json_dumps(payload), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def cmd_export(args) -> int:
    if args.what == "kernel":
        block = opmatrix.kernel_block(args.g, args.nplus, args.nminus, args.cap)
        _emit(_json_dumps(block.to_json_dict()), args.out)
    elif args.what == "maps":
        valences = (4,) * args.v4 + (2,) * args.v2
        try:
            lines = list(maps.map_dump_lines(valences, budget=args.n_budget))
        except maps.BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        _emit("\n".join(lines) + "\n", args.out)
    elif args.what == "counts":
        rows = []
        for tot in range(2, args.s_max + 1, 2):
            n_range = [args.nplus] if args.nplus else range(1, tot + 1)
            for n_plus in n_range:
                for alpha in opmatrix._sorted_multi(tot, n_plus, 1):
                    rows.extend(_count_rows(tuple(alpha), None, 0))
        if args.format == "json":
            _emit(_json_dumps({"rows": rows}), args.out)
        else:
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=["g", "n_plus", "n_minus", "m", "alpha", "count"])
            w.writeheader()
            w.writerows(rows)
            _emit(buf.getvalue(), args.out)
    elif args.what == "omega":
        return cmd_tr(args)
    elif args.what == "correlator":
        w = spectral.laplace_W(args.g, args.n, args.cap)
        _emit(_json_dumps(w.to_json_dict()), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dessins",
        description="Exact counts of directed ribbon graphs / dessins, four ways.",
    )
    ap.add_argument("--threads", type=int, default=None, help="worker count (env DESSINS_THREADS)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zfun", help="partition-function layers")
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--dmax0", type=int, default=2, help="q0 depth for --bivalent")
    p.add_argument("--bivalent", action="store_true")
    p.add_argument("--marker", action="store_true", help="track negative boundaries with t-")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_zfun)

    p = sub.add_parser("counts", help="weighted dessin counts for a profile")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--nplus", type=int, default=None)
    p.add_argument("--alpha", required=True, help="positive perimeters, e.g. '1 1 2'")
    p.add_argument("--m", type=int, default=0, help="bivalent vertex count")
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_counts)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suites", default="all", help=f"comma list from: {','.join(SUITES)},all")
    p.add_argument("--deg-cap", dest="deg_cap", type=int, default=10)
    p.add_argument("--var-cap", dest="var_cap", type=int, default=12)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--s-max", dest="s_max", type=int, default=8)
    p.add_argument("--n-budget", dest="n_budget", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("tr", help="topological-recursion differential")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_tr)

    p = sub.add_parser("export", help="JSON/CSV dumps")
    p.add_argument("--what", choices=["kernel", "maps", "counts", "omega", "correlator"],
                   required=True)
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--nplus", type=int, default=0)
    p.add_argument("--nminus", type=int, default=1)
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--v4", type=int, default=1)
    p.add_argument("--v2", type=int, default=0)
    p.add_argument("--s-max", dest="s_max", type=int, default=6)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--n-budget", dest="n_budget", type=int, default=16)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_export)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads is None:
        args.threads = int(os.environ.get("DESSINS_THREADS", "1"))
    maps.configure_threads(args.threads)
    if getattr(args, "suites", None) is not None and isinstance(args.suites, str):
        args.suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
