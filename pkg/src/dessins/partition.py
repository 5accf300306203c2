r"""Partition function of the cut-and-join flow and exact count extraction.

Everything is stored t0-reduced: the vacuum exp(t0) is represented by the
constant layer 1, and the flow operators act in conjugated form.  A layer of
q-order d (quadrivalent) is a homogeneous polynomial of weighted degree 2d;
bivalent layers of bi-order (m, d) have degree 2d + m.

With the marker enabled, the modified vacuum exp(t- * t0) is used instead
and the power of the marker ``t-`` in a monomial records the number of
negative boundary components of the surfaces being counted.  The dictionary
between a coefficient of the *connected* series and an automorphism-weighted
count of dessins with labeled positive boundaries is::

    h_{g,n+,n-}(alpha) = mu_alpha! * [t^mu q^d t-^n-] log Z / prod(alpha_i)

with d = 2g - 2 + n+ + n- and sum(alpha) = 2d (+ m in the bivalent case).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from . import operators as ops
from .series import MARKER_NEG, Monomial, Poly


@dataclass
class QSeries:
    """Layered series: ``layers[(m, d)]`` is the coefficient of q0^m q1^d.

    Quadrivalent-only series live on the m = 0 row.  ``connected`` records
    whether the layers are the logarithm (connected counts) already.
    """

    layers: Dict[Tuple[int, int], Poly]
    marker: bool = False
    connected_form: bool = False

    def layer(self, d: int, m: int = 0) -> Poly:
        return self.layers.get((m, d), Poly.zero())

    @property
    def d_max(self) -> int:
        return max((d for (_, d) in self.layers), default=-1)

    @property
    def m_max(self) -> int:
        return max((m for (m, _) in self.layers), default=-1)

    def items(self):
        return sorted(self.layers.items())


def partition_function(d_max: int, with_marker: bool = False) -> QSeries:
    """Layers of Z, computed by (d+1) Z_{d+1} = W1' Z_d, Z_0 = 1."""
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    w1p = ops.w1_reduced(marker=with_marker)
    layers: Dict[Tuple[int, int], Poly] = {(0, 0): Poly.one()}
    cur = Poly.one()
    for d in range(d_max):
        cur = ops.apply(w1p, cur).scale(Fraction(1, d + 1))
        layers[(0, d + 1)] = cur
    return QSeries(layers, marker=with_marker)


def partition_function_bivalent(
    d0_max: int, d1_max: int, with_marker: bool = False, q1_first: bool = False
) -> QSeries:
    """Bi-graded layers satisfying both flows.

    The two flows commute; ``q1_first`` switches the order in which they are
    integrated, which must not change any layer.
    """
    w0p = ops.w0_reduced(marker=with_marker)
    w1p = ops.w1_reduced(marker=with_marker)
    layers: Dict[Tuple[int, int], Poly] = {(0, 0): Poly.one()}
    if not q1_first:
        for m in range(d0_max):
            layers[(m + 1, 0)] = ops.apply(w0p, layers[(m, 0)]).scale(Fraction(1, m + 1))
        for m in range(d0_max + 1):
            for d in range(d1_max):
                layers[(m, d + 1)] = ops.apply(w1p, layers[(m, d)]).scale(Fraction(1, d + 1))
    else:
        for d in range(d1_max):
            layers[(0, d + 1)] = ops.apply(w1p, layers[(0, d)]).scale(Fraction(1, d + 1))
        for d in range(d1_max + 1):
            for m in range(d0_max):
                layers[(m + 1, d)] = ops.apply(w0p, layers[(m, d)]).scale(Fraction(1, m + 1))
    return QSeries(layers, marker=with_marker)


def connected(z: QSeries) -> QSeries:
    """Bi-graded logarithm; layer (m, d) collects connected counts."""
    if z.layer(0, 0).constant_term() != 1 or len(z.layer(0, 0).terms) != 1:
        raise ValueError("layer (0,0) must equal 1")
    u = {k: (p - Poly.one() if k == (0, 0) else p) for k, p in z.layers.items()}
    u.pop((0, 0), None)
    m_max, d_max = z.m_max, z.d_max
    total_max = m_max + d_max

    def convolve(a, b):
        out: Dict[Tuple[int, int], Poly] = {}
        for (m1, d1), p1 in a.items():
            for (m2, d2), p2 in b.items():
                m, d = m1 + m2, d1 + d2
                if m > m_max or d > d_max:
                    continue
                q = p1 * p2
                out[(m, d)] = out[(m, d)] + q if (m, d) in out else q
        return out

    acc: Dict[Tuple[int, int], Poly] = {}
    power = {(0, 0): Poly.one()}
    for k in range(1, total_max + 1):
        power = convolve(power, u)
        if not power:
            break
        sign = Fraction((-1) ** (k + 1), k)
        for key, p in power.items():
            t = p.scale(sign)
            acc[key] = acc[key] + t if key in acc else t
    acc = {k: p for k, p in acc.items() if not p.is_zero()}
    return QSeries(acc, marker=z.marker, connected_form=True)


@dataclass(frozen=True)
class CountKey:
    g: int
    n_plus: int
    n_minus: int
    alpha: Tuple[int, ...]
    m: int = 0

    @property
    def euler_degree(self) -> int:
        return 2 * self.g - 2 + self.n_plus + self.n_minus

    def is_stable(self) -> bool:
        return self.euler_degree > 0 or (
            (self.g, self.n_plus, self.n_minus) == (0, 1, 1) and self.m >= 1
        )


def count(c: QSeries, key: CountKey) -> Fraction:
    """Automorphism-weighted dessin count with labeled positive boundaries.

    Returns 0 (not an error) for keys violating parity or stability.
    """
    if not c.connected_form:
        raise ValueError("count extracts from the connected series; apply connected() first")
    if not c.marker:
        raise ValueError("n_minus resolution needs the t- marker enabled")
    if key.g < 0 or key.n_minus < 1 or key.n_plus < 1 or key.m < 0:
        return Fraction(0)
    if len(key.alpha) != key.n_plus or any(a <= 0 for a in key.alpha):
        return Fraction(0)
    d = key.euler_degree
    if not key.is_stable():
        return Fraction(0)
    if sum(key.alpha) != 2 * d + key.m:
        return Fraction(0)
    if d > c.d_max or key.m > (c.m_max if c.m_max >= 0 else 0):
        raise ValueError(f"layer ({key.m},{d}) not computed")
    exps: Dict[object, int] = {MARKER_NEG: key.n_minus}
    for a in key.alpha:
        exps[a] = exps.get(a, 0) + 1
    coeff = c.layer(max(d, 0), key.m).coeff(Monomial(exps))
    mu_fact = 1
    for v in set(key.alpha):
        mu_fact *= factorial(key.alpha.count(v))
    prod_alpha = 1
    for a in key.alpha:
        prod_alpha *= a
    return coeff * mu_fact / prod_alpha


def integral_points_series(d_max: int, with_marker: bool = False) -> QSeries:
    """Diagonal specialization q0 = q1 = q of the bivalent series."""
    biv = partition_function_bivalent(d_max, d_max, with_marker=with_marker)
    layers: Dict[Tuple[int, int], Poly] = {}
    for n in range(d_max + 1):
        total = Poly.zero()
        for m in range(n + 1):
            total = total + biv.layer(n - m, m)
        layers[(0, n)] = total
    return QSeries(layers, marker=with_marker)


def z_one(d_max: int) -> List[Poly]:
    """Layers of the one-negative-boundary series Z^1, t0 represented explicitly.

    Layer 0 is the initial datum t0; layer d >= 1 is the t-^1 slice of the
    marker-refined partition function (those layers are t0-free).
    """
    z = partition_function(d_max, with_marker=True)
    out = [Poly.var(0)]
    for d in range(1, d_max + 1):
        out.append(z.layer(d).marker_slice(MARKER_NEG, 1))
    return out


def reconstruct_full(z: QSeries, t0_cap: int, d: int, m: int = 0) -> Poly:
    """Layer d of the full Z (with t0 restored), t0-exponent capped."""
    expt0 = Poly({Monomial({0: a}): Fraction(1, factorial(a)) for a in range(t0_cap + 1)})
    return z.layer(d, m) * expt0


def virasoro_residuals(
    z: QSeries, i_max: int = 6, marker_value: Fraction | int = 1
) -> List[Tuple[int, int, Poly]]:
    """Apply the conjugated L_i to the q = 1 combination of layers.

    Returns (i, degree, residual) triples for every nonzero residual in a
    degree that the mixed-grading bookkeeping guarantees exact: degree w is
    determined once layers (w + i + 2)/2 and (w + i)/2 are both available.
    """
    d_max = z.d_max
    total = Poly.zero()
    for (_, _), p in z.items():
        q = p
        if z.marker:
            q = _substitute_marker(p, MARKER_NEG, Fraction(marker_value))
        total = total + q
    out = []
    for i in range(-1, i_max + 1):
        li = ops.conjugate_shift(ops.virasoro_l(i), 1)
        img = ops.apply(li, total)
        w_exact = 2 * d_max - i - 2
        for w in range(0, w_exact + 1):
            part = img.homogeneous_part(w)
            if not part.is_zero():
                out.append((i, w, part))
    return out


def _substitute_marker(p: Poly, name: str, value: Fraction) -> Poly:
    out: Dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        e = m.exp(name)
        rest = Monomial({k: v for k, v in m.exps if k != name}) if e else m
        val = c * value**e
        out[rest] = out.get(rest, Fraction(0)) + val
    return Poly({m: c for m, c in out.items() if c}, p.cap)
