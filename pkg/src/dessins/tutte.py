r"""Memoized Tutte-style recursions for weighted dessin counts.

``r_tilde(g, n, alpha)`` evaluates the three-term recursion for the
edge-weighted connected counts R~_{g,n}(alpha) = prod(alpha_i) * R_{g,n}(alpha):

    R~_{g,n}(a1, rest) =
        sum_{i in rest} a_i R~_{g,n-1}(a1 + a_i - 2, rest \ {a_i})
      + sum_{k+l=a1-2} [ R~_{g-1,n+1}(k, l, rest)
                        + sum_{ordered (g1,I1),(g2,I2)} R~(k, I1) R~(l, I2) ]

with the single formal seed R~_{0,1}(0) = 1.  Any other key containing a
zero entry evaluates to 0: a boundary of an actual graph has positive
perimeter.  The splitting sum is over ordered pairs (no 1/2) and the
zero-policy silently removes the unstable pieces; this normalization is
pinned by exact agreement with the partition-function route and the
brute-force oracle.

``r_tilde_nc(mu, d)`` is the non-connected, partition-indexed variant:
mu!\,[t^mu q^d] of the full (non-connected) partition function.  Parts of
size 0 correspond to cylinder components and can be stripped freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

Partition = Tuple[int, ...]  # sorted parts, multiplicities expanded


def _subsets(items: Tuple[int, ...]):
    """All 2^n (subset, complement) pairs of positions."""
    n = len(items)
    for mask in range(1 << n):
        a = tuple(items[i] for i in range(n) if mask >> i & 1)
        b = tuple(items[i] for i in range(n) if not mask >> i & 1)
        yield a, b


@lru_cache(maxsize=None)
def r_tilde(g: int, n: int, alpha: Partition) -> Fraction:
    alpha = tuple(sorted(alpha))
    if g < 0 or n < 1 or len(alpha) != n or any(a < 0 for a in alpha):
        return Fraction(0)
    if (g, alpha) == (0, (0,)):
        return Fraction(1)
    if 0 in alpha:
        return Fraction(0)
    if sum(alpha) % 2:
        return Fraction(0)
    # recurse on the largest entry; the value is symmetric in alpha
    a1 = alpha[-1]
    rest = alpha[:-1]
    total = Fraction(0)
    for i, ai in enumerate(rest):
        merged = tuple(sorted((a1 + ai - 2,) + rest[:i] + rest[i + 1 :]))
        total += ai * r_tilde(g, n - 1, merged)
    for k in range(0, a1 - 1):
        l = a1 - 2 - k
        total += r_tilde(g - 1, n + 1, tuple(sorted((k, l) + rest)))
        for i1, i2 in _subsets(rest):
            for g1 in range(g + 1):
                t1 = r_tilde(g1, len(i1) + 1, tuple(sorted((k,) + i1)))
                if t1:
                    total += t1 * r_tilde(g - g1, len(i2) + 1, tuple(sorted((l,) + i2)))
    return total


def r_circ(g: int, n: int, alpha: Iterable[int]) -> Fraction:
    """Unweighted connected count R_{g,n}(alpha) = R~ / prod(alpha)."""
    alpha = tuple(sorted(alpha))
    val = r_tilde(g, n, alpha)
    denom = 1
    for a in alpha:
        denom *= a
    return val / denom if denom else val


def _strip_zeros(mu: Partition) -> Partition:
    return tuple(a for a in mu if a > 0)


@lru_cache(maxsize=None)
def _r_nc(mu: Partition) -> Fraction:
    """Non-connected R~(mu), mu sorted, no zero parts."""
    if not mu:
        return Fraction(1)
    if sum(mu) % 2:
        return Fraction(0)
    i = mu[-1]
    lam = mu[:-1]  # mu - delta_i

    def lam_count(j):
        return sum(1 for a in lam if a == j)

    total = Fraction(0)
    seen = set()
    for j in lam:
        if j in seen or j < 1:
            continue
        seen.add(j)
        merged = list(lam)
        merged.remove(j)
        if i + j - 2 > 0:
            merged.append(i + j - 2)
        total += j * lam_count(j) * _r_nc(tuple(sorted(merged)))
    for k in range(0, i - 1):
        l = i - 2 - k
        total += _r_nc(_strip_zeros(tuple(sorted(lam + (k, l)))))
    return total


def r_tilde_nc(mu: Dict[int, int] | Iterable[int], d: int) -> Fraction:
    """mu! [t^mu q^d] of the non-connected partition function.

    ``mu`` is a partition (map part -> multiplicity, or iterable of parts);
    zero whenever sum(mu) != 2d.
    """
    if isinstance(mu, dict):
        parts = []
        for part, mult in mu.items():
            parts.extend([part] * mult)
    else:
        parts = list(mu)
    if any(p < 0 for p in parts) or d < 0:
        return Fraction(0)
    parts = tuple(sorted(p for p in parts if p > 0))
    if sum(parts) != 2 * d:
        return Fraction(0)
    return _r_nc(parts)


def catalan(k: int) -> int:
    from math import comb

    return comb(2 * k, k) // (k + 1)
