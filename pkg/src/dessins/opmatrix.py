r"""Matrix coefficients of the gluing operators from graph enumeration.

The operator attached to a connected directed surface of type (g, n+, n-)
acts on symmetric functions; on the multi-index basis e_alpha(L) =
prod L_i^{alpha_i}/alpha_i! its matrix is assembled from the enumerated
quadrivalent directed maps R of that type and their lattice-point counts:

    K[a+|a-] = prod(a+_i) * sum_R Pbar_R(a+ - a+(R) | a-) / (n-! #Aut(R))

so a nonzero entry forces d(a+) = d(a-) + 2 d_{g,n+,n-} (the lattice offset
a+(R) has degree 2 d).  The sum over R with both boundary labelings fixed is
evaluated as a free sum over labeled structures divided by the centralizer
order of the canonical vertex rotation.

From the blocks one can assemble the full degree-d layer of the evolution
operator as a differential operator

    K_d = sum K_d^s[mu+|mu-] t^{mu+} d_{mu-} / mu+!

(including disconnected products of lower blocks via the normal-ordered
union), verify the cut-and-join equation d K_d = W1 K_{d-1} entrywise, and
check the Gram adjointness between the (g, n+, n-) and (g, n-, n+) blocks.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from . import maps, operators as ops, partition as pt
from .series import Monomial, Poly

MultiIndex = Tuple[int, ...]


def euler_degree(g: int, n_plus: int, n_minus: int) -> int:
    return 2 * g - 2 + n_plus + n_minus


@dataclass(frozen=True)
class KernelBlock:
    g: int
    n_plus: int
    n_minus: int
    cap: int
    entries: Dict[Tuple[MultiIndex, MultiIndex], Fraction]

    def value(self, a_plus: Sequence[int], a_minus: Sequence[int]) -> Fraction:
        key = (tuple(sorted(a_plus)), tuple(sorted(a_minus)))
        return self.entries.get(key, Fraction(0))

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "cap": self.cap,
            "entries": [
                {"alpha_plus": list(ap), "alpha_minus": list(am), "value": str(v)}
                for (ap, am), v in sorted(self.entries.items())
            ],
        }


def _compositions(total: int, parts: int) -> Iterable[MultiIndex]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _sorted_multi(total: int, parts: int, minimum: int = 0) -> Iterable[MultiIndex]:
    """Weakly increasing multi-indices with the given sum."""

    def rec(tot, k, lo):
        if k == 0:
            if tot == 0:
                yield ()
            return
        for v in range(lo, tot // k + 1):
            for rest in rec(tot - v, k - 1, v):
                yield (v,) + rest

    yield from rec(total, parts, minimum)


@lru_cache(maxsize=None)
def kernel_block(g: int, n_plus: int, n_minus: int, cap: int) -> KernelBlock:
    d = euler_degree(g, n_plus, n_minus)
    if d <= 0 or g < 0 or n_plus < 1 or n_minus < 1:
        raise ValueError("stability 2g - 2 + n+ + n- > 0 required")
    entries: Dict[Tuple[MultiIndex, MultiIndex], Fraction] = {}
    if cap < 2 * d:
        warnings.warn(
            f"cap {cap} below the minimal degree {2 * d} of the ({g},{n_plus},{n_minus})"
            " block; returning an empty block",
            stacklevel=2,
        )
        return KernelBlock(g, n_plus, n_minus, cap, entries)
    valences = (4,) * d
    denom = factorial(n_minus) * maps.centralizer_order(valences)
    structures = []
    for dm in maps.directed_maps(valences, connected_only=True):
        if dm.total_genus != g:
            continue
        pos = [i for i, s in enumerate(dm.face_sign) if s > 0]
        neg = [i for i, s in enumerate(dm.face_sign) if s < 0]
        if len(pos) != n_plus or len(neg) != n_minus:
            continue
        structures.append((dm, pos, neg))
    for dtot in range(2 * d, cap + 1):
        for a_plus in _sorted_multi(dtot, n_plus, minimum=1):
            for a_minus in _sorted_multi(dtot - 2 * d, n_minus, minimum=0):
                total = Fraction(0)
                for dm, pos, neg in structures:
                    perims = [len(dm.faces[i]) for i in pos]
                    for lp in itertools.permutations(range(n_plus)):
                        beta_plus = [a_plus[lp[j]] - perims[j] for j in range(n_plus)]
                        if any(b < 0 for b in beta_plus):
                            continue
                        for lm in itertools.permutations(range(n_minus)):
                            beta_minus = [a_minus[lm[j]] for j in range(n_minus)]
                            total += maps.lattice_points_directed(dm, beta_plus, beta_minus)
                if total:
                    prod = 1
                    for a in a_plus:
                        prod *= a
                    entries[(a_plus, a_minus)] = Fraction(prod, denom) * total
    return KernelBlock(g, n_plus, n_minus, cap, entries)


def stable_types(d: int) -> List[Tuple[int, int, int]]:
    """All (g, n+, n-) with 2g - 2 + n+ + n- = d."""
    out = []
    for g in range(d // 2 + 1):
        for n_plus in range(1, d + 2 - 2 * g):
            n_minus = d + 2 - 2 * g - n_plus
            if n_minus >= 1:
                out.append((g, n_plus, n_minus))
    return out


def _block_diffterms(block: KernelBlock) -> List[ops.DiffTerm]:
    """Terms K^part[mu+|mu-]/mu+!  t^{mu+} d_{mu-} of one connected block."""
    terms = []
    for (a_plus, a_minus), val in block.entries.items():
        mu_plus: Dict[int, int] = {}
        for a in a_plus:
            mu_plus[a] = mu_plus.get(a, 0) + 1
        mu_minus: Dict[int, int] = {}
        for a in a_minus:
            mu_minus[a] = mu_minus.get(a, 0) + 1
        mu_plus_fact = 1
        for e in mu_plus.values():
            mu_plus_fact *= factorial(e)
        mu_minus_fact = 1
        for e in mu_minus.values():
            mu_minus_fact *= factorial(e)
        part_entry = val * Fraction(factorial(block.n_minus), mu_minus_fact)
        coeff = part_entry / mu_plus_fact
        terms.append(
            ops.DiffTerm(coeff, Monomial(mu_plus), tuple(sorted(mu_minus.items())))
        )
    return terms


def _normal_ordered_product(a: List[ops.DiffTerm], b: List[ops.DiffTerm]) -> List[ops.DiffTerm]:
    out: Dict[Tuple[Monomial, tuple], Fraction] = {}
    for t1 in a:
        for t2 in b:
            mono = t1.mono.mul(t2.mono)
            ders: Dict[int, int] = dict(t1.ders)
            for i, e in t2.ders:
                ders[i] = ders.get(i, 0) + e
            key = (mono, tuple(sorted(ders.items())))
            out[key] = out.get(key, Fraction(0)) + t1.coeff * t2.coeff
    return [ops.DiffTerm(c, m, d) for (m, d), c in out.items() if c]


@lru_cache(maxsize=None)
def assembled_operator(d: int, cap: int) -> ops.DiffOp:
    """The q^d layer of the evolution operator, from enumeration data only.

    Includes the disconnected surfaces: the union over all ways to split d
    into connected stable pieces, with normal-ordered products and 1/k!.
    """
    if d == 0:
        return ops.from_terms("K_0", [ops.DiffTerm(Fraction(1), Monomial({}), ())], (0,))

    connected_layer: Dict[int, List[ops.DiffTerm]] = {}
    for di in range(1, d + 1):
        terms: List[ops.DiffTerm] = []
        for g, np_, nm in stable_types(di):
            terms.extend(_block_diffterms(kernel_block(g, np_, nm, cap)))
        connected_layer[di] = terms

    total: Dict[Tuple[Monomial, tuple], Fraction] = {}

    def add_terms(terms: List[ops.DiffTerm], scale: Fraction):
        for t in terms:
            key = (t.mono, t.ders)
            total[key] = total.get(key, Fraction(0)) + t.coeff * scale

    def compositions(tot: int):
        if tot == 0:
            yield ()
            return
        for first in range(1, tot + 1):
            for rest in compositions(tot - first):
                yield (first,) + rest

    for combo in compositions(d):
        prod = None
        for di in combo:
            prod = connected_layer[di] if prod is None else _normal_ordered_product(
                prod, connected_layer[di]
            )
        add_terms(prod, Fraction(1, factorial(len(combo))))
    terms = [ops.DiffTerm(c, m, dd) for (m, dd), c in total.items() if c]
    return ops.from_terms(f"K_{d}", terms, (2 * d,))


def cutjoin_matrix_check(d_max: int, cap: int, deg_cap: int = 4, t0_cap: int = 4) -> List[str]:
    """Residuals of d K_d = (W1 K_{d-1}) on basis monomials (expected none)."""
    findings = []
    w1 = ops.w1()
    for d in range(1, d_max + 1):
        kd = assembled_operator(d, cap)
        kprev = assembled_operator(d - 1, cap)
        for m in ops.basis_monomials(min(deg_cap, cap - 2 * d), deg_cap, t0_cap):
            p = Poly.term(m, 1)
            lhs = ops.apply(kd, p).scale(d)
            rhs = ops.apply(w1, ops.apply(kprev, p))
            diff = lhs - rhs
            if not diff.is_zero():
                findings.append(f"d={d} monomial {m.as_str()}: residual {diff.as_str()}")
    return findings


def vacuum_consistency_check(d_max: int, cap: int) -> List[str]:
    """Assembled operator applied to the reduced vacuum must reproduce the
    partition-function layers."""
    findings = []
    z = pt.partition_function(d_max)
    for d in range(d_max + 1):
        op = ops.conjugate_shift(assembled_operator(d, cap), 1)
        got = ops.apply(op, Poly.one())
        want = z.layer(d)
        if got != want:
            findings.append(
                f"layer {d}: operator route {got.as_str()} vs flow route {want.as_str()}"
            )
    return findings


# ---------------------------------------------------------------------------
# adjointness with respect to the exponential-weight pairing
# ---------------------------------------------------------------------------


def _distinct_permutations(parts: MultiIndex) -> List[MultiIndex]:
    return sorted(set(itertools.permutations(parts)))


@lru_cache(maxsize=None)
def _gram(mu1: MultiIndex, mu2: MultiIndex) -> Fraction:
    """(e_mu1, e_mu2) under (f, g) = (1/n!) int f g exp(-|x|) dx on R+^n."""
    n = len(mu1)
    assert len(mu2) == n
    total = Fraction(0)
    for a in _distinct_permutations(mu1):
        for b in _distinct_permutations(mu2):
            prod = Fraction(1)
            for ai, bi in zip(a, b):
                prod *= Fraction(factorial(ai + bi), factorial(ai) * factorial(bi))
            total += prod
    return total / factorial(n)


def _v_matrix(block: KernelBlock) -> Dict[Tuple[MultiIndex, MultiIndex], Fraction]:
    """Partition-basis matrix of the kernel with the boundary-length
    prefactor removed: V e_{mu-} = sum_nu V[nu|mu-] e_nu."""
    out: Dict[Tuple[MultiIndex, MultiIndex], Fraction] = {}
    for (a_plus, a_minus), val in block.entries.items():
        mu_minus_fact = 1
        for v in set(a_minus):
            mu_minus_fact *= factorial(a_minus.count(v))
        part_entry = val * Fraction(factorial(block.n_minus), mu_minus_fact)
        prod = 1
        for a in a_plus:
            prod *= a
        nu = tuple(sorted(a - 1 for a in a_plus))
        key = (nu, a_minus)
        out[key] = out.get(key, Fraction(0)) + part_entry / prod
    return out


def adjoint_check(g: int, n_plus: int, n_minus: int, cap: int) -> List[str]:
    """Verify (f, V_{g,n+,n-} h) = (V_{g,n-,n+} f, h) on the partition basis."""
    d = euler_degree(g, n_plus, n_minus)
    fwd = _v_matrix(kernel_block(g, n_plus, n_minus, cap))
    bwd = _v_matrix(kernel_block(g, n_minus, n_plus, cap))
    findings = []
    in_cap = cap - 2 * d
    for dp in range(in_cap + 1):
        for mu_p in _sorted_multi(dp, n_plus, minimum=0):
            for dm in range(in_cap + 1):
                for mu_m in _sorted_multi(dm, n_minus, minimum=0):
                    lhs = Fraction(0)
                    for (nu, src), v in fwd.items():
                        if src == mu_m:
                            lhs += _gram(mu_p, nu) * v
                    rhs = Fraction(0)
                    for (rho, src), v in bwd.items():
                        if src == mu_p:
                            rhs += _gram(mu_m, rho) * v
                    if lhs != rhs:
                        findings.append(f"mu+={mu_p} mu-={mu_m}: {lhs} != {rhs}")
    return findings
