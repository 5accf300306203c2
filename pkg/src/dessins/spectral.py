r"""Laplace-transform correlators, loop equation, and topological recursion.

The correlators are the formal expansions

    W_{g,n}(x_1..x_n) = sum_alpha R~_{g,n}(alpha) prod_i x_i^-(alpha_i + 1),

with coefficients from the Tutte route.  They satisfy a quadratic loop
equation, and after the substitution x = z + 1/z ("Zhukovsky") the
differentials omega_{g,n} = W_{g,n} prod x'(z_i) dz_i extend to rational
differentials on the z-sphere with poles confined to z = +-1, computed here
by an exact residue recursion.  All residue extraction is algebraic: the
integrand is expanded as a Laurent series in u = z -+ 1 whose coefficients
live in the ring spanned by products of 1/(z_j - eps)^k over the passive
variables, so the residue lands directly in partial-fraction form and pole
confinement holds structurally.

The recursion kernel is implemented with denominator (omega_{0,1} -
sigma^* omega_{0,1}) and coupling factor 1/(z - z1) - 1/(1/z - z1); an
overall normalization constant ``KERNEL_SCALE`` multiplies the residues and
is pinned by exact agreement with the Laplace route (the two printed
variants of the kernel differ by such a constant).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

from . import tutte
from .maps import norbury_N
from .series import LaurentSeries, RationalFn, laurent_compose, solve_disc

# pinned so that the residue recursion reproduces the Laplace coefficients
KERNEL_SCALE = Fraction(-1, 2)

MultiIndex = Tuple[int, ...]


# ---------------------------------------------------------------------------
# correlator series from counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorrelatorSeries:
    """W_{g,n} as a finite table alpha (sorted) -> R~_{g,n}(alpha)."""

    g: int
    n: int
    cap: int
    coeffs: Dict[MultiIndex, Fraction]

    def value(self, alpha: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(sorted(alpha)), Fraction(0))

    def ordered_items(self) -> Iterable[Tuple[MultiIndex, Fraction]]:
        for alpha, v in self.coeffs.items():
            for perm in sorted(set(itertools.permutations(alpha))):
                yield perm, v

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "cap": self.cap,
            "coefficients": [
                {"alpha": list(alpha), "value": str(v)}
                for alpha, v in sorted(self.coeffs.items())
            ],
        }

    def star_coeffs(self) -> Dict[MultiIndex, Fraction]:
        """W*: coefficients R_{g,n}(alpha) = R~/prod(alpha) at exponents x^-alpha."""
        out = {}
        for alpha, v in self.coeffs.items():
            denom = 1
            for a in alpha:
                denom *= a
            if denom == 0:
                raise ValueError("W* undefined for zero perimeters")
            out[alpha] = v / denom
        return out


def _sorted_multi(total: int, parts: int, minimum: int) -> Iterable[MultiIndex]:
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
def laplace_W(g: int, n: int, cap: int) -> CorrelatorSeries:
    """Correlator table with sum(alpha) <= cap, from the Tutte recursion."""
    coeffs: Dict[MultiIndex, Fraction] = {}
    minimum = 0 if (g, n) == (0, 1) else 1
    for tot in range(0, cap + 1):
        for alpha in _sorted_multi(tot, n, minimum):
            v = tutte.r_tilde(g, n, alpha)
            if v:
                coeffs[alpha] = v
    return CorrelatorSeries(g, n, cap, coeffs)


# ---------------------------------------------------------------------------
# loop equation, coefficientwise
# ---------------------------------------------------------------------------


def _series_dict(w: CorrelatorSeries) -> Dict[MultiIndex, Fraction]:
    """{exponents e: coefficient} with W = sum c(e) prod x_i^-e_i."""
    out: Dict[MultiIndex, Fraction] = {}
    for alpha, v in w.ordered_items():
        e = tuple(a + 1 for a in alpha)
        out[e] = out.get(e, Fraction(0)) + v
    return out


def _dict_add(dst, src, scale=Fraction(1)):
    for e, c in src.items():
        dst[e] = dst.get(e, Fraction(0)) + c * scale


def _dict_mul(a, b, total_cap):
    out: Dict[MultiIndex, Fraction] = {}
    for e1, c1 in a.items():
        s1 = sum(e1)
        for e2, c2 in b.items():
            if s1 + sum(e2) > total_cap:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return out


def loop_check(g: int, n: int, cap: int) -> List[str]:
    """Residuals of the quadratic loop equation for W_{g,n}, coefficientwise
    on every exponent vector of total order <= cap (expected none)."""
    ing_cap = cap + 2 * n + 2
    lhs: Dict[MultiIndex, Fraction] = {}
    for alpha, v in laplace_W(g, n, ing_cap).ordered_items():
        e = (alpha[0],) + tuple(a + 1 for a in alpha[1:])
        lhs[e] = lhs.get(e, Fraction(0)) + v
    rhs: Dict[MultiIndex, Fraction] = {}
    # divided-difference terms, one per passive variable
    if n >= 2:
        for i in range(1, n):
            wd = laplace_W(g, n - 1, ing_cap)
            for alpha, v in wd.ordered_items():
                a = alpha[0]
                beta = alpha[1:]
                for u in range(0, a + 1):
                    vv = a - u
                    e = [0] * n
                    e[0] = u + 1
                    e[i] = vv + 2
                    passive = [j for j in range(1, n) if j != i]
                    for j, b in zip(passive, beta):
                        e[j] = b + 1
                    key = tuple(e)
                    rhs[key] = rhs.get(key, Fraction(0)) + (vv + 1) * v
    # genus-reduction term
    if g >= 1:
        for alpha, v in laplace_W(g - 1, n + 1, ing_cap).ordered_items():
            e = (alpha[0] + alpha[1] + 2,) + tuple(a + 1 for a in alpha[2:])
            rhs[e] = rhs.get(e, Fraction(0)) + v
    # splitting over ordered pairs, unstable (0,1) pieces included
    passive = list(range(1, n))
    for g1 in range(g + 1):
        g2 = g - g1
        for r in range(len(passive) + 1):
            for s1 in itertools.combinations(passive, r):
                s2 = [j for j in passive if j not in s1]
                w1 = laplace_W(g1, len(s1) + 1, ing_cap)
                w2 = laplace_W(g2, len(s2) + 1, ing_cap)
                for a1, v1 in w1.ordered_items():
                    for a2, v2 in w2.ordered_items():
                        e = [0] * n
                        e[0] = a1[0] + a2[0] + 2
                        for j, b in zip(s1, a1[1:]):
                            e[j] = b + 1
                        for j, b in zip(s2, a2[1:]):
                            e[j] = b + 1
                        key = tuple(e)
                        rhs[key] = rhs.get(key, Fraction(0)) + v1 * v2
    if (g, n) == (0, 1):
        rhs[(0,)] = rhs.get((0,), Fraction(0)) + 1
    findings = []
    for e in set(lhs) | set(rhs):
        if sum(e) > cap:
            continue
        if lhs.get(e, Fraction(0)) != rhs.get(e, Fraction(0)):
            findings.append(
                f"(g,n)=({g},{n}) exponent {e}: {lhs.get(e, Fraction(0))} != "
                f"{rhs.get(e, Fraction(0))}"
            )
    return findings


# ---------------------------------------------------------------------------
# Zhukovsky pullback and the Bergman identity
# ---------------------------------------------------------------------------


def inv_x_series(var: str, hi: int) -> LaurentSeries:
    """1/x(z) = sum (-1)^k z^-(2k+1), exact through exponent hi."""
    return LaurentSeries(var, {2 * k + 1: (-1) ** k for k in range(hi // 2 + 1)}, 1, hi)


def x_prime_series(var: str, hi: int) -> LaurentSeries:
    return LaurentSeries(var, {0: 1, 2: -1}, 0, hi)


def pullback_series(a: int, var: str, hi: int) -> LaurentSeries:
    """x(z)^-(a+1) * x'(z) as a series in 1/z (the Laplace dictionary)."""
    s = inv_x_series(var, hi)
    return s.pow(a + 1) * x_prime_series(var, hi)


def bergman_check(cap: int) -> List[str]:
    """W_{0,2}(z1,z2) x'(z1) x'(z2) = 1/(z1 z2 - 1)^2 to total order cap."""
    w02 = laplace_W(0, 2, cap + 2)
    lhs: Dict[Tuple[int, int], Fraction] = {}
    pows: Dict[int, LaurentSeries] = {}
    for a in {a for alpha in w02.coeffs for a in alpha}:
        pows[a] = pullback_series(a, "z", cap)
    for (a1, a2), v in w02.coeffs.items():
        for b1, b2 in {(a1, a2), (a2, a1)}:
            for m1, c1 in pows[b1].coeffs.items():
                for m2, c2 in pows[b2].coeffs.items():
                    if m1 + m2 <= cap:
                        key = (m1, m2)
                        lhs[key] = lhs.get(key, Fraction(0)) + v * c1 * c2
    rhs: Dict[Tuple[int, int], Fraction] = {}
    for m in range(cap // 2 + 1):
        rhs[(m + 2, m + 2)] = Fraction(m + 1)
    findings = []
    for key in set(lhs) | set(rhs):
        if sum(key) > cap:
            continue
        if lhs.get(key, Fraction(0)) != rhs.get(key, Fraction(0)):
            findings.append(f"exponents {key}: {lhs.get(key)} != {rhs.get(key)}")
    return findings


def bergman_full_identity(order: int) -> List[str]:
    """1/(z1 z2 - 1)^2 + x' x'/(x1 - x2)^2 = 1/(z1 - z2)^2 as rational fns.

    Verified exactly via the polynomial identity
    (z1 - z2)^2 + (z1^2 - 1)(z2^2 - 1) = (z1 z2 - 1)^2.
    """
    findings = []
    for z1 in range(2, 2 + order):
        for z2 in range(z1 + 1, z1 + 1 + order):
            lhs = (z1 - z2) ** 2 + (z1**2 - 1) * (z2**2 - 1)
            rhs = (z1 * z2 - 1) ** 2
            if lhs != rhs:
                findings.append(f"z1={z1} z2={z2}: {lhs} != {rhs}")
    # a polynomial identity of bidegree (2,2) checked on a 3x3+ grid is exact
    return findings


# ---------------------------------------------------------------------------
# exact residue machinery for the topological recursion
# ---------------------------------------------------------------------------

# A pole monomial maps (slot, eps) -> power and stands for
# prod 1/(z_slot - eps)^power ; slots number the variables of omega_{g,n}.
PoleKey = Tuple[Tuple[Tuple[int, int], int], ...]
CoefElem = Dict[PoleKey, Fraction]
PoleSum = Dict[PoleKey, Fraction]

KEY_ONE: PoleKey = ()


def _key_mul(k1: PoleKey, k2: PoleKey) -> PoleKey:
    d = dict(k1)
    for se, p in k2:
        d[se] = d.get(se, 0) + p
    return tuple(sorted(d.items()))


def _elem_mul(a: CoefElem, b: CoefElem) -> CoefElem:
    out: CoefElem = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = _key_mul(k1, k2)
            v = out.get(k, Fraction(0)) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _elem_scale(a: CoefElem, c: Fraction) -> CoefElem:
    return {k: v * c for k, v in a.items()} if c else {}


def _elem_add_into(dst: CoefElem, src: CoefElem, scale: Fraction = Fraction(1)):
    for k, v in src.items():
        nv = dst.get(k, Fraction(0)) + v * scale
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _scalar(c) -> CoefElem:
    c = Fraction(c)
    return {KEY_ONE: c} if c else {}


def _pole(slot: int, eps: int, power: int, coeff=1) -> CoefElem:
    return {(((slot, eps), power),): Fraction(coeff)}


class ULaurent:
    """Truncated Laurent series in u with CoefElem coefficients."""

    __slots__ = ("coeffs", "hi")

    def __init__(self, coeffs: Dict[int, CoefElem], hi: int):
        self.coeffs = {m: c for m, c in coeffs.items() if c and m <= hi}
        self.hi = hi

    @staticmethod
    def from_fractions(coeffs: Dict[int, Fraction], hi: int) -> "ULaurent":
        return ULaurent({m: _scalar(c) for m, c in coeffs.items()}, hi)

    def __mul__(self, other: "ULaurent") -> "ULaurent":
        lo_s = min(self.coeffs, default=0)
        lo_o = min(other.coeffs, default=0)
        hi = min(self.hi + lo_o, other.hi + lo_s)
        out: Dict[int, CoefElem] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = m1 + m2
                if m > hi:
                    continue
                prod = _elem_mul(c1, c2)
                if m in out:
                    _elem_add_into(out[m], prod)
                else:
                    out[m] = dict(prod)
        return ULaurent(out, hi)

    def __add__(self, other: "ULaurent") -> "ULaurent":
        hi = min(self.hi, other.hi)
        out = {m: dict(c) for m, c in self.coeffs.items() if m <= hi}
        for m, c in other.coeffs.items():
            if m > hi:
                continue
            if m in out:
                _elem_add_into(out[m], c)
            else:
                out[m] = dict(c)
        return ULaurent(out, hi)

    def scale(self, c: Fraction) -> "ULaurent":
        return ULaurent({m: _elem_scale(e, c) for m, e in self.coeffs.items()}, self.hi)

    def residue(self) -> CoefElem:
        if self.hi < -1:
            raise ValueError("window does not include the residue coefficient")
        return self.coeffs.get(-1, {})


def _expand_ratfn(fn: RationalFn, eps: int, hi: int) -> ULaurent:
    """Exact Laurent expansion of a rational function at z = eps + u."""
    num_u, den_u = fn.shifted(eps)
    if not num_u:
        return ULaurent({}, hi)

    def val(p):
        for i, c in enumerate(p):
            if c:
                return i
        return len(p)

    vn, vd = val(num_u), val(den_u)
    num_u = num_u[vn:]
    den_u = den_u[vd:]
    order = vn - vd
    terms = hi - order + 1
    inv = [Fraction(0)] * max(terms, 0)
    if terms > 0:
        inv[0] = 1 / den_u[0]
        for m in range(1, terms):
            s = Fraction(0)
            for j in range(1, min(m, len(den_u) - 1) + 1):
                s += den_u[j] * inv[m - j]
            inv[m] = -s / den_u[0]
    out: Dict[int, Fraction] = {}
    for i, c in enumerate(num_u):
        if not c:
            continue
        for m in range(max(0, terms - i)):
            out[order + i + m] = out.get(order + i + m, Fraction(0)) + c * inv[m]
    return ULaurent.from_fractions(out, hi)


def _coupling_direct(eps: int, hi: int) -> ULaurent:
    """1/(z - z1) at z = eps + u; coefficients carry slot-1 poles at eps."""
    coeffs = {r: _pole(1, eps, r + 1, -1) for r in range(hi + 1)}
    return ULaurent(coeffs, hi)


def _inv_z_series(eps: int, hi: int) -> ULaurent:
    """w(u) = 1/(eps + u) as a scalar series."""
    coeffs = {j: _scalar(Fraction((-1) ** j * eps ** (j + 1))) for j in range(hi + 1)}
    return ULaurent(coeffs, hi)


def _coupling_sigma(eps: int, hi: int, slot: int = 1, power: int = 1) -> ULaurent:
    """1/(1/z - z_slot)^power at z = eps + u.

    Expanded as a geometric series in (w(u) - eps)/(eps - z_slot); the
    coefficients carry slot poles at eps only.
    """
    w = _inv_z_series(eps, hi)
    delta = ULaurent({m: c for m, c in w.coeffs.items() if m >= 1}, hi)
    # 1/(c + delta)^power with c = eps - z_slot:
    #   sum_r binom(power - 1 + r, r) (-delta)^r / c^(power + r)
    out = ULaurent({}, hi)
    term = ULaurent({0: _scalar(1)}, hi)  # (-delta)^r, scalar coefficients
    for r in range(hi + 2):
        # 1/c^(power+r) = 1/(eps - z_slot)^(power+r) = (-1)^(power+r)/(z_slot-eps)^..
        cpow = _pole(slot, eps, power + r, Fraction((-1) ** (power + r)))
        piece = term * ULaurent({0: cpow}, hi)
        out = out + piece.scale(Fraction(comb(power - 1 + r, r)))
        term = term * delta.scale(Fraction(-1))
        if not term.coeffs:
            break
    return out


def _pole_factor_at(eps_val: int, eps_pole: int, power: int, hi: int, at_inverse: bool) -> ULaurent:
    """Expansion of 1/(z - eps_pole)^power or 1/(1/z - eps_pole)^power at
    z = eps_val + u, as scalar series."""
    if not at_inverse:
        fn = RationalFn([1])
        base = RationalFn([-eps_pole, 1])
    else:
        # 1/z - e = (1 - e z)/z  ->  1/(1/z - e)^k = z^k / (1 - e z)^k
        fn = RationalFn([0, 1])
        base = RationalFn([1, -eps_pole])
    den = RationalFn([1])
    num = RationalFn([1])
    for _ in range(power):
        den = den * base
        if at_inverse:
            num = num * fn
    result = num / den
    return _expand_ratfn(result, eps_val, hi)


def _passive_coupling(slot: int, eps: int, power: int, hi: int, at_inverse: bool) -> ULaurent:
    """1/(z - z_slot)^power or 1/(1/z - z_slot)^power at z = eps + u."""
    if at_inverse:
        return _coupling_sigma(eps, hi, slot=slot, power=power)
    # 1/(z - z_slot)^power = derivative family of the direct coupling
    #   = sum_r binom(power-1+r, r) u^r * (-1)^power /(z_slot - eps)^(power+r)
    coeffs: Dict[int, CoefElem] = {}
    for r in range(hi + 1):
        c = Fraction((-1) ** power * comb(power - 1 + r, r))
        coeffs[r] = _pole(slot, eps, power + r, c)
    return ULaurent(coeffs, hi)


def _omega_factor_expansion(
    key: PoleKey, slot_args: Dict[int, Tuple[str, int]], eps: int, hi: int
) -> ULaurent:
    """Expand one stored pole monomial under a slot assignment.

    ``slot_args[s]`` is ("z", 0) for the residue variable, ("invz", 0) for
    its sigma image, or ("passive", j) mapping to output slot j.
    """
    out = ULaurent({0: _scalar(1)}, hi)
    for (s, pole_eps), power in key:
        kind, j = slot_args[s]
        if kind == "z":
            out = out * _pole_factor_at(eps, pole_eps, power, hi, at_inverse=False)
        elif kind == "invz":
            out = out * _pole_factor_at(eps, pole_eps, power, hi, at_inverse=True)
        else:
            out = out * ULaurent({0: _pole(j, pole_eps, power)}, hi)
    return out


def _omega_eval(
    omega: PoleSum, slot_args: Dict[int, Tuple[str, int]], eps: int, hi: int
) -> ULaurent:
    out = ULaurent({}, hi)
    for key, c in omega.items():
        out = out + _omega_factor_expansion(key, slot_args, eps, hi).scale(c)
    return out


def _bergman_eval(arg1, arg2, eps: int, hi: int) -> ULaurent:
    """omega_{0,2}/(dz dz) = 1/(a - b)^2 under the same argument scheme."""
    kinds = (arg1, arg2)
    if kinds == (("z", 0), ("invz", 0)) or kinds == (("invz", 0), ("z", 0)):
        # 1/(z - 1/z)^2 = z^2/(z^2-1)^2
        fn = RationalFn([0, 0, 1]) / RationalFn([1, 0, -2, 0, 1])
        return _expand_ratfn(fn, eps, hi)
    (k1, j1), (k2, j2) = kinds
    if k1 == "passive" and k2 in ("z", "invz"):
        (k1, j1), (k2, j2) = (k2, j2), (k1, j1)
    if k1 in ("z", "invz") and k2 == "passive":
        # 1/(z - z_j)^2, with the sign symmetric in the two arguments
        return _passive_coupling(j2, eps, 2, hi, at_inverse=(k1 == "invz"))
    raise ValueError(f"unsupported Bergman arguments {kinds}")


@lru_cache(maxsize=None)
def tr_omega(g: int, n: int) -> "OmegaDifferential":
    """omega_{g,n} by the residue recursion on the curve x = z + 1/z, y = 1/z."""
    if 2 * g - 2 + n <= 0:
        raise ValueError("tr_omega requires a stable (g, n)")
    value: PoleSum = {}
    h_budget = 6 * g + 2 * n + 8
    passives = list(range(2, n + 1))
    for eps in (1, -1):
        hi = h_budget
        # 1/(omega01 - sigma*omega01) = -z^3/(z^2-1)^2, pole of order 2
        ker1 = _expand_ratfn(
            RationalFn([0, 0, 0, -1]) / RationalFn([1, 0, -2, 0, 1]), eps, hi
        )
        ker2 = _coupling_direct(eps, hi) + _coupling_sigma(eps, hi).scale(Fraction(-1))
        jac = _expand_ratfn(RationalFn([-1]) / RationalFn([0, 0, 1]), eps, hi)
        bracket = ULaurent({}, hi)
        # genus-reduction term omega_{g-1, n+1}(z, sigma z, passives)
        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                bracket = bracket + _bergman_eval(("z", 0), ("invz", 0), eps, hi)
            elif 2 * (g - 1) - 2 + (n + 1) > 0:
                prev = tr_omega(g - 1, n + 1).value
                slot_args = {1: ("z", 0), 2: ("invz", 0)}
                for idx, j in enumerate(passives):
                    slot_args[3 + idx] = ("passive", j)
                bracket = bracket + _omega_eval(prev, slot_args, eps, hi)
        # splitting terms, ordered pairs, no omega_{0,1} factors
        for g1 in range(g + 1):
            g2 = g - g1
            for r in range(len(passives) + 1):
                for s1 in itertools.combinations(passives, r):
                    s2 = tuple(j for j in passives if j not in s1)
                    n1, n2 = len(s1) + 1, len(s2) + 1
                    if 2 * g1 - 2 + n1 <= 0 and (g1, n1) != (0, 2):
                        continue
                    if 2 * g2 - 2 + n2 <= 0 and (g2, n2) != (0, 2):
                        continue

                    def factor(gi, si, kind):
                        ni = len(si) + 1
                        if (gi, ni) == (0, 2):
                            return _bergman_eval((kind, 0), ("passive", si[0]), eps, hi)
                        prev = tr_omega(gi, ni).value
                        slot_args = {1: (kind, 0)}
                        for idx, j in enumerate(si):
                            slot_args[2 + idx] = ("passive", j)
                        return _omega_eval(prev, slot_args, eps, hi)

                    bracket = bracket + factor(g1, s1, "z") * factor(g2, s2, "invz")
        integrand = ker1 * ker2 * jac * bracket
        _elem_add_into(value, integrand.residue(), KERNEL_SCALE)
    return OmegaDifferential(g, n, value)


@dataclass(frozen=True)
class OmegaDifferential:
    """omega_{g,n} divided by dz_1 ... dz_n, in partial-fraction pole form."""

    g: int
    n: int
    value: PoleSum

    def pole_locations(self) -> set:
        return {se[1] for key in self.value for se, _ in key}

    def as_rational_fn(self) -> RationalFn:
        if self.n != 1:
            raise ValueError("as_rational_fn only for n = 1")
        out = RationalFn([0])
        for key, c in self.value.items():
            term = RationalFn([c])
            for (slot, eps), power in key:
                base = RationalFn([-eps, 1])
                for _ in range(power):
                    term = term / base
            out = out + term
        return out

    def expand_at_infinity(self, hi: int) -> Dict[MultiIndex, Fraction]:
        """Coefficients of prod z_i^-e_i, exact for total order <= hi."""
        out: Dict[MultiIndex, Fraction] = {}
        for key, c in self.value.items():
            per_slot: Dict[int, Dict[int, Fraction]] = {}
            for (slot, eps), power in key:
                ser = {
                    m: Fraction(comb(m - 1, power - 1) * eps ** (m - power))
                    for m in range(power, hi + 1)
                }
                if slot in per_slot:
                    cur = per_slot[slot]
                    nxt: Dict[int, Fraction] = {}
                    for m1, c1 in cur.items():
                        for m2, c2 in ser.items():
                            if m1 + m2 <= hi:
                                nxt[m1 + m2] = nxt.get(m1 + m2, Fraction(0)) + c1 * c2
                    per_slot[slot] = nxt
                else:
                    per_slot[slot] = ser
            combos = [[(0, c)]] + [
                sorted(per_slot.get(slot, {0: Fraction(1)}).items())
                for slot in range(1, self.n + 1)
            ]

            def rec(slot_idx: int, exps: Tuple[int, ...], coeff: Fraction):
                if coeff == 0:
                    return
                if slot_idx == len(combos):
                    if sum(exps) <= hi:
                        out[exps] = out.get(exps, Fraction(0)) + coeff
                    return
                for m, cc in combos[slot_idx]:
                    if sum(exps) + m <= hi:
                        rec(slot_idx + 1, exps + (m,), coeff * cc)

            rec(1, (), c)
        return {e: c for e, c in out.items() if c}

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "poles": [
                {
                    "factors": [
                        {"slot": slot, "at": eps, "order": power}
                        for (slot, eps), power in key
                    ],
                    "coefficient": str(c),
                }
                for key, c in sorted(self.value.items())
            ],
        }


def laplace_expansion_at_infinity(g: int, n: int, hi: int) -> Dict[MultiIndex, Fraction]:
    """W_{g,n}(x(z)) prod x'(z_i) as coefficients of prod z_i^-e_i."""
    w = laplace_W(g, n, hi)
    pows: Dict[int, LaurentSeries] = {}
    out: Dict[MultiIndex, Fraction] = {}
    for alpha, v in w.ordered_items():
        for a in alpha:
            if a not in pows:
                pows[a] = pullback_series(a, "z", hi)

        def rec(idx: int, exps: Tuple[int, ...], coeff: Fraction):
            if idx == len(alpha):
                if sum(exps) <= hi:
                    out[exps] = out.get(exps, Fraction(0)) + coeff
                return
            for m, c in pows[alpha[idx]].coeffs.items():
                if sum(exps) + m <= hi:
                    rec(idx + 1, exps + (m,), coeff * c)

        rec(0, (), v)
    return {e: c for e, c in out.items() if c}


def tr_agreement_check(g: int, n: int, hi: int) -> List[str]:
    """Compare the residue recursion with the Laplace route, exactly."""
    om = tr_omega(g, n)
    findings = []
    bad_poles = om.pole_locations() - {1, -1}
    if bad_poles:
        findings.append(f"(g,n)=({g},{n}): poles outside +-1: {sorted(bad_poles)}")
    got = om.expand_at_infinity(hi)
    want = laplace_expansion_at_infinity(g, n, hi)
    for e in set(got) | set(want):
        if sum(e) > hi:
            continue
        gv, wv = got.get(e, Fraction(0)), want.get(e, Fraction(0))
        if gv != wv:
            findings.append(f"(g,n)=({g},{n}) exponent {e}: residue {gv} != laplace {wv}")
    return findings


# ---------------------------------------------------------------------------
# Norbury substitution
# ---------------------------------------------------------------------------


def tree_series_check(cap: int) -> List[str]:
    """u0 = x*u satisfies u0^2 - x^2 u0 + x^2 = 0 within the window."""
    u = solve_disc(cap)
    u0 = u.shift(-1)
    lhs = u0 * u0 - u0.shift(-2) + LaurentSeries("x", {-2: 1}, -2, u0.hi - 2)
    return [] if lhs.is_zero_on_window() else [f"tree-series residual {lhs.as_str()}"]


def norbury_substitution_check(g: int, n: int, cap: int) -> List[str]:
    """F^comb_{g,n}(u(x_1), ..., u(x_n)) = W*_{g,n}(x) coefficientwise."""
    if (g, n) not in {(1, 1), (0, 3)}:
        raise ValueError("supported (g, n): (1,1) and (0,3)")
    star = laplace_W(g, n, cap).star_coeffs()
    u = solve_disc(cap + 2)
    findings = []
    if n == 1:
        fcomb = LaurentSeries(
            "y", {b: norbury_N(g, 1, (b,)) for b in range(1, cap + 1)}, 1, cap
        )
        lhs1 = laurent_compose(fcomb, u)
        rhs1 = LaurentSeries("x", {a[0]: v for a, v in star.items()}, 1, cap)
        for m in range(0, cap + 1):
            lv, rv = lhs1.coeff(m), rhs1.coeff(m)
            if lv != rv:
                findings.append(f"(g,n)=({g},{n}) exponent {m}: comb {lv} != star {rv}")
        return findings
    upow: Dict[int, LaurentSeries] = {}
    for b in range(1, cap + 1):
        upow[b] = u if b == 1 else upow[b - 1] * u
    lhs: Dict[MultiIndex, Fraction] = {}
    for alpha in itertools.product(range(1, cap + 1), repeat=n):
        if sum(alpha) > cap:
            continue
        nv = norbury_N(g, n, alpha)
        if not nv:
            continue

        def rec(idx: int, exps: Tuple[int, ...], coeff: Fraction):
            if idx == n:
                if sum(exps) <= cap:
                    lhs[exps] = lhs.get(exps, Fraction(0)) + coeff
                return
            for m, c in upow[alpha[idx]].coeffs.items():
                if sum(exps) + m <= cap:
                    rec(idx + 1, exps + (m,), coeff * c)

        rec(0, (), nv)
    rhs: Dict[MultiIndex, Fraction] = {}
    for alpha, v in star.items():
        for perm in sorted(set(itertools.permutations(alpha))):
            rhs[perm] = rhs.get(perm, Fraction(0)) + v
    for e in set(lhs) | set(rhs):
        if sum(e) > cap:
            continue
        lv, rv = lhs.get(e, Fraction(0)), rhs.get(e, Fraction(0))
        if lv != rv:
            findings.append(f"(g,n)=({g},{n}) exponent {e}: comb {lv} != star {rv}")
    return findings
