r"""Exact sparse polynomial and Laurent-series arithmetic.

All coefficients are ``fractions.Fraction``; there is no floating-point mode
anywhere in the package.  Three kinds of values live here:

* ``Monomial`` / ``Poly`` -- sparse multivariate polynomials in variables
  ``t1, t2, ...`` (variable ``i`` carries *weighted degree* ``i``), the
  bookkeeping variable ``t0`` (weight 0) and named *marker* variables such
  as ``t-`` (weight 0).  A ``Poly`` optionally carries a truncation cap:
  ``cap=None`` means the polynomial is exact, ``cap=D`` means every
  coefficient of weighted degree ``<= D`` is exact and nothing is known
  beyond.  Arithmetic propagates caps conservatively.

* ``LaurentSeries`` -- one-variable series ``sum_m c_m * var^(-m)`` with an
  explicit exactness window ``[lo, hi]``: the true series has no support
  below ``lo`` and the stored coefficients are exact for exponents ``<= hi``.
  Window arithmetic is conservative so that no silently wrong tail
  coefficient can survive an operation.

* ``RationalFn`` -- dense univariate rational functions over ``Fraction``,
  gcd-normalized, used for the spectral-curve computations.

The monomial order used for canonical rendering is graded lexicographic on
(weighted degree, exponent vector), so printed polynomials are stable and
usable as golden values in tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Key = Union[int, str]  # int i >= 0 -> variable t_i ; str -> marker variable

# marker for the number of negative boundary components (modified vacuum)
MARKER_NEG = "t-"


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _key_sort(k: Key):
    return (0, k, "") if isinstance(k, int) else (1, 0, k)


class Monomial:
    """Immutable sparse exponent vector over variables and markers."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[Key, int] | Iterable[Tuple[Key, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        clean = tuple(sorted(((k, e) for k, e in items if e != 0), key=lambda t: _key_sort(t[0])))
        for k, e in clean:
            if e < 0:
                raise ValueError(f"negative exponent for {k}")
            if isinstance(k, int) and k < 0:
                raise ValueError(f"negative variable index {k}")
        object.__setattr__(self, "exps", clean)
        object.__setattr__(self, "_hash", hash(clean))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self) -> int:
        """Weighted degree: variable i contributes i per power, markers 0."""
        return sum(k * e for k, e in self.exps if isinstance(k, int))

    @property
    def n_parts(self) -> int:
        """Number of parts of the underlying partition (t0 excluded)."""
        return sum(e for k, e in self.exps if isinstance(k, int) and k >= 1)

    def exp(self, key: Key) -> int:
        for k, e in self.exps:
            if k == key:
                return e
        return 0

    @property
    def t0_exp(self) -> int:
        return self.exp(0)

    def vars_part(self) -> Dict[int, int]:
        return {k: e for k, e in self.exps if isinstance(k, int)}

    def markers_part(self) -> Dict[str, int]:
        return {k: e for k, e in self.exps if isinstance(k, str)}

    def partition(self) -> Tuple[int, ...]:
        """The partition (sorted parts, with multiplicity) of the t-variables i >= 1."""
        parts = []
        for k, e in self.exps:
            if isinstance(k, int) and k >= 1:
                parts.extend([k] * e)
        return tuple(sorted(parts))

    def mul(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for k, e in other.exps:
            d[k] = d.get(k, 0) + e
        return Monomial(d)

    def __repr__(self):
        return f"Monomial({self.as_str()})"

    def as_str(self) -> str:
        if not self.exps:
            return "1"
        out = []
        for k, e in self.exps:
            name = f"t{k}" if isinstance(k, int) else k
            out.append(name if e == 1 else f"{name}^{e}")
        return "*".join(out)


MONO_ONE = Monomial()


def mono(d: Mapping[Key, int]) -> Monomial:
    return Monomial(d)


def _cap_min(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Poly:
    """Sparse polynomial with exact Fraction coefficients and a trust cap."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None, cap: int | None = None):
        t: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _fr(c)
                if c != 0 and (cap is None or m.degree <= cap):
                    t[m] = c
        self.terms = t
        self.cap = cap

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(cap: int | None = None) -> "Poly":
        return Poly({}, cap)

    @staticmethod
    def const(c, cap: int | None = None) -> "Poly":
        return Poly({MONO_ONE: _fr(c)}, cap)

    @staticmethod
    def one(cap: int | None = None) -> "Poly":
        return Poly.const(1, cap)

    @staticmethod
    def var(i: int, cap: int | None = None) -> "Poly":
        return Poly({Monomial({i: 1}): Fraction(1)}, cap)

    @staticmethod
    def marker(name: str, cap: int | None = None) -> "Poly":
        return Poly({Monomial({name: 1}): Fraction(1)}, cap)

    @staticmethod
    def term(m: Monomial, c, cap: int | None = None) -> "Poly":
        return Poly({m: _fr(c)}, cap)

    # -- queries -----------------------------------------------------------
    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    @property
    def min_degree(self) -> int:
        return min((m.degree for m in self.terms), default=0)

    @property
    def max_t0(self) -> int:
        return max((m.t0_exp for m in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.coeff(MONO_ONE)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly({m: c for m, c in self.terms.items() if m.degree == d}, self.cap)

    def marker_slice(self, name: str, power: int) -> "Poly":
        """Coefficient of marker^power, as a polynomial without that marker."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if m.exp(name) == power:
                rest = {k: e for k, e in m.exps if k != name}
                out[Monomial(rest)] = c
        return Poly(out, self.cap)

    def max_marker(self, name: str) -> int:
        return max((m.exp(name) for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        cap = _cap_min(self.cap, other.cap)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(t, cap)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.cap)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = _fr(c)
        if c == 0:
            return Poly.zero(self.cap)
        return Poly({m: c * v for m, v in self.terms.items()}, self.cap)

    def __mul__(self, other: "Poly") -> "Poly":
        cap = _cap_min(self.cap, other.cap)
        t: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            d1 = m1.degree
            for m2, c2 in other.terms.items():
                if cap is not None and d1 + m2.degree > cap:
                    continue
                m = m1.mul(m2)
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(t, cap)

    def truncate(self, cap: int | None, marker_caps: Mapping[str, int] | None = None) -> "Poly":
        if cap is not None and self.cap is not None and cap > self.cap:
            raise ValueError(f"cannot extend trust cap {self.cap} to {cap}")
        t = {}
        for m, c in self.terms.items():
            if cap is not None and m.degree > cap:
                continue
            if marker_caps and any(m.exp(nm) > mc for nm, mc in marker_caps.items()):
                continue
            t[m] = c
        return Poly(t, cap if cap is not None else self.cap)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- rendering ---------------------------------------------------------
    def sorted_terms(self):
        def order(item):
            m, _ = item
            return (m.degree, tuple((_key_sort(k), e) for k, e in m.exps))

        return sorted(self.terms.items(), key=order)

    def as_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m is MONO_ONE or not m.exps:
                parts.append(str(c))
            elif c == 1:
                parts.append(m.as_str())
            elif c == -1:
                parts.append("-" + m.as_str())
            else:
                parts.append(f"{c}*{m.as_str()}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.as_str()})"


def parse_poly(pairs: Iterable[Tuple[Mapping[Key, int], object]], cap: int | None = None) -> Poly:
    """Build a Poly from (exponent-map, coefficient) pairs."""
    t: Dict[Monomial, Fraction] = {}
    for em, c in pairs:
        m = Monomial(em)
        t[m] = t.get(m, Fraction(0)) + _fr(c)
    return Poly(t, cap)


def poly_mul(a: Poly, b: Poly, cap_d: int) -> Poly:
    """Truncated product; both inputs must be trusted at least to cap_d."""
    for p in (a, b):
        if p.cap is not None and p.cap < cap_d:
            raise ValueError(f"operand cap {p.cap} below requested cap {cap_d}")
    return (a * b).truncate(cap_d) if (a.cap is None and b.cap is None) else Poly(
        (a * b).terms, cap_d
    )


def poly_pow(p: Poly, k: int, cap_d: int | None = None) -> Poly:
    out = Poly.one(cap_d if cap_d is not None else p.cap)
    for _ in range(k):
        out = out * p
        if cap_d is not None:
            out = Poly(out.terms, cap_d)
    return out


def poly_exp(p: Poly, cap_d: int) -> Poly:
    """exp of a polynomial with positive minimal weighted degree, truncated."""
    if p.cap is not None and p.cap < cap_d:
        raise ValueError(f"operand cap {p.cap} below requested cap {cap_d}")
    if not p.is_zero() and p.min_degree < 1:
        raise ValueError("poly_exp requires zero constant term (min degree >= 1)")
    p = Poly(p.terms, cap_d)
    out = Poly.one(cap_d)
    pk = Poly.one(cap_d)
    fact = 1
    for k in range(1, cap_d + 1):
        pk = pk * p
        fact *= k
        if pk.is_zero():
            break
        out = out + pk.scale(Fraction(1, fact))
    return out


def poly_log(p: Poly, cap_d: int) -> Poly:
    """log of a polynomial with constant term 1, truncated."""
    if p.cap is not None and p.cap < cap_d:
        raise ValueError(f"operand cap {p.cap} below requested cap {cap_d}")
    if p.constant_term() != 1:
        raise ValueError("poly_log requires constant term 1")
    u = Poly(p.terms, cap_d) - Poly.one(cap_d)
    if not u.is_zero() and u.min_degree < 1:
        raise ValueError("poly_log requires min degree >= 1 away from the constant")
    out = Poly.zero(cap_d)
    uk = Poly.one(cap_d)
    for k in range(1, cap_d + 1):
        uk = uk * u
        if uk.is_zero():
            break
        out = out + uk.scale(Fraction((-1) ** (k + 1), k))
    return out


# ---------------------------------------------------------------------------
# Laurent series in one variable
# ---------------------------------------------------------------------------


class LaurentSeries:
    """Finite window of an exact Laurent series sum_m c_m * var^(-m).

    ``lo`` is a proven lower bound for the support (no terms with exponent
    below ``lo``); coefficients are exact for all exponents ``<= hi``.
    """

    __slots__ = ("var", "coeffs", "lo", "hi")

    def __init__(self, var: str, coeffs: Mapping[int, object], lo: int, hi: int):
        self.var = var
        self.coeffs = {m: _fr(c) for m, c in coeffs.items() if c and lo <= m <= hi}
        self.lo = lo
        self.hi = hi

    @staticmethod
    def zero(var: str, hi: int) -> "LaurentSeries":
        return LaurentSeries(var, {}, 0, hi)

    @staticmethod
    def monomial(var: str, m: int, c=1, hi: int | None = None) -> "LaurentSeries":
        return LaurentSeries(var, {m: _fr(c)}, m, hi if hi is not None else m)

    def coeff(self, m: int) -> Fraction:
        if m > self.hi:
            raise ValueError(f"coefficient of exponent {m} outside window (hi={self.hi})")
        return self.coeffs.get(m, Fraction(0))

    @property
    def order(self) -> int:
        """Exact order (smallest exponent with nonzero known coefficient)."""
        if self.coeffs:
            return min(self.coeffs)
        return self.hi + 1

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        hi = min(self.hi, other.hi)
        lo = min(self.lo, other.lo)
        c = dict(self.coeffs)
        for m, v in other.coeffs.items():
            c[m] = c.get(m, Fraction(0)) + v
        return LaurentSeries(self.var, c, lo, hi)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "LaurentSeries":
        c = _fr(c)
        return LaurentSeries(self.var, {m: c * v for m, v in self.coeffs.items()}, self.lo, self.hi)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by var^(-k), i.e. add k to every exponent."""
        return LaurentSeries(
            self.var, {m + k: v for m, v in self.coeffs.items()}, self.lo + k, self.hi + k
        )

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        hi = min(self.hi + other.lo, other.hi + self.lo)
        lo = self.lo + other.lo
        c: Dict[int, Fraction] = {}
        for m1, v1 in self.coeffs.items():
            for m2, v2 in other.coeffs.items():
                m = m1 + m2
                if m <= hi:
                    c[m] = c.get(m, Fraction(0)) + v1 * v2
        return LaurentSeries(self.var, c, lo, hi)

    def pow(self, k: int) -> "LaurentSeries":
        if k < 0:
            raise ValueError("negative powers unsupported")
        if k == 0:
            return LaurentSeries(self.var, {0: 1}, 0, self.hi - self.lo)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def truncate(self, hi: int) -> "LaurentSeries":
        if hi > self.hi:
            raise ValueError(f"cannot extend window {self.hi} to {hi}")
        return LaurentSeries(self.var, self.coeffs, self.lo, hi)

    def is_zero_on_window(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        """Exact equality of coefficients on the common window."""
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        hi = min(self.hi, other.hi)
        for m in set(self.coeffs) | set(other.coeffs):
            if m <= hi and self.coeffs.get(m, 0) != other.coeffs.get(m, 0):
                return False
        return True

    def as_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            if m == 0:
                parts.append(str(c))
            else:
                base = f"{self.var}^-{m}" if m > 0 else f"{self.var}^{-m}"
                parts.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentSeries({self.as_str()}; window<=+{self.hi})"


def laurent_compose(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    """Substitute the inverse variable of ``f`` by ``g``: sum_m f_m * g^m.

    ``f`` must have no negative retained exponents (negative powers of the
    inner series are not supported) and ``g`` must have strictly positive
    order.
    """
    if any(m < 0 for m in f.coeffs):
        raise ValueError("composition with negative powers of the inner variable")
    if g.order < 1 or g.lo < 1:
        raise ValueError("inner series must have strictly positive order")
    hi = (f.hi + 1) * g.lo - 1  # unknown tail of f enters only beyond this
    out = LaurentSeries(g.var, {}, 0, hi)
    if 0 in f.coeffs:
        out = out + LaurentSeries(g.var, {0: f.coeffs[0]}, 0, hi)
    gm = None
    for m in range(1, max(f.coeffs, default=0) + 1):
        gm = g if gm is None else gm * g
        if m in f.coeffs:
            t = gm.scale(f.coeffs[m])
            hi = min(hi, t.hi)
            out = LaurentSeries(out.var, out.coeffs, out.lo, hi) + t
    return out


def solve_disc(cap: int) -> LaurentSeries:
    """The unique solution u in x^-1 * Q[[x^-2]] of u^2 - x*u + 1 = 0.

    Computed by the contraction u <- (1 + u^2)/x; the coefficient of
    x^-(2k+1) is the k-th Catalan number.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    hi = 2 * cap + 1
    u = LaurentSeries("x", {1: 1}, 1, hi)
    for _ in range(cap + 1):
        u2 = LaurentSeries("x", (u * u).coeffs, 2, hi - 1)
        u = LaurentSeries("x", {1: 1}, 1, hi) + u2.shift(1)
    return u


# ---------------------------------------------------------------------------
# Univariate rational functions
# ---------------------------------------------------------------------------


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class RationalFn:
    """Quotient of dense univariate polynomials over Q, gcd-normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _poly_trim([_fr(c) for c in num])
        den = _poly_trim([_fr(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = _poly_gcd(num, den)
            if len(g) > 1:
                num = _poly_divmod(num, g)[0]
                den = _poly_divmod(den, g)[0]
        else:
            den = [Fraction(1)]
        lead = den[-1]
        if lead != 1:
            num = [c / lead for c in num]
            den = [c / lead for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def const(c) -> "RationalFn":
        return RationalFn([_fr(c)])

    @staticmethod
    def z() -> "RationalFn":
        return RationalFn([0, 1])

    def __add__(self, other):
        other = other if isinstance(other, RationalFn) else RationalFn.const(other)
        return RationalFn(
            _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den)),
            _poly_mul(self.den, other.den),
        )

    def __neg__(self):
        return RationalFn([-c for c in self.num], self.den)

    def __sub__(self, other):
        other = other if isinstance(other, RationalFn) else RationalFn.const(other)
        return self + (-other)

    def __mul__(self, other):
        other = other if isinstance(other, RationalFn) else RationalFn.const(other)
        return RationalFn(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    def __truediv__(self, other):
        other = other if isinstance(other, RationalFn) else RationalFn.const(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(_poly_mul(self.num, other.den), _poly_mul(self.den, other.num))

    def __eq__(self, other):
        return (
            isinstance(other, RationalFn) and self.num == other.num and self.den == other.den
        )

    def is_zero(self) -> bool:
        return not self.num

    def derivative(self) -> "RationalFn":
        def d(p):
            return _poly_trim([i * c for i, c in enumerate(p)][1:])

        return RationalFn(
            _poly_add(
                _poly_mul(d(self.num), self.den),
                [-c for c in _poly_mul(self.num, d(self.den))],
            ),
            _poly_mul(self.den, self.den),
        )

    def eval(self, x) -> Fraction:
        x = _fr(x)
        num = sum(c * x**i for i, c in enumerate(self.num))
        den = sum(c * x**i for i, c in enumerate(self.den))
        if den == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return num / den

    def shifted(self, a) -> Tuple[list, list]:
        """Numerator and denominator as polynomials in u where z = a + u."""
        a = _fr(a)

        def shift_safe(p):
            out = [Fraction(0)] * max(1, len(p))
            cur = [Fraction(1)]  # (a+u)^0
            for i, c in enumerate(p):
                if c:
                    for j, b in enumerate(cur):
                        out[j] += c * b
                nxt = [Fraction(0)] * (len(cur) + 1)
                for j, b in enumerate(cur):
                    nxt[j] += b * a
                    nxt[j + 1] += b
                cur = nxt
            return _poly_trim(out)

        return shift_safe(list(self.num)), shift_safe(list(self.den))

    def expand_at_infinity(self, var: str, hi: int) -> LaurentSeries:
        """Expansion in powers of 1/z, exact through exponent ``hi``."""
        # write num/den = z^(-k) * (a0 + a1/z + ...) / (b0 + b1/z + ...)
        dn, dd = len(self.num) - 1, len(self.den) - 1
        if dn < 0:
            return LaurentSeries.zero(var, hi)
        k = dd - dn
        a = list(reversed(self.num))
        b = list(reversed(self.den))
        inv = [Fraction(0)] * (hi + 1)
        inv[0] = 1 / b[0]
        for m in range(1, hi + 1):
            s = Fraction(0)
            for j in range(1, min(m, len(b) - 1) + 1):
                s += b[j] * inv[m - j]
            inv[m] = -s / b[0]
        prod = [Fraction(0)] * (hi + 1)
        for i, c in enumerate(a):
            if c and i <= hi:
                for m in range(hi + 1 - i):
                    prod[i + m] += c * inv[m]
        return LaurentSeries(var, {m + k: c for m, c in enumerate(prod) if c}, k, hi + k)

    def pole_order(self, a) -> int:
        """Order of the pole at z=a (0 if regular)."""
        a = _fr(a)
        nu, de = self.shifted(a)
        if not nu:
            return 0

        def val(p):
            for i, c in enumerate(p):
                if c:
                    return i
            return len(p)

        return max(0, val(de) - val(nu))

    def as_str(self, var: str = "z") -> str:
        def ps(p):
            if not p:
                return "0"
            parts = []
            for i, c in enumerate(p):
                if not c:
                    continue
                if i == 0:
                    parts.append(str(c))
                else:
                    v = var if i == 1 else f"{var}^{i}"
                    parts.append(v if c == 1 else f"{c}*{v}")
            return " + ".join(parts).replace("+ -", "- ")

        if self.den == (Fraction(1),):
            return ps(self.num)
        return f"({ps(self.num)}) / ({ps(self.den)})"

    def __repr__(self):
        return f"RationalFn({self.as_str()})"
