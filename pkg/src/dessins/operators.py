r"""Graded differential operators on truncated series.

An operator here is a *term generator*, not a stored infinite sum: given a
summary of the input support (maximal weighted degree and maximal t0
exponent) it yields the finitely many terms ``c * t^mu * d^nu`` that can act
nontrivially.  Finiteness of each action is a consequence of the grading,
and the generator interface enforces it structurally.

Available constructors:

* ``w1()``  -- the quadrivalent cut-and-join operator, homogeneous of
  degree +2:  (1/2) sum (i+1)(j+1) t_{i+1} t_{j+1} d_{i+j}
            + (1/2) sum (i+j+2) t_{i+j+2} d_i d_j.
* ``w0()``  -- the bivalent operator sum (i+1) t_{i+1} d_i, degree +1.
* ``p_plus() / p_minus()`` -- the two halves of ``w1()``.
* ``virasoro_l(i)`` -- L_i = -d_{i+2} + sum_j (j+1) t_{j+1} d_{i+j+1}
                             + sum_{k+l=i} d_k d_l, for i >= -1 (mixed
  grading: shifts -(i+2) and -i).
* ``constraint_c()`` -- C = -d_0 + 1.

``conjugate_shift(op, s)`` replaces every occurrence of d_0 by (d_0 + s),
expanded binomially; with s = 1 this removes t0 from the evolution, with
s = the marker ``t-`` it tracks the number of negative boundary components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from .series import MONO_ONE, Monomial, Poly

Ders = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class DiffTerm:
    """One term c * t^mono * prod d_i^e of a differential operator."""

    coeff: Fraction
    mono: Monomial
    ders: Ders

    @property
    def shift(self) -> int:
        return self.mono.degree - sum(i * e for i, e in self.ders)


@dataclass(frozen=True)
class Support:
    """What the generator needs to know about the polynomial being acted on."""

    max_deg: int
    max_t0: int


GenFn = Callable[[Support], Iterator[DiffTerm]]


@dataclass(frozen=True)
class DiffOp:
    name: str
    shifts: Tuple[int, ...]  # possible degree shifts of generated terms
    gen: GenFn

    def terms(self, support: Support) -> Iterator[DiffTerm]:
        return self.gen(support)

    @property
    def min_shift(self) -> int:
        return min(self.shifts)

    def __repr__(self):
        return f"DiffOp({self.name})"


def _dt(coeff, mono_exps: Dict, ders: Dict[int, int]) -> DiffTerm:
    return DiffTerm(
        Fraction(coeff),
        Monomial(mono_exps),
        tuple(sorted((i, e) for i, e in ders.items() if e)),
    )


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------


def _apply_ders_to_monomial(m: Monomial, ders: Ders) -> Tuple[Fraction, Monomial] | None:
    c = Fraction(1)
    exps = dict(m.exps)
    for i, e in ders:
        have = exps.get(i, 0)
        if have < e:
            return None
        for k in range(e):
            c *= have - k
        if have == e:
            del exps[i]
        else:
            exps[i] = have - e
    return c, Monomial(exps)


def apply(op: DiffOp, p: Poly, cap_d: int | None = None) -> Poly:
    """Exact truncated image of ``p`` under ``op``.

    If ``p`` carries a trust cap, it must extend far enough that every
    output degree <= cap_d is determined: cap(p) >= cap_d - min_shift(op).
    """
    if cap_d is not None and p.cap is not None and p.cap < cap_d - op.min_shift:
        raise ValueError(
            f"input trusted to degree {p.cap} but degree {cap_d - op.min_shift} needed"
        )
    support = Support(p.max_degree, p.max_t0)
    out: Dict[Monomial, Fraction] = {}
    for term in op.terms(support):
        for m, c in p.terms.items():
            hit = _apply_ders_to_monomial(m, term.ders)
            if hit is None:
                continue
            fc, dm = hit
            nm = dm.mul(term.mono)
            if cap_d is not None and nm.degree > cap_d:
                continue
            val = out.get(nm, Fraction(0)) + c * fc * term.coeff
            if val:
                out[nm] = val
            else:
                out.pop(nm, None)
    if p.cap is None:
        cap = cap_d
    else:
        cap = p.cap + op.min_shift if cap_d is None else min(cap_d, p.cap + op.min_shift)
    return Poly(out, cap)


def compose_apply(ops: Iterable[DiffOp], p: Poly, cap_d: int | None = None) -> Poly:
    """Apply operators right-to-left: ops = [a, b] computes a(b(p))."""
    ops = list(ops)
    for op in reversed(ops):
        p = apply(op, p, cap_d)
    return p


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def w0() -> DiffOp:
    def gen(s: Support) -> Iterator[DiffTerm]:
        yield _dt(1, {1: 1}, {0: 1})
        for i in range(1, s.max_deg + 1):
            yield _dt(i + 1, {i + 1: 1}, {i: 1})

    return DiffOp("W0", (1,), gen)


def p_plus() -> DiffOp:
    def gen(s: Support) -> Iterator[DiffTerm]:
        yield _dt(Fraction(1, 2), {1: 2}, {0: 1})  # k = 0 needs d_0
        for k in range(1, s.max_deg + 1):
            for i in range(0, k // 2 + 1):
                j = k - i
                c = Fraction((i + 1) * (j + 1), 2) * (1 if i == j else 2)
                mono = {i + 1: 2} if i == j else {i + 1: 1, j + 1: 1}
                yield _dt(c, mono, {k: 1})

    return DiffOp("P+", (2,), gen)


def p_minus() -> DiffOp:
    def gen(s: Support) -> Iterator[DiffTerm]:
        yield _dt(1, {2: 1}, {0: 2})  # i = j = 0
        for j in range(1, s.max_deg + 1):
            yield _dt(j + 2, {j + 2: 1}, {0: 1, j: 1})  # i = 0 or j = 0, combined
        for i in range(1, s.max_deg + 1):
            for j in range(i, s.max_deg + 1 - i):
                c = Fraction(i + j + 2, 2) * (1 if i == j else 2)
                yield _dt(c, {i + j + 2: 1}, {i: 2} if i == j else {i: 1, j: 1})

    return DiffOp("P-", (2,), gen)


def w1() -> DiffOp:
    pp, pm = p_plus(), p_minus()

    def gen(s: Support) -> Iterator[DiffTerm]:
        yield from pp.gen(s)
        yield from pm.gen(s)

    return DiffOp("W1", (2,), gen)


def virasoro_l(i: int) -> DiffOp:
    """The constraint operator L_i, i >= -1 (sign convention of the loop
    equation section, pinned by the Witt bracket test)."""
    if i < -1:
        raise ValueError("virasoro_l requires i >= -1")

    def gen(s: Support) -> Iterator[DiffTerm]:
        yield _dt(-1, {}, {i + 2: 1})
        for j in range(0, s.max_deg + 1):
            tgt = i + j + 1
            if tgt < 0:
                continue
            yield _dt(j + 1, {j + 1: 1}, {tgt: 1})
        for k in range(0, i + 1):
            l = i - k
            if k > l:
                break
            if k == l:
                yield _dt(1, {}, {k: 2})
            else:
                yield _dt(2, {}, {k: 1, l: 1})

    return DiffOp(f"L{i}", (-(i + 2), -i), gen)


def constraint_c() -> DiffOp:
    def gen(s: Support) -> Iterator[DiffTerm]:
        yield _dt(-1, {}, {0: 1})
        yield _dt(1, {}, {})

    return DiffOp("C", (0,), gen)


def scaled(op: DiffOp, c) -> DiffOp:
    c = Fraction(c)

    def gen(s: Support) -> Iterator[DiffTerm]:
        for t in op.gen(s):
            yield DiffTerm(t.coeff * c, t.mono, t.ders)

    return DiffOp(f"{c}*{op.name}", op.shifts, gen)


def op_sum(a: DiffOp, b: DiffOp, name: str | None = None) -> DiffOp:
    def gen(s: Support) -> Iterator[DiffTerm]:
        yield from a.gen(s)
        yield from b.gen(s)

    return DiffOp(name or f"{a.name}+{b.name}", tuple(sorted(set(a.shifts + b.shifts))), gen)


def from_terms(name: str, terms: List[DiffTerm], shifts: Tuple[int, ...] | None = None) -> DiffOp:
    """Operator with an explicit finite term list (used for matrix blocks)."""
    terms = tuple(terms)
    if shifts is None:
        shifts = tuple(sorted({t.shift for t in terms})) or (0,)

    def gen(s: Support) -> Iterator[DiffTerm]:
        return iter(terms)

    return DiffOp(name, shifts, gen)


# ---------------------------------------------------------------------------
# conjugation by exp(s * t0)
# ---------------------------------------------------------------------------


def conjugate_shift(op: DiffOp, s) -> DiffOp:
    """Replace every d_0 in ``op`` by (d_0 + s), expanded binomially.

    ``s`` is a scalar or a single-term polynomial in marker variables (1 for
    plain t0 removal, the marker ``t-`` for the genus-refined vacuum).
    """
    if isinstance(s, Poly):
        if len(s.terms) > 1:
            raise ValueError("conjugation shift must be a single term")
        items = list(s.terms.items())
        s_mono, s_coeff = items[0] if items else (MONO_ONE, Fraction(0))
    else:
        s_mono, s_coeff = MONO_ONE, Fraction(s)
    if s_mono.degree != 0:
        raise ValueError("conjugation shift must have weighted degree 0")

    def gen(sup: Support) -> Iterator[DiffTerm]:
        # conjugated d_0-terms can act on inputs with no t0 at all, so the
        # wrapped generator must see a t0 budget matching the operator.
        inner = Support(sup.max_deg, max(sup.max_t0, 2))
        for t in op.gen(inner):
            a = dict(t.ders).get(0, 0)
            if a == 0 or s_coeff == 0:
                yield t
                continue
            rest = tuple((i, e) for i, e in t.ders if i != 0)
            for k in range(a + 1):
                coeff = t.coeff * comb(a, k) * s_coeff**k
                mono = t.mono
                for _ in range(k):
                    mono = mono.mul(s_mono)
                ders = rest if k == a else rest + ((0, a - k),)
                yield DiffTerm(coeff, mono, tuple(sorted(ders)))

    return DiffOp(f"{op.name}'", op.shifts, gen)


def w1_reduced(marker: bool = False) -> DiffOp:
    """W1 conjugated to act on t0-free series (t- refined if ``marker``)."""
    s = Poly.marker("t-") if marker else 1
    return conjugate_shift(w1(), s)


def w0_reduced(marker: bool = False) -> DiffOp:
    s = Poly.marker("t-") if marker else 1
    return conjugate_shift(w0(), s)


# ---------------------------------------------------------------------------
# commutator verification
# ---------------------------------------------------------------------------


def basis_monomials(deg_cap: int, var_cap: int, t0_cap: int = 0) -> Iterator[Monomial]:
    """All monomials t^mu with weighted degree <= deg_cap, max index <= var_cap.

    t0 carries weight 0, so its powers are enumerated separately up to
    ``t0_cap``; the d_0-containing parts of the operators are only exercised
    with ``t0_cap`` > 0.
    """

    def rec(max_part: int, budget: int, acc: Dict[int, int]) -> Iterator[Monomial]:
        for a in range(t0_cap + 1):
            if a:
                yield Monomial({0: a, **acc})
            else:
                yield Monomial(dict(acc))
        for part in range(1, min(max_part, budget) + 1):
            acc[part] = acc.get(part, 0) + 1
            yield from rec(part, budget - part, acc)
            acc[part] -= 1
            if not acc[part]:
                del acc[part]

    yield from rec(min(var_cap, deg_cap), deg_cap, {})


def commutator_check(
    a: DiffOp,
    b: DiffOp,
    expect: DiffOp | None,
    scale: Fraction | int,
    deg_cap: int,
    var_cap: int,
    t0_cap: int = 2,
) -> List[Tuple[Monomial, Poly]]:
    """Residuals of (a b - b a - scale*expect) on basis monomials.

    Every application is exact (no truncation), so a nonzero residual is a
    genuine finding, not a cap artifact.
    """
    scale = Fraction(scale)
    residuals = []
    for m in basis_monomials(deg_cap, var_cap, t0_cap):
        p = Poly.term(m, 1)
        lhs = apply(a, apply(b, p)) - apply(b, apply(a, p))
        if expect is not None and scale != 0:
            lhs = lhs - apply(expect, p).scale(scale)
        if not lhs.is_zero():
            residuals.append((m, lhs))
    return residuals


def render_terms(op: DiffOp, support: Support) -> str:
    """Canonical text rendering of the generated terms (docs and tests)."""
    bits = []
    for t in sorted(op.terms(support), key=lambda t: (t.ders, t.mono.exps)):
        d = "".join(f"d{i}^{e}" if e > 1 else f"d{i}" for i, e in t.ders)
        m = t.mono.as_str()
        bits.append(f"{t.coeff}*{m}{'*' + d if d else ''}")
    return " + ".join(bits)
