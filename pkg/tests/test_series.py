from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dessins.series import (
    LaurentSeries,
    Monomial,
    Poly,
    RationalFn,
    laurent_compose,
    parse_poly,
    poly_exp,
    poly_log,
    poly_mul,
    solve_disc,
)


def P(*pairs, cap=None):
    return parse_poly(pairs, cap)


coeffs = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4)
)
monomials = st.dictionaries(
    st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=3), max_size=3
)
polys = st.lists(st.tuples(monomials, coeffs), max_size=5).map(lambda ps: parse_poly(ps))


def test_monomial_degree_and_parts():
    m = Monomial({1: 2, 3: 1, "t-": 2})
    assert m.degree == 5
    assert m.n_parts == 3
    assert m.partition() == (1, 1, 3)
    assert Monomial({0: 4}).degree == 0


def test_poly_mul_examples():
    t1 = Poly.var(1)
    assert poly_mul(t1, t1, 4) == P(({1: 2}, 1))
    a = P(({}, 1), ({2: 1}, 1))
    b = P(({}, 1), ({2: 1}, -1))
    assert poly_mul(a, b, 4) == P(({}, 1), ({2: 2}, -1))


def test_poly_mul_derived_square():
    # (t2 + t1^2/2)^2 expanded directly
    p = P(({2: 1}, 1), ({1: 2}, Fraction(1, 2)))
    sq = poly_mul(p, p, 4)
    assert sq == P(({2: 2}, 1), ({1: 2, 2: 1}, 1), ({1: 4}, Fraction(1, 4)))


def test_poly_mul_cap_precondition():
    a = Poly.var(1, cap=2)
    with pytest.raises(ValueError):
        poly_mul(a, Poly.var(1), 4)


def test_exp_log_examples():
    assert poly_exp(Poly.zero(), 5) == Poly.one(5)
    p = P(({2: 1}, 1), ({1: 2}, Fraction(1, 2)))
    assert poly_log(poly_exp(p, 6), 6) == Poly(p.terms, 6)
    e = poly_exp(Poly.var(1), 3)
    assert e == P(
        ({}, 1), ({1: 1}, 1), ({1: 2}, Fraction(1, 2)), ({1: 3}, Fraction(1, 6)), cap=3
    )


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        poly_exp(Poly.one(), 4)
    with pytest.raises(ValueError):
        poly_log(Poly.var(1), 4)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=5))
@settings(max_examples=60, deadline=None)
def test_truncation_coherence(a, d_big, d_small_raw):
    d_small = min(d_small_raw, d_big)
    big = (a * a).truncate(d_big) if a.cap is None else a * a
    assert (a * a).truncate(d_big).truncate(d_small) == (a * a).truncate(d_small)


@given(polys)
@settings(max_examples=40, deadline=None)
def test_log_exp_roundtrip(p):
    p = Poly({m: c for m, c in p.terms.items() if m.degree >= 1}, None)
    cap = 6
    assert poly_log(poly_exp(p, cap), cap) == Poly(p.terms, cap).truncate(cap)


def test_rendering_is_graded_lex():
    p = P(({1: 2}, Fraction(3, 2)), ({2: 1}, 1), ({}, -1))
    assert p.as_str() == "-1 + 3/2*t1^2 + t2"


def test_solve_disc_catalan():
    u = solve_disc(7)
    assert [u.coeff(2 * k + 1) for k in range(5)] == [1, 1, 2, 5, 14]
    assert u.coeff(2) == 0


def test_solve_disc_quadratic_identity():
    u = solve_disc(6)
    residue = (u * u) - u.shift(-1) + LaurentSeries("x", {0: 1}, 0, (u * u).hi)
    assert residue.is_zero_on_window()
    assert residue.hi >= 10


def test_laurent_window_rules():
    f = LaurentSeries("x", {1: 1, 3: 1}, 1, 5)
    g = LaurentSeries("x", {2: 1}, 2, 6)
    h = f * g
    assert h.lo == 3 and h.hi == 7
    assert h.coeff(3) == 1 and h.coeff(5) == 1


def test_laurent_compose_identity_and_square():
    g = solve_disc(5)
    f = LaurentSeries("y", {1: 1}, 1, 6)
    assert laurent_compose(f, g) == g
    f2 = LaurentSeries("y", {2: 1}, 2, 6)
    assert laurent_compose(f2, g) == g * g


def test_laurent_compose_rejects_negative_inner_powers():
    g = solve_disc(4)
    f = LaurentSeries("y", {1: 1, -1: 1}, -1, 4)
    with pytest.raises(ValueError):
        laurent_compose(f, g)
    const = LaurentSeries("y", {0: 1}, 0, 4)
    bad_inner = LaurentSeries("x", {0: 1, 1: 1}, 0, 4)
    with pytest.raises(ValueError):
        laurent_compose(const, bad_inner)


def test_rational_fn_normalization_and_expansion():
    # (z^2 - 1)/(z - 1) reduces to z + 1
    f = RationalFn([-1, 0, 1]) / RationalFn([-1, 1])
    assert f == RationalFn([1, 1])
    g = RationalFn([1]) / RationalFn([-1, 0, 1])  # 1/(z^2 - 1)
    s = g.expand_at_infinity("z", 8)
    assert s.coeff(2) == 1 and s.coeff(4) == 1 and s.coeff(3) == 0
    assert g.pole_order(1) == 1 and g.pole_order(2) == 0


def test_rational_fn_derivative():
    f = RationalFn([0, 1]) / RationalFn([1, 1])  # z/(1+z)
    assert f.derivative() == RationalFn([1]) / RationalFn([1, 2, 1])


laurents = st.builds(
    lambda d, lo: LaurentSeries("x", {lo + k: v for k, v in d.items()}, lo, lo + 6),
    st.dictionaries(st.integers(min_value=0, max_value=6), coeffs, max_size=4),
    st.integers(min_value=-2, max_value=3),
)


@given(laurents, laurents)
@settings(max_examples=60, deadline=None)
def test_laurent_mul_window_exactness(f, g):
    # coefficients inside the product window agree with the full convolution
    h = f * g
    for m in range(f.lo + g.lo, h.hi + 1):
        brute = sum(
            (f.coeffs.get(i, Fraction(0)) * g.coeffs.get(m - i, Fraction(0))
             for i in range(f.lo, m - g.lo + 1)),
            Fraction(0),
        )
        assert h.coeffs.get(m, Fraction(0)) == brute
