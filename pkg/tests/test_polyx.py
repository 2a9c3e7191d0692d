from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from eulerian_roots.polyx import (
    X,
    ExactPoly,
    certify_compatible_pair,
    certify_interlaces,
    certify_real_rooted,
    coeff_shape,
    factored_form,
    gamma_expansion,
    is_real_rooted,
    isolate_roots,
    parse_rational,
    poly_gcd,
    refine_to,
    squarefree_part,
    sturm_count,
)

P = ExactPoly
INF = float("inf")

int_polys = st.lists(st.integers(-50, 50), min_size=1, max_size=13).map(P)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def poly_with_roots(roots, lc=1):
    return P.from_roots(roots, lc)


# --- construction and arithmetic -------------------------------------------


def test_trailing_zeros_stripped():
    assert P((1, 2, 0, 0)).coeffs == (1, 2)
    assert P((0, 0)).is_zero() and P(()).degree == -1


def test_floats_rejected():
    with pytest.raises(TypeError):
        P((1.5, 2))
    with pytest.raises(TypeError):
        parse_rational(True)


def test_parse_and_str():
    f = P.parse("2,22,22,2")
    assert f == 2 * (X**3 + 11 * X**2 + 11 * X + 1)
    assert str(f) == "2x^3 + 22x^2 + 22x + 2"
    assert str(P((0, Fraction(1, 3)))) == "(1/3)x"
    assert P.parse("1/2, -3").coeffs == (Fraction(1, 2), -3)


def test_json_round_trip():
    f = P((Fraction(-7, 3), 0, 5))
    assert P.from_json(f.to_json()) == f
    assert f.to_json()["coeffs"] == ["-7/3", "0", "5"]


def test_ring_tag():
    assert P((1, 2)).ring == "ZZ"
    assert P((Fraction(1, 2),)).ring == "QQ"
    assert P((Fraction(4, 2),)).ring == "ZZ"


def test_dilate_and_derivative():
    f = P((1, 2, 3))
    assert f.dilate(2) == P((1, 4, 12))
    assert f.derivative() == P((2, 6))
    assert f(Fraction(1, 2)) == Fraction(11, 4)


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        P((1, 1)).exact_div(P((0, 1)))


@given(int_polys, int_polys)
def test_exact_product_division(f, g):
    assume(not g.is_zero())
    assert (f * g).exact_div(g) == f
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(int_polys, int_polys)
def test_divmod_identity(f, g):
    assume(not g.is_zero())
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree < g.degree


# --- Sturm counting ---------------------------------------------------------


def test_sturm_examples():
    assert sturm_count(P((-1, 0, 1)), -2, 2) == 2
    assert sturm_count(P((1, 0, 1))) == 0
    assert sturm_count(P((1, 1, 1)), -INF, INF) == 0


def test_sturm_half_open():
    f = P((-1, 0, 1))
    assert sturm_count(f, -1, 1) == 1
    assert sturm_count(f, 1, 2) == 0
    assert sturm_count(f, 0, 1) == 1


def test_sturm_zero_poly_errors():
    with pytest.raises(ValueError):
        sturm_count(P(()))


@settings(max_examples=60)
@given(st.lists(rationals, min_size=1, max_size=10), st.integers(1, 5))
def test_sturm_counts_constructed_roots(roots, lc):
    f = poly_with_roots(roots, lc)
    assert sturm_count(f) == len(set(roots))
    cert = certify_real_rooted(f)
    assert cert.is_real_rooted
    assert cert.real_root_count_with_multiplicity == len(roots)


@settings(max_examples=40)
@given(st.lists(rationals, min_size=1, max_size=8), rationals, rationals)
def test_sturm_interval_counts(roots, a, b):
    lo, hi = min(a, b), max(a, b)
    expected = len({r for r in roots if lo < r <= hi})
    assert sturm_count(poly_with_roots(roots), lo, hi) == expected


# --- real-rootedness and isolation ------------------------------------------


def test_real_rooted_examples():
    assert is_real_rooted(2 * (X**3 + 11 * X**2 + 11 * X + 1))
    assert not is_real_rooted(P((2, 0, 2)))
    cert = certify_real_rooted(P((7,)))
    assert cert.is_real_rooted and cert.real_root_count_with_multiplicity == 0


def test_isolate_simple():
    ivs = isolate_roots(P((-1, 0, 1)))
    assert [iv.exact_root for iv in ivs] == [-1, 1]
    assert all(iv.multiplicity == 1 for iv in ivs)


def test_isolate_double_root_at_zero():
    (iv,) = isolate_roots(X**2)
    assert iv.exact_root == 0 and iv.multiplicity == 2


def test_isolate_t40_roots():
    f = 2 * (X + 1) * (X**2 + 10 * X + 1)
    ivs = refine_to(f, isolate_roots(f), Fraction(1, 10**6))
    approx = [round(iv.approx(), 3) for iv in ivs]
    assert approx == [-9.899, -1.0, -0.101]


@settings(max_examples=40)
@given(st.lists(rationals, min_size=1, max_size=6), st.integers(1, 3))
def test_isolation_finds_every_root(roots, mult):
    f = poly_with_roots([r for r in roots for _ in range(mult)])
    ivs = isolate_roots(f)
    assert len(ivs) == len(set(roots))
    for r in set(roots):
        (iv,) = [iv for iv in ivs if iv.contains(r)]
        assert iv.multiplicity == mult * roots.count(r)


def test_gcd_and_squarefree():
    f = (X - 1) ** 2 * (X + 2)
    g = (X - 1) * (X + 3)
    assert poly_gcd(f, g) == X - 1
    assert squarefree_part(f) == (X - 1) * (X + 2)


# --- interlacing and compatibility ------------------------------------------


def test_interlacing_examples():
    assert certify_interlaces(X, X**2)
    t40 = 2 * (X + 1) * (X**2 + 10 * X + 1)
    assert certify_interlaces(t40, X * t40)
    assert not certify_interlaces(P((2,)), P((0, 0, 2)))


def test_interlacing_needs_real_roots():
    with pytest.raises(ValueError):
        certify_interlaces(P((1, 0, 1)), P((1, 0, 0, 1)))


def test_compatibility_examples():
    assert certify_compatible_pair(P((2,)), P((0, 2)))
    assert not certify_compatible_pair(P((2,)), P((0, 0, 2)))
    f = 2 * (X + 1) * (X + 3)
    assert certify_compatible_pair(f, f)


nonneg_real_rooted = st.tuples(
    st.lists(st.fractions(min_value=-12, max_value=0, max_denominator=6), min_size=0, max_size=6),
    st.integers(1, 4),
).map(lambda t: poly_with_roots(t[0], t[1]))


@settings(max_examples=80)
@given(nonneg_real_rooted, nonneg_real_rooted)
def test_interlacing_iff_dual_compatibility(f, g):
    assume(f.degree <= g.degree)
    lhs = certify_interlaces(f, g)
    rhs = certify_compatible_pair(f, g) and certify_compatible_pair(X * f, g)
    assert lhs == rhs


def test_alternation_order_matters():
    # roots of f must come first from the right
    f = X + 1           # root -1
    g = (X + 2) * X     # roots -2, 0
    assert certify_interlaces(f, g)
    assert not certify_interlaces(X + 3, g)


# --- gamma, shape, factored form --------------------------------------------


def test_gamma_examples():
    assert gamma_expansion(P((1, 2, 1))).gammas == (1, 0)
    assert gamma_expansion(P((1, 4, 1))).gammas == (1, 2)
    with pytest.raises(ValueError):
        gamma_expansion(P((1, 10, 4)))


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(0, 9))
def test_gamma_round_trip(gammas, degree):
    assume(gammas[0] != 0 and len(gammas) - 1 <= degree // 2)
    h = sum((g * X**i * (1 + X) ** (degree - 2 * i) for i, g in enumerate(gammas)), P(()))
    gv = gamma_expansion(h)
    assert gv.reconstruct() == h


def test_shape_examples():
    assert coeff_shape([1, 10, 4]) == (True, True)
    assert coeff_shape([1, 1, 1]) == (True, True)
    assert not coeff_shape([2, 0, 2]).unimodal


@settings(max_examples=60)
@given(nonneg_real_rooted)
def test_real_rooted_implies_log_concave(f):
    assert is_real_rooted(f)
    shape = coeff_shape(f.coeffs)
    assert shape.unimodal and shape.log_concave


def test_factored_form():
    assert factored_form(2 * X * (X + 3)) == "2x(x + 3)"
    assert factored_form(4 * X * (5 * X + 1) * (X + 1)) == "4x(5x + 1)(x + 1)"
    assert factored_form(3 * X + 1) == "3x + 1"
    assert factored_form(X**2 + 10 * X + 1) is None
