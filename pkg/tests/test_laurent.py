import pytest
from hypothesis import given, strategies as st

from virtspan.laurent import (
    DELTA,
    LaurentPoly,
    ZERO,
    ZeroPolynomialError,
    add,
    max_degree,
    min_degree,
    monomial,
    mul,
    span,
)

A = monomial(1, 1)
Ainv = monomial(1, -1)

polys = st.dictionaries(
    st.integers(-12, 12), st.integers(-50, 50), max_size=6
).map(LaurentPoly)
nonzero_polys = polys.filter(bool)


def test_add_examples():
    assert add(monomial(1, 2), monomial(-1, 2)) == ZERO
    assert add(A + Ainv, A) == LaurentPoly({1: 2, -1: 1})
    assert add(DELTA, monomial(1, 2)) == monomial(-1, -2)


def test_mul_examples():
    assert mul(DELTA, DELTA) == LaurentPoly({4: 1, 0: 2, -4: 1})
    assert mul(monomial(1, 3), monomial(1, -3)) == LaurentPoly({0: 1})
    assert mul(DELTA, ZERO) == ZERO


def test_monomial_examples():
    assert monomial(1, 0).coefficients == {0: 1}
    assert monomial(-1, 3).coefficients == {3: -1}
    assert monomial(0, 5).is_zero()
    assert dict(monomial(0, 5).coefficients) == {}


def test_degrees_and_span():
    assert span(monomial(-1, 3)) == 0
    p = LaurentPoly({4: -1, -4: -1})
    assert (max_degree(p), min_degree(p), span(p)) == (4, -4, 8)
    for f in (span, max_degree, min_degree):
        with pytest.raises(ZeroPolynomialError):
            f(ZERO)


def test_canonical_form_drops_zero_coefficients():
    p = LaurentPoly({1: 0, 2: 3, -1: 0})
    assert dict(p.coefficients) == {2: 3}
    assert LaurentPoly([(1, 2), (1, -2)]) == ZERO


def test_str_and_pairs():
    assert str(LaurentPoly({4: -1, -4: -1})) == "-A^4 - A^-4"
    assert str(LaurentPoly({1: 2, -1: 1})) == "2A + A^-1"
    assert str(LaurentPoly({0: -3, 2: 1})) == "A^2 - 3"
    assert str(ZERO) == "0"
    p = LaurentPoly({3: 1, -5: -2, 0: 7})
    assert p.to_pairs() == [[-5, -2], [0, 7], [3, 1]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_large_coefficients_stay_exact():
    big = monomial(2 ** 62, 0)
    assert (big * big * big)[0] == 2 ** 186
    assert (big + big)[0] == 2 ** 63


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({1: 0.5})
    with pytest.raises(TypeError):
        monomial(1, 1.0)


def test_powers():
    assert DELTA ** 0 == LaurentPoly({0: 1})
    assert DELTA ** 3 == DELTA * DELTA * DELTA
    assert A ** -2 == monomial(1, -2)
    assert monomial(-1, 1) ** -3 == monomial(-1, -3)
    with pytest.raises(ValueError):
        DELTA ** -1


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p - p == ZERO


@given(polys, polys)
def test_results_are_canonical(p, q):
    for res in (p + q, p * q, p - q):
        assert 0 not in res.coefficients.values()
        assert LaurentPoly(res.coefficients) == res
        assert list(res.coefficients) == sorted(res.coefficients)


@given(nonzero_polys, st.integers(-20, 20).filter(bool), st.integers(-10, 10))
def test_span_additive_on_monomial_products(p, c, e):
    m = monomial(c, e)
    assert span(m * p) == span(p) + span(m)
    assert max_degree(m * p) == max_degree(p) + e


@given(polys)
def test_hash_consistent_with_eq(p):
    q = LaurentPoly(dict(p.coefficients))
    assert p == q and hash(p) == hash(q)
