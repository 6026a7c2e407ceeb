import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asm_identities.arith import (
    LaurentPoly,
    PolyRing,
    distinct_rationals,
    interpolate,
    poly_add,
    poly_equal,
    poly_eval,
    poly_mul,
    poly_pow,
    rand_rational,
    sparse_exponents,
)
from asm_identities.errors import (
    ContextMismatch,
    ResampleExhausted,
    UnassignedVariable,
    ZeroToNegativePower,
)

R = PolyRing(["lam", "x", "y"])
lam, x, y = R.gens()


def test_additive_inverse_is_empty():
    p = poly_add(x, -x)
    assert p.is_zero() and len(p) == 0 and p == R.zero


def test_add_collects_like_terms():
    assert (x + y) + (x - y) == 2 * x


def test_add_lambda_weights():
    # lam(1+lam) + lam^3(1+lam), expanded by hand
    p = lam * (1 + lam) + lam ** 3 * (1 + lam)
    assert dict(p.terms) == {(1, 0, 0): 1, (2, 0, 0): 1, (3, 0, 0): 1, (4, 0, 0): 1}


def test_mul_laurent_cancellation():
    xinv = R.monomial([0, -1, 0])
    assert poly_mul(x, xinv) == R.one


def test_mul_hand_expansion():
    p = (x + lam * y) * (y + lam * x)
    expected = x * y + lam * x ** 2 + lam * y ** 2 + lam ** 2 * x * y
    assert p == expected
    assert dict(p.terms) == {(0, 1, 1): 1, (1, 2, 0): 1, (1, 0, 2): 1, (2, 1, 1): 1}


def test_mul_by_zero():
    assert (x + y) * R.zero == R.zero


def test_powers():
    assert poly_pow(1 + lam, 0) == R.one
    assert dict(poly_pow(1 + lam, 2).terms) == {(0, 0, 0): 1, (1, 0, 0): 2, (2, 0, 0): 1}
    assert poly_pow(x + y, 3) == x ** 3 + 3 * x ** 2 * y + 3 * x * y ** 2 + y ** 3
    with pytest.raises(ValueError):
        x ** -1


def test_eval_examples():
    q = x * R.monomial([0, 0, -1])
    assert poly_eval(q, {"x": 3, "y": 2}) == Fraction(3, 2)
    assert poly_eval(x + lam * y, {"x": 1, "y": 1, "lam": -1}) == 0
    with pytest.raises(ZeroToNegativePower):
        poly_eval(q, {"x": 1, "y": 0})
    with pytest.raises(UnassignedVariable):
        poly_eval(q, {"x": 1})


def test_eval_accepts_indices_and_ignores_unused():
    assert (x + 1).evaluate({1: 4}) == 5
    assert R.one.evaluate({}) == 1


def test_equal():
    assert poly_equal((x + y) ** 2, x ** 2 + 2 * x * y + y ** 2)
    assert not poly_equal(x, y)
    with pytest.raises(ContextMismatch):
        poly_equal(x, PolyRing(["x"]).gen(0))


def test_constructor_canonicalizes():
    p = LaurentPoly(["a", "b"], {(1, 0): 2, (0, 1): 0, (2, -1): Fraction(0)})
    assert dict(p.terms) == {(1, 0): 2}
    assert sparse_exponents((2, 0, -1)) == {0: 2, 2: -1}
    with pytest.raises(TypeError):
        LaurentPoly(["a"], {(1,): 0.5})
    with pytest.raises(ValueError):
        LaurentPoly(["a"], {(1, 2): 1})


def test_rescale():
    p = x * y ** 2 - R.monomial([0, 0, -1])
    assert p.rescale({"y": -1}) == x * y ** 2 + R.monomial([0, 0, -1])


def test_str_roundtrip_is_readable():
    assert str(R.zero) == "0"
    assert "lam" in str(1 + lam)


# sampling

def test_rand_rational_deterministic_and_bounded():
    a = [rand_rational(random.Random(5)) for _ in range(3)]
    b = [rand_rational(random.Random(5)) for _ in range(3)]
    assert a == b
    rng = random.Random(1)
    for _ in range(500):
        v = rand_rational(rng)
        assert abs(v.numerator) <= 1000 and 1 <= v.denominator <= 100


def test_rand_rational_avoidance():
    rng = random.Random(2)
    for _ in range(200):
        assert rand_rational(rng, num_bound=1, den_bound=1, reject=lambda v: v == 0) != 0


def test_rand_rational_exhausted():
    with pytest.raises(ResampleExhausted):
        rand_rational(random.Random(0), reject=lambda v: True, retries=0)


def test_distinct_rationals():
    vs = distinct_rationals(random.Random(3), 8)
    assert len(set(vs)) == 8 and 0 not in vs


def test_interpolate_recovers_coefficients():
    coeffs = [Fraction(3), Fraction(-1, 2), Fraction(0), Fraction(7)]
    nodes = [0, 1, 2, 5]
    values = [sum(c * t ** k for k, c in enumerate(coeffs)) for t in nodes]
    assert interpolate(nodes, values) == coeffs
    with pytest.raises(ValueError):
        interpolate([1, 1], [0, 0])


# property suites

S = PolyRing(["a", "b", "c"])
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
exps = st.tuples(*(st.integers(-3, 3),) * 3)
polys = st.dictionaries(exps, coeffs, max_size=6).map(S.from_terms)
points = st.tuples(*(st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool),) * 3)


def assert_canonical(p):
    assert all(c != 0 for c in p.terms.values())
    assert all(len(k) == 3 for k in p.terms)


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == S.zero
    for v in (p + q, p * q, p * (q + r), p - q):
        assert_canonical(v)


@settings(max_examples=200, deadline=None)
@given(polys, polys, points)
def test_evaluation_homomorphism(p, q, pt):
    at = dict(zip("abc", pt))
    assert (p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at)
    assert (p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at)
