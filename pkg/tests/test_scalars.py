from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistkit.scalars import Scalar, TruncationPolicy, pmul, ppow

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=17)


def test_constructors_normalize():
    s = Scalar(Fraction(2, 4), Fraction(0), (("kinv", 0), ("xi", 2)))
    assert s.re == Fraction(1, 2)
    assert s.params == (("xi", 2),)
    assert Scalar(0, 0, (("kinv", 3),)).params == ()


def test_addition_requires_matching_monomials():
    a = Scalar.param("kinv", 1)
    b = Scalar.param("xi", 1)
    with pytest.raises(ValueError):
        _ = a + b
    assert (a + a).re == 2


@given(rationals, rationals, rationals, rationals)
def test_gaussian_product_is_exact(ar, ai, br, bi):
    a = Scalar(ar, ai)
    b = Scalar(br, bi)
    p = a * b
    assert p.re == ar * br - ai * bi
    assert p.im == ar * bi + ai * br


def test_param_monomials_multiply_and_cancel():
    assert pmul((("kinv", 2),), (("kinv", -2),)) == ()
    assert pmul((("kinv", 1),), (("xi", 1),)) == (("kinv", 1), ("xi", 1))
    assert ppow((("kinv", 1), ("xi", 2)), 3) == (("kinv", 3), ("xi", 6))


def test_policy_defaults_and_idempotence():
    p = TruncationPolicy.default()
    assert p.bound("kinv") == 4 and p.bound("xi") == 2
    assert p.bound("c") is None
    assert p.allows((("kinv", 4),)) and not p.allows((("kinv", 5),))
    # negative (Laurent) exponents are never truncated
    assert p.allows((("c", -12),)) and p.allows((("c", 12),))
    # applying the policy twice is applying it once
    terms = [(("kinv", k),) for k in range(8)]
    once = [t for t in terms if p.allows(t)]
    twice = [t for t in once if p.allows(t)]
    assert once == twice


def test_policy_overrides():
    p = TruncationPolicy.default(kinv=1)
    assert p.bound("kinv") == 1
    assert p.with_orders(xi=5).bound("xi") == 5
