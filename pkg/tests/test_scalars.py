from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ckquant.scalars import (I, ONE, ZERO, GaussQ, HyperScalar, IndefiniteLimit, NotInvertible,
                             ParamMonomial, ParamValue, TruncationInsufficient, contract_scalar,
                             format_scalar, hyper_normalize, required_order, union)
from strategies import gauss, hyper, hyper_monomials, monomials, nonzero_gauss

MANY = settings(max_examples=1000, deadline=None)


# -- Gaussian rationals ------------------------------------------------------

@MANY
@given(gauss, gauss, gauss)
def test_gauss_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + GaussQ(0) == a and a * GaussQ(1) == a
    assert a - a == GaussQ(0)


@MANY
@given(nonzero_gauss)
def test_gauss_inverse(a):
    assert a * a.inverse() == GaussQ(1)


def test_i_squared():
    assert I * I == GaussQ(-1)


# -- the scalar ring -----------------------------------------------------------

@MANY
@given(hyper(), hyper(), hyper())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert (a - a).is_zero()


@MANY
@given(hyper_monomials())
def test_monomial_inverse(m):
    assert m * m.inverse() == ONE


def test_inverse_of_sum_refused():
    with pytest.raises(NotInvertible):
        (ONE + HyperScalar.s()).inverse()


def test_half_angle_identities():
    s, ch = HyperScalar.s(), HyperScalar.ch()
    assert ch * ch - s * s == ONE
    assert HyperScalar.cosh_full() == ONE + s * s * 2
    assert HyperScalar.sinh_full() == s * ch * 2
    assert HyperScalar.cosh_full() ** 2 - HyperScalar.sinh_full() ** 2 == ONE


def test_parser_agrees_with_constructors():
    assert hyper_normalize("cosh(Jv)**2 - sinh(Jv)**2") == ONE
    assert hyper_normalize("2*sinh(Jv/2)*cosh(Jv/2)") == HyperScalar.sinh_full()
    assert hyper_normalize("i*j1^2/T") == HyperScalar.const(I) * HyperScalar.param(1, 2) \
        * HyperScalar.unit("T", -1)
    with pytest.raises(NotInvertible):
        hyper_normalize("1/(1 + s)")


def test_format_is_deterministic():
    x = hyper_normalize("j2*s + 3*ch - i*v/c")
    assert format_scalar(x) == format_scalar(hyper_normalize("-i*v/c + 3*ch + j2*s"))


# -- union monoid --------------------------------------------------------------

@MANY
@given(monomials, monomials, monomials)
def test_union_monoid(a, b, c):
    e = ParamMonomial()
    assert union(a, b) == union(b, a)
    assert union(union(a, b), c) == union(a, union(b, c))
    assert union(a, e) == a
    assert union(a, a) == a
    assert a.divides(union(a, b))


# -- contraction of scalars ----------------------------------------------------

J_NEWTON = ParamMonomial(((1, 2), (2, 2)))
NEWTON = {1: ParamValue(HyperScalar.unit("jt") * HyperScalar.unit("T", -1)),
          2: ParamValue(HyperScalar.const(I), "c"), 3: ParamValue(ONE), 4: ParamValue(ONE)}
CARROLL = {1: ParamValue(HyperScalar.unit("jt"), "R"), 2: ParamValue(ONE),
           3: ParamValue(ONE), 4: ParamValue(ONE, "j4")}
J_CARROLL = ParamMonomial(((1, 2), (4, 1)))


def test_sinh_over_contracted_param_has_finite_limit():
    # sinh(Jv) / j2^2 -> J v / j2^2 = j1^2 v = jt^2 v / T^2
    x = HyperScalar.sinh_full() * HyperScalar.param(2, -2)
    got = contract_scalar(x, NEWTON, J_NEWTON)
    assert got == hyper_normalize("jt^2*v/T^2")


def test_negative_degree_is_indefinite():
    with pytest.raises(IndefiniteLimit):
        contract_scalar(HyperScalar.param(2, -1), NEWTON, J_NEWTON)


def test_truncation_bound_enforced():
    x = HyperScalar.s() * HyperScalar.param(2, -6)
    need = required_order(x, NEWTON, J_NEWTON)
    assert need == 3
    with pytest.raises(TruncationInsufficient):
        contract_scalar(x, NEWTON, J_NEWTON, order=need - 1)


def _limit_or_error(x, assignment, J, order):
    try:
        return contract_scalar(x, assignment, J, order)
    except IndefiniteLimit as exc:
        return ("indefinite", tuple(sorted(exc.degree.items())))


@MANY
@given(hyper(max_terms=3), st.sampled_from([(NEWTON, J_NEWTON), (CARROLL, J_CARROLL)]))
def test_truncation_order_independence(x, case):
    assignment, J = case
    bound = required_order(x, assignment, J)
    assert _limit_or_error(x, assignment, J, bound) == _limit_or_error(x, assignment, J, bound + 2)


def test_exact_rational_series_coefficients():
    # cosh(Jv) - 1 over j2^4 keeps the (Jv)^2/2 term
    x = (HyperScalar.cosh_full() - ONE) * HyperScalar.param(2, -4)
    got = contract_scalar(x, NEWTON, J_NEWTON)
    assert got == hyper_normalize("jt^4*v^2/T^4") * HyperScalar.const(Fraction(1, 2))
