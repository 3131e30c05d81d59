"""Formal series layer: convolution ring, singular elements, characters."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from b2tensor import (
    LatticeSeries,
    OMEGA1,
    OMEGA2,
    Weight,
    denominator_product,
    dim_irrep,
    singular_element,
    weight_multiplicities,
)
from conftest import dominant_weights, weights


def small_series():
    return st.dictionaries(weights(span=6), st.integers(-4, 4), max_size=5).map(
        LatticeSeries
    )


@given(small_series(), small_series())
@settings(max_examples=60)
def test_convolution_commutes(a, b):
    assert a * b == b * a


@given(small_series(), small_series(), small_series())
@settings(max_examples=40)
def test_convolution_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_series())
def test_unit_and_zero(a):
    one = LatticeSeries.unit(Weight(0, 0))
    assert a * one == a
    assert a - a == LatticeSeries()
    assert not LatticeSeries()


@given(small_series(), st.integers(0, 4))
@settings(max_examples=30)
def test_power_is_repeated_product(a, n):
    prod = LatticeSeries.unit(Weight(0, 0))
    for _ in range(n):
        prod = prod * a
    assert a.power(n) == prod


def test_zero_coefficients_are_pruned():
    s = LatticeSeries({Weight(0, 0): 1}) + LatticeSeries({Weight(0, 0): -1})
    assert len(s) == 0 and s.coeff(Weight(0, 0)) == 0


def test_denominator_product_support():
    # the eight-term alternating product over the positive roots
    R = denominator_product()
    expect = {
        (0, 0): 1,
        (0, -1): -1,
        (-3, 0): -1,
        (-3, -1): 1,
        (-1, 1): -1,
        (-1, -2): 1,
        (-2, 1): 1,
        (-2, -2): -1,
    }
    assert dict(R.items()) == {Weight.make(a, b): c for (a, b), c in expect.items()}
    assert R == singular_element(Weight(0, 0))


def test_singular_element_has_eight_regular_terms():
    for lam in (Weight.make(1, 0), Weight.make(Fraction(1, 2), Fraction(1, 2)), Weight.make(3, 1)):
        s = singular_element(lam)
        assert len(s) == 8
        assert s.coeff(lam) == 1
        assert sorted(c for _, c in s.items()) == [-1] * 4 + [1] * 4


def test_singular_element_rejects_non_dominant():
    with pytest.raises(ValueError):
        singular_element(Weight.make(0, 1))


def test_vector_spinor_characters():
    vec = weight_multiplicities(OMEGA1)
    assert vec.mass() == 5
    assert vec.coeff(Weight(0, 0)) == 1
    sp = weight_multiplicities(OMEGA2)
    assert sp.mass() == 4
    assert all(c == 1 for _, c in sp.items())


def test_adjoint_character():
    ad = weight_multiplicities(Weight.make(1, 1))
    assert ad.mass() == 10
    assert ad.coeff(Weight(0, 0)) == 2  # rank of the algebra
    assert ad.coeff(Weight.make(1, 1)) == 1
    assert ad.coeff(Weight.make(1, 0)) == 1


@given(dominant_weights(span=8))
@settings(max_examples=25, deadline=None)
def test_character_mass_is_dimension_and_weyl_invariant(lam):
    ch = weight_multiplicities(lam)
    assert ch.mass() == dim_irrep(lam)
    assert ch.is_weyl_invariant()


@given(dominant_weights(span=6))
@settings(max_examples=20, deadline=None)
def test_character_times_denominator_is_singular_element(lam):
    assert weight_multiplicities(lam) * denominator_product() == singular_element(lam)


def test_series_json_round_trip():
    s = denominator_product()
    assert LatticeSeries.from_json_obj(s.to_json_obj()) == s
