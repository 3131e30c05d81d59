"""Fans, singular powers, the recursion that ties them together."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from b2tensor import (
    Weight,
    decomposition,
    denominator_product,
    fan_closed_form,
    fan_pairwise,
    fan_power_direct,
    fan_recursion_solve,
    fan_step_audit,
    fan_with_zero,
    singular_power_direct,
    singular_power_projected,
    spinor_singular_closed,
    vector_singular_closed,
)
from b2tensor.fans import _support_halo, diff_report, fan_line_structure, singular_power_as_sum


def test_pairwise_fan_has_seven_signed_shifts():
    fan = fan_pairwise()
    expect = {
        (0, 1): 1,
        (1, -1): 1,
        (1, 2): -1,
        (2, -1): -1,
        (2, 2): 1,
        (3, 0): 1,
        (3, 1): -1,
    }
    assert dict(fan.items()) == {Weight.make(a, b): c for (a, b), c in expect.items()}
    assert fan_with_zero(2).coeff(Weight(0, 0)) == -1


def test_fan_is_reflected_denominator_power():
    for p in (1, 2, 3, 4):
        assert fan_power_direct(p) == denominator_product().power(p - 1)
        assert fan_with_zero(p) == fan_power_direct(p).reflect().scale(-1)


@pytest.mark.parametrize("module", [1, 2])
def test_fan_identity_series(module):
    for p in range(1, 6):
        lhs = fan_power_direct(p) * singular_power_direct(module, p)
        assert lhs == singular_power_projected(module, p)


def test_fan_identity_pointwise_source_inclusive():
    p = 2
    fan = fan_with_zero(p)
    for module in (1, 2):
        phi = singular_power_direct(module, p)
        pi = singular_power_projected(module, p)
        for w in _support_halo(pi):
            assert pi.coeff(w) + sum(c * phi.coeff(w + g) for g, c in fan.items()) == 0


def test_direct_singular_element_is_sum_of_singular_elements():
    for mod in ("vector", "spinor"):
        r = decomposition(mod, 3)
        assert singular_power_as_sum(r) == singular_power_direct(mod, 3)


def test_phi_and_pi_differ():
    # the closed forms evaluate Pi, not Phi: at (0,1) doubled (0,2) the two
    # disagree already at p=2 for the vector module
    w = Weight.make(0, 1)
    assert singular_power_direct(1, 2).coeff(w) == 0
    assert singular_power_projected(1, 2).coeff(w) == 2


def test_fan_closed_form_matches_direct():
    for p in range(1, 5):
        truth = fan_with_zero(p)
        for w in _support_halo(truth):
            if w.d1 % 2 or w.d2 % 2:
                continue
            assert fan_closed_form(p, w.d1 // 2, w.d2 // 2) == truth.coeff(w)


def test_vector_singular_closed_matches_projected():
    for p in range(1, 5):
        truth = singular_power_projected(1, p)
        for w in _support_halo(truth):
            assert vector_singular_closed(p, w) == truth.coeff(w)


def test_spinor_singular_closed_matches_projected():
    for p in range(1, 6):
        truth = singular_power_projected(2, p)
        for w in _support_halo(truth):
            assert spinor_singular_closed(p, w) == truth.coeff(w)


def test_off_coset_points_are_zero():
    assert vector_singular_closed(2, Weight.make(Fraction(1, 2), Fraction(1, 2))) == 0
    assert spinor_singular_closed(2, Weight.make(Fraction(1, 2), Fraction(1, 2))) == 0
    assert spinor_singular_closed(3, Weight.make(1, 0)) == 0


def test_diff_reports_document_printed_formulas():
    assert diff_report("fan", 1) == [{"point": "0,0", "printed": "0", "direct": "-1"}]
    for kind, count in (("fan", 8), ("vector", 32), ("spinor", 33)):
        rows = diff_report(kind, 2)
        assert len(rows) == count
        for r in rows:
            assert int(r["printed"]) != int(r["direct"])


def test_line_structure_is_previous_binomial_row():
    from math import comb

    for p in (2, 3, 4, 5, 6):
        got = fan_line_structure(p)
        assert got == [(t, (-1) ** t * comb(p - 1, t)) for t in range(p)] + [(p, 0)]


@pytest.mark.parametrize("module", ["vector", "spinor"])
def test_fan_recursion_solves_to_oracle(module):
    for p in range(0, 7):
        assert fan_recursion_solve(module, p).to_result() == decomposition(module, p)


def test_step_audit_worked_example():
    audit = fan_step_audit("vector", 5, Weight.make(3, 1))
    assert audit == {"lines": [(0, 20), (1, -48), (2, 14)], "singular": 20, "total": 6}


@given(st.integers(2, 5))
@settings(max_examples=4, deadline=None)
def test_step_audit_totals_equal_multiplicity(p):
    from b2tensor import m_extended

    for nu, want in decomposition("vector", p).multiplicities:
        audit = fan_step_audit("vector", p, nu)
        assert audit["total"] == want == m_extended("vector", p, nu)


def test_singular_contribution_at_known_weight():
    for p in range(2, 8):
        assert singular_power_projected(1, p).coeff(Weight.make(p - 2, 1)) == p * (p - 1)
