"""Correction-term identities, d3 certificates, and the degree-window criteria."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactsurgery.errors import ConditionViolation
from contactsurgery.gauge import (
    MoyVerdict,
    d3_canonical,
    d3_contact,
    dedekind_context,
    degree_representative,
    fillability_verdict,
    moy_check,
    omega_red_closed,
    omega_red_long,
)
from contactsurgery.homology import spinc_offset


def admissible_rotations(alpha, sign):
    low = -alpha + (1 if sign == 1 else 0)
    high = alpha - (0 if sign == 1 else 1)
    return [r for r in range(low, high + 1) if (r - alpha) % 2 == 0]


@st.composite
def admissible_inputs(draw, max_g=3, max_extra=4, max_alpha=12):
    g = draw(st.integers(1, max_g))
    n = 2 * g + draw(st.integers(0, max_extra))
    alpha = draw(st.integers(1, max_alpha))
    sign = draw(st.sampled_from((1, -1)))
    r = draw(st.sampled_from(admissible_rotations(alpha, sign)))
    return g, n, alpha, sign, r


class TestDedekindContext:
    def test_anchor(self):
        # [DERIVED] l = 3, rho = (1*2 - 0)/6 = 1/3, gamma = 0,
        # S(1,1) = 3/12 - 1/4 = 0, F = 1/3, S_rho = (1 - 3 + 2)/12 = 0
        c = dedekind_context(1, 2, 1, 1, 1)
        assert c.l == 3
        assert c.rho == Fraction(1, 3)
        assert c.gamma == 0
        assert c.S == 0
        assert c.F_rho == Fraction(1, 3)
        assert c.S_rho == 0

    def test_dedekind_sum_value(self):
        # [DERIVED] S(1,3) = 11/36 - 9/36 = 1/18
        assert dedekind_context(1, 2, 3, 1, 1).S == Fraction(1, 18)

    def test_gamma_vanishes_at_low_rotation(self):
        # gamma = (r + alpha - 2)/2 is zero exactly at r = 2 - alpha
        assert dedekind_context(1, 2, 5, 1, -3).gamma == 0

    @settings(max_examples=80)
    @given(admissible_inputs())
    def test_rho_strictly_interior(self, params):
        c = dedekind_context(*params)
        assert 0 < c.rho < 1

    def test_rejects_inadmissible(self):
        with pytest.raises(ConditionViolation):
            dedekind_context(1, 2, 1, 1, -1)
        with pytest.raises(ConditionViolation):
            dedekind_context(0, 0, 1, 1, 1)


class TestOmegaRed:
    def test_long_anchor(self):
        # [DERIVED] 1/2 - 1/2 + 3*(1/3)*(2/3) - 1/3 + 0 + 0 + 1/3 + 0 = 2/3
        assert omega_red_long(1, 2, 1, 1, 1) == Fraction(2, 3)

    def test_closed_anchor(self):
        # [DERIVED] -(0 - 2 + 0)/12 + 1/2 = 2/3
        assert omega_red_closed(1, 2, 1, 1, 1) == Fraction(2, 3)
        # [DERIVED] -(0 - 2 + 0)/28 + 1/2 = 4/7
        assert omega_red_closed(1, 2, 3, 1, 1) == Fraction(4, 7)

    def test_both_signs_agree_at_lowest_framing(self):
        # at n = 2g the cross term vanishes, so r and sign enter squared
        assert omega_red_long(1, 2, 1, -1, -1) == Fraction(2, 3)
        assert omega_red_closed(1, 2, 1, -1, -1) == Fraction(2, 3)

    def test_central_value(self):
        # [TRIVIAL] r = 0 at n = 2g kills the numerator entirely
        assert omega_red_closed(1, 2, 2, 1, 0) == Fraction(1, 2)
        assert omega_red_closed(2, 4, 4, 1, 0) == Fraction(3, 2)

    def test_long_off_center(self):
        # [DERIVED] by hand: rho = 9/16, gamma = 1, S = 1/18, F = 25/48,
        # S_rho = -1/9, total 225/144 = 25/16; closed form
        # -(3 - 5 - 2)/64 + 3/2 gives the same
        assert omega_red_long(2, 5, 3, -1, 1) == Fraction(25, 16)
        assert omega_red_closed(2, 5, 3, -1, 1) == Fraction(25, 16)

    @settings(max_examples=120)
    @given(admissible_inputs())
    def test_routes_agree(self, params):
        assert omega_red_long(*params) == omega_red_closed(*params)

    def test_identity_on_grid(self):
        for g in (1, 2):
            for n in range(2 * g, 2 * g + 3):
                for alpha in range(1, 9):
                    for sign in (1, -1):
                        for r in admissible_rotations(alpha, sign):
                            assert omega_red_long(g, n, alpha, sign, r) == omega_red_closed(
                                g, n, alpha, sign, r
                            )


class TestD3:
    def test_contact_values(self):
        assert d3_contact(1, 2, 1, 1, 1).value == Fraction(1, 3)
        assert d3_contact(1, 2, 3, 1, 1).value == Fraction(3, 7)
        assert d3_contact(1, 2, 1, 1, 1).of == "contact"

    def test_canonical_values(self):
        assert d3_canonical(1, 2, 1, 1, 1).value == Fraction(-8, 3)
        assert d3_canonical(1, 2, 3, 1, 1).value == Fraction(-18, 7)
        assert d3_canonical(1, 2, 1, 1, 1).of == "canonical"

    def test_canonical_at_zero_rotation(self):
        # [DERIVED] omega = (2g-1)/2 at r = 0, so d3_canonical = -(2g+3)/2
        assert d3_canonical(1, 2, 2, 1, 0).value == Fraction(-5, 2)
        assert d3_canonical(2, 4, 4, 1, 0).value == Fraction(-7, 2)

    def test_gap_law_on_grid(self):
        for g in (1, 2):
            for n in range(2 * g, 2 * g + 3):
                for alpha in range(1, 9):
                    for sign in (1, -1):
                        for r in admissible_rotations(alpha, sign):
                            gap = (
                                d3_contact(g, n, alpha, sign, r).value
                                - d3_canonical(g, n, alpha, sign, r).value
                            )
                            assert gap == 2 * g + 1

    @settings(max_examples=80)
    @given(admissible_inputs())
    def test_gap_law_random(self, params):
        g = params[0]
        gap = d3_contact(*params).value - d3_canonical(*params).value
        assert gap == 2 * g + 1


class TestDegreeRepresentative:
    def test_anchor(self):
        # [DERIVED] coset 5/3 + (7/3) Z; 5/3 already sits in (2/3, 3]
        assert degree_representative(1, 2, 3, 5) == Fraction(5, 3)

    def test_wraps_down(self):
        # [DERIVED] base 8/3 exceeds deg K + step nowhere, stays 8/3;
        # base k=12 reduces by one step to 5/3
        assert degree_representative(1, 2, 3, 1) == Fraction(8, 3)
        assert degree_representative(1, 2, 3, 12) == Fraction(5, 3)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ConditionViolation):
            degree_representative(0, 0, 3, 1)
        with pytest.raises(ConditionViolation):
            degree_representative(1, 1, 3, 1)
        with pytest.raises(ConditionViolation):
            degree_representative(1, 2, 0, 1)

    @given(
        st.integers(1, 3),
        st.integers(0, 3),
        st.integers(1, 12),
        st.integers(-40, 40),
    )
    def test_representative_lands_in_interval(self, g, extra, alpha, k):
        n = 2 * g + extra
        rep = degree_representative(g, n, alpha, k)
        deg_k = Fraction((2 * g - 1) * alpha - 1, alpha)
        step = n + Fraction(1, alpha)
        assert deg_k < rep <= deg_k + step
        assert ((rep - Fraction(k, alpha)) / step).denominator == 1


class TestMoyCheck:
    def test_clean_verdict(self):
        # [DERIVED] window [0, 2/3] misses the coset of 5/3 entirely
        verdict = moy_check(1, 2, 3, 5)
        assert verdict == MoyVerdict(True, True, ())

    def test_half_degree_member(self):
        # [DERIVED] deg K / 2 = 1/3 lies in the coset of k = 1, so only
        # the reducible locus survives but a Dirac kernel may jump
        verdict = moy_check(1, 2, 3, 1)
        assert verdict.reducibles_only
        assert not verdict.dirac_kernels_trivial
        assert verdict.witness_degrees == (Fraction(1, 3),)

    def test_irreducible_window_member(self):
        # [DERIVED] 1/5 sits in [0, 4/5] and differs from deg K / 2 = 2/5
        verdict = moy_check(1, 2, 5, 1)
        assert not verdict.reducibles_only
        assert verdict.dirac_kernels_trivial
        assert verdict.witness_degrees == (Fraction(1, 5),)

    def test_even_alpha_kernels_unconditional(self):
        for k in range(5):
            assert moy_check(1, 2, 2, k).dirac_kernels_trivial

    def test_coset_invariance(self):
        # degrees depend on k only through k mod (n*alpha + 1)
        for k in range(7):
            assert moy_check(1, 2, 3, k) == moy_check(1, 2, 3, k + 7)
            assert moy_check(1, 3, 2, k) == moy_check(1, 3, 2, k + 7)

    def test_admissible_offsets_pass(self):
        # the offsets realized by admissible rotations always give a
        # clean verdict together with the strict degree sandwich
        for g in (1, 2):
            for alpha in range(1, 9):
                for sign in (1, -1):
                    for r in admissible_rotations(alpha, sign):
                        k = spinc_offset(g, 2 * g, alpha, sign, r).offset
                        verdict = moy_check(g, 2 * g, alpha, k)
                        assert verdict.reducibles_only
                        assert verdict.dirac_kernels_trivial
                        rep = degree_representative(g, 2 * g, alpha, k)
                        deg_k = Fraction((2 * g - 1) * alpha - 1, alpha)
                        assert deg_k < rep < 2 * g + Fraction(1, alpha)


class TestFillabilityVerdict:
    def test_anchor(self):
        verdict = fillability_verdict(1, 2, 1, 1, 1)
        assert verdict == {
            "tight": True,
            "d3_contact": Fraction(1, 3),
            "d3_canonical": Fraction(-8, 3),
            "gap": 3,
            "gap_law": True,
            "fillable": "no (certified)",
        }

    def test_higher_genus(self):
        verdict = fillability_verdict(2, 5, 3, -1, 1)
        assert verdict["d3_contact"] == Fraction(23, 16)
        assert verdict["d3_canonical"] == Fraction(-57, 16)
        assert verdict["gap"] == 5
        assert verdict["gap_law"]
        assert verdict["fillable"] == "no (certified)"
