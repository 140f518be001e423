import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sobtower import (
    ClosedForm,
    ExplicitKotheMatrix,
    ExplicitSpectrum,
    FiniteSupport,
    InvalidRescaling,
    InvalidSequence,
    InvalidSpectrum,
    NormNotCertified,
    NormStatus,
    PowerLawSpectrum,
    ShiftedSpectrum,
    SpectralKotheMatrix,
    SupportOutOfRange,
    UnsupportedCombination,
    c0_seminorm,
    geom_decay,
    neumaier_sum,
    power_law,
    tower_weight,
    unit_vector,
    weighted_l2_norm,
    zero_vector,
)

Q = PowerLawSpectrum(1.0, 1.0)  # q_j = -j


# ---------------------------------------------------------------------------
# FiniteSupport
# ---------------------------------------------------------------------------


def test_finite_support_basic_algebra():
    x = FiniteSupport.from_mapping({3: 1 + 2j, 1: 0.5})
    assert x.support == (1, 3)
    assert x.coefficient(3) == 1 + 2j
    assert x.coefficient(7) == 0j
    assert x.modulus(3) == abs(1 + 2j)
    y = x.add(FiniteSupport.from_mapping({1: -0.5, 2: 1.0}))
    assert y.support == (2, 3)  # cancellation drops index 1
    assert x.sub(x).is_zero()
    assert x.scale(2.0).coefficient(1) == 1.0
    assert x.truncate(2).support == (1,)


def test_finite_support_rejects_bad_entries():
    with pytest.raises(InvalidSequence):
        FiniteSupport(((0, 1.0 + 0j),))
    with pytest.raises(InvalidSequence):
        FiniteSupport(((2, 1.0 + 0j), (2, 1.0 + 0j)))
    with pytest.raises(InvalidSequence):
        FiniteSupport(((3, 1.0 + 0j), (1, 1.0 + 0j)))
    with pytest.raises(InvalidSequence):
        FiniteSupport(((1, 0j),))
    with pytest.raises(InvalidSequence):
        FiniteSupport(((1, complex("inf")),))


def test_from_mapping_drops_zeros_and_sorts():
    x = FiniteSupport.from_mapping({5: 0.0, 2: 1.0, 9: 3j})
    assert x.support == (2, 9)


def test_unit_and_zero_vectors():
    assert unit_vector(4).coefficient(4) == 1.0
    assert zero_vector().is_zero()


# ---------------------------------------------------------------------------
# Closed families
# ---------------------------------------------------------------------------


def test_power_law_coefficients():
    x = power_law(2.0, -1.5)
    assert x.coefficient(4) == pytest.approx(2.0 * 4**-1.5)
    assert x.is_power_law


def test_geom_decay_coefficients():
    x = geom_decay(1.0, 0.5)
    assert x.coefficient(3) == pytest.approx(0.125)
    assert not x.is_power_law
    assert x.decay == 0.5


def test_closed_form_validation():
    with pytest.raises(InvalidSequence):
        ClosedForm(0.0, 1.0)
    with pytest.raises(InvalidSequence):
        ClosedForm(1.0, math.nan)
    with pytest.raises(InvalidSequence):
        ClosedForm(1.0, 0.0, ratio=1.5)
    with pytest.raises(InvalidSequence):
        geom_decay(1.0, 1.0)
    with pytest.raises(InvalidSequence):
        geom_decay(1.0, 0.0)


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


def test_explicit_spectrum_invariants():
    s = ExplicitSpectrum((-1 + 0j, -2 + 1j))
    assert s.size == 2
    assert s.omega == -1.0
    assert s.q(2) == -2 + 1j
    with pytest.raises(SupportOutOfRange):
        s.q(3)
    with pytest.raises(InvalidSpectrum):
        ExplicitSpectrum(())
    with pytest.raises(InvalidSpectrum):
        ExplicitSpectrum((1 + 0j,))  # Re q >= 0
    with pytest.raises(InvalidSpectrum):
        ExplicitSpectrum((-0.5 + 0j,))  # |q| < 1


def test_explicit_spectrum_shift():
    s = ExplicitSpectrum((-2 + 0j, -3 + 0j))
    assert s.shifted(-1.0).q(1) == -3 + 0j
    with pytest.raises(InvalidRescaling):
        s.shifted(1.5)  # pushes q_1 past the axis


def test_power_law_spectrum_invariants():
    assert Q.q(5) == -5 + 0j
    assert Q.abs_q(5) == 5.0
    assert Q.omega == -1.0
    assert Q.constant_q is None
    assert PowerLawSpectrum(2.0, 0.0).constant_q == -2 + 0j
    with pytest.raises(InvalidSpectrum):
        PowerLawSpectrum(-1.0, 1.0)
    with pytest.raises(InvalidSpectrum):
        PowerLawSpectrum(1.0, -0.5)
    with pytest.raises(InvalidSpectrum):
        PowerLawSpectrum(0.5, 1.0, 0.5)  # hypot < 1


def test_power_law_shift_constant_case_stays_in_family():
    s = PowerLawSpectrum(2.0, 0.0).shifted(1.0)
    assert isinstance(s, PowerLawSpectrum)
    assert s.q(7) == -1 + 0j
    with pytest.raises(InvalidRescaling):
        PowerLawSpectrum(2.0, 0.0).shifted(2.0)


def test_power_law_shift_general_case():
    s = Q.shifted(-1.0)
    assert isinstance(s, ShiftedSpectrum)
    assert s.q(3) == -4 + 0j
    assert s.omega == -2.0
    with pytest.raises(InvalidRescaling):
        Q.shifted(1.0)  # q_1 lands on the axis


def test_shifted_spectrum_minimum_modulus_guard():
    # Shifting by +0.5 moves q_1 to -0.5, violating |q_j| >= 1.
    with pytest.raises(InvalidRescaling):
        Q.shifted(0.5)


def test_tower_weight_values():
    w = tower_weight(Q, -2)
    assert w.weight(4) == pytest.approx(4.0**-2)
    assert tower_weight(Q, 0).weight(10) == 1.0


# ---------------------------------------------------------------------------
# Koethe matrices
# ---------------------------------------------------------------------------


def test_spectral_koethe_matrix():
    B = SpectralKotheMatrix(Q)
    assert B.weight(0, 9) == 1.0
    assert B.weight(3, 2) == 8.0


def test_explicit_koethe_matrix_validation():
    B = ExplicitKotheMatrix(((1.0, 2.0), (3.0, 4.0)))
    assert B.weight(1, 2) == 4.0
    with pytest.raises(InvalidSequence):
        ExplicitKotheMatrix(())
    with pytest.raises(InvalidSequence):
        ExplicitKotheMatrix(((1.0,), (1.0, 2.0)))
    with pytest.raises(InvalidSequence):
        ExplicitKotheMatrix(((0.0, 1.0), (0.0, 2.0)))  # dead column


# ---------------------------------------------------------------------------
# Summation and norms
# ---------------------------------------------------------------------------


def test_neumaier_sum_compensates_cancellation():
    assert neumaier_sum([1e16, 1.0, -1e16]) == 1.0
    assert neumaier_sum([]) == 0.0


def test_finite_support_norm_is_exact_weight():
    for j in (1, 2, 7, 50):
        for n in range(-5, 6):
            res = weighted_l2_norm(unit_vector(j), tower_weight(Q, n))
            assert res.status is NormStatus.OK
            assert res.value == float(j) ** n


def test_norm_of_zero_vector():
    res = weighted_l2_norm(zero_vector(), tower_weight(Q, 3))
    assert res.value == 0.0


def test_power_law_norm_matches_zeta_values():
    # sum j^-2 = pi^2/6 at level -1 for q_j = -j.
    res = weighted_l2_norm(power_law(1.0, 0.0), tower_weight(Q, -1), trunc=1_000_000)
    assert res.status is NormStatus.OK
    assert res.value == pytest.approx(math.pi / math.sqrt(6), abs=1e-12)
    # sum j^-4 = pi^4/90 at level -2.
    res = weighted_l2_norm(power_law(1.0, 0.0), tower_weight(Q, -2), trunc=100_000)
    assert res.value == pytest.approx(math.sqrt(math.pi**4 / 90), abs=1e-12)


def test_power_law_divergence_detected():
    res = weighted_l2_norm(power_law(1.0, 0.0), tower_weight(Q, 0))
    assert res.status is NormStatus.DIVERGENT
    with pytest.raises(NormNotCertified):
        res.expect()
    # Boundary exponent (squared term j^-1) diverges too.
    res = weighted_l2_norm(power_law(1.0, -0.5), tower_weight(Q, 0))
    assert res.status is NormStatus.DIVERGENT


def test_short_truncation_is_inconclusive_not_wrong():
    res = weighted_l2_norm(power_law(1.0, 0.0), tower_weight(Q, -1), trunc=10, tol=1e-12)
    assert res.status is NormStatus.INCONCLUSIVE
    assert res.value is None


def test_geom_decay_norm_certified_at_every_level():
    x = geom_decay(1.0, 0.5)
    for n in range(-5, 6):
        res = weighted_l2_norm(x, tower_weight(Q, n))
        assert res.status is NormStatus.OK
    # Level 0 is the plain geometric series: sum 4^-j = 1/3.
    res = weighted_l2_norm(x, tower_weight(Q, 0))
    assert res.value == pytest.approx(math.sqrt(1.0 / 3.0), rel=1e-14)


def test_shifted_spectrum_norm_certified():
    shifted = Q.shifted(-1.0)  # q_j = -j - 1
    res = weighted_l2_norm(
        power_law(1.0, 0.0), tower_weight(shifted, -1), trunc=200_000, tol=1e-9
    )
    assert res.status is NormStatus.OK
    assert res.value == pytest.approx(math.sqrt(math.pi**2 / 6.0 - 1.0), abs=1e-9)
    # At the default tolerance the same call declines to certify.
    tight = weighted_l2_norm(power_law(1.0, 0.0), tower_weight(shifted, -1), trunc=200_000)
    assert tight.status is NormStatus.INCONCLUSIVE


def test_explicit_spectrum_rejects_closed_forms():
    s = ExplicitSpectrum((-1 + 0j, -2 + 0j))
    with pytest.raises(UnsupportedCombination):
        weighted_l2_norm(power_law(1.0, -2.0), tower_weight(s, 0))
    with pytest.raises(SupportOutOfRange):
        weighted_l2_norm(unit_vector(5), tower_weight(s, 0))


# ---------------------------------------------------------------------------
# c0 seminorms
# ---------------------------------------------------------------------------


def test_c0_seminorm_finite_support():
    B = SpectralKotheMatrix(Q)
    x = FiniteSupport.from_mapping({2: 3.0, 5: 1.0})
    assert c0_seminorm(x, B, 1).value == 6.0  # max(2*3, 5*1)
    assert c0_seminorm(zero_vector(), B, 4).value == 0.0


def test_c0_seminorm_geom_decay_analytic_scan():
    # sup_j j^2 2^-j is attained at j = 3: 9/8.
    res = c0_seminorm(geom_decay(1.0, 0.5), SpectralKotheMatrix(Q), 2)
    assert res.status is NormStatus.OK
    assert res.value == pytest.approx(9.0 / 8.0, rel=1e-15)
    # Brute-force oracle over a wide scan window.
    brute = max(j**2 * 0.5**j for j in range(1, 200))
    assert res.value == pytest.approx(brute, rel=1e-15)


def test_c0_seminorm_power_law_cases():
    B = SpectralKotheMatrix(Q)
    # Nonpositive exponent: sup at j = 1.
    assert c0_seminorm(power_law(1.0, -2.0), B, 1).value == 1.0
    # Growing weights against a non-decaying profile diverge.
    assert c0_seminorm(power_law(1.0, 0.0), B, 1).status is NormStatus.DIVERGENT
    # Constant profile at k = 0.
    assert c0_seminorm(power_law(2.0, 0.0), B, 0).value == 2.0


def test_c0_seminorm_explicit_matrix():
    B = ExplicitKotheMatrix(((1.0, 2.0, 0.5),))
    assert c0_seminorm(power_law(1.0, 0.0), B, 0).value == 2.0


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------

finite_vectors = st.dictionaries(
    st.integers(min_value=1, max_value=60),
    st.complex_numbers(
        min_magnitude=1e-6, max_magnitude=1e6, allow_nan=False, allow_infinity=False
    ),
    max_size=8,
).map(FiniteSupport.from_mapping)


@settings(max_examples=150, deadline=None)
@given(finite_vectors, st.integers(min_value=-3, max_value=3))
def test_norm_matches_direct_sum(x, n):
    res = weighted_l2_norm(x, tower_weight(Q, n))
    w = tower_weight(Q, n)
    direct = math.sqrt(math.fsum((w.weight(j) * abs(v)) ** 2 for j, v in x.entries))
    assert res.value == pytest.approx(direct, rel=1e-14, abs=1e-300)


@settings(max_examples=150, deadline=None)
@given(
    finite_vectors,
    st.floats(min_value=1e-3, max_value=100).flatmap(
        lambda m: st.sampled_from([-m, m])
    ),
    st.integers(min_value=-3, max_value=3),
)
def test_norm_homogeneity(x, alpha, n):
    w = tower_weight(Q, n)
    scaled = weighted_l2_norm(x.scale(alpha), w).value
    plain = weighted_l2_norm(x, w).value
    assert scaled == pytest.approx(abs(alpha) * plain, rel=1e-12, abs=1e-290)


@settings(max_examples=150, deadline=None)
@given(finite_vectors, finite_vectors, st.integers(min_value=-3, max_value=3))
def test_norm_triangle_inequality(x, y, n):
    w = tower_weight(Q, n)
    lhs = weighted_l2_norm(x.add(y), w).value
    rhs = weighted_l2_norm(x, w).value + weighted_l2_norm(y, w).value
    assert lhs <= rhs * (1 + 1e-12) + 1e-300
