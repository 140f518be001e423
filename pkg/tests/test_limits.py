import math

import pytest

from sobtower import (
    ContractViolation,
    ExtrapolationElement,
    FiniteSupport,
    InterpolationElement,
    NotRepresentable,
    extrapolation_embed,
    geom_decay,
    interpolation_embed,
    interpolation_membership,
    interpolation_seminorm,
    limit_generator_apply,
    limit_generator_inverse_apply,
    limit_semigroup_apply,
    power_law,
    tower_norm,
    unit_vector,
)
from sobtower.tower import MembershipStatus


def test_seminorm_rejects_negative_levels(sg):
    with pytest.raises(ContractViolation):
        interpolation_seminorm(sg, -1, unit_vector(1))


def test_seminorm_agrees_with_tower_norm(sg):
    x = FiniteSupport.from_mapping({2: 1.0, 6: -1j})
    for n in range(0, 5):
        assert interpolation_seminorm(sg, n, x).expect() == tower_norm(
            sg, n, x
        ).expect()


def test_seminorm_frozen_value(sg):
    # sum j^4 4^-j = 380/81 (rational telescoping of the polylog recurrence).
    res = interpolation_seminorm(sg, 2, geom_decay(1.0, 0.5))
    assert res.expect() == pytest.approx(math.sqrt(380.0 / 81.0), abs=1e-9)


def test_seminorm_ladder_is_monotone(sg):
    for x in (geom_decay(1.0, 0.5), geom_decay(2.0, 0.9), unit_vector(3)):
        values = [interpolation_seminorm(sg, n, x).expect() for n in range(0, 6)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_interpolation_membership_and_embed(sg):
    v = interpolation_membership(sg, geom_decay(1.0, 0.5), n_max=4)
    assert v.status is MembershipStatus.MEMBER_ALL_LEVELS
    e = interpolation_embed(sg, geom_decay(1.0, 0.5), n_max=4)
    assert e.certified_levels == frozenset(range(0, 5))
    # s = -10 reaches level 9; within 0..5 everything is certified.
    e = interpolation_embed(sg, power_law(1.0, -10.0), n_max=5)
    assert e.certified_levels == frozenset(range(0, 6))


def test_interpolation_embed_rejects_level0_outsiders(sg):
    with pytest.raises(NotRepresentable):
        interpolation_embed(sg, power_law(1.0, 0.0), n_max=3)


def test_partial_interpolation_tags(sg):
    # s = -3 gives maximal level 2: only 0..2 are certified.
    e = interpolation_embed(sg, power_law(1.0, -3.0), n_max=5)
    assert e.certified_levels == frozenset({0, 1, 2})


def test_extrapolation_embed_levels(sg):
    e = extrapolation_embed(sg, power_law(1.0, 0.0))
    assert e.level == -1
    assert e.canonical_level == -1
    e = extrapolation_embed(sg, unit_vector(5), n_min=-5, n_max=5)
    assert e.level == 5
    with pytest.raises(NotRepresentable):
        extrapolation_embed(sg, power_law(1.0, 2.0), n_min=-2, n_max=2)


def test_element_invariants(sg):
    with pytest.raises(ContractViolation):
        InterpolationElement(unit_vector(1), frozenset({-1}))
    with pytest.raises(ContractViolation):
        ExtrapolationElement(unit_vector(1), level=2, canonical_level=1)


def test_limit_semigroup_keeps_tags(sg):
    e = extrapolation_embed(sg, power_law(1.0, 0.0))
    moved = limit_semigroup_apply(sg, 1.0, e)
    assert moved.level == e.level
    assert moved.canonical_level == e.canonical_level
    i = interpolation_embed(sg, geom_decay(1.0, 0.5), n_max=3)
    moved = limit_semigroup_apply(sg, 0.5, i)
    assert moved.certified_levels == i.certified_levels


def test_limit_generator_moves_tags(sg):
    e = extrapolation_embed(sg, power_law(1.0, 0.0))
    down = limit_generator_apply(sg, e)
    assert down.level == e.level - 1
    up = limit_generator_inverse_apply(sg, e)
    assert up.level == e.level + 1
    i = interpolation_embed(sg, power_law(1.0, -3.0), n_max=5)
    assert limit_generator_apply(sg, i).certified_levels == frozenset({0, 1})
    assert limit_generator_inverse_apply(sg, i).certified_levels == frozenset(
        {1, 2, 3}
    )


def test_limit_round_trip_restores_tags_and_coordinates(sg):
    x = FiniteSupport.from_mapping({1: 1.0, 4: 2j, 9: -0.25})
    e = extrapolation_embed(sg, x, n_min=-5, n_max=5)
    fwd = limit_generator_inverse_apply(sg, limit_generator_apply(sg, e))
    bwd = limit_generator_apply(sg, limit_generator_inverse_apply(sg, e))
    for rt in (fwd, bwd):
        assert rt.level == e.level
        assert rt.canonical_level == e.canonical_level
        for j in x.support:
            expected = x.coefficient(j)
            assert abs(rt.x.coefficient(j) - expected) <= 2 * math.ulp(abs(expected))
