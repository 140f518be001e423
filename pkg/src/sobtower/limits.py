"""Universal interpolation and extrapolation spaces at the sequence level.

The interpolation space is the intersection of all nonnegative levels,
graded by the seminorm ladder p_n(x) = ||x||_n; the extrapolation space is
the union of all levels, represented by level-tagged elements.  The limit
semigroup and generator act on the payloads through the semigroup module,
with explicit level bookkeeping: the generator lowers a certified level by
one, its inverse raises it by one.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ContractViolation, NotRepresentable
from .semigroup import DiagonalSemigroup
from .spaces import FiniteSupport, NormResult, Sequence
from .tower import (
    MembershipStatus,
    MembershipVerdict,
    membership_level,
    tower_norm,
)

__all__ = [
    "InterpolationElement",
    "ExtrapolationElement",
    "interpolation_seminorm",
    "interpolation_membership",
    "extrapolation_embed",
    "limit_semigroup_apply",
    "limit_generator_apply",
    "limit_generator_inverse_apply",
]


@dataclass(frozen=True)
class InterpolationElement:
    """An element of the intersection of the nonnegative levels, together
    with the set of levels at which finiteness was certified."""

    x: Sequence
    certified_levels: frozenset[int]

    def __post_init__(self) -> None:
        if any(n < 0 for n in self.certified_levels):
            raise ContractViolation("interpolation levels are nonnegative")


@dataclass(frozen=True)
class ExtrapolationElement:
    """An element of the union of all levels, tagged with a certified level
    and, when analytically known, the maximal membership level."""

    x: Sequence
    level: int
    canonical_level: int | None = None

    def __post_init__(self) -> None:
        if self.canonical_level is not None and self.canonical_level < self.level:
            raise ContractViolation("canonical level cannot lie below the certified level")


def interpolation_seminorm(
    sg: DiagonalSemigroup,
    n: int,
    x: Sequence,
    trunc: int = 100_000,
    tol: float = 1e-12,
) -> NormResult:
    """p_n(x) = ||x||_n for n >= 0, the n-th rung of the Frechet ladder."""
    if n < 0:
        raise ContractViolation("interpolation seminorms are indexed by n >= 0")
    return tower_norm(sg, n, x, trunc, tol)


def interpolation_membership(
    sg: DiagonalSemigroup, x: Sequence, n_max: int
) -> MembershipVerdict:
    """Decide x in the intersection of levels 0..n_max."""
    return membership_level(sg, x, n_min=0, n_max=n_max)


def interpolation_embed(
    sg: DiagonalSemigroup, x: Sequence, n_max: int
) -> InterpolationElement:
    """Tag x with every level in 0..n_max at which it is certified."""
    verdict = interpolation_membership(sg, x, n_max)
    if verdict.status is MembershipStatus.MEMBER_ALL_LEVELS:
        levels = frozenset(range(0, n_max + 1))
    elif verdict.status is MembershipStatus.MEMBER_UP_TO:
        assert verdict.max_level is not None
        levels = frozenset(range(0, verdict.max_level + 1))
    else:
        raise NotRepresentable(
            f"element is not in the level-0 space: {verdict.evidence.detail}"
        )
    return InterpolationElement(x, levels)


def extrapolation_embed(
    sg: DiagonalSemigroup,
    x: Sequence,
    n_min: int = -5,
    n_max: int = 5,
) -> ExtrapolationElement:
    """Tag x with its maximal certified level within [n_min, n_max].

    Raises NotRepresentable when membership fails at every admitted level.
    """
    verdict = membership_level(sg, x, n_min=n_min, n_max=n_max)
    if verdict.status is MembershipStatus.MEMBER_ALL_LEVELS:
        return ExtrapolationElement(x, level=n_max, canonical_level=n_max)
    if verdict.status is MembershipStatus.MEMBER_UP_TO:
        assert verdict.max_level is not None
        return ExtrapolationElement(x, level=verdict.max_level, canonical_level=verdict.max_level)
    raise NotRepresentable(
        f"no level >= {n_min} admits this element: {verdict.evidence.detail}"
    )


LimitElement = InterpolationElement | ExtrapolationElement


def limit_semigroup_apply(
    sg: DiagonalSemigroup, t: float, e: LimitElement
) -> LimitElement:
    """Apply T(t) to the payload; the stored levels are left unchanged.

    Since |exp(t q_j)| <= exp(t omega) < 1, membership can only improve.
    """
    return replace(e, x=sg.apply(t, e.x))


def limit_generator_apply(sg: DiagonalSemigroup, e: LimitElement) -> LimitElement:
    """Apply the limit generator; an extrapolation tag drops by one level."""
    y = sg.generator(e.x)
    if isinstance(e, ExtrapolationElement):
        canonical = None if e.canonical_level is None else e.canonical_level - 1
        return ExtrapolationElement(y, e.level - 1, canonical)
    return InterpolationElement(
        y, frozenset(n - 1 for n in e.certified_levels if n >= 1)
    )


def limit_generator_inverse_apply(
    sg: DiagonalSemigroup, e: LimitElement
) -> LimitElement:
    """Apply the inverse of the limit generator; an extrapolation tag rises
    by one level."""
    y = sg.generator_inverse(e.x)
    if isinstance(e, ExtrapolationElement):
        canonical = None if e.canonical_level is None else e.canonical_level + 1
        return ExtrapolationElement(y, e.level + 1, canonical)
    return InterpolationElement(y, frozenset(n + 1 for n in e.certified_levels))
