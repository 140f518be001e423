"""The two-sided Sobolev tower: level norms, membership, graph norms,
similarity and equicontinuity diagnostics, rescaled-tower comparison.

Level n carries the norm ||x||_n = (sum (|q_j|**n |x_j|)**2)**0.5; the same
value arises as ||A**n x||_0, and :func:`tower_norm` computes both routes
and asserts their agreement whenever the second route is available in
closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence as Seq

from .errors import ContractViolation, NotInDomain
from .semigroup import DiagonalSemigroup
from .spaces import (
    ClosedForm,
    ExplicitSpectrum,
    FiniteSupport,
    NormResult,
    NormStatus,
    PowerLawSpectrum,
    Sequence,
    ShiftedSpectrum,
    SpectralImage,
    tower_weight,
    weighted_l2_norm,
)

__all__ = [
    "MembershipStatus",
    "MembershipEvidence",
    "MembershipVerdict",
    "tower_norm",
    "graph_norm",
    "membership_level",
    "similarity_check",
    "SimilarityResult",
    "equicontinuity_constants",
    "EquicontinuityReport",
    "rescaled_tower_compare",
    "RatioRange",
]

# Relative slack for the internal weight-route vs generator-route cross-check.
_TWO_PATH_SLACK = 1e-10


class MembershipStatus(Enum):
    MEMBER_ALL_LEVELS = "member_all_levels"
    MEMBER_UP_TO = "member_up_to"
    NOT_MEMBER = "not_member"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MembershipEvidence:
    method: str  # "analytic" or "numerical_partial_sum"
    detail: str = ""
    boundary_exponent: float | None = None


@dataclass(frozen=True)
class MembershipVerdict:
    status: MembershipStatus
    max_level: int | None
    evidence: MembershipEvidence

    def member_at(self, n: int) -> bool:
        if self.status is MembershipStatus.MEMBER_ALL_LEVELS:
            return True
        if self.status is MembershipStatus.MEMBER_UP_TO:
            assert self.max_level is not None
            return n <= self.max_level
        return False


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


def tower_norm(
    sg: DiagonalSemigroup,
    n: int,
    x: Sequence,
    trunc: int = 100_000,
    tol: float = 1e-12,
) -> NormResult:
    """||x||_n via the level weight, cross-checked against ||A**n x||_0."""
    n = int(n)
    primary = weighted_l2_norm(x, tower_weight(sg.spectrum, n), trunc, tol)
    if n != 0 and _generator_route_available(sg, x):
        shifted = weighted_l2_norm(
            sg.generator_power(n, x), tower_weight(sg.spectrum, 0), trunc, tol
        )
        if primary.ok and shifted.ok:
            scale = max(abs(primary.value), abs(shifted.value), 1e-300)
            if abs(primary.value - shifted.value) > _TWO_PATH_SLACK * scale:
                raise AssertionError(
                    f"norm routes disagree at level {n}: weight route "
                    f"{primary.value!r} vs generator route {shifted.value!r}"
                )
    return primary


def _generator_route_available(sg: DiagonalSemigroup, x: Sequence) -> bool:
    if isinstance(x, FiniteSupport):
        return True
    spectrum = sg.spectrum
    if isinstance(spectrum, PowerLawSpectrum) and isinstance(x, (ClosedForm, SpectralImage)):
        return True
    return False


def graph_norm(
    sg: DiagonalSemigroup,
    n: int,
    x: Sequence,
    trunc: int = 100_000,
    tol: float = 1e-12,
) -> float:
    """||x||_n + ||A x||_n, the graph norm of the generator domain at level n.

    Raises NotInDomain unless x belongs to level n + 1.
    """
    verdict = membership_level(sg, x, n_min=n + 1, n_max=n + 1)
    if verdict.status not in (
        MembershipStatus.MEMBER_ALL_LEVELS,
        MembershipStatus.MEMBER_UP_TO,
    ):
        raise NotInDomain(
            f"element is not in the level-{n + 1} domain: {verdict.evidence.detail}"
        )
    if isinstance(x, FiniteSupport) and x.is_zero():
        return 0.0
    part = tower_norm(sg, n, x, trunc, tol).expect()
    image = tower_norm(sg, n, sg.generator(x), trunc, tol).expect()
    return part + image


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def membership_level(
    sg: DiagonalSemigroup,
    x: Sequence,
    n_min: int = -5,
    n_max: int = 5,
) -> MembershipVerdict:
    """Locate x in the tower: the maximal n with ||x||_n finite.

    Finite-support and geometric-decay sequences belong to every level.  A
    power law c * j**s over |q_j| = m * j**p lies in X_n exactly when
    2(n p + s) < -1; equality is excluded (harmonic divergence).  Verdicts
    are clamped to [n_min, n_max] with the unclamped answer recorded.
    """
    if n_min > n_max:
        raise ContractViolation("n_min must not exceed n_max")
    if isinstance(x, FiniteSupport):
        return MembershipVerdict(
            MembershipStatus.MEMBER_ALL_LEVELS,
            None,
            MembershipEvidence("analytic", "finite support"),
        )
    if isinstance(x, SpectralImage):
        if x.t > 0:
            pls = x.spectrum.base if isinstance(x.spectrum, ShiftedSpectrum) else x.spectrum
            if getattr(pls, "p", 0.0) > 0:
                return MembershipVerdict(
                    MembershipStatus.MEMBER_ALL_LEVELS,
                    None,
                    MembershipEvidence(
                        "analytic", "coordinates decay like exp(t Re q_j), p > 0"
                    ),
                )
        inner = membership_level(sg, x.base, n_min + x.power, n_max + x.power)
        if inner.status is MembershipStatus.MEMBER_UP_TO:
            assert inner.max_level is not None
            return MembershipVerdict(
                inner.status,
                inner.max_level - x.power,
                MembershipEvidence(
                    inner.evidence.method,
                    f"base verdict shifted by generator power {x.power}",
                    inner.evidence.boundary_exponent,
                ),
            )
        return inner
    assert isinstance(x, ClosedForm)
    if not x.is_power_law:
        return MembershipVerdict(
            MembershipStatus.MEMBER_ALL_LEVELS,
            None,
            MembershipEvidence(
                "analytic", "polynomial-times-geometric terms are summable at every level"
            ),
        )

    spectrum = sg.spectrum
    if isinstance(spectrum, ShiftedSpectrum):
        # |q_j + lam| ~ |q_j|, so the analytic criterion is shift-invariant.
        pls = spectrum.base
    elif isinstance(spectrum, PowerLawSpectrum):
        pls = spectrum
    else:
        return MembershipVerdict(
            MembershipStatus.INCONCLUSIVE,
            None,
            MembershipEvidence(
                "analytic", "no analytic criterion for this spectrum kind"
            ),
        )

    p, s = pls.p, x.s
    if p == 0:
        # The criterion 2(n p + s) < -1 does not depend on n: the verdict is
        # decided by s alone (degenerate ladder).
        if 2.0 * s < -1.0:
            return MembershipVerdict(
                MembershipStatus.MEMBER_ALL_LEVELS,
                None,
                MembershipEvidence(
                    "analytic", "degenerate p = 0 ladder; 2s < -1", boundary_exponent=s
                ),
            )
        return MembershipVerdict(
            MembershipStatus.NOT_MEMBER,
            None,
            MembershipEvidence(
                "analytic", "degenerate p = 0 ladder; 2s >= -1", boundary_exponent=s
            ),
        )

    # n p + s < -1/2  <=>  n < (-1/2 - s) / p, strict.
    threshold = (-0.5 - s) / p
    analytic_max = math.floor(threshold)
    if analytic_max == threshold:
        analytic_max -= 1
    boundary = 2.0 * (analytic_max + 1) * p + 2.0 * s  # first excluded exponent

    if analytic_max < n_min:
        return MembershipVerdict(
            MembershipStatus.NOT_MEMBER,
            None,
            MembershipEvidence(
                "analytic",
                f"maximal level {analytic_max} lies below the window floor {n_min}",
                boundary_exponent=boundary,
            ),
        )
    if analytic_max >= n_max:
        return MembershipVerdict(
            MembershipStatus.MEMBER_UP_TO,
            n_max,
            MembershipEvidence(
                "analytic",
                f"analytic maximal level {analytic_max} clamped to window cap {n_max}",
                boundary_exponent=boundary,
            ),
        )
    return MembershipVerdict(
        MembershipStatus.MEMBER_UP_TO,
        analytic_max,
        MembershipEvidence(
            "analytic",
            f"n p + s < -1/2 holds up to n = {analytic_max}",
            boundary_exponent=boundary,
        ),
    )


# ---------------------------------------------------------------------------
# Diagram checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimilarityResult:
    max_rel_error: float
    passed: bool


def similarity_check(
    sg: DiagonalSemigroup,
    n: int,
    t: float,
    x: FiniteSupport,
    tol: float = 1e-12,
) -> SimilarityResult:
    """Compare T(t)x against A^{-1} T(t) A x coordinatewise."""
    if not t >= 0:
        raise ContractViolation("t must be nonnegative")
    direct = sg.apply(t, x)
    routed = sg.generator_inverse(sg.apply(t, sg.generator(x)))
    assert isinstance(direct, FiniteSupport) and isinstance(routed, FiniteSupport)
    worst = 0.0
    for j in sorted(set(direct.support) | set(routed.support)):
        d = direct.coefficient(j)
        r = routed.coefficient(j)
        scale = max(abs(d), abs(r), 1e-300)
        worst = max(worst, abs(d - r) / scale)
    return SimilarityResult(worst, worst <= tol)


@dataclass(frozen=True)
class EquicontinuityReport:
    omega: float
    M_observed: float


def equicontinuity_constants(
    sg: DiagonalSemigroup,
    n: int,
    t_grid: Iterable[float],
    x_set: Seq[FiniteSupport],
) -> EquicontinuityReport:
    """Observed constants in ||T(t)x||_n <= M exp(omega t) ||x||_n.

    omega is the analytic sup of Re q_j over the support indices occurring
    in x_set; M_observed is the largest ratio over the grid.
    """
    x_set = list(x_set)
    if not x_set or all(x.is_zero() for x in x_set):
        raise ContractViolation("x_set must contain a nonzero finite-support vector")
    support = sorted({j for x in x_set for j in x.support})
    omega = max(sg.spectrum.q(j).real for j in support)
    M = 0.0
    for t in t_grid:
        for x in x_set:
            if x.is_zero():
                continue
            base = tower_norm(sg, n, x).expect()
            evolved = tower_norm(sg, n, sg.apply(t, x)).expect()
            M = max(M, evolved / (math.exp(omega * t) * base))
    return EquicontinuityReport(omega, M)


@dataclass(frozen=True)
class RatioRange:
    ratio_min: float
    ratio_max: float


def rescaled_tower_compare(
    sg: DiagonalSemigroup,
    lam: complex,
    n: int,
    x_set: Seq[FiniteSupport],
) -> RatioRange:
    """Level-n norm in the rescaled tower divided by the original one."""
    rescaled = sg.rescale(lam)
    lo, hi = math.inf, -math.inf
    for x in x_set:
        if isinstance(x, FiniteSupport) and x.is_zero():
            continue
        original = tower_norm(sg, n, x).expect()
        shifted = tower_norm(rescaled, n, x).expect()
        ratio = shifted / original
        lo = min(lo, ratio)
        hi = max(hi, ratio)
    if lo > hi:
        raise ContractViolation("x_set must contain a nonzero vector")
    return RatioRange(lo, hi)
