"""Invariant suite: algebraic identities, convergence orders and
analytic-vs-numerical cross checks for a configured spectrum.

Every check is deterministic given (config, seed); the report serializes to
byte-identical text across runs.  Numeric identities use the configured
relative tolerance; asymptotic-order estimates use a 10% band.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, InvalidRescaling
from .limits import (
    extrapolation_embed,
    limit_generator_apply,
    limit_generator_inverse_apply,
)
from .semigroup import DiagonalSemigroup
from .spaces import (
    ClosedForm,
    FiniteSupport,
    PowerLawSpectrum,
    geom_decay,
    power_law,
    tower_weight,
    weighted_l2_norm,
)
from .tower import (
    MembershipStatus,
    MembershipVerdict,
    MembershipEvidence,
    equicontinuity_constants,
    membership_level,
    similarity_check,
    tower_norm,
)

__all__ = [
    "CheckSpec",
    "CheckStatus",
    "CheckResult",
    "InvariantReport",
    "REQUIRED_CHECKS",
    "default_check_spec",
    "random_finite_support",
    "run_suite",
    "brute_force_membership",
    "convergence_order",
]

# Fixed declared order; one entry per verified identity.  Removing a check
# breaks the pinned-checklist test.
REQUIRED_CHECKS = (
    "semigroup_law",
    "identity_at_zero",
    "growth_bound",
    "norm_recursion",
    "two_path_consistency",
    "similarity_diagram",
    "generator_convergence_order",
    "rescaling_identity",
    "isomorphism_round_trip",
    "interpolation_truncation",
    "membership_oracle_agreement",
)

ORDER_BAND = 0.10  # relative band for asymptotic-order estimates


@dataclass(frozen=True)
class CheckSpec:
    name: str = "default"
    levels: tuple[int, int] = (-3, 3)
    t_grid: tuple[float, ...] = (0.0, 0.1, 1.0, 10.0)
    h_grid: tuple[float, ...] = (1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4)
    vector_family: tuple[FiniteSupport, ...] = ()
    tol: float = 1e-12
    seed: int = 42

    def validate(self) -> None:
        lo, hi = self.levels
        if lo > hi:
            raise ConfigError("level range is empty")
        if not self.t_grid:
            raise ConfigError("t_grid must be nonempty")
        if any(t < 0 for t in self.t_grid):
            raise ConfigError("t_grid entries must be nonnegative")
        if not self.h_grid:
            raise ConfigError("h_grid must be nonempty")
        if any(h <= 0 for h in self.h_grid) or any(
            a >= b for a, b in zip(self.h_grid[1:], self.h_grid)
        ):
            raise ConfigError("h_grid must be positive and strictly decreasing")
        if not self.vector_family:
            raise ConfigError("vector family must be nonempty")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")


def random_finite_support(
    rng: random.Random,
    max_support: int = 6,
    max_index: int = 30,
) -> FiniteSupport:
    size = rng.randint(1, max_support)
    indices = rng.sample(range(1, max_index + 1), size)
    return FiniteSupport.from_mapping(
        {
            j: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            for j in indices
        }
    )


def default_check_spec(seed: int = 42, family_size: int = 25) -> CheckSpec:
    rng = random.Random(seed)
    family = tuple(random_finite_support(rng) for _ in range(family_size))
    return CheckSpec(vector_family=family, seed=seed)


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    max_error: float
    tolerance: float
    witnesses: tuple[tuple[str, float], ...] = ()


@dataclass(frozen=True)
class InvariantReport:
    spec_name: str
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks) and not any(
            c.status is CheckStatus.INCONCLUSIVE for c in self.checks
        )

    @property
    def any_fail(self) -> bool:
        return any(c.status is CheckStatus.FAIL for c in self.checks)

    def to_text(self) -> str:
        lines = [f"suite={self.spec_name} seed={self.seed}"]
        for c in self.checks:
            lines.append(
                f"check={c.name} status={c.status.value} "
                f"max_error={c.max_error:.17g} tolerance={c.tolerance:.17g}"
            )
            for desc, value in c.witnesses:
                lines.append(f"  witness: {desc} observed={value:.17g}")
        verdict = "pass" if self.overall_pass else ("fail" if self.any_fail else "inconclusive")
        lines.append(f"overall={verdict}")
        return "\n".join(lines) + "\n"


class _Tracker:
    """Collects the worst relative error together with its witness."""

    def __init__(self) -> None:
        self.max_error = 0.0
        self.witnesses: list[tuple[str, float]] = []

    def observe(self, error: float, desc: str) -> None:
        if error > self.max_error:
            self.max_error = error
            self.witnesses = [(desc, error)]

    def result(self, name: str, tol: float) -> CheckResult:
        status = CheckStatus.PASS if self.max_error <= tol else CheckStatus.FAIL
        witnesses = tuple(self.witnesses) if status is CheckStatus.FAIL else ()
        return CheckResult(name, status, self.max_error, tol, witnesses)


def _rel_coord_error(a: FiniteSupport, b: FiniteSupport) -> float:
    worst = 0.0
    for j in sorted(set(a.support) | set(b.support)):
        va, vb = a.coefficient(j), b.coefficient(j)
        scale = max(abs(va), abs(vb), 1e-300)
        worst = max(worst, abs(va - vb) / scale)
    return worst


def _describe(x: FiniteSupport) -> str:
    parts = [f"{j}:{v.real:.6g}{v.imag:+.6g}i" for j, v in x.entries]
    return "fin{" + ",".join(parts) + "}"


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def _check_semigroup_law(sg, spec) -> CheckResult:
    tr = _Tracker()
    ts = spec.t_grid[: 5]
    for t in ts:
        for s in ts:
            for x in spec.vector_family:
                if x.is_zero():
                    continue
                joint = sg.apply(t + s, x)
                stepped = sg.apply(t, sg.apply(s, x))
                tr.observe(
                    _rel_coord_error(joint, stepped),
                    f"t={t:g} s={s:g} x={_describe(x)}",
                )
    return tr.result("semigroup_law", spec.tol)


def _check_identity_at_zero(sg, spec) -> CheckResult:
    tr = _Tracker()
    for x in spec.vector_family:
        tr.observe(_rel_coord_error(sg.apply(0.0, x), x), f"x={_describe(x)}")
    res = tr.result("identity_at_zero", 0.0)
    return res


def _check_growth_bound(sg, spec) -> CheckResult:
    tr = _Tracker()
    lo, hi = spec.levels
    family = [x for x in spec.vector_family if not x.is_zero()]
    for n in range(lo, hi + 1):
        rep = equicontinuity_constants(sg, n, spec.t_grid, family)
        tr.observe(max(0.0, rep.M_observed - 1.0), f"level n={n}")
    return tr.result("growth_bound", spec.tol)


def _check_norm_recursion(sg, spec) -> CheckResult:
    tr = _Tracker()
    lo, hi = spec.levels
    for n in range(lo + 1, hi + 1):
        for x in spec.vector_family:
            if x.is_zero():
                continue
            left = tower_norm(sg, n, x).expect()
            right = tower_norm(sg, n - 1, sg.generator(x)).expect()
            scale = max(left, right, 1e-300)
            tr.observe(abs(left - right) / scale, f"n={n} x={_describe(x)}")
    return tr.result("norm_recursion", spec.tol)


def _check_two_path_consistency(sg, spec) -> CheckResult:
    tr = _Tracker()
    lo, hi = spec.levels
    for n in range(lo, hi + 1):
        for x in spec.vector_family:
            if x.is_zero():
                continue
            by_weight = weighted_l2_norm(x, tower_weight(sg.spectrum, n)).expect()
            by_power = weighted_l2_norm(
                sg.generator_power(n, x), tower_weight(sg.spectrum, 0)
            ).expect()
            scale = max(by_weight, by_power, 1e-300)
            tr.observe(abs(by_weight - by_power) / scale, f"n={n} x={_describe(x)}")
    return tr.result("two_path_consistency", spec.tol)


def _check_similarity(sg, spec) -> CheckResult:
    tr = _Tracker()
    lo, hi = spec.levels
    for n in range(lo, hi + 1):
        for t in spec.t_grid:
            for x in spec.vector_family:
                if x.is_zero():
                    continue
                res = similarity_check(sg, n, t, x, spec.tol)
                tr.observe(res.max_rel_error, f"n={n} t={t:g} x={_describe(x)}")
    return tr.result("similarity_diagram", spec.tol)


def _check_convergence_order(sg, spec) -> CheckResult:
    # Small support indices keep |q_j| h inside the Taylor regime.
    size = sg.spectrum.size
    top = 3 if size is None else min(3, size)
    x = FiniteSupport.from_mapping({j: 1.0 + 0j for j in range(1, top + 1)})
    order = convergence_order(sg, x, spec.h_grid)
    if order is None:
        return CheckResult(
            "generator_convergence_order", CheckStatus.INCONCLUSIVE, 0.0, ORDER_BAND
        )
    error = abs(order - 1.0)
    status = CheckStatus.PASS if error <= ORDER_BAND else CheckStatus.FAIL
    witnesses = ((f"estimated order for x={_describe(x)}", order),)
    return CheckResult(
        "generator_convergence_order", status, error, ORDER_BAND, witnesses if status is CheckStatus.FAIL else ()
    )


def _check_rescaling_identity(sg, spec) -> CheckResult:
    tr = _Tracker()
    lam = -1.0 + 0j  # admissible for every spectrum in the class
    try:
        shifted = sg.rescale(lam)
    except InvalidRescaling:
        return CheckResult("rescaling_identity", CheckStatus.INCONCLUSIVE, 0.0, spec.tol)
    for t in spec.t_grid:
        scale_factor = math.exp(lam.real * t)
        for x in spec.vector_family:
            if x.is_zero():
                continue
            left = shifted.apply(t, x)
            right = sg.apply(t, x).scale(scale_factor)
            tr.observe(_rel_coord_error(left, right), f"t={t:g} x={_describe(x)}")
    return tr.result("rescaling_identity", spec.tol)


def _check_isomorphism_round_trip(sg, spec) -> CheckResult:
    tr = _Tracker()
    lo, hi = spec.levels
    ulp2 = 4.5e-16  # two units in the last place, relative
    for x in spec.vector_family:
        if x.is_zero():
            continue
        e = extrapolation_embed(sg, x, n_min=lo, n_max=hi)
        fwd = limit_generator_inverse_apply(sg, limit_generator_apply(sg, e))
        bwd = limit_generator_apply(sg, limit_generator_inverse_apply(sg, e))
        for label, rt in (("A then inverse", fwd), ("inverse then A", bwd)):
            if rt.level != e.level or rt.canonical_level != e.canonical_level:
                tr.observe(1.0, f"{label}: level tag not restored for x={_describe(x)}")
                continue
            tr.observe(_rel_coord_error(rt.x, e.x), f"{label} x={_describe(x)}")
    return tr.result("isomorphism_round_trip", ulp2)


def _check_interpolation_truncation(sg, spec) -> CheckResult:
    if not isinstance(sg.spectrum, PowerLawSpectrum):
        return CheckResult(
            "interpolation_truncation", CheckStatus.SKIPPED, 0.0, spec.tol
        )
    x = geom_decay(1.0, 0.5)
    lo, hi = spec.levels
    tr = _Tracker()
    for n in range(max(lo, 0), hi + 1):
        previous = math.inf
        final = math.inf
        for J in (8, 16, 32, 64, 128):
            res = weighted_l2_norm(x, tower_weight(sg.spectrum, n), trunc=J, tol=math.inf)
            tail_norm = math.sqrt(res.tail_estimate + res.tail_uncertainty)
            if tail_norm > previous:
                tr.observe(1.0, f"tail norm not monotone at n={n} J={J}")
            previous = tail_norm
            final = tail_norm
        tr.observe(min(final, 1.0), f"final certified tail at n={n}")
    return tr.result("interpolation_truncation", spec.tol)


def _check_membership_oracle(sg, spec) -> CheckResult:
    if not isinstance(sg.spectrum, PowerLawSpectrum) or sg.spectrum.p == 0:
        return CheckResult(
            "membership_oracle_agreement", CheckStatus.SKIPPED, 0.0, spec.tol
        )
    rng = random.Random(spec.seed ^ 0x5EED)
    p = sg.spectrum.p
    lo, hi = max(spec.levels[0], -3), min(spec.levels[1], 3)
    disagreements = 0
    checked = 0
    witnesses: list[tuple[str, float]] = []
    cases = 0
    while cases < 50:
        s = rng.uniform(-4.0, 1.0)
        # Exclude analytic boundary neighborhoods so partial sums decide fast.
        if any(abs(2.0 * (n * p + s) + 1.0) < 0.3 for n in range(lo, hi + 1)):
            continue
        cases += 1
        x = power_law(1.0, s)
        verdict = membership_level(sg, x, n_min=lo - 1, n_max=hi + 1)
        for n in range(lo, hi + 1):
            brute = brute_force_membership(sg, x, n)
            if brute.status is MembershipStatus.INCONCLUSIVE:
                continue
            checked += 1
            analytic_member = verdict.member_at(n)
            brute_member = brute.status is not MembershipStatus.NOT_MEMBER
            if analytic_member != brute_member:
                disagreements += 1
                if len(witnesses) < 5:
                    witnesses.append((f"s={s:.6g} n={n}", float(n)))
    status = CheckStatus.PASS if disagreements == 0 and checked > 0 else CheckStatus.FAIL
    return CheckResult(
        "membership_oracle_agreement",
        status,
        float(disagreements),
        0.0,
        tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# Suite driver and oracles
# ---------------------------------------------------------------------------


def run_suite(sg: DiagonalSemigroup, spec: CheckSpec) -> InvariantReport:
    """Run every invariant check in the fixed declared order."""
    spec.validate()
    checks = (
        _check_semigroup_law(sg, spec),
        _check_identity_at_zero(sg, spec),
        _check_growth_bound(sg, spec),
        _check_norm_recursion(sg, spec),
        _check_two_path_consistency(sg, spec),
        _check_similarity(sg, spec),
        _check_convergence_order(sg, spec),
        _check_rescaling_identity(sg, spec),
        _check_isomorphism_round_trip(sg, spec),
        _check_interpolation_truncation(sg, spec),
        _check_membership_oracle(sg, spec),
    )
    assert tuple(c.name for c in checks) == REQUIRED_CHECKS
    return InvariantReport(spec.name, spec.seed, checks)


def brute_force_membership(
    sg: DiagonalSemigroup,
    x: ClosedForm,
    n: int,
    J_schedule: tuple[int, ...] = (250, 500, 1000, 2000, 4000, 8000),
) -> MembershipVerdict:
    """Partial-sum oracle for membership at a single level.

    Works purely from numeric term values: partial sums along a geometric
    truncation schedule, classifying by the decay ratio of successive
    increments (Cauchy-condensation style).  Never consults the analytic
    exponent criterion.
    """
    if any(b <= a for a, b in zip(J_schedule, J_schedule[1:])):
        raise ConfigError("J_schedule must be strictly increasing")
    weight = tower_weight(sg.spectrum, n)
    sums = []
    total = 0.0
    comp = 0.0
    prev_J = 0
    for J in J_schedule:
        for j in range(prev_J + 1, J + 1):
            t = (weight.weight(j) * x.modulus(j)) ** 2
            s = total + t
            if abs(total) >= abs(t):
                comp += (total - s) + t
            else:
                comp += (t - s) + total
            total = s
        prev_J = J
        sums.append(total + comp)
    increments = [b - a for a, b in zip(sums, sums[1:])]
    if increments[-1] == 0.0 or increments[-1] <= sums[-1] * 1e-30:
        return MembershipVerdict(
            MembershipStatus.MEMBER_UP_TO,
            n,
            MembershipEvidence("numerical_partial_sum", "increments vanished"),
        )
    ratios = [
        b / a for a, b in zip(increments, increments[1:]) if a > 0.0
    ][-3:]
    if ratios and all(r <= 0.90 for r in ratios):
        return MembershipVerdict(
            MembershipStatus.MEMBER_UP_TO,
            n,
            MembershipEvidence(
                "numerical_partial_sum",
                f"increment ratios decay geometrically (last {ratios[-1]:.3g})",
            ),
        )
    if ratios and all(r >= 0.995 for r in ratios):
        return MembershipVerdict(
            MembershipStatus.NOT_MEMBER,
            None,
            MembershipEvidence(
                "numerical_partial_sum",
                f"increments do not decay (last ratio {ratios[-1]:.3g})",
            ),
        )
    return MembershipVerdict(
        MembershipStatus.INCONCLUSIVE,
        None,
        MembershipEvidence("numerical_partial_sum", "increment ratios not decisive"),
    )


def convergence_order(
    sg: DiagonalSemigroup,
    x: FiniteSupport,
    h_grid: tuple[float, ...],
) -> float | None:
    """Least-squares slope of log error vs log h for the generator
    difference quotient; None when the usable grid degenerates."""
    if x.is_zero():
        return None
    target = sg.generator(x)
    points = []
    for h in h_grid:
        residual = sg.difference_quotient(h, x).sub(target)
        err = tower_norm(sg, 0, residual).expect()
        if err >= 1e-15:
            points.append((math.log(h), math.log(err)))
    if len(points) < 2:
        return None
    mean_x = sum(px for px, _ in points) / len(points)
    mean_y = sum(py for _, py in points) / len(points)
    num = sum((px - mean_x) * (py - mean_y) for px, py in points)
    den = sum((px - mean_x) ** 2 for px, py in points)
    if den == 0.0:
        return None
    return num / den
