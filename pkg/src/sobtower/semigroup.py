"""The diagonal semigroup T(t)x = (exp(t q_j) x_j), its generator and powers.

All operators act coordinatewise.  Finite-support vectors are mapped
exactly onto finite-support vectors; closed families are mapped onto
closed families where the algebra permits and onto lazily evaluated
:class:`~sobtower.spaces.SpectralImage` values otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ContractViolation, UnsupportedCombination
from .spaces import (
    ClosedForm,
    ExplicitSpectrum,
    FiniteSupport,
    PowerLawSpectrum,
    Sequence,
    ShiftedSpectrum,
    Spectrum,
    SpectralImage,
)

__all__ = ["DiagonalSemigroup", "OrbitSample"]


@dataclass(frozen=True)
class OrbitSample:
    """A point (t, T(t)x) on an orbit."""

    t: float
    value: Sequence

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t) and self.t >= 0):
            raise ContractViolation("orbit time must be finite and nonnegative")


@dataclass(frozen=True)
class DiagonalSemigroup:
    spectrum: Spectrum

    @property
    def omega(self) -> float:
        """Growth rate sup_j Re q_j (< 0 by the spectrum invariants)."""
        return self.spectrum.omega

    # -- semigroup ---------------------------------------------------------

    def apply(self, t: float, x: Sequence) -> Sequence:
        """T(t)x, coordinatewise multiplication by exp(t q_j)."""
        if not t >= 0:
            raise ContractViolation(f"semigroup time t = {t} must be nonnegative")
        if t == 0:
            return x
        if isinstance(x, FiniteSupport):
            self._check_support(x)
            return x.map_values(lambda j, v: cmath.exp(t * self.spectrum.q(j)) * v)
        self._require_infinite(x)
        q = self.spectrum.constant_q
        if isinstance(x, ClosedForm):
            if q is not None:
                return ClosedForm(complex(x.c) * cmath.exp(t * q), x.s, x.ratio)
            return SpectralImage(x, self.spectrum, t=t)
        if isinstance(x, SpectralImage):
            self._check_image(x)
            if q is not None:
                evolved = ClosedForm(
                    complex(x.base.c) * cmath.exp(t * q), x.base.s, x.base.ratio
                )
                return SpectralImage(evolved, self.spectrum, t=x.t, power=x.power)
            return SpectralImage(x.base, self.spectrum, t=x.t + t, power=x.power)
        raise UnsupportedCombination(f"unsupported sequence kind {type(x).__name__}")

    # -- generator and powers ---------------------------------------------

    def generator(self, x: Sequence) -> Sequence:
        """A x = (q_j x_j)."""
        return self.generator_power(1, x)

    def generator_inverse(self, x: Sequence) -> Sequence:
        """A^{-1} x = (x_j / q_j); q_j is never zero by the invariants."""
        return self.generator_power(-1, x)

    def generator_power(self, k: int, x: Sequence) -> Sequence:
        """A^k x = (q_j**k x_j) for k in Z, computed by direct multiplication."""
        k = int(k)
        if k == 0:
            return x
        if isinstance(x, FiniteSupport):
            self._check_support(x)
            return x.map_values(lambda j, v: self.spectrum.q(j) ** k * v)
        self._require_infinite(x)
        if isinstance(x, ClosedForm):
            scale, step = self._power_rule(k)
            if scale is not None:
                return ClosedForm(complex(x.c) * scale, x.s + step, x.ratio)
            return SpectralImage(x, self.spectrum, power=k)
        if isinstance(x, SpectralImage):
            self._check_image(x)
            if x.power + k == 0 and x.t == 0.0:
                return x.base
            return SpectralImage(x.base, self.spectrum, t=x.t, power=x.power + k)
        raise UnsupportedCombination(f"unsupported sequence kind {type(x).__name__}")

    def _power_rule(self, k: int) -> tuple[complex | None, float]:
        """Closed-form factor for A^k on c * j**s * ratio**j, if any."""
        spectrum = self.spectrum
        if isinstance(spectrum, PowerLawSpectrum):
            q0 = complex(-spectrum.a, spectrum.b)
            return q0**k, k * spectrum.p
        q = spectrum.constant_q
        if q is not None:
            return q**k, 0.0
        return None, 0.0

    # -- rescaling and difference quotients --------------------------------

    def rescale(self, lam: complex) -> "DiagonalSemigroup":
        """The semigroup with shifted spectrum (q_j + lam).

        Raises InvalidRescaling when the shifted spectrum leaves the
        admissible class, i.e. when (A + lam) would fail the invertibility
        hypothesis the construction rests on.
        """
        return DiagonalSemigroup(self.spectrum.shifted(complex(lam)))

    def difference_quotient(self, h: float, x: FiniteSupport) -> FiniteSupport:
        """(T(h)x - x) / h on finite-support vectors."""
        if not h > 0:
            raise ContractViolation(f"step h = {h} must be positive")
        if not isinstance(x, FiniteSupport):
            raise UnsupportedCombination(
                "difference quotients are evaluated on finite-support vectors"
            )
        evolved = self.apply(h, x)
        assert isinstance(evolved, FiniteSupport)
        return evolved.sub(x).scale(1.0 / h)

    # -- helpers -----------------------------------------------------------

    def _check_support(self, x: FiniteSupport) -> None:
        size = self.spectrum.size
        if size is not None:
            for j in x.support:
                self.spectrum.q(j)  # raises SupportOutOfRange past the range

    def _require_infinite(self, x: Sequence) -> None:
        if isinstance(self.spectrum, ExplicitSpectrum):
            raise UnsupportedCombination(
                "explicit spectra only combine with finite-support sequences"
            )

    def _check_image(self, x: SpectralImage) -> None:
        if x.spectrum != self.spectrum:
            raise UnsupportedCombination(
                "sequence was produced under a different spectrum"
            )
