"""Sequences, spectra, tower weights, Koethe matrices and weighted norms.

Everything here is an immutable value; every function is pure.  All series
are summed in ascending index order with Neumaier-compensated summation so
repeated calls are bit-identical.  Infinite sums come back as a
:class:`NormResult` carrying a certified tail interval: the returned value
is partial sum plus tail estimate, the uncertainty is half the width of the
analytic sandwich (integral bounds for power-type general terms, a geometric
ratio bound for polynomially modulated geometric terms).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .errors import (
    ContractViolation,
    InvalidRescaling,
    InvalidSequence,
    InvalidSpectrum,
    NormNotCertified,
    SupportOutOfRange,
    UnsupportedCombination,
)

__all__ = [
    "FiniteSupport",
    "ClosedForm",
    "SpectralImage",
    "power_law",
    "geom_decay",
    "unit_vector",
    "zero_vector",
    "ExplicitSpectrum",
    "PowerLawSpectrum",
    "ShiftedSpectrum",
    "TowerWeight",
    "tower_weight",
    "SpectralKotheMatrix",
    "ExplicitKotheMatrix",
    "NormStatus",
    "NormResult",
    "neumaier_sum",
    "weighted_l2_norm",
    "c0_seminorm",
]

# Break the summation loop once terms are this small relative to the running
# total (only where the tail is certified separately anyway).
_NEGLIGIBLE = 1e-40


def _require_finite(z: complex, what: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidSequence(f"{what} must have finite real and imaginary parts")


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteSupport:
    """A finitely supported sequence, stored as (index, value) pairs.

    Indices are 1-based, strictly positive and strictly increasing; stored
    values are nonzero.
    """

    entries: tuple[tuple[int, complex], ...]

    def __post_init__(self) -> None:
        last = 0
        for j, v in self.entries:
            if not isinstance(j, int) or j < 1:
                raise InvalidSequence(f"index {j!r} is not a positive integer")
            if j <= last:
                raise InvalidSequence("indices must be strictly increasing without duplicates")
            v = complex(v)
            _require_finite(v, f"coefficient at index {j}")
            if v == 0:
                raise InvalidSequence(f"explicitly stored zero at index {j}")
            last = j

    @classmethod
    def from_mapping(cls, values: Mapping[int, complex]) -> "FiniteSupport":
        items = tuple(
            (int(j), complex(v)) for j, v in sorted(values.items()) if complex(v) != 0
        )
        return cls(items)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.entries)

    def coefficient(self, j: int) -> complex:
        for i, v in self.entries:
            if i == j:
                return v
        return 0j

    def modulus(self, j: int) -> float:
        return abs(self.coefficient(j))

    def is_zero(self) -> bool:
        return not self.entries

    # Small vector algebra used by the semigroup and the verification suite.
    def map_values(self, fn) -> "FiniteSupport":
        return FiniteSupport.from_mapping({j: fn(j, v) for j, v in self.entries})

    def scale(self, alpha: complex) -> "FiniteSupport":
        return self.map_values(lambda j, v: alpha * v)

    def add(self, other: "FiniteSupport") -> "FiniteSupport":
        acc = dict(self.entries)
        for j, v in other.entries:
            acc[j] = acc.get(j, 0j) + v
        return FiniteSupport.from_mapping(acc)

    def sub(self, other: "FiniteSupport") -> "FiniteSupport":
        return self.add(other.scale(-1.0))

    def truncate(self, upto: int) -> "FiniteSupport":
        return FiniteSupport(tuple((j, v) for j, v in self.entries if j <= upto))


def unit_vector(j: int) -> FiniteSupport:
    return FiniteSupport(((j, 1.0 + 0j),))


def zero_vector() -> FiniteSupport:
    return FiniteSupport(())


@dataclass(frozen=True)
class ClosedForm:
    """The closed family x_j = c * j**s * ratio**j.

    ``ratio == 1`` gives the pure power law x_j = c * j**s, ``0 < |ratio| < 1``
    the (polynomially modulated) geometric decay.  The family is closed under
    the diagonal generator for power-law spectra and under the semigroup for
    constant spectra, which is why the two public kinds share one carrier.
    """

    c: complex
    s: float
    ratio: complex = 1.0 + 0j

    def __post_init__(self) -> None:
        c = complex(self.c)
        _require_finite(c, "prefactor c")
        if c == 0:
            raise InvalidSequence("prefactor c must be nonzero")
        if not math.isfinite(self.s):
            raise InvalidSequence("exponent s must be finite")
        r = complex(self.ratio)
        _require_finite(r, "ratio")
        if r == 1:
            return
        if not 0 < abs(r) < 1:
            raise InvalidSequence("ratio must be 1 or have modulus in (0, 1)")

    @property
    def is_power_law(self) -> bool:
        return complex(self.ratio) == 1

    @property
    def decay(self) -> float:
        """Modulus of the geometric ratio."""
        return abs(complex(self.ratio))

    def coefficient(self, j: int) -> complex:
        base = complex(self.c) * j**self.s
        if self.is_power_law:
            return base
        return base * complex(self.ratio) ** j

    def modulus(self, j: int) -> float:
        m = abs(complex(self.c)) * j**self.s
        if self.is_power_law:
            return m
        return m * self.decay**j


def power_law(c: complex, s: float) -> ClosedForm:
    """x_j = c * j**s for all j >= 1."""
    return ClosedForm(complex(c), float(s), 1.0 + 0j)


def geom_decay(c: complex, r: float) -> ClosedForm:
    """x_j = c * r**j for all j >= 1, with 0 < r < 1."""
    r = float(r)
    if not 0 < r < 1:
        raise InvalidSequence("geometric ratio r must satisfy 0 < r < 1")
    return ClosedForm(complex(c), 0.0, complex(r))


@dataclass(frozen=True)
class SpectralImage:
    """q_j**power * exp(t * q_j) applied coordinatewise to a closed family.

    Produced when the semigroup or generator acts on a :class:`ClosedForm`
    that is not preserved exactly (non-constant spectra).  Supports
    coordinate queries and norm evaluation; the tail certificate uses the
    growth envelope |exp(t q_j)| <= exp(t * omega).
    """

    base: ClosedForm
    spectrum: "Spectrum"
    t: float = 0.0
    power: int = 0

    def __post_init__(self) -> None:
        if self.t < 0:
            raise ContractViolation("evolution time must be nonnegative")

    def coefficient(self, j: int) -> complex:
        q = self.spectrum.q(j)
        value = self.base.coefficient(j) * cmath.exp(self.t * q)
        if self.power:
            value *= q**self.power
        return value

    def modulus(self, j: int) -> float:
        q = self.spectrum.q(j)
        m = self.base.modulus(j) * math.exp(self.t * q.real)
        if self.power:
            m *= abs(q) ** self.power
        return m


Sequence = FiniteSupport | ClosedForm | SpectralImage


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitSpectrum:
    """A finite eigenvalue list q_1..q_J; only valid with finite-support
    vectors whose support lies in 1..J."""

    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise InvalidSpectrum("explicit spectrum must be nonempty")
        for k, q in enumerate(self.values, start=1):
            q = complex(q)
            if not (math.isfinite(q.real) and math.isfinite(q.imag)):
                raise InvalidSpectrum(f"q_{k} is not finite")
            if q.real >= 0:
                raise InvalidSpectrum(f"Re q_{k} = {q.real} violates sup Re q_j < 0")
            if abs(q) < 1:
                raise InvalidSpectrum(f"|q_{k}| = {abs(q)} violates |q_j| >= 1")

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def omega(self) -> float:
        return max(q.real for q in self.values)

    def q(self, j: int) -> complex:
        if not 1 <= j <= len(self.values):
            raise SupportOutOfRange(f"index {j} outside explicit spectrum range 1..{len(self.values)}")
        return complex(self.values[j - 1])

    def abs_q(self, j: int) -> float:
        return abs(self.q(j))

    @property
    def constant_q(self) -> complex | None:
        first = complex(self.values[0])
        if all(complex(q) == first for q in self.values):
            return first
        return None

    def shifted(self, lam: complex) -> "ExplicitSpectrum":
        try:
            return ExplicitSpectrum(tuple(complex(q) + lam for q in self.values))
        except InvalidSpectrum as exc:
            raise InvalidRescaling(str(exc)) from exc


@dataclass(frozen=True)
class PowerLawSpectrum:
    """q_j = (-a + i b) * j**p with a > 0, p >= 0 and hypot(a, b) >= 1."""

    a: float
    p: float
    b: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.p) and math.isfinite(self.b)):
            raise InvalidSpectrum("spectrum parameters must be finite")
        if self.a <= 0:
            raise InvalidSpectrum("a must be positive so that sup Re q_j < 0")
        if self.p < 0:
            raise InvalidSpectrum("p must be nonnegative")
        if math.hypot(self.a, self.b) < 1:
            raise InvalidSpectrum("hypot(a, b) >= 1 is required so that |q_j| >= 1")

    @property
    def size(self) -> None:
        return None

    @property
    def modulus_scale(self) -> float:
        """|q_j| = modulus_scale * j**p."""
        return math.hypot(self.a, self.b)

    @property
    def omega(self) -> float:
        return -self.a

    def q(self, j: int) -> complex:
        return complex(-self.a, self.b) * j**self.p

    def abs_q(self, j: int) -> float:
        if self.p == 0:
            return self.modulus_scale
        return self.modulus_scale * j**self.p

    @property
    def constant_q(self) -> complex | None:
        if self.p == 0:
            return complex(-self.a, self.b)
        return None

    def shifted(self, lam: complex) -> "Spectrum":
        lam = complex(lam)
        if lam == 0:
            return self
        if self.p == 0:
            # Constant spectra stay in the family.
            a_new = self.a - lam.real
            b_new = self.b + lam.imag
            if a_new <= 0 or math.hypot(a_new, b_new) < 1:
                raise InvalidRescaling(
                    f"shift {lam} leaves the admissible class (sup Re < 0, |q| >= 1)"
                )
            return PowerLawSpectrum(a_new, 0.0, b_new)
        return ShiftedSpectrum(self, lam)


@dataclass(frozen=True)
class ShiftedSpectrum:
    """q_j = base.q(j) + shift for a non-constant power-law base."""

    base: PowerLawSpectrum
    shift: complex

    def __post_init__(self) -> None:
        lam = complex(self.shift)
        if not (math.isfinite(lam.real) and math.isfinite(lam.imag)):
            raise InvalidRescaling("shift must be finite")
        if self.omega >= 0:
            raise InvalidRescaling(f"shift {lam} violates sup Re q_j < 0")
        if self._min_modulus() < 1:
            raise InvalidRescaling(f"shift {lam} violates |q_j| >= 1")

    @property
    def size(self) -> None:
        return None

    @property
    def omega(self) -> float:
        # Re q_j = -a j**p + Re(shift) is maximal at j = 1.
        return -self.base.a + complex(self.shift).real

    def _min_modulus(self) -> float:
        # |q_j|**2 is quadratic in u = j**p >= 1 with positive leading
        # coefficient, so the integer minimizer sits at j = 1 or next to the
        # real vertex.
        a, b, p = self.base.a, self.base.b, self.base.p
        lam = complex(self.shift)
        u_star = (a * lam.real - b * lam.imag) / (a * a + b * b)
        candidates = {1}
        if u_star > 1 and p > 0:
            j_star = u_star ** (1.0 / p)
            for j in (math.floor(j_star), math.ceil(j_star), math.ceil(j_star) + 1):
                if j >= 1:
                    candidates.add(int(j))
        return min(abs(self.q(j)) for j in sorted(candidates))

    def q(self, j: int) -> complex:
        return self.base.q(j) + complex(self.shift)

    def abs_q(self, j: int) -> float:
        return abs(self.q(j))

    @property
    def constant_q(self) -> complex | None:
        return None

    def shifted(self, lam: complex) -> "Spectrum":
        return self.base.shifted(complex(self.shift) + complex(lam))


Spectrum = ExplicitSpectrum | PowerLawSpectrum | ShiftedSpectrum


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TowerWeight:
    """The level-n weight family v_{n,j} = |q_j|**n."""

    spectrum: Spectrum
    level: int

    def weight(self, j: int) -> float:
        if self.level == 0:
            return 1.0
        return self.spectrum.abs_q(j) ** self.level


def tower_weight(spectrum: Spectrum, n: int) -> TowerWeight:
    return TowerWeight(spectrum, int(n))


@dataclass(frozen=True)
class SpectralKotheMatrix:
    """The ladder b_{k,j} = |q_j|**k, k >= 0, generated by a spectrum."""

    spectrum: Spectrum

    def weight(self, k: int, j: int) -> float:
        if k < 0:
            raise ContractViolation("row index k must be nonnegative")
        if k == 0:
            return 1.0
        return self.spectrum.abs_q(j) ** k


@dataclass(frozen=True)
class ExplicitKotheMatrix:
    """A finite table b_{k,j} >= 0 (rows indexed by k, columns by j)."""

    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise InvalidSequence("Koethe matrix needs at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise InvalidSequence("Koethe matrix rows must be nonempty and rectangular")
        for r in self.rows:
            for v in r:
                if not (math.isfinite(v) and v >= 0):
                    raise InvalidSequence("Koethe matrix entries must be finite and >= 0")
        for j in range(width):
            if all(r[j] == 0 for r in self.rows):
                raise InvalidSequence(f"column {j + 1} is identically zero (Hausdorff condition)")

    @property
    def column_count(self) -> int:
        return len(self.rows[0])

    def weight(self, k: int, j: int) -> float:
        if not 0 <= k < len(self.rows):
            raise ContractViolation(f"row index {k} outside 0..{len(self.rows) - 1}")
        if not 1 <= j <= self.column_count:
            raise SupportOutOfRange(f"column index {j} outside 1..{self.column_count}")
        return self.rows[k][j - 1]


KotheMatrix = SpectralKotheMatrix | ExplicitKotheMatrix


# ---------------------------------------------------------------------------
# Summation
# ---------------------------------------------------------------------------


def neumaier_sum(terms: Iterable[float]) -> float:
    """Neumaier-compensated sum in iteration order."""
    total = 0.0
    comp = 0.0
    for t in terms:
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
    return total + comp


class NormStatus(Enum):
    OK = "ok"
    INCONCLUSIVE = "inconclusive"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class NormResult:
    """Outcome of an infinite (or finite) weighted-norm evaluation.

    ``value`` is sqrt(partial_sum + tail_estimate) when certified.  The
    sums-of-squares tail lies in
    [tail_estimate - tail_uncertainty, tail_estimate + tail_uncertainty].
    """

    status: NormStatus
    value: float | None = None
    partial_sum: float = 0.0
    tail_estimate: float = 0.0
    tail_uncertainty: float = 0.0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status is NormStatus.OK

    def expect(self) -> float:
        if self.status is not NormStatus.OK or self.value is None:
            raise NormNotCertified(f"norm is {self.status.value}: {self.detail}")
        return self.value


def _finish(partial: float, estimate: float, uncertainty: float, tol: float) -> NormResult:
    total = partial + estimate
    scale = max(total, 1e-300)
    if uncertainty <= tol * scale:
        return NormResult(NormStatus.OK, math.sqrt(total), partial, estimate, uncertainty)
    return NormResult(
        NormStatus.INCONCLUSIVE,
        None,
        partial,
        estimate,
        uncertainty,
        detail=f"tail uncertainty {uncertainty:.3e} exceeds tol * sum = {tol * scale:.3e}",
    )


def _power_tail_interval(C: float, E: float, J: int) -> tuple[float, float]:
    """Integral sandwich for sum_{j>J} C * j**E with E < -1."""
    k = -E - 1.0
    upper = C * J ** (E + 1.0) / k
    lower = C * (J + 1.0) ** (E + 1.0) / k
    return lower, upper


def _geometric_tail_bound(term_at, E: float, R: float, J: int) -> float:
    """Upper bound for sum_{j>J} f(j) where f(j+1)/f(j) <= ((j+1)/j)**E * R.

    Requires R < 1; J is advanced implicitly by the caller past the point
    where the ratio bound drops below one.
    """
    first = term_at(J + 1)
    if first == 0.0:
        # Underflowed past double precision; the true tail is below 5e-324.
        return 0.0
    kappa = R * ((J + 2.0) / (J + 1.0)) ** max(E, 0.0)
    if kappa >= 1.0:
        return math.inf
    return first / (1.0 - kappa)


def _geometric_safe_start(E: float, R: float) -> float:
    """Smallest j past which the term ratio bound ((j+1)/j)**E * R is < 1."""
    if E <= 0 or R >= 1.0:
        return 1.0
    return 2.0 + 1.0 / ((1.0 / R) ** (1.0 / E) - 1.0)


def _sum_terms(term_at, upto: int, decreasing_from: float) -> tuple[float, int]:
    """Neumaier partial sum of term_at(j), j = 1..upto, with a deterministic
    early break once terms past the maximizer stop contributing."""
    total = 0.0
    comp = 0.0
    j_eff = upto
    for j in range(1, upto + 1):
        t = term_at(j)
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
        if j > decreasing_from and (t == 0.0 or t <= (total + comp) * _NEGLIGIBLE):
            j_eff = j
            break
    return total + comp, j_eff


def weighted_l2_norm(
    x: Sequence,
    w: TowerWeight,
    trunc: int = 100_000,
    tol: float = 1e-12,
) -> NormResult:
    """(sum_j (v_{n,j} |x_j|)**2)**0.5 with a certified tail.

    Finite-support input is summed exactly; closed families get a partial
    sum to ``trunc`` plus an analytic tail interval.  The power-type
    divergence criterion (squared exponent >= -1) is decided analytically
    and reported as DIVERGENT rather than inconclusive.
    """
    if tol <= 0:
        raise ContractViolation("tol must be positive")
    if trunc < 1:
        raise ContractViolation("trunc must be a positive integer")
    spectrum = w.spectrum

    if isinstance(x, FiniteSupport):
        size = spectrum.size
        if size is not None:
            bad = [j for j in x.support if j > size]
            if bad:
                raise SupportOutOfRange(
                    f"support indices {bad} outside explicit spectrum range 1..{size}"
                )
        terms = [(w.weight(j) * abs(v)) ** 2 for j, v in x.entries]
        if len(terms) == 1:
            j, v = x.entries[0]
            return NormResult(NormStatus.OK, w.weight(j) * abs(v), terms[0])
        total = neumaier_sum(terms)
        return NormResult(NormStatus.OK, math.sqrt(total), total)

    if isinstance(spectrum, ExplicitSpectrum):
        raise UnsupportedCombination(
            "explicit spectra only combine with finite-support sequences"
        )

    if isinstance(x, ClosedForm):
        return _closed_form_norm(x, spectrum, w.level, trunc, tol)
    if isinstance(x, SpectralImage):
        return _image_norm(x, spectrum, w.level, trunc, tol)
    raise UnsupportedCombination(f"unsupported sequence kind {type(x).__name__}")


def _closed_form_norm(
    x: ClosedForm, spectrum: Spectrum, level: int, trunc: int, tol: float
) -> NormResult:
    if isinstance(spectrum, ShiftedSpectrum):
        return _shifted_closed_form_norm(x, spectrum, level, trunc, tol)
    assert isinstance(spectrum, PowerLawSpectrum)
    m, p = spectrum.modulus_scale, spectrum.p
    C = (m**level * abs(complex(x.c))) ** 2
    E = 2.0 * (level * p + x.s)
    R = x.decay**2

    if R == 1.0:
        if E >= -1.0:
            return NormResult(
                NormStatus.DIVERGENT,
                detail=f"power-type summand exponent {E:.6g} >= -1",
            )
        term = lambda j: C * j**E  # noqa: E731
        partial, J = _sum_terms(term, trunc, decreasing_from=0.0)
        lower, upper = _power_tail_interval(C, E, J)
        return _finish(partial, 0.5 * (lower + upper), 0.5 * (upper - lower), tol)

    term = lambda j: C * j**E * R**j  # noqa: E731
    peak = E / (-math.log(R)) if E > 0 else 1.0
    start = max(peak, _geometric_safe_start(E, R))
    # Always sum past the safe point so the ratio bound applies at the break.
    J = max(trunc, math.ceil(start) + 1)
    partial, J_eff = _sum_terms(term, J, decreasing_from=start)
    bound = _geometric_tail_bound(term, E, R, J_eff)
    return _finish(partial, 0.0, bound, tol)


def _shifted_closed_form_norm(
    x: ClosedForm, spectrum: ShiftedSpectrum, level: int, trunc: int, tol: float
) -> NormResult:
    # |q_j + lam| / |q_j| lies within 1 +- |lam| / |q_j| for j past the
    # truncation point, so the tail is the base-spectrum tail up to a
    # level-dependent factor.
    base = spectrum.base
    m, p = base.modulus_scale, base.p
    E = 2.0 * (level * p + x.s)
    R = x.decay**2
    if R == 1.0 and E >= -1.0:
        return NormResult(
            NormStatus.DIVERGENT,
            detail=f"power-type summand exponent {E:.6g} >= -1 (shift-invariant)",
        )
    term = lambda j: (spectrum.abs_q(j) ** level * x.modulus(j)) ** 2  # noqa: E731
    if R < 1.0:
        start = max(
            E / (-math.log(R)) if E > 0 else 1.0, _geometric_safe_start(E, R)
        )
        J_cap = max(trunc, math.ceil(start) + 1)
    else:
        start = math.inf
        J_cap = trunc
    partial, J = _sum_terms(term, J_cap, decreasing_from=start)
    rel = abs(complex(spectrum.shift)) / (m * (J + 1.0) ** p)
    if rel >= 1.0:
        return NormResult(
            NormStatus.INCONCLUSIVE,
            partial_sum=partial,
            detail="truncation too small to control the spectral shift in the tail",
        )
    factor = max((1.0 + rel) ** (2 * level), (1.0 - rel) ** (2 * level))
    C = (m**level * abs(complex(x.c))) ** 2
    if R == 1.0:
        lower, upper = _power_tail_interval(C, E, J)
        upper *= factor
        lower /= factor
        return _finish(partial, 0.5 * (lower + upper), 0.5 * (upper - lower), tol)
    base_term = lambda j: C * j**E * R**j  # noqa: E731
    bound = _geometric_tail_bound(base_term, E, R, J) * factor
    return _finish(partial, 0.0, bound, tol)


def _image_norm(
    x: SpectralImage, spectrum: Spectrum, level: int, trunc: int, tol: float
) -> NormResult:
    if spectrum != x.spectrum:
        raise UnsupportedCombination("norm weight and image were built from different spectra")
    eff_level = level + x.power
    base = x.base
    if x.t == 0.0:
        return _closed_form_norm(base, spectrum, eff_level, trunc, tol)
    if isinstance(spectrum, ShiftedSpectrum):
        pls = spectrum.base
    else:
        assert isinstance(spectrum, PowerLawSpectrum)
        pls = spectrum
    m, p = pls.modulus_scale, pls.p
    E = 2.0 * (eff_level * p + base.s)
    R = base.decay**2
    envelope = math.exp(2.0 * x.t * spectrum.omega)
    term = lambda j: (spectrum.abs_q(j) ** level * x.modulus(j)) ** 2  # noqa: E731
    if p > 0:
        peak = max(1.0, (max(E, 1.0) / (2.0 * x.t * pls.a * p)) ** (1.0 / p))
    else:
        peak = 1.0
    start = max(peak, E / (2.0 * x.t * pls.a)) + 2.0
    partial, J = _sum_terms(term, max(trunc, math.ceil(start) + 1), decreasing_from=start)

    if R == 1.0 and p >= 1.0 and not isinstance(spectrum, ShiftedSpectrum):
        # Terms are C j**E exp(-2 t a j**p); successive j gain at least
        # exp(-2 t a) for p >= 1, giving a geometric tail bound.
        geo = math.exp(-2.0 * x.t * pls.a)
        bound = _geometric_tail_bound(term, E, geo, J)
        if bound < math.inf:
            return _finish(partial, 0.0, bound, tol)
    # Fall back to the growth envelope: tail <= exp(2 t omega) * base tail at
    # the effective level (valid for any admissible spectrum).
    C = (m**eff_level * abs(complex(base.c))) ** 2
    if R == 1.0:
        if E >= -1.0:
            return NormResult(
                NormStatus.INCONCLUSIVE,
                partial_sum=partial,
                detail="envelope bound cannot certify a divergent-profile base",
            )
        _, upper = _power_tail_interval(C, E, J)
        return _finish(partial, 0.0, envelope * upper, tol)
    base_term = lambda j: C * j**E * R**j  # noqa: E731
    bound = _geometric_tail_bound(base_term, E, R, J)
    if bound == math.inf:
        return NormResult(
            NormStatus.INCONCLUSIVE,
            partial_sum=partial,
            detail="geometric ratio bound not below one at the truncation point",
        )
    return _finish(partial, 0.0, envelope * bound, tol)


# ---------------------------------------------------------------------------
# c0 seminorms
# ---------------------------------------------------------------------------


def c0_seminorm(
    x: Sequence,
    matrix: KotheMatrix,
    k: int,
    trunc: int = 100_000,
) -> NormResult:
    """p_k(x) = sup_j b_{k,j} |x_j|.

    For closed families against spectral weight rows the scan extends past
    the analytic maximizer so the truncated supremum equals the true one.
    """
    if isinstance(x, FiniteSupport):
        if x.is_zero():
            return NormResult(NormStatus.OK, 0.0)
        best = max(matrix.weight(k, j) * abs(v) for j, v in x.entries)
        return NormResult(NormStatus.OK, best)

    if isinstance(matrix, ExplicitKotheMatrix):
        J = min(trunc, matrix.column_count)
        best = max(matrix.weight(k, j) * x.modulus(j) for j in range(1, J + 1))
        return NormResult(NormStatus.OK, best)

    spectrum = matrix.spectrum
    if isinstance(spectrum, ExplicitSpectrum):
        raise UnsupportedCombination(
            "explicit spectra only combine with finite-support sequences"
        )
    if isinstance(x, ClosedForm):
        pls = spectrum.base if isinstance(spectrum, ShiftedSpectrum) else spectrum
        E = k * pls.p + x.s
        R = x.decay
        if R == 1.0:
            if E > 0:
                return NormResult(
                    NormStatus.DIVERGENT,
                    detail=f"weights grow like j**{E:.6g} against a non-decaying sequence",
                )
            # Nonpositive exponent: the supremum is attained at (or decays
            # from) j = 1; constant profile included.
            values = (matrix.weight(k, j) * x.modulus(j) for j in range(1, 4))
            sup = max(values)
            if E == 0:
                sup = max(sup, pls.modulus_scale**k * abs(complex(x.c)))
            return NormResult(NormStatus.OK, sup)
        peak = E / (-math.log(R)) if E > 0 else 1.0
        scan_to = max(2, math.ceil(peak) + 2)
        best = max(matrix.weight(k, j) * x.modulus(j) for j in range(1, scan_to + 1))
        return NormResult(NormStatus.OK, best)

    if isinstance(x, SpectralImage):
        # exp(t Re q_j) decays in j, so the finite-scan argument of the
        # closed-form case still covers the supremum.
        pls = spectrum.base if isinstance(spectrum, ShiftedSpectrum) else spectrum
        E = (k + x.power) * pls.p + x.base.s
        R = x.base.decay
        peak = E / (-math.log(R)) if (R < 1.0 and E > 0) else max(1.0, E)
        scan_to = max(2, min(trunc, math.ceil(peak) + 2))
        best = max(matrix.weight(k, j) * x.modulus(j) for j in range(1, scan_to + 1))
        return NormResult(NormStatus.OK, best)
    raise UnsupportedCombination(f"unsupported sequence kind {type(x).__name__}")
