import pytest

from sobtower import DiagonalSemigroup, PowerLawSpectrum


@pytest.fixture
def sg():
    """The reference semigroup with q_j = -j."""
    return DiagonalSemigroup(PowerLawSpectrum(1.0, 1.0))
