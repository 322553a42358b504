import numpy as np
import pytest

from whframe import GaborLattice


@pytest.fixture
def box():
    """Two-sample box window: an orthonormal basis at critical density."""
    return GaborLattice(4, 2, 2), np.array([1, 1, 0, 0], dtype=complex) / np.sqrt(2)


@pytest.fixture
def delta():
    """Scaled impulse at double oversampling: normalized tight, not a basis."""
    g = np.zeros(4, dtype=complex)
    g[0] = 2 ** -0.5
    return GaborLattice(4, 1, 2), g


@pytest.fixture
def impulse():
    """Unit impulse on the critical (4, 2, 2) lattice: not a frame."""
    return GaborLattice(4, 2, 2), np.array([1, 0, 0, 0], dtype=complex)
