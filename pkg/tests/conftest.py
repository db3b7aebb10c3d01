import math

import numpy as np
import pytest

from qesolver.potentials import CLHCouplings, SexticCouplings


def sample_constrained_clh(rng, k_max: int = 11) -> tuple:
    """Random (couplings, k) with the p=0 constraint satisfied and E < 0.

    b is fixed by b = 2a sqrt(2c)/(k-1); E < 0 then requires
    sqrt(c/2) < 2a^2 / (k (k-1)^2), which bounds c from above.
    """
    a = rng.uniform(1.0, 10.0)
    k = int(rng.integers(3, k_max + 1))
    t = 2.0 * a * a / (k * (k - 1) ** 2)
    c = rng.uniform(0.05, 0.8) * 2.0 * t * t
    b = 2.0 * a * math.sqrt(2.0 * c) / (k - 1)
    return CLHCouplings(a, b, c), k


def sample_constrained_sextic(rng, n: int, k_max: int = 11) -> tuple:
    """Random (couplings, k) satisfying the index-n termination constraint.

    lambda and eta are free; mu is solved from
    2 mu + sqrt(2 eta) (4n+k+2) = lambda^2 / (2 eta).
    """
    lam = rng.uniform(0.5, 5.0)
    eta = rng.uniform(0.1, 3.0)
    k = int(rng.integers(2, k_max + 1))
    mu = 0.5 * (lam * lam / (2.0 * eta) - math.sqrt(2.0 * eta) * (4 * n + k + 2))
    return SexticCouplings(mu, lam, eta), k


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)
