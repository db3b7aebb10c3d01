"""The r = gamma rho^2 / 2 map between CLH and sextic problems.

A D-dimensional CLH problem with (negative) eigenvalue E maps to a sextic
problem in D' = 2D - 4 dimensions with angular momentum L = 2 ell + 1,
couplings

    mu = 1,  lambda = b / (2 (-E)^(3/2)),  eta = c / (4 E^2),

and transformed eigenvalue E_hat = 2a / sqrt(-E).  The forward map fixes
mu = 1 and absorbs one scale, so the inverse needs an explicit gauge energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DomainError
from .potentials import CLHCouplings, Family, QuantumNumbers, SexticCouplings
from .qes_solver import (
    ConstraintReport,
    clh_coupling_constraint,
    clh_termination_energy,
    determinant_energy_roots,
    sextic_termination_constraint,
)

__all__ = ["DualityImage", "DualityReport", "clh_to_sextic", "sextic_to_clh", "verify_duality"]


@dataclass(frozen=True)
class DualityImage:
    """Sextic image of a CLH problem under the quadratic radial map."""

    sextic: SexticCouplings
    D_prime: int
    L: int
    gamma: float
    E_hat: float

    @property
    def k_prime(self) -> int:
        return self.D_prime + 2 * self.L


def clh_to_sextic(cpl: CLHCouplings, E: float, q: QuantumNumbers) -> DualityImage:
    """Forward map; requires E < 0 (gamma real) and D >= 3 (D' >= 2)."""
    if E >= 0:
        raise DomainError(f"duality transform requires E < 0, got {E}")
    if q.D < 3:
        raise DomainError(f"duality transform requires D >= 3, got D={q.D}")
    mE = -E
    image = DualityImage(
        sextic=SexticCouplings(
            mu=1.0,
            lam=cpl.b / (2.0 * mE**1.5),
            eta=cpl.c / (4.0 * mE**2),
        ),
        D_prime=2 * q.D - 4,
        L=2 * q.ell + 1,
        gamma=1.0 / math.sqrt(mE),
        E_hat=2.0 * cpl.a / math.sqrt(mE),
    )
    assert image.k_prime == 2 * q.k - 2
    return image


def sextic_to_clh(
    sextic: SexticCouplings,
    E_hat: float,
    E_gauge: float,
    D_prime: int,
    L: int,
) -> Tuple[CLHCouplings, int, int]:
    """Gauge-fixed inverse map: returns (couplings, D, ell).

    E_gauge < 0 supplies the scale the forward map absorbed; with the
    original eigenvalue as gauge this round-trips the forward map exactly.
    """
    if sextic.mu != 1.0:
        raise DomainError(f"inverse map requires mu = 1, got {sextic.mu}")
    if E_gauge >= 0:
        raise DomainError(f"gauge energy must be negative, got {E_gauge}")
    if D_prime % 2 or D_prime < 2:
        raise DomainError(f"no integer preimage: D' must be even >= 2, got {D_prime}")
    if L % 2 == 0 or L < 1:
        raise DomainError(f"no integer preimage: L must be odd >= 1, got {L}")
    mE = -E_gauge
    cpl = CLHCouplings(
        a=E_hat * math.sqrt(mE) / 2.0,
        b=2.0 * sextic.lam * mE**1.5,
        c=4.0 * sextic.eta * mE**2,
    )
    return cpl, (D_prime + 4) // 2, (L - 1) // 2


@dataclass(frozen=True)
class DualityReport:
    """Cross-check of the analytic CLH level against its sextic image."""

    E_clh: float
    image: DualityImage
    E_sextic: float  # determinant root on the image problem
    deviation: float  # |E_sextic - E_hat|
    image_constraint: ConstraintReport  # termination constraint at n = 2p
    image_truncation_index: int  # ladder index at which the image terminates

    @property
    def relative_deviation(self) -> float:
        return self.deviation / max(abs(self.image.E_hat), 1e-300)


def verify_duality(cpl: CLHCouplings, q: QuantumNumbers, p: int = 0) -> DualityReport:
    """Solve the CLH side, map across, re-solve the sextic side.

    The CLH level is the even-ladder termination energy for index p; its
    image terminates at sextic index 2p (a degree-2p polynomial in r maps to
    a degree-2p polynomial in rho^2), so for p = 0 the image termination
    constraint holds at n = p and the image determinant root must equal
    E_hat = 2a / sqrt(-E).
    """
    report = clh_coupling_constraint(2 * p, cpl, q.k) if p else clh_coupling_constraint(0, cpl, q.k)
    if not report.satisfied:
        raise DomainError(f"CLH constraint not satisfied for p={p}: {report.residual:.3e}")
    E = clh_termination_energy(p, cpl, q)
    image = clh_to_sextic(cpl, E, q)
    q_img = QuantumNumbers(D=image.D_prime, ell=image.L)
    roots = determinant_energy_roots(Family.SEXTIC, image.sextic, q_img, 2 * p)
    # the image level with the same node structure: nearest root to E_hat
    E_sextic = min(roots.energies, key=lambda e: abs(e - image.E_hat))
    return DualityReport(
        E_clh=E,
        image=image,
        E_sextic=E_sextic,
        deviation=abs(E_sextic - image.E_hat),
        image_constraint=sextic_termination_constraint(2 * p, image.sextic, image.k_prime),
        image_truncation_index=2 * p,
    )
