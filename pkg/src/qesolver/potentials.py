"""Potential families and quantum numbers for the D-dimensional radial problem.

Units are hbar = m = 1 throughout.  Four radial potential families are
supported:

* CLH:      V(r) = -a/r + b*r + c*r^2  (confining branch, c > 0)
* Sextic:   V(r) = mu*r^2 + lambda*r^4 + eta*r^6  (eta > 0)
* Harmonic: V(r) = mu*r^2  (mu > 0)
* Coulomb:  V(r) = -Z/r    (Z > 0)

Dimension D and angular momentum ell enter every downstream formula only
through k = D + 2*ell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .errors import DomainError

__all__ = [
    "Family",
    "QuantumNumbers",
    "CLHCouplings",
    "SexticCouplings",
    "HarmonicCouplings",
    "CoulombCouplings",
    "PotentialSpec",
    "k_param",
    "evaluate_potential",
    "reduce_radial",
    "unreduce_radial",
]


class Family(Enum):
    CLH = "clh"
    SEXTIC = "sextic"
    HARMONIC = "harmonic"
    COULOMB = "coulomb"


@dataclass(frozen=True)
class QuantumNumbers:
    """Spatial dimension D, angular momentum ell and truncation index p.

    p is the degree of the polynomial factor of the wavefunction (in the
    relevant ladder variable: r for CLH/Coulomb, r^2 for sextic/harmonic).
    """

    D: int
    ell: int
    p: int = 0

    def __post_init__(self) -> None:
        if self.D < 2:
            raise DomainError(f"spatial dimension must satisfy D >= 2, got {self.D}")
        if self.ell < 0:
            raise DomainError(f"angular momentum must satisfy ell >= 0, got {self.ell}")
        if self.p < 0:
            raise DomainError(f"truncation index must satisfy p >= 0, got {self.p}")

    @property
    def k(self) -> int:
        return self.D + 2 * self.ell


def k_param(q: QuantumNumbers) -> int:
    """k = D + 2*ell, the only combination through which D and ell enter."""
    return q.k


@dataclass(frozen=True)
class CLHCouplings:
    """Couplings of V(r) = -a/r + b*r + c*r^2."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class SexticCouplings:
    """Couplings of V(r) = mu*r^2 + lam*r^4 + eta*r^6."""

    mu: float
    lam: float
    eta: float


@dataclass(frozen=True)
class HarmonicCouplings:
    """Coupling of V(r) = mu*r^2; omega = sqrt(2*mu)."""

    mu: float

    @property
    def omega(self) -> float:
        return math.sqrt(2.0 * self.mu)


@dataclass(frozen=True)
class CoulombCouplings:
    """Coupling of V(r) = -Z/r."""

    Z: float


Couplings = Union[CLHCouplings, SexticCouplings, HarmonicCouplings, CoulombCouplings]

_FAMILY_OF = {
    CLHCouplings: Family.CLH,
    SexticCouplings: Family.SEXTIC,
    HarmonicCouplings: Family.HARMONIC,
    CoulombCouplings: Family.COULOMB,
}


@dataclass(frozen=True)
class PotentialSpec:
    """A potential family tag together with its coupling record.

    Use the factory classmethods: degenerate couplings are normalized to the
    dedicated family tag at construction (e.g. CLH with a=b=0 becomes
    Harmonic), and inadmissible combinations are rejected.
    """

    family: Family
    couplings: Couplings

    def __post_init__(self) -> None:
        expected = _FAMILY_OF.get(type(self.couplings))
        if expected is not self.family:
            raise DomainError(
                f"family tag {self.family} does not match couplings {type(self.couplings).__name__}"
            )

    @classmethod
    def clh(cls, a: float, b: float, c: float) -> "PotentialSpec":
        if c < 0:
            raise DomainError(f"harmonic strength must satisfy c >= 0, got {c}")
        if c == 0:
            if b != 0:
                # Cornell-type c=0, b>0 is not quasi-exactly solvable by the
                # Gaussian-times-linear exponent (it divides by sqrt(2c)).
                raise DomainError("c=0 with b != 0 (Cornell form) is unsupported")
            return cls.coulomb(a)
        if a == 0 and b == 0:
            return cls.harmonic(c)
        return cls(Family.CLH, CLHCouplings(a, b, c))

    @classmethod
    def sextic(cls, mu: float, lam: float, eta: float) -> "PotentialSpec":
        if eta < 0:
            raise DomainError(f"sextic strength must satisfy eta >= 0, got {eta}")
        if eta == 0:
            if lam != 0:
                # quartic exponent divides by sqrt(2*eta)
                raise DomainError("eta=0 with lambda != 0 is unsupported")
            return cls.harmonic(mu)
        return cls(Family.SEXTIC, SexticCouplings(mu, lam, eta))

    @classmethod
    def harmonic(cls, mu: float) -> "PotentialSpec":
        if mu <= 0:
            raise DomainError(f"harmonic branch requires mu > 0, got {mu}")
        return cls(Family.HARMONIC, HarmonicCouplings(mu))

    @classmethod
    def coulomb(cls, Z: float) -> "PotentialSpec":
        if Z <= 0:
            raise DomainError(f"Coulomb branch requires Z > 0, got {Z}")
        return cls(Family.COULOMB, CoulombCouplings(Z))


def evaluate_potential(spec: PotentialSpec, r):
    """Evaluate V(r).  Accepts a scalar or an ndarray of radii, all > 0."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("potential evaluation requires r > 0")
    cpl = spec.couplings
    if spec.family is Family.CLH:
        v = -cpl.a / r + cpl.b * r + cpl.c * r * r
    elif spec.family is Family.SEXTIC:
        r2 = r * r
        v = (cpl.mu + (cpl.lam + cpl.eta * r2) * r2) * r2
    elif spec.family is Family.HARMONIC:
        v = cpl.mu * r * r
    else:
        v = -cpl.Z / r
    return v if v.ndim else float(v)


def reduce_radial(psi_value: float, r: float, D: int) -> float:
    """R(r) = r**((D-1)/2) * psi(r)."""
    if r <= 0:
        raise DomainError("reduction requires r > 0")
    return r ** ((D - 1) / 2.0) * psi_value


def unreduce_radial(R_value: float, r: float, D: int) -> float:
    """psi(r) = R(r) / r**((D-1)/2); inverse of :func:`reduce_radial`."""
    if r <= 0:
        raise DomainError("reduction requires r > 0")
    return R_value / r ** ((D - 1) / 2.0)
