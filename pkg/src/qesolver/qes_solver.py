"""Quantization conditions and bound states for the quasi-exact families.

The quantization machinery differs structurally between the two main
families even though both use the same tridiagonal determinant:

* CLH: the energy appears in A_n, so termination A_p = 0 fixes E outright
  and the vanishing determinant becomes a *constraint on the couplings*.
* Sextic: A_n contains only couplings, so termination fixes the coupling
  constraint and the determinant (whose diagonal B_n is affine in E) fixes
  the *energy*.

For CLH the unit-step coefficient ladder from :mod:`.recurrence` is the
ground truth for p >= 1 (see `closed_forms` for the commonly quoted
alternative expressions, which do not survive direct expansion of the
determinant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import ConstraintError, DomainError, SolverError
from .potentials import (
    CLHCouplings,
    CoulombCouplings,
    Family,
    HarmonicCouplings,
    QuantumNumbers,
    SexticCouplings,
)
from .recurrence import (
    AnsatzExponent,
    ExponentForm,
    RecurrenceCoeffs,
    clh_exponent,
    clh_ladder,
    harmonic_exponent,
    harmonic_recurrence,
    sextic_exponent,
    sextic_recurrence,
)
from .rootfind import scan_roots

__all__ = [
    "ConstraintReport",
    "BoundState",
    "EnergyRoots",
    "continuant_det",
    "clh_termination_energy",
    "clh_degree_energy",
    "clh_coupling_constraint",
    "clh_closed_form_energy",
    "clh_wavefunction",
    "clh_coupling_roots",
    "sextic_termination_constraint",
    "sextic_energy_p0",
    "sextic_energy_p1",
    "sextic_wavefunction",
    "determinant_energy_roots",
    "harmonic_spectrum",
    "coulomb_spectrum",
    "harmonic_wavefunction",
    "coulomb_wavefunction",
]

CONSTRAINT_TOL = 1e-9
TERMINATION_TOL = 1e-10


@dataclass(frozen=True)
class ConstraintReport:
    """Residual of a quantization constraint, with a magnitude scale.

    `satisfied` holds iff |residual| <= tolerance * scale, where scale is
    the largest additive term entering the constraint expression.
    """

    residual: float
    scale: float
    description: str
    tolerance: float = CONSTRAINT_TOL

    @property
    def satisfied(self) -> bool:
        return abs(self.residual) <= self.tolerance * max(self.scale, 1e-300)


@dataclass(frozen=True)
class BoundState:
    """A quasi-exact bound state: energy, polynomial coefficients, exponent.

    psi(r) = (sum_i coeffs[i] r^(step*i)) * r^ell * exp[g(r)] and
    R(r) = r^((D-1)/2) psi(r).  coeffs[0] = 1 by convention.
    """

    energy: float
    coeffs: Tuple[float, ...]
    exponent: AnsatzExponent
    q: QuantumNumbers
    family: Family
    step: int = 1

    @property
    def degree(self) -> int:
        """Polynomial degree in r of the polynomial factor."""
        return self.step * (len(self.coeffs) - 1)

    def poly_value(self, r):
        out = 0.0 * np.asarray(r, dtype=float)
        for c in reversed(self.coeffs):
            out = out * np.asarray(r) ** self.step + c
        return out

    def poly_deriv(self, r):
        r = np.asarray(r, dtype=float)
        out = 0.0 * r
        for i, c in enumerate(self.coeffs):
            m = self.step * i
            if m:
                out = out + m * c * r ** (m - 1)
        return out

    def poly_deriv2(self, r):
        r = np.asarray(r, dtype=float)
        out = 0.0 * r
        for i, c in enumerate(self.coeffs):
            m = self.step * i
            if m >= 2:
                out = out + m * (m - 1) * c * r ** (m - 2)
        return out

    def psi(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise DomainError("wavefunction evaluation requires r > 0")
        val = self.poly_value(r) * r**self.q.ell * np.exp(self.exponent.value(r))
        return val if val.ndim else float(val)

    def R(self, r):
        r = np.asarray(r, dtype=float)
        val = r ** ((self.q.D - 1) / 2.0) * self.psi(r)
        return val if val.ndim else float(val)

    def norm_integral(self, r_max: float = 30.0, n_points: int = 20000) -> float:
        """integral of |R|^2 dr, with the cutoff doubled until converged."""
        prev = None
        cutoff = r_max
        for _ in range(12):
            r = np.linspace(1e-8, cutoff, n_points)
            g = self.exponent.value(r)
            integrand = np.where(
                g > -700.0,
                (self.poly_value(r) * np.exp(g)) ** 2 * r ** (self.q.k - 1),
                0.0,
            )
            total = float(np.trapezoid(integrand, r))
            if prev is not None and abs(total - prev) <= 1e-8 * max(abs(total), 1e-300):
                return total
            prev = total
            cutoff *= 2.0
            n_points *= 2
        raise SolverError("normalization integral did not converge under cutoff doubling")


def continuant_det(coeffs: RecurrenceCoeffs, p: int) -> float:
    """(p+1) x (p+1) determinant with diagonal B_0..B_p, superdiagonal
    C_1..C_p and subdiagonal A_0..A_(p-1), via the continuant recurrence
    D_m = B_m D_(m-1) - A_(m-1) C_m D_(m-2)."""
    return _continuant(coeffs, p)[0]


def _continuant(coeffs: RecurrenceCoeffs, p: int):
    """Continuant value plus a running magnitude scale for tolerance tests."""
    if p < 0:
        raise DomainError("determinant size requires p >= 0")
    d_prev2, d_prev = 1.0, coeffs.B(0)
    s_prev2, s_prev = 1.0, abs(coeffs.B(0))
    for m in range(1, p + 1):
        cross = coeffs.A(m - 1) * coeffs.C(m)
        d_prev2, d_prev = d_prev, coeffs.B(m) * d_prev - cross * d_prev2
        s_prev2, s_prev = s_prev, abs(coeffs.B(m)) * s_prev + abs(cross) * s_prev2
    return d_prev, max(s_prev, 1e-300)


def clh_degree_energy(degree: int, cpl: CLHCouplings, k: int) -> float:
    """Energy fixed by terminating the unit-step CLH ladder at `degree`:
    E = -b^2/(4c) + sqrt(c/2) (2*degree + k)."""
    if cpl.c <= 0:
        raise DomainError(f"CLH termination requires c > 0, got {cpl.c}")
    if degree < 0:
        raise DomainError("polynomial degree must be >= 0")
    return -cpl.b**2 / (4.0 * cpl.c) + math.sqrt(cpl.c / 2.0) * (2 * degree + k)


def clh_termination_energy(p: int, cpl: CLHCouplings, q: QuantumNumbers) -> float:
    """E_p = -b^2/(4c) + sqrt(c/2) (4p + 2 ell + D).

    This indexes the even rungs of the ladder; it equals
    :func:`clh_degree_energy` at polynomial degree 2p.
    """
    return clh_degree_energy(2 * p, cpl, q.k)


def clh_coupling_constraint(
    p: int, cpl: CLHCouplings, k: int, tolerance: float = CONSTRAINT_TOL
) -> ConstraintReport:
    """Coupling constraint for a degree-p CLH state.

    p = 0: residual of b(k-1) - 2a sqrt(2c)  (the B_0 = 0 condition).
    p >= 1: the (p+1) x (p+1) continuant over the unit-step ladder,
    evaluated at the termination energy for degree p.
    """
    if cpl.c <= 0:
        raise DomainError(f"CLH constraint requires c > 0, got {cpl.c}")
    if p == 0:
        lhs = cpl.b * (k - 1)
        rhs = 2.0 * cpl.a * math.sqrt(2.0 * cpl.c)
        return ConstraintReport(
            residual=lhs - rhs,
            scale=max(abs(lhs), abs(rhs), 1.0),
            description="CLH p=0 coupling constraint b(k-1) = 2a sqrt(2c)",
            tolerance=tolerance,
        )
    E = clh_degree_energy(p, cpl, k)
    det, scale = _continuant(clh_ladder(E, cpl, k), p)
    return ConstraintReport(
        residual=det,
        scale=scale,
        description=f"CLH degree-{p} determinant constraint",
        tolerance=tolerance,
    )


def clh_closed_form_energy(n: int, k: int, a: float, b: float) -> float:
    """E = (1/2) [ b(2n+k-1)^2/(2a) + b(2n+k-1)/(2a) - 4a^2/(2n+k-1)^2 ].

    At n = 0 this agrees with the termination energy exactly when the p=0
    coupling constraint holds; for n >= 1 it is a closed form quoted in the
    literature whose validity domain is unclear (see `closed_forms`), so it
    is not used as ground truth for excited states.
    """
    if a == 0:
        raise DomainError("closed-form energy requires a != 0")
    if k < 2:
        raise DomainError(f"requires k >= 2, got {k}")
    m = 2 * n + k - 1
    return 0.5 * (b * m * m / (2.0 * a) + b * m / (2.0 * a) - 4.0 * a * a / (m * m))


def _forward_coeffs(coeffs: RecurrenceCoeffs, p: int) -> np.ndarray:
    """a_0..a_(p+1) by forward recurrence with a_0 = 1.

    Uses the relations B(0) a_0 + C(1) a_1 = 0 and
    A(j-1) a_(j-1) + B(j) a_j + C(j+1) a_(j+1) = 0.
    """
    a = np.zeros(p + 2)
    a[0] = 1.0
    a[1] = -coeffs.B(0) * a[0] / coeffs.C(1)
    for j in range(1, p + 1):
        a[j + 1] = -(coeffs.A(j - 1) * a[j - 1] + coeffs.B(j) * a[j]) / coeffs.C(j + 1)
    return a


def _check_termination(a: np.ndarray, tol: float = TERMINATION_TOL) -> Tuple[float, ...]:
    tail = abs(a[-1])
    scale = float(np.max(np.abs(a[:-1])))
    if tail > tol * scale:
        raise SolverError(
            f"series does not terminate: |a_(p+1)| = {tail:.3e} vs max|a_i| = {scale:.3e}"
        )
    return tuple(a[:-1])


def clh_wavefunction(p: int, cpl: CLHCouplings, q: QuantumNumbers) -> BoundState:
    """Degree-p CLH bound state (requires the coupling constraint to hold)."""
    k = q.k
    report = clh_coupling_constraint(p, cpl, k)
    if not report.satisfied:
        raise ConstraintError(
            f"{report.description} violated: residual {report.residual:.3e}"
        )
    E = clh_degree_energy(p, cpl, k)
    coeffs = _check_termination(_forward_coeffs(clh_ladder(E, cpl, k), p))
    return BoundState(
        energy=E,
        coeffs=coeffs,
        exponent=clh_exponent(cpl),
        q=QuantumNumbers(q.D, q.ell, p),
        family=Family.CLH,
        step=1,
    )


def clh_coupling_roots(
    p: int, b: float, c: float, k: int, a_max: Optional[float] = None
) -> List[float]:
    """Values of the Coulomb strength a for which a degree-p CLH state exists
    at fixed (b, c, k), i.e. roots in a of the determinant constraint."""
    if c <= 0:
        raise DomainError("requires c > 0")
    E = clh_degree_energy(p, CLHCouplings(0.0, b, c), k)

    def det_of_a(a: float) -> float:
        return continuant_det(clh_ladder(E, CLHCouplings(a, b, c), k), p)

    # diagonal roots a = -beta (2j+k-1)/2 plus an off-diagonal pad
    beta = -b / math.sqrt(2.0 * c)
    diag = [-beta * (2 * j + k - 1) / 2.0 for j in range(p + 1)]
    ladder = clh_ladder(E, CLHCouplings(0.0, b, c), k)
    pad = 1.0 + sum(
        math.sqrt(abs(ladder.A(j) * ladder.C(j + 1))) for j in range(p)
    )
    lo, hi = min(diag) - pad, max(diag) + pad
    if a_max is not None:
        hi = min(hi, a_max)
    return scan_roots(det_of_a, lo, hi, n_scan=max(200, 40 * (p + 1)))


def sextic_termination_constraint(
    n: int, cpl: SexticCouplings, k: int, tolerance: float = CONSTRAINT_TOL
) -> ConstraintReport:
    """Residual of 2 mu + sqrt(2 eta) (4n+k+2) - lambda^2/(2 eta) = 0."""
    if cpl.eta <= 0:
        raise DomainError(f"requires eta > 0, got {cpl.eta}")
    t1 = 2.0 * cpl.mu
    t2 = math.sqrt(2.0 * cpl.eta) * (4 * n + k + 2)
    t3 = cpl.lam**2 / (2.0 * cpl.eta)
    return ConstraintReport(
        residual=t1 + t2 - t3,
        scale=max(abs(t1), abs(t2), abs(t3), 1.0),
        description=f"sextic termination constraint (n={n})",
        tolerance=tolerance,
    )


def _require_sextic_constraint(n: int, cpl: SexticCouplings, k: int) -> None:
    report = sextic_termination_constraint(n, cpl, k)
    if not report.satisfied:
        raise ConstraintError(
            f"{report.description} violated: residual {report.residual:.3e}"
        )


def sextic_energy_p0(cpl: SexticCouplings, k: int) -> float:
    """Ground quasi-exact level E_0 = lambda k / (2 sqrt(2 eta))."""
    _require_sextic_constraint(0, cpl, k)
    return cpl.lam * k / (2.0 * math.sqrt(2.0 * cpl.eta))


def sextic_energy_p1(cpl: SexticCouplings, k: int) -> Tuple[float, float]:
    """Both roots of the 2x2 determinant, ascending.

    E = lambda(k+2)/(2 sqrt(2 eta))
        +/- sqrt[ lambda^2 (k+2)/(4 eta) - (k/2)(sqrt(2 eta)(k+2) + 2 mu) ];
    the larger (+) branch is the commonly quoted one.
    """
    _require_sextic_constraint(1, cpl, k)
    root = math.sqrt(2.0 * cpl.eta)
    center = cpl.lam * (k + 2) / (2.0 * root)
    disc = cpl.lam**2 * (k + 2) / (4.0 * cpl.eta) - 0.5 * k * (root * (k + 2) + 2.0 * cpl.mu)
    if disc < 0:
        raise SolverError(
            f"complex level pair: discriminant {disc:.3e} < 0, no real quasi-exact level"
        )
    spread = math.sqrt(disc)
    return (center - spread, center + spread)


@dataclass(frozen=True)
class EnergyRoots:
    """Real roots of the determinant in E, ascending."""

    energies: Tuple[float, ...]
    degree: int  # polynomial degree of the determinant in E

    @property
    def complete(self) -> bool:
        return len(self.energies) == self.degree


def determinant_energy_roots(
    family: Family, couplings, q: QuantumNumbers, p: int
) -> EnergyRoots:
    """All real energies at which the (p+1) x (p+1) determinant vanishes.

    Defined for the sextic and harmonic families, where the diagonal B_n is
    affine in E.  For CLH the unknown in the determinant is a coupling, not
    the energy: use :func:`clh_coupling_roots`.
    """
    k = q.k
    if family is Family.HARMONIC:
        # A_n = 0 identically: the determinant factorizes as prod B_m, so
        # the roots are exactly the zeros of the diagonal.
        mu = couplings.mu if isinstance(couplings, HarmonicCouplings) else float(couplings)
        alpha = harmonic_exponent(mu).alpha
        return EnergyRoots(
            energies=tuple(-alpha * (4 * n + k) / 2.0 for n in range(p + 1)),
            degree=p + 1,
        )
    if family is not Family.SEXTIC:
        raise DomainError(
            "determinant energy roots are defined for sextic/harmonic; "
            "for CLH solve for a coupling via clh_coupling_roots"
        )
    _require_sextic_constraint(p, couplings, k)
    alpha = sextic_exponent(couplings).alpha

    def det_of_E(E: float) -> float:
        return continuant_det(sextic_recurrence(E, couplings, k), p)

    diag = [-alpha * (4 * n + k) / 2.0 for n in range(p + 1)]
    ref = sextic_recurrence(0.0, couplings, k)
    pad = 1.0 + sum(math.sqrt(abs(ref.A(n) * ref.C(n + 1))) for n in range(p))
    roots = scan_roots(
        det_of_E, min(diag) - pad, max(diag) + pad, n_scan=max(200, 40 * (p + 1))
    )
    return EnergyRoots(energies=tuple(roots), degree=p + 1)


def sextic_wavefunction(
    p: int, cpl: SexticCouplings, q: QuantumNumbers, energy: Optional[float] = None
) -> BoundState:
    """Sextic bound state at a determinant root (lowest root by default)."""
    k = q.k
    if energy is None:
        roots = determinant_energy_roots(Family.SEXTIC, cpl, q, p)
        if not roots.energies:
            raise SolverError("no real determinant root found")
        energy = roots.energies[0]
    coeffs = _check_termination(_forward_coeffs(sextic_recurrence(energy, cpl, k), p))
    return BoundState(
        energy=energy,
        coeffs=coeffs,
        exponent=sextic_exponent(cpl),
        q=QuantumNumbers(q.D, q.ell, p),
        family=Family.SEXTIC,
        step=2,
    )


def harmonic_spectrum(
    n: int, q: QuantumNumbers, omega: Optional[float] = None, mu: Optional[float] = None
) -> float:
    """E_n = (omega/2)(4n + D + 2 ell), with omega = sqrt(2 mu)."""
    if (omega is None) == (mu is None):
        raise DomainError("specify exactly one of omega or mu")
    if n < 0:
        raise DomainError("requires n >= 0")
    if omega is None:
        if mu <= 0:
            raise DomainError(f"requires mu > 0, got {mu}")
        omega = math.sqrt(2.0 * mu)
    if omega <= 0:
        raise DomainError(f"requires omega > 0, got {omega}")
    return omega * (4 * n + q.k) / 2.0


def coulomb_spectrum(n: int, Z: float, q: QuantumNumbers) -> float:
    """E_n = -2 Z^2 / (2n + D + 2 ell - 1)^2."""
    if Z <= 0:
        raise DomainError(f"requires Z > 0, got {Z}")
    if n < 0:
        raise DomainError("requires n >= 0")
    m = 2 * n + q.k - 1
    return -2.0 * Z * Z / (m * m)


def harmonic_wavefunction(n: int, mu: float, q: QuantumNumbers) -> BoundState:
    """n-th radial harmonic state via the recurrence (polynomial in r^2)."""
    E = harmonic_spectrum(n, q, mu=mu)
    coeffs = _check_termination(_forward_coeffs(harmonic_recurrence(E, mu, q.k), n))
    return BoundState(
        energy=E,
        coeffs=coeffs,
        exponent=harmonic_exponent(mu),
        q=QuantumNumbers(q.D, q.ell, n),
        family=Family.HARMONIC,
        step=2,
    )


def coulomb_wavefunction(n: int, Z: float, q: QuantumNumbers) -> BoundState:
    """n-th radial Coulomb state (polynomial in r, exponent beta_n * r)."""
    E = coulomb_spectrum(n, Z, q)
    k = q.k
    beta = -2.0 * Z / (2 * n + k - 1)
    exponent = AnsatzExponent(0.0, beta, ExponentForm.QUAD_LINEAR)
    ladder = RecurrenceCoeffs(
        A=lambda j: 2.0 * E + beta * beta,  # vanishes at E_n
        B=lambda j: 2.0 * Z + beta * (2 * j + k - 1),
        C=lambda j: float(j * (j + k - 2)),
        step=1,
        description="Coulomb unit-step ladder",
    )
    coeffs = _check_termination(_forward_coeffs(ladder, n))
    return BoundState(
        energy=E,
        coeffs=coeffs,
        exponent=exponent,
        q=QuantumNumbers(q.D, q.ell, n),
        family=Family.COULOMB,
        step=1,
    )
