"""Ansatz exponents and three-term recurrence coefficients.

The bound-state ansatz is R(r) = exp[g(alpha, beta, r)] * sum_n a_n r^(n_ladder)
with a Gaussian-type exponent chosen so that the highest powers of r cancel
out of the reduced radial equation.  Matching the remaining powers of r
yields a three-term recurrence for the series coefficients.

Two indexing conventions coexist:

* the *unit-step* ladder r^(j + (k-1)/2), j = 0, 1, 2, ... which is the one
  actually produced by power matching for the CLH family (the Coulomb -a/r
  term couples adjacent powers, so odd powers are present);
* the *even-step* ladder r^(2n + (k-1)/2), which is the natural one for the
  sextic and harmonic families (parity is preserved) and which the commonly
  quoted CLH coefficient formulas A_n, B_n, C_n correspond to (they are the
  unit-step coefficients sampled at j = 2n).

`clh_ladder` gives the unit-step coefficients used to build actual CLH
states; `clh_recurrence` gives the even-sampled form.  The generic
`series_relation` derives the power-matching relation mechanically from the
exponent and the potential, so the indexing of the hand-written builders can
be cross-checked instead of trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict

from .errors import DomainError
from .potentials import (
    CLHCouplings,
    Family,
    HarmonicCouplings,
    PotentialSpec,
    SexticCouplings,
)

__all__ = [
    "ExponentForm",
    "AnsatzExponent",
    "RecurrenceCoeffs",
    "clh_exponent",
    "sextic_exponent",
    "harmonic_exponent",
    "non_normalizable",
    "clh_ladder",
    "clh_recurrence",
    "clh_coeffs",
    "sextic_recurrence",
    "sextic_coeffs",
    "harmonic_recurrence",
    "harmonic_coeffs",
    "series_relation",
]


class ExponentForm(Enum):
    QUAD_LINEAR = "quad_linear"  # g(r) = alpha r^2 / 2 + beta r
    QUART_QUAD = "quart_quad"    # g(r) = alpha r^2 / 2 + beta r^4 / 4
    QUAD_ONLY = "quad_only"      # g(r) = alpha r^2 / 2


@dataclass(frozen=True)
class AnsatzExponent:
    """The (alpha, beta) pair and functional form of the reference exponent.

    The leading coefficient (multiplying the highest power of r) must be
    strictly negative so the ansatz decays at infinity; the growing branch
    is only constructible through :func:`non_normalizable`.
    """

    alpha: float
    beta: float
    form: ExponentForm

    def __post_init__(self) -> None:
        if self.leading_coefficient >= 0:
            raise DomainError(
                "non-normalizable exponent: leading coefficient "
                f"{self.leading_coefficient} must be negative"
            )

    @property
    def leading_coefficient(self) -> float:
        if self.form is ExponentForm.QUART_QUAD:
            return self.beta
        if self.form is ExponentForm.QUAD_LINEAR and self.alpha == 0:
            return self.beta  # pure-Coulomb case: exponent is beta * r
        return self.alpha

    def value(self, r):
        if self.form is ExponentForm.QUAD_LINEAR:
            return 0.5 * self.alpha * r**2 + self.beta * r
        if self.form is ExponentForm.QUART_QUAD:
            return 0.5 * self.alpha * r**2 + 0.25 * self.beta * r**4
        return 0.5 * self.alpha * r**2

    def deriv(self, r):
        if self.form is ExponentForm.QUAD_LINEAR:
            return self.alpha * r + self.beta
        if self.form is ExponentForm.QUART_QUAD:
            return self.alpha * r + self.beta * r**3
        return self.alpha * r

    def deriv2(self, r):
        if self.form is ExponentForm.QUAD_LINEAR:
            return self.alpha + 0.0 * r
        if self.form is ExponentForm.QUART_QUAD:
            return self.alpha + 3.0 * self.beta * r**2
        return self.alpha + 0.0 * r

    def deriv_poly(self) -> Dict[int, float]:
        """g'(r) as a map power -> coefficient."""
        if self.form is ExponentForm.QUAD_LINEAR:
            return {1: self.alpha, 0: self.beta}
        if self.form is ExponentForm.QUART_QUAD:
            return {1: self.alpha, 3: self.beta}
        return {1: self.alpha}


def non_normalizable(alpha: float, beta: float, form: ExponentForm) -> AnsatzExponent:
    """Construct a growing-branch exponent, bypassing the sign check.

    Exists for sign-convention tests only; never chosen by the solvers.
    """
    exp = object.__new__(AnsatzExponent)
    object.__setattr__(exp, "alpha", alpha)
    object.__setattr__(exp, "beta", beta)
    object.__setattr__(exp, "form", form)
    return exp


def clh_exponent(c: CLHCouplings) -> AnsatzExponent:
    """alpha = -sqrt(2c), beta = -b/sqrt(2c) (decaying branch)."""
    if c.c <= 0:
        raise DomainError(f"CLH exponent requires c > 0, got {c.c}")
    root = math.sqrt(2.0 * c.c)
    return AnsatzExponent(-root, -c.b / root, ExponentForm.QUAD_LINEAR)


def sextic_exponent(s: SexticCouplings) -> AnsatzExponent:
    """beta = -sqrt(2*eta), alpha = -lambda/sqrt(2*eta) (decaying branch)."""
    if s.eta <= 0:
        raise DomainError(f"sextic exponent requires eta > 0, got {s.eta}")
    root = math.sqrt(2.0 * s.eta)
    return AnsatzExponent(-s.lam / root, -root, ExponentForm.QUART_QUAD)


def harmonic_exponent(mu: float) -> AnsatzExponent:
    """alpha = -sqrt(2*mu) (decaying branch)."""
    if mu <= 0:
        raise DomainError(f"harmonic exponent requires mu > 0, got {mu}")
    return AnsatzExponent(-math.sqrt(2.0 * mu), 0.0, ExponentForm.QUAD_ONLY)


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Evaluable coefficient sequences A_n, B_n, C_n of a three-term relation.

    `step` is the power-of-r increment between consecutive ladder indices.
    C(0) = 0 in every family.
    """

    A: Callable[[int], float]
    B: Callable[[int], float]
    C: Callable[[int], float]
    step: int
    description: str = ""

    def as_tuple(self, n: int) -> tuple:
        return (self.A(n), self.B(n), self.C(n))


def clh_ladder(E: float, cpl: CLHCouplings, k: int) -> RecurrenceCoeffs:
    """Unit-step CLH coefficients over the ladder r^(j + (k-1)/2).

    Relation: A(j) a_j + B(j+1) a_(j+1) + C(j+2) a_(j+2) = 0.
    """
    exp = clh_exponent(cpl)
    alpha, beta = exp.alpha, exp.beta
    a = cpl.a
    b2 = beta * beta
    return RecurrenceCoeffs(
        A=lambda j: 2.0 * E + b2 + alpha * (2 * j + k),
        B=lambda j: 2.0 * a + beta * (2 * j + k - 1),
        C=lambda j: float(j * (j + k - 2)),
        step=1,
        description="CLH unit-step ladder",
    )


def clh_recurrence(E: float, cpl: CLHCouplings, k: int) -> RecurrenceCoeffs:
    """Even-sampled CLH coefficients: A_n = 2E + beta^2 + alpha(4n+k), etc.

    These equal the unit-step coefficients at j = 2n.  They are the form in
    which the CLH quantization conditions are usually quoted (termination
    A_p = 0 and the p=0 determinant B_0 = 0 live at even indices).
    """
    ladder = clh_ladder(E, cpl, k)
    return RecurrenceCoeffs(
        A=lambda n: ladder.A(2 * n),
        B=lambda n: ladder.B(2 * n),
        C=lambda n: ladder.C(2 * n),
        step=2,
        description="CLH even-sampled",
    )


def clh_coeffs(n: int, E: float, cpl: CLHCouplings, k: int) -> tuple:
    """(A_n, B_n, C_n) in the even-sampled convention."""
    return clh_recurrence(E, cpl, k).as_tuple(n)


def sextic_recurrence(E: float, cpl: SexticCouplings, k: int) -> RecurrenceCoeffs:
    """Sextic coefficients over the parity-preserving ladder r^(2n + (k-1)/2).

    A_n = alpha^2 + beta(4n+k+2) - 2 mu,  B_n = 2E + alpha(4n+k),
    C_n = 2n(2n+k-2).
    """
    exp = sextic_exponent(cpl)
    alpha, beta = exp.alpha, exp.beta
    a2 = alpha * alpha
    mu2 = 2.0 * cpl.mu
    return RecurrenceCoeffs(
        A=lambda n: a2 + beta * (4 * n + k + 2) - mu2,
        B=lambda n: 2.0 * E + alpha * (4 * n + k),
        C=lambda n: float(2 * n * (2 * n + k - 2)),
        step=2,
        description="sextic",
    )


def sextic_coeffs(n: int, E: float, cpl: SexticCouplings, k: int) -> tuple:
    return sextic_recurrence(E, cpl, k).as_tuple(n)


def harmonic_recurrence(E: float, mu: float, k: int) -> RecurrenceCoeffs:
    """Harmonic coefficients: A_n = alpha^2 - 2 mu vanishes identically."""
    exp = harmonic_exponent(mu)
    alpha = exp.alpha
    A0 = alpha * alpha - 2.0 * mu
    return RecurrenceCoeffs(
        A=lambda n: A0,
        B=lambda n: 2.0 * E + alpha * (4 * n + k),
        C=lambda n: float(2 * n * (2 * n + k - 2)),
        step=2,
        description="harmonic",
    )


def harmonic_coeffs(n: int, E: float, mu: float, k: int) -> tuple:
    return harmonic_recurrence(E, mu, k).as_tuple(n)


def _potential_poly(spec: PotentialSpec) -> Dict[int, float]:
    cpl = spec.couplings
    if spec.family is Family.CLH:
        return {-1: -cpl.a, 1: cpl.b, 2: cpl.c}
    if spec.family is Family.SEXTIC:
        return {2: cpl.mu, 4: cpl.lam, 6: cpl.eta}
    if spec.family is Family.HARMONIC:
        return {2: cpl.mu}
    return {-1: -cpl.Z}


def series_relation(
    exponent: AnsatzExponent, spec: PotentialSpec, E: float, k: int
) -> Callable[[int], Dict[int, float]]:
    """Derive the power-matching relation mechanically.

    Writing R(r) = exp[g(r)] * f(r), f = sum_j a_j r^(j+s) with s = (k-1)/2,
    the reduced radial equation becomes
        f'' + 2 g' f' + (g'' + g'^2 - s(s-1)/r^2 + 2E - 2V) f = 0.
    The returned function maps a collection index t to the dictionary
    {series index j: coefficient of a_j} appearing in the balance of
    r^(t+s-2).  For all supported families the relation is three-term; the
    hand-written coefficient builders are validated against this routine.
    """
    g = exponent.deriv_poly()
    # W = g'' + g'^2 + 2E - 2V, as power -> coefficient
    W: Dict[int, float] = {}
    for m, gm in g.items():  # g'' term
        if m >= 1:
            W[m - 1] = W.get(m - 1, 0.0) + m * gm
    for m1, g1 in g.items():  # g'^2 term
        for m2, g2 in g.items():
            W[m1 + m2] = W.get(m1 + m2, 0.0) + g1 * g2
    W[0] = W.get(0, 0.0) + 2.0 * E
    for u, vu in _potential_poly(spec).items():
        W[u] = W.get(u, 0.0) - 2.0 * vu
    W = {u: cu for u, cu in W.items() if cu != 0.0}

    s = (k - 1) / 2.0

    def relation(t: int) -> Dict[int, float]:
        rel: Dict[int, float] = {}
        # f'' minus the centrifugal barrier
        if t >= 0:
            rel[t] = (t + s) * (t + s - 1.0) - s * (s - 1.0)
        for m, gm in g.items():  # 2 g' f'
            j = t - m - 1
            if j >= 0:
                rel[j] = rel.get(j, 0.0) + 2.0 * gm * (j + s)
        for u, cu in W.items():  # W f
            j = t - u - 2
            if j >= 0:
                rel[j] = rel.get(j, 0.0) + cu
        return {j: c for j, c in rel.items() if c != 0.0}

    return relation
