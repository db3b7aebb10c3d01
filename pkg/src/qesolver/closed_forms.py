"""Alternative closed-form CLH expressions quoted in the literature.

These formulas circulate alongside the determinant method but do not all
survive direct expansion of the determinant conditions; they are kept here,
verbatim, for comparison.  Nothing in the solver depends on them:

* `p1_energy` is the degree-index closed form at n=1 (the n=0 member is the
  exact p=0 ground energy and lives in `qes_solver.clh_closed_form_energy`).
* `p1_coupling_relation` is the commonly printed p=1 constraint; expanding
  B_0 B_1 = A_0 C_1 with the unit-step ladder coefficients gives
  `p1_coupling_relation_expanded` instead, which differs in the sign of the
  b^2/(2c) term and in the right-hand side.
* `a1_ratio` is the printed a_1/a_0 relation; it equals -B_0/C_1 on the
  unit-step ladder (C_1 = k-1), not on the even-sampled one (C_1 = 2k).
* `shifted_constraint_residual` encodes the reading under which the general
  excited closed form would hold: the p=0 constraint with k -> k + 2n.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .qes_solver import clh_closed_form_energy

__all__ = [
    "p1_energy",
    "p1_coupling_relation",
    "p1_coupling_relation_expanded",
    "a1_ratio",
    "shifted_constraint_residual",
]


def p1_energy(k: int, a: float, b: float) -> float:
    """E = (1/2)[ b(k+1)^2/(2a) + b(k+1)/(2a) - 4a^2/(k+1)^2 ]."""
    return clh_closed_form_energy(1, k, a, b)


def p1_coupling_relation(a: float, b: float, c: float, k: int) -> float:
    """Residual of the printed p=1 constraint:
    4a^2 - (b^2/2c)(k-1)(k+1) - 4abk/sqrt(2c) = (2b/a) k(k-1)."""
    if c <= 0 or a == 0:
        raise DomainError("requires c > 0 and a != 0")
    lhs = (
        4.0 * a * a
        - b * b / (2.0 * c) * (k - 1) * (k + 1)
        - 4.0 * a * b * k / math.sqrt(2.0 * c)
    )
    rhs = 2.0 * b / a * k * (k - 1)
    return lhs - rhs


def p1_coupling_relation_expanded(a: float, b: float, c: float, k: int) -> float:
    """Residual of the degree-1 determinant B_0 B_1 = A_0 C_1 expanded on the
    unit-step ladder:
    4a^2 + (b^2/2c)(k^2-1) - 4abk/sqrt(2c) = 2 sqrt(2c) (k-1)."""
    if c <= 0:
        raise DomainError("requires c > 0")
    root = math.sqrt(2.0 * c)
    lhs = 4.0 * a * a + b * b / (2.0 * c) * (k * k - 1) - 4.0 * a * b * k / root
    rhs = 2.0 * root * (k - 1)
    return lhs - rhs


def a1_ratio(a: float, b: float, c: float, k: int) -> float:
    """Printed a_1/a_0 = b/sqrt(2c) - 2a/(k-1)."""
    if c <= 0:
        raise DomainError("requires c > 0")
    return b / math.sqrt(2.0 * c) - 2.0 * a / (k - 1)


def shifted_constraint_residual(n: int, a: float, b: float, c: float, k: int) -> float:
    """Residual of b(2n+k-1) = 2a sqrt(2c), the index-shifted analogue of the
    p=0 constraint under which the general excited closed form reduces to the
    termination energy."""
    if c <= 0:
        raise DomainError("requires c > 0")
    return b * (2 * n + k - 1) - 2.0 * a * math.sqrt(2.0 * c)
