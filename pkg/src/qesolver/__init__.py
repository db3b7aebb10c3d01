"""Quasi-exactly solvable radial Schrodinger problems in D dimensions.

Closed-form bound states of the Coulomb-plus-linear-plus-harmonic (CLH) and
sextic anharmonic oscillator families via three-term recurrences and
tridiagonal determinant quantization, the quadratic radial map connecting
the two, and an independent finite-difference oracle.
"""

from .errors import ConstraintError, CutoffError, DomainError, QesError, SolverError
from .kernels import BACKEND
from .potentials import (
    CLHCouplings,
    CoulombCouplings,
    Family,
    HarmonicCouplings,
    PotentialSpec,
    QuantumNumbers,
    SexticCouplings,
    evaluate_potential,
    k_param,
)
from .qes_solver import (
    BoundState,
    ConstraintReport,
    EnergyRoots,
    clh_closed_form_energy,
    clh_coupling_constraint,
    clh_coupling_roots,
    clh_degree_energy,
    clh_termination_energy,
    clh_wavefunction,
    continuant_det,
    coulomb_spectrum,
    coulomb_wavefunction,
    determinant_energy_roots,
    harmonic_spectrum,
    harmonic_wavefunction,
    sextic_energy_p0,
    sextic_energy_p1,
    sextic_termination_constraint,
    sextic_wavefunction,
)
from .duality import (
    DualityImage,
    DualityReport,
    clh_to_sextic,
    sextic_to_clh,
    verify_duality,
)
from .oracle import GridSpec, default_grid, node_count, radial_eigenvalues, residual_check

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    "QesError",
    "DomainError",
    "ConstraintError",
    "SolverError",
    "CutoffError",
    "Family",
    "QuantumNumbers",
    "CLHCouplings",
    "SexticCouplings",
    "HarmonicCouplings",
    "CoulombCouplings",
    "PotentialSpec",
    "k_param",
    "evaluate_potential",
    "BoundState",
    "ConstraintReport",
    "EnergyRoots",
    "continuant_det",
    "clh_degree_energy",
    "clh_termination_energy",
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
    "DualityImage",
    "DualityReport",
    "clh_to_sextic",
    "sextic_to_clh",
    "verify_duality",
    "GridSpec",
    "default_grid",
    "radial_eigenvalues",
    "residual_check",
    "node_count",
]
