import math

import numpy as np
import pytest

from qesolver.errors import CutoffError, DomainError
from qesolver.oracle import (
    GridSpec,
    default_grid,
    node_count,
    radial_eigenvalues,
    residual_check,
)
from qesolver.potentials import CLHCouplings, PotentialSpec, QuantumNumbers, SexticCouplings
from qesolver.qes_solver import (
    clh_coupling_roots,
    clh_wavefunction,
    coulomb_wavefunction,
    harmonic_spectrum,
    harmonic_wavefunction,
    sextic_energy_p1,
    sextic_wavefunction,
)

B, C = 1.0, 1.0 / 32


class TestGridSpec:
    def test_h(self):
        grid = GridSpec(r_min=0.0, r_max=10.0, n_points=101)
        assert grid.h == pytest.approx(0.1)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(r_min=-0.1, r_max=10.0),
            dict(r_min=5.0, r_max=1.0),
            dict(r_min=0.0, r_max=10.0, n_points=10),
            dict(r_min=0.0, r_max=10.0, refinement_levels=0),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            GridSpec(**kwargs)

    def test_default_grid_scales_with_decay(self):
        q = QuantumNumbers(D=3, ell=0)
        tight = default_grid(PotentialSpec.harmonic(8.0), q)
        loose = default_grid(PotentialSpec.harmonic(0.125), q)
        assert loose.r_max > tight.r_max
        assert default_grid(PotentialSpec.coulomb(1.0), q).r_max >= 100.0


class TestEigenvalues:
    def test_clh_ground(self):
        spec = PotentialSpec.clh(4.0, B, C)
        q = QuantumNumbers(D=3, ell=0)
        e = radial_eigenvalues(spec, q)
        assert abs(e[0] + 7.625) / 7.625 <= 1e-8

    def test_hydrogen_levels(self):
        spec = PotentialSpec.coulomb(1.0)
        q = QuantumNumbers(D=3, ell=0)
        e = radial_eigenvalues(spec, q, count=2)
        assert e[0] == pytest.approx(-0.5, rel=1e-8)
        assert e[1] == pytest.approx(-0.125, rel=1e-6)

    def test_harmonic_ladder(self):
        spec = PotentialSpec.harmonic(0.5)
        q = QuantumNumbers(D=3, ell=0)
        e = radial_eigenvalues(spec, q, count=3)
        for n in range(3):
            assert e[n] == pytest.approx(harmonic_spectrum(n, q, mu=0.5), abs=1e-7)

    def test_sextic_pair(self):
        sx = SexticCouplings(0.5, math.sqrt(10.0), 0.5)
        spec = PotentialSpec.sextic(sx.mu, sx.lam, sx.eta)
        q = QuantumNumbers(D=3, ell=0)
        lo, hi = sextic_energy_p1(sx, 3)
        e = radial_eigenvalues(spec, q, count=2)
        assert e[0] == pytest.approx(lo, rel=1e-8)
        assert e[1] == pytest.approx(hi, rel=1e-8)

    def test_nonzero_ell(self):
        spec = PotentialSpec.coulomb(1.0)
        q = QuantumNumbers(D=3, ell=1)
        e = radial_eigenvalues(spec, q)
        assert e[0] == pytest.approx(-0.125, rel=1e-6)

    def test_count_validation(self):
        with pytest.raises(DomainError):
            radial_eigenvalues(PotentialSpec.coulomb(1.0), QuantumNumbers(D=3, ell=0), count=0)

    def test_cutoff_guard(self):
        # hydrogen ground state has appreciable mass beyond r = 4
        grid = GridSpec(r_min=0.0, r_max=4.0, n_points=400)
        with pytest.raises(CutoffError):
            radial_eigenvalues(PotentialSpec.coulomb(1.0), QuantumNumbers(D=3, ell=0), grid)


class TestResiduals:
    def _states(self):
        q3 = QuantumNumbers(D=3, ell=0)
        yield clh_wavefunction(0, CLHCouplings(4.0, B, C), q3), PotentialSpec.clh(4.0, B, C), q3
        a1 = clh_coupling_roots(1, B, C, 3)[1]
        yield clh_wavefunction(1, CLHCouplings(a1, B, C), q3), PotentialSpec.clh(a1, B, C), q3
        sx = SexticCouplings(0.5, math.sqrt(10.0), 0.5)
        yield sextic_wavefunction(1, sx, q3), PotentialSpec.sextic(sx.mu, sx.lam, sx.eta), q3
        yield harmonic_wavefunction(2, 0.5, q3), PotentialSpec.harmonic(0.5), q3
        yield coulomb_wavefunction(1, 1.0, q3), PotentialSpec.coulomb(1.0), q3

    def test_all_states_satisfy_equation(self):
        for state, spec, q in self._states():
            assert residual_check(state, spec, q) <= 1e-8

    def test_wrong_energy_detected(self):
        q = QuantumNumbers(D=3, ell=0)
        state = clh_wavefunction(0, CLHCouplings(4.0, B, C), q)
        spec = PotentialSpec.clh(4.0, B, C)
        bad = type(state)(
            energy=state.energy + 0.1,
            coeffs=state.coeffs,
            exponent=state.exponent,
            q=state.q,
            family=state.family,
            step=state.step,
        )
        assert residual_check(bad, spec, q) > 1e-4

    def test_rejects_nonpositive_samples(self):
        q = QuantumNumbers(D=3, ell=0)
        state = coulomb_wavefunction(0, 1.0, q)
        with pytest.raises(DomainError):
            residual_check(state, PotentialSpec.coulomb(1.0), q, sample_points=[-1.0, 1.0])


class TestNodes:
    def test_node_counts(self):
        q = QuantumNumbers(D=3, ell=0)
        assert node_count(coulomb_wavefunction(0, 1.0, q), 40.0) == 0
        assert node_count(coulomb_wavefunction(1, 1.0, q), 40.0) == 1
        assert node_count(coulomb_wavefunction(2, 1.0, q), 60.0) == 2
        assert node_count(harmonic_wavefunction(2, 0.5, q), 10.0) == 2
