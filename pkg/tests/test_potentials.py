import math

import numpy as np
import pytest

from qesolver.errors import DomainError
from qesolver.potentials import (
    CLHCouplings,
    CoulombCouplings,
    Family,
    HarmonicCouplings,
    PotentialSpec,
    QuantumNumbers,
    SexticCouplings,
    evaluate_potential,
    k_param,
    reduce_radial,
    unreduce_radial,
)


class TestQuantumNumbers:
    def test_k(self):
        assert QuantumNumbers(D=3, ell=0).k == 3
        assert QuantumNumbers(D=4, ell=2).k == 8
        assert k_param(QuantumNumbers(D=2, ell=1)) == 4

    @pytest.mark.parametrize("kwargs", [dict(D=1, ell=0), dict(D=3, ell=-1), dict(D=3, ell=0, p=-1)])
    def test_invalid(self, kwargs):
        with pytest.raises(DomainError):
            QuantumNumbers(**kwargs)

    def test_frozen(self):
        q = QuantumNumbers(D=3, ell=0)
        with pytest.raises(AttributeError):
            q.D = 4


class TestFactories:
    def test_clh(self):
        spec = PotentialSpec.clh(4.0, 1.0, 1.0 / 32)
        assert spec.family is Family.CLH
        assert spec.couplings == CLHCouplings(4.0, 1.0, 1.0 / 32)

    def test_clh_degenerates_to_coulomb(self):
        spec = PotentialSpec.clh(2.0, 0.0, 0.0)
        assert spec.family is Family.COULOMB
        assert spec.couplings == CoulombCouplings(2.0)

    def test_clh_degenerates_to_harmonic(self):
        spec = PotentialSpec.clh(0.0, 0.0, 0.5)
        assert spec.family is Family.HARMONIC
        assert spec.couplings == HarmonicCouplings(0.5)

    def test_cornell_rejected(self):
        with pytest.raises(DomainError):
            PotentialSpec.clh(1.0, 1.0, 0.0)

    def test_negative_c_rejected(self):
        with pytest.raises(DomainError):
            PotentialSpec.clh(1.0, 1.0, -1.0)

    def test_sextic(self):
        spec = PotentialSpec.sextic(-3.0, 2.0, 0.5)
        assert spec.family is Family.SEXTIC
        assert spec.couplings == SexticCouplings(-3.0, 2.0, 0.5)

    def test_sextic_degenerates_to_harmonic(self):
        assert PotentialSpec.sextic(1.5, 0.0, 0.0).family is Family.HARMONIC

    def test_pure_quartic_rejected(self):
        with pytest.raises(DomainError):
            PotentialSpec.sextic(1.0, 1.0, 0.0)

    @pytest.mark.parametrize("mu", [0.0, -1.0])
    def test_harmonic_needs_positive_mu(self, mu):
        with pytest.raises(DomainError):
            PotentialSpec.harmonic(mu)

    def test_coulomb_needs_positive_Z(self):
        with pytest.raises(DomainError):
            PotentialSpec.coulomb(0.0)

    def test_family_tag_must_match_couplings(self):
        with pytest.raises(DomainError):
            PotentialSpec(Family.SEXTIC, CLHCouplings(1.0, 1.0, 1.0))


class TestEvaluate:
    def test_clh_scalar(self):
        spec = PotentialSpec.clh(4.0, 1.0, 1.0 / 32)
        assert evaluate_potential(spec, 2.0) == pytest.approx(-4.0 / 2 + 2.0 + 4.0 / 32)

    def test_sextic_array(self):
        spec = PotentialSpec.sextic(1.0, -2.0, 0.5)
        r = np.array([0.5, 1.0, 2.0])
        expected = r**2 - 2.0 * r**4 + 0.5 * r**6
        np.testing.assert_allclose(evaluate_potential(spec, r), expected, rtol=1e-15)

    def test_harmonic_and_coulomb(self):
        assert evaluate_potential(PotentialSpec.harmonic(0.5), 3.0) == pytest.approx(4.5)
        assert evaluate_potential(PotentialSpec.coulomb(2.0), 4.0) == pytest.approx(-0.5)

    @pytest.mark.parametrize("r", [0.0, -1.0, np.array([1.0, 0.0])])
    def test_nonpositive_radius_rejected(self, r):
        with pytest.raises(DomainError):
            evaluate_potential(PotentialSpec.coulomb(1.0), r)

    def test_scalar_in_scalar_out(self):
        value = evaluate_potential(PotentialSpec.harmonic(1.0), 2.0)
        assert isinstance(value, float)


class TestReduction:
    def test_roundtrip(self):
        for D in (2, 3, 4, 6):
            for r in (0.3, 1.0, 5.7):
                psi = 0.83
                assert unreduce_radial(reduce_radial(psi, r, D), r, D) == pytest.approx(psi, rel=1e-15)

    def test_d3_factor_is_r(self):
        assert reduce_radial(1.0, 2.0, 3) == pytest.approx(2.0)

    def test_requires_positive_r(self):
        with pytest.raises(DomainError):
            reduce_radial(1.0, 0.0, 3)

    def test_harmonic_omega(self):
        assert HarmonicCouplings(0.5).omega == pytest.approx(1.0)
