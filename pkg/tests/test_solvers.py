"""
퍼텐셜 정의, 멱함수/선형/로그 퍼텐셜 고유값 테스트
"""
import math

import numpy as np
import pytest

from solvers.linear import linear_potential_table
from solvers.logarithmic import log_eigenvalue, log_radial_scale, log_wavefunction
from solvers.potentials import Convention, PotentialSpec
from solvers.power_law import constant_potential_threshold, power_law_eigenvalue
from utils.error_handling import DegenerateExponentError, DomainError
from variational.models import DSelection, QuantumState

GROUND = QuantumState(0, 0)


class TestPotentialSpec:
    @pytest.mark.parametrize("A,nu,sign", [(0.0, 1.0, 1), (-1.0, 1.0, 1), (math.inf, 1.0, 1),
                                           (1.0, -2.0, -1), (1.0, 0.5, -1), (1.0, 1.0, 0)])
    def test_invalid(self, A, nu, sign):
        with pytest.raises(DomainError):
            PotentialSpec.power_law(A, nu, sign)

    def test_values(self):
        pot = PotentialSpec.power_law(2.0, -0.5, -1)
        assert pot.value(4.0) == pytest.approx(-1.0)
        assert pot.effective(1.0, 2) == pytest.approx(-2.0 + 6.0)
        assert PotentialSpec.logarithmic().value(math.e) == pytest.approx(1.0)

    def test_energy_conversion(self):
        pot = PotentialSpec.power_law(2.0 ** 1.7, -0.2, -1)
        assert pot.energy_scale() * pot.convention_factor(Convention.REF11) == pytest.approx(4.0)
        assert pot.to_reduced_energy(pot.to_physical_energy(-0.7, Convention.REF11), Convention.REF11) == pytest.approx(-0.7)
        assert pot.convention_factor(Convention.PLAIN) == 1.0

    def test_labels(self):
        assert PotentialSpec.power_law(1.0, 0.5).label() == "r^0.5"
        assert PotentialSpec.power_law(1.0, -1.0, -1).label() == "-r^-1"
        assert PotentialSpec.logarithmic().label() == "log(r)"


class TestPowerLaw:
    def test_half_power_ground_state(self):
        pot = PotentialSpec.power_law(1.0, 0.5)
        assert power_law_eigenvalue(pot, GROUND).E == pytest.approx(1.83352, abs=5e-5)

    @pytest.mark.parametrize("A,nu,n,l,expected", [
        (2.0 ** 1.7, -0.2, 0, 0, -2.6859),
        (2.0 ** 0.8, -0.8, 2, 1, -0.1873),
        (2.0 ** 0.8, -0.8, 0, 0, -1.2186),
    ])
    def test_attractive_ref11(self, A, nu, n, l, expected):
        pot = PotentialSpec.power_law(A, nu, -1)
        result = power_law_eigenvalue(pot, QuantumState(n, l), convention=Convention.REF11)
        assert result.E == pytest.approx(expected, abs=5e-4)
        assert result.convention is Convention.REF11

    @pytest.mark.parametrize("nu,sign,expected", [
        (-1.5, -1, -0.29703), (-1.0, -1, -0.25), (0.15, 1, 1.32798), (2.0, 1, 3.0), (3.0, 1, 3.45110), (10.0, 1, 5.16092),
    ])
    def test_ground_states(self, nu, sign, expected):
        pot = PotentialSpec.power_law(1.0, nu, sign)
        assert power_law_eigenvalue(pot, GROUND).E == pytest.approx(expected, abs=5e-5)

    @pytest.mark.parametrize("A", [0.3, 2.0, 17.0])
    def test_scaling_covariance(self, A):
        state = QuantumState(1, 2)
        base = power_law_eigenvalue(PotentialSpec.power_law(1.0, 0.75), state)
        scaled = power_law_eigenvalue(PotentialSpec.power_law(A, 0.75), state)
        assert scaled.E == pytest.approx(A ** (2.0 / 2.75) * base.E, rel=1e-12)
        assert scaled.reduced.epsilon == pytest.approx(base.reduced.epsilon, rel=1e-12)

    def test_minimized_not_above_fitted(self):
        pot = PotentialSpec.power_law(1.0, 1.5)
        fitted = power_law_eigenvalue(pot, QuantumState(1, 1))
        minimized = power_law_eigenvalue(pot, QuantumState(1, 1), DSelection.minimized())
        assert minimized.E <= fitted.E + 1e-12
        assert minimized.reduced.d_mode == DSelection.minimized()

    def test_fixed_d(self):
        result = power_law_eigenvalue(PotentialSpec.power_law(1.0, 2.0), GROUND, DSelection.fixed(2.0))
        assert result.E == pytest.approx(3.0, rel=1e-12)
        assert result.reduced.d == 2.0

    def test_constant_potential(self):
        pot = PotentialSpec.power_law(1.0, 0.0)
        with pytest.raises(DegenerateExponentError):
            power_law_eigenvalue(pot, GROUND)
        threshold = constant_potential_threshold(pot)
        assert threshold.E == 1.0
        assert threshold.reduced is None

    def test_threshold_requires_zero_exponent(self):
        with pytest.raises(DomainError):
            constant_potential_threshold(PotentialSpec.power_law(1.0, 1.0))

    def test_log_potential_rejected(self):
        with pytest.raises(DomainError):
            power_law_eigenvalue(PotentialSpec.logarithmic(), GROUND)


class TestLinear:
    def test_rows(self):
        rows = linear_potential_table(5)
        assert [row.n for row in rows] == list(range(6))
        for n, variational, exact in [(0, 2.33825, 2.33810), (2, 5.52132, 5.52056), (5, 9.01859, 9.02265)]:
            assert rows[n].epsilon_variational == pytest.approx(variational, abs=5e-5)
            assert rows[n].epsilon_exact == pytest.approx(exact, abs=1e-5)

    def test_variational_tracks_exact(self):
        for row in linear_potential_table(9):
            assert row.epsilon_variational == pytest.approx(row.epsilon_exact, rel=2e-3)

    @pytest.mark.parametrize("n_max", [-1, 10, 2.5])
    def test_domain(self, n_max):
        with pytest.raises(DomainError):
            linear_potential_table(n_max)


class TestLogarithmic:
    @pytest.mark.parametrize("n,l,expected", [
        (0, 0, 1.0445), (4, 4, 3.2512), (10, 0, 3.63955), (0, 3, 2.2842), (2, 1, 2.4917),
    ])
    def test_table_values(self, n, l, expected):
        assert log_eigenvalue(QuantumState(n, l)).E == pytest.approx(expected, abs=5e-4)

    @pytest.mark.parametrize("n,l,nu_limit,expected", [
        (10, 0, 1e-5, 3.639547), (10, 0, 1e-6, 3.639501), (4, 4, 1e-6, 3.250964),
    ])
    def test_high_precision_values(self, n, l, nu_limit, expected):
        # 60자리 계산값; 교대합의 상쇄가 1/ν 로 증폭되지 않아야 한다
        assert log_eigenvalue(QuantumState(n, l), nu_limit=nu_limit).E == pytest.approx(expected, abs=1e-4)

    @pytest.mark.parametrize("n,l", [(0, 0), (1, 2), (3, 4), (6, 0), (10, 0)])
    def test_limit_is_converged(self, n, l):
        state = QuantumState(n, l)
        assert log_eigenvalue(state, nu_limit=1e-6).E == pytest.approx(log_eigenvalue(state).E, abs=1e-3)

    def test_monotone_in_n_and_l(self):
        for l in range(4):
            energies = [log_eigenvalue(QuantumState(n, l)).E for n in range(5)]
            assert np.all(np.diff(energies) > 0.0)
        for n in range(3):
            energies = [log_eigenvalue(QuantumState(n, l)).E for l in range(5)]
            assert np.all(np.diff(energies) > 0.0)

    def test_default_uses_fixed_shape(self):
        result = log_eigenvalue(GROUND)
        assert result.reduced.d == 1.43203
        assert result.reduced.d_mode == DSelection.fixed(1.43203)

    def test_override_and_recompute(self):
        assert log_eigenvalue(GROUND, d_override=1.5).reduced.d == 1.5
        recomputed = log_eigenvalue(GROUND, recompute_d=True)
        assert recomputed.reduced.d == pytest.approx(1.43203, abs=5e-5)
        assert recomputed.E == pytest.approx(log_eigenvalue(GROUND).E, abs=1e-5)

    @pytest.mark.parametrize("nu_limit", [0.0, -1e-5, 1e-2])
    def test_nu_limit_range(self, nu_limit):
        with pytest.raises(DomainError):
            log_eigenvalue(GROUND, nu_limit=nu_limit)

    def test_wavefunction(self):
        r = np.linspace(0.02, 12.0, 600)
        samples = log_wavefunction(QuantumState(2, 1), r)
        assert samples.norm_squared() == pytest.approx(1.0)
        assert samples.node_count == 2
        assert log_radial_scale(1e-5) == pytest.approx(1e-5 ** (1.0 / 2.00001))
