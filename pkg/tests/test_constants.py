import numpy as np
import pytest
from numpy.testing import assert_allclose

from nled import (ConfigurationError, PhysicalConstants,
                  classical_electron_radius, constants,
                  statvolt_per_cm_to_volt_per_m)
from nled.constants import E0_HISTORICAL_ESU, R0_HISTORICAL_CM


def test_modern_preset_values():
    k = constants("modern")
    assert_allclose(k.e, 4.8032e-10)
    assert_allclose(k.m_e, 9.1094e-28)
    assert_allclose(k.c, 2.9979e10)
    assert k.preset_name == "modern"


def test_historical_preset_back_solved_charge():
    k = constants("historical1934")
    assert_allclose(k.e, 4.77e-10)
    # the preset must close the tabulated (r0, E0) pair to 0.5%
    assert_allclose(k.e / R0_HISTORICAL_CM**2, E0_HISTORICAL_ESU, rtol=5e-3)


def test_unknown_preset_is_configuration_error():
    with pytest.raises(ConfigurationError):
        constants("foo")


def test_nonpositive_constants_rejected():
    with pytest.raises(ConfigurationError):
        PhysicalConstants(e=-1.0, m_e=1.0, c=1.0, preset_name="bad")


class TestConversion:
    def test_tabulated_field_value(self):
        # 9.18e15 statvolt/cm is 2.75e20 V/m to 0.2%
        assert_allclose(statvolt_per_cm_to_volt_per_m(9.18e15), 2.75e20, rtol=2e-3)

    def test_zero(self):
        assert statvolt_per_cm_to_volt_per_m(0.0) == 0.0

    def test_unit_value(self):
        assert_allclose(statvolt_per_cm_to_volt_per_m(1.0), 2.9979e4)

    def test_linearity(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a, b = rng.uniform(-1e16, 1e16, 2)
            assert_allclose(
                statvolt_per_cm_to_volt_per_m(a + b),
                statvolt_per_cm_to_volt_per_m(a) + statvolt_per_cm_to_volt_per_m(b),
                rtol=1e-13)


class TestClassicalRadius:
    def test_modern(self):
        assert_allclose(classical_electron_radius(constants("modern")),
                        2.8179e-13, rtol=1e-4)

    def test_historical_charge(self):
        assert_allclose(classical_electron_radius(constants("historical1934")),
                        2.78e-13, rtol=1e-3)

    def test_scaling_in_charge_and_mass(self):
        k = constants("modern")
        doubled = PhysicalConstants(e=2 * k.e, m_e=k.m_e, c=k.c, preset_name="x")
        assert_allclose(classical_electron_radius(doubled),
                        4 * classical_electron_radius(k), rtol=1e-15)
        heavier = PhysicalConstants(e=k.e, m_e=3 * k.m_e, c=k.c, preset_name="y")
        assert_allclose(classical_electron_radius(heavier),
                        classical_electron_radius(k) / 3, rtol=1e-15)
