import numpy as np
import pytest
from numpy.testing import assert_allclose

from nled import (ConfigurationError, DomainExceeded, FieldVectors,
                  FourPotential, UnsupportedModel, born_infeld, dL_dE,
                  lagrangian_density, log_schroedinger, maxwell, mie_sqrt,
                  model_from_config, polynomial, taylor_reference)

EIGHT_PI = 8 * np.pi


def F(E, H=(0, 0, 0)):
    return FieldVectors(E=np.asarray(E, float), H=np.asarray(H, float))


class TestDensity:
    def test_maxwell_unit_field(self):
        assert_allclose(lagrangian_density(maxwell(), F((1, 0, 0))), 1 / EIGHT_PI)

    def test_born_infeld_limiting_field(self):
        # radicand reaches zero exactly at |E| = E0
        assert_allclose(lagrangian_density(born_infeld(1.0), F((1, 0, 0))),
                        1 / (4 * np.pi))

    def test_born_infeld_weak_field_is_maxwell(self):
        # second-order relative deviation is E^2/(4 E0^2) = 2.5e-7 at E = 1e-3
        L = lagrangian_density(born_infeld(1.0), F((1e-3, 0, 0)))
        dev = abs(L / (1e-6 / EIGHT_PI) - 1)
        assert dev <= 2.6e-7
        assert_allclose(dev, 2.5e-7, rtol=1e-2)

    def test_born_infeld_domain_error(self):
        with pytest.raises(DomainExceeded):
            lagrangian_density(born_infeld(1.0), F((1.5, 0, 0)))

    def test_log_model_value_and_domain(self):
        L = lagrangian_density(log_schroedinger(1.0), F((1, 0, 0)))
        assert_allclose(L, np.log(2) / EIGHT_PI)
        with pytest.raises(DomainExceeded):
            lagrangian_density(log_schroedinger(1.0), F((0, 0, 0), (2, 0, 0)))

    def test_polynomial_terms(self):
        m = polynomial(alpha=0.5, beta=0.25, gamma=0.1, xi=0.01, zeta=0.001)
        Fv = F((1, 0, 0), (0.5, 0, 0))  # I1 = 0.75, I2 = 0.5
        i1, i2 = 0.75, 0.5
        expected = (i1 / EIGHT_PI + 0.5 * i1**2 + 0.25 * i2**2 + 0.1 * i1 * i2
                    + 0.01 * i1**3 + 0.001 * i1 * i2**2)
        assert_allclose(lagrangian_density(m, Fv), expected, rtol=1e-15)

    def test_mie_sqrt_needs_potential(self):
        m = mie_sqrt(+1)
        with pytest.raises(ConfigurationError):
            lagrangian_density(m, F((1, 0, 0)))
        A = FourPotential(phi=1.0, A=(0.0, 0.0, 2.0))  # I3 = 3
        assert_allclose(lagrangian_density(m, F((1, 0, 0)), A), np.sqrt(3))
        assert_allclose(lagrangian_density(mie_sqrt(-1), F((1, 0, 0)), A),
                        -np.sqrt(3))

    def test_born_infeld_monotone_in_field(self):
        m = born_infeld(1.0)
        mags = np.linspace(0, 0.999999, 200)
        vals = [lagrangian_density(m, F((e, 0, 0))) for e in mags]
        assert np.all(np.diff(vals) > 0)


class TestGradient:
    def test_maxwell_exact(self):
        g = dL_dE(maxwell(), F((0.3, -0.2, 0.5), (1, 2, 3)))
        assert_allclose(g, np.array([0.3, -0.2, 0.5]) / (4 * np.pi), rtol=1e-15)

    def test_born_infeld_half_radicand(self):
        g = dL_dE(born_infeld(1.0), F((1 / np.sqrt(2), 0, 0)))
        assert_allclose(g, [1 / (4 * np.pi), 0, 0], rtol=1e-14)

    def test_gradient_at_boundary_is_domain_error(self):
        with pytest.raises(DomainExceeded):
            dL_dE(born_infeld(1.0), F((1.0, 0, 0)))

    @pytest.mark.parametrize("model", [
        maxwell(),
        born_infeld(1.0),
        log_schroedinger(1.0),
        polynomial(alpha=0.02, beta=0.05, gamma=0.01, xi=0.003, zeta=0.002),
    ])
    def test_matches_central_differences(self, model):
        rng = np.random.default_rng(17)
        h = 1e-6
        for mag in (0.01, 0.1, 0.3, 0.7):
            for _ in range(5):
                e_dir = rng.normal(size=3)
                e_dir /= np.linalg.norm(e_dir)
                h_vec = rng.normal(size=3) * 0.05
                E = mag * e_dir
                g = dL_dE(model, FieldVectors(E=E, H=h_vec))
                fd = np.empty(3)
                for i in range(3):
                    dE = np.zeros(3)
                    dE[i] = h
                    Lp = lagrangian_density(model, FieldVectors(E=E + dE, H=h_vec))
                    Lm = lagrangian_density(model, FieldVectors(E=E - dE, H=h_vec))
                    fd[i] = (Lp - Lm) / (2 * h)
                assert_allclose(g, fd, rtol=1e-6, atol=1e-12)


class TestTaylorReference:
    def test_born_infeld_coefficients_and_ratio(self):
        ref = taylor_reference(born_infeld(1.0))
        assert_allclose(ref.c1, 1 / EIGHT_PI)
        assert_allclose(ref.c20, 1 / (32 * np.pi))
        assert_allclose(ref.c02, 1 / EIGHT_PI)
        assert ref.c02 / ref.c20 == 4.0

    def test_maxwell(self):
        ref = taylor_reference(maxwell())
        assert (ref.c1, ref.c20, ref.c02) == (1 / EIGHT_PI, 0.0, 0.0)

    def test_log_model(self):
        ref = taylor_reference(log_schroedinger(1.0))
        assert_allclose(ref.c20, -1 / (16 * np.pi))
        assert ref.c02 == 0.0

    def test_mie_sqrt_unsupported(self):
        with pytest.raises(UnsupportedModel):
            taylor_reference(mie_sqrt())

    @pytest.mark.parametrize("model", [born_infeld(2.0), log_schroedinger(2.0),
                                       maxwell()])
    def test_quartic_remainder_bound(self, model):
        # |L - (c1 I1 + c20 I1^2 + c02 I2^2)| <= K max(|E|,|H|)^6 / E0^4
        # below 0.1 E0; K frozen from the sixth-order terms of both models.
        K = 0.05
        E0 = model.E0 if model.E0 is not None else 1.0
        ref = taylor_reference(model)
        rng = np.random.default_rng(23)
        for _ in range(200):
            E = rng.uniform(-0.1, 0.1, 3) * E0
            H = rng.uniform(-0.1, 0.1, 3) * E0
            Fv = FieldVectors(E=E, H=H)
            i1 = float(E @ E - H @ H)
            i2 = float(E @ H)
            approx = ref.c1 * i1 + ref.c20 * i1**2 + ref.c02 * i2**2
            L = lagrangian_density(model, Fv)
            mag6 = max(np.linalg.norm(E), np.linalg.norm(H)) ** 6
            assert abs(L - approx) <= K * mag6 / E0**4 + 1e-18


class TestModelConstruction:
    def test_config_round_trip(self):
        m = model_from_config({"kind": "born-infeld", "E0": 9.18e15})
        assert m.kind == "born-infeld" and m.E0 == 9.18e15
        m2 = model_from_config({"kind": "polynomial",
                                "coeffs": {"alpha": 1.0, "beta": 2.0}})
        assert m2.coeffs.alpha == 1.0 and m2.coeffs.zeta == 0.0

    def test_bad_kind(self):
        with pytest.raises(ConfigurationError):
            model_from_config({"kind": "weird"})

    def test_missing_e0(self):
        with pytest.raises(ConfigurationError):
            model_from_config({"kind": "born-infeld"})

    def test_e0_on_scale_free_kind_rejected(self):
        with pytest.raises(ConfigurationError):
            model_from_config({"kind": "maxwell", "E0": 1.0})

    def test_unknown_keys_rejected(self):
        with pytest.raises(ConfigurationError):
            model_from_config({"kind": "maxwell", "EO": 1.0})
