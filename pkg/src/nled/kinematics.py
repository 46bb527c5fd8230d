"""Field/potential containers, Lorentz invariants, boosts and the
energy-momentum (Fierz-type) identity.

Invariant conventions (vector form, Gaussian units):

    I1 = E^2 - H^2
    I2 = E . H
    I3 = A . A - phi^2                       (square of the 4-potential)
    I4 = -(E.A)^2 + |phi E + A x H|^2        (contraction F_{mu nu} A^nu)
    I5 = -(H.A)^2 + |phi H - A x E|^2        (same for the dual tensor)

I4/I5 are Minkowski squared norms with signature (-,+,+,+) of the 4-vectors
(E.A, phi E + A x H) and (H.A, phi H - A x E).  The tensor-form scalars
(1/4) F_{mu nu} F^{mu nu} = -I1/2 and (1/4) F_{mu nu} F*^{mu nu} = -I2 are
scaled aliases of I1, I2 and are not exposed separately.

The identity checked by ``fierz_identity_sides`` is the corrected squared
form

    (E^2 + H^2)^2 - 4 |E x H|^2  =  (E^2 - H^2)^2 + 4 (E . H)^2,

equivalently (8 pi)^2 (U^2 - c^2 g^2) expressed through I1, I2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FOUR_PI = 4.0 * np.pi
EIGHT_PI = 8.0 * np.pi


def _vec3(v, name: str) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite components: {a}")
    return a


@dataclass(frozen=True)
class FieldVectors:
    """Electric and magnetic field 3-vectors (statvolt/cm, gauss)."""

    E: np.ndarray
    H: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "E", _vec3(self.E, "E"))
        object.__setattr__(self, "H", _vec3(self.H, "H"))


@dataclass(frozen=True)
class FourPotential:
    """Scalar potential phi (statvolt) and vector potential A (gauss cm)."""

    phi: float
    A: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phi", float(self.phi))
        if not np.isfinite(self.phi):
            raise ValueError(f"phi is not finite: {self.phi}")
        object.__setattr__(self, "A", _vec3(self.A, "A"))


@dataclass(frozen=True)
class InvariantSet:
    """The five invariants; I3-I5 are None when no potential was supplied."""

    I1: float
    I2: float
    I3: float | None = None
    I4: float | None = None
    I5: float | None = None


def invariants(F: FieldVectors, A: FourPotential | None = None) -> InvariantSet:
    """Evaluate I1, I2 (and I3-I5 when a four-potential is given)."""
    E, H = F.E, F.H
    i1 = float(E @ E - H @ H)
    i2 = float(E @ H)
    if A is None:
        return InvariantSet(I1=i1, I2=i2)
    a, phi = A.A, A.phi
    i3 = float(a @ a - phi**2)
    v4 = phi * E + np.cross(a, H)
    v5 = phi * H - np.cross(a, E)
    i4 = float(-(E @ a) ** 2 + v4 @ v4)
    i5 = float(-(H @ a) ** 2 + v5 @ v5)
    return InvariantSet(I1=i1, I2=i2, I3=i3, I4=i4, I5=i5)


def fierz_identity_sides(F: FieldVectors) -> tuple[float, float]:
    """Both sides of the corrected quadratic identity.

    lhs = (E^2 + H^2)^2 - 4 |E x H|^2,  rhs = (E^2 - H^2)^2 + 4 (E.H)^2.
    The two agree identically; returning both makes the check a test artifact.
    """
    E, H = F.E, F.H
    e2, h2 = float(E @ E), float(H @ H)
    cross = np.cross(E, H)
    lhs = (e2 + h2) ** 2 - 4.0 * float(cross @ cross)
    rhs = (e2 - h2) ** 2 + 4.0 * float(E @ H) ** 2
    return lhs, rhs


def energy_momentum_density(F: FieldVectors, c: float) -> tuple[float, np.ndarray]:
    """Energy density U = (E^2+H^2)/8pi and momentum density g = (E x H)/(4 pi c).

    (8 pi)^2 (U^2 - c^2 |g|^2) equals the left Fierz side by construction.
    """
    E, H = F.E, F.H
    U = float(E @ E + H @ H) / EIGHT_PI
    g = np.cross(E, H) / (FOUR_PI * c)
    return U, g


def boost(F: FieldVectors, beta) -> FieldVectors:
    """Boost the field pair by velocity ``beta`` (units of c), |beta| < 1.

    Components parallel to beta are unchanged; transverse components mix:
    E'_perp = gamma (E + beta x H)_perp, H'_perp = gamma (H - beta x E)_perp.
    """
    b = _vec3(beta, "beta")
    b2 = float(b @ b)
    if b2 >= 1.0:
        raise ValueError(f"|beta| must be < 1, got |beta| = {np.sqrt(b2)}")
    if b2 == 0.0:
        return F
    gamma = 1.0 / np.sqrt(1.0 - b2)
    E, H = F.E, F.H
    # gamma^2/(gamma+1) = (gamma-1)/beta^2 without cancellation at small beta
    k = gamma**2 / (gamma + 1.0)
    Ep = gamma * (E + np.cross(b, H)) - k * b * float(b @ E)
    Hp = gamma * (H - np.cross(b, E)) - k * b * float(b @ H)
    return FieldVectors(E=Ep, H=Hp)


def boost_four_potential(p: FourPotential, beta) -> FourPotential:
    """Boost the 4-potential (phi, A) as a 4-vector."""
    b = _vec3(beta, "beta")
    b2 = float(b @ b)
    if b2 >= 1.0:
        raise ValueError(f"|beta| must be < 1, got |beta| = {np.sqrt(b2)}")
    if b2 == 0.0:
        return p
    gamma = 1.0 / np.sqrt(1.0 - b2)
    k = (gamma - 1.0) / b2
    phi_p = gamma * (p.phi - float(b @ p.A))
    A_p = p.A + (k * float(b @ p.A) - gamma * p.phi) * b
    return FourPotential(phi=phi_p, A=A_p)


def gauge_shift(p: FourPotential, grad_chi, dchi_dct: float) -> FourPotential:
    """Apply the gauge transformation generated by a chi linear in (x, ct).

    phi -> phi - d(chi)/d(ct),  A -> A + grad(chi).  Linear chi keeps the
    gradients exact, so gauge (non-)invariance checks carry no FD noise.
    """
    g = _vec3(grad_chi, "grad_chi")
    return FourPotential(phi=p.phi - dchi_dct, A=p.A + g)


# ---------------------------------------------------------------------------
# randomized verification suites (shared by the test suite and the CLI)

def fierz_suite(draws: int = 10_000, seed: int = 0) -> dict:
    """Max relative lhs/rhs discrepancy over random fields in [-1, 1]^6."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        F = FieldVectors(E=rng.uniform(-1, 1, 3), H=rng.uniform(-1, 1, 3))
        lhs, rhs = fierz_identity_sides(F)
        worst = max(worst, abs(lhs - rhs) / (1.0 + abs(lhs)))
    return {"draws": draws, "max_rel_err_fierz": worst}


def boost_invariance_suite(draws: int = 1_000, seed: int = 0,
                           beta_max: float = 0.9) -> dict:
    """Max drift of I1, I2 under random boosts with |beta| <= beta_max.

    Drift is measured relative to the field scale E^2 + H^2 (the invariants
    themselves can vanish).
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        F = FieldVectors(E=rng.uniform(-1, 1, 3), H=rng.uniform(-1, 1, 3))
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        beta = direction * beta_max * rng.uniform() ** (1 / 3)
        before = invariants(F)
        after = invariants(boost(F, beta))
        scale = float(F.E @ F.E + F.H @ F.H)
        worst = max(worst,
                    abs(after.I1 - before.I1) / scale,
                    abs(after.I2 - before.I2) / scale)
    return {"draws": draws, "beta_max": beta_max, "max_rel_err_boost": worst}
