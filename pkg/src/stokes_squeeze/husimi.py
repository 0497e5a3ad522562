"""Husimi Q distribution of a polarization state on the Poincare sphere.

Q(theta, phi) = |<theta,phi|psi>|^2 is the squared overlap with the SU(2)
coherent state at (theta, phi); it is everywhere in [0, 1] and satisfies
(2s+1)/(4pi) * integral Q dOmega = 1.  Grids sample theta on [0, pi] (either
cell midpoints or endpoints) and phi uniformly on [0, 2pi).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .spin_core import PolarizationState
from .states import coherent_state_closed_form

THETA_SCHEMES = ("midpoint", "endpoint")


@functools.lru_cache(maxsize=None)
def _chebyshev_weights(n: int) -> np.ndarray:
    """Quadrature weights for integral_{-1}^{1} f(p) dp at p_k = cos(theta_k),
    theta_k = (k + 1/2) pi / n.

    These are the classical positive weights for the Chebyshev nodes of the
    first kind (which the midpoint theta samples are); the rule is exact for
    polynomials in p up to degree n-1, which covers the phi-averaged Q of any
    fixed photon number.  A plain equal-weight midpoint rule in theta misses
    the required accuracy by orders of magnitude at these grid sizes.
    """
    k = np.arange(n)
    theta = (k + 0.5) * np.pi / n
    m = np.arange(1, n // 2 + 1)
    series = np.cos(2.0 * np.outer(theta, m)) / (4.0 * m**2 - 1.0)
    weights = (2.0 / n) * (1.0 - 2.0 * series.sum(axis=1))
    weights.setflags(write=False)
    return weights


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Sampling grid on the sphere: n_theta x n_phi points.

    scheme 'midpoint' puts theta at cell centers (k+1/2) pi/n_theta, scheme
    'endpoint' at k pi/(n_theta-1) including both poles.  phi is always
    k 2pi/n_phi starting at 0.
    """

    n_theta: int
    n_phi: int
    scheme: str = "midpoint"

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 2:
            raise ValueError("grid needs at least 2 samples per axis")
        if self.scheme not in THETA_SCHEMES:
            raise ValueError(f"unknown theta scheme {self.scheme!r}")

    @functools.cached_property
    def thetas(self) -> np.ndarray:
        if self.scheme == "midpoint":
            t = (np.arange(self.n_theta) + 0.5) * np.pi / self.n_theta
        else:
            t = np.arange(self.n_theta) * np.pi / (self.n_theta - 1)
        t.setflags(write=False)
        return t

    @functools.cached_property
    def phis(self) -> np.ndarray:
        p = np.arange(self.n_phi) * 2.0 * np.pi / self.n_phi
        p.setflags(write=False)
        return p

    @functools.cached_property
    def theta_weights(self) -> np.ndarray:
        """Weights w_i approximating integral f sin(theta) dtheta = sum w_i f(theta_i)."""
        if self.scheme == "midpoint":
            return _chebyshev_weights(self.n_theta)
        # trapezoid in theta with the sin(theta) factor absorbed
        step = np.pi / (self.n_theta - 1)
        w = np.full(self.n_theta, step) * np.sin(self.thetas)
        w[0] /= 2.0
        w[-1] /= 2.0
        w.setflags(write=False)
        return w


@dataclass(frozen=True, eq=False)
class QGrid:
    """Husimi values over a SphereGrid plus the quadrature normalization."""

    grid: SphereGrid
    values: np.ndarray  # shape (n_theta, n_phi), in [0, 1]
    normalization_estimate: float

    def __post_init__(self):
        if self.values.shape != (self.grid.n_theta, self.grid.n_phi):
            raise ValueError("value matrix does not match the grid shape")
        if self.values.min() < 0.0 or self.values.max() > 1.0:
            raise ValueError("Husimi values must lie in [0, 1]")


def q_value(state: PolarizationState, theta: float, phi: float) -> float:
    """Q(theta, phi) = |<theta,phi|psi>|^2 via the closed-form coherent bra."""
    bra = coherent_state_closed_form(state.space, theta, phi)
    overlap = np.vdot(bra.amplitudes, state.amplitudes)
    return float(min(1.0, abs(overlap) ** 2))


def _coherent_theta_profile(num_photons: int, thetas: np.ndarray) -> np.ndarray:
    """Real factors b_k(theta) of the coherent amplitudes, shape (n_theta, N+1)."""
    k = np.arange(num_photons + 1)
    binom = np.array([math.comb(num_photons, int(j)) for j in k], dtype=float)
    half = thetas[:, None] / 2.0
    return np.sqrt(binom)[None, :] * np.cos(half) ** (num_photons - k[None, :]) * np.sin(half) ** k[None, :]


def q_grid(state: PolarizationState, grid: SphereGrid) -> QGrid:
    """Dense Husimi evaluation over a sphere grid.

    The coherent amplitudes factor as b_k(theta) e^{i k phi}, so each theta
    row is a short Fourier sum evaluated for all phi at once.
    """
    num = state.space.num_photons
    profile = _coherent_theta_profile(num, grid.thetas)
    k = np.arange(num + 1)
    phases = np.exp(-1j * np.outer(grid.phis, k))
    overlaps = (profile * state.amplitudes[None, :]) @ phases.T
    values = np.abs(overlaps) ** 2
    np.clip(values, 0.0, 1.0, out=values)
    estimate = (
        (2.0 * state.space.spin + 1.0)
        / (4.0 * np.pi)
        * (2.0 * np.pi / grid.n_phi)
        * float(grid.theta_weights @ values.sum(axis=1))
    )
    values.setflags(write=False)
    return QGrid(grid, values, estimate)
