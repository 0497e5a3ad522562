"""Polarization-squeezing and entanglement analysis of a two-mode photon state.

The pipeline is: mean Stokes vector -> orthonormal analysis frame (n1, n2, n3
with n3 along the mean) -> transverse variance ellipse -> extremal variances
V-+ -> derived figures of merit:

    xi^2   = 2 V- / s          squeezing relative to the shot-noise limit s/2
    zeta^2 = (s/|<S>|)^2 xi^2  metrological squeezing; unbounded when <S> = 0
    chi^2  = s / (2 V+) = N/F  entanglement criterion, F = 4 V+ the quantum
                               Fisher information of a pure state

A closed-form route for the triphoton family (amplitudes, ellipse
coefficients, extremal variances) doubles every matrix result and is kept
strictly separate so the two paths cross-validate each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_core import (
    HermitianOperator,
    PolarizationState,
    _stokes_matrices,
    expectation,
    stokes_operator,
    variance,
)
from .states import triphoton_amplitudes

#: mean-polarization lengths below this count as vanishing (degenerate frame)
DEGENERACY_TOL = 1e-10
#: ellipse anisotropy below this counts as isotropic
ISOTROPY_TOL = 1e-10
#: second moments smaller than this (relative to the ellipse scale) are
#: round-off of an exact zero and are snapped, keeping gamma_opt deterministic
MOMENT_SNAP = 1e-12

#: analysis frame used when the mean polarization vanishes; continues the
#: triphoton family's frame through the NOON point
DEFAULT_FALLBACK_ANGLES = (math.pi / 2, math.pi / 2)


@dataclass(frozen=True, eq=False)
class MeanPolarization:
    """Mean Stokes vector, its length, and its transverse radius."""

    components: np.ndarray  # (<S1>, <S2>, <S3>)
    length: float
    transverse_radius: float


@dataclass(frozen=True, eq=False)
class BlochFrame:
    """Right-handed orthonormal triple with n3 along the mean polarization.

    n1 = (0, -sin(phi), cos(phi))
    n2 = (sin(theta), -cos(theta)cos(phi), -cos(theta)sin(phi))
    n3 = (cos(theta), sin(theta)cos(phi), sin(theta)sin(phi))

    `degenerate` marks a vanishing mean, where the angles come from a caller
    fallback instead of the state.
    """

    n1: np.ndarray
    n2: np.ndarray
    n3: np.ndarray
    theta: float
    phi: float
    degenerate: bool

    def __post_init__(self):
        for v in (self.n1, self.n2, self.n3):
            if abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise ValueError("frame vectors must be unit length")
        if (
            abs(self.n1 @ self.n2) > 1e-12
            or abs(self.n2 @ self.n3) > 1e-12
            or abs(self.n3 @ self.n1) > 1e-12
        ):
            raise ValueError("frame vectors must be orthogonal")
        if np.abs(np.cross(self.n1, self.n2) - self.n3).max() > 1e-12:
            raise ValueError("frame must be right-handed")


@dataclass(frozen=True)
class VarianceEllipse:
    """Transverse variance (Delta S_gamma)^2 = [C + A cos(2g) + B sin(2g)] / 2.

    gamma_opt = [pi + atan2(B, A)] / 2 minimizes the variance; the variance is
    pi-periodic in gamma, so gamma_opt is one representative of the minimizing
    class.  `isotropic` marks sqrt(A^2+B^2) below ISOTROPY_TOL, where
    gamma_opt is reported as 0 by convention.
    """

    A: float
    B: float
    C: float
    gamma_opt: float
    isotropic: bool

    def __post_init__(self):
        if self.C < math.hypot(self.A, self.B) - 1e-12:
            raise ValueError("ellipse admits a negative variance")


@dataclass(frozen=True, eq=False)
class SqueezingReport:
    """Every squeezing and entanglement figure of merit for one state."""

    mean: MeanPolarization
    frame: BlochFrame
    ellipse: VarianceEllipse
    v_minus: float
    v_plus: float
    xi2: float
    zeta2: float | None
    zeta2_unbounded: bool
    chi2: float
    qfi: float
    snl: float


def mean_polarization(state: PolarizationState) -> MeanPolarization:
    """Mean Stokes vector (<S1>, <S2>, <S3>) with length and transverse radius."""
    comps = np.array(
        [expectation(state, stokes_operator(state.space, i)) for i in (1, 2, 3)]
    )
    length = float(np.linalg.norm(comps))
    if length > state.space.spin + 1e-12:
        raise ArithmeticError(
            f"mean polarization length {length} exceeds the spin {state.space.spin}"
        )
    radius = float(np.hypot(comps[1], comps[2]))
    comps.setflags(write=False)
    return MeanPolarization(comps, length, radius)


def _frame_from_angles(theta: float, phi: float, degenerate: bool) -> BlochFrame:
    sin_t, cos_t = math.sin(theta), math.cos(theta)
    sin_p, cos_p = math.sin(phi), math.cos(phi)
    n1 = np.array([0.0, -sin_p, cos_p])
    n2 = np.array([sin_t, -cos_t * cos_p, -cos_t * sin_p])
    n3 = np.array([cos_t, sin_t * cos_p, sin_t * sin_p])
    for v in (n1, n2, n3):
        v.setflags(write=False)
    return BlochFrame(n1, n2, n3, theta, phi, degenerate)


def bloch_frame(
    mean: MeanPolarization, fallback: tuple[float, float] | None = None
) -> BlochFrame:
    """Analysis frame for a mean polarization.

    theta comes from atan2(r, <S1>) and phi from atan2(<S3>, <S2>).  A mean
    along the +-S1 pole (r ~ 0) fixes phi = 0 by convention; a vanishing mean
    marks the frame degenerate and uses the fallback angles, by default
    (pi/2, pi/2).
    """
    if mean.length <= DEGENERACY_TOL:
        theta, phi = fallback if fallback is not None else DEFAULT_FALLBACK_ANGLES
        return _frame_from_angles(theta, phi, degenerate=True)
    s1 = mean.components[0]
    if mean.transverse_radius <= DEGENERACY_TOL:
        return _frame_from_angles(0.0 if s1 > 0 else math.pi, 0.0, degenerate=False)
    theta = math.atan2(mean.transverse_radius, s1)
    phi = math.atan2(mean.components[2], mean.components[1])
    return _frame_from_angles(theta, phi, degenerate=False)


def _transverse_operators(state: PolarizationState, frame: BlochFrame):
    _, s1, s2, s3 = _stokes_matrices(state.space.num_photons)
    op1 = frame.n1[0] * s1 + frame.n1[1] * s2 + frame.n1[2] * s3
    op2 = frame.n2[0] * s1 + frame.n2[1] * s2 + frame.n2[2] * s3
    return op1, op2


def variance_ellipse(state: PolarizationState, frame: BlochFrame) -> VarianceEllipse:
    """Second moments of the transverse Stokes operators S_n1 and S_n2.

    A = <S_n1^2 - S_n2^2>, B = <S_n1 S_n2 + S_n2 S_n1>, C = <S_n1^2 + S_n2^2>.
    """
    op1, op2 = _transverse_operators(state, frame)
    image1 = op1 @ state.amplitudes
    image2 = op2 @ state.amplitudes
    sq1 = np.vdot(image1, image1).real
    sq2 = np.vdot(image2, image2).real
    a = sq1 - sq2
    b = 2.0 * np.vdot(image1, image2).real
    c = sq1 + sq2
    # exact-zero moments survive as +-1e-16 noise; snap them so atan2 picks a
    # deterministic branch (the family's B = 0, A < 0 must give gamma_opt = pi)
    snap = MOMENT_SNAP * max(1.0, c)
    if abs(a) < snap:
        a = 0.0
    if abs(b) < snap:
        b = 0.0
    if math.hypot(a, b) < ISOTROPY_TOL:
        return VarianceEllipse(a, b, c, gamma_opt=0.0, isotropic=True)
    return VarianceEllipse(
        a, b, c, gamma_opt=(math.pi + math.atan2(b, a)) / 2.0, isotropic=False
    )


def extremal_variances(ellipse: VarianceEllipse) -> tuple[float, float]:
    """(V-, V+) = ([C -+ sqrt(A^2+B^2)] / 2), V- clamped at zero round-off."""
    spread = math.hypot(ellipse.A, ellipse.B)
    v_minus = (ellipse.C - spread) / 2.0
    v_plus = (ellipse.C + spread) / 2.0
    if v_minus < 0.0:
        if v_minus < -1e-12:
            raise ArithmeticError(f"negative extremal variance {v_minus:.3e}")
        v_minus = 0.0
    return v_minus, v_plus


def squeezing_report(
    state: PolarizationState, fallback_frame: tuple[float, float] | None = None
) -> SqueezingReport:
    """Full analysis pipeline: mean -> frame -> ellipse -> V-+ -> figures of merit."""
    spin = state.space.spin
    if spin == 0:
        raise ValueError("squeezing analysis needs at least one photon")
    mean = mean_polarization(state)
    frame = bloch_frame(mean, fallback_frame)
    ellipse = variance_ellipse(state, frame)
    v_minus, v_plus = extremal_variances(ellipse)
    xi2 = 2.0 * v_minus / spin
    if mean.length > DEGENERACY_TOL:
        zeta2 = (spin / mean.length) ** 2 * xi2
        unbounded = False
    else:
        zeta2 = None
        unbounded = True
    return SqueezingReport(
        mean=mean,
        frame=frame,
        ellipse=ellipse,
        v_minus=v_minus,
        v_plus=v_plus,
        xi2=xi2,
        zeta2=zeta2,
        zeta2_unbounded=unbounded,
        chi2=spin / (2.0 * v_plus),
        qfi=4.0 * v_plus,
        snl=spin / 2.0,
    )


def qfi_pure(state: PolarizationState, direction) -> float:
    """Quantum Fisher information 4 (Delta d.S)^2 of a pure state.

    `direction` must be a unit 3-vector on the Poincare sphere.
    """
    d = np.asarray(direction, dtype=float)
    if d.shape != (3,) or abs(np.linalg.norm(d) - 1.0) > 1e-10:
        raise ValueError("direction must be a unit 3-vector")
    _, s1, s2, s3 = _stokes_matrices(state.space.num_photons)
    generator = HermitianOperator(state.space, d[0] * s1 + d[1] * s2 + d[2] * s3)
    return 4.0 * variance(state, generator)


def decibels(value: float) -> float | None:
    """10 log10(value) for positive values, None otherwise."""
    if value is None or value <= 0.0:
        return None
    return 10.0 * math.log10(value)


# ---------------------------------------------------------------------------
# closed-form route for the triphoton family (independent of the matrices)
# ---------------------------------------------------------------------------


def analytic_amplitudes(t_ratio: float) -> tuple[float, float]:
    """Closed-form triphoton amplitudes (c2, c3) as a function of T."""
    return triphoton_amplitudes(t_ratio)


def analytic_mean_s3(t_ratio: float) -> float:
    """Closed-form <S3> = 2 c2 (sqrt(3) c3 + c2) of the triphoton family.

    Positive below T = sqrt(3), zero there, negative above: the mean
    polarization flips exactly when the family reaches the NOON state.
    """
    c2, c3 = triphoton_amplitudes(t_ratio)
    return 2.0 * c2 * (math.sqrt(3.0) * c3 + c2)


def analytic_ellipse(t_ratio: float) -> VarianceEllipse:
    """Closed-form variance ellipse of the triphoton family (B = 0).

    In the family frame (theta = phi = pi/2, so S_n1 = -S2 and S_n2 = S1):
        A = 15/8 - [3 (9 c3^2 + c2^2) + 8 sqrt(3) c2 c3] / 4
        C = 15/8 + [9 c3^2 + c2^2 - 8 sqrt(3) c2 c3] / 4
    """
    c2, c3 = triphoton_amplitudes(t_ratio)
    quad = 9.0 * c3**2 + c2**2
    cross = 8.0 * math.sqrt(3.0) * c2 * c3
    a = 15.0 / 8.0 - (3.0 * quad + cross) / 4.0
    c = 15.0 / 8.0 + (quad - cross) / 4.0
    if abs(a) < ISOTROPY_TOL:
        return VarianceEllipse(a, 0.0, c, gamma_opt=0.0, isotropic=True)
    return VarianceEllipse(
        a, 0.0, c, gamma_opt=(math.pi + math.atan2(0.0, a)) / 2.0, isotropic=False
    )


def analytic_variances(t_ratio: float) -> tuple[float, float]:
    """Closed-form extremal variances of the triphoton family.

    V- = [15/2 - (9 c3^2 + c2^2 + 8 sqrt(3) c2 c3)] / 4
    V+ = (9 c3^2 + c2^2) / 2
    """
    c2, c3 = triphoton_amplitudes(t_ratio)
    quad = 9.0 * c3**2 + c2**2
    v_minus = (7.5 - (quad + 8.0 * math.sqrt(3.0) * c2 * c3)) / 4.0
    v_plus = quad / 2.0
    return v_minus, v_plus
