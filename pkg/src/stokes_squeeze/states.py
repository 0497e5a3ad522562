"""Constructors for the named polarization states.

Covers SU(2) coherent states (exponential and closed-form routes), the
triphoton family produced by a variable partial polarizer followed by a
quarter-wave plate, N-photon NOON states, and raw two-mode Fock
superpositions.  States are compared by fidelity |<a|b>|^2, never
amplitude-wise, since optical transformations fix them only up to a global
phase.
"""

from __future__ import annotations

import math

import numpy as np

from .spin_core import (
    HermitianOperator,
    PolarizationState,
    SpinSpace,
    _stokes_matrices,
    build_spin_space,
    hermitian_exponential,
    normalized_state,
)

TRIPHOTON_SPACE = build_spin_space(3)


def basis_state(space: SpinSpace, n: float) -> PolarizationState:
    """The basis state |s,n>."""
    amps = np.zeros(space.dimension, dtype=complex)
    amps[space.index_of(n)] = 1.0
    return PolarizationState(space, amps)


def fidelity(a: PolarizationState, b: PolarizationState) -> float:
    """|<a|b>|^2; the phase-insensitive overlap of two states."""
    if a.space != b.space:
        raise ValueError("fidelity of states on different spaces")
    return abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2


def coherent_state(space: SpinSpace, theta: float, phi: float) -> PolarizationState:
    """SU(2) coherent state exp(i*theta*(S2 sin(phi) - S3 cos(phi))) |s,s>.

    The result is the minimal-uncertainty state pointing along the Poincare
    direction (cos(theta), sin(theta)cos(phi), sin(theta)sin(phi)), with both
    transverse variances equal to s/2.
    """
    _, _, s2, s3 = _stokes_matrices(space.num_photons)
    generator = HermitianOperator(space, np.sin(phi) * s2 - np.cos(phi) * s3)
    unitary = hermitian_exponential(generator, 1j * theta)
    return normalized_state(space, unitary[:, 0])


def coherent_state_closed_form(
    space: SpinSpace, theta: float, phi: float
) -> PolarizationState:
    """Binomial expansion of the SU(2) coherent state in the |s,n> basis.

    Amplitude on |s,n>, with k = s - n:
        sqrt(C(2s, k)) * cos(theta/2)^(2s-k) * sin(theta/2)^k * exp(i k phi)
    Independent of the exponential construction; used to cross-validate it.
    """
    big_n = space.num_photons
    k = np.arange(space.dimension)
    binom = np.array([math.comb(big_n, int(j)) for j in k], dtype=float)
    amps = (
        np.sqrt(binom)
        * np.cos(theta / 2) ** (big_n - k)
        * np.sin(theta / 2) ** k
        * np.exp(1j * k * phi)
    )
    return normalized_state(space, amps)


def triphoton_amplitudes(t_ratio: float) -> tuple[float, float]:
    """Closed-form amplitudes (c2, c3) of the post-QWP triphoton family.

    c2 = (3 - T^2) / (2 sqrt(2) sqrt(3 + T^4))
    c3 = (1/2) sqrt(3/2) (1 + T^2) / sqrt(3 + T^4)
    c2 changes sign at T = sqrt(3), where the family reaches the NOON state.
    """
    if t_ratio < 0:
        raise ValueError(f"transmissivity ratio must be >= 0, got {t_ratio}")
    root = math.sqrt(3.0 + t_ratio**4)
    c2 = (3.0 - t_ratio**2) / (2.0 * math.sqrt(2.0) * root)
    c3 = 0.5 * math.sqrt(1.5) * (1.0 + t_ratio**2) / root
    return c2, c3


def triphoton_seed() -> PolarizationState:
    """The three-photon overlap state (a_H^+2 - a_V^+2) a_H^+ |0> normalized.

    Expanding in photon-number states gives sqrt(6)|3,0>_HV - sqrt(2)|1,2>_HV;
    this is the state entering the variable partial polarizer.
    """
    return normalized_state(
        TRIPHOTON_SPACE, [math.sqrt(6.0), 0.0, -math.sqrt(2.0), 0.0]
    )


def triphoton_raw(t_ratio: float) -> PolarizationState:
    """Triphoton family after the partial polarizer, before the wave plate.

    Normalization of sqrt(3)|3/2,3/2> - T^2 |3/2,-1/2>; the closed form is
    exact for every T >= 0 and takes the T=0 limit (pure |3,0>_HV) without
    evaluating ln 0.
    """
    if t_ratio < 0:
        raise ValueError(f"transmissivity ratio must be >= 0, got {t_ratio}")
    amps = np.array([math.sqrt(3.0), 0.0, -(t_ratio**2), 0.0], dtype=complex)
    return normalized_state(TRIPHOTON_SPACE, amps)


def triphoton_state(t_ratio: float) -> PolarizationState:
    """Post-QWP triphoton state c2(i|2,1> - |1,2>) + c3(|3,0> - i|0,3>).

    Equals the quarter-wave plate applied to triphoton_raw(T) up to a global
    phase (empirically the phase is exactly 1 in this basis convention).
    """
    c2, c3 = triphoton_amplitudes(t_ratio)
    amps = np.array([c3, 1j * c2, -c2, -1j * c3], dtype=complex)
    return normalized_state(TRIPHOTON_SPACE, amps)


def noon_state(num_photons: int, noon_phase: float = 0.0) -> PolarizationState:
    """(|N,0>_HV + exp(i*phase)|0,N>_HV) / sqrt(2).

    The phase is reduced to [0, 2pi).  The triphoton family reaches the N=3
    member with phase -pi/2 at T = sqrt(3).
    """
    if num_photons < 1:
        raise ValueError(f"NOON state needs at least one photon, got {num_photons}")
    phase = float(noon_phase) % (2.0 * math.pi)
    space = build_spin_space(num_photons)
    amps = np.zeros(space.dimension, dtype=complex)
    amps[0] = 1.0 / math.sqrt(2.0)
    amps[-1] = np.exp(1j * phase) / math.sqrt(2.0)
    return PolarizationState(space, amps)


def fock_superposition(
    space: SpinSpace, terms: list[tuple[int, int, complex]]
) -> PolarizationState:
    """Normalized superposition of |m,n>_HV Fock states.

    Each term is (m_H, n_V, amplitude) with m_H + n_V equal to the photon
    number of `space`; |m,n>_HV maps to basis index n_V.  Duplicate modes and
    all-zero amplitude lists are rejected.
    """
    amps = np.zeros(space.dimension, dtype=complex)
    seen = set()
    for m_h, n_v, amplitude in terms:
        if m_h < 0 or n_v < 0 or m_h + n_v != space.num_photons:
            raise ValueError(
                f"term |{m_h},{n_v}>_HV does not hold {space.num_photons} photons"
            )
        if (m_h, n_v) in seen:
            raise ValueError(f"duplicate term |{m_h},{n_v}>_HV")
        seen.add((m_h, n_v))
        amps[n_v] = amplitude
    if not np.any(amps):
        raise ValueError("all amplitudes are zero")
    return normalized_state(space, amps)
