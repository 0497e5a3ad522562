"""Spin-s Hilbert space and Stokes-operator matrices for two-mode photon states.

N photons shared by a horizontal and a vertical polarization mode map onto a
spin s = N/2.  The basis |s,n> = |s+n, s-n>_HV diagonalizes the population
imbalance S1 and is ordered by descending n, so index 0 is |N,0>_HV and the
last index is |0,N>_HV.  All operators are small dense complex matrices;
every value is immutable after construction.
"""

from __future__ import annotations

import functools
import operator
from dataclasses import dataclass

import numpy as np

#: absolute tolerances separating round-off from genuine defects
HERMITICITY_TOL = 1e-12
NORM_TOL = 1e-12
IMAG_TOL = 1e-12
VARIANCE_CLAMP = 1e-12


class SpaceMismatchError(ValueError):
    """A state and an operator were combined across different spin spaces."""


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpinSpace:
    """The (N+1)-dimensional Hilbert space of N photons in two modes."""

    num_photons: int

    def __post_init__(self):
        if self.num_photons < 0:
            raise ValueError(f"photon number must be >= 0, got {self.num_photons}")

    @property
    def spin(self) -> float:
        return self.num_photons / 2

    @property
    def dimension(self) -> int:
        return self.num_photons + 1

    @functools.cached_property
    def n_values(self) -> np.ndarray:
        """Imbalance eigenvalues n in basis order, descending s..-s."""
        return _readonly(self.spin - np.arange(self.dimension))

    def index_of(self, n: float) -> int:
        """Basis index of |s,n>."""
        k = self.spin - n
        if abs(k - round(k)) > 1e-9 or not 0 <= round(k) < self.dimension:
            raise ValueError(f"n={n} is not an eigenvalue for spin s={self.spin}")
        return int(round(k))

    def basis_label(self, index: int) -> str:
        """Photon-number label |m,n>_HV of basis state `index` (m H-, n V-photons)."""
        if not 0 <= index < self.dimension:
            raise ValueError(f"basis index {index} out of range")
        return f"|{self.num_photons - index},{index}>_HV"


def build_spin_space(num_photons) -> SpinSpace:
    """Spin space for a fixed photon number; s = N/2, dimension N+1."""
    return SpinSpace(operator.index(num_photons))


@dataclass(frozen=True, eq=False)
class PolarizationState:
    """Normalized amplitude vector over the |s,n> basis of `space`."""

    space: SpinSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (self.space.dimension,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected "
                f"({self.space.dimension},)"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm!r} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "amplitudes", _readonly(amps))


def normalized_state(space: SpinSpace, amplitudes) -> PolarizationState:
    """Normalize a raw amplitude vector and wrap it as a PolarizationState."""
    amps = np.asarray(amplitudes, dtype=complex)
    norm = np.linalg.norm(amps)
    if norm == 0.0:
        raise ValueError("cannot normalize a zero amplitude vector")
    return PolarizationState(space, amps / norm)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Dense complex matrix on `space`, Hermitian within HERMITICITY_TOL."""

    space: SpinSpace
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        dim = self.space.dimension
        if mat.shape != (dim, dim):
            raise ValueError(f"matrix shape {mat.shape} does not match dimension {dim}")
        defect = np.abs(mat - mat.conj().T).max()
        if defect > HERMITICITY_TOL:
            raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
        object.__setattr__(self, "matrix", _readonly(mat))


@dataclass(frozen=True, eq=False)
class LadderOperator:
    """Dense raising/lowering matrix on `space` (not Hermitian)."""

    space: SpinSpace
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        dim = self.space.dimension
        if mat.shape != (dim, dim):
            raise ValueError(f"matrix shape {mat.shape} does not match dimension {dim}")
        object.__setattr__(self, "matrix", _readonly(mat))


@functools.lru_cache(maxsize=None)
def _ladder_plus_matrix(num_photons: int) -> np.ndarray:
    """Matrix of S+ with elements S+|s,n> = sqrt((s-n)(s+n+1)) |s,n+1>."""
    space = SpinSpace(num_photons)
    dim = space.dimension
    mat = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):          # |s,n+1> sits one index above |s,n>
        n = space.n_values[k]
        mat[k - 1, k] = np.sqrt((space.spin - n) * (space.spin + n + 1))
    return _readonly(mat)


@functools.lru_cache(maxsize=None)
def _stokes_matrices(num_photons: int) -> tuple[np.ndarray, ...]:
    """(S0, S1, S2, S3) on the spin-N/2 space, each read-only."""
    space = SpinSpace(num_photons)
    sp = _ladder_plus_matrix(num_photons)
    sm = sp.conj().T
    s0 = space.spin * np.eye(space.dimension, dtype=complex)
    s1 = np.diag(space.n_values).astype(complex)
    s2 = (sp + sm) / 2
    s3 = (sp - sm) / 2j
    return tuple(_readonly(m) for m in (s0, s1, s2, s3))


def stokes_operator(space: SpinSpace, which: int) -> HermitianOperator:
    """Stokes operator S0, S1, S2 or S3 on `space`.

    S1 is diagonal with entries n; S2 = (S+ + S-)/2 and S3 = (S+ - S-)/(2i)
    come from the ladder matrix elements; S0 = s * identity.
    """
    if which not in (0, 1, 2, 3):
        raise ValueError(f"Stokes axis must be 0, 1, 2 or 3, got {which}")
    return HermitianOperator(space, _stokes_matrices(space.num_photons)[which])


def ladder_operator(space: SpinSpace, sign: int) -> LadderOperator:
    """Raising (+1) or lowering (-1) operator S+- = S2 +- i S3."""
    if sign not in (+1, -1):
        raise ValueError(f"ladder sign must be +1 or -1, got {sign}")
    sp = _ladder_plus_matrix(space.num_photons)
    return LadderOperator(space, sp if sign == +1 else sp.conj().T)


def _require_same_space(state: PolarizationState, op) -> None:
    if state.space != op.space:
        raise SpaceMismatchError(
            f"state on N={state.space.num_photons} photons, operator on "
            f"N={op.space.num_photons}"
        )


def expectation(state: PolarizationState, op: HermitianOperator) -> float:
    """<psi|O|psi> for Hermitian O; the residual imaginary part must round off."""
    _require_same_space(state, op)
    raw = np.vdot(state.amplitudes, op.matrix @ state.amplitudes)
    if abs(raw.imag) >= IMAG_TOL:
        raise ArithmeticError(
            f"expectation of a Hermitian operator has imaginary part {raw.imag:.3e}"
        )
    return raw.real


def variance(state: PolarizationState, op: HermitianOperator) -> float:
    """<O^2> - <O>^2, clamped to 0 when within VARIANCE_CLAMP below zero.

    Values more negative than the clamp window indicate a bug, not round-off,
    and raise ArithmeticError.
    """
    _require_same_space(state, op)
    image = op.matrix @ state.amplitudes
    mean = np.vdot(state.amplitudes, image)
    if abs(mean.imag) >= IMAG_TOL:
        raise ArithmeticError(
            f"expectation of a Hermitian operator has imaginary part {mean.imag:.3e}"
        )
    var = np.vdot(image, image).real - mean.real**2
    if var < 0.0:
        if var < -VARIANCE_CLAMP:
            raise ArithmeticError(f"variance {var:.3e} below the round-off window")
        var = 0.0
    return var


def hermitian_exponential(op: HermitianOperator, scale: complex) -> np.ndarray:
    """exp(scale * M) for Hermitian M, via eigendecomposition.

    A purely imaginary scale yields a unitary, a purely real scale a Hermitian
    positive-definite matrix; both properties are checked post hoc at 1e-12.
    """
    scale = complex(scale)
    eigvals, eigvecs = np.linalg.eigh(op.matrix)
    result = (eigvecs * np.exp(scale * eigvals)) @ eigvecs.conj().T
    dim = op.space.dimension
    if scale.real == 0.0:
        defect = np.abs(result.conj().T @ result - np.eye(dim)).max()
        if defect > HERMITICITY_TOL:
            raise ArithmeticError(f"exponential lost unitarity (defect {defect:.3e})")
    elif scale.imag == 0.0:
        defect = np.abs(result - result.conj().T).max()
        if defect > HERMITICITY_TOL:
            raise ArithmeticError(f"exponential lost Hermiticity (defect {defect:.3e})")
    return result
