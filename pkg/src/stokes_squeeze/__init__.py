"""Stokes-operator toolkit for N-photon two-mode polarization states.

Builds spin-s Stokes matrices, prepares SU(2) coherent / triphoton / NOON
states, applies partial-polarizer and wave-plate elements, and computes
squeezing parameters, quantum Fisher information, and Husimi Q maps.
"""

from .elements import (
    ElementDescriptor,
    apply_element,
    qwp_apply,
    rotate,
    rotate_about,
    vpp_apply,
    vpp_success_probability,
)
from .husimi import QGrid, SphereGrid, q_grid, q_value
from .spin_core import (
    HermitianOperator,
    LadderOperator,
    PolarizationState,
    SpaceMismatchError,
    SpinSpace,
    build_spin_space,
    expectation,
    hermitian_exponential,
    ladder_operator,
    normalized_state,
    stokes_operator,
    variance,
)
from .squeezing import (
    BlochFrame,
    MeanPolarization,
    SqueezingReport,
    VarianceEllipse,
    analytic_amplitudes,
    analytic_ellipse,
    analytic_mean_s3,
    analytic_variances,
    bloch_frame,
    decibels,
    extremal_variances,
    mean_polarization,
    qfi_pure,
    squeezing_report,
    variance_ellipse,
)
from .states import (
    basis_state,
    coherent_state,
    coherent_state_closed_form,
    fidelity,
    fock_superposition,
    noon_state,
    triphoton_amplitudes,
    triphoton_raw,
    triphoton_seed,
    triphoton_state,
)
from .verify import CheckResult, run_checks, scan_transverse_variance

__version__ = "0.1.0"

__all__ = [
    "BlochFrame",
    "CheckResult",
    "ElementDescriptor",
    "HermitianOperator",
    "LadderOperator",
    "MeanPolarization",
    "PolarizationState",
    "QGrid",
    "SpaceMismatchError",
    "SphereGrid",
    "SpinSpace",
    "SqueezingReport",
    "VarianceEllipse",
    "analytic_amplitudes",
    "analytic_ellipse",
    "analytic_mean_s3",
    "analytic_variances",
    "apply_element",
    "basis_state",
    "bloch_frame",
    "build_spin_space",
    "coherent_state",
    "coherent_state_closed_form",
    "decibels",
    "expectation",
    "extremal_variances",
    "fidelity",
    "fock_superposition",
    "hermitian_exponential",
    "ladder_operator",
    "mean_polarization",
    "noon_state",
    "normalized_state",
    "q_grid",
    "q_value",
    "qfi_pure",
    "qwp_apply",
    "rotate",
    "rotate_about",
    "run_checks",
    "scan_transverse_variance",
    "squeezing_report",
    "stokes_operator",
    "triphoton_amplitudes",
    "triphoton_raw",
    "triphoton_seed",
    "triphoton_state",
    "variance",
    "variance_ellipse",
    "vpp_apply",
    "vpp_success_probability",
]
