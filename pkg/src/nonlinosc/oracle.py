"""Independent verification engines: a finite-difference Schrodinger
ground-state solver and a truncated number-basis moment calculator.

The solver discretizes H = -d^2/dx^2 / 2 + V with the 3-point Laplacian and
Dirichlet ends, giving a symmetric tridiagonal matrix whose lowest
eigenvalue comes from Sturm-sequence bisection (LAPACK stebz) followed by
in-module inverse iteration for the eigenvector. Plain 3-point differencing
is preferred over higher-order schemes because the tridiagonal structure
admits exact Sturm counting and its second-order convergence is ample at
the default grid sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal, solve_banded

from .errors import ConvergenceError, GridError, SpecError, TruncationError, UnsupportedSpecError
from .numerics import CovarianceMatrix, Grid, SampledWavefunction, normalize
from .potentials import ModifiedPoschlTeller, Morse, PotentialSpec, evaluate_potential

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EigenResult:
    """Converged lowest eigenpair on a grid."""

    energy: float
    wavefunction: SampledWavefunction
    residual: float
    iterations: int


@dataclass(frozen=True, eq=False)
class FockState:
    """Real amplitudes on number states |0> .. |dimension-1> at a frequency.

    Coefficients are normalized on construction and zero-padded up to
    ``dimension``.
    """

    coefficients: np.ndarray
    omega: float = 1.0
    dimension: int = 16

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=float).ravel()
        if self.dimension < 8:
            raise SpecError(f"Fock dimension must be >= 8, got {self.dimension}")
        if coeffs.size > self.dimension:
            raise SpecError(
                f"{coeffs.size} coefficients exceed dimension {self.dimension}"
            )
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise SpecError(f"Fock omega must be positive, got {self.omega!r}")
        norm = float(np.linalg.norm(coeffs))
        if norm == 0.0:
            raise SpecError("Fock coefficients must not all vanish")
        padded = np.zeros(self.dimension)
        padded[: coeffs.size] = coeffs / norm
        object.__setattr__(self, "coefficients", padded)


def _tridiagonal_hamiltonian(spec: PotentialSpec, grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """Interior-point diagonal and off-diagonal of the discretized H."""
    x = grid.points()
    h = grid.spacing
    v = np.asarray(evaluate_potential(spec, x[1:-1]), dtype=float)
    diag = 1.0 / h**2 + v
    off = np.full(v.size - 1, -0.5 / h**2)
    return diag, off


def _tridiagonal_apply(diag, off, vec):
    out = diag * vec
    out[:-1] += off * vec[1:]
    out[1:] += off * vec[:-1]
    return out


def fd_ground_state(spec: PotentialSpec, grid: Grid) -> EigenResult:
    """Lowest eigenpair of the finite-difference Hamiltonian.

    The returned wavefunction is Simpson-normalized, sign-fixed positive at
    its peak, and carries zeros at the Dirichlet endpoints. A state whose
    amplitude near the box edges has not decayed is rejected: it means the
    grid is too small for the physical ground state.
    """
    diag, off = _tridiagonal_hamiltonian(spec, grid)
    energy = float(eigvalsh_tridiagonal(diag, off, select="i", select_range=(0, 0))[0])

    h_scale = float(np.max(np.abs(diag))) + 2.0 * abs(off[0])
    shift = energy - 1e-9 * max(1.0, abs(energy))
    bands = np.zeros((3, diag.size))
    bands[0, 1:] = off
    bands[1, :] = diag - shift
    bands[2, :-1] = off
    vec = np.ones(diag.size) / math.sqrt(diag.size)
    target = max(1e-10 * abs(energy), 8.0 * _EPS * h_scale)
    best_res = math.inf
    best_vec = vec
    previous = math.inf
    iterations = 0
    for _ in range(30):
        try:
            vec = solve_banded((1, 1), bands, vec)
        except (np.linalg.LinAlgError, ValueError) as exc:
            raise ConvergenceError(f"inverse iteration failed: {exc}") from exc
        vec /= float(np.linalg.norm(vec))
        iterations += 1
        residual = float(np.linalg.norm(_tridiagonal_apply(diag, off, vec) - energy * vec))
        if residual < best_res:
            best_res, best_vec = residual, vec
        if residual <= target:
            break
        if iterations >= 2 and residual > 0.5 * previous:
            break  # at the precision floor for this spacing
        previous = residual
    if best_res > 1e-6 * h_scale:
        raise ConvergenceError(
            f"inverse iteration stalled with residual {best_res:.3g} for {spec!r}"
        )

    amplitude = np.zeros(grid.n_points)
    amplitude[1:-1] = best_vec
    if amplitude[np.argmax(np.abs(amplitude))] < 0.0:
        amplitude = -amplitude
    wavefunction = normalize(
        SampledWavefunction(grid, amplitude, normalized=False, norm_defect=0.0)
    )
    peak = float(np.max(np.abs(wavefunction.amplitude)))
    near_edge = max(
        float(np.max(np.abs(wavefunction.amplitude[1:4]))),
        float(np.max(np.abs(wavefunction.amplitude[-4:-1]))),
    )
    if near_edge > 1e-5 * peak:
        raise GridError(
            f"computed ground state violates the tail condition "
            f"(near-edge/peak ratio {near_edge / peak:.3g}); grid too small"
        )
    return EigenResult(energy, wavefunction, best_res, iterations)


def _sturm_count_below(diag: np.ndarray, off: np.ndarray, value: float) -> int:
    """Eigenvalues of the tridiagonal matrix strictly below ``value``.

    Signs of the LDL^T pivots of (T - value I); zero pivots are nudged as in
    LAPACK's pivmin safeguard.
    """
    tiny = _EPS * (float(np.max(np.abs(diag))) + 2.0 * float(np.max(np.abs(off)))) ** 2
    tiny = max(tiny, 1e-300)
    count = 0
    pivot = diag[0] - value
    if pivot == 0.0:
        pivot = -tiny
    if pivot < 0.0:
        count += 1
    off_sq = off * off
    for i in range(1, diag.size):
        pivot = (diag[i] - value) - off_sq[i - 1] / pivot
        if pivot == 0.0:
            pivot = -tiny
        if pivot < 0.0:
            count += 1
    return count


def count_negative_eigenvalues(spec: PotentialSpec, grid: Grid) -> int:
    """Bound states of a potential vanishing at +infinity (Morse, MPT).

    Sturm count of eigenvalues below zero, re-checked on a spacing-halved
    grid; a mismatch means the discretization has not converged.
    """
    if not isinstance(spec, (Morse, ModifiedPoschlTeller)):
        raise UnsupportedSpecError(
            "negative-eigenvalue counting needs V -> 0 at +infinity; confining "
            "potentials have no natural zero threshold"
        )
    counts = []
    for g in (grid, grid.refined()):
        diag, off = _tridiagonal_hamiltonian(spec, g)
        counts.append(_sturm_count_below(diag, off, 0.0))
    if counts[0] != counts[1]:
        raise ConvergenceError(
            f"bound-state count not converged: {counts[0]} vs {counts[1]} under "
            "grid refinement"
        )
    return counts[0]


def _ladder_matrices(omega: float, dim: int) -> tuple[np.ndarray, np.ndarray]:
    lowering = np.zeros((dim, dim))
    idx = np.arange(1, dim)
    lowering[idx - 1, idx] = np.sqrt(idx)
    x_op = (lowering + lowering.T) / math.sqrt(2.0 * omega)
    p_op = 1j * (lowering.T - lowering) * math.sqrt(omega / 2.0)
    return x_op, p_op


def fock_covariance(state: FockState) -> CovarianceMatrix:
    """Exact canonical moments of a truncated number-basis state.

    Builds x and p as ladder-operator matrices at the state's frequency and
    contracts them against the coefficient vector. Raises if the state
    carries weight on the top two basis states, where x^2/p^2 matrix
    elements are truncated.
    """
    coeffs = state.coefficients
    if float(np.max(np.abs(coeffs[-2:]))) > 1e-10:
        raise TruncationError(
            "amplitude on the top two basis states exceeds 1e-10; enlarge dimension"
        )
    occupied = int(np.max(np.nonzero(np.abs(coeffs) > 0.0)[0]))
    if state.dimension < occupied + 4:
        raise SpecError(
            f"dimension {state.dimension} too small for occupation up to {occupied}; "
            "need at least occupied + 4"
        )
    x_op, p_op = _ladder_matrices(state.omega, state.dimension)
    c = coeffs.astype(complex)
    xc = x_op @ c
    pc = p_op @ c
    mean_x = float(np.real(np.vdot(c, xc)))
    mean_p = float(np.real(np.vdot(c, pc)))
    var_x = float(np.real(np.vdot(xc, xc))) - mean_x**2
    var_p = float(np.real(np.vdot(pc, pc))) - mean_p**2
    cov_xp = 0.5 * float(np.real(np.vdot(xc, pc) + np.vdot(pc, xc))) - mean_x * mean_p
    return CovarianceMatrix(
        var_x=var_x, var_p=var_p, cov_xp=cov_xp, mean_x=mean_x, mean_p=mean_p
    )
