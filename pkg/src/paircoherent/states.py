"""Truncated Schmidt-diagonal two-mode states and their wave functions.

A state here is a finite coefficient vector c_n over the paired Fock
basis |n,n>, normalized after truncation so that downstream trace
identities hold to machine precision rather than to the tail tolerance.
Three constructors are provided: the pair coherent state (c_n
proportional to zeta^n / n!), the two-mode squeezed vacuum (c_n
proportional to zeta^n), and the equal-photon-number projection of a
two-mode coherent state, which reproduces the pair coherent family and
serves as its cross-check.

Quadrature conventions: x = (a + a^dag)/sqrt(2), so the ground-state
position density is pi^(-1/2) exp(-x^2).
"""

import cmath
import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NumericalError
from .specfun import log_factorials, oscillator_eigenfunction_table

_PAIR_COHERENT_CAP = 512
_SQUEEZED_CAP = 4096
_ZETA_MAX = 50.0
_DEFAULT_TAIL_TOL = 1e-16
_NORM_TOL = 1e-12


class StateKind(Enum):
    PAIR_COHERENT = "pair-coherent"
    SQUEEZED_VACUUM = "squeezed-vacuum"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SchmidtState:
    """Normalized coefficients c_n over |n,n>, n = 0..N.

    Immutable after construction; `zeta` records the defining parameter
    when the state comes from one of the named families.
    """

    coefficients: np.ndarray
    zeta: complex | None
    kind: StateKind

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise DomainError("coefficients must be a non-empty 1-d sequence")
        norm = float(np.sum(np.abs(coeffs) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise DomainError(f"state not normalized: sum |c_n|^2 = {norm!r}")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coefficients, kind: StateKind = StateKind.CUSTOM,
                          zeta: complex | None = None) -> "SchmidtState":
        """Build a state from raw amplitudes, normalizing them first."""
        coeffs = np.asarray(coefficients, dtype=complex).copy()
        norm = math.sqrt(float(np.sum(np.abs(coeffs) ** 2)))
        if norm == 0.0:
            raise DomainError("coefficient vector is identically zero")
        return cls(coeffs / norm, zeta, kind)

    @property
    def truncation(self) -> int:
        """Largest retained Fock index N."""
        return self.coefficients.size - 1

    @property
    def probabilities(self) -> np.ndarray:
        """Schmidt weights p_n = |c_n|^2 (the marginal number distribution)."""
        return np.abs(self.coefficients) ** 2

    def truncated(self, n_max: int) -> "SchmidtState":
        """Copy truncated at Fock index n_max and renormalized."""
        if n_max < 0:
            raise DomainError(f"n_max must be >= 0, got {n_max}")
        if n_max >= self.truncation:
            return self
        return SchmidtState.from_coefficients(
            self.coefficients[: n_max + 1], self.kind, self.zeta)


def _truncation_index(log_weights, cap: int, tail_tol: float) -> int:
    """Smallest N with the geometric tail bound below tail_tol.

    log_weights(n) must return ln w_n for a positive, eventually
    log-concave weight sequence; the tail past N is bounded by
    w_{N+1} / (1 - w_{N+2}/w_{N+1}) once the term ratio drops below 1.
    """
    total = math.exp(log_weights(0))
    for n in range(cap):
        w_next = math.exp(log_weights(n + 1))
        ratio_next = math.exp(log_weights(n + 2) - log_weights(n + 1))
        if ratio_next < 1.0:
            tail = w_next / (1.0 - ratio_next)
            if tail <= tail_tol * total:
                return n
        total += w_next
    raise NumericalError(f"tail bound {tail_tol} not reached within cap {cap}")


def _phased_amplitudes(log_magnitudes: np.ndarray, phi: float) -> np.ndarray:
    n = np.arange(log_magnitudes.size)
    coeffs = np.exp(log_magnitudes).astype(complex)
    if phi != 0.0:
        coeffs *= np.exp(1j * phi * n)
    return coeffs


def pair_coherent(zeta: complex, tail_tolerance: float = _DEFAULT_TAIL_TOL) -> SchmidtState:
    """Pair coherent state with c_n proportional to zeta^n / n!.

    Amplitudes are computed in log space (n log|zeta| - log n! - half
    the log of the normalization sum) to avoid factorial overflow, then
    renormalized after truncation.  N is the smallest index whose
    estimated tail mass falls below tail_tolerance, capped at 512.
    """
    if not 0.0 < tail_tolerance <= 1e-4:
        raise DomainError(f"tail_tolerance must be in (0, 1e-4], got {tail_tolerance}")
    zeta = complex(zeta)
    mod, phi = abs(zeta), cmath.phase(zeta)
    if mod > _ZETA_MAX:
        raise DomainError(f"|zeta| must be <= {_ZETA_MAX}, got {mod}")
    if mod == 0.0:
        return SchmidtState(np.array([1.0 + 0.0j]), zeta, StateKind.PAIR_COHERENT)
    log_mod = math.log(mod)
    lf = log_factorials(_PAIR_COHERENT_CAP + 2)
    n_cut = _truncation_index(lambda n: 2.0 * (n * log_mod - lf[n]),
                              _PAIR_COHERENT_CAP, tail_tolerance)
    n = np.arange(n_cut + 1)
    logw = 2.0 * (n * log_mod - lf[: n_cut + 1])
    log_mag = 0.5 * (logw - _logsumexp(logw))
    coeffs = _phased_amplitudes(log_mag, phi)
    return SchmidtState.from_coefficients(coeffs, StateKind.PAIR_COHERENT, zeta)


def squeezed_vacuum(zeta: complex) -> SchmidtState:
    """Two-mode squeezed vacuum, c_n = sqrt(1 - |zeta|^2) zeta^n, |zeta| < 1.

    The tail past N is exactly |zeta|^(2(N+1)); N is the smallest index
    bringing it below 1e-16, and the constructor refuses (rather than
    silently truncates) when that exceeds the 4096 cap.
    """
    zeta = complex(zeta)
    mod, phi = abs(zeta), cmath.phase(zeta)
    if mod >= 1.0:
        raise DomainError(
            f"squeezed vacuum is undefined at or beyond unit parameter, got |zeta| = {mod}")
    if mod == 0.0:
        return SchmidtState(np.array([1.0 + 0.0j]), zeta, StateKind.SQUEEZED_VACUUM)
    t = mod * mod
    n_cut = max(0, math.ceil(math.log(_DEFAULT_TAIL_TOL) / math.log(t)) - 1)
    if n_cut > _SQUEEZED_CAP:
        raise DomainError(
            f"|zeta| = {mod} needs truncation {n_cut} > cap {_SQUEEZED_CAP}")
    n = np.arange(n_cut + 1)
    logw = n * math.log(t)
    log_mag = 0.5 * (logw - _logsumexp(logw))
    coeffs = _phased_amplitudes(log_mag, phi)
    return SchmidtState.from_coefficients(coeffs, StateKind.SQUEEZED_VACUUM, zeta)


def project_pair_from_coherent(alpha: complex, beta: complex) -> SchmidtState:
    """Project the two-mode coherent state |alpha,beta> onto equal photon number.

    |alpha,beta> has amplitude e^{-(|a|^2+|b|^2)/2} alpha^n beta^m / sqrt(n! m!)
    on |n,m>; keeping n = m and renormalizing leaves coefficients
    proportional to (alpha*beta)^n / n!, i.e. the pair coherent state at
    zeta = alpha*beta.  Computed on its own code path (with the coherent
    prefactor) so it can serve as the family's cross-check.
    """
    alpha, beta = complex(alpha), complex(beta)
    product = alpha * beta
    mod, phi = abs(product), cmath.phase(product)
    if mod > _ZETA_MAX:
        raise DomainError(f"|alpha*beta| must be <= {_ZETA_MAX}, got {mod}")
    log_pref = -0.5 * (abs(alpha) ** 2 + abs(beta) ** 2)
    if mod == 0.0:
        return SchmidtState(np.array([1.0 + 0.0j]), product, StateKind.PAIR_COHERENT)
    log_mod = math.log(mod)
    lf = log_factorials(_PAIR_COHERENT_CAP + 2)
    # the coherent prefactor cancels in relative tail mass, so the
    # truncation decision matches pair_coherent(alpha*beta) exactly
    n_cut = _truncation_index(lambda n: 2.0 * (n * log_mod - lf[n]),
                              _PAIR_COHERENT_CAP, _DEFAULT_TAIL_TOL)
    n = np.arange(n_cut + 1)
    logw = 2.0 * (log_pref + n * log_mod - lf[: n_cut + 1])
    log_mag = 0.5 * (logw - _logsumexp(logw))
    coeffs = _phased_amplitudes(log_mag, phi)
    return SchmidtState.from_coefficients(coeffs, StateKind.PAIR_COHERENT, product)


def _logsumexp(logw: np.ndarray) -> float:
    peak = float(np.max(logw))
    return peak + math.log(float(np.sum(np.exp(logw - peak))))


def quadrature_amplitude(state: SchmidtState, x_a: float, x_b: float) -> complex:
    """Coordinate wave function <x_a, x_b | state> = sum_n c_n psi_n(x_a) psi_n(x_b)."""
    table = oscillator_eigenfunction_table(
        state.truncation, np.array([x_a, x_b], dtype=float))
    return complex(np.sum(state.coefficients * table[:, 0] * table[:, 1]))


@dataclass(frozen=True)
class QuadratureGrid:
    """Sampled joint position density P(x_a, x_b) = |<x_a,x_b|psi>|^2."""

    x_a: np.ndarray
    x_b: np.ndarray
    values: np.ndarray

    def to_csv(self) -> str:
        lines = ["x_a,x_b,P"]
        for i, xa in enumerate(self.x_a):
            for j, xb in enumerate(self.x_b):
                lines.append(f"{xa:.15g},{xb:.15g},{self.values[i, j]:.15g}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "x_a": [float(v) for v in self.x_a],
            "x_b": [float(v) for v in self.x_b],
            "values": [[float(v) for v in row] for row in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def quadrature_grid(state: SchmidtState, x_min: float, x_max: float,
                    points: int) -> QuadratureGrid:
    """Uniform grid of the joint position density over [x_min, x_max]^2."""
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points}")
    if not x_min < x_max:
        raise DomainError(f"need x_min < x_max, got [{x_min}, {x_max}]")
    x = np.linspace(x_min, x_max, points)
    table = oscillator_eigenfunction_table(state.truncation, x)
    amplitude = np.einsum("n,ni,nj->ij", state.coefficients, table, table)
    return QuadratureGrid(x, x.copy(), np.abs(amplitude) ** 2)
