"""Closed-form entanglement quantifiers for Schmidt-diagonal states.

For a normalized state sum_n c_n |n,n> the partial transpose of the
projector has a fully explicit spectrum: |c_n|^2 on the diagonal
sector, and a pair of eigenvalues +-|c_n||c_m| for every n < m, the
signed pair coming from the 2x2 block spanned by |n,m> and |m,n>.  The
entropies of either marginal follow from the weights p_n = |c_n|^2
alone.  Entropies default to base 2 (bits); pass base=math.e for nats.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .states import SchmidtState


@dataclass(frozen=True)
class PTSpectrum:
    """Eigenvalues of the partially transposed density matrix.

    `diagonal[n]` is the |n,n> eigenvalue, and entry k of the pair
    arrays describes the block (pair_n[k], pair_m[k]) with eigenvalues
    pair_plus[k] = -pair_minus[k] and relative coefficient phase
    theta[k] = arg(c_n conj(c_m)); eigenvectors are
    (|n,m> +- e^{-i theta} |m,n>)/sqrt(2).
    """

    diagonal: np.ndarray
    pair_n: np.ndarray
    pair_m: np.ndarray
    pair_plus: np.ndarray
    pair_minus: np.ndarray
    theta: np.ndarray

    def eigenvalues(self) -> np.ndarray:
        """All eigenvalues (diagonal plus both signed pair members), ascending."""
        return np.sort(np.concatenate([self.diagonal, self.pair_plus, self.pair_minus]))

    def negative_sum(self) -> float:
        """Absolute sum of the negative eigenvalues."""
        return float(-np.sum(self.pair_minus))

    def trace(self) -> float:
        return float(np.sum(self.diagonal) + np.sum(self.pair_plus) + np.sum(self.pair_minus))

    def to_dict(self) -> dict:
        return {
            "diagonal": [float(v) for v in self.diagonal],
            "pairs": [
                {"n": int(n), "m": int(m), "plus": float(p), "minus": float(q),
                 "theta": float(t)}
                for n, m, p, q, t in zip(self.pair_n, self.pair_m, self.pair_plus,
                                         self.pair_minus, self.theta)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def pt_spectrum(state: SchmidtState) -> PTSpectrum:
    """Spectrum of the partial transpose of |state><state|."""
    mags = np.abs(state.coefficients)
    args = np.angle(state.coefficients)
    n_idx, m_idx = np.triu_indices(mags.size, k=1)
    plus = mags[n_idx] * mags[m_idx]
    theta = np.mod(args[n_idx] - args[m_idx] + np.pi, 2.0 * np.pi) - np.pi
    return PTSpectrum(diagonal=mags**2, pair_n=n_idx, pair_m=m_idx,
                      pair_plus=plus, pair_minus=-plus, theta=theta)


def negativity(state: SchmidtState) -> float:
    """Sum of |negative PT eigenvalues| = ((sum_n |c_n|)^2 - sum_n |c_n|^2)/2."""
    mags = np.abs(state.coefficients)
    return float(0.5 * (np.sum(mags) ** 2 - np.sum(mags**2)))


def von_neumann_entropy(state: SchmidtState, base: float = 2.0) -> float:
    """Marginal entropy -sum_n p_n log p_n, p_n = |c_n|^2 (0 log 0 = 0)."""
    p = state.probabilities
    p = p[p > 0.0]
    return float(-np.sum(p * np.log(p)) / math.log(base))


def correlation_entropy(state: SchmidtState, base: float = 2.0) -> float:
    """Mutual entropy S_a + S_b - S_ab; equals 2 S_a for these pure states."""
    return 2.0 * von_neumann_entropy(state, base)


def linear_entropy(state: SchmidtState) -> float:
    """1 - Tr(rho_a^2) = 1 - sum_n p_n^2 of either marginal."""
    p = state.probabilities
    return float(1.0 - np.sum(p * p))


@dataclass(frozen=True)
class EntropyRecord:
    """Entropy summary of one state (entropies in bits)."""

    s_a: float
    s_b: float
    i_corr: float
    i_lin: float

    def to_dict(self) -> dict:
        return {"s_a": self.s_a, "s_b": self.s_b,
                "i_corr": self.i_corr, "i_lin": self.i_lin}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def entropy_record(state: SchmidtState) -> EntropyRecord:
    s = von_neumann_entropy(state)
    return EntropyRecord(s_a=s, s_b=s, i_corr=2.0 * s, i_lin=linear_entropy(state))
