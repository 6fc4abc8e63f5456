"""Brute-force verification path, independent of the closed forms.

Everything here works on dense matrices over the composite Fock basis
|n,m> (row-major pairing, n and m both cut at the state's truncation):
the density matrix is an explicit outer product, the partial transpose
an explicit index swap, and the eigensolver an in-house cyclic Jacobi
on the 2d x 2d real symmetric embedding of the Hermitian input.  None
of it reuses the analytic spectrum or the Bessel-ratio variance
formulas, which is the whole point: desk-scale certification of the
closed-form code paths.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .states import SchmidtState

_CAPACITY = 4 * 10**4          # max composite dimension (N+1)^2
_HERMITIAN_TOL = 1e-12
_OFF_DIAGONAL_TOL = 1e-13
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class DenseOperator:
    """Dense operator on the two-mode Fock space cut at n_max per mode.

    matrix[(n1*(n_max+1)+m1), (n2*(n_max+1)+m2)] = <n1,m1| A |n2,m2>.
    """

    n_max: int
    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return (self.n_max + 1) ** 2


def dense_density(state: SchmidtState) -> DenseOperator:
    """|state><state| embedded in the composite basis (rank 1, trace 1)."""
    n_max = state.truncation
    dim = (n_max + 1) ** 2
    if dim > _CAPACITY:
        raise DomainError(
            f"composite dimension {dim} exceeds the oracle capacity {_CAPACITY}")
    vec = np.zeros(dim, dtype=complex)
    vec[np.arange(n_max + 1) * (n_max + 2)] = state.coefficients
    return DenseOperator(n_max, np.outer(vec, vec.conj()))


def partial_transpose(op: DenseOperator) -> DenseOperator:
    """Transpose on the second mode: ((n1,m1),(n2,m2)) -> ((n1,m2),(n2,m1))."""
    side = op.n_max + 1
    four = op.matrix.reshape(side, side, side, side)
    swapped = four.transpose(0, 3, 2, 1).copy()
    return DenseOperator(op.n_max, swapped.reshape(side * side, side * side))


def _jacobi_rotate(a: np.ndarray, p: int, q: int) -> None:
    """One Jacobi rotation zeroing a[p,q] (symmetric a, in place)."""
    apq = a[p, q]
    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0


def _jacobi_eigenvalues(sym: np.ndarray) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Each sweep visits the upper-triangle entries above a skip threshold
    in row-major order; convergence is declared when the off-diagonal
    Frobenius mass drops below 1e-13.
    """
    a = sym.copy()
    dim = a.shape[0]
    skip = _OFF_DIAGONAL_TOL / (2.0 * dim)
    for _ in range(_MAX_SWEEPS):
        upper = np.triu(a, 1)
        off_mass = math.sqrt(2.0 * float(np.sum(upper * upper)))
        if off_mass < _OFF_DIAGONAL_TOL:
            return np.sort(np.diag(a))
        rows, cols = np.nonzero(np.abs(upper) > skip)
        for p, q in zip(rows.tolist(), cols.tolist()):
            if abs(a[p, q]) > skip:
                _jacobi_rotate(a, p, q)
    raise NumericalError(f"Jacobi sweep limit {_MAX_SWEEPS} reached")


def hermitian_eigenvalues(op) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian DenseOperator or ndarray.

    The complex matrix H = A + iB is embedded as the real symmetric
    [[A, -B], [B, A]], whose spectrum is that of H with every
    eigenvalue doubled; the duplicates are removed by taking every
    other entry of the sorted result.
    """
    h = op.matrix if isinstance(op, DenseOperator) else np.asarray(op, dtype=complex)
    defect = float(np.max(np.abs(h - h.conj().T)))
    if defect > _HERMITIAN_TOL:
        raise DomainError(f"matrix is not Hermitian within {_HERMITIAN_TOL}: "
                          f"max |A - A^dag| = {defect}")
    re, im = h.real, h.imag
    doubled = np.block([[re, -im], [im, re]])
    doubled = 0.5 * (doubled + doubled.T)
    return _jacobi_eigenvalues(doubled)[::2]


_LOWER = {"a": (0, False), "b": (1, False)}


def _parse_word(word: str) -> list[tuple[int, bool]]:
    ops = []
    i = 0
    text = word.replace(" ", "")
    while i < len(text):
        ch = text[i]
        if ch not in _LOWER:
            raise DomainError(f"unsupported operator word {word!r}")
        mode, _ = _LOWER[ch]
        dagger = i + 1 < len(text) and text[i + 1] in "+†"
        ops.append((mode, dagger))
        i += 2 if dagger else 1
    if len(ops) > 2:
        raise DomainError(f"operator word length must be <= 2, got {word!r}")
    return ops


def _apply_ladder(grid: np.ndarray, mode: int, dagger: bool) -> np.ndarray:
    """Apply a or a^dag on one mode of a coefficient grid over |n,m>."""
    out = np.zeros_like(grid)
    dim = grid.shape[0]
    root = np.sqrt(np.arange(1, dim))
    if mode == 0:
        if dagger:
            out[1:, :] = root[:, None] * grid[:-1, :]
        else:
            out[:-1, :] = root[:, None] * grid[1:, :]
    else:
        if dagger:
            out[:, 1:] = root[None, :] * grid[:, :-1]
        else:
            out[:, :-1] = root[None, :] * grid[:, 1:]
    return out


def ladder_expectation(state: SchmidtState, word: str) -> complex:
    """<state| O |state> for an operator word of length <= 2 over a, a+, b, b+.

    Tokens: "a", "a+", "b", "b+" (unicode dagger accepted), e.g. "ab",
    "a+a", "b+b+".  The rightmost operator acts first.  Matrix elements
    are the explicit a|n> = sqrt(n)|n-1>, a+|n> = sqrt(n+1)|n+1>.
    """
    ops = _parse_word(word)
    dim = state.truncation + 1 + len(ops)
    grid = np.zeros((dim, dim), dtype=complex)
    idx = np.arange(state.truncation + 1)
    grid[idx, idx] = state.coefficients
    result = grid
    for mode, dagger in reversed(ops):
        result = _apply_ladder(result, mode, dagger)
    return complex(np.vdot(grid, result))


def variances_from_ladders(state: SchmidtState, m: float) -> tuple[float, float]:
    """<(du)^2>, <(dv)^2> assembled purely from ladder expectations.

    Expands u = |m| x_a + x_b/m and v = |m| p_a - p_b/m into operator
    words and subtracts the (ladder-computed) means; no closed form and
    no coefficient-sum shortcut is used anywhere.
    """
    if m == 0.0:
        raise DomainError("m must be nonzero")
    m = float(m)
    sign = math.copysign(1.0, m)
    e = lambda word: ladder_expectation(state, word)

    xa2 = (e("aa") + e("a+a+") + e("aa+") + e("a+a")).real / 2.0
    xb2 = (e("bb") + e("b+b+") + e("bb+") + e("b+b")).real / 2.0
    xaxb = (e("ab") + e("ab+") + e("a+b") + e("a+b+")).real / 2.0
    pa2 = -(e("aa") + e("a+a+") - e("aa+") - e("a+a")).real / 2.0
    pb2 = -(e("bb") + e("b+b+") - e("bb+") - e("b+b")).real / 2.0
    papb = -(e("ab") - e("ab+") - e("a+b") + e("a+b+")).real / 2.0

    xa = ((e("a") + e("a+")) / math.sqrt(2.0)).real
    xb = ((e("b") + e("b+")) / math.sqrt(2.0)).real
    pa = ((e("a") - e("a+")) / (1j * math.sqrt(2.0))).real
    pb = ((e("b") - e("b+")) / (1j * math.sqrt(2.0))).real

    mean_u = abs(m) * xa + xb / m
    mean_v = abs(m) * pa - pb / m
    u2 = m * m * xa2 + xb2 / (m * m) + 2.0 * sign * xaxb
    v2 = m * m * pa2 + pb2 / (m * m) - 2.0 * sign * papb
    return u2 - mean_u**2, v2 - mean_v**2
