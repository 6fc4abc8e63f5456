"""Phase-space and second-moment non-classicality witnesses.

The Husimi function of the pair coherent state,

    Q(alpha, beta) = e^{-(|alpha|^2+|beta|^2)} |I0(2 sqrt(zeta alpha* beta*))|^2
                     / (pi^2 I0(2|zeta|)),

vanishes exactly where the series argument w = zeta alpha* beta* is
negative real with 2 sqrt(-w) a zero of J0 — an experimentally
meaningful non-classicality signature.  I0 of the square root is
evaluated through the entire series in w itself, which removes any
branch ambiguity.

The second-moment witnesses use the EPR-like quadrature combinations
u = |m| x_a + x_b / m and v = |m| p_a - p_b / m with
x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)), [x, p] = i.
In these units a separable state obeys both the product bound
<(du)^2><(dv)^2> >= 1 at m = 1 and the sum bound
M = <(du)^2> + <(dv)^2> >= m^2 + 1/m^2; violation with
|m^2 - 1/m^2| <= M witnesses inseparability.  The thresholds 1 and 2
are tied to this quadrature convention, which is therefore frozen here.
"""

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .specfun import bessel_i, j0_zero
from .states import SchmidtState

_ZETA_MAX = 50.0
_SERIES_RTOL = 1e-17


def _i0_from_square(w):
    """I0(2 sqrt(w)) for complex w via the entire series sum_k w^k / (k!)^2.

    Only w enters, so no square root (or branch cut) is ever taken; for
    negative real w this is J0(2 sqrt(-w)).  Broadcasts over arrays.
    """
    w = np.asarray(w, dtype=complex)
    total = np.ones_like(w)
    term = np.ones_like(w)
    for k in range(1, 2000):
        term = term * w / (k * k)
        total = total + term
        scale = max(1.0, float(np.max(np.abs(total))))
        if float(np.max(np.abs(term))) < _SERIES_RTOL * scale:
            return total
    raise NumericalError("I0 series did not converge")


def q_function(zeta: complex, alpha, beta):
    """Husimi function Q(alpha, beta) of the pair coherent state (>= 0).

    Scalar in, float out; array in, array out (broadcasting).
    """
    zeta = complex(zeta)
    if abs(zeta) > _ZETA_MAX:
        raise DomainError(f"|zeta| must be <= {_ZETA_MAX}, got {abs(zeta)}")
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    norm = math.pi**2 * bessel_i(0, 2.0 * abs(zeta))
    w = zeta * np.conj(alpha) * np.conj(beta)
    value = np.exp(-(np.abs(alpha) ** 2 + np.abs(beta) ** 2)) \
        * np.abs(_i0_from_square(w)) ** 2 / norm
    return value if value.ndim else float(value)


def q_zero_loci(zeta: float, k: int) -> float:
    """Product |alpha||beta| where Q vanishes for out-of-phase alpha, beta.

    Requires real zeta > 0 (the zeros exist only there); the k-th locus
    is j0_zero(k)^2 / (4 zeta).
    """
    if isinstance(zeta, complex):
        if zeta.imag != 0.0:
            raise DomainError("q_zero_loci requires real positive zeta")
        zeta = zeta.real
    if not zeta > 0.0:
        raise DomainError(f"q_zero_loci requires zeta > 0, got {zeta}")
    return j0_zero(k) ** 2 / (4.0 * zeta)


@dataclass(frozen=True)
class QGrid:
    """Q sampled over |alpha|, |beta| magnitudes at a fixed relative phase."""

    alpha_abs: np.ndarray
    beta_abs: np.ndarray
    rel_phase: float
    values: np.ndarray

    def to_csv(self, mark_zeros: bool = False, zero_tol: float = 1e-10) -> str:
        header = "alpha_abs,beta_abs,rel_phase,Q"
        if mark_zeros:
            header += ",near_zero"
        lines = [header]
        for i, a in enumerate(self.alpha_abs):
            for j, b in enumerate(self.beta_abs):
                row = f"{a:.15g},{b:.15g},{self.rel_phase:.15g},{self.values[i, j]:.15g}"
                if mark_zeros:
                    row += f",{int(self.values[i, j] < zero_tol)}"
                lines.append(row)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "alpha_abs": [float(v) for v in self.alpha_abs],
            "beta_abs": [float(v) for v in self.beta_abs],
            "rel_phase": self.rel_phase,
            "values": [[float(v) for v in row] for row in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def q_grid(zeta: complex, amax: float, points: int, rel_phase: float) -> QGrid:
    """Q over |alpha|, |beta| in [0, amax]; rel_phase = arg(alpha) + arg(beta).

    Realized as alpha real positive and beta carrying the whole phase
    (Q depends on the phases only through their sum).
    """
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points}")
    if not amax > 0.0:
        raise DomainError(f"amax must be positive, got {amax}")
    mags = np.linspace(0.0, amax, points)
    alpha = mags[:, None].astype(complex)
    beta = mags[None, :] * cmath.exp(1j * rel_phase)
    return QGrid(mags, mags.copy(), float(rel_phase),
                 q_function(zeta, alpha, beta))


def _second_moments(state: SchmidtState):
    """(mean photon number per mode, <ab>) from the Schmidt coefficients."""
    c = state.coefficients
    n = np.arange(c.size)
    nbar = float(np.sum(n * np.abs(c) ** 2))
    pair = complex(np.sum(np.arange(1, c.size) * c[1:] * np.conj(c[:-1])))
    return nbar, pair


def joint_variance(state: SchmidtState, m: float) -> tuple[float, float]:
    """Variances <(du)^2>, <(dv)^2> of u = |m| x_a + x_b/m, v = |m| p_a - p_b/m.

    Means <u> and <v> vanish for Schmidt-diagonal states (single ladder
    operators change one mode's photon number), so the variances are the
    raw second moments assembled from <a^dag a> = <b^dag b> and <ab>:
    the x route carries +2 sign(m) Re<ab>, the p route
    -2 sign(m) <p_a p_b> with <p_a p_b> = -Re<ab>, hence the two are equal.
    """
    if m == 0.0:
        raise DomainError("m must be nonzero")
    m = float(m)
    sign = math.copysign(1.0, m)
    nbar, pair = _second_moments(state)
    per_mode = (m * m + 1.0 / (m * m)) * (0.5 + nbar)
    var_u = per_mode + 2.0 * sign * pair.real
    var_v = per_mode - 2.0 * sign * (-pair.real)
    return var_u, var_v


def mancini_product(state: SchmidtState) -> float:
    """Product <(du)^2><(dv)^2> at m = 1; below 1 witnesses inseparability."""
    var_u, var_v = joint_variance(state, 1.0)
    return var_u * var_v


def pair_coherent_total_variance(zeta_mod: float, phi: float, m: float) -> float:
    """Closed form of M for the pair coherent state at zeta = |zeta| e^{i phi}:

        M = (m^2 + 1/m^2) (1 + 2|zeta| I1(2|zeta|)/I0(2|zeta|))
            + 4 sign(m) |zeta| cos(phi).
    """
    if m == 0.0:
        raise DomainError("m must be nonzero")
    zeta_mod = float(zeta_mod)
    if zeta_mod < 0.0:
        raise DomainError(f"|zeta| must be >= 0, got {zeta_mod}")
    ratio = 0.0 if zeta_mod == 0.0 else \
        bessel_i(1, 2.0 * zeta_mod) / bessel_i(0, 2.0 * zeta_mod)
    sign = math.copysign(1.0, m)
    return (m * m + 1.0 / (m * m)) * (1.0 + 2.0 * zeta_mod * ratio) \
        + 4.0 * sign * zeta_mod * math.cos(phi)


def sign_condition(m: float, phi: float) -> bool | None:
    """Whether sign(m) * sign(cos phi) < 0 (Duan witness applicability).

    Returns None when cos(phi) vanishes: the condition is then
    indeterminate (the cross term of M drops out entirely).
    """
    if m == 0.0:
        raise DomainError("m must be nonzero")
    c = math.cos(phi)
    if abs(c) < 1e-12 or math.isnan(c):
        return None
    return math.copysign(1.0, m) * math.copysign(1.0, c) < 0.0


@dataclass(frozen=True)
class WitnessReport:
    """Evaluated second-moment witnesses with their thresholds."""

    m_param: float
    phi: float
    var_u: float
    var_v: float
    total_variance: float
    mancini_product: float
    duan_threshold: float
    duan_lower: float
    mancini_witnessed: bool
    duan_witnessed: bool
    sign_condition: bool | None

    def to_dict(self) -> dict:
        return {
            "m": self.m_param,
            "phi": self.phi,
            "var_u": self.var_u,
            "var_v": self.var_v,
            "total_variance": self.total_variance,
            "mancini_product": self.mancini_product,
            "duan_threshold": self.duan_threshold,
            "duan_lower": self.duan_lower,
            "mancini_witnessed": self.mancini_witnessed,
            "duan_witnessed": self.duan_witnessed,
            "sign_condition": self.sign_condition,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def duan_total_variance(state: SchmidtState, m: float) -> WitnessReport:
    """Total variance M = <(du)^2> + <(dv)^2> with both comparison bounds.

    The sum-bound verdict is |m^2 - 1/m^2| <= M < m^2 + 1/m^2; the
    product bound (evaluated at m = 1 regardless of the m passed in) is
    reported alongside.  The lower-bound side is reported, never used as
    a standalone verdict.
    """
    if m == 0.0:
        raise DomainError("m must be nonzero")
    m = float(m)
    var_u, var_v = joint_variance(state, m)
    total = var_u + var_v
    upper = m * m + 1.0 / (m * m)
    lower = abs(m * m - 1.0 / (m * m))
    mancini = mancini_product(state)
    phi = cmath.phase(state.zeta) if state.zeta is not None else math.nan
    return WitnessReport(
        m_param=m,
        phi=phi,
        var_u=var_u,
        var_v=var_v,
        total_variance=total,
        mancini_product=mancini,
        duan_threshold=upper,
        duan_lower=lower,
        mancini_witnessed=mancini < 1.0,
        duan_witnessed=lower <= total < upper,
        sign_condition=None if math.isnan(phi) else sign_condition(m, phi),
    )
