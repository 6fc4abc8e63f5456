"""Self-contained special-function kernel.

Everything downstream reduces to four ingredients: modified Bessel
functions I0 and I1 (power series), the Bessel function J0 and its
positive zeros (series below |x| = 12, Hankel asymptotics above,
bisection for the zeros), orthonormal harmonic-oscillator
eigenfunctions (stable three-term recurrence, never forming Hermite
polynomials or factorials), and log-factorials (compensated cumulative
table).  All routines are pure; the log-factorial cache is grown by
atomic replacement, so concurrent readers are safe.
"""

import math

import numpy as np

from .errors import DomainError, NumericalError

# series terms are added until |term| < _SERIES_RTOL * |partial sum|
_SERIES_RTOL = 1e-17

_OSCILLATOR_CAP = 512
_LOG_FACTORIAL_CAP = 10**6

# J0 evaluation switches from the alternating series to the Hankel
# asymptotic form here; the series loses digits past ~15 to cancellation
_J0_SERIES_LIMIT = 12.0


def bessel_i(order: int, x: float) -> float:
    """Modified Bessel function I_order(x) for order 0 or 1, x >= 0.

    Power series sum_k (x/2)^(2k+order) / (k! (k+order)!), terminated
    once a term drops below 1e-17 of the partial sum.  Relative error
    is a few ulp for x <= 50 (all terms are positive, no cancellation).
    """
    if order not in (0, 1):
        raise DomainError(f"only Bessel orders 0 and 1 are supported, got {order}")
    x = float(x)
    if x < 0.0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x == 0.0:
        return 1.0 if order == 0 else 0.0
    q = 0.25 * x * x
    term = 1.0 if order == 0 else 0.5 * x
    total = term
    for k in range(1, 1000):
        term *= q / (k * (k + order))
        total += term
        if term < _SERIES_RTOL * total:
            return total
    raise NumericalError(f"bessel_i series did not converge at x={x}")


def bessel_j0(x: float) -> float:
    """Bessel function J0(x); absolute error <= 1e-10 for |x| <= 100.

    Alternating power series for |x| <= 12.  Beyond that, the Hankel
    asymptotic expansion in complex form,

        J0(x) = Re[ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_k (-i)^k c_k / x^k ],

    with c_k = ((2k-1)!!)^2 / (k! 8^k), summed until the terms stop
    decreasing (they are far below 1e-15 at the crossover).
    """
    x = abs(float(x))
    if x <= _J0_SERIES_LIMIT:
        q = 0.25 * x * x
        term = 1.0
        total = 1.0
        for k in range(1, 1000):
            term *= -q / (k * k)
            total += term
            if abs(term) < _SERIES_RTOL * abs(total):
                return total
        raise NumericalError(f"bessel_j0 series did not converge at x={x}")
    s = complex(1.0)
    term = complex(1.0)
    prev = math.inf
    for k in range(1, 60):
        term *= -1j * (2 * k - 1) ** 2 / (8.0 * k * x)
        if abs(term) >= prev:
            break
        s += term
        prev = abs(term)
        if prev < _SERIES_RTOL * abs(s):
            break
    phase = complex(math.cos(x - 0.25 * math.pi), math.sin(x - 0.25 * math.pi))
    return math.sqrt(2.0 / (math.pi * x)) * (phase * s).real


def j0_zero(k: int) -> float:
    """k-th positive zero of J0, for 1 <= k <= 30.

    Brackets the root around the asymptotic guess (k - 1/4)*pi and
    bisects to an interval width of 1e-12.
    """
    if not 1 <= k <= 30:
        raise DomainError(f"j0_zero supports 1 <= k <= 30, got {k}")
    guess = (k - 0.25) * math.pi
    lo, hi = guess - 0.2, guess + 0.2
    flo, fhi = bessel_j0(lo), bessel_j0(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise NumericalError(f"j0_zero bracket failed for k={k}")
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        fmid = bessel_j0(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def oscillator_eigenfunction(n: int, x):
    """Orthonormal harmonic-oscillator eigenfunction psi_n(x).

    psi_n(x) = (2^n n! sqrt(pi))^(-1/2) H_n(x) exp(-x^2/2), evaluated
    with the normalized recurrence

        psi_{n+1} = x sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1},

    which keeps every intermediate O(1) (H_n itself overflows near
    n ~ 150).  Accepts a scalar or an ndarray for x.
    """
    if n < 0 or n > _OSCILLATOR_CAP:
        raise DomainError(f"oscillator index must be in 0..{_OSCILLATOR_CAP}, got {n}")
    x = np.asarray(x, dtype=float)
    psi_prev = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n == 0:
        return psi_prev if psi_prev.ndim else float(psi_prev)
    psi = math.sqrt(2.0) * x * psi_prev
    for m in range(1, n):
        psi, psi_prev = (
            math.sqrt(2.0 / (m + 1)) * x * psi - math.sqrt(m / (m + 1.0)) * psi_prev,
            psi,
        )
    return psi if psi.ndim else float(psi)


def oscillator_eigenfunction_table(n_max: int, x: np.ndarray) -> np.ndarray:
    """Matrix of psi_n(x) values, shape (n_max+1, len(x)).

    Same recurrence as oscillator_eigenfunction, run once for the whole
    grid; row n holds psi_n.
    """
    if n_max < 0 or n_max > _OSCILLATOR_CAP:
        raise DomainError(f"oscillator index must be in 0..{_OSCILLATOR_CAP}, got {n_max}")
    x = np.asarray(x, dtype=float)
    table = np.empty((n_max + 1, x.size))
    table[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n_max >= 1:
        table[1] = math.sqrt(2.0) * x * table[0]
    for m in range(1, n_max):
        table[m + 1] = (
            math.sqrt(2.0 / (m + 1)) * x * table[m]
            - math.sqrt(m / (m + 1.0)) * table[m - 1]
        )
    return table


# ln(0!), ln(1!), ...; grown on demand, replaced atomically
_logfact_cache = np.zeros(1)
# Kahan compensation carried over so extensions stay exact
_logfact_comp = 0.0


def _grow_logfact(n: int) -> np.ndarray:
    global _logfact_cache, _logfact_comp
    old = _logfact_cache
    if n < old.size:
        return old
    new = np.empty(n + 1)
    new[: old.size] = old
    total = old[-1]
    comp = _logfact_comp
    for m in range(old.size, n + 1):
        # compensated summation keeps the table's relative error at ~eps
        y = math.log(m) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        new[m] = total
    _logfact_cache = new
    _logfact_comp = comp
    return new


def log_factorial(n: int) -> float:
    """ln(n!) from a compensated cumulative table, n <= 10^6."""
    if n < 0 or n > _LOG_FACTORIAL_CAP:
        raise DomainError(f"log_factorial requires 0 <= n <= {_LOG_FACTORIAL_CAP}, got {n}")
    return float(_grow_logfact(n)[n])


def log_factorials(n_max: int) -> np.ndarray:
    """Array of ln(n!) for n = 0..n_max (copy of the cached table)."""
    if n_max < 0 or n_max > _LOG_FACTORIAL_CAP:
        raise DomainError(f"log_factorials requires 0 <= n <= {_LOG_FACTORIAL_CAP}, got {n_max}")
    return _grow_logfact(n_max)[: n_max + 1].copy()
