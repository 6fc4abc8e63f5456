"""Entanglement and non-classicality measures for pair coherent states.

Two-mode states diagonal in the paired Fock basis |n,n> (pair coherent,
two-mode squeezed vacuum, custom coefficient vectors) together with the
quantities that certify their inseparability: the explicit spectrum of
the partially transposed density matrix, marginal/correlation/linear
entropies, the Husimi Q function and its zero loci, and the
second-moment (EPR-variance) separability witnesses.  A brute-force
dense oracle with its own eigensolver certifies every closed form.
"""

from .errors import DomainError, NumericalError
from .measures import (
    EntropyRecord,
    PTSpectrum,
    correlation_entropy,
    entropy_record,
    linear_entropy,
    negativity,
    pt_spectrum,
    von_neumann_entropy,
)
from .oracle import (
    DenseOperator,
    dense_density,
    hermitian_eigenvalues,
    ladder_expectation,
    partial_transpose,
    variances_from_ladders,
)
from .specfun import (
    bessel_i,
    bessel_j0,
    j0_zero,
    log_factorial,
    oscillator_eigenfunction,
)
from .states import (
    QuadratureGrid,
    SchmidtState,
    StateKind,
    pair_coherent,
    project_pair_from_coherent,
    quadrature_amplitude,
    quadrature_grid,
    squeezed_vacuum,
)
from .witnesses import (
    QGrid,
    WitnessReport,
    duan_total_variance,
    joint_variance,
    mancini_product,
    pair_coherent_total_variance,
    q_function,
    q_grid,
    q_zero_loci,
    sign_condition,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "NumericalError",
    "EntropyRecord",
    "PTSpectrum",
    "correlation_entropy",
    "entropy_record",
    "linear_entropy",
    "negativity",
    "pt_spectrum",
    "von_neumann_entropy",
    "DenseOperator",
    "dense_density",
    "hermitian_eigenvalues",
    "ladder_expectation",
    "partial_transpose",
    "variances_from_ladders",
    "bessel_i",
    "bessel_j0",
    "j0_zero",
    "log_factorial",
    "oscillator_eigenfunction",
    "QuadratureGrid",
    "SchmidtState",
    "StateKind",
    "pair_coherent",
    "project_pair_from_coherent",
    "quadrature_amplitude",
    "quadrature_grid",
    "squeezed_vacuum",
    "QGrid",
    "WitnessReport",
    "duan_total_variance",
    "joint_variance",
    "mancini_product",
    "pair_coherent_total_variance",
    "q_function",
    "q_grid",
    "q_zero_loci",
    "sign_condition",
    "__version__",
]
