"""Classical correlations and local available quantum correlations (LAQC)
of two-qubit Bell-diagonal states.

Closed-form quantifiers live next to a brute-force optimizer that recomputes
them from measurement statistics, so each can be used to audit the other.
"""

from laqc.states import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    BDTriple,
    UnphysicalStateError,
    bd_eigenvalues,
    bd_to_density,
    is_physical,
    werner,
)
from laqc.info import (
    InfiniteDivergenceError,
    JointDistribution2x2,
    binary_correlation_entropy,
    mutual_information,
    relative_entropy,
    von_neumann_entropy,
)
from laqc.bases import (
    CaseLabel,
    PhasePair,
    ProbeBasis,
    chi_of_rho,
    mu_basis,
    r_coefficients,
    r_coefficients_bd,
    transform_to_optimal_basis,
    u_basis_probabilities,
)
from laqc.quantifiers import (
    GridSpec,
    QuantifierResult,
    classical_correlations_bd,
    classical_correlations_numeric,
    laqc_bd,
    laqc_numeric,
    select_extremal,
)

__version__ = "0.1.0"

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "BDTriple",
    "UnphysicalStateError",
    "bd_eigenvalues",
    "bd_to_density",
    "is_physical",
    "werner",
    "InfiniteDivergenceError",
    "JointDistribution2x2",
    "binary_correlation_entropy",
    "mutual_information",
    "relative_entropy",
    "von_neumann_entropy",
    "CaseLabel",
    "PhasePair",
    "ProbeBasis",
    "chi_of_rho",
    "mu_basis",
    "r_coefficients",
    "r_coefficients_bd",
    "transform_to_optimal_basis",
    "u_basis_probabilities",
    "GridSpec",
    "QuantifierResult",
    "classical_correlations_bd",
    "classical_correlations_numeric",
    "laqc_bd",
    "laqc_numeric",
    "select_extremal",
]
