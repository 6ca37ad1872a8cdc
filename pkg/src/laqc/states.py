"""
Bell-diagonal two-qubit states.

A Bell-diagonal (BD) state is fixed by three correlation coefficients::

    rho = (1/4) (I4 + c1 X⊗X + c2 Y⊗Y + c3 Z⊗Z)

Its local Bloch vectors vanish, so both one-qubit marginals are I2/2. The
state is physical iff the four eigenvalues (the tetrahedron inequalities)
are non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)

PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

DEFAULT_TOL = 1e-9

# Eigenvalues of rho as (sign of c1, sign of c2, sign of c3). The order is
# part of the public contract of bd_eigenvalues.
_EIGEN_SIGNS = np.array(
    [
        [-1, -1, -1],
        [-1, +1, +1],
        [+1, -1, +1],
        [+1, +1, -1],
    ],
    dtype=float,
)
EIGENVALUE_LABELS = (
    "(1-c1-c2-c3)/4",
    "(1-c1+c2+c3)/4",
    "(1+c1-c2+c3)/4",
    "(1+c1+c2-c3)/4",
)


class UnphysicalStateError(ValueError):
    """Raised when a BD triple violates a tetrahedron inequality."""

    def __init__(self, state: "BDTriple", violations: list[tuple[str, float]]):
        self.state = state
        self.violations = violations
        detail = "; ".join(f"{label} = {value:.12g} < 0" for label, value in violations)
        super().__init__(f"unphysical Bell-diagonal state {state.as_tuple()}: {detail}")


@dataclass(frozen=True)
class BDTriple:
    """Correlation coefficients (c1, c2, c3) of a Bell-diagonal state.

    Construction only checks that each coefficient is a finite number in
    [-1, 1]. Use :meth:`physical` to also require a valid density matrix.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "c3"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if abs(value) > 1.0 + 1e-12:
                raise ValueError(f"{name} must lie in [-1, 1], got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def physical(cls, c1: float, c2: float, c3: float, tol: float = DEFAULT_TOL) -> "BDTriple":
        """Build a triple and raise :class:`UnphysicalStateError` if it is not a state."""
        state = cls(c1, c2, c3)
        require_physical(state, tol)
        return state

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    def abs_values(self) -> tuple[float, float, float]:
        return (abs(self.c1), abs(self.c2), abs(self.c3))


def bd_to_density(state: BDTriple) -> np.ndarray:
    """4x4 density matrix (1/4)(I4 + sum_i c_i sigma_i ⊗ sigma_i).

    Physicality is not checked, so unphysical triples give a Hermitian,
    unit-trace matrix with a negative eigenvalue.
    """
    rho = IDENTITY_4.copy()
    for c, sigma in zip(state.as_tuple(), PAULIS):
        rho = rho + c * np.kron(sigma, sigma)
    return rho / 4.0


def bd_eigenvalues(state: BDTriple) -> np.ndarray:
    """Closed-form eigenvalues, ordered as in ``EIGENVALUE_LABELS``."""
    return (1.0 + _EIGEN_SIGNS @ state.as_array()) / 4.0


def tetrahedron_violations(state: BDTriple, tol: float = DEFAULT_TOL) -> list[tuple[str, float]]:
    """Return ``(label, value)`` for every eigenvalue below ``-tol``."""
    return [
        (label, float(value))
        for label, value in zip(EIGENVALUE_LABELS, bd_eigenvalues(state))
        if value < -tol
    ]


def is_physical(state: BDTriple, tol: float = DEFAULT_TOL) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return float(bd_eigenvalues(state).min()) >= -tol


def require_physical(state: BDTriple, tol: float = DEFAULT_TOL) -> BDTriple:
    violations = tetrahedron_violations(state, tol)
    if violations:
        raise UnphysicalStateError(state, violations)
    return state


def werner(z: float) -> BDTriple:
    """Werner state with singlet weight ``z``: c = (-z, -z, -z)."""
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {z!r}")
    return BDTriple(-z, -z, -z)


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced 2x2 state of a two-qubit matrix; ``keep`` is 0 (A) or 1 (B)."""
    t = np.asarray(rho).reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ajbj->ab", t)
    if keep == 1:
        return np.einsum("iaib->ab", t)
    raise ValueError("keep must be 0 or 1")


class InvalidDensityMatrix(ValueError):
    pass


def check_density(rho: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate a 4x4 density matrix (Hermitian, unit trace, PSD) and return it.

    PSD is checked with the package's own Jacobi eigensolver.
    """
    from laqc.linalg import eigh_jacobi

    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not np.allclose(rho, rho.conj().T, atol=tol, rtol=0):
        raise InvalidDensityMatrix("matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise InvalidDensityMatrix(f"trace is {np.trace(rho).real:.12g}, expected 1")
    lowest = eigh_jacobi(rho)[0][0]
    if lowest < -tol:
        raise InvalidDensityMatrix(f"matrix has negative eigenvalue {lowest:.12g}")
    return rho


def random_physical_states(count: int, seed: int) -> list[BDTriple]:
    """``count`` states drawn uniformly from the tetrahedron by rejection."""
    rng = np.random.default_rng(seed)
    states: list[BDTriple] = []
    while len(states) < count:
        state = BDTriple(*rng.uniform(-1.0, 1.0, size=3))
        if is_physical(state, tol=0.0):
            states.append(state)
    return states
