"""
Local measurement bases and projections of two-qubit states onto them.

Probe basis, one per qubit::

    |mu_0> =  cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>
    |mu_1> = -sin(theta/2)|0> + cos(theta/2) e^{i phi}|1>

Complementary (phase) basis relative to a computational basis {|0>, |1>}::

    |u_0> = (|0> + e^{i Phi}|1>) / sqrt(2)
    |u_1> = (|0> - e^{i Phi}|1>) / sqrt(2)

Array helpers suffixed ``_vectors`` return stacks shaped ``(..., 2, 2)``
indexed ``[..., outcome, component]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from laqc.info import JointDistribution2x2
from laqc.states import BDTriple

TWO_PI = 2.0 * np.pi
_ANGLE_TOL = 1e-12


class CaseLabel(enum.Enum):
    """Optimal computational bases for BD states, by the axis they measure.

    ``I`` measures along z (theta=0), ``II`` along x (theta=pi/2, phi=0),
    ``III`` along y (theta=pi/2, phi=pi/2).
    """

    I = "I"
    II = "II"
    III = "III"

    @property
    def angles(self) -> tuple[float, float]:
        return _CASE_ANGLES[self]

    @property
    def axis(self) -> int:
        """1-based index of the correlation coefficient this basis reads out."""
        return _CASE_AXIS[self]

    @classmethod
    def for_axis(cls, axis: int) -> "CaseLabel":
        return {1: cls.II, 2: cls.III, 3: cls.I}[axis]


_CASE_ANGLES = {
    CaseLabel.I: (0.0, 0.0),
    CaseLabel.II: (np.pi / 2, 0.0),
    CaseLabel.III: (np.pi / 2, np.pi / 2),
}
_CASE_AXIS = {CaseLabel.I: 3, CaseLabel.II: 1, CaseLabel.III: 2}


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not -_ANGLE_TOL <= theta <= np.pi + _ANGLE_TOL:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    return min(max(theta, 0.0), np.pi)


def _wrap(phi: float) -> float:
    return float(np.mod(phi, TWO_PI))


@dataclass(frozen=True)
class ProbeBasis:
    """Probe-basis angles for qubit A and qubit B.

    Phases are wrapped into [0, 2 pi); polar angles must be in [0, pi].
    """

    theta_a: float
    phi_a: float
    theta_b: float
    phi_b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta_a", _check_theta(self.theta_a))
        object.__setattr__(self, "theta_b", _check_theta(self.theta_b))
        object.__setattr__(self, "phi_a", _wrap(self.phi_a))
        object.__setattr__(self, "phi_b", _wrap(self.phi_b))

    @classmethod
    def symmetric(cls, theta: float, phi: float) -> "ProbeBasis":
        return cls(theta, phi, theta, phi)

    @classmethod
    def for_case(cls, case: CaseLabel) -> "ProbeBasis":
        return cls.symmetric(*case.angles)


@dataclass(frozen=True)
class PhasePair:
    phi1: float
    phi2: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi1", _wrap(self.phi1))
        object.__setattr__(self, "phi2", _wrap(self.phi2))


def mu_vectors(theta, phi) -> np.ndarray:
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    e = np.exp(1j * phi)
    out = np.empty(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c
    out[..., 0, 1] = s * e
    out[..., 1, 0] = -s
    out[..., 1, 1] = c * e
    return out


def mu_basis(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """The two probe-basis kets ``(mu_0, mu_1)`` as length-2 complex arrays."""
    vecs = mu_vectors(_check_theta(theta), phi)
    return vecs[0].copy(), vecs[1].copy()


def u_vectors(phase) -> np.ndarray:
    phase = np.asarray(phase, dtype=float)
    e = np.exp(1j * phase)
    out = np.empty(phase.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = 1.0
    out[..., 0, 1] = e
    out[..., 1, 0] = 1.0
    out[..., 1, 1] = -e
    return out / np.sqrt(2.0)


_PAULI_BASIS = np.array(
    [np.eye(2), [[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=complex
)


def bloch_vectors(kets: np.ndarray) -> np.ndarray:
    """(1, <X>, <Y>, <Z>) for each ket of a stack shaped ``(..., 2)``."""
    s = np.einsum("...p,kpq,...q->...k", kets.conj(), _PAULI_BASIS, kets).real
    return s / s[..., :1]


def correlation_tensor(rho: np.ndarray) -> np.ndarray:
    """T_kl = Tr(rho sigma_k ⊗ sigma_l) with sigma_0 = I."""
    t = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("pqrs,krp,lsq->kl", t, _PAULI_BASIS, _PAULI_BASIS).real


def project_product_states(rho: np.ndarray, vecs_a: np.ndarray, vecs_b: np.ndarray) -> np.ndarray:
    """Outcome probabilities <a_i b_j| rho |a_i b_j> over every pair of bases.

    ``vecs_a`` has shape ``(*A, 2, 2)`` and ``vecs_b`` shape ``(*B, 2, 2)``;
    the result has shape ``(*A, *B, 2, 2)`` indexed ``[..., i, j]``. Uses
    |a><a| = (I + s.sigma)/2, so each probability is (1/4) s_a^T T s_b.
    """
    shape_a, shape_b = vecs_a.shape[:-2], vecs_b.shape[:-2]
    sa = bloch_vectors(vecs_a.reshape(-1, 2, 2))  # (Na, 2, 4)
    sb = bloch_vectors(vecs_b.reshape(-1, 2, 2))
    probs = 0.25 * np.einsum("aik,kl,bjl->abij", sa, correlation_tensor(rho), sb, optimize=True)
    return probs.reshape(shape_a + shape_b + (2, 2))


def _basis_vectors(basis: ProbeBasis) -> tuple[np.ndarray, np.ndarray]:
    return mu_vectors(basis.theta_a, basis.phi_a), mu_vectors(basis.theta_b, basis.phi_b)


def r_coefficients(rho: np.ndarray, basis: ProbeBasis) -> JointDistribution2x2:
    """R_ij = <mu_i^A mu_j^B| rho |mu_i^A mu_j^B> for any two-qubit ``rho``."""
    va, vb = _basis_vectors(basis)
    return JointDistribution2x2(project_product_states(rho, va, vb))


def r_table_bd(state: BDTriple, theta, phi) -> np.ndarray:
    """Closed-form R table of a BD state in the symmetric probe basis.

    Vectorized over ``theta`` and ``phi``; returns shape ``(..., 2, 2)``.
    """
    c1, c2, c3 = state.as_tuple()
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    weight = 0.5 * np.cos(theta / 2) ** 2 * np.sin(theta / 2) ** 2
    bracket = (c1 + c2) + np.cos(2 * phi) * (c1 - c2) - 2 * c3
    same = 0.25 * (1 + c3) + weight * bracket
    diff = 0.25 * (1 - c3) - weight * bracket
    out = np.empty(theta.shape + (2, 2))
    out[..., 0, 0] = out[..., 1, 1] = same
    out[..., 0, 1] = out[..., 1, 0] = diff
    return out


def r_coefficients_bd(state: BDTriple, theta: float, phi: float) -> JointDistribution2x2:
    """R table of a BD state when both qubits use the probe basis (theta, phi)."""
    table = r_table_bd(state, _check_theta(theta), phi)
    return JointDistribution2x2(table, marginal_a=[0.5, 0.5], marginal_b=[0.5, 0.5])


def chi_of_rho(rho: np.ndarray, basis: ProbeBasis) -> np.ndarray:
    """Dephase ``rho`` in the product probe basis: sum_ij R_ij |mu_i mu_j><mu_i mu_j|."""
    va, vb = _basis_vectors(basis)
    probs = project_product_states(rho, va, vb)
    chi = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            ket = np.kron(va[i], vb[j])
            chi += probs[i, j] * np.outer(ket, ket.conj())
    return chi


def basis_change_unitary(theta: float, phi: float) -> np.ndarray:
    """U ⊗ U where the columns of U are the probe kets mu_0, mu_1."""
    u = mu_vectors(_check_theta(theta), phi).T
    return np.kron(u, u)


def rewrite_in_basis(rho: np.ndarray, theta: float, phi: float) -> np.ndarray:
    """Matrix elements of ``rho`` in the symmetric product probe basis."""
    w = basis_change_unitary(theta, phi)
    return w.conj().T @ np.asarray(rho, dtype=complex) @ w


def _case_coefficients(state: BDTriple, case: CaseLabel) -> tuple[float, float, float]:
    """(diagonal, first, second) coefficients of the rewritten matrix."""
    c1, c2, c3 = state.as_tuple()
    return {
        CaseLabel.I: (c3, c1, c2),
        CaseLabel.II: (c1, c3, c2),
        CaseLabel.III: (c2, c3, c1),
    }[case]


def transform_to_optimal_basis(state: BDTriple, case: CaseLabel) -> np.ndarray:
    """BD density matrix written in the computational basis of ``case``.

    Closed form: diagonal (1+d, 1-d, 1-d, 1+d)/4, outer anti-diagonal
    (a-b)/4 and inner anti-diagonal (a+b)/4, with (d, a, b) equal to
    (c3, c1, c2), (c1, c3, c2) or (c2, c3, c1) for cases I, II, III.
    """
    d, a, b = _case_coefficients(state, CaseLabel(case))
    m = np.array(
        [
            [1 + d, 0, 0, a - b],
            [0, 1 - d, a + b, 0],
            [0, a + b, 1 - d, 0],
            [a - b, 0, 0, 1 + d],
        ],
        dtype=complex,
    )
    return m / 4.0


def u_table_grid(rho_tilde: np.ndarray, phases_a, phases_b) -> np.ndarray:
    """Complementary-basis tables over the outer product of two phase arrays."""
    return project_product_states(rho_tilde, u_vectors(phases_a), u_vectors(phases_b))


def u_basis_probabilities(rho_tilde: np.ndarray, phases: PhasePair) -> JointDistribution2x2:
    """P(i, j) = <u_i^A u_j^B| rho_tilde |u_i^A u_j^B> for phases (Phi_1, Phi_2)."""
    return JointDistribution2x2(
        project_product_states(rho_tilde, u_vectors(phases.phi1), u_vectors(phases.phi2))
    )


def p_phi_closed_form(state: BDTriple, case: CaseLabel, phase) -> np.ndarray:
    """Closed-form single-phase table for the rewritten matrix of ``case``.

    P(0,0) = P(1,1) = (1/4)[1 + (a+b)/2 + (a-b)/2 cos(2 Phi)] and
    P(0,1) = P(1,0) = 1/2 - P(0,0), with (a, b) as in
    :func:`transform_to_optimal_basis`. Vectorized over ``phase``.
    """
    _, a, b = _case_coefficients(state, CaseLabel(case))
    phase = np.asarray(phase, dtype=float)
    same = 0.25 * (1 + (a + b) / 2 + (a - b) / 2 * np.cos(2 * phase))
    out = np.empty(phase.shape + (2, 2))
    out[..., 0, 0] = out[..., 1, 1] = same
    out[..., 0, 1] = out[..., 1, 0] = 0.5 - same
    return out
