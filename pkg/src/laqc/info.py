"""
Entropies and mutual information, all in bits.

``0 * log2(0)`` is taken as 0 through an explicit mask, never by clipping
probabilities away from zero; pure Bell states (|c_i| = 1) depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from laqc.linalg import eigh_jacobi
from laqc.states import DEFAULT_TOL, check_density

SUPPORT_TOL = 1e-14


class InfiniteDivergenceError(ValueError):
    """Support of the first state is not contained in that of the second."""


def _xlog2x(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    positive = p > 0
    return np.where(positive, p * np.log2(np.where(positive, p, 1.0)), 0.0)


def shannon_entropy(probs) -> float:
    return float(-np.sum(_xlog2x(np.asarray(probs, dtype=float))))


@dataclass(frozen=True)
class JointDistribution2x2:
    """Joint distribution of two bits with its marginals.

    ``p[i, j]`` is the probability of outcome i on A and j on B.
    """

    p: np.ndarray
    marginal_a: np.ndarray = field(default=None)
    marginal_b: np.ndarray = field(default=None)
    tol: float = field(default=DEFAULT_TOL, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = np.array(self.p, dtype=float)
        if p.shape != (2, 2):
            raise ValueError(f"expected a 2x2 table, got shape {p.shape}")
        if np.any(p < -self.tol) or np.any(p > 1 + self.tol):
            raise ValueError(f"probabilities must lie in [0, 1]: {p.tolist()}")
        if abs(p.sum() - 1.0) > self.tol:
            raise ValueError(f"probabilities sum to {p.sum():.12g}, expected 1")
        a = p.sum(axis=1) if self.marginal_a is None else np.array(self.marginal_a, dtype=float)
        b = p.sum(axis=0) if self.marginal_b is None else np.array(self.marginal_b, dtype=float)
        if not np.allclose(a, p.sum(axis=1), atol=self.tol, rtol=0):
            raise ValueError("marginal_a is inconsistent with p")
        if not np.allclose(b, p.sum(axis=0), atol=self.tol, rtol=0):
            raise ValueError("marginal_b is inconsistent with p")
        for name, arr in (("p", p), ("marginal_a", a), ("marginal_b", b)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def symmetric(cls, diagonal: float) -> "JointDistribution2x2":
        """Table with p00 = p11 = diagonal and p01 = p10 = 1/2 - diagonal."""
        off = 0.5 - diagonal
        return cls(np.array([[diagonal, off], [off, diagonal]]))


def mutual_information_tables(p: np.ndarray) -> np.ndarray:
    """Mutual information of a stack of 2x2 tables with shape (..., 2, 2).

    Marginals are taken from the tables themselves. No validation; this is
    the inner loop of the optimizers.
    """
    p = np.asarray(p, dtype=float)
    cells = [[p[..., 0, 0], p[..., 0, 1]], [p[..., 1, 0], p[..., 1, 1]]]
    log_a = [_safe_log2(cells[i][0] + cells[i][1]) for i in range(2)]
    log_b = [_safe_log2(cells[0][j] + cells[1][j]) for j in range(2)]
    total = 0.0
    for i in range(2):
        for j in range(2):
            q = cells[i][j]
            positive = q > 0
            total = total + np.where(positive, q * (_safe_log2(q) - log_a[i] - log_b[j]), 0.0)
    return total


def _safe_log2(x: np.ndarray) -> np.ndarray:
    return np.log2(np.where(x > 0, x, 1.0))


def mutual_information(dist: JointDistribution2x2) -> float:
    """sum_ij p_ij log2(p_ij / (pA_i pB_j)) in bits; zero cells contribute 0."""
    p = dist.p
    i, j = np.nonzero(p > 0)
    log_ratio = np.log2(p[i, j]) - np.log2(dist.marginal_a[i]) - np.log2(dist.marginal_b[j])
    value = float(np.sum(p[i, j] * log_ratio))
    return max(value, 0.0) if value > -1e-12 else value


def binary_correlation_entropy(c) -> float | np.ndarray:
    """h(c) = (1+c)/2 log2(1+c) + (1-c)/2 log2(1-c).

    This is the mutual information of two unbiased bits whose agreement
    probability is (1+c)/2. Accepts scalars or arrays.
    """
    c = np.asarray(c, dtype=float)
    if np.any(np.abs(c) > 1.0 + 1e-12):
        raise ValueError(f"|c| must not exceed 1, got {c}")
    c = np.clip(c, -1.0, 1.0)
    plus, minus = 1.0 + c, 1.0 - c
    value = 0.5 * (_xlog2x(plus) + _xlog2x(minus))
    return float(value) if value.ndim == 0 else value


def von_neumann_entropy(rho: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """-Tr(rho log2 rho) for a validated 4x4 density matrix."""
    rho = check_density(rho, tol)
    w = eigh_jacobi(rho)[0]
    return shannon_entropy(np.where(w > 0, w, 0.0))


def relative_entropy(rho: np.ndarray, chi: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """S(rho || chi) = -Tr(rho log2 chi) - S(rho), in bits.

    ``log2 chi`` is taken on the support of ``chi``; eigenvalues below
    ``SUPPORT_TOL`` count as zero. Raises :class:`InfiniteDivergenceError`
    if ``rho`` puts more than ``tol`` weight outside that support.
    """
    rho = check_density(rho, tol)
    chi = check_density(chi, tol)
    w, v = eigh_jacobi(chi)
    weights = np.real(np.einsum("ik,ij,jk->k", v.conj(), rho, v))
    support = w > SUPPORT_TOL
    leaked = float(weights[~support].sum())
    if leaked > tol:
        raise InfiniteDivergenceError(
            f"state has weight {leaked:.3g} outside the support of the reference state"
        )
    cross = -float(np.sum(weights[support] * np.log2(w[support])))
    return cross - von_neumann_entropy(rho, tol)
