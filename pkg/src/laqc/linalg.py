"""Cyclic Jacobi eigensolver for small complex Hermitian matrices."""

from __future__ import annotations

import numpy as np

OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    pass


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def eigh_jacobi(
    matrix: np.ndarray,
    tol: float = OFF_DIAGONAL_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, v)`` with ascending real eigenvalues ``w`` and unitary ``v``
    whose columns are the eigenvectors, like ``numpy.linalg.eigh``. Sweeps
    stop once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||matrix||_F)``.
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps):
        if _off_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g < 1e-300:
                    continue
                phase = apq / g
                # Strip the phase of a[p, q], then zero it with a real rotation.
                theta = (a[q, q].real - a[p, p].real) / (2.0 * g)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[q, q] = c * np.conj(phase)
                rot[p, q] = s
                rot[q, p] = -s * np.conj(phase)
                a = rot.conj().T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    else:
        if _off_norm(a) >= threshold:
            raise JacobiConvergenceError(f"no convergence after {max_sweeps} sweeps")

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigvalsh_jacobi(matrix: np.ndarray) -> np.ndarray:
    return eigh_jacobi(matrix)[0]
