"""Dense symmetric linear algebra for the small matrices of the local forms.

Matrices are plain ``numpy`` arrays.  :func:`as_sym` is the constructor for
symmetric matrices: it checks the shape and symmetrizes by averaging.
"""

from __future__ import annotations

import numpy as np

from . import _backend


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi iteration hits its sweep cap."""


class PreconditionError(ValueError):
    pass


def as_sym(m) -> np.ndarray:
    """Return ``m`` as a float array with ``m[i, j] == m[j, i]`` exactly."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise PreconditionError(f"expected a non-empty square matrix, got shape {a.shape}")
    return (a + a.T) / 2.0


def eigen_sym(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns)."""
    a = as_sym(m)
    w, v, sweeps = _backend.jacobi_eigh(a)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge for a matrix of order {a.shape[0]}")
    return w, v


def min_eigenvalue(m) -> float:
    return float(eigen_sym(m)[0][0])


def schur_reduce(a, b, d) -> np.ndarray:
    """``A - B diag(D)^{-1} B^T`` for a strictly positive diagonal ``D``."""
    a = as_sym(a)
    b = np.asarray(b, dtype=float).reshape(a.shape[0], -1)
    d = np.asarray(d, dtype=float).ravel()
    if b.shape[1] != d.shape[0]:
        raise PreconditionError(f"B has {b.shape[1]} columns but D has {d.shape[0]} entries")
    for i, di in enumerate(d):
        if not di > 0.0:
            raise PreconditionError(f"diagonal entry {i} is not strictly positive: {di!r}")
    return as_sym(a - (b / d) @ b.T)


def congruence_diag(m, d) -> np.ndarray:
    """``diag(d)^{-1/2} M diag(d)^{-1/2}``."""
    m = as_sym(m)
    d = np.asarray(d, dtype=float).ravel()
    if d.shape[0] != m.shape[0]:
        raise PreconditionError("diagonal length does not match matrix order")
    for i, di in enumerate(d):
        if not di > 0.0:
            raise PreconditionError(f"diagonal entry {i} is not strictly positive: {di!r}")
    s = 1.0 / np.sqrt(d)
    return as_sym(m * np.outer(s, s))


def is_psd(m, tol: float = 0.0) -> bool:
    return min_eigenvalue(m) >= -tol
