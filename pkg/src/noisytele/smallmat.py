"""Dense complex linear algebra for small matrices (dimension 2 to 16).

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Everything in
this module is a pure function; inputs are never modified in place.

The eigensolver is a cyclic Jacobi method for Hermitian matrices. At these
sizes it is simple, accurate to a few ulps and needs no LAPACK.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

MAX_DIM = 16
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi iteration does not converge."""


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square complex matrix, validating its shape."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not 1 <= arr.shape[0] <= MAX_DIM:
        raise ValueError(f"matrix dimension {arr.shape[0]} outside 1..{MAX_DIM}")
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def is_hermitian(m, tol: float = 1e-10) -> bool:
    m = np.asarray(m, dtype=complex)
    return bool(np.max(np.abs(m - dagger(m)), initial=0.0) <= tol)


def is_unit_trace(m, tol: float = 1e-10) -> bool:
    return bool(abs(np.trace(np.asarray(m)) - 1.0) <= tol)


def is_psd(m, tol: float = 1e-10) -> bool:
    """True if ``m`` is Hermitian with no eigenvalue below ``-tol``."""
    if not is_hermitian(m, tol):
        return False
    vals, _ = hermitian_eig(m)
    return bool(vals[0] >= -tol)


def is_density_matrix(m, tol: float = 1e-10) -> bool:
    return is_unit_trace(m, tol) and is_psd(m, tol)


def kron(a, b) -> np.ndarray:
    """Tensor product ``a ⊗ b``; the result may not exceed 16x16."""
    a = as_matrix(a)
    b = as_matrix(b)
    dim = a.shape[0] * b.shape[0]
    if dim > MAX_DIM:
        raise ValueError(f"tensor product dimension {dim} exceeds {MAX_DIM}")
    return np.kron(a, b)


def partial_trace(rho, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    Args:
        rho: operator on the tensor product space with subsystem sizes ``dims``.
        dims: subsystem dimensions, ordered as in the tensor product.
        keep: indices of the subsystems to retain. Order is ignored: the result
            keeps the subsystems in their original order. An empty ``keep``
            returns the full trace as a 1x1 matrix.

    Returns:
        The reduced operator.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims) or int(np.prod(dims)) != rho.shape[0]:
        raise ValueError(f"subsystem dims {dims} inconsistent with matrix size {rho.shape[0]}")
    keep_set = set(int(k) for k in keep)
    if not keep_set <= set(range(len(dims))):
        raise ValueError(f"keep indices {sorted(keep_set)} out of range for {len(dims)} subsystems")

    n = len(dims)
    t = rho.reshape(dims + dims)
    for i in sorted(set(range(n)) - keep_set, reverse=True):
        t = np.trace(t, axis1=i, axis2=i + n)
        n -= 1
    kept = int(np.prod([dims[i] for i in sorted(keep_set)]))
    return t.reshape(kept, kept)


def _jacobi_rotation(a_pp: float, a_qq: float, a_pq: complex) -> np.ndarray:
    # Unitary G acting on the (p, q) plane such that (G^H A G)_pq = 0.
    r = abs(a_pq)
    phase = a_pq / r
    tau = (a_qq - a_pp) / (2.0 * r)
    if tau == 0.0:
        t = 1.0
    else:
        t = np.copysign(1.0, tau) / (abs(tau) + np.sqrt(tau * tau + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    return np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=complex)


def hermitian_eig(h, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Args:
        h: Hermitian matrix (checked to 1e-10).
        tol: convergence threshold on off-diagonal magnitudes, relative to
            ``max(1, ||h||_F)``.
        max_sweeps: give up after this many full sweeps.

    Returns:
        ``(values, vectors)`` with real eigenvalues in ascending order and the
        matching orthonormal eigenvectors as columns.

    Raises:
        ValueError: ``h`` is not Hermitian.
        ConvergenceError: no convergence within ``max_sweeps``.
    """
    a = as_matrix(h).copy()
    if not is_hermitian(a, 1e-10):
        raise ValueError("hermitian_eig requires a Hermitian matrix")
    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < threshold:
                    continue
                rotated = True
                g = _jacobi_rotation(a[p, p].real, a[q, q].real, a[p, q])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = dagger(g) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ g
        if not rotated:
            vals = np.real(np.diag(a)).copy()
            order = np.argsort(vals, kind="stable")
            return vals[order], v[:, order]
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def psd_sqrt(rho, tol: float = 1e-10) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as zero; anything more negative
    raises ``ValueError``.
    """
    vals, vecs = hermitian_eig(rho)
    if vals[0] < -tol:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {vals[0]:.3e})")
    roots = np.sqrt(np.clip(vals, 0.0, None))
    return (vecs * roots) @ dagger(vecs)
