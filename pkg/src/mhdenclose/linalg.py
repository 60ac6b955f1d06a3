"""Dense complex-Hermitian linear algebra.

Factorizations and full-spectrum eigensolvers for standard and
generalized Hermitian-definite problems, backed by LAPACK through
NumPy/SciPy.  Matrices assembled from quadrature carry round-off that
breaks exact symmetry, so the :class:`HermitianMatrix` carrier
symmetrizes on construction.  Real symmetric input is kept real to hit
the faster ``dsy*`` LAPACK paths; complex Hermitian input is supported
throughout (the slab off-diagonal block carries factors ``+-i``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NoConvergence, NotPositiveDefinite

__all__ = [
    "HermitianMatrix",
    "EigenDecomposition",
    "cholesky",
    "eig_hermitian",
    "eig_generalized",
    "eigvals_hermitian",
    "eigvals_generalized",
]

#: Largest tolerated relative deviation from Hermitian symmetry.
HERMITICITY_RTOL = 1e-12


class HermitianMatrix:
    """Dense Hermitian matrix, symmetrized on construction.

    Parameters
    ----------
    entries : array_like
        Square matrix.  Must equal its conjugate transpose within
        ``rtol`` relative to the largest entry; the stored array is
        ``(A + A*)/2``.  A real symmetric array stays real.
    """

    __slots__ = ("entries",)

    def __init__(self, entries, rtol=HERMITICITY_RTOL):
        a = np.asarray(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.issubdtype(a.dtype, np.number):
            raise ValueError(f"non-numeric dtype {a.dtype}")
        a = a.astype(np.complex128 if np.iscomplexobj(a) else np.float64, copy=False)
        scale = np.max(np.abs(a))
        if scale > 0:
            dev = np.max(np.abs(a - a.conj().T))
            if dev > rtol * scale:
                raise ValueError(
                    f"matrix deviates from Hermitian symmetry by {dev:.3e} "
                    f"(allowed {rtol:.1e} * {scale:.3e})"
                )
        self.entries = (a + a.conj().T) / 2

    @property
    def n(self):
        return self.entries.shape[0]

    def __repr__(self):
        kind = "complex" if np.iscomplexobj(self.entries) else "real"
        return f"HermitianMatrix(n={self.n}, {kind})"


@dataclass
class EigenDecomposition:
    """Full spectrum of a (generalized) Hermitian problem.

    ``values`` ascend; ``vectors[:, k]`` belongs to ``values[k]`` and the
    columns are orthonormal in the metric of the solve (identity for the
    standard problem, the right-hand matrix for a pencil).
    """

    values: np.ndarray
    vectors: np.ndarray


def _as_array(a):
    if isinstance(a, HermitianMatrix):
        return a.entries
    return HermitianMatrix(a).entries


def cholesky(b):
    """Lower-triangular factor ``L`` with ``L L* = b``.

    Raises
    ------
    NotPositiveDefinite
        With the 1-based index of the failing pivot.  Signals an invalid
        metric, e.g. a degenerate basis or rank loss in a residual matrix.
    """
    arr = _as_array(b)
    (potrf,) = scipy.linalg.get_lapack_funcs(("potrf",), (arr,))
    c, info = potrf(arr, lower=True, clean=True, overwrite_a=False)
    if info > 0:
        raise NotPositiveDefinite(info)
    if info < 0:
        raise ValueError(f"illegal argument {-info} to LAPACK potrf")
    return c


def eig_hermitian(a):
    """Full ascending spectrum and orthonormal eigenvectors of ``a``."""
    arr = _as_array(a)
    try:
        values, vectors = scipy.linalg.eigh(arr)
    except scipy.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenDecomposition(values, vectors)


def eigvals_hermitian(a):
    """Ascending eigenvalues of ``a`` (no vectors; faster)."""
    arr = _as_array(a)
    try:
        return scipy.linalg.eigh(arr, eigvals_only=True)
    except scipy.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def _solve_pencil(a, b, eigvals_only):
    """Common driver for ``a x = lambda b x`` via Cholesky reduction (LAPACK *gv)."""
    arr_a = _as_array(a)
    arr_b = _as_array(b)
    if arr_a.shape != arr_b.shape:
        raise ValueError(f"shape mismatch {arr_a.shape} vs {arr_b.shape}")
    if np.iscomplexobj(arr_a) != np.iscomplexobj(arr_b):
        arr_a = arr_a.astype(np.complex128)
        arr_b = arr_b.astype(np.complex128)
    try:
        return scipy.linalg.eigh(arr_a, arr_b, eigvals_only=eigvals_only)
    except scipy.linalg.LinAlgError as exc:
        # Distinguish an indefinite metric from eigensolver breakdown.
        cholesky(arr_b)
        raise NoConvergence(str(exc)) from exc


def eig_generalized(a, b):
    """Eigenpairs of the Hermitian-definite pencil ``a x = lambda b x``.

    Reduced to a standard Hermitian problem through the Cholesky factor
    of ``b``; returned vectors are ``b``-orthonormal.

    Raises
    ------
    NotPositiveDefinite
        If ``b`` has a non-positive pivot.
    """
    values, vectors = _solve_pencil(a, b, eigvals_only=False)
    return EigenDecomposition(values, vectors)


def eigvals_generalized(a, b):
    """Ascending eigenvalues of the pencil ``a x = lambda b x`` (no vectors)."""
    return _solve_pencil(a, b, eigvals_only=True)
