# -*- coding: utf-8 -*-
###############################################################################
#    Albatch - Batch-mode active learning for regression.                     #
#                                                                             #
#    Copyright (C) 2026 by the Albatch authors                                #
#                                                                             #
#    License: GPL Version 3                                                   #
#                                                                             #
#    This program is free software: you can redistribute it and/or modify     #
#    it under the terms of the GNU General Public License as published by     #
#    the Free Software Foundation, either version 3 of the License, or        #
#    (at your option) any later version.                                      #
#                                                                             #
#    This program is distributed in the hope that it will be useful,          #
#    but WITHOUT ANY WARRANTY; without even the implied warranty of           #
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            #
#    GNU General Public License for more details.                             #
#                                                                             #
#    You should have received a copy of the GNU General Public License        #
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.    #
###############################################################################
"""
Dense linear algebra: solution of symmetric positive definite systems
(for ridge regression), and the symmetric eigenvalue problem (for PCA).

Matrices are 2D ``numpy.ndarray`` objects of ``float64``.
"""

import logging

import numpy as np
import scipy.linalg

from libalbatch import settings
from libalbatch.coredata import AlbatchError



class LinalgError(AlbatchError):
    pass


def as_matrix(A, name="A"):
    """
    Convert ``A`` to a 2D ``float64`` array, and check that all values are
    finite.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2:
        raise LinalgError("`{n}` must be a matrix, it has {d} dimensions."
                          .format(n=name, d=A.ndim))
    if not np.all(np.isfinite(A)):
        raise LinalgError("`{n}` contains non-finite values.".format(n=name))
    return A


def _assert_symmetric(A, tol):
    """Raise ``LinalgError`` if ``A`` is not square and symmetric."""
    if A.shape[0] != A.shape[1]:
        raise LinalgError("Matrix must be square, shape: {s}".format(s=A.shape))
    scale = max(1.0, np.max(np.abs(A)) if A.size else 0.0)
    asym = np.max(np.abs(A - A.T)) if A.size else 0.0
    if asym > tol * scale:
        raise LinalgError("Matrix is not symmetric. max|A - A^T| = {a:g}"
                          .format(a=asym))


def spd_solve(A, b):
    """
    Solve ``A x = b`` for a symmetric positive definite matrix ``A``.

    Uses the Cholesky decomposition ``A = L L^T`` and two triangular solves.

    Parameters
    ----------
    A : array (n, n)
        Symmetric (within 1e-10) positive definite matrix.
    b : array (n,) or (n, r)
        Right hand side(s).

    Returns
    -------
    x : array, same shape as ``b``

    Raises
    ------
    LinalgError
        ``A`` is not symmetric, or a non-positive pivot occurred
        (``A`` is not positive definite).
    """
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.float64)
    _assert_symmetric(A, settings.SYMMETRY_TOL)
    if b.shape[0] != A.shape[0]:
        raise LinalgError("Shapes don't match: A {a}, b {b}"
                          .format(a=A.shape, b=b.shape))
    if not np.all(np.isfinite(b)):
        raise LinalgError("`b` contains non-finite values.")

    try:
        L = scipy.linalg.cholesky(A, lower=True, check_finite=False)
    except np.linalg.LinAlgError as err:
        raise LinalgError("Matrix is not positive definite: {e}"
                          .format(e=err)) from err
    y = scipy.linalg.solve_triangular(L, b, lower=True, check_finite=False)
    x = scipy.linalg.solve_triangular(L, y, lower=True, trans="T",
                                      check_finite=False)
    return x


def _off_diagonal_norm(A):
    return np.sqrt(max(np.sum(A**2) - np.sum(np.diag(A)**2), 0.))


def sym_eig(A, tol=settings.JACOBI_TOL, max_sweeps=settings.JACOBI_MAX_SWEEPS):
    """
    Eigenvalues and eigenvectors of a symmetric matrix.

    Cyclic Jacobi method: sweeps over all off-diagonal elements ``(p, q)``
    and zeroes each one with a plane rotation, until the norm of the
    off-diagonal part is below ``tol * ||A||_F``.

    Parameters
    ----------
    A : array (n, n)
        Symmetric matrix.
    tol : float
        Relative tolerance for the off-diagonal norm.
    max_sweeps : int
        Maximum number of sweeps.

    Returns
    -------
    eigenvalues : array (n,)
        Sorted in descending order.
    eigenvectors : array (n, n)
        Orthonormal; column ``i`` belongs to ``eigenvalues[i]``.

    Raises
    ------
    LinalgError
        ``A`` is not symmetric, or no convergence after ``max_sweeps``.
    """
    A = as_matrix(A)
    _assert_symmetric(A, settings.SYMMETRY_TOL)
    n = A.shape[0]
    a = (A + A.T) / 2
    V = np.eye(n)
    scale = np.sqrt(np.sum(a**2))

    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off <= tol * scale:
            logging.debug("Jacobi: converged after {s} sweeps, off-norm {o:g}."
                          .format(s=sweep, o=off))
            break
        if sweep == max_sweeps:
            raise LinalgError("Jacobi eigensolver did not converge after {s} "
                              "sweeps. Off-diagonal norm: {o:g}"
                              .format(s=max_sweeps, o=off))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2. * apq)
                if abs(theta) > 1e150:
                    t = 1. / (2. * theta)
                else:
                    sign = 1. if theta >= 0 else -1.
                    t = sign / (abs(theta) + np.sqrt(theta**2 + 1.))
                c = 1. / np.sqrt(t**2 + 1.)
                s = t * c
                # A <- J^T A J, rotation in the (p, q) plane
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = V[:, p].copy()
                vec_q = V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], V[:, order]
