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
Test module ``linalg``: positive definite solver and Jacobi eigensolver.
"""

import pytest #contains `skip`, `fail`, `raises`, `config` #IGNORE:W0611
import numpy as np
from numpy.testing import assert_allclose



def random_spd(rng, n):
    A = rng.normal(size=(n, n))
    return A @ A.T + n * np.eye(n)


def test_spd_solve():
    print("Start")
    from libalbatch.linalg import spd_solve

    rng = np.random.default_rng(1)
    for n in (1, 2, 5, 20):
        A = random_spd(rng, n)
        b = rng.normal(size=n)
        x = spd_solve(A, b)
        assert_allclose(A @ x, b, rtol=1e-10, atol=1e-10)
        assert_allclose(x, np.linalg.solve(A, b), rtol=1e-10, atol=1e-12)

    #Several right hand sides
    A = random_spd(rng, 4)
    B = rng.normal(size=(4, 3))
    assert_allclose(A @ spd_solve(A, B), B, atol=1e-10)


def test_spd_solve_errors():
    print("Start")
    from libalbatch.linalg import spd_solve, LinalgError

    #Not positive definite
    with pytest.raises(LinalgError):
        spd_solve([[1., 2.], [2., 1.]], [1., 1.])
    #Not symmetric
    with pytest.raises(LinalgError):
        spd_solve([[2., 1.], [0., 2.]], [1., 1.])
    #Shape mismatch
    with pytest.raises(LinalgError):
        spd_solve(np.eye(2), [1., 2., 3.])
    #Not finite
    with pytest.raises(LinalgError):
        spd_solve([[np.nan, 0.], [0., 1.]], [1., 1.])
    #Errors are also `ValueError`.
    with pytest.raises(ValueError):
        spd_solve(np.zeros((2, 2)), [1., 1.])


def test_sym_eig_small():
    print("Start")
    from libalbatch.linalg import sym_eig

    vals, vecs = sym_eig([[2., 1.], [1., 2.]])
    assert_allclose(vals, [3., 1.], atol=1e-12)
    assert_allclose(np.abs(vecs[:, 0]), [np.sqrt(.5), np.sqrt(.5)], atol=1e-12)

    #Diagonal matrix, sorted descending
    vals, vecs = sym_eig(np.diag([1., 3., 2.]))
    assert_allclose(vals, [3., 2., 1.])
    assert_allclose(np.abs(vecs), [[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def test_sym_eig_random():
    "Compare with LAPACK, and check ``A v = lambda v``."
    print("Start")
    from libalbatch.linalg import sym_eig

    rng = np.random.default_rng(2)
    for n in (3, 10, 30):
        B = rng.normal(size=(n, n))
        A = (B + B.T) / 2
        vals, vecs = sym_eig(A)
        assert np.all(np.diff(vals) <= 0)
        assert_allclose(vals, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-9)
        assert_allclose(vecs.T @ vecs, np.eye(n), atol=1e-10)
        assert_allclose(A @ vecs, vecs * vals, atol=1e-8)


def test_sym_eig_errors():
    print("Start")
    from libalbatch.linalg import sym_eig, LinalgError

    with pytest.raises(LinalgError):
        sym_eig([[1., 2.], [0., 1.]])
    with pytest.raises(LinalgError):
        sym_eig(np.ones(3))
    #No convergence
    rng = np.random.default_rng(3)
    B = rng.normal(size=(6, 6))
    with pytest.raises(LinalgError):
        sym_eig(B + B.T, max_sweeps=1)



if __name__ == "__main__":
    test_spd_solve()
    test_spd_solve_errors()
    test_sym_eig_small()
    test_sym_eig_random()
    pass #IGNORE:W0107
