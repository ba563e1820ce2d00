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
Ridge regression, the learner of all sample selection strategies, and the
two performance measures: RMSE and correlation coefficient.
"""

import logging

import numpy as np

from libalbatch import settings
from libalbatch.coredata import AlbatchError
from libalbatch.linalg import spd_solve



class RegressionError(AlbatchError):
    pass


class RidgeModel(object):
    """
    A fitted linear model: ``y = X . weights + bias``.

    Parameters
    ----------
    weights : array (d,)
    bias : float
    sigma : float
        The ridge parameter that was used to fit the model.
    """
    def __init__(self, weights, bias, sigma):
        weights = np.array(weights, dtype=np.float64)
        assert weights.ndim == 1, "`weights` must be a vector."
        assert sigma >= 0, "`sigma` must not be negative."
        if not (np.all(np.isfinite(weights)) and np.isfinite(bias)):
            raise RegressionError("Model has non-finite weights.")
        weights.flags.writeable = False
        self.weights = weights
        self.bias = float(bias)
        self.sigma = float(sigma)

    @property
    def n_features(self):
        return len(self.weights)

    def __repr__(self):
        return "RidgeModel(weights={w}, bias={b}, sigma={s})".format(
            w=list(self.weights), b=self.bias, s=self.sigma)


def _check_xy(X, y):
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or y.ndim != 1:
        raise RegressionError("`X` must be a matrix and `y` a vector.")
    if X.shape[0] != y.shape[0]:
        raise RegressionError("`X` has {n} rows but `y` has {m} elements."
                              .format(n=X.shape[0], m=y.shape[0]))
    if X.shape[0] < 1 or X.shape[1] < 1:
        raise RegressionError("Empty training data. Shape of X: {s}"
                              .format(s=X.shape))
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise RegressionError("Training data contains non-finite values.")
    return X, y


def ridge_fit(X, y, sigma=settings.SIGMA, fit_bias=True):
    """
    Fit a linear ridge regression model.

    Minimizes ``||[X 1] w - y||^2 + sigma ||w||^2``. The bias is the last
    component of the augmented weight vector ``w``, and it is penalized too,
    so that the normal equations

        ([X 1]^T [X 1] + sigma I) w = [X 1]^T y

    are positive definite for every ``sigma > 0``, even for rank deficient
    ``X``.

    Parameters
    ----------
    X : array (n, d)
    y : array (n,)
    sigma : float
        Ridge parameter. ``sigma = 0`` works only if ``X^T X`` is
        nonsingular.
    fit_bias : bool
        If ``False`` no constant column is added, and the bias is zero.

    Returns
    -------
    RidgeModel
    """
    X, y = _check_xy(X, y)
    if not (np.isfinite(sigma) and sigma >= 0):
        raise RegressionError("Ridge parameter must be finite and >= 0: {s}"
                              .format(s=sigma))

    if fit_bias:
        Xa = np.hstack([X, np.ones((X.shape[0], 1))])
    else:
        Xa = X
    A = Xa.T @ Xa + sigma * np.eye(Xa.shape[1])
    b = Xa.T @ y
    w = spd_solve(A, b)

    if fit_bias:
        return RidgeModel(w[:-1], w[-1], sigma)
    return RidgeModel(w, 0.0, sigma)


def predict(model, X):
    """
    Predict with a linear model: ``y_hat = X . weights + bias``.
    """
    assert isinstance(model, RidgeModel)
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise RegressionError(
            "Dimension mismatch: model has {d} features, X has shape {s}."
            .format(d=model.n_features, s=X.shape))
    return X @ model.weights + model.bias


def _check_pair(y, yhat, min_len):
    y = np.asarray(y, dtype=np.float64)
    yhat = np.asarray(yhat, dtype=np.float64)
    if y.shape != yhat.shape or y.ndim != 1:
        raise RegressionError("Length mismatch: {a} vs. {b}"
                              .format(a=y.shape, b=yhat.shape))
    if len(y) < min_len:
        raise RegressionError("Need at least {n} values, got {m}."
                              .format(n=min_len, m=len(y)))
    return y, yhat


def rmse(y, yhat):
    """Root mean squared error."""
    y, yhat = _check_pair(y, yhat, 1)
    return float(np.sqrt(np.mean((y - yhat)**2)))


def pearson_cc(y, yhat):
    """
    Sample Pearson correlation coefficient.

    Returns
    -------
    cc : float
        In ``[-1, 1]``. Zero if ``y`` or ``yhat`` is constant.
    degenerate : bool
        ``True`` if ``y`` or ``yhat`` is constant.
    """
    y, yhat = _check_pair(y, yhat, 2)
    dy = y - y.mean()
    dyh = yhat - yhat.mean()
    sy = np.sqrt(np.sum(dy**2))
    syh = np.sqrt(np.sum(dyh**2))
    if sy == 0 or syh == 0:
        logging.debug("Degenerate correlation: constant vector.")
        return 0.0, True
    cc = np.sum(dy * dyh) / (sy * syh)
    return float(np.clip(cc, -1., 1.)), False
