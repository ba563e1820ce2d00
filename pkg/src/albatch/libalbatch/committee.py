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
Committees of bootstrap regression models and the two informativeness
scores computed from their predictions:

* QBC: variance of the committee's predictions.
* EMCM: mean absolute deviation of the predictions, times the norm of
  the feature vector. This is the expected change of a linear model.
"""

import logging

import numpy as np

from libalbatch import settings
from libalbatch.coredata import AlbatchError
from libalbatch.regression import ridge_fit, predict



class CommitteeError(AlbatchError):
    pass


class CommitteePredictions(object):
    """
    Predictions of a committee: one row per sample, one column per model.
    """
    def __init__(self, preds):
        preds = np.asarray(preds, dtype=np.float64)
        if preds.ndim != 2:
            raise CommitteeError("Committee predictions must be a matrix.")
        if not np.all(np.isfinite(preds)):
            raise CommitteeError("Committee predictions must be finite.")
        self.preds = preds

    @property
    def P(self):
        return self.preds.shape[1]

    @property
    def n_samples(self):
        return self.preds.shape[0]

    def deviations(self):
        """Deviation of each model's prediction from the committee mean."""
        return self.preds - self.preds.mean(axis=1, keepdims=True)


def _make_rng(rng_or_seed):
    if isinstance(rng_or_seed, np.random.Generator):
        return rng_or_seed
    return np.random.default_rng(rng_or_seed)


def bootstrap_committee(X, y, P=settings.COMMITTEE_SIZE, sigma=settings.SIGMA,
                        seed=None, max_attempts=settings.BOOTSTRAP_ATTEMPTS):
    """
    Fit ``P`` ridge regression models, each on a bootstrap resample of the
    labeled samples.

    A resample with fewer than 2 distinct samples is drawn again, at most
    ``max_attempts`` times; then it is accepted as it is. The ridge penalty
    keeps the fit well posed.

    Parameters
    ----------
    X : array (n, d)
        Features of the labeled samples.
    y : array (n,)
        Their labels.
    P : int
        Committee size, ``P >= 2``.
    sigma : float
        Ridge parameter of the committee members.
    seed : int or numpy.random.Generator

    Returns
    -------
    list of RidgeModel
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(y)
    if n < 2:
        raise CommitteeError("A committee needs at least 2 labeled samples, "
                             "got {n}.".format(n=n))
    if P < 2:
        raise CommitteeError("Committee size must be >= 2: {p}".format(p=P))

    rng = _make_rng(seed)
    models = []
    for _ in range(P):
        for _ in range(max_attempts):
            idx = rng.integers(0, n, size=n)
            if len(np.unique(idx)) >= 2:
                break
        else:
            logging.debug("Bootstrap: degenerate resample accepted.")
        models.append(ridge_fit(X[idx], y[idx], sigma))
    return models


def committee_predict(models, X):
    """Predictions of every committee member, as ``CommitteePredictions``."""
    assert len(models) >= 1
    X = np.asarray(X, dtype=np.float64)
    return CommitteePredictions(np.column_stack([predict(m, X) for m in models]))


def qbc_scores(cp):
    """
    Query-by-committee score of each sample: the variance of the committee's
    predictions, divided by ``P``.
    """
    assert isinstance(cp, CommitteePredictions)
    if cp.P < 2:
        raise CommitteeError("QBC needs at least 2 committee members.")
    return np.mean(cp.deviations()**2, axis=1)


def emcm_scores(cp, X):
    """
    Expected model change of each sample for a linear model::

        g(x_n) = 1/P sum_p |y_n^p - mean_p(y_n^p)| * ||x_n||
    """
    assert isinstance(cp, CommitteePredictions)
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != cp.n_samples:
        raise CommitteeError("Features have {a} rows, predictions {b}."
                             .format(a=X.shape[0] if X.ndim else 0,
                                     b=cp.n_samples))
    return np.mean(np.abs(cp.deviations()), axis=1) * np.linalg.norm(X, axis=1)
