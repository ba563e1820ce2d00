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
Test module ``committee``: bootstrap committees, QBC and EMCM scores.
"""

import pytest #contains `skip`, `fail`, `raises`, `config` #IGNORE:W0611
import numpy as np
from numpy.testing import assert_allclose



def naive_qbc(preds):
    n, P = preds.shape
    out = np.zeros(n)
    for i in range(n):
        mean = sum(preds[i, p] for p in range(P)) / P
        out[i] = sum((preds[i, p] - mean)**2 for p in range(P)) / P
    return out


def naive_emcm(preds, X):
    n, P = preds.shape
    out = np.zeros(n)
    for i in range(n):
        mean = sum(preds[i, p] for p in range(P)) / P
        out[i] = sum(np.linalg.norm((preds[i, p] - mean) * X[i])
                     for p in range(P)) / P
    return out


def test_qbc_scores():
    print("Start")
    from libalbatch.committee import CommitteePredictions, qbc_scores, CommitteeError

    cp = CommitteePredictions([[1., 2., 3.], [4., 4., 4.]])
    assert_allclose(qbc_scores(cp), [2. / 3., 0.], atol=1e-10)
    #Invariant under permutation of the committee members
    cp2 = CommitteePredictions([[3., 1., 2.], [4., 4., 4.]])
    assert_allclose(qbc_scores(cp2), qbc_scores(cp))

    with pytest.raises(CommitteeError):
        qbc_scores(CommitteePredictions([[1.], [2.]]))
    with pytest.raises(CommitteeError):
        CommitteePredictions([[1., np.nan]])


def test_emcm_scores():
    print("Start")
    from libalbatch.committee import CommitteePredictions, emcm_scores, CommitteeError

    cp = CommitteePredictions([[1., 3.], [2., 2.]])
    X = np.array([[3., 4.], [1., 1.]])
    assert_allclose(emcm_scores(cp, X), [5., 0.])
    #Homogeneous in x
    assert_allclose(emcm_scores(cp, -2 * X), 2 * emcm_scores(cp, X))

    with pytest.raises(CommitteeError):
        emcm_scores(cp, np.ones((3, 2)))


def test_scores_oracle():
    "Compare with naive loops on random instances."
    print("Start")
    from libalbatch.committee import CommitteePredictions, qbc_scores, emcm_scores

    rng = np.random.default_rng(0)
    for _ in range(300):
        P = rng.integers(2, 9)
        n = rng.integers(1, 60)
        d = rng.integers(1, 31)
        preds = rng.normal(size=(n, P))
        X = rng.uniform(size=(n, d))
        cp = CommitteePredictions(preds)
        q = qbc_scores(cp)
        g = emcm_scores(cp, X)
        assert_allclose(q, naive_qbc(preds), rtol=1e-12, atol=1e-12)
        assert_allclose(g, naive_emcm(preds, X), rtol=1e-12, atol=1e-12)
        assert np.all(q >= 0) and np.all(g >= 0)

    #With unit feature vectors EMCM is the mean absolute deviation.
    preds = rng.normal(size=(20, 4))
    g = emcm_scores(CommitteePredictions(preds), np.ones((20, 1)))
    mad = np.mean(np.abs(preds - preds.mean(axis=1, keepdims=True)), axis=1)
    assert_allclose(g, mad, atol=1e-12)


@pytest.mark.slow
def test_scores_oracle_full():
    "1000 random instances with up to 200 candidates."
    print("Start")
    from libalbatch.committee import CommitteePredictions, qbc_scores, emcm_scores

    rng = np.random.default_rng(10)
    for _ in range(1000):
        P = rng.integers(2, 9)
        n = rng.integers(1, 201)
        d = rng.integers(1, 31)
        preds = rng.normal(size=(n, P))
        X = rng.uniform(size=(n, d))
        cp = CommitteePredictions(preds)
        assert_allclose(qbc_scores(cp), naive_qbc(preds), rtol=1e-12, atol=1e-12)
        assert_allclose(emcm_scores(cp, X), naive_emcm(preds, X),
                        rtol=1e-12, atol=1e-12)


def test_bootstrap_committee():
    print("Start")
    from libalbatch.committee import (bootstrap_committee, committee_predict,
                                      CommitteeError)

    rng = np.random.default_rng(1)
    X = rng.uniform(size=(10, 2))
    y = rng.uniform(size=10)

    models = bootstrap_committee(X, y, P=4, sigma=0.01, seed=5)
    assert len(models) == 4
    #Deterministic
    models2 = bootstrap_committee(X, y, P=4, sigma=0.01, seed=5)
    for m1, m2 in zip(models, models2):
        assert np.array_equal(m1.weights, m2.weights)
        assert m1.bias == m2.bias
    #Different resamples
    assert not np.array_equal(models[0].weights, models[1].weights)

    cp = committee_predict(models, X)
    assert cp.preds.shape == (10, 4)
    assert cp.P == 4

    #Constant labels give constant predictions.
    models = bootstrap_committee(X, np.full(10, 0.7), P=3, sigma=1e-9, seed=0)
    assert_allclose(committee_predict(models, X).preds, 0.7, atol=1e-6)

    with pytest.raises(CommitteeError):
        bootstrap_committee(X[:1], y[:1], P=4, seed=0)
    with pytest.raises(CommitteeError):
        bootstrap_committee(X, y, P=1, seed=0)


def test_bootstrap_redraw():
    "Resamples with a single distinct sample are drawn again."
    print("Start")
    from libalbatch.committee import bootstrap_committee

    #Two samples: half of the resamples contain only one distinct sample.
    X = np.array([[0.], [1.]])
    y = np.array([0., 1.])
    models = bootstrap_committee(X, y, P=5, sigma=1e-9, seed=3)
    for m in models:
        assert_allclose(m.weights, [1.], atol=1e-6)
        assert_allclose(m.bias, 0., atol=1e-6)



if __name__ == "__main__":
    test_qbc_scores()
    test_emcm_scores()
    test_scores_oracle()
    test_bootstrap_committee()
    pass #IGNORE:W0107
