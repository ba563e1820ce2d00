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
Sample selection strategies for pool-based, batch-mode active learning.

Baselines:

* ``bl``: random sampling.
* ``qbc``: query by committee, the top ``k`` samples by committee variance.
* ``emcm``: expected model change maximization, top ``k`` by expected change.

The enhanced variants ``eqbc`` and ``eemcm`` add three enhancements to
the baselines:

1. Representative initialization: the first batch consists of the samples
   closest to the centroids of a k-means clustering of the pool.
2. Outlier blacklisting: samples in very small clusters are excluded from
   all future selections.
3. Diversity: the ``2k`` most informative samples are clustered into ``k``
   clusters, and the most informative sample of each cluster is selected.

``eqbc1`` ... ``eemcm3`` use only one of the enhancements.

All selections are reported as sample IDs. Ties of scores are broken by
the lowest sample ID.
"""

import re
import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from libalbatch import settings
from libalbatch.coredata import AlbatchError, derive_seed
from libalbatch.dataset import Dataset, LabelState, make_label_state
from libalbatch.clustering import kmeans, closest_to_centroid
from libalbatch.committee import (bootstrap_committee, committee_predict,
                                  qbc_scores, emcm_scores)
from libalbatch.regression import ridge_fit



class StrategyError(AlbatchError):
    pass


EnhancementFlags = namedtuple("EnhancementFlags",
                              ["representative_init", "outlier_blacklist",
                               "diversity"])
NO_ENHANCEMENTS = EnhancementFlags(False, False, False)
ALL_ENHANCEMENTS = EnhancementFlags(True, True, True)

BASES = ("random", "qbc", "emcm")


class StrategySpec(object):
    """
    A sample selection strategy: baseline plus enhancements, and its
    parameters.

    Parameters
    ----------
    base : str
        ``'random'``, ``'qbc'`` or ``'emcm'``.
    flags : EnhancementFlags
    k : int
        Batch size.
    gamma : float
        Outlier threshold: clusters with at most ``max(1, gamma * N)``
        samples are outliers.
    P : int
        Committee size.
    sigma : float
        Ridge parameter of committee and final model.
    name : str
        Name in result tables. Default: derived from ``base`` and ``flags``.
    """
    def __init__(self, base, flags=NO_ENHANCEMENTS, k=settings.K,
                 gamma=settings.GAMMA, P=settings.COMMITTEE_SIZE,
                 sigma=settings.SIGMA, name=None):
        if base not in BASES:
            raise StrategyError("Unknown base strategy: '{b}'".format(b=base))
        assert isinstance(flags, EnhancementFlags)
        if k < 1:
            raise StrategyError("Batch size must be >= 1: {k}".format(k=k))
        if not 0 <= gamma < 0.5:
            raise StrategyError("gamma must be in [0, 0.5): {g}".format(g=gamma))
        if base != "random" and P < 2:
            raise StrategyError("Committee size must be >= 2: {p}".format(p=P))
        if not sigma >= 0:
            raise StrategyError("sigma must be >= 0: {s}".format(s=sigma))
        if base == "random" and flags.diversity:
            raise StrategyError("Diversity needs an informativeness score; "
                                "not possible with random sampling.")
        self.base = base
        self.flags = flags
        self.k = int(k)
        self.gamma = float(gamma)
        self.P = int(P)
        self.sigma = float(sigma)
        self.name = name if name is not None else _default_name(base, flags)

    @property
    def uses_init_clustering(self):
        return self.flags.representative_init or self.flags.outlier_blacklist

    def __repr__(self):
        return ("StrategySpec('{b}', {f}, k={k}, gamma={g}, P={p}, sigma={s}, "
                "name='{n}')".format(b=self.base, f=self.flags, k=self.k,
                                     g=self.gamma, p=self.P, s=self.sigma,
                                     n=self.name))


def _default_name(base, flags):
    if base == "random":
        return "bl"
    if flags == NO_ENHANCEMENTS:
        return base
    if flags == ALL_ENHANCEMENTS:
        return "e" + base
    if sum(flags) == 1:
        return "e{b}{i}".format(b=base, i=flags.index(True) + 1)
    return "e{b}_{f}".format(b=base, f="".join(str(int(f)) for f in flags))


STRATEGY_NAMES = ("bl", "qbc", "eqbc", "emcm", "eemcm",
                  "eqbc1", "eqbc2", "eqbc3", "eemcm1", "eemcm2", "eemcm3")
DEFAULT_STRATEGIES = ("bl", "qbc", "eqbc", "emcm", "eemcm")

_NAME_RE = re.compile(r"^(e?)(qbc|emcm)([123]?)$")


def strategy_from_name(name, k=settings.K, gamma=settings.GAMMA,
                       P=settings.COMMITTEE_SIZE, sigma=settings.SIGMA):
    """
    Create a ``StrategySpec`` from its short name, for example ``'eemcm'``
    or ``'eqbc2'``.
    """
    name = name.strip().lower()
    if name == "bl":
        return StrategySpec("random", NO_ENHANCEMENTS, k, gamma, P, sigma, name)
    match = _NAME_RE.match(name)
    if match is None or (match.group(3) and not match.group(1)):
        raise StrategyError("Unknown strategy: '{n}'. Known strategies: {s}"
                            .format(n=name, s=", ".join(STRATEGY_NAMES)))
    enhanced, base, number = match.groups()
    if not enhanced:
        flags = NO_ENHANCEMENTS
    elif not number:
        flags = ALL_ENHANCEMENTS
    else:
        flags = EnhancementFlags(*[i == int(number) - 1 for i in range(3)])
    return StrategySpec(base, flags, k, gamma, P, sigma, name)


BatchSelection = namedtuple("BatchSelection",
                            ["chosen", "newly_blacklisted", "diagnostics"])
BatchSelection.__doc__ = """
Result of one selection step.

chosen : list of int
    IDs of the samples to label, distinct, all previously unlabeled.
newly_blacklisted : list of int
    IDs of samples found to be outliers.
diagnostics : pandas.DataFrame
    One row per examined sample; columns depend on the selection method.
"""


def _ordered_by_score(ids, scores):
    """Positions of ``ids`` sorted by descending score, ties by lowest ID."""
    return np.lexsort((np.asarray(ids), -np.asarray(scores)))


def select_random(state, k, seed):
    """
    Select ``min(k, |candidates|)`` samples uniformly at random, without
    replacement, among the unlabeled samples that are not blacklisted.
    """
    assert isinstance(state, LabelState)
    cand = np.array(state.candidate_ids(), dtype=np.int64)
    if len(cand) == 0:
        raise StrategyError("No unlabeled samples left.")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(cand, size=min(k, len(cand)), replace=False)
    diag = pd.DataFrame({"id": chosen})
    return BatchSelection([int(i) for i in chosen], [], diag)


def select_top_k(scores, state, k):
    """
    Select the ``k`` candidates with the highest scores. ``scores`` is
    aligned with ``state.candidate_ids()``. Ties go to the lowest ID.
    """
    assert isinstance(state, LabelState)
    cand = np.array(state.candidate_ids(), dtype=np.int64)
    scores = np.asarray(scores, dtype=np.float64)
    if len(scores) != len(cand):
        raise StrategyError("Got {s} scores for {c} candidates."
                            .format(s=len(scores), c=len(cand)))
    if len(cand) == 0:
        raise StrategyError("No unlabeled samples left.")
    order = _ordered_by_score(cand, scores)[:k]
    diag = pd.DataFrame({"id": cand, "score": scores,
                         "chosen": np.isin(cand, cand[order])})
    return BatchSelection([int(i) for i in cand[order]], [], diag)


def ebmal_init(X_pool, k, gamma=settings.GAMMA, seed=0, ids=None):
    """
    Representative initialization with outlier detection.

    The pool is clustered into ``k`` clusters. Every cluster with at most
    ``max(1, gamma * N)`` samples is removed and its samples are
    blacklisted; ``N`` is the size of the whole pool. This is repeated
    until no cluster is that small. Then the sample closest to the centroid
    of each cluster is selected.

    Removal stops early, with a warning, if it would leave fewer than ``k``
    samples.

    Parameters
    ----------
    X_pool : array (N, d)
    k : int
    gamma : float
    seed : int
    ids : array (N,) of int
        Sample IDs of the rows. Default: ``0 ... N-1``.

    Returns
    -------
    BatchSelection
        Diagnostics: ``id, cluster, chosen`` for the samples of the final
        clustering.
    """
    X_pool = np.asarray(X_pool, dtype=np.float64)
    N = X_pool.shape[0]
    ids = np.arange(N) if ids is None else np.asarray(ids, dtype=np.int64)
    if N < k:
        raise StrategyError("Pool has {n} samples, fewer than k = {k}."
                            .format(n=N, k=k))
    threshold = max(1., gamma * N)

    active = np.arange(N)
    blacklisted = []
    iteration = 0
    while True:
        clustering = kmeans(X_pool[active], k, derive_seed(seed, iteration))
        small = np.flatnonzero(clustering.sizes <= threshold)
        remove = active[np.isin(clustering.assignments, small)]
        if len(remove) == 0:
            break
        if len(active) - len(remove) < k:
            logging.warning("Outlier removal would leave fewer than {k} "
                            "samples; keeping {n} suspected outliers."
                            .format(k=k, n=len(remove)))
            break
        logging.debug("Init: blacklisted {n} samples in iteration {i}."
                      .format(n=len(remove), i=iteration))
        blacklisted.extend(int(i) for i in ids[remove])
        active = np.setdiff1d(active, remove)
        iteration += 1

    X_active = X_pool[active]
    picks = [closest_to_centroid(X_active, clustering, c)
             for c in range(k) if clustering.sizes[c] > 0]
    if len(picks) < k:
        rest = [p for p in range(len(active)) if p not in picks]
        picks += rest[:k - len(picks)]
    chosen = [int(ids[active[p]]) for p in picks]

    diag = pd.DataFrame({"id": ids[active],
                         "cluster": clustering.assignments,
                         "chosen": np.isin(ids[active], chosen)})
    return BatchSelection(chosen, sorted(blacklisted), diag)


def candidate_scores(scorer, pool, state, P=settings.COMMITTEE_SIZE,
                     sigma=settings.SIGMA, seed=0):
    """
    Informativeness of every candidate sample.

    Parameters
    ----------
    scorer : str
        ``'qbc'`` or ``'emcm'``.
    pool : Dataset
    state : LabelState
        At least 2 samples must be labeled.

    Returns
    -------
    cand : array of int
        Candidate IDs, ascending.
    scores : array of float
    """
    assert isinstance(pool, Dataset)
    assert isinstance(state, LabelState)
    cand = np.array(state.candidate_ids(), dtype=np.int64)
    lab_rows = pool.rows_of(state.labeled)
    cand_rows = pool.rows_of(cand)
    committee = bootstrap_committee(pool.features[lab_rows],
                                    pool.targets[lab_rows], P, sigma, seed)
    X_cand = pool.features[cand_rows]
    cp = committee_predict(committee, X_cand)
    if scorer == "qbc":
        return cand, qbc_scores(cp)
    elif scorer == "emcm":
        return cand, emcm_scores(cp, X_cand)
    raise StrategyError("Unknown scorer: '{s}'".format(s=scorer))


def select_diverse(cand, scores, X_cand, k, seed=0):
    """
    Select an informative and diverse batch from scored candidates.

    The ``2k`` candidates with the highest scores are clustered into ``k``
    clusters, and the candidate with the highest score in each cluster is
    selected. With at most ``k`` candidates all of them are selected.

    Parameters
    ----------
    cand : array (n,) of int
        Candidate IDs.
    scores : array (n,)
    X_cand : array (n, d)
        Features of the candidates.
    k : int
    seed : int
        Seed of the k-means clustering.

    Returns
    -------
    BatchSelection
        ``chosen`` is sorted by descending score. Diagnostics: ``id, score,
        cluster, chosen`` for all candidates; ``cluster`` is -1 for the
        candidates that were not pre-selected.
    """
    cand = np.asarray(cand, dtype=np.int64)
    scores = np.asarray(scores, dtype=np.float64)
    X_cand = np.asarray(X_cand, dtype=np.float64)
    if len(cand) == 0:
        raise StrategyError("No candidates to select from.")
    assert len(scores) == len(cand) == X_cand.shape[0]
    order = _ordered_by_score(cand, scores)
    cluster = np.full(len(cand), -1, dtype=np.int64)

    if len(cand) <= k:
        picks = list(order)
    else:
        pre = order[:2 * k]
        clustering = kmeans(X_cand[pre], k, seed)
        cluster[pre] = clustering.assignments
        picks = []
        for c in range(k):
            members = pre[clustering.assignments == c]
            if len(members) > 0:
                picks.append(members[_ordered_by_score(cand[members],
                                                       scores[members])[0]])
        picks = sorted(picks, key=lambda p: (-scores[p], cand[p]))

    chosen = [int(cand[p]) for p in picks]
    diag = pd.DataFrame({"id": cand, "score": scores, "cluster": cluster,
                         "chosen": np.isin(cand, chosen)})
    return BatchSelection(chosen, [], diag)


def ebmal_select(scorer, pool, state, k, committee_seed=0, cluster_seed=0,
                 P=settings.COMMITTEE_SIZE, sigma=settings.SIGMA):
    """
    Score the candidates with a bootstrap committee, then select an
    informative and diverse batch with ``select_diverse``.

    Parameters
    ----------
    scorer : str
        ``'qbc'`` or ``'emcm'``.
    pool : Dataset
    state : LabelState
        At least 2 samples must be labeled.
    k : int
    committee_seed : int
        Seed of the bootstrap committee. With the seed of ``select_top_k``'s
        committee the scores are the same.
    cluster_seed : int
        Seed of the k-means clustering of the top candidates.
    """
    assert isinstance(state, LabelState)
    if not state.unlabeled:
        raise StrategyError("No unlabeled samples left.")
    cand, scores = candidate_scores(scorer, pool, state, P, sigma,
                                    committee_seed)
    return select_diverse(cand, scores, pool.features[pool.rows_of(cand)], k,
                          cluster_seed)


StrategyRun = namedtuple("StrategyRun", ["state", "models", "selections"])
StrategyRun.__doc__ = """
Result of running a strategy on one pool.

state : LabelState
models : list of RidgeModel
    ``models[m - 1]`` is fit on the first ``m`` batches.
selections : list of BatchSelection
"""


def _first_batch(pool, spec, state, seed):
    if spec.uses_init_clustering:
        init = ebmal_init(pool.features, spec.k, spec.gamma,
                          derive_seed(seed, "init"), pool.ids)
        newly_blacklisted = init.newly_blacklisted \
                            if spec.flags.outlier_blacklist else []
        if spec.flags.representative_init:
            return init._replace(newly_blacklisted=newly_blacklisted)
        state.blacklist(newly_blacklisted)
        sel = select_random(state, spec.k, derive_seed(seed, "first"))
        return sel._replace(newly_blacklisted=newly_blacklisted)
    return select_random(state, spec.k, derive_seed(seed, "first"))


def _next_batch(pool, spec, state, m, seed):
    if spec.base == "random":
        return select_random(state, spec.k, derive_seed(seed, "random", m))
    if len(state.labeled) < 2:
        logging.warning("Only {n} labeled sample(s), no committee possible; "
                        "selecting batch {m} at random."
                        .format(n=len(state.labeled), m=m))
        return select_random(state, spec.k, derive_seed(seed, "random", m))
    committee_seed = derive_seed(seed, "committee", m)
    if spec.flags.diversity:
        return ebmal_select(spec.base, pool, state, spec.k, committee_seed,
                            derive_seed(seed, "diversity", m), spec.P, spec.sigma)
    _, scores = candidate_scores(spec.base, pool, state, spec.P, spec.sigma,
                                 committee_seed)
    return select_top_k(scores, state, spec.k)


def run_strategy(pool, spec, M=settings.M, seed=0):
    """
    Run a strategy on a pool: select and label ``M`` batches, and fit a ridge
    regression model on all labeled samples after each batch.

    Batch 1 is the representative initialization if that enhancement is
    enabled, otherwise it is random. All strategies draw the random first
    batch from the same random stream, so that they start from identical
    batches. If the pool is exhausted, fewer than ``M`` batches are
    selected.

    Parameters
    ----------
    pool : Dataset
    spec : StrategySpec
    M : int
        Number of batches.
    seed : int
        Seed of this run. The random streams of the individual steps are
        derived from it.

    Returns
    -------
    StrategyRun
    """
    assert isinstance(pool, Dataset)
    assert isinstance(spec, StrategySpec)
    if M < 1:
        raise StrategyError("Number of batches must be >= 1: {m}".format(m=M))

    state = make_label_state(pool.ids)
    models = []
    selections = []
    for m in range(1, M + 1):
        if not state.unlabeled:
            logging.info("Strategy '{s}': pool exhausted after {n} batches."
                         .format(s=spec.name, n=m - 1))
            break
        if m == 1:
            sel = _first_batch(pool, spec, state, seed)
        else:
            sel = _next_batch(pool, spec, state, m, seed)
        new_black = set(sel.newly_blacklisted) - state.blacklisted
        state.blacklist(new_black)
        state.add_batch(sel.chosen)
        state.validate()

        rows = pool.rows_of(state.labeled)
        models.append(ridge_fit(pool.features[rows], pool.targets[rows],
                                spec.sigma))
        selections.append(sel)
        logging.debug("Strategy '{s}', batch {m}: {b}"
                      .format(s=spec.name, m=m, b=sel.chosen))
    return StrategyRun(state, models, selections)
