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
The evaluation protocol.

For each subject and run a random pool is drawn from the subject's dataset.
Every strategy is run on the same pool. After each batch the ridge
regression model is evaluated: root mean squared error and correlation
coefficient. The evaluation samples are either the samples that are not in
the pool (``'holdout'``, the same for all strategies) or the samples of the
pool that are not labeled (``'rest'``).

The results are aggregated to learning curves (mean over runs, then mean
and standard deviation over subjects) and to percentage improvements of
one strategy over another.
"""

import logging

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from libalbatch import settings
from libalbatch.coredata import (AlbatchError, derive_seed, RESULTS_DESCRIPTOR,
                                 CURVES_DESCRIPTOR, SUBJECT_CURVES_DESCRIPTOR,
                                 IMPROVEMENT_DESCRIPTOR)
from libalbatch.dataframes import conform_frame
from libalbatch.dataset import Dataset, split_pool, pool_size, DatasetError
from libalbatch.regression import predict, rmse, pearson_cc
from libalbatch.strategies import (StrategySpec, strategy_from_name,
                                   run_strategy, DEFAULT_STRATEGIES)



class HarnessError(AlbatchError):
    pass


METRICS = ("rmse", "cc")
EVALUATION_MODES = ("holdout", "rest")

# Pairs (A, B) of the comparisons: A is the improved algorithm.
REPORTED_PAIRS = (("qbc", "bl"), ("eqbc", "bl"), ("emcm", "bl"),
                  ("eemcm", "bl"), ("eqbc", "qbc"), ("eemcm", "emcm"))
ABLATION_PAIRS = tuple(("e{b}{i}".format(b=base, i=i), base)
                       for base in ("qbc", "emcm") for i in (1, 2, 3))


def pair_label(a, b, sep="/"):
    """Label of a pair of strategies, for example ``'EEMCM/BL'``."""
    return "{a}{s}{b}".format(a=a.upper(), s=sep, b=b.upper())


class ExperimentConfig(object):
    """
    Parameters of an experiment.

    Parameters
    ----------
    subjects : list of (str, Dataset)
        Named datasets.
    strategies : list of str or StrategySpec
        Strategy names are converted with ``strategy_from_name``, using
        ``k, gamma, P, sigma`` of this configuration.
    k, M, pool_fraction, runs, master_seed, sigma, gamma, P, jobs
        See ``settings``.
    evaluation : str
        ``'holdout'``: evaluate on the samples outside the pool.
        ``'rest'``: evaluate on the unlabeled and blacklisted samples of
        the pool.
    """
    def __init__(self, subjects, strategies=DEFAULT_STRATEGIES, k=settings.K,
                 M=settings.M, pool_fraction=settings.POOL_FRACTION,
                 runs=settings.RUNS, master_seed=settings.MASTER_SEED,
                 sigma=settings.SIGMA, gamma=settings.GAMMA,
                 P=settings.COMMITTEE_SIZE, jobs=settings.JOBS,
                 evaluation=settings.EVALUATION):
        if not subjects:
            raise HarnessError("An experiment needs at least one subject.")
        for name, ds in subjects:
            assert isinstance(ds, Dataset), "Subject '{n}' is no Dataset.".format(n=name)
        if len(set(name for name, _ in subjects)) != len(subjects):
            raise HarnessError("Subject names are not unique.")
        if runs < 1 or M < 1 or k < 1:
            raise HarnessError("Need runs >= 1, M >= 1, k >= 1. Got runs={r}, "
                               "M={m}, k={k}".format(r=runs, m=M, k=k))
        if not 0 < pool_fraction <= 1:
            raise HarnessError("pool_fraction must be in (0, 1]: {f}"
                               .format(f=pool_fraction))
        if jobs == 0:
            raise HarnessError("jobs must not be 0.")
        if evaluation not in EVALUATION_MODES:
            raise HarnessError("Unknown evaluation: '{e}'. Legal values: {l}"
                               .format(e=evaluation, l=EVALUATION_MODES))
        if evaluation == "holdout":
            for name, ds in subjects:
                if pool_size(len(ds), pool_fraction) >= len(ds):
                    raise HarnessError("Subject '{n}': the pool contains all "
                                       "samples, nothing is held out."
                                       .format(n=name))

        self.subjects = list(subjects)
        self.k = int(k)
        self.M = int(M)
        self.pool_fraction = float(pool_fraction)
        self.runs = int(runs)
        self.master_seed = int(master_seed)
        self.sigma = float(sigma)
        self.gamma = float(gamma)
        self.P = int(P)
        self.jobs = int(jobs)
        self.evaluation = evaluation
        self.strategies = [
            s if isinstance(s, StrategySpec)
            else strategy_from_name(s, self.k, self.gamma, self.P, self.sigma)
            for s in strategies]
        if not self.strategies:
            raise HarnessError("An experiment needs at least one strategy.")
        names = [s.name for s in self.strategies]
        if len(set(names)) != len(names):
            raise HarnessError("Strategy names are not unique: {n}".format(n=names))

        smallest = min(pool_size(len(ds), self.pool_fraction)
                       for _, ds in self.subjects)
        if self.M * self.k > smallest:
            raise HarnessError("M * k = {mk} samples exceed the smallest pool "
                               "({p} samples).".format(mk=self.M * self.k,
                                                        p=smallest))

    @property
    def strategy_names(self):
        return [s.name for s in self.strategies]

    @property
    def subject_names(self):
        return [name for name, _ in self.subjects]


def _rest_data(pool, labeled, m):
    """
    Features and targets of the samples of the pool that are not labeled.
    If there are none, those of the labeled samples; ``train_only`` is set.
    """
    eval_ids = [idx for idx in pool.ids if int(idx) not in labeled]
    assert labeled.isdisjoint(eval_ids), "Evaluation includes labeled samples."
    train_only = len(eval_ids) == 0
    if train_only:
        logging.warning("Pool exhausted at batch {m}; evaluating on the "
                        "labeled samples.".format(m=m))
        eval_ids = sorted(labeled)
    rows = pool.rows_of(eval_ids)
    return pool.features[rows], pool.targets[rows], train_only


def evaluate_batches(pool, strategy_run, M, holdout=None):
    """
    Evaluate the model after each batch.

    Without ``holdout`` the model is evaluated on the unlabeled samples of
    the pool; blacklisted samples are evaluated too. If the pool is
    exhausted the metrics are computed on the labeled samples, and
    ``train_only`` is set. If fewer than ``M`` batches were selected, the
    last model is reported for the remaining batches.

    Parameters
    ----------
    pool : Dataset
    strategy_run : StrategyRun
    M : int
    holdout : Dataset or None
        Samples outside the pool; if given, every model is evaluated on them.

    Returns
    -------
    list of dict
        Keys ``m, rmse, cc, cc_flag, train_only``.
    """
    rows = []
    history = strategy_run.state.batch_history
    n_batches = len(strategy_run.models)
    for m in range(1, M + 1):
        i = min(m, n_batches) - 1
        model = strategy_run.models[i]
        labeled = set(idx for batch in history[:i + 1] for idx in batch)
        if holdout is None:
            X, y, train_only = _rest_data(pool, labeled, m)
        else:
            assert labeled.isdisjoint(int(idx) for idx in holdout.ids), \
                   "Evaluation includes labeled samples."
            X, y, train_only = holdout.features, holdout.targets, False
        yhat = predict(model, X)
        if len(y) < 2:
            cc, cc_flag = 0.0, True
        else:
            cc, cc_flag = pearson_cc(y, yhat)
        rows.append({"m": m, "rmse": rmse(y, yhat), "cc": cc,
                     "cc_flag": cc_flag, "train_only": train_only})
    return rows


def _run_unit(cfg, i_subject, i_run):
    """Run all strategies on one pool, for one subject and run."""
    name, ds = cfg.subjects[i_subject]
    pool, holdout = split_pool(
        ds, cfg.pool_fraction,
        derive_seed(cfg.master_seed, "pool", i_subject, i_run))
    if cfg.evaluation == "rest":
        holdout = None
    run_seed = derive_seed(cfg.master_seed, "run", i_subject, i_run)
    rows = []
    for spec in cfg.strategies:
        result = run_strategy(pool, spec, cfg.M, run_seed)
        for row in evaluate_batches(pool, result, cfg.M, holdout):
            if row.pop("train_only"):
                logging.warning("Subject '{s}', run {r}, strategy '{t}': "
                                "batch {m} is evaluated on its training data."
                                .format(s=name, r=i_run, t=spec.name, m=row["m"]))
            row.update(subject=name, strategy=spec.name, run=i_run)
            rows.append(row)
    logging.debug("Finished subject '{s}', run {r}.".format(s=name, r=i_run))
    return rows


def run_experiment(cfg):
    """
    Run the experiment: every strategy on every (subject, run) pool.

    The (subject, run) units are executed by ``cfg.jobs`` parallel workers.
    The results are sorted by subject, strategy (both in configuration
    order), run, and batch, independent of the number of workers.

    Returns
    -------
    pandas.DataFrame
        Columns of ``RESULTS_DESCRIPTOR``.
    """
    assert isinstance(cfg, ExperimentConfig)
    units = [(s, r) for s in range(len(cfg.subjects)) for r in range(cfg.runs)]
    logging.info("Running {u} (subject, run) units with strategies {s}."
                 .format(u=len(units), s=cfg.strategy_names))
    try:
        unit_rows = Parallel(n_jobs=cfg.jobs)(
            delayed(_run_unit)(cfg, s, r) for s, r in units)
    except DatasetError as err:
        raise HarnessError(str(err)) from err

    frame = pd.DataFrame([row for rows in unit_rows for row in rows])
    frame["subject"] = pd.Categorical(frame["subject"], cfg.subject_names,
                                      ordered=True)
    frame["strategy"] = pd.Categorical(frame["strategy"], cfg.strategy_names,
                                       ordered=True)
    frame = frame.sort_values(["subject", "strategy", "run", "m"], kind="stable")
    for col in ("subject", "strategy"):
        frame[col] = frame[col].astype(str)
    return conform_frame(frame.reset_index(drop=True), RESULTS_DESCRIPTOR)


def _ordered(frame, keys):
    """Sort by ``keys``; strategy and metric keep their order of appearance."""
    frame = frame.copy()
    for col in ("subject", "strategy", "metric"):
        if col in frame.columns:
            frame[col] = pd.Categorical(frame[col], pd.unique(frame[col]),
                                        ordered=True)
    frame = frame.sort_values(keys, kind="stable").reset_index(drop=True)
    for col in ("subject", "strategy", "metric"):
        if col in frame.columns:
            frame[col] = frame[col].astype(str)
    return frame


def _long_format(rt, keys):
    """Results in long format: one row per metric."""
    return rt.melt(id_vars=keys, value_vars=list(METRICS),
                   var_name="metric", value_name="value")


def per_subject_curves(rt):
    """
    Learning curves of the individual subjects: mean and standard
    deviation over runs, for each (subject, strategy, m, metric).
    """
    if len(rt) == 0:
        raise HarnessError("Results table is empty.")
    long = _long_format(rt, ["subject", "strategy", "run", "m"])
    grouped = long.groupby(["subject", "strategy", "m", "metric"],
                           sort=False)["value"]
    curves = pd.DataFrame({"mean": grouped.mean(),
                           "sd": grouped.std(ddof=0)}).reset_index()
    curves = _ordered(curves, ["subject", "strategy", "m", "metric"])
    return conform_frame(curves, SUBJECT_CURVES_DESCRIPTOR)


def learning_curves(rt):
    """
    Learning curves over all subjects.

    First the mean over runs is computed for each subject, then the mean and
    standard deviation (population) of these means over the subjects.

    Returns
    -------
    pandas.DataFrame
        Columns of ``CURVES_DESCRIPTOR``.
    """
    subject_curves = per_subject_curves(rt)
    grouped = subject_curves.groupby(["strategy", "m", "metric"],
                                     sort=False)["mean"]
    curves = pd.DataFrame({"mean": grouped.mean(),
                           "sd": grouped.std(ddof=0)}).reset_index()
    curves = _ordered(curves, ["strategy", "m", "metric"])
    return conform_frame(curves, CURVES_DESCRIPTOR)


def pct_improvement(curve_a, curve_b, metric):
    """
    Percentage improvement of algorithm A over algorithm B.

    * RMSE: ``100 * (B - A) / B``
    * CC: ``100 * (A - B) / |B|``

    Positive values mean that A is better.

    Returns
    -------
    values : array
        ``nan`` where B is zero.
    flags : array of bool
        ``True`` where B is zero.
    """
    a = np.asarray(curve_a, dtype=np.float64)
    b = np.asarray(curve_b, dtype=np.float64)
    if a.shape != b.shape:
        raise HarnessError("Curves are not aligned: {a} vs. {b}"
                           .format(a=a.shape, b=b.shape))
    flags = b == 0
    denom = np.where(flags, 1., np.abs(b))
    if metric == "rmse":
        values = 100. * (b - a) / denom
    elif metric == "cc":
        values = 100. * (a - b) / denom
    else:
        raise HarnessError("Unknown metric: '{m}'".format(m=metric))
    return np.where(flags, np.nan, values), flags


def improvement_table(curves, pairs=None, metrics=METRICS):
    """
    Percentage improvements for pairs of strategies, on their common
    ``m`` values.

    Parameters
    ----------
    curves : pandas.DataFrame
        Learning curves, from ``learning_curves``.
    pairs : list of (str, str)
        Default: the reported pairs and the ablation pairs. Pairs with a
        strategy that is not in ``curves`` are skipped.
    metrics : list of str

    Returns
    -------
    pandas.DataFrame
        Columns of ``IMPROVEMENT_DESCRIPTOR``.
    """
    if pairs is None:
        pairs = REPORTED_PAIRS + ABLATION_PAIRS
    present = set(curves["strategy"])
    rows = []
    for a, b in pairs:
        if a not in present or b not in present:
            continue
        for metric in metrics:
            sel = curves[curves["metric"] == metric]
            merged = pd.merge(sel[sel["strategy"] == a][["m", "mean"]],
                              sel[sel["strategy"] == b][["m", "mean"]],
                              on="m", suffixes=("_a", "_b")).sort_values("m")
            values, flags = pct_improvement(merged["mean_a"].values,
                                            merged["mean_b"].values, metric)
            for m, v, f in zip(merged["m"], values, flags):
                rows.append({"pair": pair_label(a, b), "m": m,
                             "metric": metric, "value": v, "flag": f})
    frame = pd.DataFrame(rows, columns=IMPROVEMENT_DESCRIPTOR.column_names)
    return conform_frame(frame, IMPROVEMENT_DESCRIPTOR)
