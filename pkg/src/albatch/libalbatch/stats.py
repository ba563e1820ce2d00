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
Statistical comparison of the strategies.

For each number of batches ``m`` the metric values of all (subject, run)
pairs are compared with Dunn's rank based multiple comparison procedure.
The p-values are adjusted with the Benjamini-Hochberg false discovery rate
method.
"""

import logging

import numpy as np
import pandas as pd
import scipy.stats as st
from statsmodels.stats.multitest import fdrcorrection

from libalbatch import settings
from libalbatch.coredata import AlbatchError, COMPARISON_DESCRIPTOR
from libalbatch.dataframes import conform_frame
from libalbatch.harness import REPORTED_PAIRS, pair_label



class StatsError(AlbatchError):
    pass


DIRECTIONS = ("lower_better", "higher_better", "two_sided")
FAMILIES = ("per_m", "table")
SIDEDNESS = ("one_sided", "two_sided")

# A small RMSE is good; a large correlation is good.
METRIC_DIRECTION = {"rmse": "lower_better", "cc": "higher_better"}


def dunn_pairwise(groups, pairs, direction="lower_better"):
    """
    Dunn's multiple comparison procedure.

    All observations are ranked together, ties get their mean rank. For
    the pair ``(i, j)``::

        z = (R_i - R_j) / sqrt((N (N + 1) / 12 - T) (1 / n_i + 1 / n_j))

        T = sum(t^3 - t) / (12 (N - 1))

    ``R_i`` is the mean rank of group ``i``; ``t`` runs over the sizes of
    the groups of tied values.

    Parameters
    ----------
    groups : list of array
        At least 2 groups with at least 2 observations each.
    pairs : list of (int, int)
        Indices into ``groups``.
    direction : str
        * ``'lower_better'``: one sided, H1: group ``i`` has lower values.
        * ``'higher_better'``: one sided, H1: group ``i`` has higher values.
        * ``'two_sided'``

    Returns
    -------
    array
        Raw p-value of each pair. 0.5 for every pair (1.0 if two sided)
        if all observations are tied.
    """
    if direction not in DIRECTIONS:
        raise StatsError("Unknown direction: '{d}'".format(d=direction))
    groups = [np.asarray(g, dtype=np.float64) for g in groups]
    if len(groups) < 2 or any(len(g) < 2 for g in groups):
        raise StatsError("Need at least 2 groups with at least 2 "
                         "observations each.")
    if not all(np.all(np.isfinite(g)) for g in groups):
        raise StatsError("Observations must be finite.")

    values = np.concatenate(groups)
    N = len(values)
    ranks = st.rankdata(values)
    bounds = np.cumsum([0] + [len(g) for g in groups])
    mean_ranks = [ranks[bounds[i]:bounds[i + 1]].mean() for i in range(len(groups))]
    _, tie_sizes = np.unique(values, return_counts=True)
    tie_correction = np.sum(tie_sizes**3 - tie_sizes) / (12. * (N - 1))
    variance = N * (N + 1) / 12. - tie_correction

    pvals = []
    for i, j in pairs:
        if variance <= 0:
            pvals.append(1.0 if direction == "two_sided" else 0.5)
            continue
        z = (mean_ranks[i] - mean_ranks[j]) / \
            np.sqrt(variance * (1. / len(groups[i]) + 1. / len(groups[j])))
        if direction == "lower_better":
            pvals.append(st.norm.cdf(z))
        elif direction == "higher_better":
            pvals.append(st.norm.sf(z))
        else:
            pvals.append(min(1., 2. * st.norm.sf(abs(z))))
    return np.array(pvals, dtype=np.float64)


def bh_fdr(pvals, alpha=settings.ALPHA):
    """Benjamini-Hochberg adjusted p-values, in the order of ``pvals``."""
    pvals = np.asarray(pvals, dtype=np.float64)
    if pvals.ndim != 1:
        raise StatsError("p-values must be a vector.")
    if len(pvals) == 0:
        return pvals.copy()
    if np.any(~np.isfinite(pvals)) or np.any(pvals < 0) or np.any(pvals > 1):
        raise StatsError("p-values must be in [0, 1]: {p}".format(p=pvals))
    _, adjusted = fdrcorrection(pvals, alpha=alpha, method="indep")
    return np.minimum(adjusted, 1.)


def _groups_at(rt, m, strategies, metric):
    """Metric values of each strategy at batch ``m``, by (subject, run)."""
    sel = rt[rt["m"] == m].sort_values(["subject", "run"], kind="stable")
    return [sel[sel["strategy"] == s][metric].values for s in strategies]


def comparison_table(rt, metric, alpha=settings.ALPHA,
                     family=settings.CORRECTION_FAMILY,
                     sidedness=settings.SIDEDNESS, pairs=REPORTED_PAIRS):
    """
    Compare pairs of strategies at every ``m``.

    The groups of Dunn's procedure are all strategies that appear in
    ``pairs``, ranked together. A one sided test has the alternative
    hypothesis "the first strategy of the pair is better".

    Parameters
    ----------
    rt : pandas.DataFrame
        Results table.
    metric : str
        ``'rmse'`` or ``'cc'``.
    family : str
        ``'per_m'``: adjust the p-values of each ``m`` separately;
        ``'table'``: adjust all p-values of the table together.
    sidedness : str
        ``'one_sided'`` or ``'two_sided'``.

    Returns
    -------
    pandas.DataFrame
        Columns of ``COMPARISON_DESCRIPTOR``.
    """
    if metric not in METRIC_DIRECTION:
        raise StatsError("Unknown metric: '{m}'".format(m=metric))
    if family not in FAMILIES:
        raise StatsError("Unknown correction family: '{f}'".format(f=family))
    if sidedness not in SIDEDNESS:
        raise StatsError("Unknown sidedness: '{s}'".format(s=sidedness))
    for col in ("strategy", "m", "subject", "run", metric):
        if col not in rt.columns:
            raise StatsError("Results have no column '{c}'.".format(c=col))

    strategies = []
    for pair in pairs:
        for s in pair:
            if s not in strategies:
                strategies.append(s)
    missing = [s for s in strategies if s not in set(rt["strategy"])]
    if missing:
        raise StatsError("Strategies missing in results: {m}".format(m=missing))
    index_pairs = [(strategies.index(a), strategies.index(b)) for a, b in pairs]
    direction = METRIC_DIRECTION[metric] if sidedness == "one_sided" else "two_sided"

    rows = []
    for m in sorted(rt["m"].unique()):
        groups = _groups_at(rt, m, strategies, metric)
        p_raw = dunn_pairwise(groups, index_pairs, direction)
        for (a, b), p in zip(pairs, p_raw):
            rows.append({"m": m, "pair": pair_label(a, b, " vs "),
                         "metric": metric, "p_raw": p})
    table = pd.DataFrame(rows, columns=COMPARISON_DESCRIPTOR.column_names)

    if family == "per_m":
        table["p_adj"] = table.groupby("m")["p_raw"].transform(
            lambda p: bh_fdr(p.values, alpha))
    else:
        table["p_adj"] = bh_fdr(table["p_raw"].values, alpha)
    table["significant"] = table["p_adj"] < alpha
    logging.debug("Comparison table '{m}': {n} significant cells."
                  .format(m=metric, n=int(table["significant"].sum())))
    return conform_frame(table, COMPARISON_DESCRIPTOR)


def comparison_pivot(table):
    """Adjusted p-values as matrix: one row per ``m``, one column per pair."""
    return table.pivot(index="m", columns="pair", values="p_adj")[
        list(pd.unique(table["pair"]))]
