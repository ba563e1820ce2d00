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
Central data structures: the layout of every CSV file, the exception base
class, and derivation of random seeds.
"""

import zlib

import numpy as np

from libalbatch.descriptors import (
                    BoolD, StrD, IntD, FloatD,
                    FieldDescriptor as FD, TableDescriptor)



class AlbatchError(ValueError):
    """
    Base class of all errors caused by bad input data or configuration.

    The command line program reports these errors and exits with code 2.
    """
    pass


class TableError(AlbatchError):
    """A CSV table does not conform to its descriptor."""
    pass


def derive_seed(master_seed, *keys):
    """
    Derive an independent seed from a master seed and a sequence of keys.

    Keys are integers or strings. The same arguments give the same seed on
    every platform, so random streams can be labeled: for example
    ``derive_seed(seed, 'pool', subject, run)``.

    Returns
    -------
    int
        Seed in ``[0, 2**32)``.
    """
    entropy = [int(master_seed) & 0xFFFFFFFF]
    for key in keys:
        if isinstance(key, str):
            entropy.append(zlib.crc32(key.encode("utf-8")))
        else:
            assert isinstance(key, (int, np.integer)), \
                   "Keys must be `int` or `str`."
            entropy.append(int(key) & 0xFFFFFFFF)
    seq = np.random.SeedSequence(entropy)
    return int(seq.generate_state(1, dtype=np.uint32)[0])


def dataset_descriptor(feature_names):
    """
    Create the descriptor of a dataset file: ``id,f0,...,f{d-1},y``.

    The number of feature columns varies, therefore the descriptor is
    created for each file.
    """
    assert isinstance(feature_names, (list, tuple))
    fields = [FD("id", IntD, None,
                 "Stable integer ID of the sample.")]
    fields += [FD(name, FloatD, None, "Feature.") for name in feature_names]
    fields += [FD("y", FloatD, None,
                  "Regression target, for example the drowsiness index.")]
    return TableDescriptor(
        "dataset",
        "Feature matrix with aligned target vector. One row per sample.",
        fields)


SYNTH_META_DESCRIPTOR = TableDescriptor(
    "synth-meta",
    "Hidden parameters of the synthetic subjects. Oracles for tests.",
    [FD("subject", StrD, None,
        "Name of the subject, the stem of its file name."),
     FD("kind", StrD, None,
        "'weight', 'bias', or 'outlier'."),
     FD("index", IntD, None,
        "Feature index of a weight; sample ID of an outlier; 0 for the bias."),
     FD("value", FloatD, None,
        "Value of weight or bias. 1 for outliers."),
     ])


RESPONSE_TIME_DESCRIPTOR = TableDescriptor(
    "response-times",
    "Response times to lane-departure events, one per epoch.",
    [FD("epoch", IntD, None, "Epoch number, joins with the band powers."),
     FD("tau", FloatD, None, "Response time in seconds."),
     ])


RESULTS_DESCRIPTOR = TableDescriptor(
    "results",
    "Performance of the regression model after each batch.",
    [FD("subject", StrD, None,
        "Name of the subject (dataset)."),
     FD("strategy", StrD, None,
        "Sample selection strategy: bl, qbc, eqbc, emcm, eemcm, ..."),
     FD("run", IntD, None,
        "Number of the run; each run draws a new pool."),
     FD("m", IntD, None,
        "Number of batches labeled so far, 1 ... M."),
     FD("rmse", FloatD, None,
        "Root mean squared error on the evaluation samples."),
     FD("cc", FloatD, None,
        "Pearson correlation coefficient on the evaluation samples."),
     FD("cc_flag", BoolD, False,
        "True if the correlation is degenerate (constant predictions)."),
     ])


CURVES_DESCRIPTOR = TableDescriptor(
    "curves",
    "Learning curves: mean over runs, then over subjects.",
    [FD("strategy", StrD, None, "Sample selection strategy."),
     FD("m", IntD, None, "Number of batches."),
     FD("metric", StrD, None, "'rmse' or 'cc'."),
     FD("mean", FloatD, None, "Mean over subjects of the per-subject means."),
     FD("sd", FloatD, None, "Standard deviation over subjects."),
     ])


SUBJECT_CURVES_DESCRIPTOR = TableDescriptor(
    "subject-curves",
    "Learning curves of the individual subjects: mean over runs.",
    [FD("subject", StrD, None, "Name of the subject."),
     FD("strategy", StrD, None, "Sample selection strategy."),
     FD("m", IntD, None, "Number of batches."),
     FD("metric", StrD, None, "'rmse' or 'cc'."),
     FD("mean", FloatD, None, "Mean over runs."),
     FD("sd", FloatD, None, "Standard deviation over runs."),
     ])


IMPROVEMENT_DESCRIPTOR = TableDescriptor(
    "improvement",
    "Percentage performance improvement of strategy A over strategy B.",
    [FD("pair", StrD, None, "Pair of strategies, written 'A/B'."),
     FD("m", IntD, None, "Number of batches."),
     FD("metric", StrD, None, "'rmse' or 'cc'."),
     FD("value", FloatD, None, "Improvement in percent; positive: A is better."),
     FD("flag", BoolD, False, "True if B is zero and the value is missing."),
     ])


COMPARISON_DESCRIPTOR = TableDescriptor(
    "comparison",
    "Dunn's multiple comparisons with false discovery rate correction.",
    [FD("m", IntD, None, "Number of batches."),
     FD("pair", StrD, None, "Pair of strategies, written 'A vs B'."),
     FD("metric", StrD, None, "'rmse' or 'cc'."),
     FD("p_raw", FloatD, None, "One-sided p-value: A better than B."),
     FD("p_adj", FloatD, None, "Adjusted p-value."),
     FD("significant", BoolD, False, "True if ``p_adj < alpha``."),
     ])
