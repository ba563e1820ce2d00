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
Datasets: the pool of samples from which the strategies select samples to
label.

* ``Dataset``: feature matrix, targets, and stable sample IDs.
* ``LabelState``: which samples are labeled, unlabeled, or blacklisted.
* CSV input and output, random pools, and synthetic subjects.

All selection results are reported as sample IDs, not as row positions,
so that permuting the pool never corrupts the selection history.
"""

import math
import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from libalbatch import settings
from libalbatch.coredata import (AlbatchError, TableError, derive_seed,
                                 dataset_descriptor, SYNTH_META_DESCRIPTOR)
from libalbatch.dataframes import conform_frame, make_data_frame, write_frame_csv



class DatasetError(AlbatchError):
    pass


class Dataset(object):
    """
    Feature matrix with aligned target vector; a pool of samples.

    Parameters
    ----------
    features : array (N, d)
    targets : array (N,)
    ids : array (N,) of int
        Stable sample identifiers. Default: ``0 ... N-1``.
    feature_names : list of str
        Default: ``f0 ... f{d-1}``.

    The arrays are read only after construction.
    """
    def __init__(self, features, targets, ids=None, feature_names=None):
        features = np.array(features, dtype=np.float64)
        targets = np.array(targets, dtype=np.float64)
        if features.ndim != 2 or targets.ndim != 1:
            raise DatasetError("Features must be a matrix, targets a vector.")
        n, d = features.shape
        if ids is None:
            ids = np.arange(n)
        ids = np.array(ids, dtype=np.int64)
        if feature_names is None:
            feature_names = ["f{i}".format(i=i) for i in range(d)]

        if n < 1 or d < 1:
            raise DatasetError("Dataset needs N >= 1 and d >= 1. Shape: {s}"
                               .format(s=features.shape))
        if len(targets) != n or len(ids) != n:
            raise DatasetError("Inconsistent lengths: features {n}, targets "
                               "{t}, ids {i}".format(n=n, t=len(targets),
                                                     i=len(ids)))
        if len(feature_names) != d:
            raise DatasetError("Need {d} feature names.".format(d=d))
        if not (np.all(np.isfinite(features)) and np.all(np.isfinite(targets))):
            raise DatasetError("Dataset contains non-finite values.")
        if len(np.unique(ids)) != n:
            raise DatasetError("Sample IDs are not unique.")

        for arr in (features, targets, ids):
            arr.flags.writeable = False
        self.features = features
        self.targets = targets
        self.ids = ids
        self.feature_names = list(feature_names)
        self._row_of_id = {int(i): r for r, i in enumerate(ids)}

    def __len__(self):
        return len(self.ids)

    @property
    def n_samples(self):
        return len(self.ids)

    @property
    def n_features(self):
        return self.features.shape[1]

    def subset(self, rows):
        """New ``Dataset`` with the rows at positions ``rows``, in that order."""
        rows = np.asarray(rows, dtype=np.int64)
        return Dataset(self.features[rows], self.targets[rows], self.ids[rows],
                       self.feature_names)

    def rows_of(self, ids):
        """Row positions of the samples with the given IDs."""
        try:
            return np.array([self._row_of_id[int(i)] for i in ids], dtype=np.int64)
        except KeyError as err:
            raise DatasetError("Unknown sample ID: {i}".format(i=err)) from err

    def to_frame(self):
        """Convert to a ``DataFrame`` with columns ``id, f0, ..., y``."""
        frame = make_data_frame(dataset_descriptor(self.feature_names),
                                self.n_samples)
        frame["id"] = self.ids
        for j, name in enumerate(self.feature_names):
            frame[name] = self.features[:, j]
        frame["y"] = self.targets
        return frame

    def __repr__(self):
        return "Dataset(N={n}, d={d})".format(n=self.n_samples, d=self.n_features)


class LabelState(object):
    """
    Partition of the pool's sample IDs into labeled, unlabeled, and
    blacklisted samples, plus the history of the selected batches.

    Belongs to a single run of a strategy.
    """
    def __init__(self, ids):
        self.universe = frozenset(int(i) for i in ids)
        self.labeled = []
        self.unlabeled = set(self.universe)
        self.blacklisted = set()
        self.batch_history = []

    def candidate_ids(self):
        """The IDs that can still be selected, in ascending order."""
        return sorted(self.unlabeled)

    def add_batch(self, ids):
        """Label a batch of samples."""
        ids = [int(i) for i in ids]
        if len(set(ids)) != len(ids):
            raise DatasetError("Batch contains duplicates: {b}".format(b=ids))
        illegal = [i for i in ids if i not in self.unlabeled]
        if illegal:
            raise DatasetError("Samples are not unlabeled: {i}".format(i=illegal))
        self.labeled.extend(ids)
        self.unlabeled.difference_update(ids)
        self.batch_history.append(ids)

    def blacklist(self, ids):
        """Exclude outliers from all future selections."""
        ids = set(int(i) for i in ids)
        illegal = ids - self.unlabeled
        if illegal:
            raise DatasetError("Only unlabeled samples can be blacklisted: {i}"
                               .format(i=sorted(illegal)))
        self.blacklisted.update(ids)
        self.unlabeled.difference_update(ids)

    def validate(self):
        """
        Check the partition invariant.

        Raises
        ------
        DatasetError
        """
        labeled = set(self.labeled)
        if len(labeled) != len(self.labeled):
            raise DatasetError("A sample was labeled twice.")
        if labeled & self.unlabeled or labeled & self.blacklisted \
           or self.unlabeled & self.blacklisted:
            raise DatasetError("Labeled, unlabeled, and blacklisted sets overlap.")
        if labeled | self.unlabeled | self.blacklisted != self.universe:
            raise DatasetError("Labeled, unlabeled, and blacklisted samples "
                               "don't cover the pool.")
        history = [i for batch in self.batch_history for i in batch]
        if history != self.labeled:
            raise DatasetError("Batch history does not match labeled samples.")


def make_label_state(ids):
    """Create a ``LabelState`` where all samples are unlabeled."""
    return LabelState(ids)


# CSV files -------------------------------------------------------------------
def load_csv(path):
    """
    Read a dataset from a CSV file.

    The file must have a header row, and a target column named ``y``.
    An ``id`` column is optional; all other columns are features, in file
    order.

    Raises
    ------
    DatasetError
        Missing file, missing ``y`` column, no feature column, non-numeric
        or non-finite cells, ragged rows.
    """
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except FileNotFoundError as err:
        raise DatasetError("File does not exist: '{p}'".format(p=path)) from err
    except (pd.errors.ParserError, pd.errors.EmptyDataError,
            UnicodeDecodeError) as err:
        raise DatasetError("Can't parse '{p}': {e}".format(p=path, e=err)) from err

    if "y" not in frame.columns:
        raise DatasetError("'{p}' has no target column 'y'.".format(p=path))
    if "id" not in frame.columns:
        frame.insert(0, "id", np.arange(len(frame)))
    feature_names = [c for c in frame.columns if c not in ("id", "y")]
    if not feature_names:
        raise DatasetError("'{p}' has no feature columns.".format(p=path))

    try:
        frame = conform_frame(frame, dataset_descriptor(feature_names))
    except TableError as err:
        raise DatasetError("'{p}': {e}".format(p=path, e=err)) from err
    if frame.isnull().any().any():
        raise DatasetError("'{p}' has empty cells or ragged rows.".format(p=path))

    ds = Dataset(frame[feature_names].values, frame["y"].values,
                 frame["id"].values, feature_names)
    logging.debug("Loaded {ds} from '{p}'.".format(ds=ds, p=path))
    return ds


def save_csv(ds, path):
    """Write a dataset as CSV file: ``id,f0,...,f{d-1},y``."""
    assert isinstance(ds, Dataset)
    write_frame_csv(ds.to_frame(), dataset_descriptor(ds.feature_names), path)


# Pools -----------------------------------------------------------------------
def pool_size(n_samples, fraction):
    """Number of samples in a pool: ``round(fraction * N)``, half up."""
    return int(math.floor(fraction * n_samples + 0.5))


def draw_pool(ds, fraction, seed):
    """
    Draw a random pool: a subset of the dataset without replacement.

    Sampling without replacement never duplicates samples, which a
    bootstrap resample would do.

    Parameters
    ----------
    ds : Dataset
    fraction : float in (0, 1]
    seed : int

    Returns
    -------
    Dataset
        ``round(fraction * N)`` samples in random order.
    """
    return split_pool(ds, fraction, seed)[0]


def split_pool(ds, fraction, seed):
    """
    Split a dataset into a random pool and the held out rest.

    The pool is the same as the one of ``draw_pool`` with the same seed.

    Returns
    -------
    pool : Dataset
    holdout : Dataset or None
        The samples that are not in the pool, in the order of ``ds``.
        ``None`` if the pool contains all samples.
    """
    assert isinstance(ds, Dataset)
    if not 0 < fraction <= 1:
        raise DatasetError("Pool fraction must be in (0, 1]: {f}"
                           .format(f=fraction))
    size = pool_size(ds.n_samples, fraction)
    if size < 1:
        raise DatasetError("Empty pool: fraction {f} of {n} samples."
                           .format(f=fraction, n=ds.n_samples))
    rng = np.random.default_rng(seed)
    perm = rng.permutation(ds.n_samples)
    rest = np.sort(perm[size:])
    holdout = ds.subset(rest) if len(rest) > 0 else None
    return ds.subset(perm[:size]), holdout


# Synthetic subjects ----------------------------------------------------------
class SynthConfig(object):
    """
    Parameters of a synthetic subject.

    The synthetic subjects stand in for EEG recordings: uniform features in
    the unit cube, a noisy linear target, and a few planted outliers far
    away from the data.
    """
    def __init__(self, n_samples=settings.SYNTH_SAMPLES,
                 n_features=settings.SYNTH_FEATURES,
                 noise_sd=settings.SYNTH_NOISE_SD,
                 outlier_fraction=settings.SYNTH_OUTLIER_FRACTION,
                 outlier_scale=settings.SYNTH_OUTLIER_SCALE,
                 seed=settings.MASTER_SEED):
        if n_features < 1 or n_samples < n_features + 2:
            raise DatasetError("Need n_features >= 1 and n_samples >= "
                               "n_features + 2. Got n={n}, d={d}"
                               .format(n=n_samples, d=n_features))
        if not noise_sd >= 0:
            raise DatasetError("noise_sd must be >= 0: {s}".format(s=noise_sd))
        if not 0 <= outlier_fraction < 0.5:
            raise DatasetError("outlier_fraction must be in [0, 0.5): {f}"
                               .format(f=outlier_fraction))
        if not outlier_scale > 1:
            raise DatasetError("outlier_scale must be > 1: {s}"
                               .format(s=outlier_scale))
        self.n_samples = int(n_samples)
        self.n_features = int(n_features)
        self.noise_sd = float(noise_sd)
        self.outlier_fraction = float(outlier_fraction)
        self.outlier_scale = float(outlier_scale)
        self.seed = int(seed)

    def __repr__(self):
        return ("SynthConfig(n_samples={n}, n_features={d}, noise_sd={s}, "
                "outlier_fraction={f}, outlier_scale={o}, seed={r})"
                .format(n=self.n_samples, d=self.n_features, s=self.noise_sd,
                        f=self.outlier_fraction, o=self.outlier_scale,
                        r=self.seed))


SynthMeta = namedtuple("SynthMeta", ["weights", "bias", "outlier_ids"])


def synth_generate(cfg):
    """
    Generate a synthetic subject.

    * Features uniform in ``[0, 1]^d``.
    * Targets ``y = w . x + b + e``, ``e ~ Normal(0, noise_sd)``, then
      scaled to ``[0, 1]``.
    * ``round(outlier_fraction * N)`` rows get new features, far outside
      the unit cube: each one alone, at distance ``outlier_scale * U(1, 2)``
      from the center of the cube in a random direction. Their targets stay
      those of the original features.

    Returns
    -------
    ds : Dataset
    meta : SynthMeta
        The hidden weights and bias (before scaling of the targets) and the
        IDs of the outliers.
    """
    assert isinstance(cfg, SynthConfig)
    rng = np.random.default_rng(cfg.seed)
    n, d = cfg.n_samples, cfg.n_features

    X = rng.uniform(0., 1., (n, d))
    w = rng.normal(0., 1., d)
    b = rng.normal(0., 1.)
    noise = rng.normal(0., cfg.noise_sd, n) if cfg.noise_sd > 0 else np.zeros(n)
    y = X @ w + b + noise
    y_range = y.max() - y.min()
    if y_range > 0:
        y = (y - y.min()) / y_range
    else:
        y = np.zeros(n)

    n_out = pool_size(n, cfg.outlier_fraction)
    outliers = np.sort(rng.choice(n, size=n_out, replace=False))
    # Single far points; k-means++ seeding puts a center on each of them.
    centroid = np.full(d, 0.5)
    for row in outliers:
        direction = rng.normal(0., 1., d)
        direction /= np.linalg.norm(direction)
        distance = cfg.outlier_scale * rng.uniform(1., 2.)
        X[row] = centroid + distance * direction

    ds = Dataset(X, y)
    logging.debug("Synthetic subject: {ds}, {o} outliers.".format(ds=ds, o=n_out))
    return ds, SynthMeta(w, b, [int(i) for i in outliers])


def synth_suite(cfg, n_subjects):
    """
    Generate ``n_subjects`` synthetic subjects.

    Subject ``i`` uses the seed ``derive_seed(cfg.seed, 'subject', i)``.

    Returns
    -------
    list of (name, Dataset, SynthMeta)
        Names are ``subject_<i>``.
    """
    assert isinstance(cfg, SynthConfig)
    if n_subjects < 1:
        raise DatasetError("Need at least one subject: {n}".format(n=n_subjects))
    suite = []
    for i in range(n_subjects):
        sub_cfg = SynthConfig(cfg.n_samples, cfg.n_features, cfg.noise_sd,
                              cfg.outlier_fraction, cfg.outlier_scale,
                              derive_seed(cfg.seed, "subject", i))
        ds, meta = synth_generate(sub_cfg)
        suite.append(("subject_{i}".format(i=i), ds, meta))
    return suite


def meta_frame(suite):
    """
    Table of the hidden parameters of a synthetic suite:
    ``subject,kind,index,value``.
    """
    rows = []
    for name, _, meta in suite:
        for j, wj in enumerate(meta.weights):
            rows.append({"subject": name, "kind": "weight", "index": j, "value": wj})
        rows.append({"subject": name, "kind": "bias", "index": 0, "value": meta.bias})
        for oid in meta.outlier_ids:
            rows.append({"subject": name, "kind": "outlier", "index": oid, "value": 1.})
    frame = pd.DataFrame(rows, columns=SYNTH_META_DESCRIPTOR.column_names)
    return conform_frame(frame, SYNTH_META_DESCRIPTOR)
