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
Feature extraction for drowsiness estimation.

Targets: response times to lane-departure events are mapped to a drowsiness
index in ``[0, 1]``, then smoothed with a trailing moving average.

Features: theta band powers of the EEG channels are converted to dB, bad
channels are removed, the remaining channels are normalized, and the leading
principal components are scaled to ``[0, 1]``.

Input files
-----------

* Band powers: ``epoch,ch_<name>,...``, one row per sample point,
  powers in linear units.
* Response times: ``epoch,tau``, the response time in seconds.
"""

import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from libalbatch import settings
from libalbatch.coredata import AlbatchError, TableError, RESPONSE_TIME_DESCRIPTOR
from libalbatch.dataframes import read_frame_csv
from libalbatch.dataset import Dataset
from libalbatch.linalg import sym_eig



class FeatureError(AlbatchError):
    pass


# Drowsiness index ------------------------------------------------------------
DrowsinessRecord = namedtuple("DrowsinessRecord", ["tau", "tau0", "y"])


def drowsiness_index(tau, tau0=settings.TAU0):
    """
    Map the response time ``tau`` to a drowsiness index::

        y = max(0, (1 - exp(-(tau - tau0))) / (1 + exp(-(tau - tau0))))

    The fraction equals ``tanh((tau - tau0) / 2)``. Works on scalars and on
    arrays.

    Raises
    ------
    FeatureError
        ``tau`` is negative or not finite.
    """
    tau_arr = np.asarray(tau, dtype=np.float64)
    if not np.all(np.isfinite(tau_arr)):
        raise FeatureError("Response time must be finite: {t}".format(t=tau))
    if np.any(tau_arr < 0):
        raise FeatureError("Response time must be >= 0: {t}".format(t=tau))
    y = np.maximum(0., np.tanh((tau_arr - tau0) / 2.))
    if y.ndim == 0:
        return float(y)
    return y


def drowsiness_record(tau, tau0=settings.TAU0):
    """
    Response times and their drowsiness indices. ``tau`` is a scalar or a
    vector, ``y`` has the same shape.
    """
    tau_arr = np.asarray(tau, dtype=np.float64)
    tau_out = float(tau_arr) if tau_arr.ndim == 0 else tau_arr
    return DrowsinessRecord(tau_out, float(tau0), drowsiness_index(tau_arr, tau0))


def moving_average(series, window=settings.SMOOTH_WINDOW):
    """
    Trailing moving average with a square window.

    The first ``window - 1`` outputs average over the available history,
    therefore the output has the same length as the input.
    """
    series = np.asarray(series, dtype=np.float64)
    if series.ndim != 1 or len(series) == 0:
        raise FeatureError("Moving average needs a non-empty vector.")
    if not 1 <= window <= len(series):
        raise FeatureError("Window must be in [1, {n}]: {w}"
                           .format(n=len(series), w=window))
    return pd.Series(series).rolling(window, min_periods=1).mean().values


# Band powers -----------------------------------------------------------------
class BandPowerTable(object):
    """
    Theta band powers: one row per sample point (epoch), one column per
    EEG channel. Powers are in linear units, positive and finite.
    """
    def __init__(self, epochs, powers, channel_names):
        powers = np.array(powers, dtype=np.float64)
        epochs = np.array(epochs, dtype=np.int64)
        if powers.ndim != 2 or powers.shape[1] < 1:
            raise FeatureError("Band powers must be a matrix with at least one "
                               "channel. Shape: {s}".format(s=powers.shape))
        if len(epochs) != powers.shape[0] or len(channel_names) != powers.shape[1]:
            raise FeatureError("Band power table: inconsistent dimensions.")
        if not np.all(np.isfinite(powers)) or np.any(powers <= 0):
            raise FeatureError("Band powers must be positive and finite.")
        self.epochs = epochs
        self.powers = powers
        self.channel_names = list(channel_names)

    def __repr__(self):
        return "BandPowerTable(epochs={e}, channels={c})".format(
            e=len(self.epochs), c=self.channel_names)


def load_band_powers(path):
    """
    Read band powers from a CSV file with header ``epoch,ch_<name>,...``.
    """
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except FileNotFoundError as err:
        raise FeatureError("File does not exist: '{p}'".format(p=path)) from err
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise FeatureError("Can't parse '{p}': {e}".format(p=path, e=err)) from err

    if "epoch" not in frame.columns:
        raise FeatureError("'{p}' has no column 'epoch'.".format(p=path))
    channel_cols = [c for c in frame.columns if c.startswith("ch_")]
    other_cols = set(frame.columns) - set(channel_cols) - {"epoch"}
    if other_cols:
        logging.warning("'{p}': ignoring columns {c}."
                        .format(p=path, c=sorted(other_cols)))
    try:
        powers = frame[channel_cols].apply(pd.to_numeric, errors="raise").values
        epochs = pd.to_numeric(frame["epoch"], errors="raise").values
    except (ValueError, TypeError) as err:
        raise FeatureError("'{p}': non-numeric value: {e}"
                           .format(p=path, e=err)) from err
    names = [c[len("ch_"):] for c in channel_cols]
    return BandPowerTable(epochs, powers, names)


def load_response_times(path):
    """Read response times: ``DataFrame`` with columns ``epoch, tau``."""
    try:
        frame = read_frame_csv(path, RESPONSE_TIME_DESCRIPTOR)
    except TableError as err:
        raise FeatureError(str(err)) from err
    if frame.isnull().any().any():
        raise FeatureError("'{p}' has empty cells.".format(p=path))
    return frame


def to_db(powers):
    """Convert powers to dB: ``10 * log10(power)``."""
    if isinstance(powers, BandPowerTable):
        powers = powers.powers
    powers = np.asarray(powers, dtype=np.float64)
    if np.any(powers <= 0) or not np.all(np.isfinite(powers)):
        raise FeatureError("Powers must be positive and finite.")
    return 10. * np.log10(powers)


def reject_channels(db, channel_names=None, level=settings.DB_REJECT_LEVEL):
    """
    Remove bad channels: every column whose maximum is above ``level`` dB.

    Returns
    -------
    kept : array (n, n_kept)
        Surviving columns, in their original order.
    rejected : list
        Names (or column indices, if no names are given) of the removed
        channels.
    """
    db = np.asarray(db, dtype=np.float64)
    if db.ndim != 2 or db.shape[1] < 1:
        raise FeatureError("Need a matrix with at least one channel.")
    if channel_names is None:
        channel_names = list(range(db.shape[1]))
    assert len(channel_names) == db.shape[1]

    bad = db.max(axis=0) > level
    rejected = [name for name, b in zip(channel_names, bad) if b]
    if np.all(bad):
        raise FeatureError("All channels rejected, maximum above {l} dB."
                           .format(l=level))
    if rejected:
        logging.info("Rejected channels: {r}".format(r=rejected))
    return db[:, ~bad], rejected


def zscore_columns(X):
    """
    Normalize each column to mean 0 and standard deviation 1
    (population standard deviation).

    Returns
    -------
    Z : array
    mean : array
    sd : array
    """
    X = np.asarray(X, dtype=np.float64)
    assert X.ndim == 2, "`X` must be a matrix."
    mean = X.mean(axis=0)
    sd = X.std(axis=0)
    if np.any(sd == 0):
        raise FeatureError("Constant columns: {c}"
                           .format(c=list(np.flatnonzero(sd == 0))))
    return (X - mean) / sd, mean, sd


# PCA -------------------------------------------------------------------------
class PcaModel(object):
    """
    Principal components of a data matrix.

    Attributes
    ----------
    mean : array (d,)
    components : array (d, q)
        Orthonormal columns, sorted by descending eigenvalue.
    explained_variance : array (q,)
    variance_ratio_kept : float
        Fraction of the total variance retained by the ``q`` components.
    """
    def __init__(self, mean, components, explained_variance, variance_ratio_kept):
        self.mean = np.asarray(mean, dtype=np.float64)
        self.components = np.asarray(components, dtype=np.float64)
        self.explained_variance = np.asarray(explained_variance, dtype=np.float64)
        self.variance_ratio_kept = float(variance_ratio_kept)
        assert self.components.shape == (len(self.mean), len(self.explained_variance))

    @property
    def n_components(self):
        return self.components.shape[1]

    def transform(self, Z):
        """Scores: ``(Z - mean) . components``."""
        Z = np.asarray(Z, dtype=np.float64)
        if Z.ndim != 2 or Z.shape[1] != len(self.mean):
            raise FeatureError("Need {d} columns, got shape {s}."
                               .format(d=len(self.mean), s=Z.shape))
        return (Z - self.mean) @ self.components

    def inverse_transform(self, scores):
        """Back-projection of scores into the original space."""
        scores = np.asarray(scores, dtype=np.float64)
        return scores @ self.components.T + self.mean

    def __repr__(self):
        return "PcaModel(q={q}, variance_ratio_kept={r:.4f})".format(
            q=self.n_components, r=self.variance_ratio_kept)


def pca_fit(Z, variance_threshold=settings.PCA_VARIANCE):
    """
    Principal component analysis by eigendecomposition of the covariance
    matrix of the columns.

    Keeps the smallest number of components whose cumulative explained
    variance ratio reaches ``variance_threshold``. The sign of each component
    is chosen so that its entry with the largest magnitude is positive.
    """
    Z = np.asarray(Z, dtype=np.float64)
    if Z.ndim != 2 or not Z.shape[0] > Z.shape[1] >= 1:
        raise FeatureError("PCA needs more rows than columns. Shape: {s}"
                           .format(s=Z.shape))
    if not 0 < variance_threshold <= 1:
        raise FeatureError("Variance threshold must be in (0, 1]: {t}"
                           .format(t=variance_threshold))

    mean = Z.mean(axis=0)
    cov = np.atleast_2d(np.cov(Z, rowvar=False))
    eigenvalues, eigenvectors = sym_eig(cov)
    eigenvalues = np.maximum(eigenvalues, 0.)
    total = eigenvalues.sum()
    if total <= 0:
        raise FeatureError("Data has zero variance.")

    ratios = np.cumsum(eigenvalues) / total
    q = int(np.argmax(ratios >= variance_threshold - 1e-12)) + 1
    components = eigenvectors[:, :q].copy()
    for j in range(q):
        if components[np.argmax(np.abs(components[:, j])), j] < 0:
            components[:, j] *= -1
    logging.debug("PCA: {q} of {d} components, {r:.4f} of the variance."
                  .format(q=q, d=Z.shape[1], r=ratios[q - 1]))
    return PcaModel(mean, components, eigenvalues[:q], min(ratios[q - 1], 1.))


def minmax_scale(scores):
    """
    Scale each column to ``[0, 1]``.

    Returns
    -------
    scaled : array
    lo, hi : array
        Minimum and maximum of each column.
    """
    scores = np.asarray(scores, dtype=np.float64)
    lo = scores.min(axis=0)
    hi = scores.max(axis=0)
    if np.any(hi - lo <= 0):
        raise FeatureError("Columns with zero range: {c}"
                           .format(c=list(np.flatnonzero(hi - lo <= 0))))
    scaled = np.clip((scores - lo) / (hi - lo), 0., 1.)
    return scaled, lo, hi


def project_and_scale(model, Z):
    """
    Project onto the principal components, then scale every score column
    to ``[0, 1]`` with the minimum and maximum over all rows of ``Z``.
    """
    assert isinstance(model, PcaModel)
    scaled, _, _ = minmax_scale(model.transform(Z))
    return scaled


# Pipeline --------------------------------------------------------------------
def build_features(powers, taus, tau0=settings.TAU0,
                   window=settings.SMOOTH_WINDOW,
                   variance=settings.PCA_VARIANCE,
                   reject_level=settings.DB_REJECT_LEVEL):
    """
    Create the dataset of a subject from band powers and response times.

    Parameters
    ----------
    powers : BandPowerTable
    taus : pandas.DataFrame
        Columns ``epoch, tau``.

    Returns
    -------
    Dataset
        Sample IDs are the epoch numbers; features ``f0 ... f{q-1}`` are the
        scaled principal component scores; targets are the smoothed
        drowsiness indices.
    """
    assert isinstance(powers, BandPowerTable)
    assert isinstance(taus, pd.DataFrame)

    power_frame = pd.DataFrame(powers.powers, columns=powers.channel_names)
    power_frame.insert(0, "epoch", powers.epochs)
    joined = pd.merge(power_frame, taus[["epoch", "tau"]], on="epoch",
                      how="inner").sort_values("epoch")
    if len(joined) == 0:
        raise FeatureError("Band powers and response times have no common epoch.")
    if len(joined) < len(power_frame) or len(joined) < len(taus):
        logging.warning("Only {n} epochs in both band powers and response times."
                        .format(n=len(joined)))

    record = drowsiness_record(joined["tau"].values, tau0)
    logging.debug("Drowsiness index > 0 in {n} of {t} epochs."
                  .format(n=int(np.sum(record.y > 0)), t=len(record.y)))
    y = moving_average(record.y, min(window, len(joined)))
    db = to_db(joined[powers.channel_names].values)
    kept, _ = reject_channels(db, powers.channel_names, reject_level)
    Z, _, _ = zscore_columns(kept)
    model = pca_fit(Z, variance)
    X = project_and_scale(model, Z)
    logging.info("Features: {n} samples, {q} principal components."
                 .format(n=X.shape[0], q=X.shape[1]))
    return Dataset(X, y, joined["epoch"].values)
