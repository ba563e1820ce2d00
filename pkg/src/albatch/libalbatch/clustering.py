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
k-means clustering. Used by all three enhancements: representative
initialization, outlier detection, and diversity of the batches.
"""

import logging
from collections import namedtuple

import numpy as np
from scipy.spatial.distance import cdist
from sklearn.cluster import kmeans_plusplus

from libalbatch import settings
from libalbatch.coredata import AlbatchError



class ClusteringError(AlbatchError):
    pass


Clustering = namedtuple("Clustering",
                        ["assignments", "centroids", "sizes", "inertia",
                         "n_iter", "inertia_history"])
Clustering.__doc__ = """
Result of k-means clustering.

assignments : array (n,) of int
    Cluster ID of each point.
centroids : array (k, d)
sizes : array (k,) of int
    Number of points in each cluster. Sums to n.
inertia : float
    Sum of squared distances of the points to their assigned centroids.
n_iter : int
    Number of Lloyd iterations.
inertia_history : list of float
    Inertia after each assignment step. Non-increasing.
"""


def _assign(X, centroids):
    """Nearest centroid of each point. Ties go to the lowest cluster ID."""
    dist2 = cdist(X, centroids, "sqeuclidean")
    labels = np.argmin(dist2, axis=1)
    return labels, dist2[np.arange(len(X)), labels]


def kmeans(X, k, seed, max_iter=settings.KMEANS_MAX_ITER, init_centroids=None):
    """
    k-means clustering with Lloyd's algorithm.

    Parameters
    ----------
    X : array (n, d)
        The points.
    k : int
        Number of clusters, ``1 <= k <= n``.
    seed : int
        Seed for the k-means++ initialization.
    max_iter : int
        Maximum number of Lloyd iterations.
    init_centroids : array (k, d) or None
        Start from these centroids instead of k-means++ seeding.

    Returns
    -------
    Clustering

    Notes
    -----
    The iteration stops when the assignments don't change any more.
    A cluster that becomes empty is moved to the point that is farthest
    from its current centroid, so that there are always ``k`` clusters.
    """
    X = np.asarray(X, dtype=np.float64)
    assert X.ndim == 2, "`X` must be a matrix."
    n = X.shape[0]
    if not 1 <= k <= n:
        raise ClusteringError("Need 1 <= k <= n. k = {k}, n = {n}"
                              .format(k=k, n=n))

    if init_centroids is None:
        centroids, _ = kmeans_plusplus(X, n_clusters=k, random_state=seed)
    else:
        centroids = np.array(init_centroids, dtype=np.float64)
        assert centroids.shape == (k, X.shape[1]), "Wrong shape of `init_centroids`."

    labels, dist2 = _assign(X, centroids)
    inertia = dist2.sum()
    history = [inertia]
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        # Update step
        new_centroids = centroids.copy()
        counts = np.bincount(labels, minlength=k)
        for i in range(k):
            if counts[i] > 0:
                new_centroids[i] = X[labels == i].mean(axis=0)
        for i in np.flatnonzero(counts == 0):
            far = int(np.argmax(dist2))
            logging.debug("k-means: empty cluster {i}, moved to point {p}."
                          .format(i=i, p=far))
            new_centroids[i] = X[far]
            dist2[far] = 0.0
        centroids = new_centroids

        # Assignment step
        new_labels, dist2 = _assign(X, centroids)
        new_inertia = dist2.sum()
        assert new_inertia <= inertia * (1 + 1e-12) + 1e-12, \
               "k-means inertia increased: {a} -> {b}".format(a=inertia, b=new_inertia)
        inertia = new_inertia
        history.append(inertia)
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
    else:
        logging.debug("k-means: no convergence after {i} iterations."
                      .format(i=max_iter))

    sizes = np.bincount(labels, minlength=k)
    return Clustering(labels, centroids, sizes, float(inertia), n_iter, history)


def closest_to_centroid(X, clustering, cluster_id):
    """
    Index of the point in cluster ``cluster_id`` that is closest to the
    cluster's centroid. Ties go to the lowest index.

    Raises
    ------
    ClusteringError
        The cluster is empty.
    """
    X = np.asarray(X, dtype=np.float64)
    assert isinstance(clustering, Clustering)
    members = np.flatnonzero(clustering.assignments == cluster_id)
    if len(members) == 0:
        raise ClusteringError("Cluster {c} is empty.".format(c=cluster_id))
    dist2 = cdist(X[members], clustering.centroids[cluster_id:cluster_id + 1],
                  "sqeuclidean")[:, 0]
    return int(members[np.argmin(dist2)])
