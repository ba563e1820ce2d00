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
Settings for the Albatch library and its command line program.

The default values reproduce the evaluation protocol: batches of 5 samples,
12 batches, 80% pools, 30 runs, ridge parameter 0.01.
"""

import time
import logging


# Active learning protocol ----------------------------------------------------
K = 5                       # batch size, also number of k-means clusters
M = 12                      # number of batches
POOL_FRACTION = 0.8
RUNS = 30
SIGMA = 0.01                # ridge parameter
GAMMA = 0.02                # outlier threshold is max(1, GAMMA * N)
COMMITTEE_SIZE = 4          # P, number of bootstrap models
MASTER_SEED = 0
JOBS = 1
EVALUATION = "holdout"      # evaluate on the samples outside the pool; or "rest"

# Feature extraction ----------------------------------------------------------
TAU0 = 1.0                  # s, offset of the drowsiness index
SAMPLE_PERIOD = 10.0        # s, one sample every 10 seconds
SMOOTH_SECONDS = 90.0        # s, moving average of the drowsiness index
SMOOTH_WINDOW = int(round(SMOOTH_SECONDS / SAMPLE_PERIOD))   # samples
DB_REJECT_LEVEL = 20.0      # dB, channels above this are bad
PCA_VARIANCE = 0.95

# Numerics --------------------------------------------------------------------
KMEANS_MAX_ITER = 100
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-10
BOOTSTRAP_ATTEMPTS = 10

# Statistics ------------------------------------------------------------------
ALPHA = 0.05
CORRECTION_FAMILY = "per_m"
SIDEDNESS = "one_sided"

# Synthetic data --------------------------------------------------------------
SYNTH_SUBJECTS = 15
SYNTH_SAMPLES = 360
SYNTH_FEATURES = 10
SYNTH_NOISE_SD = 0.05
SYNTH_OUTLIER_FRACTION = 0.02
SYNTH_OUTLIER_SCALE = 12.0

# Environment variable that overrides the master seed.
SEED_ENV_VAR = "ALBATCH_SEED"

LOG_FORMAT = "%(asctime)s: %(levelname)s: %(message)s"


def setup_logging(level=logging.INFO):
    """Configure logging to print nice messages to stderr, in UTC."""
    logging.basicConfig(format=LOG_FORMAT, level=level)
    logging.getLogger().setLevel(level)
    #Time stamps must be in UTC
    logging.Formatter.converter = time.gmtime
