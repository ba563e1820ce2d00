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
Configuration files of the command line program.

A configuration file contains lines ``key = value``. Empty lines and text
after ``#`` are ignored. The legal keys are described by the
``FieldDescriptor`` objects below; missing keys get their default values.

Example::

    # Small experiment
    strategies = bl, emcm, eemcm
    runs = 5
    M = 6
"""

import os
import logging

from libalbatch import settings
from libalbatch.coredata import AlbatchError
from libalbatch.descriptors import (
                    StrD, IntD, FloatD, ListD,
                    FieldDescriptor as FD, TableDescriptor)
from libalbatch.strategies import DEFAULT_STRATEGIES



class ConfigError(AlbatchError):
    pass


EXPERIMENT_CONFIG_KEYS = TableDescriptor(
    "experiment-config",
    "Parameters of the command 'run' and 'stats'.",
    [FD("strategies", ListD(StrD), list(DEFAULT_STRATEGIES),
        "Comma separated strategy names."),
     FD("k", IntD, settings.K, "Batch size."),
     FD("M", IntD, settings.M, "Number of batches."),
     FD("pool_fraction", FloatD, settings.POOL_FRACTION,
        "Fraction of each dataset that is drawn as pool."),
     FD("runs", IntD, settings.RUNS, "Number of runs (pools) per subject."),
     FD("master_seed", IntD, settings.MASTER_SEED,
        "Seed of all random streams; overridden by $" + settings.SEED_ENV_VAR + "."),
     FD("sigma", FloatD, settings.SIGMA, "Ridge parameter."),
     FD("gamma", FloatD, settings.GAMMA,
        "Clusters with at most max(1, gamma * N) samples are outliers."),
     FD("P", IntD, settings.COMMITTEE_SIZE, "Committee size."),
     FD("jobs", IntD, settings.JOBS,
        "Number of parallel workers; -1: all CPUs."),
     FD("evaluation", StrD, settings.EVALUATION,
        "Evaluation samples: 'holdout' (outside the pool) or 'rest' "
        "(unlabeled part of the pool)."),
     FD("alpha", FloatD, settings.ALPHA, "Significance level."),
     FD("correction_family", StrD, settings.CORRECTION_FAMILY,
        "FDR correction over each m ('per_m') or the whole table ('table')."),
     FD("sidedness", StrD, settings.SIDEDNESS,
        "'one_sided' or 'two_sided' tests."),
     ])

SYNTH_CONFIG_KEYS = TableDescriptor(
    "synth-config",
    "Parameters of the command 'synth'.",
    [FD("subjects", IntD, settings.SYNTH_SUBJECTS, "Number of subjects."),
     FD("n_samples", IntD, settings.SYNTH_SAMPLES, "Samples per subject."),
     FD("n_features", IntD, settings.SYNTH_FEATURES, "Number of features."),
     FD("noise_sd", FloatD, settings.SYNTH_NOISE_SD,
        "Standard deviation of the target noise."),
     FD("outlier_fraction", FloatD, settings.SYNTH_OUTLIER_FRACTION,
        "Fraction of samples that are outliers."),
     FD("outlier_scale", FloatD, settings.SYNTH_OUTLIER_SCALE,
        "Minimum distance of the outliers from the center of the data."),
     FD("seed", IntD, settings.MASTER_SEED,
        "Seed of the generator; overridden by $" + settings.SEED_ENV_VAR + "."),
     ])

# A config file may contain the keys of both commands.
ALL_CONFIG_KEYS = EXPERIMENT_CONFIG_KEYS + SYNTH_CONFIG_KEYS

_SEED_KEYS = ("master_seed", "seed")


def defaults(descr=ALL_CONFIG_KEYS):
    """Dictionary of the default values."""
    return {fd.name: (list(fd.default_val) if isinstance(fd.default_val, list)
                      else fd.default_val)
            for fd in descr.column_descriptors}


def parse_config(text, descr=ALL_CONFIG_KEYS, source="<string>"):
    """
    Parse the text of a configuration file.

    Returns
    -------
    dict
        All keys of ``descr``; missing keys have their default values.

    Raises
    ------
    ConfigError
        Malformed line, unknown or duplicate key, value of wrong type.
    """
    config = defaults(descr)
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("{s}:{n}: expected 'key = value': '{l}'"
                              .format(s=source, n=lineno, l=line))
        key, value = (part.strip() for part in line.split("=", 1))
        field = descr.get(key)
        if field is None:
            raise ConfigError("{s}:{n}: unknown key '{k}'. Legal keys: {l}"
                              .format(s=source, n=lineno, k=key,
                                      l=", ".join(descr.column_names)))
        if key in seen:
            raise ConfigError("{s}:{n}: duplicate key '{k}'"
                              .format(s=source, n=lineno, k=key))
        seen.add(key)
        try:
            config[key] = field.data_type.parse(value)
        except (ValueError, TypeError) as err:
            raise ConfigError("{s}:{n}: bad value for '{k}': {e}"
                              .format(s=source, n=lineno, k=key, e=err)) from err
    return config


def apply_env_overrides(config, environ=None):
    """Replace the seeds with the value of the environment variable, if set."""
    environ = os.environ if environ is None else environ
    value = environ.get(settings.SEED_ENV_VAR)
    if value is None or value.strip() == "":
        return config
    try:
        seed = IntD.parse(value)
    except ValueError as err:
        raise ConfigError("${v} must be an integer: '{s}'"
                          .format(v=settings.SEED_ENV_VAR, s=value)) from err
    logging.info("Seed from ${v}: {s}".format(v=settings.SEED_ENV_VAR, s=seed))
    for key in _SEED_KEYS:
        if key in config:
            config[key] = seed
    return config


def load_config(path=None, descr=ALL_CONFIG_KEYS, environ=None):
    """
    Read a configuration file; without ``path`` only the defaults are used.
    The seed environment variable is applied.
    """
    if path is None:
        config = defaults(descr)
    else:
        try:
            with open(path, encoding="utf-8") as cfile:
                text = cfile.read()
        except OSError as err:
            raise ConfigError("Can't read config file '{p}': {e}"
                              .format(p=path, e=err)) from err
        config = parse_config(text, descr, path)
    return apply_env_overrides(config, environ)


def describe_keys(descr=ALL_CONFIG_KEYS):
    """Human readable list of the keys, their defaults, and comments."""
    lines = []
    for fd in descr.column_descriptors:
        default = fd.default_val
        if isinstance(default, list):
            default = ",".join(str(d) for d in default)
        lines.append("  {n} = {d}\n      {c}".format(n=fd.name, d=default,
                                                    c=fd.comment))
    return "\n".join(lines)
