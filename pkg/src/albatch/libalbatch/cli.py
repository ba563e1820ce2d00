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
Command line program.

Subcommands:

* ``synth``: create synthetic subjects.
* ``run``: run the active learning experiment, compute learning curves.
* ``stats``: statistical comparison of the strategies.
* ``curves``: learning curves and improvements from a results file.
* ``features``: create a dataset from band powers and response times.

Exit codes: 0 success, 1 internal error, 2 bad input or usage.
"""

import os
import re
import sys
import glob
import logging
import argparse

from libalbatch import settings
from libalbatch.coredata import (AlbatchError, RESULTS_DESCRIPTOR,
                                 CURVES_DESCRIPTOR, SUBJECT_CURVES_DESCRIPTOR,
                                 IMPROVEMENT_DESCRIPTOR, COMPARISON_DESCRIPTOR,
                                 SYNTH_META_DESCRIPTOR)
from libalbatch.config import (load_config, describe_keys,
                               EXPERIMENT_CONFIG_KEYS, SYNTH_CONFIG_KEYS)
from libalbatch.dataframes import read_frame_csv, write_frame_csv
from libalbatch.dataset import (SynthConfig, synth_suite, meta_frame, load_csv,
                                save_csv, DatasetError)
from libalbatch.features import (load_band_powers, load_response_times,
                                 build_features)
from libalbatch.harness import (ExperimentConfig, run_experiment,
                                learning_curves, per_subject_curves,
                                improvement_table)
from libalbatch.stats import comparison_table, comparison_pivot
from libalbatch.strategies import STRATEGY_NAMES


META_FILE = "meta.csv"


def _natural_key(path):
    name = os.path.basename(path)
    return [int(part) if part.isdigit() else part
            for part in re.split(r"(\d+)", name)]


def load_subjects(data_dir):
    """
    Read all datasets in ``data_dir``: every ``*.csv`` file except
    ``meta.csv``, in natural order. The subject names are the file names
    without extension.
    """
    if not os.path.isdir(data_dir):
        raise DatasetError("Data directory does not exist: '{d}'"
                           .format(d=data_dir))
    paths = sorted((p for p in glob.glob(os.path.join(data_dir, "*.csv"))
                    if os.path.basename(p) != META_FILE), key=_natural_key)
    if not paths:
        raise DatasetError("No datasets in '{d}'.".format(d=data_dir))
    return [(os.path.splitext(os.path.basename(p))[0], load_csv(p))
            for p in paths]


def _make_dir(path):
    os.makedirs(path, exist_ok=True)


def cmd_synth(config_path, out_dir):
    """Write ``subject_<i>.csv`` for each synthetic subject and ``meta.csv``."""
    cfg = load_config(config_path)
    synth_cfg = SynthConfig(cfg["n_samples"], cfg["n_features"],
                            cfg["noise_sd"], cfg["outlier_fraction"],
                            cfg["outlier_scale"], cfg["seed"])
    suite = synth_suite(synth_cfg, cfg["subjects"])
    _make_dir(out_dir)
    for name, ds, _ in suite:
        save_csv(ds, os.path.join(out_dir, name + ".csv"))
    write_frame_csv(meta_frame(suite), SYNTH_META_DESCRIPTOR,
                    os.path.join(out_dir, META_FILE))
    logging.info("Wrote {n} synthetic subjects to '{d}'."
                 .format(n=len(suite), d=out_dir))


def _write_curves(results, out_dir):
    curves = learning_curves(results)
    write_frame_csv(curves, CURVES_DESCRIPTOR,
                    os.path.join(out_dir, "curves.csv"))
    write_frame_csv(per_subject_curves(results), SUBJECT_CURVES_DESCRIPTOR,
                    os.path.join(out_dir, "subject_curves.csv"))
    write_frame_csv(improvement_table(curves), IMPROVEMENT_DESCRIPTOR,
                    os.path.join(out_dir, "improvement.csv"))


def cmd_run(config_path, data_dir, out_dir, strategies=None, jobs=None):
    """
    Run the experiment on the datasets in ``data_dir``. Writes
    ``results.csv``, ``curves.csv``, ``subject_curves.csv``, and
    ``improvement.csv``.
    """
    cfg = load_config(config_path)
    if strategies is not None:
        cfg["strategies"] = strategies
    if jobs is not None:
        cfg["jobs"] = jobs
    subjects = load_subjects(data_dir)
    exp_cfg = ExperimentConfig(subjects, cfg["strategies"], cfg["k"], cfg["M"],
                               cfg["pool_fraction"], cfg["runs"],
                               cfg["master_seed"], cfg["sigma"], cfg["gamma"],
                               cfg["P"], cfg["jobs"], cfg["evaluation"])
    results = run_experiment(exp_cfg)
    _make_dir(out_dir)
    write_frame_csv(results, RESULTS_DESCRIPTOR,
                    os.path.join(out_dir, "results.csv"))
    _write_curves(results, out_dir)
    logging.info("Wrote results of {n} subjects to '{d}'."
                 .format(n=len(subjects), d=out_dir))


def cmd_stats(config_path, results_path, out_dir):
    """Write ``comparison_rmse.csv`` and ``comparison_cc.csv``."""
    cfg = load_config(config_path)
    results = read_frame_csv(results_path, RESULTS_DESCRIPTOR)
    _make_dir(out_dir)
    for metric in ("rmse", "cc"):
        table = comparison_table(results, metric, cfg["alpha"],
                                 cfg["correction_family"], cfg["sidedness"])
        write_frame_csv(table, COMPARISON_DESCRIPTOR,
                        os.path.join(out_dir, "comparison_{m}.csv".format(m=metric)))
        logging.info("Adjusted p-values, {m}:\n{t}"
                     .format(m=metric, t=comparison_pivot(table).round(4)))


def cmd_curves(results_path, out_dir):
    """Write learning curves and improvements of an existing results file."""
    results = read_frame_csv(results_path, RESULTS_DESCRIPTOR)
    _make_dir(out_dir)
    _write_curves(results, out_dir)


def cmd_features(powers_path, taus_path, out_path, tau0=settings.TAU0,
                 window=settings.SMOOTH_WINDOW, variance=settings.PCA_VARIANCE):
    """Write the dataset of a subject, computed from its recordings."""
    ds = build_features(load_band_powers(powers_path),
                        load_response_times(taus_path), tau0, window, variance)
    out_dir = os.path.dirname(out_path)
    if out_dir:
        _make_dir(out_dir)
    save_csv(ds, out_path)


def _strategy_list(text):
    names = [n.strip().lower() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in STRATEGY_NAMES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            "unknown strategies {u}; choose from: {c}"
            .format(u=unknown, c=", ".join(STRATEGY_NAMES)))
    return names


def make_parser():
    parser = argparse.ArgumentParser(
        prog="albatch",
        description="Batch-mode active learning for regression: "
                    "experiments and statistics.")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="print debug messages")
    parser.add_argument("-q", "--quiet", action="store_true",
                        help="print only warnings and errors")
    subparsers = parser.add_subparsers(dest="command", required=True)
    formatter = argparse.RawDescriptionHelpFormatter

    p_synth = subparsers.add_parser(
        "synth", formatter_class=formatter,
        help="create synthetic subjects",
        epilog="config keys:\n" + describe_keys(SYNTH_CONFIG_KEYS))
    p_synth.add_argument("--config", help="configuration file")
    p_synth.add_argument("out_dir", metavar="OUT_DIR")
    p_synth.set_defaults(func=lambda a: cmd_synth(a.config, a.out_dir))

    p_run = subparsers.add_parser(
        "run", formatter_class=formatter,
        help="run the active learning experiment",
        epilog="config keys:\n" + describe_keys(EXPERIMENT_CONFIG_KEYS))
    p_run.add_argument("--config", help="configuration file")
    p_run.add_argument("--strategies", type=_strategy_list,
                       help="comma separated list, from: "
                            + ", ".join(STRATEGY_NAMES))
    p_run.add_argument("--jobs", type=int, help="number of parallel workers")
    p_run.add_argument("data_dir", metavar="DATA_DIR")
    p_run.add_argument("out_dir", metavar="OUT_DIR")
    p_run.set_defaults(func=lambda a: cmd_run(a.config, a.data_dir, a.out_dir,
                                              a.strategies, a.jobs))

    p_stats = subparsers.add_parser(
        "stats", formatter_class=formatter,
        help="compare the strategies with Dunn's test and FDR correction",
        epilog="config keys:\n" + describe_keys(EXPERIMENT_CONFIG_KEYS))
    p_stats.add_argument("--config", help="configuration file")
    p_stats.add_argument("results", metavar="RESULTS_CSV")
    p_stats.add_argument("out_dir", metavar="OUT_DIR")
    p_stats.set_defaults(func=lambda a: cmd_stats(a.config, a.results, a.out_dir))

    p_curves = subparsers.add_parser(
        "curves", help="learning curves and improvements from a results file")
    p_curves.add_argument("results", metavar="RESULTS_CSV")
    p_curves.add_argument("out_dir", metavar="OUT_DIR")
    p_curves.set_defaults(func=lambda a: cmd_curves(a.results, a.out_dir))

    p_feat = subparsers.add_parser(
        "features", help="dataset from band powers and response times")
    p_feat.add_argument("--tau0", type=float, default=settings.TAU0,
                        help="offset of the drowsiness index in seconds")
    p_feat.add_argument("--window", type=int, default=settings.SMOOTH_WINDOW,
                        help="moving average window in samples")
    p_feat.add_argument("--variance", type=float, default=settings.PCA_VARIANCE,
                        help="fraction of variance kept by the PCA")
    p_feat.add_argument("powers", metavar="BAND_POWERS_CSV")
    p_feat.add_argument("taus", metavar="RESPONSE_TIMES_CSV")
    p_feat.add_argument("out", metavar="OUT_CSV")
    p_feat.set_defaults(func=lambda a: cmd_features(a.powers, a.taus, a.out,
                                                    a.tau0, a.window,
                                                    a.variance))
    return parser


def main(argv=None):
    """Run the program; returns the exit code."""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if args.verbose:
        settings.setup_logging(logging.DEBUG)
    elif args.quiet:
        settings.setup_logging(logging.WARNING)
    else:
        settings.setup_logging(logging.INFO)

    try:
        args.func(args)
    except (AlbatchError, OSError) as err:
        logging.error(str(err))
        return 2
    except Exception:
        logging.exception("Internal error.")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
