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
Test module ``harness``: evaluation protocol and learning curves.
"""

import pytest #contains `skip`, `fail`, `raises`, `config` #IGNORE:W0611
import numpy as np
import pandas as pd

#Set up logging for useful debug output, and time stamps in UTC.
import logging
from libalbatch.settings import setup_logging
setup_logging(logging.DEBUG)



def small_subjects(n_subjects=2, n_samples=40, seed=1):
    from libalbatch.dataset import SynthConfig, synth_suite

    cfg = SynthConfig(n_samples=n_samples, n_features=3, seed=seed)
    return [(name, ds) for name, ds, _ in synth_suite(cfg, n_subjects)]


def results_frame(rows):
    """Results table from tuples ``(subject, strategy, run, m, rmse, cc)``."""
    from libalbatch.coredata import RESULTS_DESCRIPTOR
    from libalbatch.dataframes import conform_frame

    frame = pd.DataFrame(rows, columns=["subject", "strategy", "run", "m",
                                        "rmse", "cc"])
    return conform_frame(frame, RESULTS_DESCRIPTOR)


def test_ExperimentConfig():
    print("Start")
    from libalbatch.harness import ExperimentConfig, HarnessError

    subjects = small_subjects()
    cfg = ExperimentConfig(subjects, ["bl", "eemcm"], k=2, M=3, runs=2)
    assert cfg.strategy_names == ["bl", "eemcm"]
    assert cfg.subject_names == ["subject_0", "subject_1"]
    assert cfg.strategies[1].k == 2

    #Pool of 32 samples
    ExperimentConfig(subjects, ["bl"], k=4, M=8)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl"], k=5, M=7)
    with pytest.raises(HarnessError):
        ExperimentConfig([], ["bl"])
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, [], k=2, M=2)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl", "bl"], k=2, M=2)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl"], k=2, M=2, runs=0)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl"], k=2, M=2, pool_fraction=1.5)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects + subjects[:1], ["bl"], k=2, M=2)
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl"], k=2, M=2, evaluation="train")

    #Nothing is held out from a pool of all samples.
    with pytest.raises(HarnessError):
        ExperimentConfig(subjects, ["bl"], k=2, M=2, pool_fraction=1.)
    cfg = ExperimentConfig(subjects, ["bl"], k=2, M=2, pool_fraction=1.,
                           evaluation="rest")
    assert cfg.evaluation == "rest"


def test_run_experiment():
    print("Start")
    from libalbatch.coredata import RESULTS_DESCRIPTOR
    from libalbatch.harness import ExperimentConfig, run_experiment

    cfg = ExperimentConfig(small_subjects(), ["bl", "qbc", "eemcm"], k=3, M=3,
                           runs=2)
    rt = run_experiment(cfg)
    print(rt)
    assert list(rt.columns) == RESULTS_DESCRIPTOR.column_names
    assert len(rt) == 2 * 2 * 3 * 3
    assert list(rt["subject"].unique()) == ["subject_0", "subject_1"]
    assert list(rt["strategy"].unique()) == ["bl", "qbc", "eemcm"]
    assert list(rt["m"][:3]) == [1, 2, 3]
    assert np.all(rt["rmse"] >= 0)
    assert np.all(np.abs(rt["cc"]) <= 1)

    #The first batch is shared, so the first models are identical.
    first = rt[rt["m"] == 1].set_index(["subject", "run", "strategy"])["rmse"]
    for subject in ("subject_0", "subject_1"):
        for run in (0, 1):
            assert first[(subject, run, "bl")] == first[(subject, run, "qbc")]


def test_run_experiment_deterministic(tmpdir):
    "Identical CSV files from identical configurations, also in parallel."
    print("Start")
    from joblib import parallel_backend
    from libalbatch.coredata import RESULTS_DESCRIPTOR
    from libalbatch.dataframes import write_frame_csv
    from libalbatch.harness import ExperimentConfig, run_experiment

    def make_config(jobs):
        return ExperimentConfig(small_subjects(), ["bl", "emcm", "eqbc"], k=2,
                                M=3, runs=2, master_seed=11, jobs=jobs)

    rt1 = run_experiment(make_config(1))
    rt2 = run_experiment(make_config(1))
    path1, path2 = str(tmpdir.join("r1.csv")), str(tmpdir.join("r2.csv"))
    write_frame_csv(rt1, RESULTS_DESCRIPTOR, path1)
    write_frame_csv(rt2, RESULTS_DESCRIPTOR, path2)
    with open(path1, "rb") as f1, open(path2, "rb") as f2:
        assert f1.read() == f2.read()

    with parallel_backend("threading"):
        rt3 = run_experiment(make_config(2))
    pd.testing.assert_frame_equal(rt1, rt3)

    #Another master seed gives other results.
    cfg = make_config(1)
    cfg.master_seed = 12
    assert not rt1["rmse"].equals(run_experiment(cfg)["rmse"])


def test_evaluate_train_only(caplog):
    "The pool of 20 samples is exhausted by the last batch."
    print("Start")
    from libalbatch.coredata import RESULTS_DESCRIPTOR
    from libalbatch.harness import ExperimentConfig, run_experiment

    cfg = ExperimentConfig(small_subjects(1, 25), ["bl", "qbc"], k=5, M=4,
                           runs=1, evaluation="rest")
    with caplog.at_level(logging.WARNING):
        rt = run_experiment(cfg)
    assert len(rt) == 8
    assert list(rt.columns) == RESULTS_DESCRIPTOR.column_names
    flagged = [r.getMessage() for r in caplog.records
               if "evaluated on its training data" in r.getMessage()]
    print(flagged)
    assert len(flagged) == 2
    assert all("batch 4" in msg for msg in flagged)


def test_evaluate_batches_holdout():
    "All models are evaluated on the samples outside the pool."
    print("Start")
    from libalbatch.dataset import split_pool
    from libalbatch.regression import predict, rmse
    from libalbatch.strategies import run_strategy, strategy_from_name
    from libalbatch.harness import evaluate_batches

    (_, ds), = small_subjects(1, 40)
    pool, holdout = split_pool(ds, 0.8, seed=3)
    assert len(holdout) == 8
    run = run_strategy(pool, strategy_from_name("emcm", k=4), M=3, seed=1)
    rows = evaluate_batches(pool, run, 3, holdout)
    for row, model in zip(rows, run.models):
        assert not row["train_only"]
        assert row["rmse"] == rmse(holdout.targets,
                                   predict(model, holdout.features))

    #The pool is exhausted, the held out samples are still there.
    pool = pool.subset(range(6))
    run = run_strategy(pool, strategy_from_name("bl", k=4), M=3, seed=1)
    rows = evaluate_batches(pool, run, 3, holdout)
    assert [r["train_only"] for r in rows] == [False, False, False]
    assert rows[1]["rmse"] == rows[2]["rmse"]


def test_evaluate_batches():
    print("Start")
    from libalbatch.dataset import Dataset
    from libalbatch.strategies import run_strategy, strategy_from_name
    from libalbatch.harness import evaluate_batches

    rng = np.random.default_rng(0)
    pool = Dataset(rng.uniform(size=(12, 2)), rng.uniform(size=12))
    run = run_strategy(pool, strategy_from_name("bl"), M=4, seed=0)
    rows = evaluate_batches(pool, run, 4)
    assert [r["m"] for r in rows] == [1, 2, 3, 4]
    #Batch 3 exhausts the pool, batch 4 repeats it.
    assert [r["train_only"] for r in rows] == [False, False, True, True]
    assert rows[2]["rmse"] == rows[3]["rmse"]
    #Two samples remain for the evaluation of batch 2.
    assert not rows[1]["cc_flag"]
    np.testing.assert_allclose(abs(rows[1]["cc"]), 1.)


def test_learning_curves():
    "Mean over runs per subject, then mean and SD over subjects."
    print("Start")
    from libalbatch.coredata import CURVES_DESCRIPTOR
    from libalbatch.harness import learning_curves, per_subject_curves

    rt = results_frame([("s1", "A", 0, 1, 1., 0.5), ("s1", "A", 1, 1, 3., 0.5),
                        ("s2", "A", 0, 1, 5., 0.1), ("s2", "A", 1, 1, 5., 0.3),
                        ("s1", "B", 0, 1, 2., 0.4), ("s1", "B", 1, 1, 2., 0.4),
                        ("s2", "B", 0, 1, 2., 0.4), ("s2", "B", 1, 1, 2., 0.4)])
    sc = per_subject_curves(rt)
    row = sc[(sc["subject"] == "s1") & (sc["strategy"] == "A") &
             (sc["metric"] == "rmse")].iloc[0]
    assert row["mean"] == 2. and row["sd"] == 1.

    curves = learning_curves(rt)
    print(curves)
    assert list(curves.columns) == CURVES_DESCRIPTOR.column_names
    assert list(curves["strategy"]) == ["A", "A", "B", "B"]
    assert list(curves["metric"]) == ["rmse", "cc", "rmse", "cc"]
    np.testing.assert_allclose(curves["mean"], [3.5, 0.35, 2., 0.4])
    np.testing.assert_allclose(curves["sd"], [1.5, 0.15, 0., 0.], atol=1e-15)


def test_pct_improvement():
    print("Start")
    from libalbatch.harness import pct_improvement, HarnessError

    values, flags = pct_improvement([0.8, 1.], [1., 1.], "rmse")
    np.testing.assert_allclose(values, [20., 0.])
    assert not flags.any()
    values, flags = pct_improvement([0.6, 0.2], [0.5, -0.4], "cc")
    np.testing.assert_allclose(values, [20., 150.])
    values, flags = pct_improvement([0.6, 0.2], [0., 0.5], "cc")
    assert list(flags) == [True, False]
    assert np.isnan(values[0])
    np.testing.assert_allclose(values[1], -60.)

    with pytest.raises(HarnessError):
        pct_improvement([1.], [1., 2.], "rmse")
    with pytest.raises(HarnessError):
        pct_improvement([1.], [1.], "mae")


def test_improvement_table():
    print("Start")
    from libalbatch.coredata import IMPROVEMENT_DESCRIPTOR
    from libalbatch.harness import (improvement_table, learning_curves,
                                    pair_label)

    assert pair_label("eemcm", "bl") == "EEMCM/BL"
    rt = results_frame([("s1", "bl", 0, 1, 1., 0.5), ("s1", "bl", 0, 2, 1., 0.5),
                        ("s1", "qbc", 0, 1, 1., 0.5), ("s1", "qbc", 0, 2, .5, 0.6)])
    table = improvement_table(learning_curves(rt))
    print(table)
    assert list(table.columns) == IMPROVEMENT_DESCRIPTOR.column_names
    #Only QBC/BL is present.
    assert set(table["pair"]) == {"QBC/BL"}
    assert len(table) == 4
    rmse = table[table["metric"] == "rmse"]
    np.testing.assert_allclose(rmse["value"], [0., 50.])
    cc = table[table["metric"] == "cc"]
    np.testing.assert_allclose(cc["value"], [0., 20.])
    assert not table["flag"].any()


@pytest.mark.slow
def test_default_benchmark():
    "The default synthetic benchmark: enhancements help, most at small m."
    print("Start")
    from libalbatch import settings
    from libalbatch.dataset import SynthConfig, synth_suite
    from libalbatch.harness import ExperimentConfig, run_experiment, learning_curves
    from libalbatch.stats import comparison_table

    suite = synth_suite(SynthConfig(), settings.SYNTH_SUBJECTS)
    cfg = ExperimentConfig([(name, ds) for name, ds, _ in suite],
                           ["bl", "qbc", "eqbc", "emcm", "eemcm",
                            "eemcm1", "eemcm2", "eemcm3"], jobs=-1)
    rt = run_experiment(cfg)
    assert len(rt) == 15 * 30 * 8 * 12
    curves = learning_curves(rt)
    rmse = curves[curves["metric"] == "rmse"].set_index(["strategy", "m"])["mean"]
    for name in cfg.strategy_names:
        assert rmse[(name, 12)] < rmse[(name, 1)]

    #The enhancements help most when few samples are labeled.
    for m in (1, 2, 3):
        assert rmse[("eemcm", m)] < rmse[("emcm", m)]
    assert rmse[("eemcm1", 1)] < rmse[("emcm", 1)]
    for ablation in ("eemcm1", "eemcm2", "eemcm3"):
        assert rmse[("eemcm", 12)] < rmse[(ablation, 12)]

    table = comparison_table(rt, "rmse")
    p_adj = table[table["m"] == 1].set_index("pair")["p_adj"]
    print(p_adj)
    assert p_adj["EEMCM vs BL"] < 0.05
    #Identical first batches: no difference between QBC and BL.
    assert 0.3 <= p_adj["QBC vs BL"] <= 0.7



if __name__ == "__main__":
    test_run_experiment()
    test_learning_curves()
    test_pct_improvement()
    pass #IGNORE:W0107
