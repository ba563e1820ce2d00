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
Test module ``config``: parsing of the ``key = value`` configuration files.
"""

import os

import pytest #contains `skip`, `fail`, `raises`, `config` #IGNORE:W0611



def test_defaults():
    print("Start")
    from libalbatch.config import load_config

    cfg = load_config(None, environ={})
    assert cfg["k"] == 5
    assert cfg["M"] == 12
    assert cfg["pool_fraction"] == 0.8
    assert cfg["runs"] == 30
    assert cfg["sigma"] == 0.01
    assert cfg["gamma"] == 0.02
    assert cfg["strategies"] == ["bl", "qbc", "eqbc", "emcm", "eemcm"]
    assert cfg["subjects"] == 15
    assert cfg["n_samples"] == 360
    assert cfg["correction_family"] == "per_m"
    assert cfg["evaluation"] == "holdout"

    #Defaults are not shared between calls.
    cfg["strategies"].append("foo")
    assert load_config(None, environ={})["strategies"] == \
        ["bl", "qbc", "eqbc", "emcm", "eemcm"]


def test_parse_config():
    print("Start")
    from libalbatch.config import parse_config, ConfigError

    text = """
    # A small experiment
    strategies = bl, eemcm   # two strategies
    runs = 3
    sigma=0.1

    subjects = 2
    """
    cfg = parse_config(text)
    print(cfg)
    assert cfg["strategies"] == ["bl", "eemcm"]
    assert cfg["runs"] == 3
    assert cfg["sigma"] == 0.1
    assert cfg["subjects"] == 2
    assert cfg["M"] == 12

    with pytest.raises(ConfigError):
        parse_config("foo = 1")
    with pytest.raises(ConfigError):
        parse_config("runs = 1\nruns = 2")
    with pytest.raises(ConfigError):
        parse_config("runs 3")
    with pytest.raises(ConfigError):
        parse_config("runs = three")
    with pytest.raises(ConfigError):
        parse_config("k = 2.5")


def test_seed_override(tmpdir):
    "The environment variable overrides both seeds."
    print("Start")
    from libalbatch.config import load_config, ConfigError

    path = os.path.join(str(tmpdir), "test.cfg")
    with open(path, "w", encoding="utf-8") as f:
        f.write("master_seed = 3\nseed = 4\n")

    cfg = load_config(path, environ={})
    assert cfg["master_seed"] == 3
    assert cfg["seed"] == 4
    cfg = load_config(path, environ={"ALBATCH_SEED": "42"})
    assert cfg["master_seed"] == 42
    assert cfg["seed"] == 42

    with pytest.raises(ConfigError):
        load_config(path, environ={"ALBATCH_SEED": "x"})
    with pytest.raises(ConfigError):
        load_config(os.path.join(str(tmpdir), "missing.cfg"), environ={})


def test_describe_keys():
    "The help text documents every key."
    print("Start")
    from libalbatch.config import (describe_keys, EXPERIMENT_CONFIG_KEYS,
                                   SYNTH_CONFIG_KEYS)

    text = describe_keys()
    print(text)
    for name in EXPERIMENT_CONFIG_KEYS.column_names + SYNTH_CONFIG_KEYS.column_names:
        assert "  " + name + " = " in text
    assert "strategies = bl,qbc,eqbc,emcm,eemcm" in text



if __name__ == "__main__":
    test_defaults()
    test_parse_config()
    test_describe_keys()
    pass #IGNORE:W0107
