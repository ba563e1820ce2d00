#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Launcher of the Albatch command line program.

    ./albatch.py synth data/
    ./albatch.py run data/ out/
    ./albatch.py stats out/results.csv out/
"""

import sys

from libalbatch.cli import main


if __name__ == "__main__":
    sys.exit(main())
