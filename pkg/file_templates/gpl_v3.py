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
Put module description here.
"""

import logging

import numpy as np
import pandas as pd

from libalbatch import settings
from libalbatch.coredata import AlbatchError


#For test modules: ----------------------------------------------------------
import pytest #contains `skip`, `fail`, `raises`, `config` #IGNORE:W0611

import os.path as path

#Set up logging for useful debug output, and time stamps in UTC.
from libalbatch.settings import setup_logging
setup_logging(logging.DEBUG)



def relative(*path_comps):
    "Create file paths that are relative to the location of this file."
    return path.abspath(path.join(path.dirname(__file__), *path_comps))


def test_xxx():
    print("Start")
    from libalbatch.xxx import yyy



if __name__ == "__main__":
#    test_xxx()

    pass #IGNORE:W0107
