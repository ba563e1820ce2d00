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
Functions that create ``pandas.DataFrame`` objects, and read and write them
as CSV files.

All tables of the program (datasets, results, learning curves, comparison
tables) are described by ``descriptors.TableDescriptor`` objects in module
``coredata``. The functions here make sure that the files on disk have
exactly the described columns, in the described order.
"""

import os
import logging

import numpy as np
import pandas as pd

from libalbatch import descriptors
from libalbatch.coredata import TableError


# Enough digits for an exact round trip of ``float64`` values.
FLOAT_FORMAT = "%.17g"


def _dtype_of(data_type):
    """The numpy data type used to store a column of the given type."""
    if data_type == descriptors.BoolD:
        return bool
    elif data_type == descriptors.IntD:
        return np.int64
    elif data_type == descriptors.FloatD:
        return np.float64
    else:
        return object


def _make_index(nrows, index):
    assert nrows is not None or index is not None, \
           "Give `nrows` or `index`."
    if index is None:
        return pd.RangeIndex(nrows)
    assert nrows is None or nrows == len(index), \
           "`nrows` and `index` disagree: {n} != {i}".format(n=nrows, i=len(index))
    return pd.Index(index)


def make_data_series(descr, nrows=None, index=None):
    """
    Create a ``pandas.Series`` for the field ``descr``, filled with its
    default value. Required float fields are filled with ``nan``; required
    integer, boolean and string fields are ``None`` (``object`` dtype).

    Parameters
    ----------
    descr : descriptors.FieldDescriptor
    nrows : int
    index : list, pandas.Index
        Default: ``0 ... nrows-1``.
    """
    assert isinstance(descr, descriptors.FieldDescriptor)
    index = _make_index(nrows, index)
    value = descr.default_val
    dtype = _dtype_of(descr.data_type)
    if value is None:
        value, dtype = (np.nan, dtype) if dtype == np.float64 else (None, object)
    return pd.Series(data=value, index=index, dtype=dtype, name=descr.name)


def make_data_frame(descr, nrows=None, index=None):
    """
    Create a ``pandas.DataFrame`` with the columns of ``descr``, in order,
    filled with the columns' default values. Give ``nrows`` or ``index``.
    """
    assert isinstance(descr, descriptors.TableDescriptor)
    index = _make_index(nrows, index)
    return pd.DataFrame({fd.name: make_data_series(fd, index=index)
                         for fd in descr.column_descriptors}, index=index)


def conform_frame(frame, descr):
    """
    Convert a ``DataFrame`` to the column layout and data types of ``descr``.

    * Missing columns without default value are an error.
    * Missing columns with default value are created, with a warning.
    * Additional columns are removed, with a warning.
    * Values that can't be converted to the column's type are an error.

    Raises
    ------
    TableError
    """
    assert isinstance(frame, pd.DataFrame)
    assert isinstance(descr, descriptors.TableDescriptor)

    out = pd.DataFrame(index=pd.RangeIndex(len(frame)))
    for fieldD in descr.column_descriptors:
        cname = fieldD.name
        if cname not in frame.columns:
            if fieldD.required:
                raise TableError(
                    "Table '{t}': missing column '{c}'."
                    .format(t=descr.name, c=cname))
            logging.warning("Table '{t}': missing column '{c}', using default."
                            .format(t=descr.name, c=cname))
            out[cname] = make_data_series(fieldD, len(frame)).values
            continue

        col = frame[cname].reset_index(drop=True)
        try:
            out[cname] = _convert_column(col, fieldD)
        except (ValueError, TypeError) as err:
            raise TableError("Table '{t}', column '{c}': {e}"
                             .format(t=descr.name, c=cname, e=err)) from err

    legal_cols = set(descr.column_names)
    for cname in frame.columns:
        if cname not in legal_cols:
            logging.warning("Table '{t}': additional column '{c}' ignored."
                            .format(t=descr.name, c=cname))
    return out


def _convert_column(col, fieldD):
    """Convert a single column (``pandas.Series``) to the type in ``fieldD``."""
    data_type = fieldD.data_type
    if data_type == descriptors.FloatD:
        return pd.to_numeric(col, errors="raise").astype(np.float64)
    elif data_type == descriptors.IntD:
        vals = pd.to_numeric(col, errors="raise")
        if vals.isnull().any() or (vals != np.round(vals)).any():
            raise ValueError("non-integer value")
        return vals.astype(np.int64)
    elif data_type == descriptors.BoolD:
        if col.dtype == bool:
            return col
        return col.map(lambda v: descriptors.BoolD.parse(str(v))).astype(bool)
    else:
        return col.astype(str)


def read_frame_csv(path, descr):
    """
    Read a CSV file that conforms to ``descr``.

    Raises
    ------
    TableError
        The file is missing, can't be parsed, or has the wrong columns.
    """
    if not os.path.isfile(path):
        raise TableError("File does not exist: '{p}'".format(p=path))
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError,
            UnicodeDecodeError) as err:
        raise TableError("Can't parse '{p}': {e}".format(p=path, e=err)) from err
    return conform_frame(frame, descr)


def write_frame_csv(frame, descr, path):
    """
    Write a ``DataFrame`` as a CSV file.

    Only the columns in ``descr`` are written, in the order of ``descr``.
    Floating point numbers are written with 17 significant digits, therefore
    the same data always produce the same bytes.
    """
    assert isinstance(frame, pd.DataFrame)
    assert isinstance(descr, descriptors.TableDescriptor)

    out = conform_frame(frame, descr)
    out.to_csv(path, index=False, float_format=FLOAT_FORMAT, encoding="utf-8")
    logging.debug("Wrote {n} rows to '{p}'.".format(n=len(out), p=path))
