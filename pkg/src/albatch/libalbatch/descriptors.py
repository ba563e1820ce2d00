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
Tools to define the structure of the CSV tables and of the configuration
files.

A ``TableDescriptor`` lists the columns of a table (or the keys of a
configuration file) as ``FieldDescriptor`` objects. Each field knows its
name, its data type, its default value and has a comment, that is shown to
the user in the command line help.

The data types are tags like ``IntD`` or ``ListD(StrD)``. They check values
and convert the text of a CSV cell or configuration value.
"""

import numpy as np



class TypeDescriptor(object):
    """Parent for the data type tags of columns and configuration keys."""
    def accepts(self, value):
        """True if ``value`` is a valid Python value of this type."""
        raise NotImplementedError

    def parse(self, text):
        """Convert the text representation (from a CSV or config file)."""
        raise NotImplementedError


class ScalarD(TypeDescriptor):
    """
    A scalar type like ``int`` or ``float``.

    Parameters
    ----------
    py_type : type
        The Python type; also used to convert text.
    numpy_type : type
        The numpy scalar type that is accepted too, for example
        ``numpy.integer`` for ``int``. Values from data frames have these
        types.
    """
    def __init__(self, py_type, numpy_type=None):
        assert isinstance(py_type, type), "`py_type` must be a type, like `int`."
        self.py_type = py_type
        self.accepted = (py_type,) if numpy_type is None else (py_type, numpy_type)

    def accepts(self, value):
        #`bool` is a subclass of `int`, but not a valid integer here.
        if self.py_type is not bool and isinstance(value, (bool, np.bool_)):
            return False
        return isinstance(value, self.accepted)

    def parse(self, text):
        return self.py_type(text.strip())

    def __repr__(self):
        return "ScalarD({t})".format(t=self.py_type.__name__)


class BoolScalarD(ScalarD):
    """Booleans; the text forms are true/false, yes/no, 1/0."""
    TRUE_WORDS = ("true", "yes", "1")
    FALSE_WORDS = ("false", "no", "0")

    def __init__(self):
        ScalarD.__init__(self, bool, np.bool_)

    def parse(self, text):
        word = text.strip().lower()
        if word in self.TRUE_WORDS:
            return True
        if word in self.FALSE_WORDS:
            return False
        raise ValueError("Not a boolean: '{t}'".format(t=text))


StrD = ScalarD(str)
BoolD = BoolScalarD()
IntD = ScalarD(int, np.integer)
FloatD = ScalarD(float, np.floating)


class ListD(TypeDescriptor):
    """
    A list of values of the same type.

    In text form the elements are separated by commas: ``bl, qbc, eemcm``.
    """
    def __init__(self, item_type):
        assert isinstance(item_type, TypeDescriptor), \
            "`item_type` must be a `TypeDescriptor`."
        self.item_type = item_type

    def accepts(self, value):
        return isinstance(value, list) and all(self.item_type.accepts(v) for v in value)

    def parse(self, text):
        return [self.item_type.parse(part)
                for part in text.split(",") if part.strip()]

    def __repr__(self):
        return "ListD({t})".format(t=self.item_type)


class FieldDescriptor(object):
    """
    A column of a table, or a key of a configuration file.

    ``default_val`` is ``None`` for required fields.
    """
    def __init__(self, name, data_type, default_val, comment):
        assert isinstance(name, str) and name, "`name` must be a non-empty `str`."
        assert isinstance(data_type, TypeDescriptor), \
            "`data_type` must be a `TypeDescriptor`."
        assert default_val is None or data_type.accepts(default_val), \
            "Default of '{n}' is not of type {t}: {d!r}".format(
                n=name, t=data_type, d=default_val)
        self.name = name
        self.data_type = data_type
        self.default_val = default_val
        self.comment = comment

    @property
    def required(self):
        """Columns without default value must be present in every file."""
        return self.default_val is None

    def __repr__(self):
        return "FieldDescriptor({n!r}, {t}, {d!r})".format(
            n=self.name, t=self.data_type, d=self.default_val)


class TableDescriptor(object):
    """
    The fields of a table or of a configuration file, in order.

    Parameters
    ----------
    name : str
    comment : str
    field_descriptors : list of FieldDescriptor
        Names must be unique.
    """
    def __init__(self, name, comment, field_descriptors):
        field_descriptors = list(field_descriptors)
        for descr in field_descriptors:
            assert isinstance(descr, FieldDescriptor), \
                "`field_descriptors` must contain only `FieldDescriptor`s."
        names = [d.name for d in field_descriptors]
        duplicates = sorted(set(n for n in names if names.count(n) > 1))
        assert not duplicates, \
            "Duplicate field names in '{t}': {d}".format(t=name, d=duplicates)

        self.name = name
        self.comment = comment
        self.column_descriptors = field_descriptors
        self._by_name = {d.name: d for d in field_descriptors}

    @property
    def column_names(self):
        return [d.name for d in self.column_descriptors]

    def get(self, name):
        """Return the ``FieldDescriptor`` called ``name``, or ``None``."""
        return self._by_name.get(name)

    def __add__(self, other):
        """A new descriptor with the fields of both descriptors."""
        assert isinstance(other, TableDescriptor)
        return TableDescriptor(self.name + "+" + other.name, self.comment,
                               self.column_descriptors + other.column_descriptors)

    def __repr__(self):
        return "TableDescriptor({n!r}, {c})".format(n=self.name, c=self.column_names)
