# -*- coding: utf-8 -*-
"""
This file is part of cyclorank.

cyclorank is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

cyclorank is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with cyclorank.  If not, see <http://www.gnu.org/licenses/>.
"""

import csv
import json
from fractions import Fraction
from numbers import Complex, Integral, Real

import numpy as np


def flatten(row):
    """Return a flat dict of a row, where complex values are split into the keys
    ``<key>_re`` and ``<key>_im``, rationals are converted to strings and numpy
    scalars to built-in types.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.tools.flatten({"q": 13, "average": 1 + 2j})
    {'q': 13, 'average_re': 1.0, 'average_im': 2.0}
    """
    if hasattr(row, "as_dict"):
        row = row.as_dict()

    out = {}
    for key, value in row.items():
        if isinstance(value, np.generic):
            value = value.item()

        if isinstance(value, (bool, Integral, str)) or value is None:
            out[key] = value
        elif isinstance(value, Fraction):
            out[key] = str(value)
        elif isinstance(value, Real):
            out[key] = float(value)
        elif isinstance(value, Complex):
            out[f"{key}_re"] = float(value.real)
            out[f"{key}_im"] = float(value.imag)
        else:
            out[key] = value

    return out


def _dump(value):
    if isinstance(value, float):
        return format(value, ".17g") if np.isfinite(value) else "null"
    return json.dumps(value)


def dumps(row):
    """Serialize a row to a single JSON line. Floats are written with 17 significant
    digits, non-finite floats as ``null``.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.tools.dumps({"q": 13, "residual_abs": 0.1})
    '{"q": 13, "residual_abs": 0.10000000000000001}'
    """
    items = flatten(row).items()
    return "{" + ", ".join(f"{json.dumps(k)}: {_dump(v)}" for k, v in items) + "}"


def _cell(value):
    if isinstance(value, float):
        return format(value, ".17g")
    return value


def _fieldnames(rows):
    names = {}
    for row in rows:
        names.update(dict.fromkeys(row))
    return list(names)


def _write(rows, file, fmt):
    if fmt == "jsonl":
        for row in rows:
            file.write(dumps(row) + "\n")

    else:
        writer = csv.DictWriter(file, fieldnames=_fieldnames(rows))
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})


def save(rows, filename, fmt=None):
    """Write rows of results to a JSON-lines or a CSV file.

    Parameters
    ----------
    rows : list of dict or list of report
        The rows. Reports are converted by their ``as_dict()`` method.
    filename : str or file-like object
        The filename or an opened text file. The extension ``.csv`` selects the CSV
        format, all others the JSON-lines format.
    fmt : str or None, optional
        The format ``"jsonl"`` (alias ``"json"``) or ``"csv"`` (default is None). If
        None, the format is taken from the extension of the filename.
    """
    if fmt is None:
        name = str(getattr(filename, "name", filename))
        fmt = "csv" if name.lower().endswith(".csv") else "jsonl"

    if fmt == "json":
        fmt = "jsonl"

    if fmt not in ["jsonl", "csv"]:
        raise ValueError(f'Format "{fmt}" not supported, use "jsonl" or "csv".')

    rows = [flatten(row) for row in rows]

    if hasattr(filename, "write"):
        _write(rows, filename, fmt)

    else:
        with open(filename, "w", newline="", encoding="utf-8") as file:
            _write(rows, file, fmt)
