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
import io
import json
import os
from fractions import Fraction

import numpy as np
import pytest

import cyclorank as cr


def pre():
    return [
        {"q": 13, "d": 1, "average": 1 + 0.5j, "gamma": 0.0, "skipped": False},
        {"q": 17, "d": 2, "average": 0.9 - 0.1j, "gamma": np.float64(0.24)},
    ]


def test_flatten():
    row = cr.tools.flatten(
        {"q": np.int64(13), "theta": Fraction(1, 2), "s1": 2j, "flag": True}
    )

    assert row == {"q": 13, "theta": "1/2", "s1_re": 0.0, "s1_im": 2.0, "flag": True}
    assert isinstance(row["q"], int)

    params = cr.AfeParameters()
    assert cr.tools.flatten(params)["b"] == "7/26"


def test_dumps():
    line = cr.tools.dumps({"x": 0.1, "y": float("nan"), "z": "a"})

    assert line == '{"x": 0.10000000000000001, "y": null, "z": "a"}'
    assert json.loads(line)["x"] == 0.1


def test_save(tmpdir):
    rows = pre()

    filename = os.path.join(tmpdir, "rows.jsonl")
    cr.save(rows, filename)

    with open(filename) as file:
        lines = [json.loads(line) for line in file]

    assert lines[0]["average_re"] == 1.0
    assert lines[1]["gamma"] == 0.24
    assert "skipped" not in lines[1]

    filename = os.path.join(tmpdir, "rows.csv")
    cr.save(rows, filename)

    with open(filename) as file:
        header = file.readline().strip().split(",")

    assert header == ["q", "d", "average_re", "average_im", "gamma", "skipped"]

    buffer = io.StringIO()
    cr.save(rows, buffer, fmt="json")
    assert len(buffer.getvalue().splitlines()) == 2

    with pytest.raises(ValueError):
        cr.save(rows, buffer, fmt="xml")


def test_verbosity():
    os.environ.pop("CYCLORANK_VERBOSE", None)
    assert cr.tools.verbosity(0) == 0
    assert cr.tools.verbosity(2) == 2
    assert cr.tools.verbosity(None) in [1, 2]

    os.environ["CYCLORANK_VERBOSE"] = "false"
    assert cr.tools.verbosity(None) == 0

    os.environ.pop("CYCLORANK_VERBOSE")


def test_num_threads():
    os.environ.pop("CYCLORANK_THREADS", None)
    assert cr.tools.num_threads() == 1
    assert cr.tools.num_threads(4) == 4

    os.environ["CYCLORANK_THREADS"] = "3"
    assert cr.tools.num_threads() == 3

    os.environ.pop("CYCLORANK_THREADS")

    with pytest.raises(ValueError):
        cr.tools.num_threads(0)


def test_header(capsys):
    cr.tools.print_header()
    out = capsys.readouterr().out

    assert cr.__version__ in out
    assert cr.runs_on() in out


if __name__ == "__main__":
    test_flatten()
    test_dumps()
    test_verbosity()
    test_num_threads()
