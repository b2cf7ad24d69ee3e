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
import json
import os

import pytest

from cyclorank.cli import build_parser, main


def pre(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    rows = [json.loads(line) for line in captured.out.splitlines() if line]
    return code, rows, captured.err


def test_parser():
    args = build_parser().parse_args(["chi-av", "--q", "7", "--d", "1"])

    assert args.command == "chi-av"
    assert args.n is None

    with pytest.raises(SystemExit) as error:
        build_parser().parse_args(["chi-av", "--q", "7"])

    assert error.value.code == 2

    with pytest.raises(SystemExit):
        build_parser().parse_args(["moment", "--q", "5", "--rs", "1,x"])

    with pytest.raises(SystemExit):
        build_parser().parse_args(["optimize", "--builtin-chinta", "--k", "3"])


def test_version(capsys):
    with pytest.raises(SystemExit) as error:
        main(["--version"])

    assert error.value.code == 0


def test_chi_av(capsys):
    code, rows, _ = pre(capsys, ["chi-av", "--q", "7", "--d", "1", "--n", "2"])

    assert code == 0
    assert rows[0]["formula"] == "-1/2"
    assert abs(rows[0]["bruteforce"] + 0.5) < 1e-12
    assert rows[0]["diff"] < 1e-12

    code, rows, _ = pre(capsys, ["chi-av", "--q", "7", "--d", "1", "--n", "1"])
    assert rows[0]["formula"] == "1"

    code, rows, _ = pre(capsys, ["chi-av", "--q", "7", "--d", "1"])
    assert [row["n"] for row in rows] == [1, 2, 3, 4, 5, 6]

    code, rows, err = pre(capsys, ["chi-av", "--q", "7", "--d", "6"])
    assert code == 2
    assert rows == []
    assert err.startswith("cyclorank chi-av: error:")


def test_kloosterman(capsys):
    code, rows, _ = pre(capsys, ["kloosterman", "--q", "3", "--a", "1", "--b", "1"])

    assert code == 0
    assert abs(rows[0]["value"] + 1) < 1e-9


def test_moment(capsys):
    code, rows, _ = pre(capsys, ["moment", "--q", "5", "--rs", "1,1"])

    assert code == 0
    assert abs(rows[0]["value"] - 19) < 1e-9
    assert rows[0]["in_D"]

    code, rows, _ = pre(capsys, ["moment", "--q", "5", "--rs", "1,2", "--check"])

    assert abs(rows[0]["value"] + 6) < 1e-9
    assert not rows[0]["in_D"]
    assert rows[0]["diff"] < 1e-9


def test_lemma41(capsys):
    code, rows, _ = pre(capsys, ["lemma41", "--q", "11", "--k", "2", "--z", "1,1,1"])

    assert code == 0
    assert len(rows) == 1


def test_optimize(capsys, tmpdir):
    code, rows, _ = pre(capsys, ["optimize", "--builtin-chinta", "--check"])

    assert code == 0
    assert rows[0]["value"] == "7/52"
    assert [rows[0][key] for key in ["gamma", "a", "b", "c"]] == [
        "7/52",
        "19/26",
        "7/26",
        "45/26",
    ]
    assert abs(rows[0]["linprog"] - 7 / 52) < 1e-9

    code, rows, _ = pre(capsys, ["optimize", "--builtin-weil"])
    assert rows[0]["value"] == "1/8"

    code, rows, _ = pre(capsys, ["optimize", "--k", "3"])
    assert rows[0]["value"] == "2/15"

    filename = os.path.join(tmpdir, "bad.lp")
    with open(filename, "w") as file:
        file.write("maximize x\nx*y <= 1\n")

    code, rows, err = pre(capsys, ["optimize", filename])
    assert code == 2
    assert "(line 2, column 3)" in err

    code, rows, err = pre(capsys, ["optimize", os.path.join(tmpdir, "missing.lp")])
    assert code == 2

    code, rows, err = pre(capsys, ["optimize"])
    assert code == 2


def test_envelope(capsys):
    argv = ["envelope", "--k", "4", "--a", "19/26", "--b", "7/26", "--gamma", "7/52"]
    code, rows, _ = pre(capsys, argv)

    assert code == 0
    assert rows[0]["envelope"] == "0"
    assert rows[0]["second"] == "-1/208"


def test_rankbound(capsys):
    code, rows, _ = pre(capsys, ["rankbound", "--q", "13", "--theta", "1/2"])

    assert code == 0
    assert rows[0]["count"] == 4


def test_scan(capsys):
    argv = ["scan", "--curve", "32a", "--q", "13", "--order-floor", "12"]
    code, rows, _ = pre(capsys, argv)

    assert code == 0
    assert len(rows) == 1
    assert rows[0]["vanishing_count"] == 0
    assert {"average_re", "average_im", "s1_re", "s2_im"} <= set(rows[0])

    code, rows, err = pre(capsys, ["scan", "--curve", "99z", "--q", "13"])
    assert code == 2
    assert "99z" in err

    code, rows, err = pre(capsys, ["scan"])
    assert code == 2


def test_config(capsys, tmpdir):
    config = os.path.join(tmpdir, "config.json")
    with open(config, "w") as file:
        json.dump({"curve": "11a", "tail_tolerance": 1e-8}, file)

    argv = ["--config", config, "lvalue", "--q", "13", "--t", "1"]
    code, rows, _ = pre(capsys, argv)

    assert code == 0
    assert rows[0]["curve"] == "11a"

    code, rows, _ = pre(capsys, argv + ["--curve", "32a"])
    assert rows[0]["curve"] == "32a"

    with open(config, "w") as file:
        json.dump([1, 2], file)

    code, rows, _ = pre(capsys, argv)
    assert code == 2


def test_output(tmpdir):
    filename = os.path.join(tmpdir, "out.csv")
    argv = ["--format", "csv", "-o", filename, "moment", "--q", "7", "--rs", "1,1"]

    assert main(argv) == 0

    with open(filename) as file:
        lines = file.read().splitlines()

    assert lines[0] == "q,rs,value,in_D"
    assert lines[1].startswith("7,")


if __name__ == "__main__":
    test_parser()
