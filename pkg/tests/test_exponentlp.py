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
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import cyclorank as cr
from cyclorank.exponentlp._parser import tokenize


def pre():
    return cr.chinta_program()


def test_tokenize():
    lines = tokenize("3b/4 <= 1  # comment\n\na && b")

    assert [t.text for t in lines[0]] == ["3", "b", "/", "4", "<=", "1"]
    assert lines[1] == []
    assert [t.kind for t in lines[2]] == ["name", "op", "name"]
    assert lines[2][1].column == 3

    with pytest.raises(cr.ParseError) as error:
        tokenize("x <= 1\nx ? 2")

    assert error.value.line == 2
    assert error.value.column == 3
    assert str(error.value).endswith("(line 2, column 3)")


def test_parse():
    p = cr.parse_program(
        """
        variables x, y, z
        maximize y
        # a chain with a parenthesis and implicit products
        0 <= 2(x + y)/3 <= 1.5 && z <= 0.25
        """
    )

    assert p.variables == ["x", "y", "z"]
    assert p.objective == "y"
    assert p.constraints == [
        ((F(-2, 3), F(-2, 3), 0), 0),
        ((F(2, 3), F(2, 3), 0), F(3, 2)),
        ((0, 0, 1), F(1, 4)),
    ]

    p = cr.parse_program("x <= 1\nmaximize y\ny - x <= 0")
    assert p.variables == ["x", "y"]


def test_parse_errors():
    with pytest.raises(cr.ParseError):
        cr.parse_program("x <= 1")

    with pytest.raises(cr.ParseError):
        cr.parse_program("")

    with pytest.raises(cr.NonlinearTermError):
        cr.parse_program("maximize x\nx*y <= 1")

    with pytest.raises(cr.NonlinearTermError):
        cr.parse_program("maximize x\nx y <= 1")

    with pytest.raises(cr.NonlinearTermError):
        cr.parse_program("maximize x\n1/x <= 1")

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\nx/0 <= 1")

    with pytest.raises(cr.UnknownVariableError) as error:
        cr.parse_program("variables x\nmaximize x\nx + w <= 1")

    assert error.value.name == "w"
    assert error.value.line == 3
    assert error.value.column == 5

    with pytest.raises(cr.UnknownVariableError):
        cr.parse_program("maximize y\nvariables x")

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\nx >= 1")

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\nx + 1")

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\nmaximize x\nx <= 1")

    with pytest.raises(cr.ParseError):
        cr.parse_program("variables x, x\nmaximize x\nx <= 1")

    with pytest.raises(cr.ParseError) as error:
        cr.parse_program("maximize x\nx <= 1 2")

    assert error.value.line == 2
    assert error.value.column == 8

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\n3/4 5 x <= 1")

    assert cr.parse_program("maximize x\n2 x <= 1").constraints == [([2], 1)]

    with pytest.raises(cr.ParseError):
        cr.parse_program("maximize x\n(x <= 1")

    # all parse errors are value errors
    with pytest.raises(ValueError):
        cr.parse_program("maximize 1")


def test_strict_inequality():
    with pytest.warns(UserWarning):
        p = cr.parse_program("maximize x\nx < 1")

    assert cr.solve(p).value == 1


def test_format():
    p = pre()
    text = cr.format_program(p)

    assert text.splitlines()[0] == "variables gamma, a, b, c"
    assert cr.parse_program(text) == p

    p = cr.ExponentProgram(["x", "y"], [([0, 0], 1), ([-1, 2], 0)], "y")
    assert cr.format_program(p).splitlines()[2:] == ["0 <= 1", "-x + 2*y <= 0"]


def test_program():
    p = pre()

    assert p.variables == ["gamma", "a", "b", "c"]
    assert len(p.constraints) == 9
    assert p.cost == (1, 0, 0, 0)
    assert p.is_feasible((F(7, 52), F(19, 26), F(7, 26), F(45, 26)))
    assert not p.is_feasible((F(1, 7), F(19, 26), F(7, 26), F(45, 26)))
    assert len(p.without(4).constraints) == 8
    assert p.without(4) != p

    with pytest.raises(ValueError):
        cr.ExponentProgram(["x", "x"], [], "x")

    with pytest.raises(ValueError):
        cr.ExponentProgram(["x"], [], "y")

    with pytest.raises(ValueError):
        cr.ExponentProgram(["x"], [([1, 2], 0)], "x")

    with pytest.raises(ValueError):
        p.scaled([1, 0, 1, 1, 1, 1, 1, 1, 1])


def test_solve():
    result = cr.solve(pre())

    assert result.value == F(7, 52)
    assert result.witness == (F(7, 52), F(19, 26), F(7, 26), F(45, 26))
    assert result.point["b"] == F(7, 26)
    assert result.witness in result.vertices

    # only the first constraint of the dual sums is active at the optimum
    assert result.active == [0, 1, 2, 4]

    row = result.as_dict()
    assert row["value"] == F(7, 52)
    assert row["value_float"] == 7 / 52
    assert row["objective"] == "gamma"
    assert row["active"] == "0 1 2 4"

    assert cr.solve(cr.parse_program("maximize x\nx <= 1")).value == 1


def test_solve_errors():
    with pytest.raises(cr.UnboundedError):
        cr.solve(cr.parse_program("maximize x\n-x <= 0"))

    with pytest.raises(cr.UnboundedError):
        cr.solve(cr.parse_program("maximize x\nx - y <= 0\ny - x <= 1"))

    with pytest.raises(cr.InfeasibleError):
        cr.solve(cr.parse_program("maximize x\n1 <= x <= 0"))

    with pytest.raises(cr.ProgramError):
        cr.solve(cr.ExponentProgram(["x"], [], "x"))


def test_solve_lines():
    # a feasible region with a line in the direction of y
    p = cr.parse_program("variables x, y\nmaximize x\nx <= 2\n-x <= 0")
    assert cr.solve(p).value == 2


def test_solve_scaled():
    p = pre()
    factors = [1, 2, F(1, 3), 5, 16, 7, 1, F(2, 9), 4]

    assert cr.solve(p.scaled(factors)).value == F(7, 52)


def test_k_program():
    values = {k: cr.solve(cr.k_program(k)).value for k in range(2, 7)}

    assert values == {
        2: F(1, 8),
        3: F(2, 15),
        4: F(7, 52),
        5: F(9, 68),
        6: F(11, 84),
    }
    assert cr.k_program(4) == pre()

    k, value, _ = cr.best_k(range(2, 7))
    assert (k, value) == (4, F(7, 52))

    with pytest.raises(TypeError):
        cr.k_program(2.5)

    with pytest.raises(ValueError):
        cr.k_program(1)

    with pytest.raises(ValueError):
        cr.best_k([])


def test_weil_program():
    assert cr.solve(cr.weil_program()).value == F(1, 8)


def test_without_dual_branch():
    assert cr.solve(pre().without(4)).value == F(3, 22)


def test_sample_feasible():
    p = pre()
    value = cr.solve(p).value
    points = cr.sample_feasible(p, n=50, seed=1)

    assert len(points) >= 50
    assert all(p.is_feasible(x) for x in points)
    assert max(x[0] for x in points) <= value


def test_linprog_check():
    p = pre()

    assert abs(cr.linprog_check(p) - 7 / 52) < 1e-9
    assert abs(cr.linprog_check(cr.weil_program()) - 1 / 8) < 1e-9

    with pytest.raises(cr.UnboundedError):
        cr.linprog_check(cr.parse_program("maximize x\n-x <= 0"))

    with pytest.raises(cr.InfeasibleError):
        cr.linprog_check(cr.parse_program("maximize x\n1 <= x <= 0"))


def test_envelope():
    assert cr.s2_exponent_branches(4, F(19, 26), F(7, 26), F(7, 52)) == (
        0,
        F(-1, 208),
    )

    with pytest.raises(TypeError):
        cr.s2_exponent_envelope(True, 0, 0, 0)


rationals = st.fractions(min_value=-2, max_value=2, max_denominator=100)


@given(st.integers(min_value=2, max_value=12), rationals, rationals, rationals)
def test_envelope_closed_form(k, a, b, gamma):
    envelope = cr.s2_exponent_envelope(k, a, b, gamma)

    base = b * (1 - F(1, k)) - a * (F(1, 2) - F(1, 2 * k))
    closed = base - F(1, 4 * k) + gamma / 2 + max(gamma / 2, F(1, 4 * k))

    assert envelope == closed

    # the envelope is non-positive iff both constraints of the k-program hold
    p = cr.k_program(k)
    rows = p.constraints[4:6]
    x = (gamma, a, b, 0)
    holds = all(sum(c * xi for c, xi in zip(row, x)) <= rhs for row, rhs in rows)

    assert (envelope <= 0) == holds


if __name__ == "__main__":
    test_tokenize()
    test_parse()
    test_parse_errors()
    test_strict_inequality()
    test_format()
    test_program()
    test_solve()
    test_solve_errors()
    test_solve_lines()
    test_solve_scaled()
    test_k_program()
    test_weil_program()
    test_without_dual_branch()
    test_sample_feasible()
    test_linprog_check()
    test_envelope()
    test_envelope_closed_form()
