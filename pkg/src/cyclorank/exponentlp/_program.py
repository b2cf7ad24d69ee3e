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

from fractions import Fraction


class ExponentProgram:
    r"""A linear program over named exponent variables with exact rational
    coefficients, which maximizes one of the variables subject to constraints
    :math:`\boldsymbol{a}_i \cdot \boldsymbol{x} \le b_i`.

    Parameters
    ----------
    variables : list of str
        The ordered variable names.
    constraints : list of tuple
        The constraints as tuples ``(coefficients, rhs)`` with one coefficient per
        variable.
    objective : str
        The name of the variable to maximize.

    Notes
    -----
    All coefficients are converted to :class:`fractions.Fraction`. Strict
    inequalities are represented as non-strict ones.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> p = cr.ExponentProgram(["x"], [([1], 1)], objective="x")
    >>> p.constraints
    [((Fraction(1, 1),), Fraction(1, 1))]
    """

    def __init__(self, variables, constraints, objective):
        self.variables = list(variables)

        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Variable names must be unique.")

        if objective not in self.variables:
            raise ValueError(f'Objective "{objective}" is not a variable.')

        self.objective = objective
        self.constraints = []

        for coefficients, rhs in constraints:
            coefficients = tuple(Fraction(a) for a in coefficients)
            if len(coefficients) != len(self.variables):
                raise ValueError("One coefficient per variable is required.")
            self.constraints.append((coefficients, Fraction(rhs)))

    def __repr__(self):
        return (
            f"<cyclorank.ExponentProgram(variables={self.variables}, "
            f"constraints={len(self.constraints)}, objective={self.objective!r})>"
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExponentProgram)
            and self.variables == other.variables
            and self.constraints == other.constraints
            and self.objective == other.objective
        )

    @property
    def cost(self):
        "The coefficients of the objective."
        return tuple(Fraction(int(v == self.objective)) for v in self.variables)

    def is_feasible(self, x):
        "Return True if the point ``x`` satisfies all constraints exactly."
        return all(
            sum(a * xi for a, xi in zip(coefficients, x)) <= rhs
            for coefficients, rhs in self.constraints
        )

    def without(self, index):
        "Return a copy of the program without the constraint at position ``index``."
        constraints = [c for i, c in enumerate(self.constraints) if i != index]
        return ExponentProgram(self.variables, constraints, self.objective)

    def scaled(self, factors):
        "Return a copy with every constraint scaled by a positive rational factor."
        factors = [Fraction(f) for f in factors]

        if any(f <= 0 for f in factors):
            raise ValueError("Scaling factors must be positive.")

        constraints = [
            (tuple(f * a for a in coefficients), f * rhs)
            for f, (coefficients, rhs) in zip(factors, self.constraints)
        ]
        return ExponentProgram(self.variables, constraints, self.objective)
