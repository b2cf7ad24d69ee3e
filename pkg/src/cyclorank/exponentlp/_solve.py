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
from itertools import combinations

import numpy as np
import sympy as sp

from ._errors import InfeasibleError, ProgramError, UnboundedError


def _rational(value):
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _fraction(value):
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _system(program):
    "Return the constraint matrix, the right-hand sides and the cost as sympy objects."
    n = len(program.variables)
    rows = [
        [_rational(a) for a in coefficients] for coefficients, _ in program.constraints
    ]
    A = sp.Matrix(len(rows), n, [a for row in rows for a in row])
    b = sp.Matrix([_rational(rhs) for _, rhs in program.constraints])
    c = sp.Matrix([_rational(a) for a in program.cost])
    return A, b, c


def vertices(program):
    r"""Return all vertices of the feasible region of a program, enumerated as
    feasible solutions of square subsystems of active constraints.

    Parameters
    ----------
    program : ExponentProgram
        The program.

    Returns
    -------
    list of tuple
        The distinct vertices as tuples of :class:`fractions.Fraction`, sorted
        lexicographically.

    Notes
    -----
    If the constraint matrix has a rank :math:`r` lower than the number of variables,
    the feasible region contains lines. Then the region is intersected with the row
    space of the constraint matrix, which contains a vertex whenever the region is
    non-empty, and the subsystems consist of :math:`r` constraints and a basis of the
    null space.
    """
    A, b, _ = _system(program)
    m, n = A.shape

    null = [v.T for v in A.nullspace()]
    N = sp.Matrix.vstack(*null) if null else sp.zeros(0, n)
    rank = n - N.rows

    found = set()

    for subset in combinations(range(m), rank):
        M = sp.Matrix.vstack(A.extract(list(subset), list(range(n))), N)

        if M.det() == 0:
            continue

        rhs = sp.Matrix.vstack(b.extract(list(subset), [0]), sp.zeros(N.rows, 1))
        x = tuple(_fraction(xi) for xi in M.LUsolve(rhs))

        if program.is_feasible(x):
            found.add(x)

    return sorted(found)


def _is_bounded(program):
    "Check if the cost is a non-negative combination of linearly independent rows."
    A, _, c = _system(program)
    m, n = A.shape

    for size in range(min(A.rank(), m) + 1):
        for subset in combinations(range(m), size):
            B = A.extract(list(subset), list(range(n))).T.row_join(c)
            R, pivots = B.rref()

            if pivots != tuple(range(size)):
                continue

            if all(R[i, size] >= 0 for i in range(size)):
                return True

    return False


class OptimizeResult:
    r"""The exact optimum of an :class:`ExponentProgram`.

    Parameters
    ----------
    program : ExponentProgram
        The solved program.
    value : Fraction
        The optimal value of the objective.
    witness : tuple of Fraction
        The lexicographically smallest optimal vertex.
    vertices : list of tuple
        All enumerated feasible vertices.

    Attributes
    ----------
    active : list of int
        The indices of the constraints which hold with equality at the witness.
    """

    def __init__(self, program, value, witness, vertices):
        self.program = program
        self.value = value
        self.witness = witness
        self.vertices = vertices
        self.active = [
            i
            for i, (coefficients, rhs) in enumerate(program.constraints)
            if sum(a * x for a, x in zip(coefficients, witness)) == rhs
        ]

    def __repr__(self):
        return f"<cyclorank.OptimizeResult(value={self.value})>"

    @property
    def point(self):
        "The witness as a dict of variable names and values."
        return dict(zip(self.program.variables, self.witness))

    def as_dict(self):
        "Return the result as a flat dict with exact rational strings."
        out = {
            "objective": self.program.objective,
            "value": self.value,
            "value_float": float(self.value),
        }
        out.update(self.point)
        out["active"] = " ".join(str(i) for i in self.active)
        return out


def solve(program):
    r"""Maximize the objective of an exponent program exactly.

    Parameters
    ----------
    program : ExponentProgram
        The program.

    Returns
    -------
    OptimizeResult
        The optimal value and the lexicographically smallest optimal vertex.

    Raises
    ------
    ProgramError
        If the program has no constraints.
    InfeasibleError
        If no point satisfies all constraints.
    UnboundedError
        If the objective is unbounded on the feasible region.

    Notes
    -----
    All vertices are enumerated from the square subsystems of the constraints. A
    non-empty feasible region is bounded in the direction of the cost vector
    :math:`\boldsymbol{c}` if and only if :math:`\boldsymbol{c} = \boldsymbol{A}^T
    \boldsymbol{y}` for some :math:`\boldsymbol{y} \ge 0`, which is checked over the
    linearly independent subsets of the rows. Then the maximum is attained at a
    vertex.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> result = cr.solve(cr.chinta_program())
    >>> print(result.value)
    7/52
    >>> [str(x) for x in result.witness]
    ['7/52', '19/26', '7/26', '45/26']

    >>> cr.solve(cr.parse_program("maximize x\n-x <= 0"))
    Traceback (most recent call last):
    ...
    cyclorank.exponentlp._errors.UnboundedError: The objective is unbounded.
    """
    if not program.constraints:
        raise ProgramError("At least one constraint is required.")

    found = vertices(program)

    if not found:
        raise InfeasibleError("The constraints are infeasible.")

    if not _is_bounded(program):
        raise UnboundedError("The objective is unbounded.")

    j = program.variables.index(program.objective)
    value = max(x[j] for x in found)
    witness = min(x for x in found if x[j] == value)

    return OptimizeResult(program, value, witness, found)


def sample_feasible(program, n=100, seed=None, box=1):
    r"""Draw random feasible points of a program.

    Parameters
    ----------
    program : ExponentProgram
        The program with a feasible region.
    n : int, optional
        The number of convex combinations of vertices (default is 100).
    seed : int or None, optional
        The seed of the random number generator (default is None).
    box : int or float, optional
        Margin added to the bounding box of the vertices for the rejection samples
        (default is 1).

    Returns
    -------
    list of tuple
        Feasible points as tuples of :class:`fractions.Fraction`: ``n`` random
        convex combinations of the vertices followed by those of ``n`` uniform
        samples in the bounding box which satisfy all constraints.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> p = cr.chinta_program()
    >>> points = cr.sample_feasible(p, n=10, seed=0)
    >>> all(p.is_feasible(x) for x in points)
    True
    """
    rng = np.random.default_rng(seed)
    found = vertices(program)

    if not found:
        raise InfeasibleError("The constraints are infeasible.")

    points = []

    for _ in range(n):
        weights = [int(w) for w in rng.integers(0, 100, size=len(found))]
        weights[int(rng.integers(len(found)))] += 1
        total = sum(weights)
        points.append(
            tuple(
                sum(Fraction(w, total) * v[i] for w, v in zip(weights, found))
                for i in range(len(program.variables))
            )
        )

    lower = np.min(np.array(found, dtype=float), axis=0) - box
    upper = np.max(np.array(found, dtype=float), axis=0) + box

    for sample in rng.uniform(lower, upper, size=(n, len(program.variables))):
        x = tuple(Fraction(float(xi)).limit_denominator(10**6) for xi in sample)
        if program.is_feasible(x):
            points.append(x)

    return points


def linprog_check(program):
    r"""Solve a program in floating point with :func:`scipy.optimize.linprog` as a
    cross-check of the exact solver.

    Returns
    -------
    float
        The optimal value of the objective.

    Raises
    ------
    InfeasibleError
        If the program is infeasible.
    UnboundedError
        If the objective is unbounded.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> round(cr.linprog_check(cr.chinta_program()) * 52, 6)
    7.0
    """
    from scipy.optimize import linprog

    A = np.array([[float(a) for a in row] for row, _ in program.constraints])
    b = np.array([float(rhs) for _, rhs in program.constraints])
    c = -np.array([float(a) for a in program.cost])

    result = linprog(c, A_ub=A, b_ub=b, bounds=(None, None), method="highs")

    if result.status == 2:
        raise InfeasibleError("The constraints are infeasible.")

    if result.status == 3:
        raise UnboundedError("The objective is unbounded.")

    if not result.success:
        raise ProgramError(result.message)

    return float(-result.fun)
