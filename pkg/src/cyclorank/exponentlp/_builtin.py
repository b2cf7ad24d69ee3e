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
from numbers import Integral

from ._parser import parse_program
from ._program import ExponentProgram
from ._solve import solve

CHINTA = """\
# exponent system of the first mollified moment over Galois orbits
variables gamma, a, b, c
maximize gamma

# first sums
gamma - b/2 <= 0
gamma + c/2 - 1 <= 0

# split point of the first sums
a + 1 <= c <= 2

# dual sums, products of eight Kloosterman sums
3b/4 - 3a/8 - 1/16 + gamma <= 0
3b/4 - 3a/8 + gamma/2 <= 0

0 <= 2b <= a <= 1
"""

VARIABLES = ["gamma", "a", "b", "c"]


def _check_k(k):
    if not isinstance(k, Integral) or isinstance(k, bool):
        raise TypeError("The number of Kloosterman products k must be an integer.")
    if k < 2:
        raise ValueError("The number of Kloosterman products k must be at least 2.")


def s2_exponent_branches(k, a, b, gamma):
    r"""Return the two exponents of the bound of the dual sums for products of
    :math:`2k` Kloosterman sums, see Eq. :eq:`s2-exponent-branches`.

    ..  math::
        :label: s2-exponent-branches

        b \left(1 - \frac{1}{k}\right) - a \left(\frac{1}{2} - \frac{1}{2k}\right)
            - \frac{1}{4k} + \gamma, \qquad
        b \left(1 - \frac{1}{k}\right) - a \left(\frac{1}{2} - \frac{1}{2k}\right)
            + \frac{\gamma}{2}

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [str(x) for x in cr.s2_exponent_branches(4, "19/26", "7/26", "7/52")]
    ['0', '-1/208']
    """
    _check_k(k)
    a, b, gamma = Fraction(a), Fraction(b), Fraction(gamma)

    base = b * (1 - Fraction(1, k)) - a * (Fraction(1, 2) - Fraction(1, 2 * k))

    return base - Fraction(1, 4 * k) + gamma, base + gamma / 2


def s2_exponent_envelope(k, a, b, gamma):
    r"""Return the exponent of the bound of the dual sums for products of :math:`2k`
    Kloosterman sums, i.e. the larger one of the two exponents of
    :func:`s2_exponent_branches`.

    ..  math::

        b \left(1 - \frac{1}{k}\right) - a \left(\frac{1}{2} - \frac{1}{2k}\right)
            - \frac{1}{4k} + \frac{\gamma}{2}
            + \max\left(\frac{\gamma}{2}, \frac{1}{4k}\right)

    Parameters
    ----------
    k : int
        Half the number of Kloosterman sums, at least 2.
    a, b, gamma : Fraction or int or str
        The exponents of the unbalancing parameter, of the mollifier length and of
        :math:`d = q^\gamma`.

    Returns
    -------
    Fraction
        The exponent.

    Notes
    -----
    Both terms of the maximum are equal at :math:`\gamma = 1/(2k)`, e.g. :math:`k=4`
    for :math:`\gamma = 1/8`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> print(cr.s2_exponent_envelope(4, "19/26", "7/26", "7/52"))
    0
    """
    return max(s2_exponent_branches(k, a, b, gamma))


def _rows(text):
    return parse_program(text).constraints


def k_program(k):
    r"""Return the exponent system where the two constraints of the dual sums are the
    two branches of :func:`s2_exponent_branches` for products of :math:`2k`
    Kloosterman sums.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> print(cr.solve(cr.k_program(3)).value)
    2/15
    >>> cr.k_program(4) == cr.chinta_program()
    True
    """
    _check_k(k)

    base = [0, -(Fraction(1, 2) - Fraction(1, 2 * k)), 1 - Fraction(1, k), 0]
    dual = [
        ([1, *base[1:]], Fraction(1, 4 * k)),
        ([Fraction(1, 2), *base[1:]], 0),
    ]

    constraints = chinta_program().constraints
    constraints[4:6] = dual

    return ExponentProgram(VARIABLES, constraints, "gamma")


def chinta_program():
    r"""Return the exponent system of the first mollified moment over Galois orbits
    of characters.

    Notes
    -----
    The variables are :math:`\gamma` with :math:`d = q^\gamma`, the unbalancing
    parameter :math:`Y = q^a`, the mollifier length :math:`X = q^b` and the split
    point :math:`q^c` in the bound of the first sums. The maximum
    :math:`\gamma = 7/52` is attained at :math:`(a, b, c) = (19/26, 7/26, 45/26)`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.chinta_program()
    <cyclorank.ExponentProgram(variables=['gamma', 'a', 'b', 'c'], constraints=9, objective='gamma')>
    """
    return parse_program(CHINTA)


def weil_program():
    r"""Return the exponent system where the dual sums are bounded by the Weil bound
    of each Kloosterman sum. The optimum is :math:`\gamma = 1/8`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> print(cr.solve(cr.weil_program()).value)
    1/8
    """
    constraints = chinta_program().constraints
    constraints[4:6] = _rows(
        "variables gamma, a, b, c\nmaximize gamma\ngamma + b - a/2 <= 0"
    )

    return ExponentProgram(VARIABLES, constraints, "gamma")


def best_k(ks=range(2, 9)):
    r"""Solve :func:`k_program` for a range of numbers of Kloosterman products and
    return the best one.

    Parameters
    ----------
    ks : iterable of int, optional
        The values of :math:`k` (default is ``range(2, 9)``).

    Returns
    -------
    int
        The smallest :math:`k` with the largest optimum.
    Fraction
        The largest optimum.
    dict
        The optima of all :math:`k`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> k, value, values = cr.best_k([2, 3, 4, 5])
    >>> k, str(value)
    (4, '7/52')
    """
    values = {k: solve(k_program(k)).value for k in ks}

    if not values:
        raise ValueError("At least one k is required.")

    value = max(values.values())
    k = min(k for k, v in values.items() if v == value)

    return k, value, values
