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

import numpy as np
from sympy import factorint

from ._curve import hecke_lambda, lambda_array


def _local_mollifier(E, p, k):
    if k == 1:
        return -hecke_lambda(E, p)
    if k == 2 and not E.is_bad(p):
        return 1.0
    return 0.0


def mollifier_coeffs(E, X):
    r"""Return the mollifier coefficients :math:`c_n` for ``n = 0, ..., floor(X)`` with
    :math:`c_0 = 0`.

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve.
    X : float
        The length :math:`X \ge 1` of the mollifier.

    Returns
    -------
    ndarray of float
        The coefficients ``c[n]`` :math:`= c_n`.

    Notes
    -----
    The coefficients are those of the inverse of the Euler product of
    :math:`L(f, s)`, truncated at :math:`X`. They are multiplicative with

    ..  math::

        c_p = -\lambda_f(p), \qquad c_{p^2} = \begin{cases}
            1 & p \nmid N \\ 0 & p \mid N \end{cases}, \qquad c_{p^k} = 0
            \quad (k \ge 3).

    Examples
    --------
    >>> import numpy as np
    >>> import cyclorank as cr
    >>>
    >>> c = cr.mollifier_coeffs(cr.load_curves()["32a"], 25)
    >>> float(c[1]), bool(np.isclose(c[5], 2 / np.sqrt(5))), float(c[25])
    (1.0, True, 1.0)
    """
    if X < 1:
        raise ValueError("The mollifier length X must be at least 1.")

    n_max = int(np.floor(X))
    c = np.zeros(n_max + 1)
    c[1] = 1.0

    for n in range(2, n_max + 1):
        value = 1.0
        for p, k in factorint(n).items():
            value *= _local_mollifier(E, p, k)
            if value == 0:
                break
        c[n] = value

    return c


def tail_coeffs(E, X, n_max):
    r"""Return the coefficients :math:`a_n` of the product of :math:`L(f, s)` and the
    mollifier for ``n = 0, ..., n_max``, see Eq. :eq:`tail-coefficients`.

    ..  math::
        :label: tail-coefficients

        a_n = \sum_{m | n, \ m \le X} \lambda_f(n/m) c_m

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve.
    X : float
        The length of the mollifier.
    n_max : int
        The largest index, ``n_max >= X``.

    Returns
    -------
    ndarray of float
        The coefficients ``a[n]`` :math:`= a_n` with ``a[1] = 1`` and ``a[n] = 0`` for
        :math:`2 \le n \le X` up to rounding.

    Examples
    --------
    >>> import numpy as np
    >>> import cyclorank as cr
    >>>
    >>> a = cr.tail_coeffs(cr.load_curves()["11a"], 10, 20)
    >>> float(a[1]), bool(np.allclose(a[2:11], 0))
    (1.0, True)
    """
    n_max = int(n_max)

    if n_max < X:
        raise ValueError("n_max must not be smaller than the mollifier length X.")

    c = mollifier_coeffs(E, X)
    lam = lambda_array(E, n_max)

    a = np.zeros(n_max + 1)
    for m in np.flatnonzero(c):
        a[m::m] += c[m] * lam[1 : n_max // m + 1]

    return a
