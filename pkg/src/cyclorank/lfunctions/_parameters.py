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
from math import ceil, log, log1p


class AfeParameters:
    r"""Parameters of the mollified approximate functional equation with the mollifier
    length :math:`X = q^b` and the unbalancing parameter :math:`Y = q^a`.

    Parameters
    ----------
    b : int, str, float or Fraction, optional
        The exponent of the mollifier length (default is ``"7/26"``).
    a : int, str, float or Fraction, optional
        The exponent of the unbalancing parameter (default is ``"19/26"``).
    c : int, str, float or Fraction, optional
        The exponent :math:`a + 1 \le c < 2` of the split point :math:`q^c` in the
        bound of :math:`S_1` (default is None). If None, :math:`c = a + 1`.
    tail_tolerance : float, optional
        Tolerance for the truncation of all exponentially weighted sums (default is
        1e-10).
    truncation_factor : float, optional
        A factor which scales all truncation points (default is 1.0).

    Notes
    -----
    The exponents must satisfy :math:`0 < b < a < 1`. The evaluation of :math:`S_2`
    additionally requires :math:`2b < a`. A sum with the weights
    :math:`e^{-n/T}` is truncated at

    ..  math::

        n_{\max} = \left\lceil f \, T \left( \ln \frac{1}{\text{tol}}
            + 2 \ln(1 + T) \right) \right\rceil

    with the truncation factor :math:`f`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> params = cr.AfeParameters()
    >>> params.b, params.a
    (Fraction(7, 26), Fraction(19, 26))
    """

    def __init__(
        self,
        b="7/26",
        a="19/26",
        c=None,
        tail_tolerance=1e-10,
        truncation_factor=1.0,
    ):
        self.b = Fraction(b)
        self.a = Fraction(a)
        self.c = self.a + 1 if c is None else Fraction(c)
        self.tail_tolerance = float(tail_tolerance)
        self.truncation_factor = float(truncation_factor)

        if not 0 < self.b < self.a < 1:
            raise ValueError("Exponents must satisfy 0 < b < a < 1.")

        if not self.a + 1 <= self.c < 2:
            raise ValueError("Exponent c must satisfy a + 1 <= c < 2.")

        if not 0 < self.tail_tolerance < 1:
            raise ValueError("The tail tolerance must be in (0, 1).")

        if self.truncation_factor <= 0:
            raise ValueError("The truncation factor must be positive.")

    def __repr__(self):
        return (
            f"<cyclorank.AfeParameters(b={self.b}, a={self.a}, c={self.c}, "
            f"tail_tolerance={self.tail_tolerance}, "
            f"truncation_factor={self.truncation_factor})>"
        )

    def replace(self, **kwargs):
        "Return a copy with some of the parameters replaced."
        params = dict(
            b=self.b,
            a=self.a,
            c=self.c,
            tail_tolerance=self.tail_tolerance,
            truncation_factor=self.truncation_factor,
        )
        params.update(kwargs)
        return AfeParameters(**params)

    def as_dict(self):
        return {
            "b": self.b,
            "a": self.a,
            "c": self.c,
            "tail_tolerance": self.tail_tolerance,
            "truncation_factor": self.truncation_factor,
        }

    def X(self, q):
        "The mollifier length :math:`X = q^b`."
        return float(q) ** float(self.b)

    def Y(self, q):
        "The unbalancing parameter :math:`Y = q^a`."
        return float(q) ** float(self.a)

    def check_dual(self):
        "Raise if the exponents violate :math:`2b < a`."
        if not 2 * self.b < self.a:
            raise ValueError("The dual sum requires 2b < a.")

    def n_max(self, T):
        "Truncation point of a sum with the exponential weights exp(-n/T)."
        tol = self.tail_tolerance
        return max(1, ceil(self.truncation_factor * T * (log(1 / tol) + 2 * log1p(T))))


def _gamma(q, d):
    return log(d) / log(q)


def s1_envelope(q, d, params=None):
    r"""Return the bound shape :math:`\max(q^{\gamma - b/2}, q^{\gamma + c/2 - 1})` of
    :math:`S_1` with :math:`d = q^\gamma`, where the factor :math:`q^\varepsilon` is
    dropped.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> round(cr.s1_envelope(13, 1), 12) == round(13 ** (-7 / 52), 12)
    True
    """
    if params is None:
        params = AfeParameters()

    gamma = _gamma(q, d)
    b, c = float(params.b), float(params.c)

    return max(q ** (gamma - b / 2), q ** (gamma + c / 2 - 1))


def s2_envelope(q, d, params=None):
    r"""Return the bound shape of :math:`S_2` with :math:`d = q^\gamma`, see Eq.
    :eq:`s2-envelope`, where the factor :math:`q^\varepsilon` is dropped.

    ..  math::
        :label: s2-envelope

        q^{\frac{3b}{4} - \frac{3a}{8} - \frac{1}{16} + \gamma}
            + q^{\frac{3b}{4} - \frac{3a}{8} + \frac{\gamma}{2}}
    """
    if params is None:
        params = AfeParameters()

    gamma = _gamma(q, d)
    b, a = float(params.b), float(params.a)
    shift = 3 * b / 4 - 3 * a / 8

    return q ** (shift - 1 / 16 + gamma) + q ** (shift + gamma / 2)
