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

from functools import lru_cache

import numpy as np

from ..characters import DirichletCharacter, chi_av_table, root_number
from ..hecke import lambda_array, mollifier_coeffs, tail_coeffs
from ..modarith import inverse_table
from ._parameters import AfeParameters


def _check_level(E, q):
    if E.conductor % q == 0:
        raise ValueError(f"q={q} divides the conductor N={E.conductor}.")


def _residue_sums(weights, n, q):
    "Sum the real weights of all n in the same residue class modulo q."
    return np.bincount(n % q, weights=weights, minlength=q)


class MollifiedSums:
    r"""The truncated sums of the mollified approximate functional equation of a curve
    for a prime modulus, reduced to residue classes.

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve.
    q : int
        The prime modulus, coprime to the conductor.
    params : AfeParameters
        The parameters of the approximate functional equation.

    Attributes
    ----------
    first : ndarray of float
        Residue sums ``first[r]`` of :math:`a_n n^{-1/2} e^{-2 \pi n / (q Y \sqrt{N})}`
        over :math:`n > X` with :math:`n \equiv r`.
    m : ndarray of int
        The indices :math:`m \le X` of the nonzero mollifier coefficients.
    cm : ndarray of float
        The scaled mollifier coefficients :math:`c_m / \sqrt{m}`.
    dual : ndarray of float
        Residue sums ``dual[i, r]`` of
        :math:`\lambda_f(n) n^{-1/2} e^{-2 \pi n Y / (m_i q \sqrt{N})}` over
        :math:`n \equiv r`.

    Notes
    -----
    Every character sum of the approximate functional equation is evaluated as a dot
    product of these residue sums with a table of character values. Hence, all members
    of an orbit and both orbit averages :math:`S_1` and :math:`S_2` share the same
    truncation.
    """

    def __init__(self, E, q, params):
        _check_level(E, q)

        self.E = E
        self.q = q = int(q)
        self.params = params
        self.X = X = params.X(q)
        self.Y = Y = params.Y(q)

        sqrtN = np.sqrt(E.conductor)

        T1 = q * Y * sqrtN / (2 * np.pi)
        n1 = max(params.n_max(T1), int(np.floor(X)) + 1)
        a = tail_coeffs(E, X, n1)
        n = np.arange(int(np.floor(X)) + 1, n1 + 1)
        self.first = _residue_sums(a[n] / np.sqrt(n) * np.exp(-n / T1), n, q)

        c = mollifier_coeffs(E, X)
        self.m = np.flatnonzero(c)
        self.cm = c[self.m] / np.sqrt(self.m)

        T2 = X * q * sqrtN / (2 * np.pi * Y)
        n2 = params.n_max(T2)
        lam = lambda_array(E, n2)
        n = np.arange(1, n2 + 1)
        Tm = self.m * q * sqrtN / (2 * np.pi * Y)
        self.dual = np.array(
            [_residue_sums(lam[n] / np.sqrt(n) * np.exp(-n / T), n, q) for T in Tm]
        )

    def value(self, chi):
        "The mollified approximate functional equation for a character."
        first = np.dot(self.first, chi.values)
        dual = self.dual @ np.conj(chi.values)
        dual = np.dot(self.cm * chi.values[self.m % self.q], dual)

        return complex(1 + first + root_number(self.E, chi) * dual)

    def first_average(self, average):
        r"""The first sum with :math:`\chi(n)` replaced by a table of averages."""
        return complex(np.dot(self.first, average))

    def dual_average(self, tilde):
        r"""The dual sum with :math:`\varepsilon(f \otimes \chi) \bar{\chi}(n)
        \chi(m)` replaced by a table of averages evaluated at :math:`n \bar{m}`."""
        q = self.q
        r = np.arange(q)
        minv = inverse_table(q)[self.m % q]
        total = sum(
            cm * np.dot(dual, tilde[r * mi % q])
            for cm, dual, mi in zip(self.cm, self.dual, minv)
        )
        return complex(total)


@lru_cache(maxsize=16)
def _cached_sums(E, q, params):
    return MollifiedSums(E, q, params)


def mollified_sums(E, q, params=None):
    "Return the (cached) :class:`MollifiedSums` of a curve for a prime modulus."
    if params is None:
        params = _default_params()
    return _cached_sums(E, int(q), params)


@lru_cache(maxsize=1)
def _default_params():
    return AfeParameters()


def mollified_afe(E, chi, params=None):
    r"""Evaluate the mollified approximate functional equation, see Eq.
    :eq:`mollified-afe`.

    ..  math::
        :label: mollified-afe

        1 + \sum_{n > X} \frac{a_n \chi(n)}{\sqrt{n}}
            e^{-\frac{2 \pi n}{q Y \sqrt{N}}}
            + \varepsilon(f \otimes \chi) \sum_{n \ge 1} \sum_{m \le X}
            \frac{\lambda_f(n) c_m \bar{\chi}(n) \chi(m)}{\sqrt{nm}}
            e^{-\frac{2 \pi n Y}{m q \sqrt{N}}}

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    chi : DirichletCharacter
        A primitive character modulo a prime :math:`q \nmid N`.
    params : AfeParameters or None, optional
        The parameters (default is None). If None, the default parameters are used.

    Returns
    -------
    complex
        The mollified central value :math:`L(f \otimes \chi, 1/2) M_X(f \otimes \chi,
        1/2)` up to :math:`O(q^{-1})`.

    Notes
    -----
    Both sums are truncated where the exponential weights drop below the tail
    tolerance, see :class:`AfeParameters`.
    """
    q = chi.modulus.q
    _check_level(E, q)
    return mollified_sums(E, q, params).value(chi)


def lvalue(E, chi, A=1.0, params=None):
    r"""Evaluate the central value :math:`L(f \otimes \chi, 1/2)` by the approximate
    functional equation with the split parameter :math:`A > 0`, see Eq.
    :eq:`split-afe`.

    ..  math::
        :label: split-afe

        L(f \otimes \chi, \tfrac{1}{2}) = \sum_{n \ge 1}
            \frac{\lambda_f(n) \chi(n)}{\sqrt{n}} e^{-\frac{2 \pi n A}{q \sqrt{N}}}
            + \varepsilon(f \otimes \chi) \sum_{n \ge 1}
            \frac{\lambda_f(n) \bar{\chi}(n)}{\sqrt{n}}
            e^{-\frac{2 \pi n}{A q \sqrt{N}}}

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    chi : DirichletCharacter
        A primitive character modulo a prime :math:`q \nmid N`.
    A : float, optional
        The split parameter (default is 1.0).
    params : AfeParameters or None, optional
        The parameters with the tail tolerance and the truncation factor (default is
        None). If None, the default parameters are used.

    Returns
    -------
    complex
        The central value.

    Notes
    -----
    The identity holds exactly for every :math:`A` only with the correct root number
    :math:`\varepsilon(f)`. This is the basis of :func:`check_root_number`.
    """
    if params is None:
        params = _default_params()

    if A <= 0:
        raise ValueError("The split parameter A must be positive.")

    q = chi.modulus.q
    _check_level(E, q)

    scale = q * np.sqrt(E.conductor) / (2 * np.pi)
    T1, T2 = scale / A, scale * A

    n1, n2 = params.n_max(T1), params.n_max(T2)
    lam = lambda_array(E, max(n1, n2))

    n = np.arange(1, n1 + 1)
    first = _residue_sums(lam[n] / np.sqrt(n) * np.exp(-n / T1), n, q)

    n = np.arange(1, n2 + 1)
    dual = _residue_sums(lam[n] / np.sqrt(n) * np.exp(-n / T2), n, q)

    first = np.dot(first, chi.values)
    dual = np.dot(dual, np.conj(chi.values))

    return complex(first + root_number(E, chi) * dual)


def direct_lvalue(E, chi, params=None):
    r"""Evaluate the central value :math:`L(f \otimes \chi, 1/2)` by the balanced
    approximate functional equation, i.e. :func:`lvalue` with ``A=1``.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["32a"]
    >>> chi = cr.DirichletCharacter(5, index=2)
    >>> L = cr.direct_lvalue(E, chi)
    >>> abs(L.imag) < 1e-9
    True
    """
    return lvalue(E, chi, A=1.0, params=params)


def mollifier_value(E, chi, X):
    r"""Evaluate the mollifier :math:`M_X(f \otimes \chi, 1/2) = \sum_{n \le X}
    c_n \chi(n) n^{-1/2}`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["32a"]
    >>> cr.mollifier_value(E, cr.DirichletCharacter(13, 1), 1.5)
    (1+0j)
    """
    if X < 2:
        return 1 + 0j

    q = chi.modulus.q
    c = mollifier_coeffs(E, X)
    n = np.arange(1, len(c))

    return complex(np.sum(c[n] * chi.values[n % q] / np.sqrt(n)))


class RootNumberCheck:
    r"""A data class with the discrepancies between the central values evaluated with
    the split parameters ``1`` and ``A``, once with the configured root number
    :math:`\varepsilon(f)` and once with :math:`-\varepsilon(f)`. All parameters are
    available as attributes.

    Parameters
    ----------
    q : int
        The prime modulus.
    A : float
        The second split parameter.
    configured : float
        Discrepancy with the configured root number.
    flipped : float
        Discrepancy with the negated root number.
    tolerance : float
        The tolerance for the discrepancy of the configured root number.
    """

    def __init__(self, q, A, configured, flipped, tolerance):
        self.q = q
        self.A = A
        self.configured = configured
        self.flipped = flipped
        self.tolerance = tolerance
        self.consistent = bool(configured < tolerance < flipped)

    def as_dict(self):
        return dict(vars(self))


def check_root_number(E, q, A=2.0, params=None, tolerance=1e-6):
    r"""Validate the configured root number :math:`\varepsilon(f)` of a curve by the
    independence of the central value of the split parameter.

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve.
    q : int
        A prime modulus, coprime to the conductor.
    A : float, optional
        The second split parameter (default is 2.0).
    params : AfeParameters or None, optional
        The parameters (default is None). If None, the default parameters are used.
    tolerance : float, optional
        Tolerance for the discrepancy (default is 1e-6).

    Returns
    -------
    RootNumberCheck
        The discrepancies for the configured and the negated root number, evaluated
        for the character of order :math:`q-1`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.check_root_number(cr.load_curves()["11a"], 7).consistent
    True
    """
    chi = DirichletCharacter(q, index=1)

    def discrepancy(curve):
        return abs(lvalue(curve, chi, 1.0, params) - lvalue(curve, chi, A, params))

    return RootNumberCheck(
        q=chi.modulus.q,
        A=A,
        configured=float(discrepancy(E)),
        flipped=float(discrepancy(E.copy(epsilon=-E.epsilon))),
        tolerance=tolerance,
    )


def partial_sum_average(E, orbit, length):
    r"""Return the orbit average of the partial sums
    :math:`\frac{1}{|G|} \sum_\sigma \sum_{n \le \ell} \lambda_f(n) \chi^\sigma(n)
    n^{-1/2} = \sum_{n \le \ell} \lambda_f(n) \chi_{\text{av}}(n) n^{-1/2}`.
    """
    length = int(length)

    if length < 1:
        raise ValueError("The length must be a positive integer.")

    q = orbit.modulus.q
    lam = lambda_array(E, length)
    n = np.arange(1, length + 1)

    return complex(np.sum(lam[n] * chi_av_table(q, orbit.d)[n % q] / np.sqrt(n)))
