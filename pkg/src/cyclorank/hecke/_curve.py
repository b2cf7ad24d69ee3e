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

import os
from threading import Lock

import numpy as np
from sympy import factorint, isprime, primerange


class EllipticCurveForm:
    r"""A rational elliptic curve in long Weierstrass form, regarded as the weight-2
    newform :math:`f` of level :math:`N` attached to it by modularity.

    ..  math::

        y^2 + a_1 x y + a_3 y = x^3 + a_2 x^2 + a_4 x + a_6

    Parameters
    ----------
    weierstrass : sequence of int
        The five coefficients ``(a1, a2, a3, a4, a6)``.
    conductor : int
        The conductor :math:`N` of the curve, i.e. the level of the newform.
    epsilon : int or complex, optional
        The root number :math:`\varepsilon(f)` of modulus one (default is 1).
    label : str or None, optional
        A label of the curve (default is None).

    Attributes
    ----------
    weierstrass : tuple of int
        The Weierstrass coefficients.
    conductor : int
        The conductor :math:`N`.
    epsilon : int or complex
        The root number :math:`\varepsilon(f)`.
    label : str
        The label of the curve.
    discriminant : int
        The (nonzero) discriminant.

    Notes
    -----
    The conductor and the root number are configured inputs. The root number is
    validated by :func:`cyclorank.check_root_number`. The normalized Hecke eigenvalues
    :math:`\lambda_f(n) = a_n / \sqrt{n}` are memoized per curve. Concurrent readers
    always obtain identical values.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.EllipticCurveForm([0, 0, 0, -1, 0], conductor=32, label="32a")
    >>> E.discriminant
    64
    >>> cr.ap(E, 5), cr.ap(E, 3)
    (-2, 0)
    """

    def __init__(self, weierstrass, conductor, epsilon=1, label=None):
        weierstrass = tuple(int(a) for a in weierstrass)

        if len(weierstrass) != 5:
            raise ValueError("Five Weierstrass coefficients are required.")

        if int(conductor) < 1:
            raise ValueError("The conductor must be a positive integer.")

        if not np.isclose(abs(epsilon), 1):
            raise ValueError("The root number must be of modulus one.")

        self.weierstrass = weierstrass
        self.conductor = int(conductor)
        self.epsilon = epsilon
        self.label = label if label is not None else str(list(weierstrass))
        self.discriminant = discriminant(self)

        if self.discriminant == 0:
            raise ValueError("The Weierstrass equation is singular.")

        self._ap = {}
        self._lambda = np.zeros(2)
        self._lambda[1] = 1.0
        self._lock = Lock()

    def __repr__(self):
        return (
            f"<cyclorank.EllipticCurveForm(label={self.label!r}, "
            f"N={self.conductor}, epsilon={self.epsilon})>"
        )

    def copy(self, epsilon=None):
        "Return a copy of the curve, optionally with another root number."
        if epsilon is None:
            epsilon = self.epsilon
        other = EllipticCurveForm(self.weierstrass, self.conductor, epsilon, self.label)
        other._ap = self._ap
        other._lambda = self._lambda
        return other

    def is_bad(self, p):
        "Return True if the prime ``p`` divides the conductor."
        return self.conductor % p == 0


def discriminant(E):
    r"""Return the discriminant of the Weierstrass equation, see Eq.
    :eq:`weierstrass-discriminant`.

    ..  math::
        :label: weierstrass-discriminant

        \Delta = -b_2^2 b_8 - 8 b_4^3 - 27 b_6^2 + 9 b_2 b_4 b_6

    with :math:`b_2 = a_1^2 + 4 a_2`, :math:`b_4 = a_1 a_3 + 2 a_4`,
    :math:`b_6 = a_3^2 + 4 a_6` and
    :math:`b_8 = a_1^2 a_6 + 4 a_2 a_6 - a_1 a_3 a_4 + a_2 a_3^2 - a_4^2`.
    """
    a1, a2, a3, a4, a6 = E.weierstrass

    b2 = a1**2 + 4 * a2
    b4 = a1 * a3 + 2 * a4
    b6 = a3**2 + 4 * a6
    b8 = a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2

    return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6


def _count_points(E, p):
    "Number of points of the reduction modulo p, including the point at infinity."
    a1, a2, a3, a4, a6 = (a % p for a in E.weierstrass)

    if p == 2:
        affine = sum(
            (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2 == 0
            for x in range(2)
            for y in range(2)
        )
        return 1 + affine

    x = np.arange(p, dtype=np.int64)
    x2 = x * x % p
    x3 = x2 * x % p

    # (2y + a1 x + a3)^2 = 4 (x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
    rhs = (x3 + a2 * x2 + a4 * x + a6) % p
    shift = (a1 * x + a3) % p
    D = (4 * rhs + shift * shift) % p

    squares = np.bincount(x2, minlength=p)

    return 1 + int(squares[D].sum())


def ap(E, p):
    r"""Return the trace of Frobenius :math:`a_p = p + 1 - \#E(\mathbb{F}_p)` by
    counting points, including those of a singular reduction at a bad prime.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["11a"]
    >>> [cr.ap(E, p) for p in [2, 3, 5, 7, 11]]
    [-2, -1, 1, -2, 1]
    """
    p = int(p)

    if p not in E._ap:
        if not isprime(p):
            raise ValueError(f"{p} is not prime.")
        E._ap[p] = p + 1 - _count_points(E, p)

    return E._ap[p]


def _local_lambdas(E, p, kmax):
    "Values of lambda(p^k) for k = 0, ..., kmax."
    lam = np.empty(kmax + 1)
    lam[0] = 1.0
    if kmax == 0:
        return lam

    lam[1] = ap(E, p) / np.sqrt(p)

    for k in range(2, kmax + 1):
        if E.is_bad(p):
            lam[k] = lam[1] * lam[k - 1]
        else:
            lam[k] = lam[1] * lam[k - 1] - lam[k - 2]

    return lam


def hecke_lambda(E, n):
    r"""Return the normalized Hecke eigenvalue :math:`\lambda_f(n)`.

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve.
    n : int
        A positive integer.

    Returns
    -------
    float
        The eigenvalue.

    Notes
    -----
    The eigenvalues are multiplicative with :math:`\lambda_f(p) = a_p / \sqrt{p}`. At
    good primes the recursion

    ..  math::

        \lambda_f(p^{k+1}) = \lambda_f(p) \lambda_f(p^k) - \lambda_f(p^{k-1})

    holds and at primes dividing the level :math:`\lambda_f(p^k) = \lambda_f(p)^k`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["32a"]
    >>> round(cr.hecke_lambda(E, 25), 12), cr.hecke_lambda(E, 15) == 0
    (-0.2, True)
    """
    n = int(n)

    if n < 1:
        raise ValueError("n must be a positive integer.")

    if n < len(E._lambda):
        return float(E._lambda[n])

    value = 1.0
    for p, k in factorint(n).items():
        value *= _local_lambdas(E, p, k)[k]

    return float(value)


def lambda_array(E, n_max):
    r"""Return an array with :math:`\lambda_f(n)` for ``n = 0, ..., n_max`` and
    :math:`\lambda_f(0) = 0`.

    The array is built by multiplying in the local factors prime by prime and it is
    memoized per curve. The returned array is read-only.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> lam = cr.lambda_array(cr.load_curves()["32a"], 25)
    >>> round(float(lam[25]), 12)
    -0.2
    """
    n_max = int(n_max)

    with E._lock:
        if n_max >= len(E._lambda):
            size = max(n_max + 1, 2 * len(E._lambda))
            lam = np.ones(size)
            lam[0] = 0.0

            for p in primerange(2, size):
                kmax = int(np.log(size - 1) / np.log(p)) + 1
                while p**kmax > size - 1:
                    kmax -= 1

                local = _local_lambdas(E, p, kmax)

                for k in range(1, kmax + 1):
                    idx = np.arange(p**k, size, p**k)
                    idx = idx[(idx // p**k) % p != 0]
                    lam[idx] *= local[k]

            lam.flags.writeable = False
            E._lambda = lam

        return E._lambda[: n_max + 1]


def load_curves(path=None):
    r"""Load elliptic curves from a whitespace-separated table with the header
    ``label a1 a2 a3 a4 a6 conductor epsilon``.

    Parameters
    ----------
    path : str or None, optional
        The path of the table (default is None). If None, the table of curves which
        ships with the package is used.

    Returns
    -------
    dict
        A dict with the labels as keys and the :class:`EllipticCurveForm` as values.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> curves = cr.load_curves()
    >>> list(curves)
    ['11a', '19a', '32a', '37a', '43a']
    >>> curves["37a"].epsilon
    -1
    """
    if path is None:
        path = os.path.join(os.path.dirname(__file__), "curves.txt")

    table = np.atleast_1d(
        np.genfromtxt(path, names=True, dtype=None, encoding="utf-8", comments="#")
    )

    required = ["label", "a1", "a2", "a3", "a4", "a6", "conductor", "epsilon"]
    missing = [name for name in required if name not in table.dtype.names]

    if missing:
        raise ValueError(f"Missing columns in curve table: {missing}.")

    return {
        str(row["label"]): EllipticCurveForm(
            weierstrass=[row[a] for a in ["a1", "a2", "a3", "a4", "a6"]],
            conductor=int(row["conductor"]),
            epsilon=int(row["epsilon"]),
            label=str(row["label"]),
        )
        for row in table
    }
