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

from ..modarith import as_modulus, inverse_table


class KloostermanTable:
    r"""A table of the Kloosterman sums :math:`S(1, m, q)` for all residues
    :math:`m = 0, \ldots, q-1` of a prime modulus.

    Parameters
    ----------
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.
    chunksize : int, optional
        Number of table entries evaluated per vectorized block (default is None). If
        None, the block size is chosen to keep temporary arrays at about four million
        items.

    Attributes
    ----------
    modulus : PrimeModulus
        The prime modulus.
    values : ndarray of float
        The real values ``values[m]`` :math:`= S(1, m, q)`.

    Notes
    -----
    The Kloosterman sum is given by Eq. :eq:`kloosterman-sum`

    ..  math::
        :label: kloosterman-sum

        S(a, b, q) = \sum_{x=1}^{q-1} e\left(\frac{a x + b \bar{x}}{q}\right)

    and it is real-valued because :math:`x \mapsto -x` maps each term to its complex
    conjugate. Hence only the cosines are summed. For units :math:`a` the sum reduces to
    :math:`S(a, b, q) = S(1, ab, q)`, so one table per modulus serves all arguments.
    The phases are reduced modulo :math:`q` in exact integer arithmetic before the
    cosine lookup.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> table = cr.KloostermanTable(3)
    >>> table.values
    array([-1., -1.,  2.])
    """

    def __init__(self, modulus, chunksize=None):
        self.modulus = M = as_modulus(modulus)
        q = M.q

        if chunksize is None:
            chunksize = max(1, 4_000_000 // q)

        x = np.arange(1, q, dtype=np.int64)
        xinv = inverse_table(M)[1:]
        cosines = np.cos(2 * np.pi * np.arange(q) / q)

        values = np.empty(q)
        for start in range(0, q, chunksize):
            m = np.arange(start, min(q, start + chunksize), dtype=np.int64)
            phase = (x + np.outer(m, xinv)) % q
            values[m] = cosines[phase].sum(axis=1)

        self.values = values
        self.values.flags.writeable = False

    def __call__(self, a, b):
        "Evaluate :math:`S(a, b, q)` by a table lookup."
        q = self.modulus.q
        a, b = int(a) % q, int(b) % q

        if a == 0 and b == 0:
            return float(q - 1)

        if a == 0:
            # Ramanujan sum S(0, b, q) = S(b, 0, q) = S(1, 0, q)
            return float(self.values[0])

        return float(self.values[a * b % q])

    def weil_ratio(self):
        r"""Return the largest ratio :math:`|S(1, m, q)| / 2\sqrt{q}` over all units
        :math:`m`."""
        q = self.modulus.q
        return float(np.abs(self.values[1:]).max() / (2 * np.sqrt(q)))


@lru_cache(maxsize=32)
def _cached_table(modulus):
    return KloostermanTable(modulus)


def kloosterman_table(modulus):
    "Return the (cached) :class:`KloostermanTable` of a prime modulus."
    return _cached_table(as_modulus(modulus))


def kloosterman(a, b, modulus):
    """Return the real value of the Kloosterman sum :math:`S(a, b, q)`.

    Parameters
    ----------
    a : int
        First argument, reduced modulo ``q``.
    b : int
        Second argument, reduced modulo ``q``.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.

    Returns
    -------
    float
        The Kloosterman sum.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> round(cr.kloosterman_sum(1, 1, 3), 12)
    -1.0
    >>> cr.kloosterman_sum(0, 0, 7)
    6.0
    """
    return kloosterman_table(modulus)(a, b)


def kloosterman_direct(a, b, modulus):
    "Return the Kloosterman sum :math:`S(a, b, q)` from its defining complex sum."
    M = as_modulus(modulus)
    q = M.q

    x = np.arange(1, q, dtype=np.int64)
    xinv = inverse_table(M)[1:]
    phase = (int(a) % q * x + int(b) % q * xinv) % q

    return complex(np.exp(2j * np.pi * phase / q).sum())


def moment_sum(rs, modulus):
    r"""Return the complete moment of a product of Kloosterman sums over the nonzero
    residues :math:`h`, see Eq. :eq:`kloosterman-moment`.

    ..  math::
        :label: kloosterman-moment

        \mathop{{\sum}^{*}}_{h \bmod q} S(h, r_1, q) \cdots S(h, r_{2k}, q)

    Parameters
    ----------
    rs : sequence of int
        The residues :math:`r_1, \ldots, r_{2k}`, each in ``1, ..., q-1``.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.

    Returns
    -------
    float
        The moment.

    Notes
    -----
    For two units the moment is :math:`q(q-1)-1` if :math:`r_1 \equiv r_2` and
    :math:`-q-1` otherwise.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> round(cr.moment_sum([1, 1], 5), 9), round(cr.moment_sum([1, 2], 5), 9)
    (19.0, -6.0)
    """
    table = kloosterman_table(modulus)
    q = table.modulus.q

    rs = np.asarray(rs, dtype=np.int64).ravel()
    if np.any(rs % q == 0):
        raise ValueError("Residues must be coprime to the modulus.")

    h = np.arange(1, q, dtype=np.int64)
    products = np.prod(table.values[np.outer(rs % q, h) % q], axis=0)

    return float(products.sum())


def in_D(rs):
    """Return True if no component of an even-length tuple is distinct from all the
    others, i.e. every value occurs at least twice.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.in_D((1, 1, 2, 2)), cr.in_D((1, 1, 2, 3)), cr.in_D((5, 5, 5, 5))
    (True, False, True)
    """
    rs = list(rs)

    if len(rs) < 2 or len(rs) % 2 != 0:
        raise ValueError("Tuple length must be even and at least 2.")

    _, counts = np.unique(rs, return_counts=True)

    return bool(np.all(counts >= 2))
