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
from math import gcd

import numpy as np
from sympy import factorint, isprime


class PrimeModulus:
    r"""The multiplicative group :math:`(\mathbb{Z}/q\mathbb{Z})^*` of a prime modulus
    :math:`q` with its smallest primitive root :math:`g` and a full discrete-log table.

    Parameters
    ----------
    q : int
        A prime :math:`3 \le q < 2^{31}`.

    Attributes
    ----------
    q : int
        The prime modulus.
    g : int
        The smallest primitive root modulo ``q``.
    dlog : ndarray of int
        Discrete logarithms with ``g ** dlog[r] % q == r`` for ``r`` in ``1, ..., q-1``.
        The unused slot ``dlog[0]`` is set to ``-1``.
    powers : ndarray of int
        Powers ``powers[k] = g ** k % q`` for ``k`` in ``0, ..., q-2``.
    factors : dict
        Prime factorization of ``q - 1``.

    Notes
    -----
    The table is built once per modulus in :math:`O(q)` time and memory. Every
    character evaluation afterwards is a single lookup. Instances are immutable after
    construction and may be shared by any number of workers.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> M = cr.PrimeModulus(7)
    >>> M.g
    3
    >>> int(M.dlog[2]), int(M.dlog[6])
    (2, 3)
    """

    def __init__(self, q):
        q = int(q)

        if q < 3 or q >= 2**31:
            raise ValueError("Modulus must satisfy 3 <= q < 2^31.")

        if not isprime(q):
            raise ValueError(f"Modulus {q} is not prime.")

        self.q = q
        self.phi = q - 1
        self.factors = factorint(q - 1)
        self.g = _smallest_primitive_root(q, self.factors)

        powers = np.empty(q - 1, dtype=np.int64)
        dlog = np.full(q, -1, dtype=np.int64)

        x = 1
        for k in range(q - 1):
            powers[k] = x
            dlog[x] = k
            x = x * self.g % q

        self.powers = powers
        self.dlog = dlog

        self.powers.flags.writeable = False
        self.dlog.flags.writeable = False

    def __repr__(self):
        return f"<cyclorank.PrimeModulus(q={self.q}, g={self.g})>"

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeModulus", self.q))

    def reduce(self, n):
        "Return the residue of ``n`` in ``0, ..., q-1``."
        return int(n) % self.q

    def is_unit(self, n):
        "Return True if ``n`` is coprime to the modulus."
        return int(n) % self.q != 0

    def divisors(self):
        "Return the sorted list of positive divisors of ``q - 1``."
        divisors = [1]
        for p, e in self.factors.items():
            divisors = [d * p**j for d in divisors for j in range(e + 1)]
        return sorted(divisors)


def _smallest_primitive_root(q, factors):
    exponents = [(q - 1) // p for p in factors]
    for g in range(2, q):
        if all(pow(g, e, q) != 1 for e in exponents):
            return g
    raise ValueError(f"No primitive root modulo {q}.")


@lru_cache(maxsize=64)
def _cached_modulus(q):
    return PrimeModulus(q)


def as_modulus(modulus):
    """Return a :class:`PrimeModulus` for a given prime or pass an existing modulus
    through. Moduli created from integers are cached.

    Parameters
    ----------
    modulus : int or PrimeModulus
        A prime modulus.

    Returns
    -------
    PrimeModulus
        The modulus object.
    """
    if isinstance(modulus, PrimeModulus):
        return modulus

    if isinstance(modulus, (int, np.integer)):
        return _cached_modulus(int(modulus))

    raise TypeError("Modulus must be an int or a PrimeModulus.")


def _unit(n, M):
    r = int(n) % M.q
    if r == 0:
        raise ValueError(f"{n} is not a unit modulo {M.q}.")
    return r


def mul_order(n, modulus):
    r"""Return the multiplicative order of ``n`` modulo a prime.

    Parameters
    ----------
    n : int
        A residue coprime to the modulus.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.

    Returns
    -------
    int
        The least :math:`t \ge 1` with :math:`n^t \equiv 1 \mod q`. It divides
        :math:`q-1`.

    Notes
    -----
    With :math:`n = g^k` the order is :math:`(q-1) / \gcd(k, q-1)`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [cr.mul_order(n, 7) for n in [1, 2, 3]]
    [1, 3, 6]
    """
    M = as_modulus(modulus)
    r = _unit(n, M)
    return M.phi // gcd(int(M.dlog[r]), M.phi)


def primitive_root(q):
    """Return the smallest primitive root of a prime ``q >= 3``.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [cr.primitive_root(q) for q in [3, 7, 11]]
    [2, 3, 2]
    """
    return as_modulus(q).g


def discrete_log(r, modulus):
    """Return the index ``k`` in ``0, ..., q-2`` with ``g ** k % q == r``, looked up in
    the table of the modulus.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [cr.discrete_log(r, 7) for r in [1, 2, 6]]
    [0, 2, 3]
    """
    M = as_modulus(modulus)
    return int(M.dlog[_unit(r, M)])


def inv_mod(n, modulus):
    """Return the inverse of ``n`` modulo a prime.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.inv_mod(2, 5), cr.inv_mod(4, 7)
    (3, 2)
    """
    M = as_modulus(modulus)
    return pow(_unit(n, M), -1, M.q)


def inverse_table(modulus):
    """Return an array ``inv`` with ``inv[x] * x % q == 1`` for all units ``x`` and
    ``inv[0] = 0``."""
    M = as_modulus(modulus)
    inv = np.zeros(M.q, dtype=np.int64)

    # g^k has inverse g^(q-1-k)
    k = M.dlog[1:]
    inv[1:] = M.powers[(M.phi - k) % M.phi]

    return inv
