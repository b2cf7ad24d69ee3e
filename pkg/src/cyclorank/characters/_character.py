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

from functools import cached_property
from math import gcd

import numpy as np

from ..modarith import as_modulus


class DirichletCharacter:
    r"""A Dirichlet character modulo a prime :math:`q`, given by its index :math:`t`
    with :math:`\chi(g^k) = e^{2 \pi i t k / (q-1)}` for the smallest primitive root
    :math:`g`.

    Parameters
    ----------
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.
    index : int
        The index :math:`t`, reduced modulo :math:`q-1`.

    Attributes
    ----------
    modulus : PrimeModulus
        The prime modulus.
    index : int
        The index :math:`t` in ``0, ..., q-2``.
    d : int
        The divisor :math:`d = \gcd(t, q-1)` of :math:`q-1`.
    order : int
        The order :math:`(q-1)/d` of the character.

    Notes
    -----
    Every non-trivial character modulo a prime is primitive. The values
    :math:`\chi(n)` for all residues are tabulated on first use.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> chi = cr.DirichletCharacter(7, index=1)
    >>> chi.order, chi.d
    (6, 1)
    >>> chi(7)
    0j
    >>> abs(chi(2) - cr.eval(chi, 2)) < 1e-15
    True
    """

    def __init__(self, modulus, index):
        self.modulus = as_modulus(modulus)
        self.index = int(index) % self.modulus.phi
        self.d = gcd(self.index, self.modulus.phi)
        self.order = self.modulus.phi // self.d

    def __repr__(self):
        return (
            f"<cyclorank.DirichletCharacter(q={self.modulus.q}, t={self.index}, "
            f"order={self.order})>"
        )

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and other.modulus == self.modulus
            and other.index == self.index
        )

    def __hash__(self):
        return hash(("DirichletCharacter", self.modulus.q, self.index))

    @property
    def is_trivial(self):
        return self.index == 0

    @property
    def is_primitive(self):
        return self.index != 0

    @cached_property
    def exponents(self):
        r"""Integer exponents ``e[r]`` with :math:`\chi(r) = e^{2 \pi i e[r] / (q-1)}`
        for units ``r``. The slot ``e[0]`` is ``-1``."""
        M = self.modulus
        e = self.index * M.dlog % M.phi
        e[0] = -1
        e.flags.writeable = False
        return e

    @cached_property
    def values(self):
        r"""The values :math:`\chi(r)` for all residues ``r = 0, ..., q-1``."""
        M = self.modulus
        values = np.exp(2j * np.pi * self.exponents / M.phi)
        values[0] = 0
        values.flags.writeable = False
        return values

    def __call__(self, n):
        if np.ndim(n) == 0:
            return complex(self.values[int(n) % self.modulus.q])
        return self.values[np.asarray(n, dtype=np.int64) % self.modulus.q]

    def power(self, j):
        r"""Return the character :math:`\chi^j`."""
        return DirichletCharacter(self.modulus, self.index * j)

    def conj(self):
        r"""Return the complex conjugate character :math:`\bar{\chi} = \chi^{-1}`."""
        return self.power(-1)

    def parity(self):
        r"""Return :math:`\chi(-1) \in \{1, -1\}`."""
        return 1 if self.index % 2 == 0 else -1


def eval(chi, n):
    r"""Evaluate a Dirichlet character :math:`\chi(n)`, which is zero if :math:`q`
    divides :math:`n`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> chi = cr.DirichletCharacter(7, index=1)
    >>> cr.eval(chi, 1), cr.eval(chi, 14)
    ((1+0j), 0j)
    """
    return chi(n)


class GaloisOrbit:
    r"""The Galois orbit :math:`\{\chi^j : \gcd(j, m) = 1\}` of a non-trivial character
    :math:`\chi` of order :math:`m`.

    Parameters
    ----------
    base : DirichletCharacter
        A non-trivial character.

    Attributes
    ----------
    base : DirichletCharacter
        The base character.
    members : list of DirichletCharacter
        The characters :math:`\chi^j` for :math:`1 \le j < m`, :math:`\gcd(j, m) = 1`.
    order : int
        The common order :math:`m` of all members.
    d : int
        The common divisor :math:`d = (q-1)/m`.
    """

    def __init__(self, base):
        if base.is_trivial:
            raise ValueError("The trivial character has no Galois orbit here.")

        self.base = base
        self.order = base.order
        self.d = base.d
        self.modulus = base.modulus
        self.members = [
            base.power(j) for j in range(1, self.order) if gcd(j, self.order) == 1
        ]

    def __repr__(self):
        return (
            f"<cyclorank.GaloisOrbit(q={self.modulus.q}, d={self.d}, "
            f"size={len(self)})>"
        )

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def galois_orbit(chi):
    r"""Return the :class:`GaloisOrbit` of a non-trivial character.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [len(cr.galois_orbit(cr.DirichletCharacter(q, 1))) for q in [5, 7]]
    [2, 2]
    >>> len(cr.galois_orbit(cr.DirichletCharacter(11, 5)))
    1
    """
    return GaloisOrbit(chi)


def gauss_sum(chi):
    r"""Return the Gauss sum
    :math:`\tau(\chi) = \sum_{x=1}^{q-1} \chi(x) e^{2 \pi i x / q}`.

    Examples
    --------
    >>> import numpy as np
    >>> import cyclorank as cr
    >>>
    >>> tau = cr.gauss_sum(cr.DirichletCharacter(5, index=2))
    >>> bool(np.isclose(tau, np.sqrt(5)))
    True
    """
    q = chi.modulus.q
    x = np.arange(q)
    return complex(np.sum(chi.values * np.exp(2j * np.pi * x / q)))
