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

import numpy as np
from sympy import factorint, totient

from ..kloosterman import kloosterman_table
from ..modarith import as_modulus, mul_order
from ._character import DirichletCharacter, galois_orbit, gauss_sum


def _mobius(n):
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return (-1) ** len(exponents)


def _check_divisor(M, d):
    d = int(d)
    if d < 1 or M.phi % d != 0:
        raise ValueError(f"d={d} must be a positive divisor of q-1={M.phi}.")
    if d == M.phi:
        raise ValueError("d = q-1 belongs to the trivial character.")
    return d


def _weight(order):
    return Fraction(_mobius(order), int(totient(order)))


def chi_av_formula(n, modulus, d):
    r"""Return the Galois-orbit average :math:`\chi_{\text{av}}(n)` of the characters
    of order :math:`(q-1)/d` as an exact rational, see Eq. :eq:`chi-av`.

    ..  math::
        :label: chi-av

        \chi_{\text{av}}(n) = \frac{1}{|G|} \sum_{\sigma \in G} \chi^\sigma(n)
            = \frac{\mu(\operatorname{ord}(n^d))}{\phi(\operatorname{ord}(n^d))}

    Parameters
    ----------
    n : int
        A residue coprime to :math:`q`.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.
    d : int
        A divisor of :math:`q-1` with :math:`d < q-1`.

    Returns
    -------
    Fraction
        The orbit average.

    Notes
    -----
    The average of :math:`\zeta^j` over all :math:`j` coprime to :math:`m` is the
    Ramanujan sum :math:`\mu(o)/\phi(o)` for a root of unity :math:`\zeta` of exact
    order :math:`o`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [cr.chi_av_formula(n, 7, d) for n, d in [(1, 1), (2, 1), (3, 2)]]
    [Fraction(1, 1), Fraction(-1, 2), Fraction(-1, 2)]
    """
    M = as_modulus(modulus)
    d = _check_divisor(M, d)

    if int(n) % M.q == 0:
        raise ValueError(f"n={n} must be coprime to q={M.q}.")

    return _weight(mul_order(pow(int(n) % M.q, d, M.q), M))


def chi_av_table(modulus, d):
    r"""Return :math:`\chi_{\text{av}}(r)` as floats for all residues
    ``r = 0, ..., q-1`` with :math:`\chi_{\text{av}}(0) = 0`."""
    M = as_modulus(modulus)
    d = _check_divisor(M, d)

    weights = np.zeros(M.phi + 1)
    for order in M.divisors():
        weights[order] = float(_weight(order))

    k = d * M.dlog[1:] % M.phi
    orders = M.phi // np.gcd(k, M.phi)

    table = np.zeros(M.q)
    table[1:] = weights[orders]
    table.flags.writeable = False

    return table


def chi_av_bruteforce(orbit, n):
    r"""Return the arithmetic mean of :math:`\chi^\sigma(n)` over all members of a
    Galois orbit.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> orbit = cr.galois_orbit(cr.DirichletCharacter(7, 1))
    >>> value = cr.chi_av_bruteforce(orbit, 2)
    >>> round(value.real, 12), abs(value.imag) < 1e-12
    (-0.5, True)
    """
    return complex(np.mean([chi(n) for chi in orbit.members]))


def root_number(f, chi):
    r"""Return the root number
    :math:`\varepsilon(f \otimes \chi) = \varepsilon(f) \chi(N) \tau(\chi)^2 / q` of
    the twist of a form :math:`f` of level :math:`N` by a primitive character.

    Parameters
    ----------
    f : EllipticCurveForm
        The form with the attributes ``conductor`` and ``epsilon``.
    chi : DirichletCharacter
        A character modulo a prime :math:`q` not dividing :math:`N`.

    Returns
    -------
    complex
        The root number of modulus one.
    """
    q = chi.modulus.q

    if f.conductor % q == 0:
        raise ValueError(f"q={q} divides the conductor N={f.conductor}.")

    return f.epsilon * chi(f.conductor) * gauss_sum(chi) ** 2 / q


def tilde_chi_av_direct(f, orbit, n):
    r"""Return the dual orbit average
    :math:`\tilde{\chi}_{\text{av}}(n) = \frac{1}{|G|} \sum_\sigma
    \varepsilon(f \otimes \chi^\sigma) \overline{\chi^\sigma}(n)` term by term."""
    return complex(
        np.mean([root_number(f, chi) * np.conj(chi(n)) for chi in orbit.members])
    )


def tilde_chi_av_values(f, orbit):
    r"""Return :math:`\tilde{\chi}_{\text{av}}(n)` for all residues
    ``n = 0, ..., q-1`` from the members of a Galois orbit."""
    values = np.zeros(orbit.modulus.q, dtype=complex)
    for chi in orbit.members:
        values += root_number(f, chi) * np.conj(chi.values)
    return values / len(orbit)


def tilde_chi_av_kloosterman(f, modulus, d, n):
    r"""Return the dual orbit average from its Kloosterman-sum form, see Eq.
    :eq:`tilde-chi-av`.

    ..  math::
        :label: tilde-chi-av

        \tilde{\chi}_{\text{av}}(n) = \frac{\varepsilon(f)}{q} \sum_{r \bmod q}
            \chi_{\text{av}}(rN) S(r, n, q)

    The term :math:`r = 0` vanishes as :math:`\chi_{\text{av}}(0) = 0`.

    Parameters
    ----------
    f : EllipticCurveForm
        The form with the attributes ``conductor`` and ``epsilon``.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.
    d : int
        A divisor of :math:`q-1` with :math:`d < q-1`.
    n : int
        A residue with :math:`\gcd(nN, q) = 1`.

    Returns
    -------
    complex
        The dual orbit average.
    """
    M = as_modulus(modulus)
    q = M.q

    if int(n) * f.conductor % q == 0:
        raise ValueError(f"q={q} must not divide nN.")

    average = chi_av_table(M, d)
    kloosterman = kloosterman_table(M).values

    r = np.arange(1, q, dtype=np.int64)
    total = np.sum(average[r * f.conductor % q] * kloosterman[r * (int(n) % q) % q])

    return complex(f.epsilon * total / q)


def chi_av_l1(modulus, d):
    r"""Return the first absolute moment
    :math:`L_1 = \sum_{r=1}^{q-1} |\chi_{\text{av}}(r)|` as an exact rational with
    the ratios :math:`L_1 / \phi(d)` and :math:`L_1 / d`.

    Notes
    -----
    The residues :math:`r` of order :math:`d` satisfy :math:`r^d = 1` and contribute
    one each, hence :math:`L_1 \ge \phi(d)`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> L1, (lower, upper) = cr.chi_av_l1(13, 3)
    >>> lower >= 1
    True
    """
    M = as_modulus(modulus)
    d = _check_divisor(M, d)

    k = d * M.dlog[1:] % M.phi
    orders, counts = np.unique(M.phi // np.gcd(k, M.phi), return_counts=True)

    L1 = sum(
        (abs(_weight(int(o))) * int(c) for o, c in zip(orders, counts)), Fraction(0)
    )

    return L1, (L1 / int(totient(d)), L1 / d)


def count_characters_below(q, theta):
    r"""Return the number :math:`\sum_{m | q-1, m < q^\theta} \phi(m)` of characters
    modulo a prime :math:`q` of order less than :math:`q^\theta`.

    Parameters
    ----------
    q : int or PrimeModulus
        The prime modulus.
    theta : int, str, float or Fraction
        The exponent :math:`\theta \ge 0`, converted to a rational.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.count_characters_below(7, 1), cr.count_characters_below(13, "1/2")
    (6, 4)
    """
    M = as_modulus(q)
    theta = Fraction(theta)

    if theta < 0:
        raise ValueError("theta must be non-negative.")

    num, den = theta.numerator, theta.denominator

    return sum(int(totient(m)) for m in M.divisors() if m**den < M.q**num)


def all_orbits(modulus):
    r"""Return one Galois orbit per divisor :math:`d < q-1` of :math:`q-1`,
    represented by the character of index :math:`t = d`, ordered by increasing
    :math:`d`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> [(orbit.d, len(orbit)) for orbit in cr.all_orbits(7)]
    [(1, 2), (2, 2), (3, 1)]
    """
    M = as_modulus(modulus)
    return [galois_orbit(DirichletCharacter(M, d)) for d in M.divisors() if d < M.phi]


def orbit_average_all(modulus, n):
    r"""Return the average of :math:`\chi(n)` over all :math:`q-1` characters, which is
    one for :math:`n \equiv 1` and zero otherwise."""
    M = as_modulus(modulus)
    return Fraction(1 if int(n) % M.q == 1 else 0)


def tilde_chi_av_kloosterman_values(f, modulus, d, chunksize=None):
    r"""Return the Kloosterman form of :math:`\tilde{\chi}_{\text{av}}(n)` for all
    residues ``n = 0, ..., q-1`` with the value zero at ``n = 0``.

    See Also
    --------
    tilde_chi_av_kloosterman : The Kloosterman form for a single residue.
    """
    M = as_modulus(modulus)
    q = M.q

    if f.conductor % q == 0:
        raise ValueError(f"q={q} divides the conductor N={f.conductor}.")

    if chunksize is None:
        chunksize = max(1, 4_000_000 // q)

    average = chi_av_table(M, d)
    kloosterman = kloosterman_table(M).values

    r = np.arange(1, q, dtype=np.int64)
    weights = average[r * f.conductor % q]

    values = np.zeros(q, dtype=complex)
    for start in range(1, q, chunksize):
        n = np.arange(start, min(q, start + chunksize), dtype=np.int64)
        values[n] = kloosterman[np.outer(n, r) % q] @ weights

    return f.epsilon * values / q
