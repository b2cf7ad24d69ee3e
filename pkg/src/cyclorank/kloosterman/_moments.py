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

from collections import Counter
from itertools import combinations_with_replacement
from math import factorial, gcd, prod

import numpy as np

from ..modarith import inverse_table
from ._kloosterman import kloosterman_table


class MomentBoundReport:
    r"""A data class with the weighted sum of absolute complete moments of products of
    :math:`2k` Kloosterman sums, split into the diagonal tuples (no component distinct
    from the others) and the remaining tuples, next to the bound terms
    :math:`L_1^k q^{k+1}` and :math:`L_1^{2k} q^{k+1/2}`. All parameters are
    available as attributes.

    Parameters
    ----------
    q : int
        The prime modulus.
    k : int
        Half the number of Kloosterman sums per product.
    R : int
        Length of the weight sequence.
    L1 : float
        First moment of the absolute weights.
    diagonal : float
        Contribution of the diagonal tuples.
    off_diagonal : float
        Contribution of all other tuples.
    tuples : int
        Number of ordered tuples with nonzero weight.
    """

    def __init__(self, q, k, R, L1, diagonal, off_diagonal, tuples):
        self.q = q
        self.k = k
        self.R = R
        self.L1 = L1
        self.diagonal = diagonal
        self.off_diagonal = off_diagonal
        self.total = diagonal + off_diagonal
        self.tuples = tuples

        self.diagonal_bound = L1**k * q ** (k + 1)
        self.off_diagonal_bound = L1 ** (2 * k) * q ** (k + 0.5)
        self.diagonal_ratio = diagonal / self.diagonal_bound
        self.off_diagonal_ratio = off_diagonal / self.off_diagonal_bound
        self.ratio = self.total / (self.diagonal_bound + self.off_diagonal_bound)

    def __repr__(self):
        return (
            f"<cyclorank.MomentBoundReport(q={self.q}, k={self.k}, R={self.R}, "
            f"ratio={self.ratio:.3e})>"
        )

    def as_dict(self):
        "Return the report as a flat dict."
        return dict(vars(self))


def _check_moment_condition(z, k, q):
    z = np.abs(np.asarray(z).ravel())
    R = len(z)

    if k < 1:
        raise ValueError("k must be a positive integer.")

    if R < 1 or R >= q:
        raise ValueError(f"Number of weights R={R} must satisfy 1 <= R < q={q}.")

    L1 = float(z.sum())
    if L1 < 1:
        raise ValueError(f"Weights violate the moment condition L_1 >= 1 (L_1={L1}).")

    for j in range(2, 2 * k + 1):
        Lj = float((z**j).sum())
        if Lj > L1 * (1 + 1e-12):
            raise ValueError(
                f"Weights violate the moment condition L_{j} <= L_1 ({Lj} > {L1})."
            )

    return z, L1


def lemma41_report(z, k, modulus):
    r"""Evaluate the weighted sum of absolute complete Kloosterman moments of Eq.
    :eq:`weighted-kloosterman-moment` by a full enumeration of the tuples.

    ..  math::
        :label: weighted-kloosterman-moment

        \sum_{1 \le r_1, \ldots, r_{2k} \le R} |z_{r_1}| \cdots |z_{r_{2k}}|
            \left| \mathop{{\sum}^{*}}_{h \bmod q} S(h, r_1, q) \cdots S(h, r_{2k}, q)
            \right| \ll L_1^k q^{k+1} + L_1^{2k} q^{k+1/2}

    Parameters
    ----------
    z : array_like
        The weights :math:`z_r` for :math:`r = 1, \ldots, R` with :math:`R < q`.
    k : int
        Half the number of Kloosterman sums per product.
    modulus : int or PrimeModulus
        The prime modulus :math:`q`.

    Returns
    -------
    MomentBoundReport
        The diagonal and off-diagonal contributions with their bound terms.

    Notes
    -----
    The moments :math:`L_j = \sum_r |z_r|^j` have to satisfy :math:`L_j \le L_1` for
    :math:`j \le 2k` and :math:`L_1 \ge 1`. The moment of a tuple only depends on the
    multiset of its components. Hence every multiset is evaluated once and weighted by
    the number of its orderings. Zero weights are skipped.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> report = cr.lemma41_report([1, 1, 1], k=1, modulus=11)
    >>> round(report.diagonal), round(report.off_diagonal)
    (327, 72)
    """
    table = kloosterman_table(modulus)
    q = table.modulus.q

    z, L1 = _check_moment_condition(z, k, q)

    support = np.flatnonzero(z) + 1
    h = np.arange(1, q, dtype=np.int64)
    rows = {r: table.values[r * h % q] for r in support}

    diagonal = off_diagonal = 0.0
    tuples = 0

    for multiset in combinations_with_replacement(support, 2 * k):
        counts = Counter(multiset)
        orderings = factorial(2 * k) // prod(factorial(c) for c in counts.values())
        weight = prod(z[r - 1] for r in multiset)
        moment = abs(np.prod([rows[r] for r in multiset], axis=0).sum())

        contribution = orderings * weight * moment
        tuples += orderings

        if all(c >= 2 for c in counts.values()):
            diagonal += contribution
        else:
            off_diagonal += contribution

    return MomentBoundReport(
        q=q,
        k=k,
        R=len(z),
        L1=L1,
        diagonal=float(diagonal),
        off_diagonal=float(off_diagonal),
        tuples=tuples,
    )


def v_counts(N, M, modulus):
    r"""Return the counts :math:`v(h) = \#\{n \le N, m \le M : n \bar{m} \equiv h\}`
    for all residues :math:`h = 0, \ldots, q-1`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.v_counts(2, 2, 7)
    array([0, 2, 1, 0, 1, 0, 0])
    """
    table = kloosterman_table(modulus)
    q = table.modulus.q

    n = np.arange(1, N + 1, dtype=np.int64) % q
    minv = inverse_table(table.modulus)[np.arange(1, M + 1) % q]

    h = np.outer(n, minv) % q

    return np.bincount(h.ravel(), minlength=q)


def ratio_coincidences(N, M):
    r"""Return the number of quadruples :math:`n_1, n_2 \le N`, :math:`m_1, m_2 \le M`
    with :math:`n_1 m_2 = n_2 m_1` over the integers."""
    ratios = Counter()
    for n in range(1, N + 1):
        for m in range(1, M + 1):
            g = gcd(n, m)
            ratios[n // g, m // g] += 1
    return sum(c**2 for c in ratios.values())


class BilinearReport:
    r"""A data class with the bilinear Kloosterman sum and the moments which bound it.
    All parameters are available as attributes.

    Parameters
    ----------
    value : complex
        The bilinear sum :math:`\sum x_{n,m} z_r S(n \bar{m}, r, q)`.
    v_second_moment : int
        The second moment :math:`\sum_h v(h)^2`.
    ratio_coincidences : int
        The number of integer solutions of :math:`n_1 m_2 = n_2 m_1`.
    kloosterman_moment : float
        The moment :math:`\sum_h |\sum_r z_r S(h, r, q)|^{2k}`.
    chain_bound : float
        The bound obtained from the two moments by Hölder's inequality.
    closed_bound : float
        The closed-form bound
        :math:`(NM)^{1-1/2k}(L_1 q^{1/2+1/4k} + L_1^{1/2} q^{1/2+1/2k})`.
    """

    def __init__(
        self,
        value,
        v_second_moment,
        ratio_coincidences,
        kloosterman_moment,
        chain_bound,
        closed_bound,
    ):
        self.value = value
        self.v_second_moment = v_second_moment
        self.ratio_coincidences = ratio_coincidences
        self.kloosterman_moment = kloosterman_moment
        self.chain_bound = chain_bound
        self.closed_bound = closed_bound
        self.ratio = abs(value) / closed_bound

    def as_dict(self):
        "Return the report as a flat dict with the complex value split up."
        out = dict(vars(self))
        out["value_re"] = self.value.real
        out["value_im"] = self.value.imag
        del out["value"]
        return out


def bilinear_report(x, z, k, modulus):
    r"""Evaluate a bilinear sum of Kloosterman sums and the moment bounds of Eq.
    :eq:`bilinear-kloosterman`.

    ..  math::
        :label: bilinear-kloosterman

        \sum_{n \le N} \sum_{m \le M} \sum_{r \le R} x_{n,m} z_r
            S(n \bar{m}, r, q) \ll (NM)^{1-\frac{1}{2k}}
            \left(L_1 q^{\frac{1}{2}+\frac{1}{4k}}
            + L_1^{\frac{1}{2}} q^{\frac{1}{2}+\frac{1}{2k}}\right)

    Parameters
    ----------
    x : array_like
        A weight matrix of shape ``(N, M)`` with ``x[n-1, m-1]`` :math:`= x_{n,m}`.
    z : array_like
        The weights :math:`z_r` for :math:`r = 1, \ldots, R`.
    k : int
        The Hölder exponent, ``k >= 2``.
    modulus : int or PrimeModulus
        The prime modulus :math:`q` with :math:`NM < q` and :math:`R < q`.

    Returns
    -------
    BilinearReport
        The bilinear sum with its moments and bounds.

    Notes
    -----
    Grouping the pairs by :math:`h = n \bar{m}` and applying Hölder's and Cauchy's
    inequalities gives

    ..  math::

        |\mathcal{S}| \le \|x\|_{k/(k-1)} \left( \Big(\sum_h v(h)^2\Big)^{1/2}
            \Big(\sum_h |W(h)|^{2k}\Big)^{1/2} \right)^{1/k}

    with :math:`W(h) = \sum_r z_r S(h, r, q)`. As :math:`NM < q`, the second moment of
    :math:`v` counts the integer solutions of :math:`n_1 m_2 = n_2 m_1`. The closed
    bound drops the :math:`q^\varepsilon` factor and is scaled by
    :math:`\max |x_{n,m}|`.
    """
    table = kloosterman_table(modulus)
    q = table.modulus.q

    x = np.atleast_2d(np.asarray(x))
    z = np.asarray(z).ravel()
    N, M = x.shape
    R = len(z)

    if k < 2:
        raise ValueError("The Hölder exponent k must be at least 2.")

    if N * M >= q:
        raise ValueError(f"Lengths must satisfy NM < q (NM={N * M}, q={q}).")

    if R < 1 or R >= q:
        raise ValueError(f"Number of weights R={R} must satisfy 1 <= R < q={q}.")

    h = np.arange(q, dtype=np.int64)
    r = np.arange(1, R + 1, dtype=np.int64)
    W = z @ table.values[np.outer(r, h) % q]

    n = np.arange(1, N + 1, dtype=np.int64)
    minv = inverse_table(table.modulus)[1 : M + 1]
    value = complex(np.sum(x * W[np.outer(n, minv) % q]))

    v = v_counts(N, M, table.modulus)
    v2 = int((v[1:] ** 2).sum())
    moment = float((np.abs(W[1:]) ** (2 * k)).sum())

    xnorm = float((np.abs(x) ** (k / (k - 1))).sum() ** ((k - 1) / k))
    chain_bound = xnorm * (np.sqrt(v2) * np.sqrt(moment)) ** (1 / k)

    L1 = float(np.abs(z).sum())
    closed_bound = (
        float(np.abs(x).max())
        * (N * M) ** (1 - 1 / (2 * k))
        * (L1 * q ** (0.5 + 1 / (4 * k)) + np.sqrt(L1) * q ** (0.5 + 1 / (2 * k)))
    )

    return BilinearReport(
        value=value,
        v_second_moment=v2,
        ratio_coincidences=ratio_coincidences(N, M),
        kloosterman_moment=moment,
        chain_bound=float(chain_bound),
        closed_bound=closed_bound,
    )
