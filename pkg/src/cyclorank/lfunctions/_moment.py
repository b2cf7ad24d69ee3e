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

from concurrent.futures import ThreadPoolExecutor
from math import log

import numpy as np

from ..characters import (
    chi_av_table,
    tilde_chi_av_kloosterman_values,
    tilde_chi_av_values,
)
from ..tools import num_threads
from ._afe import (
    _check_level,
    _default_params,
    direct_lvalue,
    mollified_sums,
    mollifier_value,
)
from ._parameters import s1_envelope, s2_envelope


class MomentReport:
    r"""A data class with the orbit average of the mollified central values and its
    decomposition :math:`1 + S_1 + S_2`. All parameters are available as attributes.

    Parameters
    ----------
    q : int
        The prime modulus.
    d : int
        The divisor :math:`d = (q-1) / \operatorname{ord}(\chi)`.
    average : complex
        Orbit average of the central values times the mollifier,
        :math:`\frac{1}{|G|} \sum_\sigma L(f \otimes \chi^\sigma, \tfrac{1}{2})
        M_X(f \otimes \chi^\sigma, \tfrac{1}{2})`.
    afe_average : complex
        Orbit average of the mollified approximate functional equations.
    s1 : complex
        The orbit average :math:`S_1` of the first sums.
    s2 : complex
        The orbit average :math:`S_2` of the dual sums.
    members : list of dict
        Per-member values with the keys ``index``, ``lvalue``, ``mollifier`` and
        ``afe``.
    s1_envelope : float
        The bound shape of :math:`S_1`.
    s2_envelope : float
        The bound shape of :math:`S_2`.
    threshold : float, optional
        Threshold below which a central value is counted as vanishing (default is
        1e-8).

    Attributes
    ----------
    gamma : float
        The exponent :math:`\gamma = \log d / \log q`.
    orbit_size : int
        The number of members of the orbit.
    residual : complex
        The remainder ``average - 1 - s1 - s2``, which is of order :math:`1/q`.
    decomposition_error : complex
        The remainder ``afe_average - 1 - s1 - s2``, which is of the order of the tail
        tolerance.
    min_abs_L : float
        The smallest absolute central value of the orbit.
    min_abs_LM : float
        The smallest absolute mollified central value of the orbit.
    vanishing_count : int
        The number of members with an absolute central value below the threshold.
    average_nonzero : bool
        A flag which is True if the absolute average exceeds the threshold. Then no
        central value of the orbit vanishes.
    """

    def __init__(
        self,
        q,
        d,
        average,
        afe_average,
        s1,
        s2,
        members,
        s1_envelope,
        s2_envelope,
        threshold=1e-8,
    ):
        self.q = q
        self.d = d
        self.gamma = log(d) / log(q)
        self.orbit_size = len(members)
        self.average = average
        self.afe_average = afe_average
        self.s1 = s1
        self.s2 = s2
        self.residual = average - 1 - s1 - s2
        self.decomposition_error = afe_average - 1 - s1 - s2
        self.members = members
        self.threshold = threshold

        L = np.array([member["lvalue"] for member in members])
        LM = L * np.array([member["mollifier"] for member in members])

        self.min_abs_L = float(np.abs(L).min())
        self.min_abs_LM = float(np.abs(LM).min())
        self.vanishing_count = int(np.sum(np.abs(L) < threshold))
        self.average_nonzero = bool(abs(average) > threshold)

        self.s1_envelope = s1_envelope
        self.s2_envelope = s2_envelope
        self.s1_ratio = abs(s1) / s1_envelope
        self.s2_ratio = abs(s2) / s2_envelope

    def __repr__(self):
        return (
            f"<cyclorank.MomentReport(q={self.q}, d={self.d}, "
            f"orbit_size={self.orbit_size}, |residual|={abs(self.residual):.3e})>"
        )

    def as_dict(self):
        "Return the report as a flat dict without the per-member values."
        return {
            "q": self.q,
            "d": self.d,
            "gamma": self.gamma,
            "orbit_size": self.orbit_size,
            "average": self.average,
            "s1": self.s1,
            "s2": self.s2,
            "residual_abs": abs(self.residual),
            "min_abs_L": self.min_abs_L,
            "vanishing_count": self.vanishing_count,
            "afe_average": self.afe_average,
            "decomposition_error_abs": abs(self.decomposition_error),
            "min_abs_LM": self.min_abs_LM,
            "average_nonzero": self.average_nonzero,
            "s1_ratio": self.s1_ratio,
            "s2_ratio": self.s2_ratio,
        }


def compute_S1(E, orbit, params=None):
    r"""Return the orbit average of the first sums, see Eq. :eq:`s1-average`.

    ..  math::
        :label: s1-average

        S_1 = \sum_{n > X} \frac{a_n \chi_{\text{av}}(n)}{\sqrt{n}}
            e^{-\frac{2 \pi n}{q Y \sqrt{N}}}

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    orbit : GaloisOrbit
        A Galois orbit of characters modulo a prime :math:`q \nmid N`.
    params : AfeParameters or None, optional
        The parameters (default is None). If None, the default parameters are used.

    Returns
    -------
    complex
        The orbit average :math:`S_1`.
    """
    q = orbit.modulus.q
    sums = mollified_sums(E, q, params)
    return sums.first_average(chi_av_table(orbit.modulus, orbit.d))


def compute_S2(E, orbit, params=None):
    r"""Return the orbit average of the dual sums, see Eq. :eq:`s2-average`,
    evaluated in two ways.

    ..  math::
        :label: s2-average

        S_2 = \sum_{n \ge 1} \sum_{m \le X}
            \frac{\lambda_f(n) c_m \tilde{\chi}_{\text{av}}(n \bar{m})}{\sqrt{nm}}
            e^{-\frac{2 \pi n Y}{m q \sqrt{N}}}

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    orbit : GaloisOrbit
        A Galois orbit of characters modulo a prime :math:`q \nmid N`.
    params : AfeParameters or None, optional
        The parameters with :math:`2b < a` (default is None). If None, the default
        parameters are used.

    Returns
    -------
    complex
        The orbit average :math:`S_2` with :math:`\tilde{\chi}_{\text{av}}` from the
        orbit members.
    complex
        The orbit average :math:`S_2` with :math:`\tilde{\chi}_{\text{av}}` from its
        Kloosterman form, i.e. the triple sum

        ..  math::

            \frac{\varepsilon(f)}{q} \sum_{n} \sum_{m \le X} \sum_{r \bmod q}
                \frac{\lambda_f(n) c_m \chi_{\text{av}}(rN)}{\sqrt{nm}}
                S(r, n \bar{m}, q) e^{-\frac{2 \pi n Y}{m q \sqrt{N}}}.

    Notes
    -----
    Both sums are truncated at :math:`n \approx q X \sqrt{N} \ln(1/\text{tol}) /
    (2 \pi Y)`, where the weights of the largest :math:`m \le X` drop below the tail
    tolerance.
    """
    if params is None:
        params = _default_params()

    params.check_dual()

    q = orbit.modulus.q
    sums = mollified_sums(E, q, params)

    direct = sums.dual_average(tilde_chi_av_values(E, orbit))
    kloosterman = sums.dual_average(
        tilde_chi_av_kloosterman_values(E, orbit.modulus, orbit.d)
    )

    return direct, kloosterman


def _member_values(E, chi, params, sums):
    return {
        "index": chi.index,
        "lvalue": direct_lvalue(E, chi, params),
        "mollifier": mollifier_value(E, chi, sums.X),
        "afe": sums.value(chi),
    }


def orbit_average_moment(E, orbit, params=None, threshold=1e-8, threads=None):
    r"""Average the mollified central values over a Galois orbit and decompose the
    average into :math:`1 + S_1 + S_2`.

    Parameters
    ----------
    E : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    orbit : GaloisOrbit
        A Galois orbit of characters modulo a prime :math:`q \nmid N`.
    params : AfeParameters or None, optional
        The parameters with :math:`2b < a` (default is None). If None, the default
        parameters are used.
    threshold : float, optional
        Threshold below which a central value is counted as vanishing (default is
        1e-8).
    threads : int or None, optional
        Number of worker threads for the orbit members (default is None). If None, it
        is taken from the environmental variable CYCLORANK_THREADS or set to 1.

    Returns
    -------
    MomentReport
        The averages, the decomposition and the per-member values.

    Notes
    -----
    If the average is nonzero, then no central value of the orbit vanishes, because
    the central values of all Galois conjugates vanish simultaneously.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["32a"]
    >>> orbit = cr.galois_orbit(cr.DirichletCharacter(13, 1))
    >>> report = cr.orbit_average_moment(E, orbit)
    >>> report.orbit_size, report.vanishing_count
    (4, 0)
    >>> abs(report.decomposition_error) < 1e-8
    True
    """
    if params is None:
        params = _default_params()

    params.check_dual()

    q = orbit.modulus.q
    _check_level(E, q)

    sums = mollified_sums(E, q, params)
    threads = num_threads(threads)

    def evaluate(chi):
        return _member_values(E, chi, params, sums)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            members = list(pool.map(evaluate, orbit.members))
    else:
        members = [evaluate(chi) for chi in orbit.members]

    LM = [member["lvalue"] * member["mollifier"] for member in members]
    afe = [member["afe"] for member in members]

    return MomentReport(
        q=q,
        d=orbit.d,
        average=complex(np.mean(LM)),
        afe_average=complex(np.mean(afe)),
        s1=compute_S1(E, orbit, params),
        s2=sums.dual_average(tilde_chi_av_values(E, orbit)),
        members=members,
        s1_envelope=s1_envelope(q, orbit.d, params),
        s2_envelope=s2_envelope(q, orbit.d, params),
        threshold=threshold,
    )
