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

import warnings

from ..characters import all_orbits
from ..tools import print_header, save, verbosity
from ._afe import _default_params
from ._moment import orbit_average_moment


class NonvanishingScan:
    r"""A job which scans the Galois orbits of characters modulo a list of primes for
    vanishing central values of the twists of an elliptic curve.

    Parameters
    ----------
    curve : EllipticCurveForm
        The elliptic curve of conductor :math:`N`.
    q_list : list of int
        The prime moduli.
    order_floor : int, optional
        Only orbits of characters with an order of at least ``order_floor`` are
        scanned (default is 1).
    params : AfeParameters or None, optional
        The parameters (default is None). If None, the default parameters are used.
    threshold : float, optional
        Threshold below which a central value is counted as vanishing (default is
        1e-8).
    callback : callable, optional
        A callable which is called after each completed orbit with the function
        signature ``callback(q, orbit, report, **kwargs)``.
    **kwargs : dict
        Optional keyword-arguments for the ``callback`` function.

    Attributes
    ----------
    rows : list of dict
        One row per scanned orbit, sorted by ``(q, d)``. A modulus which divides the
        conductor results in a single row with ``skipped=True``.
    reports : list of MomentReport
        The reports of all scanned orbits.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> E = cr.load_curves()["32a"]
    >>> scan = cr.NonvanishingScan(E, q_list=[13, 17], order_floor=12)
    >>> rows = scan.evaluate(verbose=0).rows
    >>> [(row["q"], row["d"], row["vanishing_count"]) for row in rows]
    [(13, 1, 0), (17, 1, 0)]
    """

    def __init__(
        self,
        curve,
        q_list,
        order_floor=1,
        params=None,
        threshold=1e-8,
        callback=lambda q, orbit, report, **kwargs: None,
        **kwargs,
    ):
        self.curve = curve
        self.q_list = sorted(int(q) for q in q_list)
        self.order_floor = order_floor
        self.params = params if params is not None else _default_params()
        self.threshold = threshold
        self.callback = callback
        self.kwargs = kwargs
        self.rows = []
        self.reports = []

    def _orbits(self, q):
        return [orbit for orbit in all_orbits(q) if orbit.order >= self.order_floor]

    def evaluate(self, filename=None, verbose=None, threads=None):
        """Evaluate the scan.

        Parameters
        ----------
        filename : str or None, optional
            The filename of a JSON-lines or CSV result file (default is None). If None,
            no result file is written.
        verbose : bool or int or None, optional
            Verbosity level to control how messages are printed during evaluation. If
            1 or True and ``tqdm`` is installed, a progress bar is shown. If ``tqdm`` is
            missing or verbose is 2, more detailed text-based messages are printed.
            Default is None. If None, verbosity is set to True. If None and the
            environmental variable CYCLORANK_VERBOSE is set and its value is not
            ``true``, then logging is turned off.
        threads : int or None, optional
            Number of worker threads for the members of an orbit (default is None).

        Returns
        -------
        NonvanishingScan
            The scan object.
        """
        verbose = verbosity(verbose)

        if verbose == 2:
            print_header()

        self.rows = []
        self.reports = []

        tasks = []
        for q in self.q_list:
            if self.curve.conductor % q == 0:
                warnings.warn(f"Skipping q={q}, it divides the conductor.")
                self.rows.append({"q": q, "skipped": True})
            else:
                tasks.extend((q, orbit) for orbit in self._orbits(q))

        if verbose == 1:
            from tqdm import tqdm

            progress_bar = tqdm(total=len(tasks), unit="orbit")

        for q, orbit in tasks:
            report = orbit_average_moment(
                self.curve,
                orbit,
                params=self.params,
                threshold=self.threshold,
                threads=threads,
            )
            self.reports.append(report)
            self.rows.append({**report.as_dict(), "skipped": False})

            if verbose == 2:
                print(
                    f"q={q} d={orbit.d} |G|={len(orbit)}: "
                    f"min|L|={report.min_abs_L:.3e}, "
                    f"vanishing={report.vanishing_count}"
                )

            self.callback(q, orbit, report, **self.kwargs)

            if verbose == 1:
                progress_bar.update(1)

        if verbose == 1:
            progress_bar.close()

        self.rows.sort(key=lambda row: (row["q"], row.get("d", 0)))

        if filename is not None:
            save(self.rows, filename)

        return self


def nonvanishing_scan(curve, q_list, order_floor=1, params=None, **kwargs):
    r"""Scan the Galois orbits of characters modulo a list of primes for vanishing
    central values of the twists of an elliptic curve and return the rows of the
    :class:`NonvanishingScan`.

    Examples
    --------
    >>> import cyclorank as cr
    >>>
    >>> cr.nonvanishing_scan(cr.load_curves()["32a"], [], verbose=0)
    []
    """
    keys = [key for key in ["filename", "verbose", "threads"] if key in kwargs]
    evaluate_kwargs = {key: kwargs.pop(key) for key in keys}
    scan = NonvanishingScan(curve, q_list, order_floor, params, **kwargs)
    return scan.evaluate(**evaluate_kwargs).rows
