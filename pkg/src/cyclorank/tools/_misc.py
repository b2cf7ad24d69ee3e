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
from platform import architecture, machine, platform

from ..__about__ import __version__ as version


def logo():
    return "\n".join(
        [
            "                 _                         _",
            "  ___ _   _  ___| | ___  _ __ __ _ _ __   | | __",
            " / __| | | |/ __| |/ _ \\| '__/ _` | '_ \\  | |/ /",
            "| (__| |_| | (__| | (_) | | | (_| | | | | |   <",
            " \\___|\\__, |\\___|_|\\___/|_|  \\__,_|_| |_| |_|\\_\\",
            "      |___/",
        ]
    )


def runs_on():
    return "\n".join(
        [
            f"cyclorank Version {version}",
            f"{platform(terse=True)} {machine()} {architecture()[0]}",
        ]
    )


def print_header():
    print("\n".join([logo(), "", runs_on(), ""]))


def verbosity(verbose=None):
    """Return the verbosity level for an evaluation.

    Parameters
    ----------
    verbose : bool or int or None, optional
        Verbosity level (default is None). If 1 or True and ``tqdm`` is installed, a
        progress bar is shown. If ``tqdm`` is missing or verbose is 2, text-based
        messages are printed. If None, verbosity is set to True. If None and the
        environmental variable CYCLORANK_VERBOSE is set and its value is not ``true``,
        then messages are turned off.

    Returns
    -------
    int
        The verbosity level 0, 1 or 2.
    """
    if verbose is None:
        CYCLORANK_VERBOSE = os.environ.get("CYCLORANK_VERBOSE")
        if CYCLORANK_VERBOSE is None:
            verbose = True
        else:
            verbose = CYCLORANK_VERBOSE == "true"

    if verbose:
        try:
            from tqdm import tqdm  # noqa: F401
        except ModuleNotFoundError:
            verbose = 2

    return int(verbose)


def num_threads(threads=None):
    "Return the number of worker threads, taken from CYCLORANK_THREADS if None."
    if threads is None:
        threads = os.environ.get("CYCLORANK_THREADS", 1)

    threads = int(threads)

    if threads < 1:
        raise ValueError("The number of threads must be at least 1.")

    return threads
