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

import argparse
import json
import sys
import traceback
from fractions import Fraction

from sympy import primerange

from ..__about__ import __version__
from ..characters import (
    DirichletCharacter,
    chi_av_bruteforce,
    chi_av_formula,
    count_characters_below,
    galois_orbit,
)
from ..exponentlp import (
    chinta_program,
    k_program,
    linprog_check,
    parse_program,
    s2_exponent_branches,
    s2_exponent_envelope,
    solve,
    weil_program,
)
from ..hecke import load_curves
from ..kloosterman import (
    in_D,
    kloosterman,
    kloosterman_direct,
    lemma41_report,
    moment_sum,
)
from ..lfunctions import (
    AfeParameters,
    NonvanishingScan,
    direct_lvalue,
    mollified_afe,
    mollifier_value,
)
from ..tools import save

DEFAULTS = {
    "curves": None,
    "curve": "32a",
    "tail_tolerance": 1e-10,
    "truncation_factor": 1.0,
    "threshold": 1e-8,
    "order_floor": 1,
    "threads": None,
    "format": "json",
    "output": None,
    "verbose": 0,
}


def _ints(text):
    "Parse a comma-separated list of integers."
    try:
        return [int(item) for item in str(text).split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not a list of integers.')


def _floats(text):
    "Parse a comma-separated list of floats."
    try:
        return [float(item) for item in str(text).split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not a list of numbers.')


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'"{text}" is not a rational number.')


def _add_curve_arguments(parser):
    parser.add_argument("--curves", help="curve table (default: shipped curves)")
    parser.add_argument("--curve", help="label of the curve (default: 32a)")
    parser.add_argument("--b", type=_rational, help="mollifier exponent, X = q^b")
    parser.add_argument("--a", type=_rational, help="unbalancing exponent, Y = q^a")
    parser.add_argument("--c", type=_rational, help="split exponent of S1")
    parser.add_argument("--tail-tolerance", type=float, dest="tail_tolerance")
    parser.add_argument("--truncation-factor", type=float, dest="truncation_factor")


def build_parser():
    "Return the argument parser of the command line interface."
    parser = argparse.ArgumentParser(
        prog="cyclorank",
        description="Non-vanishing of central values of twisted L-functions over "
        "Galois orbits of Dirichlet characters.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="JSON file with default options")
    parser.add_argument("--format", choices=["json", "csv"], help="output format")
    parser.add_argument("--output", "-o", help="output file (default: stdout)")

    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("chi-av", help="orbit averages of characters")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--n", type=int, help="residue (default: all units)")
    sub.set_defaults(func=_chi_av)

    sub = commands.add_parser("kloosterman", help="a Kloosterman sum S(a, b, q)")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    sub.set_defaults(func=_kloosterman)

    sub = commands.add_parser("moment", help="moment of Kloosterman products")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--rs", type=_ints, required=True, help="e.g. 1,1")
    sub.add_argument(
        "--check", action="store_true", help="compare with the defining sums"
    )
    sub.set_defaults(func=_moment)

    sub = commands.add_parser("lemma41", help="weighted moments of Kloosterman sums")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--z", type=_floats, required=True, help="weights z_1,...,z_R")
    sub.set_defaults(func=_lemma41)

    sub = commands.add_parser("lvalue", help="a twisted central value")
    _add_curve_arguments(sub)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--t", type=int, required=True, help="index of the character")
    sub.set_defaults(func=_lvalue)

    sub = commands.add_parser("scan", help="scan Galois orbits for vanishing")
    _add_curve_arguments(sub)
    sub.add_argument("--q", type=_ints, help="prime moduli, e.g. 13,17")
    sub.add_argument("--q-range", type=int, nargs=2, dest="q_range")
    sub.add_argument("--order-floor", type=int, dest="order_floor")
    sub.add_argument("--threshold", type=float)
    sub.add_argument("--threads", type=int)
    sub.add_argument("--verbose", "-v", action="count")
    sub.set_defaults(func=_scan)

    sub = commands.add_parser("optimize", help="exact exponent programs")
    sub.add_argument("file", nargs="?", help="program file")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--builtin-chinta", action="store_true", dest="chinta")
    group.add_argument("--builtin-weil", action="store_true", dest="weil")
    group.add_argument("--k", type=int, help="products of 2k Kloosterman sums")
    sub.add_argument("--check", action="store_true", help="cross-check with scipy")
    sub.set_defaults(func=_optimize)

    sub = commands.add_parser("envelope", help="exponent of the dual sums")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--a", type=_rational, required=True)
    sub.add_argument("--b", type=_rational, required=True)
    sub.add_argument("--gamma", type=_rational, required=True)
    sub.set_defaults(func=_envelope)

    sub = commands.add_parser("rankbound", help="characters of small order")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--theta", type=_rational, required=True)
    sub.set_defaults(func=_rankbound)

    return parser


def _apply_config(args):
    "Fill unset options from the config file and from the defaults, flags win."
    config = {}

    if args.config is not None:
        with open(args.config, encoding="utf-8") as file:
            config = json.load(file)

        if not isinstance(config, dict):
            raise ValueError("The config file must hold a JSON object.")

    for key, value in {**DEFAULTS, **config}.items():
        key = key.replace("-", "_")
        if getattr(args, key, None) is None:
            setattr(args, key, value)

    return args


def _params(args):
    kwargs = {
        "tail_tolerance": args.tail_tolerance,
        "truncation_factor": args.truncation_factor,
    }
    for key in ["b", "a", "c"]:
        if getattr(args, key, None) is not None:
            kwargs[key] = Fraction(getattr(args, key))
    return AfeParameters(**kwargs)


def _curve(args):
    curves = load_curves(args.curves)

    if args.curve not in curves:
        raise ValueError(f'Curve "{args.curve}" not found, use one of {list(curves)}.')

    return curves[args.curve]


def _chi_av(args):
    orbit = galois_orbit(DirichletCharacter(args.q, args.d))
    ns = [args.n] if args.n is not None else range(1, args.q)

    rows = []
    for n in ns:
        formula = chi_av_formula(n, args.q, args.d)
        brute = chi_av_bruteforce(orbit, n)
        rows.append(
            {
                "n": n,
                "formula": formula,
                "bruteforce": brute.real,
                "diff": abs(float(formula) - brute),
            }
        )
    return rows


def _kloosterman(args):
    value = kloosterman(args.a, args.b, args.q)
    return [{"q": args.q, "a": args.a, "b": args.b, "value": value}]


def _moment(args):
    row = {
        "q": args.q,
        "rs": ",".join(str(r) for r in args.rs),
        "value": moment_sum(args.rs, args.q),
        "in_D": in_D(args.rs),
    }

    if args.check:
        direct = 0j
        for h in range(1, args.q):
            product = 1 + 0j
            for r in args.rs:
                product *= kloosterman_direct(h, r, args.q)
            direct += product
        row["direct"] = direct
        row["diff"] = abs(row["value"] - direct)

    return [row]


def _lemma41(args):
    return [lemma41_report(args.z, args.k, args.q)]


def _lvalue(args):
    E = _curve(args)
    params = _params(args)
    chi = DirichletCharacter(args.q, args.t)
    return [
        {
            "curve": E.label,
            "q": args.q,
            "t": chi.index,
            "order": chi.order,
            "lvalue": direct_lvalue(E, chi, params),
            "mollifier": mollifier_value(E, chi, params.X(args.q)),
            "afe": mollified_afe(E, chi, params),
        }
    ]


def _scan(args):
    q_list = list(args.q or [])

    if args.q_range is not None:
        q_list.extend(int(p) for p in primerange(args.q_range[0], args.q_range[1] + 1))

    if not q_list:
        raise ValueError("No moduli given, use --q or --q-range.")

    scan = NonvanishingScan(
        _curve(args),
        sorted(set(q_list)),
        order_floor=args.order_floor,
        params=_params(args),
        threshold=args.threshold,
    )
    return scan.evaluate(verbose=args.verbose, threads=args.threads).rows


def _optimize(args):
    if args.chinta:
        program = chinta_program()
    elif args.weil:
        program = weil_program()
    elif args.k is not None:
        program = k_program(args.k)
    elif args.file is not None:
        with open(args.file, encoding="utf-8") as file:
            program = parse_program(file.read())
    else:
        raise ValueError(
            "Give a program file, --builtin-chinta, --builtin-weil or --k."
        )

    result = solve(program)
    row = result.as_dict()

    if args.check:
        row["linprog"] = linprog_check(program)

    return [row]


def _envelope(args):
    first, second = s2_exponent_branches(args.k, args.a, args.b, args.gamma)
    return [
        {
            "k": args.k,
            "a": args.a,
            "b": args.b,
            "gamma": args.gamma,
            "envelope": s2_exponent_envelope(args.k, args.a, args.b, args.gamma),
            "first": first,
            "second": second,
        }
    ]


def _rankbound(args):
    count = count_characters_below(args.q, args.theta)
    return [
        {
            "q": args.q,
            "theta": args.theta,
            "count": count,
            "characters": args.q - 1,
            "fraction": count / (args.q - 1),
        }
    ]


def main(argv=None):
    """Run the command line interface and return the exit code, which is 0 on
    success, 2 for invalid input and 1 for all other errors.

    Examples
    --------
    >>> from cyclorank.cli import main
    >>>
    >>> main(["rankbound", "--q", "13", "--theta", "1/2"])
    {"q": 13, "theta": "1/2", "count": 4, "characters": 12, "fraction": 0.33333333333333331}
    0
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        args = _apply_config(args)
        rows = args.func(args)

        if args.output is None:
            save(rows, sys.stdout, fmt=args.format)
        else:
            save(rows, args.output, fmt=args.format)

    except (ValueError, OSError) as error:
        print(f"cyclorank {args.command}: error: {error}", file=sys.stderr)
        return 2

    except Exception:
        traceback.print_exc()
        return 1

    return 0
