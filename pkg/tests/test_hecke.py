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
from concurrent.futures import ThreadPoolExecutor
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint, isprime, primerange

import cyclorank as cr


def pre():
    return cr.load_curves()


def test_load_curves():
    curves = pre()

    assert list(curves) == ["11a", "19a", "32a", "37a", "43a"]
    assert curves["11a"].weierstrass == (0, -1, 1, -10, -20)
    assert curves["11a"].conductor == 11
    assert curves["37a"].epsilon == -1
    assert curves["32a"].label == "32a"


def test_load_curves_file(tmpdir):
    path = os.path.join(tmpdir, "curves.txt")

    with open(path, "w") as file:
        file.write("label a1 a2 a3 a4 a6 conductor epsilon\n")
        file.write("37a 0 0 1 -1 0 37 -1\n")

    curves = cr.load_curves(path)
    assert list(curves) == ["37a"]

    with open(path, "w") as file:
        file.write("label a1 a2 a3 a4 a6 conductor\n")
        file.write("37a 0 0 1 -1 0 37\n")

    with pytest.raises(ValueError):
        cr.load_curves(path)


def test_curve():
    E = cr.EllipticCurveForm([0, 0, 0, -1, 0], conductor=32, label="32a")

    assert E.discriminant == 64
    assert cr.discriminant(E) == 64
    assert E.is_bad(2)
    assert not E.is_bad(3)

    F = E.copy(epsilon=-1)
    assert F.epsilon == -1
    assert F.conductor == E.conductor
    assert F._ap is E._ap

    with pytest.raises(ValueError):
        cr.EllipticCurveForm([0, 0, 0, 0, 0], conductor=1)

    with pytest.raises(ValueError):
        cr.EllipticCurveForm([0, 0, 0, -1], conductor=32)

    with pytest.raises(ValueError):
        cr.EllipticCurveForm([0, 0, 0, -1, 0], conductor=32, epsilon=2)

    with pytest.raises(ValueError):
        cr.EllipticCurveForm([0, 0, 0, -1, 0], conductor=0)


def test_discriminant():
    for E in pre().values():
        # all primes of bad reduction divide the conductor
        assert all(E.conductor % p == 0 for p in factorint(abs(E.discriminant)))


def test_ap():
    curves = pre()

    E = curves["11a"]
    assert [cr.ap(E, p) for p in [2, 3, 5, 7, 11, 13]] == [-2, -1, 1, -2, 1, 4]

    E = curves["37a"]
    assert [cr.ap(E, p) for p in [2, 3, 5, 7]] == [-2, -3, -2, -1]

    E = curves["32a"]
    assert all(cr.ap(E, p) == 0 for p in primerange(3, 200) if p % 4 == 3)

    for E in curves.values():
        for p in primerange(2, 300):
            if not E.is_bad(p):
                assert abs(cr.ap(E, p)) <= 2 * np.sqrt(p)

        # at a prime level the root number equals a_N
        if isprime(E.conductor):
            assert cr.ap(E, E.conductor) == E.epsilon

    with pytest.raises(ValueError):
        cr.ap(curves["11a"], 4)


def test_hasse_bound():
    primes = np.array(list(primerange(2, 10**4 + 1)))

    for E in pre().values():
        good = np.array([not E.is_bad(p) for p in primes])
        a = np.array([cr.ap(E, p) for p in primes[good]])

        assert np.all(a**2 <= 4 * primes[good])


def test_lambda_array():
    for E in pre().values():
        lam = cr.lambda_array(E, 500)

        assert lam[0] == 0
        assert lam[1] == 1
        assert len(lam) == 501

        for n in [2, 4, 12, 25, 64, 97, 121, 360, 500]:
            assert np.isclose(lam[n], cr.hecke_lambda(E, n))

        with pytest.raises(ValueError):
            lam[1] = 0

    with pytest.raises(ValueError):
        cr.hecke_lambda(E, 0)


@settings(max_examples=50)
@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
def test_hecke_relations(m, n):
    E = pre()["11a"]
    lam = cr.lambda_array(E, m * n)

    if gcd(m, n) == 1:
        assert np.isclose(lam[m * n], lam[m] * lam[n])

    # Hecke relation: sum over common divisors coprime to the level
    value = sum(
        lam[m * n // (d * d)]
        for d in range(1, gcd(m, n) + 1)
        if gcd(m, n) % d == 0 and gcd(d, E.conductor) == 1
    )
    assert np.isclose(lam[m] * lam[n], value)


def test_lambda_threads():
    E = pre()["19a"].copy()

    with ThreadPoolExecutor(max_workers=4) as pool:
        arrays = list(pool.map(lambda n: cr.lambda_array(E, n), [100, 3000, 50, 2000]))

    reference = cr.lambda_array(E, 3000)
    for array in arrays:
        assert np.array_equal(array, reference[: len(array)])


def test_mollifier():
    curves = pre()

    for E in [curves["11a"], curves["32a"]]:
        for X in [10, 50, 200]:
            a = cr.tail_coeffs(E, X, X)
            assert abs(a[1] - 1) < 1e-12
            assert np.all(np.abs(a[2:]) < 1e-12)

        c = cr.mollifier_coeffs(E, 50)
        assert c[0] == 0
        assert c[1] == 1
        assert np.isclose(c[2], -cr.hecke_lambda(E, 2))

    E = curves["32a"]
    c = cr.mollifier_coeffs(E, 30)
    assert np.isclose(c[25], 1)
    assert c[4] == 0
    assert c[27] == 0

    with pytest.raises(ValueError):
        cr.mollifier_coeffs(E, 0.5)

    with pytest.raises(ValueError):
        cr.tail_coeffs(E, 20, 10)



def test_coefficient_bounds():
    X, n_max = 60, 3000

    # divisor counts d(n) and their divisor sums
    d = np.zeros(n_max + 1)
    D = np.zeros(n_max + 1)
    for m in range(1, n_max + 1):
        d[m::m] += 1
    for m in range(1, n_max + 1):
        D[m::m] += d[m]

    for E in pre().values():
        c = cr.mollifier_coeffs(E, X)
        a = cr.tail_coeffs(E, X, n_max)

        assert np.all(np.abs(c[1:]) <= d[1 : X + 1] + 1e-12)
        assert np.all(np.abs(a[1:]) <= D[1:] + 1e-9)


if __name__ == "__main__":
    test_load_curves()
    test_curve()
    test_discriminant()
    test_ap()
    test_hasse_bound()
    test_lambda_array()
    test_hecke_relations()
    test_lambda_threads()
    test_mollifier()
    test_coefficient_bounds()
