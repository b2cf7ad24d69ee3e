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
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import cyclorank as cr

PRIMES = [3, 5, 7, 11, 13, 31, 61, 101]


def test_modulus():
    M = cr.PrimeModulus(13)

    assert M.q == 13
    assert M.phi == 12
    assert M.g == 2
    assert M.factors == {2: 2, 3: 1}
    assert M.divisors() == [1, 2, 3, 4, 6, 12]
    assert M.dlog[0] == -1
    assert M == cr.modarith.as_modulus(13)
    assert hash(M) == hash(cr.PrimeModulus(13))

    with pytest.raises(ValueError):
        M.dlog[1] = 5

    with pytest.raises(ValueError):
        cr.PrimeModulus(15)

    with pytest.raises(ValueError):
        cr.PrimeModulus(2)

    with pytest.raises(TypeError):
        cr.modarith.as_modulus(13.0)


def test_tables():
    for q in PRIMES:
        M = cr.PrimeModulus(q)
        r = np.arange(1, q)

        assert np.all(M.powers[M.dlog[r]] == r)
        assert sorted(M.powers) == list(range(1, q))

        inv = cr.modarith.inverse_table(M)
        assert inv[0] == 0
        assert np.all(inv[r] * r % q == 1)


def test_order():
    for q in PRIMES:
        M = cr.PrimeModulus(q)
        g = cr.primitive_root(q)

        assert cr.mul_order(g, M) == q - 1
        assert cr.mul_order(1, M) == 1
        assert cr.mul_order(q - 1, M) == 2

        for n in range(1, q):
            order = cr.mul_order(n, M)
            assert (q - 1) % order == 0
            assert pow(n, order, q) == 1
            assert all(pow(n, t, q) != 1 for t in range(1, order))

    with pytest.raises(ValueError):
        cr.mul_order(7, 7)


def test_primitive_root():
    assert [cr.primitive_root(q) for q in [3, 5, 7, 11, 13, 17, 19, 23]] == [
        2,
        2,
        3,
        2,
        2,
        3,
        2,
        5,
    ]


@given(st.sampled_from(PRIMES), st.integers(min_value=1, max_value=10**6))
def test_inverse(q, n):
    if n % q == 0:
        with pytest.raises(ValueError):
            cr.inv_mod(n, q)
    else:
        assert cr.inv_mod(n, q) * n % q == 1


@given(st.sampled_from(PRIMES), st.integers(min_value=1, max_value=10**6))
def test_discrete_log(q, n):
    if n % q != 0:
        k = cr.discrete_log(n, q)
        assert 0 <= k < q - 1
        assert pow(cr.primitive_root(q), k, q) == n % q


if __name__ == "__main__":
    test_modulus()
    test_tables()
    test_order()
    test_primitive_root()
    test_inverse()
    test_discrete_log()
