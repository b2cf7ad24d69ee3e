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
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primerange, totient

import cyclorank as cr


def pre():
    curves = cr.load_curves()
    return curves["11a"], curves["32a"]


def test_character():
    chi = cr.DirichletCharacter(7, 1)

    assert chi.order == 6
    assert chi.d == 1
    assert not chi.is_trivial
    assert chi.is_primitive
    assert chi(0) == 0
    assert chi(7) == 0
    assert np.isclose(chi(1), 1)
    assert np.isclose(chi(3), np.exp(2j * np.pi / 6))
    assert chi.parity() == -1
    assert chi.conj() == chi.power(-1) == cr.DirichletCharacter(7, 5)
    assert np.allclose(chi([1, 3, 8]), [1, chi(3), 1])
    assert hash(chi) == hash(cr.DirichletCharacter(7, 7))

    trivial = cr.DirichletCharacter(7, 6)
    assert trivial.is_trivial
    assert trivial.order == 1

    with pytest.raises(ValueError):
        cr.galois_orbit(trivial)

    with pytest.raises(ValueError):
        chi.values[1] = 0


@given(
    st.sampled_from([5, 7, 11, 13, 31]),
    st.integers(min_value=0, max_value=60),
    st.integers(min_value=1, max_value=1000),
    st.integers(min_value=1, max_value=1000),
)
def test_multiplicative(q, t, m, n):
    chi = cr.DirichletCharacter(q, t)
    assert np.isclose(chi(m * n), chi(m) * chi(n))
    assert np.isclose(abs(chi(n)), 0 if n % q == 0 else 1)


def test_orbit():
    for q in [7, 13, 31]:
        orbits = cr.all_orbits(q)
        M = cr.PrimeModulus(q)

        assert [orbit.d for orbit in orbits] == [d for d in M.divisors() if d < q - 1]

        # the orbits of all non-trivial characters partition them
        assert sum(len(orbit) for orbit in orbits) == q - 2

        for orbit in orbits:
            assert len(orbit) == totient(orbit.order)
            assert all(chi.order == orbit.order for chi in orbit)
            assert all(chi.d == orbit.d for chi in orbit)


def test_gauss_sum():
    for q in [5, 7, 13, 31]:
        for t in range(1, q - 1):
            chi = cr.DirichletCharacter(q, t)
            tau = cr.gauss_sum(chi)
            assert np.isclose(abs(tau), np.sqrt(q))
            assert np.isclose(tau * cr.gauss_sum(chi.conj()), chi.parity() * q)


def test_chi_av_formula():
    for q in primerange(3, 102):
        M = cr.PrimeModulus(q)

        for d in M.divisors():
            if d == q - 1:
                continue

            orbit = cr.galois_orbit(cr.DirichletCharacter(M, d))
            brute = np.mean([chi.values for chi in orbit], axis=0)
            table = cr.chi_av_table(M, d)

            assert np.all(np.abs(brute.imag) < 1e-12)
            assert np.all(np.abs(table - brute) < 1e-12)

    for n, d, value in [(1, 1, 1), (2, 1, Fraction(-1, 2)), (3, 2, Fraction(-1, 2))]:
        assert cr.chi_av_formula(n, 7, d) == value

    orbit = cr.galois_orbit(cr.DirichletCharacter(13, 2))
    for n in range(1, 13):
        formula = cr.chi_av_formula(n, 13, 2)
        assert abs(float(formula) - cr.chi_av_bruteforce(orbit, n)) < 1e-12

    with pytest.raises(ValueError):
        cr.chi_av_formula(7, 7, 1)

    with pytest.raises(ValueError):
        cr.chi_av_formula(2, 7, 6)

    with pytest.raises(ValueError):
        cr.chi_av_formula(2, 7, 4)


def test_tilde_chi_av():
    curves = pre()

    for E in curves:
        for q in [7, 13, 31, 61]:
            M = cr.PrimeModulus(q)

            for orbit in cr.all_orbits(M):
                direct = cr.tilde_chi_av_values(E, orbit)
                kloosterman = cr.characters.tilde_chi_av_kloosterman_values(
                    E, M, orbit.d
                )
                assert np.all(np.abs(direct[1:] - kloosterman[1:]) < 1e-9)

                for n in [1, 2, q - 1]:
                    value = cr.tilde_chi_av_kloosterman(E, M, orbit.d, n)
                    assert abs(value - cr.tilde_chi_av_direct(E, orbit, n)) < 1e-9

    with pytest.raises(ValueError):
        cr.tilde_chi_av_kloosterman(curves[0], 11, 1, 1)


def test_root_number():
    E, _ = pre()

    for t in range(1, 12):
        chi = cr.DirichletCharacter(13, t)
        assert np.isclose(abs(cr.root_number(E, chi)), 1)

    with pytest.raises(ValueError):
        cr.root_number(E, cr.DirichletCharacter(11, 1))


def test_chi_av_l1():
    for q in [7, 13, 31, 61, 101]:
        for d in cr.PrimeModulus(q).divisors()[:-1]:
            L1, (lower, upper) = cr.chi_av_l1(q, d)

            assert isinstance(L1, Fraction)
            assert L1 >= totient(d)
            assert lower >= 1
            assert np.isclose(
                float(L1), np.abs(cr.chi_av_table(q, d)).sum(), rtol=1e-12
            )


def test_count_characters_below():
    assert cr.count_characters_below(7, 1) == 6
    assert cr.count_characters_below(7, 0) == 0
    assert cr.count_characters_below(13, "1/2") == 4
    assert cr.count_characters_below(13, Fraction(1, 2)) == 4

    with pytest.raises(ValueError):
        cr.count_characters_below(13, -1)


def test_orbit_average_all():
    for q in [7, 13]:
        for n in range(1, q):
            chis = [cr.DirichletCharacter(q, t) for t in range(q - 1)]
            average = np.mean([chi(n) for chi in chis])
            assert np.isclose(average, float(cr.orbit_average_all(q, n)))


if __name__ == "__main__":
    test_character()
    test_multiplicative()
    test_orbit()
    test_gauss_sum()
    test_chi_av_formula()
    test_tilde_chi_av()
    test_root_number()
    test_chi_av_l1()
    test_count_characters_below()
    test_orbit_average_all()
