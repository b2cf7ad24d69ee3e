from ._average import (
    all_orbits,
    chi_av_bruteforce,
    chi_av_formula,
    chi_av_l1,
    chi_av_table,
    count_characters_below,
    orbit_average_all,
    root_number,
    tilde_chi_av_direct,
    tilde_chi_av_kloosterman,
    tilde_chi_av_kloosterman_values,
    tilde_chi_av_values,
)
from ._character import DirichletCharacter, GaloisOrbit, eval, galois_orbit, gauss_sum

__all__ = [
    "DirichletCharacter",
    "GaloisOrbit",
    "all_orbits",
    "chi_av_bruteforce",
    "chi_av_formula",
    "chi_av_l1",
    "chi_av_table",
    "count_characters_below",
    "eval",
    "galois_orbit",
    "gauss_sum",
    "orbit_average_all",
    "root_number",
    "tilde_chi_av_direct",
    "tilde_chi_av_kloosterman",
    "tilde_chi_av_kloosterman_values",
    "tilde_chi_av_values",
]
