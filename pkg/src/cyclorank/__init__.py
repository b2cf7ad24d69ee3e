from . import (
    characters,
    exponentlp,
    hecke,
    lfunctions,
    modarith,
    tools,
)
from .__about__ import __version__
from .characters import (
    DirichletCharacter,
    GaloisOrbit,
    all_orbits,
    chi_av_bruteforce,
    chi_av_formula,
    chi_av_l1,
    chi_av_table,
    count_characters_below,
    eval,
    galois_orbit,
    gauss_sum,
    orbit_average_all,
    root_number,
    tilde_chi_av_direct,
    tilde_chi_av_kloosterman,
    tilde_chi_av_values,
)
from .exponentlp import (
    ExponentProgram,
    InfeasibleError,
    NonlinearTermError,
    OptimizeResult,
    ParseError,
    ProgramError,
    UnboundedError,
    UnknownVariableError,
    best_k,
    chinta_program,
    format_program,
    k_program,
    linprog_check,
    parse_program,
    s2_exponent_branches,
    s2_exponent_envelope,
    sample_feasible,
    solve,
    weil_program,
)
from .hecke import (
    EllipticCurveForm,
    ap,
    discriminant,
    hecke_lambda,
    lambda_array,
    load_curves,
    mollifier_coeffs,
    tail_coeffs,
)
from .kloosterman import (
    BilinearReport,
    KloostermanTable,
    MomentBoundReport,
    bilinear_report,
    in_D,
    kloosterman_direct,
    lemma41_report,
    moment_sum,
    ratio_coincidences,
    v_counts,
)
from .kloosterman import kloosterman as kloosterman_sum
from .lfunctions import (
    AfeParameters,
    MomentReport,
    NonvanishingScan,
    RootNumberCheck,
    check_root_number,
    compute_S1,
    compute_S2,
    direct_lvalue,
    lvalue,
    mollified_afe,
    mollifier_value,
    nonvanishing_scan,
    orbit_average_moment,
    partial_sum_average,
    s1_envelope,
    s2_envelope,
)
from .modarith import (
    PrimeModulus,
    discrete_log,
    inv_mod,
    mul_order,
    primitive_root,
)
from .tools import runs_on, save

__all__ = [
    "__version__",
    "characters",
    "exponentlp",
    "hecke",
    "kloosterman",
    "lfunctions",
    "modarith",
    "tools",
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
    "tilde_chi_av_values",
    "ExponentProgram",
    "InfeasibleError",
    "NonlinearTermError",
    "OptimizeResult",
    "ParseError",
    "ProgramError",
    "UnboundedError",
    "UnknownVariableError",
    "best_k",
    "chinta_program",
    "format_program",
    "k_program",
    "linprog_check",
    "parse_program",
    "s2_exponent_branches",
    "s2_exponent_envelope",
    "sample_feasible",
    "solve",
    "weil_program",
    "EllipticCurveForm",
    "ap",
    "discriminant",
    "hecke_lambda",
    "lambda_array",
    "load_curves",
    "mollifier_coeffs",
    "tail_coeffs",
    "BilinearReport",
    "KloostermanTable",
    "MomentBoundReport",
    "bilinear_report",
    "in_D",
    "kloosterman_direct",
    "kloosterman_sum",
    "lemma41_report",
    "moment_sum",
    "ratio_coincidences",
    "v_counts",
    "AfeParameters",
    "MomentReport",
    "NonvanishingScan",
    "RootNumberCheck",
    "check_root_number",
    "compute_S1",
    "compute_S2",
    "direct_lvalue",
    "lvalue",
    "mollified_afe",
    "mollifier_value",
    "nonvanishing_scan",
    "orbit_average_moment",
    "partial_sum_average",
    "s1_envelope",
    "s2_envelope",
    "PrimeModulus",
    "discrete_log",
    "inv_mod",
    "mul_order",
    "primitive_root",
    "runs_on",
    "save",
]
