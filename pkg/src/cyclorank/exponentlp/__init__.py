from ._builtin import (
    best_k,
    chinta_program,
    k_program,
    s2_exponent_branches,
    s2_exponent_envelope,
    weil_program,
)
from ._errors import (
    InfeasibleError,
    NonlinearTermError,
    ParseError,
    ProgramError,
    UnboundedError,
    UnknownVariableError,
)
from ._parser import format_program, parse_program
from ._program import ExponentProgram
from ._solve import OptimizeResult, linprog_check, sample_feasible, solve, vertices

__all__ = [
    "best_k",
    "chinta_program",
    "k_program",
    "s2_exponent_branches",
    "s2_exponent_envelope",
    "weil_program",
    "InfeasibleError",
    "NonlinearTermError",
    "ParseError",
    "ProgramError",
    "UnboundedError",
    "UnknownVariableError",
    "format_program",
    "parse_program",
    "ExponentProgram",
    "OptimizeResult",
    "linprog_check",
    "sample_feasible",
    "solve",
    "vertices",
]
