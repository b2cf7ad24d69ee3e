from ._modulus import (
    PrimeModulus,
    as_modulus,
    discrete_log,
    inv_mod,
    inverse_table,
    mul_order,
    primitive_root,
)

__all__ = [
    "PrimeModulus",
    "as_modulus",
    "discrete_log",
    "inv_mod",
    "inverse_table",
    "mul_order",
    "primitive_root",
]
