from ._coefficients import mollifier_coeffs, tail_coeffs
from ._curve import (
    EllipticCurveForm,
    ap,
    discriminant,
    hecke_lambda,
    lambda_array,
    load_curves,
)

__all__ = [
    "EllipticCurveForm",
    "ap",
    "discriminant",
    "hecke_lambda",
    "lambda_array",
    "load_curves",
    "mollifier_coeffs",
    "tail_coeffs",
]
