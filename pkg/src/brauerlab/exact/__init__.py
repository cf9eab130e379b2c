from fractions import Fraction as Rational

from .numberfield import (
    NFElem,
    NumberField,
    cyclotomic_field,
    cyclotomic_polynomial,
    nf_arith,
    sqrt_field,
)
from .parampoly import ParamPoly, VariableMismatch, poly_arith, poly_divmod_univariate, poly_eval
from . import linalg

__all__ = [
    "Rational",
    "NFElem",
    "NumberField",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "nf_arith",
    "sqrt_field",
    "ParamPoly",
    "VariableMismatch",
    "poly_arith",
    "poly_divmod_univariate",
    "poly_eval",
    "linalg",
]
