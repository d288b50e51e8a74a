"""Exact arithmetic: half-integers, Laurent polynomials, rational functions in
``t = q**(1/2)``, q-brackets and gamma-ratio reduction."""

from .cyclo import CycloProduct, cyclotomic
from .gamma import (
    GammaFactor,
    PoleError,
    SqrtPiNumber,
    TranscendentalResidue,
    gamma_halfint,
    gamma_ratio_brackets,
    gamma_ratio_product,
    gamma_ratio_rational,
)
from .halfint import HalfInt, half_range
from .laurent import LaurentPoly, poly_gcd
from .qfunc import q_abs_bracket, q_binomial, q_bracket, q_shifted_factorial, q_shifted_ratio
from .ratfunc import RationalFunction, eval_rf

__all__ = [
    "CycloProduct", "cyclotomic",
    "GammaFactor", "PoleError", "SqrtPiNumber", "TranscendentalResidue",
    "gamma_halfint", "gamma_ratio_brackets", "gamma_ratio_product", "gamma_ratio_rational",
    "HalfInt", "half_range",
    "LaurentPoly", "poly_gcd",
    "q_abs_bracket", "q_binomial", "q_bracket", "q_shifted_factorial", "q_shifted_ratio",
    "RationalFunction", "eval_rf",
]
