"""Mellin-Barnes integral I_s(z) and the exponential-arctan integral"""

from hurwitzlommel.mellin.barnes import (
    LineIntegral,
    i_s_line,
    i_s_line_result,
    i_s_residue,
    i_s_closed,
    inter_reassembly,
)

from hurwitzlommel.mellin.lemma import (
    LemmaIntegralParams,
    MellinKernel,
    lemma_lhs_integral,
    lemma_lhs_quadrature,
    lemma_rhs,
    mellin_pair_check,
)

__all__ = [
    # I_s(z)
    "LineIntegral",
    "i_s_line",
    "i_s_line_result",
    "i_s_residue",
    "i_s_closed",
    "inter_reassembly",
    # Lemma integral
    "LemmaIntegralParams",
    "MellinKernel",
    "lemma_lhs_integral",
    "lemma_lhs_quadrature",
    "lemma_rhs",
    "mellin_pair_check",
]
