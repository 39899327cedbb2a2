"""Interpolated multiple zeta values (t-MZVs).

Exact word algebra with the t-deformed shuffle and harmonic products,
regularization, generators for the relation families among t-MZVs, numeric
certification, and checks of the generating function for sums of t-MZVs with
fixed weight, depth and height.
"""
from .algebra import Element, index_from_word, parse_index, parse_word, product, s_map, sigma_map, word_from_index
from .errors import ConvergenceError, DomainError, PoleError, TMZVError
from .numerics import DEFAULT_CONFIG, EvalResult, NumericConfig, eval_combination, eval_mzv, eval_tmzv
from .regularization import reg_decompose, z_reg_eval
from .relations import (
    Relation,
    cyclic_sum_relation,
    eds_relation,
    euler_decomposition,
    fds_relation,
    hoffman_relation,
    sum_formula_relation,
)
from .tpoly import TPoly
from .zeta import ZetaCombination, tmzv_expand, to_tmzv_basis, z_classical, z_symbolic

__version__ = "0.1.0"
