"""Exact computer algebra for the braids-and-ties algebra.

Normal-form arithmetic in the E_A T_w basis, the faithful tensor
representation, the invariant bilinear form, and the classification of the
simple modules by Specht-module construction.
"""

from .exactmath import RatFunc, Rational, SparseMatrix, rank, row_reduce, span_closure
from .combinatorics import (
    Permutation,
    SetPartition,
    dominance_leq,
    enumerate_labels,
    sp_apply,
    sp_closure,
    sp_enumerate,
    sp_join,
    sp_leq,
    sp_moebius,
    tableau_data,
    total_lt,
)
from .algebra_core import (
    AlgebraElement,
    dimension,
    e_pair,
    e_set,
    epsilon,
    flip,
    form,
    format_element,
    gen,
    moebius_coefficient,
    mul,
    specialize,
    star,
    verify_relations,
)
from .parsing import ParseError, parse_word
from .tensor_rep import (
    TensorVector,
    act,
    act_E,
    act_T,
    faithfulness_certificate,
    quotient_checks,
    relabel_upper,
    tensor_relation_report,
    word_expand,
)
from .specht import (
    classification_report,
    e_Lambda,
    gyoja_element,
    specht_module,
    symmetrizers,
    tensor_form,
    v_Lambda,
    w_Lambda,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
