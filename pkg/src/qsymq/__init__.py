"""Exact computer algebra for the quotient of Q[x1..xn] by the ideal of
constant-free quasi-symmetric polynomials: Dyck monomial basis, G-family
reductions with certificates, and independent Hilbert-series verification.
"""

from .combinat import (
    PathClass,
    ResourceLimitError,
    ballot,
    catalan,
    classify,
    composition_from_subset,
    descent_set,
    dn_k,
    enumerate_dyck,
    is_dyck,
    path_statistics,
    refinements,
    shuffles,
    vector_to_dyck_word,
)
from .poly import Polynomial, diff_pairing, graded_lex_compare
from .qsym import (
    f_product,
    frel_decompose,
    fundamental_qsym,
    is_quasisymmetric,
    monomial_qsym,
    reverse_variables,
)
from .quotient import (
    GBasis,
    ReductionResult,
    coordinates,
    enumerate_transdiagonal,
    factorize,
    g_element,
    is_member,
    normal_form,
    rewrite_times_variable,
)
from .oracle import (
    HilbertSeries,
    generating_function_check,
    hilbert_series,
    ideal_degree_rank,
    quotient_dims,
    row_space_member,
)

__all__ = [name for name in dir() if not name.startswith("_")]
