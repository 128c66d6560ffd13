"""Exact minor sums, Pfaffians and the simplex integral of det(x_i^(a_j-1))."""

from .algebra import (
    MultiPoly,
    RationalFunction,
    format_rational,
    parse_rational,
    poly_arith,
    poly_substitute,
    ratfun_equal,
    scalar_arith,
)
from .errors import DomainError, ResourceLimitError
from .integral import (
    ConvergenceRow,
    PowerSum,
    approx_integral,
    closed_I_i,
    closed_I_ij,
    closed_form_matrix,
    convergence_table,
    elkies_howe_case,
    iterated_integral_oracle,
    lhs_pfaffian,
    rhs_product,
    riemann_matrix,
)
from .linalg import (
    Matrix,
    SkewMatrix,
    determinant,
    determinant_leibniz,
    enumerate_row_subsets,
    perfect_matchings,
    pfaffian_combinatorial,
    pfaffian_eliminate,
)
from .okada import (
    MinorSumReport,
    augment_odd,
    build_S,
    minor_sum_bruteforce,
    minor_sum_okada,
)
from .symbolic import (
    build_symbolic_matrix,
    reduction_check,
    symbolic_pfaffian,
    verify_identity,
)

__version__ = "0.1.0"
