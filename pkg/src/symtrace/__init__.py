"""symtrace: exact symmetric-function identities and matrix trace invariants.

The package computes, entirely over arbitrary-precision rationals:

  * sparse multivariate polynomial arithmetic (``algebra``),
  * integer partitions, multiplicity symbols and conjugacy-class sizes
    (``partitions``, cross-checked by the exhaustive ``symgroup`` census),
  * the raising-operator construction of the signed/unsigned trace
    polynomials and their operator algebra (``operators``),
  * elementary / power-sum / Wronski symmetric functions and the exact
    basis conversions between them (``symfun``),
  * power traces and characteristic-polynomial coefficients of exact
    matrices by four independent algorithms (``matrices``).

The permutation-heavy kernels run through a compiled extension when it
is available and fall back to pure Python otherwise; see
``symtrace._kernels.BACKEND``.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .algebra import (
    Monomial,
    Polynomial,
    Rational,
    add,
    evaluate,
    format_rational,
    mul,
    parse_rational,
    partial,
    render_polynomial,
    times_var,
    weight,
)
from .errors import (
    BudgetExceeded,
    DimensionError,
    InvalidSymbol,
    MissingAssignment,
    ParseError,
    SymtraceError,
)
from .matrices import (
    ExactMatrix,
    lax_trace_check,
    matrix_from_json,
    matrix_to_json,
    power_trace,
    power_traces,
    prodet_antisym,
    prodet_cauchy,
    prodet_leverrier,
    prodet_minors,
)
from .operators import (
    LinearOperator,
    cauchy_j,
    cauchy_j_closed,
    cauchy_k,
    cauchy_k_closed,
    commutator,
    delta,
    op_equal_up_to_weight,
    raising_minus,
    raising_plus,
)
from .partitions import (
    Partition,
    PartitionSymbol,
    cauchy_h,
    enumerate_partitions,
    from_symbol,
    sign_of_symbol,
    to_symbol,
)
from .symfun import (
    c_from_power_sums,
    eval_elementary,
    eval_power_sum,
    eval_wronski,
    w_from_power_sums,
)
from .symgroup import Permutation, class_sizes, cycle_type

__version__ = "0.1.0"
