"""Exact Euler/Bernstein arithmetic and the alternating p-adic integral.

The package computes Euler numbers and polynomials, Bernstein basis
polynomials, and the alternating ("fermionic") p-adic integral of
polynomials, both symbolically through Euler moments and numerically
through exact partial sums over Z/p^N.  On top of that sits a
verification layer that sweeps a catalog of closed-form identities for
integrals of Bernstein products, including the corrected and as-printed
editions of two entries that circulate with index typos.

Everything is exact: Python ints, fractions.Fraction, and dense rational
polynomials.  No floats.
"""

from .bernstein import bernstein_eval, bernstein_operator, bernstein_poly
from .euler import (DEFAULT_CACHE, EulerCache, euler_at_two, euler_number,
                    euler_numbers, euler_poly, euler_reflect_check)
from .exactnum import Poly, binom, expand_pow_product
from .fermint import (PartialSumTrace, convergence_trace, integrate,
                      integrate_reflected, integrate_shifted, partial_sum,
                      q_partial_sum)
from .identities import (AS_PRINTED, CORRECTED, SUITE_ORDER, IdentityReport,
                         ProductSpec, find_counterexample, oracle_integral,
                         run_suites)
from .padic import PadicApprox, is_prime, reduce_mod, unit_inverse, vp

__version__ = "0.1.0"

__all__ = [
    "Poly", "binom", "expand_pow_product",
    "EulerCache", "DEFAULT_CACHE", "euler_number", "euler_numbers",
    "euler_poly", "euler_reflect_check", "euler_at_two",
    "bernstein_poly", "bernstein_eval", "bernstein_operator",
    "is_prime", "vp", "PadicApprox", "reduce_mod", "unit_inverse",
    "integrate", "integrate_shifted", "integrate_reflected",
    "partial_sum", "PartialSumTrace", "convergence_trace", "q_partial_sum",
    "ProductSpec", "IdentityReport", "oracle_integral", "run_suites",
    "find_counterexample", "SUITE_ORDER", "CORRECTED", "AS_PRINTED",
    "__version__",
]
