"""Bernstein basis polynomials and the Bernstein operator, exact.

B_{k,n}(x) = C(n, k) x^k (1 - x)^(n - k) for 0 <= k <= n, and the zero
polynomial for k > n.  The degree-n basis partitions unity and satisfies
the symmetry B_{k,n}(1 - x) = B_{n-k,n}(x).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .exactnum import Poly, binom, expand_pow_product

__all__ = ["bernstein_poly", "bernstein_eval", "bernstein_operator"]


@lru_cache(maxsize=None)
def bernstein_poly(k: int, n: int) -> Poly:
    """B_{k,n} expanded into monomials (zero polynomial when k > n)."""
    if k < 0 or n < 0:
        raise ValueError("Bernstein indices must be nonnegative")
    if k > n:
        return Poly.zero()
    return binom(n, k) * expand_pow_product(k, n - k)


def bernstein_eval(k: int, n: int, x: Union[int, Fraction]) -> Fraction:
    """B_{k,n}(x) at a rational point.

    Computed directly as C(n,k) x^k (1-x)^(n-k); the expanded form agrees,
    which the tests pin down.
    """
    if k < 0 or n < 0:
        raise ValueError("Bernstein indices must be nonnegative")
    if k > n:
        return Fraction(0)
    x = Fraction(x)
    return binom(n, k) * x**k * (1 - x) ** (n - k)


def bernstein_operator(samples: Sequence[Union[int, Fraction]], n: int,
                       x: Union[int, Fraction]) -> Fraction:
    """Degree-n Bernstein approximation sum_{k} samples[k] B_{k,n}(x).

    `samples` must hold the n+1 values f(0/n), f(1/n), ..., f(n/n).  The
    operator reproduces constants exactly, and affine functions too, so
    feeding samples of f(t) = t returns x itself.
    """
    if n < 0:
        raise ValueError("operator degree must be nonnegative")
    if len(samples) != n + 1:
        raise ValueError(f"need {n + 1} samples for degree {n}, got {len(samples)}")
    x = Fraction(x)
    return sum((Fraction(s) * bernstein_eval(k, n, x) for k, s in enumerate(samples)),
               Fraction(0))
