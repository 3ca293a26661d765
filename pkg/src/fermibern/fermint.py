"""The fermionic p-adic integral of polynomials.

For a polynomial f the integral studied here is the p-adic limit of
alternating averages over initial segments of Z_p:

    I(f) = lim_{N -> inf}  sum_{x=0}^{p^N - 1} (-1)^x f(x)

(the measure of x + p^N Z_p is (-1)^x, total mass 1).  Two facts drive
everything in this module:

  * moments:  I(x^n) = E_n, the n-th Euler number, so by linearity
    I(f) = sum_j c_j E_j for f = sum_j c_j x^j.  This is the exact,
    symbolic route.
  * convergence:  the finite alternating sum S_N(f) agrees with I(f)
    modulo p^N, so vp(S_N - I(f), p) >= N.  This is the numeric route;
    `partial_sum` and `convergence_trace` compute it with exact
    big-integer arithmetic, never floats.

A one-parameter deformation replaces the weight (-1)^x by (-q)^x and
normalizes by (1+q)/(1+q^{p^N}); at q = 1 the normalizer collapses to 1
and the plain partial sum reappears.  `q_partial_sum` evaluates that
deformation in Z/p^M.

Useful functional equations, both verified at runtime where exposed:

    I(f(x+1)) = -I(f) + 2 f(0)
    I(f(x+n)) = (-1)^n I(f) + 2 sum_{l=0}^{n-1} (-1)^(n-1-l) f(l)
    I((1-x)^n) = 2 + E_n            for n >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .euler import DEFAULT_CACHE, EulerCache, euler_number, euler_numbers
from .exactnum import Poly, expand_pow_product
from .padic import PadicApprox, _check_odd_prime, reduce_mod, unit_inverse, vp

__all__ = [
    "integrate",
    "integrate_shifted",
    "integrate_reflected",
    "partial_sum",
    "PartialSumTrace",
    "convergence_trace",
    "q_partial_sum",
]

Rat = Union[int, Fraction]


def integrate(f: Poly, cache: EulerCache = DEFAULT_CACHE) -> Fraction:
    """I(f) = sum_j c_j E_j, exactly.

    The result always has a power-of-two denominator (each E_j does), so
    it is p-integral for every odd prime p.
    """
    if f.is_zero():
        return Fraction(0)
    values = euler_numbers(f.degree, cache)
    return sum((c * values[j] for j, c in enumerate(f.coeffs) if c), Fraction(0))


def integrate_shifted(f: Poly, n: int, cache: EulerCache = DEFAULT_CACHE) -> Fraction:
    """I(f(x+n)) computed two ways and cross-checked.

    Directly: integrate the shifted polynomial.  Via the n-step functional
    equation: (-1)^n I(f) + 2 sum_{l=0}^{n-1} (-1)^(n-1-l) f(l).  A mismatch
    would mean a bug in polynomial composition or the Euler table, so it
    raises rather than returning either value.
    """
    if n < 0:
        raise ValueError("shift must be nonnegative")
    direct = integrate(f.shifted(n), cache)
    tail = sum(((-1) ** (n - 1 - l) * f(l) for l in range(n)), Fraction(0))
    via_rule = (-1) ** n * integrate(f, cache) + 2 * tail
    if direct != via_rule:
        raise ArithmeticError(f"shift rule failed for n={n}: {direct} != {via_rule}")
    return direct


def integrate_reflected(n: int, cache: EulerCache = DEFAULT_CACHE) -> Fraction:
    """I((1-x)^n) for n >= 1, cross-checked against the closed form 2 + E_n."""
    if n < 1:
        raise ValueError("closed form 2 + E_n requires n >= 1")
    direct = integrate(expand_pow_product(0, n), cache)
    closed = 2 + euler_number(n, cache)
    if direct != closed:
        raise ArithmeticError(f"I((1-x)^{n}) = {direct} but 2 + E_{n} = {closed}")
    return direct


def _scaled_int_coeffs(f: Poly) -> tuple[list[int], int]:
    """Coefficients as integers plus the common denominator: f = g / D."""
    if f.is_zero():
        return [], 1
    d = math.lcm(*(c.denominator for c in f.coeffs))
    return [int(c * d) for c in f.coeffs], d


def _int_eval(g: list[int], x: int) -> int:
    acc = 0
    for c in reversed(g):
        acc = acc * x + c
    return acc


def partial_sum(f: Poly, p: int, N: int, cache: EulerCache = DEFAULT_CACHE) -> Fraction:
    """S_N(f) = sum_{x=0}^{p^N - 1} (-1)^x f(x), exactly.

    Clearing denominators first keeps the whole sum in big-integer
    arithmetic; the single division at the end restores the rational.
    """
    _check_odd_prime(p)
    if N < 0:
        raise ValueError("N must be nonnegative")
    g, d = _scaled_int_coeffs(f)
    total = 0
    for x in range(p**N):
        v = _int_eval(g, x)
        total += -v if x & 1 else v
    return Fraction(total, d)


@dataclass(frozen=True)
class PartialSumTrace:
    """Partial sums S_1..S_N with their p-adic distance to the limit.

    Each row is (N, S_N, valuation_gap) where valuation_gap is
    vp(S_N - I(f), p), and math.inf when the partial sum is already exact.
    """

    p: int
    rows: tuple[tuple[int, Fraction, Union[int, float]], ...]

    def to_csv(self) -> str:
        lines = ["N,S_N,valuation_gap"]
        for n, s, gap in self.rows:
            gap_text = "inf" if gap == math.inf else str(gap)
            lines.append(f"{n},{s},{gap_text}")
        return "\n".join(lines) + "\n"


def convergence_trace(f: Poly, p: int, N_max: int,
                      cache: EulerCache = DEFAULT_CACHE) -> PartialSumTrace:
    """Trace S_N against the exact integral for N = 1..N_max.

    One pass over x < p^N_max; each S_N reuses the previous prefix rather
    than restarting the sum.  Rows are exact; the valuation gap is >= N
    when everything is working (the tests pin that down, this function
    just reports).
    """
    _check_odd_prime(p)
    if N_max < 0:
        raise ValueError("N_max must be nonnegative")
    exact = integrate(f, cache)
    g, d = _scaled_int_coeffs(f)
    rows = []
    total = 0
    x = 0
    for n in range(1, N_max + 1):
        bound = p**n
        while x < bound:
            v = _int_eval(g, x)
            total += -v if x & 1 else v
            x += 1
        s_n = Fraction(total, d)
        rows.append((n, s_n, vp(s_n - exact, p)))
    return PartialSumTrace(p=p, rows=tuple(rows))


def q_partial_sum(f: Poly, p: int, q: Rat, N: int, M: int) -> PadicApprox:
    """The q-deformed partial sum in Z/p^M.

    Evaluates (1+q)/(1+q^{p^N}) * sum_{x=0}^{p^N - 1} (-q)^x f(x) with all
    arithmetic mod p^M.  Requires vp(q - 1, p) >= 1, which makes both
    1 + q and 1 + q^{p^N} units (each is 2 mod p); f must have p-integral
    coefficients.  At q = 1 the normalizer is 1 and the result equals
    reduce_mod(partial_sum(f, p, N), p, M).
    """
    _check_odd_prime(p)
    if M < 1:
        raise ValueError("precision M must be >= 1")
    if N < 0:
        raise ValueError("N must be nonnegative")
    q = Fraction(q)
    if vp(q - 1, p) < 1:
        raise ValueError(f"need q = 1 mod {p}, got q = {q}")
    modulus = p**M
    qr = reduce_mod(q, p, M).r
    coeff_res = [reduce_mod(c, p, M).r for c in f.coeffs]
    acc = 0
    w = 1  # (-q)^x mod p^M
    neg_q = (-qr) % modulus
    rev_coeffs = coeff_res[::-1]
    for x in range(p**N):
        fx = 0
        xr = x % modulus
        for c in rev_coeffs:
            fx = (fx * xr + c) % modulus
        acc = (acc + w * fx) % modulus
        w = w * neg_q % modulus
    # after the loop w = (-q)^(p^N) = -(q^(p^N)) since p^N is odd,
    # so 1 + q^(p^N) = 1 - w mod p^M
    normalizer = (1 + qr) * unit_inverse((1 - w) % modulus, p, M) % modulus
    return PadicApprox(p, M, acc * normalizer % modulus)
