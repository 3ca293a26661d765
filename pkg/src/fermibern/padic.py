"""p-adic valuations and truncated p-adic arithmetic on rationals.

Only two primitives are needed by the rest of the package: the valuation
vp, and reduction of a p-integral rational to a residue mod p^M.  The
truncation is represented by `PadicApprox`, a plain record of (p, M, r)
with r the canonical residue in [0, p^M).

Odd primes only for the modular side: the alternating partial sums this
package studies converge 2-adically to nothing useful, and every exact
value in play has a power-of-two denominator, which is a unit mod p^M
exactly when p is odd.  The valuation itself is defined for p = 2 as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = ["is_prime", "vp", "PadicApprox", "reduce_mod", "unit_inverse"]

Rat = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the word-sized p used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _check_odd_prime(p: int) -> None:
    _check_prime(p)
    if p == 2:
        raise ValueError("p must be odd")


def vp(x: Rat, p: int) -> Union[int, float]:
    """p-adic valuation of a rational; vp(0) = +inf (math.inf).

    vp(a/b) = vp(a) - vp(b), so the result is negative when p divides the
    reduced denominator.
    """
    _check_prime(p)
    x = Fraction(x)
    if x == 0:
        return math.inf
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicApprox:
    """A residue r mod p^M standing for a p-adic number to M digits.

    p must be an odd prime, M >= 1, and 0 <= r < p^M.
    """

    p: int
    M: int
    r: int

    def __post_init__(self) -> None:
        _check_odd_prime(self.p)
        if self.M < 1:
            raise ValueError("precision M must be >= 1")
        if not 0 <= self.r < self.p**self.M:
            raise ValueError(f"residue {self.r} out of range for p^M = {self.p**self.M}")

    @property
    def modulus(self) -> int:
        return self.p**self.M

    def __str__(self) -> str:
        return f"{self.r} mod {self.p}^{self.M}"


def reduce_mod(x: Rat, p: int, M: int) -> PadicApprox:
    """The image of a p-integral rational in Z/p^M.

    Requires vp(x, p) >= 0; the reduced denominator is then a unit mod p^M
    and r = num * den^(-1) mod p^M.  Rejects p = 2 and non-primes.
    """
    _check_odd_prime(p)
    if M < 1:
        raise ValueError("precision M must be >= 1")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not p-integral at p = {p} (vp = {vp(x, p)})")
    q = p**M
    r = x.numerator * pow(x.denominator, -1, q) % q
    return PadicApprox(p, M, r)


def unit_inverse(u: int, p: int, M: int) -> int:
    """Inverse of a unit u in Z/p^M, as the canonical residue."""
    _check_odd_prime(p)
    if M < 1:
        raise ValueError("precision M must be >= 1")
    if u % p == 0:
        raise ValueError(f"{u} is not a unit mod {p}^{M}")
    return pow(u, -1, p**M)
