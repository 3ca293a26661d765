"""Exact rational polynomial arithmetic.

Everything in this package runs on exact arithmetic: integers are Python
ints, rationals are `fractions.Fraction`, and polynomials are dense
coefficient tuples of Fractions, lowest degree first.  No floats anywhere.

A rational serializes as ``str(Fraction)``: "num/den", or just "num" when
the denominator is 1.  A polynomial serializes as its coefficient list,
lowest degree first, e.g. "1, -1" for 1 - x.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

__all__ = ["Poly", "binom", "expand_pow_product"]

Fr = Fraction  # local binding, constructed a lot

Coeff = Union[int, Fraction, str]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), 0 when k > n.

    Both arguments must be nonnegative integers; math.comb enforces that.
    The k > n case returning 0 is load bearing for the identity sweeps,
    where out-of-range basis polynomials degenerate to the zero polynomial
    with a matching zero prefactor.
    """
    return comb(n, k)


class Poly:
    """Dense univariate polynomial over Fraction, immutable.

    Coefficients are stored lowest degree first with trailing zeros
    trimmed, so equal polynomials compare equal and the leading stored
    coefficient is nonzero.  The zero polynomial stores an empty tuple
    and reports degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()) -> None:
        cs = [Fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: Coeff = 1) -> "Poly":
        """c * x**n."""
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * n + (Fr(c),))

    @classmethod
    def from_coeff_string(cls, text: str) -> "Poly":
        """Parse "c0, c1, ..." (lowest degree first); rationals like 3/4 allowed."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"malformed coefficient list: {text!r}")
        return cls(Fr(p) for p in parts)

    # -- basic queries --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x**i (0 beyond the stored degree)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fr(0)

    def to_coeff_string(self) -> str:
        """Inverse of from_coeff_string; the zero polynomial prints as "0"."""
        if not self._coeffs:
            return "0"
        return ", ".join(str(c) for c in self._coeffs)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        # Convolving in int and wrapping once at the end is several times
        # faster than Fraction convolution; integer coefficients dominate
        # the big identity sweeps (Bernstein products stay integral).
        if all(c.denominator == 1 for c in a) and all(c.denominator == 1 for c in b):
            an = [c.numerator for c in a]
            bn = [c.numerator for c in b]
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(an):
                if ai:
                    for j, bj in enumerate(bn):
                        out[i + j] += ai * bj
            return Poly(out)
        outf = [Fr(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    outf[i + j] += ai * bj
        return Poly(outf)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed:
                base = base * base
        return result

    # -- evaluation and composition -------------------------------------------

    def __call__(self, x: Coeff) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        x = Fr(x)
        acc = Fr(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), exactly, by Horner over the polynomial ring."""
        acc = Poly()
        for c in reversed(self._coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def shifted(self, n: Coeff) -> "Poly":
        """self(x + n)."""
        return self.compose(Poly((Fr(n), 1)))

    def reflected(self) -> "Poly":
        """self(1 - x)."""
        return self.compose(Poly((1, -1)))

    # -- dunder plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly([{self.to_coeff_string()}])"


def _coerce(value: object) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


def expand_pow_product(k: int, m: int) -> Poly:
    """x**k * (1 - x)**m expanded into monomials.

    By the binomial theorem the coefficient of x**(k+j) is C(m, j) * (-1)**j,
    so the result has integer coefficients and degree exactly k + m.
    """
    if k < 0 or m < 0:
        raise ValueError("exponents must be nonnegative")
    return Poly([0] * k + [(-1) ** j * comb(m, j) for j in range(m + 1)])
