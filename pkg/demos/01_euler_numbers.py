"""
Euler numbers and Euler polynomials, exactly
============================================

Everything in this package is plain Fraction arithmetic: no floats, no
rounding, so every identity below is checked with ==.
"""

from fractions import Fraction

from fermibern import binom, euler_number, euler_numbers, euler_poly, euler_at_two

print("Euler numbers and Euler polynomials")
print("=" * 45)

# the first few values; even indices past 0 all vanish
print("\nE_n for n = 0..10:")
for n, value in enumerate(euler_numbers(10)):
    print(f"  E_{n:<2} = {value}")

# the numbers satisfy sum_{l<=n} C(n,l) E_l = -E_n; that alternating
# relation is what the cache fills from
print("\nrecurrence check: sum_l C(n,l) E_l + E_n == 0")
for n in (1, 5, 9, 20):
    acc = sum(binom(n, l) * euler_number(l) for l in range(n + 1))
    print(f"  n = {n:<3} sum = {acc + euler_number(n)}")

# denominators are always powers of two, so for every odd prime p the
# numbers live inside the p-adic integers
print("\ndenominators of E_0..E_15:", [euler_number(n).denominator for n in range(16)])

# the polynomials extend the numbers: E_n(0) is E_n, the degree is n,
# and reflecting the argument x -> 1-x flips the sign for odd n
print("\nE_3(x) coefficients, lowest first:", euler_poly(3).to_coeff_string())
p3 = euler_poly(3)
print("E_3(1 - x) == -E_3(x)?", p3.reflected() == -1 * p3)
print("E_3(0) == E_3?", p3(0) == euler_number(3))

# at x = 2 there is a closed form, 2 + E_n
print("\nE_n(2) against 2 + E_n:")
for n in (1, 3, 7):
    print(f"  E_{n}(2) = {euler_at_two(n)} == 2 + ({euler_number(n)})")

ok = all(euler_at_two(n) == 2 + euler_number(n) for n in range(1, 30))
print("\nshift-by-two closed form for n = 1..29:", "PASS" if ok else "FAIL")
print("half-integer value E_4(1/2) =", euler_poly(4)(Fraction(1, 2)))
