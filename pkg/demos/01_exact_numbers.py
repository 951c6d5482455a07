"""Exact numbers: why the kernel never has to guess a sign.

Run with ``python3 demos/01_exact_numbers.py``.
"""

from __future__ import annotations

from qfgeom.exactnum import Q, sign, sqrt

# Floating point cannot decide whether this quantity is zero.
s = sqrt(2) + sqrt(3)
residue = s * s - 5 - 2 * sqrt(6)
print("(sqrt2 + sqrt3)^2 - 5 - 2 sqrt6 has sign", sign(residue))

# A number that is tiny but not zero is still told apart from zero.
tiny = residue + Q("1/" + "1" + "0" * 40)
print("adding 10^-40 gives sign", sign(tiny))

# Intervals shrink with the requested precision; the endpoints are exact rationals.
root2 = sqrt(2)
for bits in (8, 32, 64):
    iv = root2.approx(bits)
    print(f"{bits:>3} bits: sqrt2 in [{float(iv.lo):.17f}, {float(iv.hi):.17f}]")

# Decimal output marks values that were rounded.
print("1/8 ->", Q("1/8").to_decimal(), "   sqrt2 ->", root2.to_decimal())
