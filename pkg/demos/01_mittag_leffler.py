"""
The Mittag-Leffler function
===========================

E_alpha(z) = sum_k z**k / Gamma(alpha k + 1) interpolates between
1 / (1 - z) (alpha -> 0) and exp(z) (alpha = 1).  Every evaluation comes
with an error bound; outside the range where double-double summation can
certify the result, a NonConvergence error is raised instead of a guess.
"""

import cmath
import math

import numpy as np

from fracdyson import NonConvergence, frac_cos, frac_sin, ml, ml_array

# alpha = 1 is the exponential
r = ml(1.0, 1.0)
print(f"E_1(1)     = {r.value.real:.16f}   (e = {math.e:.16f}, bound {r.error_bound:.1e})")

# alpha = 1/2 has a closed form through erfc: E_1/2(z) = exp(z^2) erfc(-z)
r = ml(0.5, 1.0, tol=1e-10)
print(f"E_1/2(1)   = {r.value.real:.15f}   (exp(1) erfc(-1) = {math.e * math.erfc(-1):.15f})")

# the fractional cosine and sine built from E_alpha(+-i^-alpha x)
for alpha in (1.0, 0.75, 0.5, 0.25):
    c = frac_cos(alpha, 2.0).value
    s = frac_sin(alpha, 2.0).value
    print(f"alpha={alpha:<5} C(2) = {c:.6f}   S(2) = {s:.6f}")

# at alpha = 1/2 the cosine is exactly exp(-i x^2)
x = 1.3
print("C_1/2(1.3) - exp(-i 1.69) =", abs(frac_cos(0.5, x).value - cmath.exp(-1j * x * x)))

# error bounds tighten as the requested tolerance shrinks
for tol in (1e-4, 1e-8, 1e-12):
    print(f"tol={tol:.0e}  bound={ml(0.6, 3 - 2j, tol).error_bound:.2e}")

# far along the negative axis the terms cancel catastrophically: refused
try:
    ml(0.25, -5.0)
except NonConvergence as exc:
    print("refused:", exc)

# vectorised evaluation on a ray
z = np.linspace(0, 4, 5) * cmath.exp(0.3j)
values, bounds = ml_array(0.75, z)
print(np.round(values, 6))
