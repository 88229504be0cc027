"""
One-site Yang-Lee model: population difference
==============================================

H = -(1/2) sigma_3 - (i xi / 2) sigma_1 with xi = 1/2, started spin-down.
At alpha = 1 the population difference stays close to -1 with a small
oscillation; fractional orders change both the amplitude and the mean.
"""

import numpy as np

from fracdyson import evolve_preset, get_preset

preset = get_preset("yang_lee_one_site", xi=0.5)
t = np.linspace(0, 20, 2001)

for alpha in (1.0, 0.75, 0.5, 0.25):
    pop = evolve_preset(alpha, preset, t).population()
    print(f"alpha={alpha:<5} <sigma3>: min {pop.min(): .4f}  max {pop.max(): .4f}  mean {pop.mean(): .4f}")

# xi = 1 sits on the exceptional point (Delta = 0); the propagator is then
# polynomial in t^alpha and the code switches to the removable limit
ep = get_preset("yang_lee_one_site", xi=1.0)
pop = evolve_preset(0.5, ep, np.linspace(0, 5, 501)).population()
print("exceptional point, alpha=0.5: final <sigma3> =", pop[-1])
