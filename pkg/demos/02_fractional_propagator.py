"""
Fractional evolution is not unitary
===================================

For a traceless two-level Hamiltonian H = sigma . omega the fractional-time
propagator is the 2x2 matrix E_alpha(i^-alpha H t^alpha).  At alpha = 1 it
is exp(-i H t); for alpha < 1 it neither preserves the norm nor composes as
a semigroup.  Its determinant D(t) carries the phase that later fixes the
global phase of the unitary propagator.
"""

import numpy as np

from fracdyson.frac_evolution import propagator_coeffs, propagator_matrix, track_log_det
from fracdyson.models import zeeman
from fracdyson.unitary import unitarity_defect

omega = zeeman(2.0)  # Delta = 1
t = np.linspace(0, 10, 1001)

for alpha in (1.0, 0.75, 0.5, 0.25):
    U = propagator_matrix(propagator_coeffs(alpha, omega, t))
    d = unitarity_defect(U)
    print(f"alpha={alpha:<5} max ||U^+U - I|| on [0, 10] = {d.max():.3g}")

# semigroup property U(s + t) = U(s) U(t) holds only for alpha = 1
def U_at(alpha, tt):
    return propagator_matrix(propagator_coeffs(alpha, omega, tt))

for alpha in (1.0, 0.5):
    gap = np.abs(U_at(alpha, 3.0) - U_at(alpha, 1.0) @ U_at(alpha, 2.0)).max()
    print(f"alpha={alpha}: |U(3) - U(1)U(2)| = {gap:.2e}")

# ln D(t), with the phase followed continuously along the grid
track = track_log_det(0.5, omega, t)
for k in (0, 250, 500, 1000):
    print(f"t={t[k]:5.2f}  Re lnD={track.re_lnD[k]: .6f}  Im lnD={track.im_lnD[k]: .6f}")
# the phase leaves (-pi, pi] without any jump
print("largest phase step:", np.abs(np.diff(track.im_lnD)).max())
