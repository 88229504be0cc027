"""
Zeeman spin: frozen at alpha = 1, precessing for alpha < 1
==========================================================

A spin-up state is an eigenstate of H = -(omega_L/2) sigma_3, so ordinary
evolution leaves its Bloch vector at (0, 0, 1).  The Dyson map of the
fractional problem is time dependent, and in the Hermitian frame the spin
starts to precess around the x3-axis.
"""

import numpy as np

from fracdyson import get_preset, magnetization_trajectory

preset = get_preset("zeeman", omega_L=2.0)
t = np.linspace(0, 20, 2001)

for alpha in (1.0, 0.75, 0.5, 0.25):
    m = magnetization_trajectory(alpha, preset, None, t)
    print(f"alpha={alpha:<5} M3 in [{m[:, 2].min():.4f}, {m[:, 2].max():.4f}]   "
          f"max |M1| = {np.abs(m[:, 0]).max():.4f}   |M| - 1 <= {np.abs(np.linalg.norm(m, axis=1) - 1).max():.1e}")

# a coarse text trace of the alpha = 1/2 precession
m = magnetization_trajectory(0.5, preset, None, t)
for k in range(0, 2001, 200):
    print(f"t={t[k]:5.1f}  M = ({m[k, 0]: .3f}, {m[k, 1]: .3f}, {m[k, 2]: .3f})")
