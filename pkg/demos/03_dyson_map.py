"""
Restoring unitarity with a time-dependent Dyson map
===================================================

A Hermitian, positive map eta(t) = e^kappa / sqrt(Lambda) [[Lambda + |lambda|^2, lambda],
[lambda*, 1]] turns the fractional propagator U into u = eta(t) U eta(0)^-1,
which is unitary.  The three parameters come from closed forms; nothing is
integrated.  The metric Theta = eta^+ eta then conserves <Psi|Theta|Psi>.
"""

import numpy as np

from fracdyson import DysonInit, evolve, get_preset
from fracdyson.unitary import unitarity_defect

preset = get_preset("yang_lee_one_site")  # non-Hermitian: omega = (-i/4, 0, -1/2)
init = DysonInit(kappa0=0.0, lambda0=1.5, Lambda0=2.0)
grid = np.linspace(0, 20, 2000)

for alpha in (1.0, 0.5, 0.25):
    tr = evolve(alpha, preset.omega, grid, init)
    print(f"alpha={alpha:<5} raw defect {unitarity_defect(tr.U).max():8.3g}   "
          f"dressed defect {unitarity_defect(tr.u).max():.1e}   "
          f"min Lambda {tr.params.Lambda.min():.3f}")

# the modified inner product is conserved along the non-Hermitian evolution
tr = evolve(0.5, preset.omega, grid, init)
psi0 = np.array([0.6, 0.8j])
Psi = np.einsum("nij,j->ni", tr.U, psi0)
q = np.einsum("ni,nij,nj->n", Psi.conj(), tr.theta, Psi).real
print("<Psi|Theta|Psi> ranges over", q.min(), q.max())

# Dyson parameters at a few times
for k in (0, 500, 1999):
    print(f"t={grid[k]:6.2f} kappa={tr.params.kappa[k]: .5f} "
          f"lambda={complex(tr.params.lambda_[k]):.5f} Lambda={tr.params.Lambda[k]:.5f}")
