"""
Where the local pairs stay separable and the cross pairs entangle
=================================================================

Along beta = gamma, the W4 determinant of each pair changes sign at a
single alpha2. Bisection on the simulated curves recovers the two roots.
"""

# %%
import numpy as np

from wbroadcast.analysis import thresholds, w4_curve
from wbroadcast.cloner import broadcast_pipeline
from wbroadcast.separability import ppt_verdict
from wbroadcast.states import symmetric_params

# %%
for x in (0.05, 0.15, 0.25, 0.5, 0.9):
    out = broadcast_pipeline(symmetric_params(x))
    flags = {n: ppt_verdict(r.matrix).separable for n, r in out.pairs().items()}
    print(f"alpha2={x:<5} " + "  ".join(f"{n}:{'sep' if s else 'ENT'}" for n, s in flags.items()))

# %%
grid = np.linspace(0.01, 0.99, 15)
w14, w15 = w4_curve("rho_14"), w4_curve("rho_15")
for x in grid:
    print(f"{x:.3f}  w4(rho_14)={w14(x):+.3e}  w4(rho_15)={w15(x):+.3e}")

# %%
rep = thresholds()
print(rep.to_text())
