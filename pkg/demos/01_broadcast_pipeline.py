"""
Cloning both halves of a W-type state
=====================================

Build the three-qubit input, clone qubits 1 and 2 with the universal
symmetric cloner, and look at the four two-qubit states that remain.
"""

# %%
import numpy as np

from wbroadcast.cloner import bh_clone, broadcast_pipeline, cloned_state
from wbroadcast.states import PureState, WParams, density, w_type_state
from wbroadcast.tensor import partial_trace

np.set_printoptions(precision=4, suppress=True, linewidth=110)

# %%
# A single qubit through the cloner: both copies end up with fidelity 5/6.
plus = PureState(("q",), np.array([1, 1]) / np.sqrt(2))
out = density(bh_clone(plus, "q", "c", "m"))
for lab in ("q", "c"):
    red = partial_trace(out.matrix, out.labels, [lab])
    print(lab, "fidelity", np.vdot(plus.amplitudes, red @ plus.amplitudes).real)

# %%
# The input a|001> + b|010> + c|100> with unequal weights.
p = WParams(0.5, 0.3, 0.2)
print(w_type_state(p).amplitudes.real)

# %%
# After cloning, the register is (1, 4, M1, 2, 5, M2, 3): 128 amplitudes.
psi = cloned_state(p)
print(psi.labels, psi.amplitudes.size)

# %%
# Tracing out the machines and qubit 3 leaves a 16x16 state on (1, 4, 2, 5),
# and from it the four pairs.
outs = broadcast_pipeline(p)
for name, rho in outs.pairs().items():
    print(name, rho.labels)
    print(rho.matrix.real)
