"""Buzek-Hillery 1 -> 2 universal cloner and the two-site broadcast pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix, PureState, WParams, density, w_type_state

# machine states: up -> |0>, down -> |1>
_A = math.sqrt(2.0 / 3.0)
_B = math.sqrt(1.0 / 6.0)


def _image(bit: int) -> np.ndarray:
    """Image of |bit> as a 3-qubit vector over (original, clone, machine)."""
    v = np.zeros((2, 2, 2), dtype=complex)
    if bit == 0:
        v[0, 0, 0] = _A
        v[0, 1, 1] = v[1, 0, 1] = _B
    else:
        v[1, 1, 1] = _A
        v[0, 1, 0] = v[1, 0, 0] = _B
    return v.reshape(-1)


#: ``ISOMETRY[:, b]`` is the image of basis state ``|b>``; shape (8, 2).
ISOMETRY = np.stack([_image(0), _image(1)], axis=1)

PIPELINE_ORDER = ("1", "4", "M1", "2", "5", "M2", "3")
LABELS_1245 = ("1", "4", "2", "5")
OUTPUT_PAIRS = {
    "rho_15": ("1", "5"),
    "rho_14": ("1", "4"),
    "rho_25": ("2", "5"),
    "rho_42": ("4", "2"),
}


def bh_clone(psi: PureState, target, clone_label=None, machine_label=None) -> PureState:
    """Clone qubit ``target`` of ``psi``.

    The original keeps its register position; the clone and the machine
    qubit are appended at the end, in that order.
    """
    if target not in psi.labels:
        raise KeyError(f"target {target!r} not in register {psi.labels}")
    clone_label = f"{target}'" if clone_label is None else clone_label
    machine_label = f"M{target}" if machine_label is None else machine_label
    for lab in (clone_label, machine_label):
        if lab in psi.labels:
            raise ValueError(f"label {lab!r} already in register {psi.labels}")

    n = psi.n_qubits
    k = psi.labels.index(target)
    iso = ISOMETRY.reshape(2, 2, 2, 2)  # (orig, clone, machine, input)
    # move the target axis last, contract it with the isometry's input leg
    t = np.moveaxis(psi.tensor(), k, -1)
    out = np.tensordot(t, iso, axes=([n - 1], [3]))  # (..rest.., orig, clone, machine)
    out = np.moveaxis(out, n - 1, k)
    labels = psi.labels + (clone_label, machine_label)
    return PureState(labels, out.reshape(-1))


@dataclass(frozen=True)
class BroadcastOutputs:
    rho_1245: DensityMatrix
    rho_15: DensityMatrix
    rho_14: DensityMatrix
    rho_25: DensityMatrix
    rho_42: DensityMatrix

    def pairs(self) -> dict[str, DensityMatrix]:
        return {name: getattr(self, name) for name in OUTPUT_PAIRS}


def cloned_state(p: WParams) -> PureState:
    """7-qubit state after cloning qubits 1 and 2, in ``PIPELINE_ORDER``."""
    psi = w_type_state(p)
    psi = bh_clone(psi, "1", "4", "M1")
    psi = bh_clone(psi, "2", "5", "M2")
    return psi.permuted(PIPELINE_ORDER)


def broadcast_pipeline(p: WParams) -> BroadcastOutputs:
    full = density(cloned_state(p))
    rho_1245 = full.reduce(LABELS_1245)
    reduced = {name: rho_1245.reduce(pair) for name, pair in OUTPUT_PAIRS.items()}
    return BroadcastOutputs(rho_1245=rho_1245, **reduced)
