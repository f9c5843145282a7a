"""W-type input states, pure states and density matrices on labelled registers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import tensor

NORM_TOL = 1e-12


class DegenerateParamsError(ValueError):
    """A squared amplitude is exactly 0 or 1 (a product-state corner)."""


@dataclass(frozen=True)
class WParams:
    """Squared amplitudes of ``a|001> + b|010> + c|100>`` on qubits (1, 2, 3)."""

    alpha2: float
    beta2: float
    gamma2: float

    def __post_init__(self):
        vals = (self.alpha2, self.beta2, self.gamma2)
        if any(not math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite parameters {vals}")
        if any(v in (0.0, 1.0) for v in vals):
            raise DegenerateParamsError(f"corner case excluded: (alpha2, beta2, gamma2) = {vals}")
        if any(v < 0.0 or v > 1.0 for v in vals):
            raise ValueError(f"squared amplitudes must lie in (0, 1), got {vals}")
        if abs(sum(vals) - 1.0) > NORM_TOL:
            raise ValueError(f"alpha2 + beta2 + gamma2 = {sum(vals)!r}, expected 1")

    @property
    def amplitudes(self) -> tuple[float, float, float]:
        return math.sqrt(self.alpha2), math.sqrt(self.beta2), math.sqrt(self.gamma2)

    def swapped(self) -> "WParams":
        """Exchange beta2 and gamma2."""
        return WParams(self.alpha2, self.gamma2, self.beta2)


def symmetric_params(alpha2: float) -> WParams:
    """The beta = gamma slice: ``beta2 = gamma2 = (1 - alpha2) / 2``."""
    if not 0.0 < alpha2 < 1.0:
        raise ValueError(f"alpha2 must lie in the open interval (0, 1), got {alpha2!r}")
    rest = (1.0 - alpha2) / 2.0
    return WParams(alpha2, rest, rest)


@dataclass(frozen=True)
class PureState:
    labels: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels {labels}")
        if amps.size != 2 ** len(labels):
            raise tensor.DimensionError(
                f"{amps.size} amplitudes do not fit a {len(labels)}-qubit register"
            )
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (|psi|^2 = {norm2!r})")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def permuted(self, order: Sequence) -> "PureState":
        """Same state with its tensor factors listed in ``order``."""
        if len(order) != self.n_qubits or set(order) != set(self.labels):
            raise ValueError(f"{order} is not a permutation of {self.labels}")
        axes = [self.labels.index(lab) for lab in order]
        return PureState(tuple(order), np.transpose(self.tensor(), axes).reshape(-1))


@dataclass(frozen=True)
class DensityMatrix:
    matrix: np.ndarray
    labels: tuple

    def __post_init__(self):
        m = tensor.as_matrix(self.matrix)
        labels = tuple(self.labels)
        if m.shape[0] != 2 ** len(labels):
            raise tensor.DimensionError(
                f"{m.shape[0]}x{m.shape[0]} matrix does not fit register {labels}"
            )
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def reduce(self, keep) -> "DensityMatrix":
        keep = set(keep)
        kept = tuple(lab for lab in self.labels if lab in keep)
        return DensityMatrix(tensor.partial_trace(self.matrix, self.labels, keep), kept)

    def partial_transpose(self, label) -> np.ndarray:
        return tensor.partial_transpose(self.matrix, self.labels, label)

    def validate(self, tol: float = 1e-10) -> "DensityMatrix":
        tensor.check_density(self.matrix, tol)
        return self


def w_type_state(p: WParams) -> PureState:
    a, b, c = p.amplitudes
    amps = np.zeros(8, dtype=complex)
    amps[0b001] = a
    amps[0b010] = b
    amps[0b100] = c
    return PureState(("1", "2", "3"), amps)


def density(psi: PureState) -> DensityMatrix:
    return DensityMatrix(np.outer(psi.amplitudes, psi.amplitudes.conj()), psi.labels)
