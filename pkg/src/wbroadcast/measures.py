"""Concurrence, entanglement of formation and linear entropy of two-qubit states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tensor

_YY = np.kron(tensor.SIGMA_Y, tensor.SIGMA_Y)


def _two_qubit(rho) -> np.ndarray:
    m = tensor.as_matrix(rho)
    if m.shape != (4, 4):
        raise tensor.DimensionError(f"expected a 4x4 density matrix, got {m.shape}")
    return m


def spin_flip(rho) -> np.ndarray:
    rho = _two_qubit(rho)
    return _YY @ rho.conj() @ _YY


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of ``sqrt(rho) rho~ sqrt(rho)``, descending."""
    rho = _two_qubit(rho)
    s = tensor.sqrt_psd(rho)
    r = s @ spin_flip(rho) @ s
    r = 0.5 * (r + r.conj().T)
    w = tensor.clamp_eigenvalues(tensor.eigvalsh(r))
    return np.sqrt(w)[::-1]


def concurrence_margin(rho) -> float:
    """``l1 - l2 - l3 - l4`` before clipping at zero; its sign marks entanglement."""
    lam = wootters_lambdas(rho)
    return float(lam[0] - lam[1:].sum())


def concurrence(rho) -> float:
    return max(concurrence_margin(rho), 0.0)


def _h2(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof(c: float) -> float:
    """Entanglement of formation of a two-qubit state with concurrence ``c``."""
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise ValueError(f"concurrence must lie in [0, 1], got {c!r}")
    c = min(max(c, 0.0), 1.0)
    return _h2(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def purity(rho) -> float:
    rho = tensor.as_matrix(rho)
    # Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(rho) ** 2))


def linear_entropy(rho) -> float:
    """``(4/3)(1 - Tr rho^2)``, normalised to 1 on the maximally mixed two-qubit state."""
    rho = _two_qubit(rho)
    return 4.0 / 3.0 * (1.0 - purity(rho))


@dataclass(frozen=True)
class MeasureRecord:
    concurrence: float
    eof: float
    linear_entropy: float


def measure(rho) -> MeasureRecord:
    c = concurrence(rho)
    return MeasureRecord(concurrence=c, eof=eof(c), linear_entropy=linear_entropy(rho))
