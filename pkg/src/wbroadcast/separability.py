"""Peres-Horodecki tests for two-qubit states and root bracketing in alpha2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import tensor

SEP_TOL = 1e-10
THRESHOLD_TOL = 1e-10
MAX_BISECTIONS = 200

_TWO_QUBITS = ("A", "B")


def _two_qubit(rho) -> np.ndarray:
    m = tensor.as_matrix(rho)
    if m.shape != (4, 4):
        raise tensor.DimensionError(f"expected a two-qubit (4x4) state, got {m.shape}")
    return m


def partial_transpose_2q(rho, side: int = 1) -> np.ndarray:
    """Partial transpose of a 4x4 state on qubit ``side`` (0 = first, 1 = second)."""
    return tensor.partial_transpose(_two_qubit(rho), _TWO_QUBITS, _TWO_QUBITS[side])


def w3_w4(rho) -> tuple[float, float]:
    """Leading 3x3 minor and full determinant of the second-qubit partial transpose."""
    pt = partial_transpose_2q(rho)
    return tensor.real_det(pt[:3, :3]), tensor.real_det(pt)


@dataclass(frozen=True)
class SeparabilityVerdict:
    w3: float
    w4: float
    min_pt_eigenvalue: float
    negativity: float
    separable: bool

    @property
    def determinant_separable(self) -> bool:
        return self.w3 >= -SEP_TOL and self.w4 >= -SEP_TOL


def pt_spectrum(rho, side: int = 1) -> np.ndarray:
    return tensor.eigvalsh(partial_transpose_2q(rho, side))


def ppt_verdict(rho, side: int = 1) -> SeparabilityVerdict:
    w3, w4 = w3_w4(rho)
    w = pt_spectrum(rho, side)
    negativity = float(np.abs(w[w < 0]).sum())
    return SeparabilityVerdict(
        w3=w3,
        w4=w4,
        min_pt_eigenvalue=float(w[0]),
        negativity=negativity,
        separable=bool(w[0] >= -SEP_TOL),
    )


def find_threshold(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = THRESHOLD_TOL,
    max_iter: int = MAX_BISECTIONS,
) -> float:
    """Bisection for a sign change of ``f`` on ``[lo, hi]``.

    Returns the midpoint of the final bracket, whose width is at most
    ``tol`` (or whatever ``max_iter`` halvings reach).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise ValueError(f"no sign change on [{lo}, {hi}]: f(lo)={flo:.3e}, f(hi)={fhi:.3e}")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
