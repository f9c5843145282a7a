"""Dense linear algebra on small multi-qubit operators.

Matrices are plain complex ``numpy`` arrays. A register is an ordered
sequence of distinct qubit labels; position ``i`` in the register is the
``i``-th tensor factor, with ``labels[0]`` the most significant bit of the
computational-basis index.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

HERMITIAN_TOL = 1e-10
PSD_CLAMP = 1e-12
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class DimensionError(ValueError):
    """Operator size does not match the register it is paired with."""


class NotHermitianError(ValueError):
    pass


class NotPSDError(ValueError):
    pass


def as_matrix(m) -> np.ndarray:
    """Coerce to a square complex 2-D array."""
    a = np.asarray(getattr(m, "matrix", m), dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def _check_register(dim: int, labels: Sequence) -> int:
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"register labels must be unique: {labels}")
    n = len(labels)
    if dim != 2**n:
        raise DimensionError(f"matrix of dim {dim} does not fit a {n}-qubit register")
    return n


def _positions(labels: Sequence, subset: Iterable, what: str) -> list[int]:
    labels = list(labels)
    out = []
    for lab in subset:
        if lab not in labels:
            raise KeyError(f"{what} label {lab!r} not in register {labels}")
        out.append(labels.index(lab))
    return out


def partial_trace(rho, labels: Sequence, keep: Iterable) -> np.ndarray:
    """Reduce ``rho`` to the qubits in ``keep``.

    Kept qubits stay in their register order regardless of the order in
    which ``keep`` lists them.
    """
    rho = as_matrix(rho)
    n = _check_register(rho.shape[0], labels)
    kept = sorted(set(_positions(labels, keep, "keep")))
    if not kept:
        raise ValueError("keep must name at least one qubit")
    t = rho.reshape((2,) * (2 * n))
    # einsum letters: a.. for ket axes, the next n for bra axes
    ket = [chr(ord("a") + i) for i in range(n)]
    bra = [chr(ord("a") + n + i) if i in kept else ket[i] for i in range(n)]
    out = "".join(ket[i] for i in kept) + "".join(bra[i] for i in kept)
    r = np.einsum("".join(ket) + "".join(bra) + "->" + out, t)
    d = 2 ** len(kept)
    return r.reshape(d, d)


def partial_transpose(rho, labels: Sequence, transposed) -> np.ndarray:
    """Swap ket and bra indices of the qubit(s) named by ``transposed``."""
    rho = as_matrix(rho)
    n = _check_register(rho.shape[0], labels)
    if isinstance(transposed, (str, int)):
        transposed = [transposed]
    t = rho.reshape((2,) * (2 * n))
    for k in _positions(labels, transposed, "transposed"):
        t = np.swapaxes(t, k, n + k)
    return t.reshape(rho.shape).copy()


def hermiticity_error(h) -> float:
    h = as_matrix(h)
    return float(np.max(np.abs(h - h.conj().T)))


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    mag = abs(apq)
    if mag == 0.0:
        return
    phase = apq / mag
    theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # phase on column q makes a[p, q] real, then a real Givens rotation
    j = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ j
    a[idx, :] = j.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ j


def hermitian_eig(h, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns ``(w, v)`` with ``w`` ascending and the columns of ``v`` the
    orthonormal eigenvectors, so that ``h @ v = v @ diag(w)``.
    """
    h = as_matrix(h)
    if hermiticity_error(h) > HERMITIAN_TOL:
        raise NotHermitianError(
            f"matrix is not Hermitian (max |h - h^H| = {hermiticity_error(h):.3e})"
        )
    n = h.shape[0]
    a = 0.5 * (h + h.conj().T)
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if np.sqrt(np.sum(np.abs(a[offdiag]) ** 2)) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
    else:
        if np.sqrt(np.sum(np.abs(a[offdiag]) ** 2)) >= threshold:
            raise RuntimeError("Jacobi iteration did not converge")
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigvalsh(h) -> np.ndarray:
    return hermitian_eig(h)[0]


def clamp_eigenvalues(w: np.ndarray, clamp: float = PSD_CLAMP) -> np.ndarray:
    """Zero out negative dust above ``-clamp``; anything lower is an error."""
    if w.size and w.min() < -clamp:
        raise NotPSDError(f"eigenvalue {w.min():.3e} below -{clamp:g}: not positive semidefinite")
    return np.where(w < 0, 0.0, w)


def sqrt_psd(rho, clamp: float = PSD_CLAMP) -> np.ndarray:
    """Principal square root of a Hermitian positive-semidefinite matrix."""
    w, v = hermitian_eig(rho)
    w = clamp_eigenvalues(w, clamp)
    return (v * np.sqrt(w)) @ v.conj().T


def _det3(m) -> complex:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def det_small(m) -> complex:
    """Determinant of a 3x3 or 4x4 matrix by cofactor expansion."""
    a = as_matrix(m)
    n = a.shape[0]
    rows = a.tolist()
    if n == 3:
        return complex(_det3(rows))
    if n == 4:
        total = 0j
        for j in range(4):
            if rows[0][j] == 0:
                continue
            minor = [[r[k] for k in range(4) if k != j] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _det3(minor)
        return complex(total)
    raise DimensionError(f"det_small supports dims 3 and 4, got {n}")


def real_det(m, imag_tol: float = 1e-12) -> float:
    d = det_small(m)
    if abs(d.imag) >= imag_tol:
        raise ValueError(f"determinant has imaginary residue {d.imag:.3e}")
    return d.real


def is_hermitian(h, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_error(h) <= tol


def check_density(rho, tol: float = 1e-10) -> None:
    """Raise ``ValueError`` unless ``rho`` is Hermitian, unit-trace and PSD."""
    rho = as_matrix(rho)
    err = hermiticity_error(rho)
    if err > tol:
        raise NotHermitianError(f"density matrix not Hermitian (error {err:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise ValueError(f"density matrix trace {tr:.12g} != 1")
    wmin = eigvalsh(rho)[0]
    if wmin < -tol:
        raise NotPSDError(f"density matrix has eigenvalue {wmin:.3e}")
