"""Dense complex matrix kernel: products, adjoints, Hilbert-Schmidt geometry.

All operators are plain numpy arrays with dtype complex128.  Shape mismatches
raise ShapeError naming both offending dimensions; everything else is a thin,
well-defined wrapper so the algebraic identities used elsewhere have a single
audited home.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError, ShapeError


def as_operator(a) -> np.ndarray:
    """Coerce to a square complex128 matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise DomainError("matrix entries must be finite")
    return m


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product a @ b."""
    if a.shape[1] != b.shape[0]:
        raise ShapeError(
            f"inner dimensions differ: {a.shape[1]} (left) vs {b.shape[0]} (right)"
        )
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b, left factor on the slow index."""
    return np.kron(a, b)


def _require_same_square(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"left operand is not square: shape {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ShapeError(f"right operand is not square: shape {b.shape}")
    if a.shape != b.shape:
        raise ShapeError(f"dimensions differ: {a.shape[0]} vs {b.shape[0]}")


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[a, b] = a b - b a for equal-dimension square matrices."""
    _require_same_square(a, b)
    return a @ b - b @ a


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product tr(a^dagger b)."""
    _require_same_square(a, b)
    return complex(np.vdot(a, b))


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm of a square matrix."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    return float(np.linalg.norm(a))


def is_hermitian(a: np.ndarray, tol: float = 1e-10) -> bool:
    """True when max entrywise deviation from a^dagger is within tol."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def is_unitary(a: np.ndarray, tol: float = 1e-10) -> bool:
    """True when max entrywise deviation of a^dagger a from identity is within tol."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    gram = a.conj().T @ a
    return bool(np.max(np.abs(gram - np.eye(a.shape[0]))) <= tol)


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed d x d unitary via QR of a complex Ginibre matrix."""
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d}")
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    # fix the phase convention so the distribution is exactly Haar
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases
