"""Operator bases: the qubit Pauli family and the qudit shift/clock family.

The shift/clock (Weyl) family is indexed by exponent pairs (a, b) with
W(a, b) = X^a Z^b, or by the flat index k = a * d + b.  Index 0 is the
identity and index 1 is Z, which plays the reference role everywhere.
Note the d = 2 family {I, Z, X, XZ} is not the Pauli family: XZ = -i sigma_y.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import commutator, haar_unitary, hs_inner, hs_norm

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)
for _m in PAULI:
    _m.setflags(write=False)


def _check_dim(d: int) -> None:
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {d!r}")


def omega(d: int) -> complex:
    """Primitive d-th root of unity exp(2 pi i / d)."""
    _check_dim(d)
    return complex(np.exp(2j * np.pi / d))


def shift_x(d: int) -> np.ndarray:
    """Cyclic shift: column a carries a single 1 in row (a + 1) mod d."""
    _check_dim(d)
    x = np.zeros((d, d), dtype=complex)
    for a in range(d):
        x[(a + 1) % d, a] = 1.0
    return x


def clock_z(d: int) -> np.ndarray:
    """Diagonal phase matrix diag(1, w, ..., w^(d-1))."""
    _check_dim(d)
    return np.diag(omega(d) ** np.arange(d)).astype(complex)


def _power(m: np.ndarray, n: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=complex)
    for _ in range(n):
        out = out @ m
    return out


def weyl(d: int, a: int, b: int) -> np.ndarray:
    """The family member X^a Z^b for exponents 0 <= a, b < d."""
    _check_dim(d)
    if not (0 <= a < d and 0 <= b < d):
        raise DomainError(f"exponents must lie in [0, {d}), got a={a}, b={b}")
    return _power(shift_x(d), a) @ _power(clock_z(d), b)


def flat_index(d: int, a: int, b: int) -> int:
    """Flat index k = a * d + b of the exponent pair (a, b)."""
    _check_dim(d)
    if not (0 <= a < d and 0 <= b < d):
        raise DomainError(f"exponents must lie in [0, {d}), got a={a}, b={b}")
    return a * d + b


def index_pair(d: int, k: int) -> tuple[int, int]:
    """Exponent pair (a, b) of a flat index."""
    _check_dim(d)
    if not (0 <= k < d * d):
        raise DomainError(f"index must lie in [0, {d * d}), got {k}")
    return divmod(k, d)


def weyl_by_index(d: int, k: int) -> np.ndarray:
    """Family member at flat index k."""
    a, b = index_pair(d, k)
    return weyl(d, a, b)


@functools.lru_cache(maxsize=16)
def weyl_basis(d: int) -> tuple[np.ndarray, ...]:
    """All d^2 family members ordered by flat index, cached and read-only."""
    _check_dim(d)
    mats = tuple(weyl_by_index(d, k) for k in range(d * d))
    for m in mats:
        m.setflags(write=False)
    return mats


def index_successor(d: int, k: int) -> int:
    """Flat index of W(a, b) Z = W(a, b + 1 mod d); wraps within the a block."""
    a, b = index_pair(d, k)
    return a * d + (b + 1) % d


def commutation_phase(d: int, ab: tuple[int, int], ce: tuple[int, int]) -> complex:
    """Phase w^(b c - a e) in W(a,b) W(c,e) = phase * W(c,e) W(a,b)."""
    a, b = ab
    c, e = ce
    _check_dim(d)
    for v in (a, b, c, e):
        if not (0 <= v < d):
            raise DomainError(f"exponents must lie in [0, {d})")
    return omega(d) ** ((b * c - a * e) % d)


def expand_in_weyl(m: np.ndarray, d: int) -> np.ndarray:
    """Coefficients c_k = tr(W_k^dagger m) / d over the flat-index family."""
    _check_dim(d)
    if m.shape != (d, d):
        raise DomainError(f"matrix shape {m.shape} does not match dimension {d}")
    basis = weyl_basis(d)
    return np.array([hs_inner(w, m) / d for w in basis])


def reconstruct_from_weyl(coeffs: np.ndarray, d: int) -> np.ndarray:
    """Inverse of expand_in_weyl: sum_k c_k W_k."""
    basis = weyl_basis(d)
    if len(coeffs) != len(basis):
        raise DomainError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
    return np.tensordot(np.asarray(coeffs, dtype=complex), np.stack(basis), axes=1)


def expand_in_pauli(m: np.ndarray) -> np.ndarray:
    """Coefficients c_i = tr(sigma_i m) / 2 over (sigma_0, ..., sigma_3)."""
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2 x 2 matrix, got shape {m.shape}")
    return np.array([hs_inner(s, m) / 2 for s in PAULI])


@dataclass
class PropertyCheck:
    """Outcome of one structural identity check."""

    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def property_suite(d: int, seed: int = 7) -> list[PropertyCheck]:
    """Verify the structural identities of the shift/clock family at dimension d.

    Randomized checks (expansion round-trip, conjugation orthonormality) are
    seeded, so the suite is deterministic.
    """
    _check_dim(d)
    basis = weyl_basis(d)
    w = omega(d)
    z = basis[1]
    checks: list[PropertyCheck] = []

    traces = [abs(np.trace(m) - (d if k == 0 else 0)) for k, m in enumerate(basis)]
    checks.append(PropertyCheck("trace", float(max(traces)), 1e-10))

    flat = np.stack([m.ravel() for m in basis])
    gram = flat.conj() @ flat.T
    checks.append(
        PropertyCheck(
            "orthogonality",
            float(np.max(np.abs(gram - d * np.eye(d * d)))),
            1e-10,
        )
    )

    x = basis[flat_index(d, 1, 0)]
    checks.append(
        PropertyCheck(
            "clock_shift_relation", float(np.max(np.abs(z @ x - w * x @ z))), 1e-12
        )
    )

    dev = 0.0
    for k, m in enumerate(basis):
        dev = max(dev, float(np.max(np.abs(m @ z - basis[index_successor(d, k)]))))
    checks.append(PropertyCheck("successor_right_multiplication", dev, 1e-12))

    dev = 0.0
    for k, m in enumerate(basis):
        a = k // d
        dev = max(
            dev, float(np.max(np.abs(z @ m - w**a * basis[index_successor(d, k)])))
        )
    checks.append(PropertyCheck("successor_left_multiplication", dev, 1e-12))

    dev = 0.0
    for k1 in range(d * d):
        for k2 in range(d * d):
            phase = commutation_phase(d, index_pair(d, k1), index_pair(d, k2))
            dev = max(
                dev,
                float(
                    np.max(np.abs(basis[k1] @ basis[k2] - phase * basis[k2] @ basis[k1]))
                ),
            )
    checks.append(PropertyCheck("commutation_phase", dev, 1e-10))

    rng = np.random.default_rng(seed)
    m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    recon = reconstruct_from_weyl(expand_in_weyl(m, d), d)
    checks.append(
        PropertyCheck("expansion_roundtrip", float(np.max(np.abs(recon - m))), 1e-10)
    )

    u = haar_unitary(d, rng)
    coeff = np.stack(
        [expand_in_weyl(u @ basis[i] @ u.conj().T, d)[1:] for i in range(1, d * d)]
    )
    overlap = coeff.conj() @ coeff.T
    checks.append(
        PropertyCheck(
            "conjugation_orthonormality",
            float(np.max(np.abs(overlap - np.eye(d * d - 1)))),
            1e-10,
        )
    )

    if d == 2:
        dev = max(
            float(np.max(np.abs(basis[1] - SIGMA3))),
            float(np.max(np.abs(basis[2] - SIGMA1))),
            float(np.max(np.abs(basis[3] - (-1j) * SIGMA2))),
        )
        checks.append(PropertyCheck("pauli_crosscheck", dev, 1e-12))

    return checks
