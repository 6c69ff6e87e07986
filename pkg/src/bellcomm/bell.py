"""Two-qubit CHSH machinery on the singlet state.

Measurement settings are unit vectors in R^3; the spin observable along r is
r . (sigma_1, sigma_2, sigma_3).  Correlations come from the closed form
-a . b, with the density-matrix trace path kept alongside as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import SIGMA1, SIGMA2, SIGMA3
from .errors import DomainError
from .linalg import tensor

_SIGMA_STACK = np.stack([SIGMA1, SIGMA2, SIGMA3])

CLASSICAL_CHSH_BOUND = 2.0


def unit_vector(v) -> np.ndarray:
    """Validate and return a real unit 3-vector."""
    r = np.asarray(v, dtype=float)
    if r.shape != (3,):
        raise DomainError(f"expected a 3-vector, got shape {r.shape}")
    if not np.all(np.isfinite(r)):
        raise DomainError("vector components must be finite")
    n2 = float(r @ r)
    if abs(n2 - 1.0) > 1e-12:
        raise DomainError(f"vector must have unit norm, got norm {np.sqrt(n2)!r}")
    return r


def spin_observable(r) -> np.ndarray:
    """Hermitian, traceless, involutive observable r . sigma."""
    r = unit_vector(r)
    return np.tensordot(r, _SIGMA_STACK, axes=1)


def singlet_state() -> np.ndarray:
    """The two-qubit singlet (|01> - |10>) / sqrt(2), first factor Alice."""
    return np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def singlet_projector() -> np.ndarray:
    """Rank-one projector onto the singlet."""
    psi = singlet_state()
    return np.outer(psi, psi.conj())


def singlet_correlation(a, b) -> float:
    """Correlation of spin measurements along a and b on the singlet: -a . b."""
    return -float(unit_vector(a) @ unit_vector(b))


def singlet_correlation_trace(a, b) -> float:
    """Same correlation through tr((A (x) B) P); oracle for the closed form."""
    m = tensor(spin_observable(a), spin_observable(b)) @ singlet_projector()
    return float(np.trace(m).real)


@dataclass
class ChshSettings:
    """Two measurement directions per side, all unit 3-vectors."""

    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray

    def __post_init__(self):
        self.a1 = unit_vector(self.a1)
        self.a2 = unit_vector(self.a2)
        self.b1 = unit_vector(self.b1)
        self.b2 = unit_vector(self.b2)

    @classmethod
    def tsirelson(cls) -> "ChshSettings":
        """Settings reaching the quantum maximum 2 sqrt(2) on the singlet."""
        s = 1.0 / np.sqrt(2.0)
        return cls(
            a1=np.array([1.0, 0.0, 0.0]),
            a2=np.array([0.0, 0.0, 1.0]),
            b1=np.array([s, 0.0, s]),
            b2=np.array([s, 0.0, -s]),
        )


def chsh_correlations(settings: ChshSettings) -> tuple[float, float, float, float]:
    """The four singlet correlations (a1 b1, a1 b2, a2 b1, a2 b2)."""
    return (
        singlet_correlation(settings.a1, settings.b1),
        singlet_correlation(settings.a1, settings.b2),
        singlet_correlation(settings.a2, settings.b1),
        singlet_correlation(settings.a2, settings.b2),
    )


def chsh_sum(settings: ChshSettings) -> float:
    """Signed combination E11 + E12 + E21 - E22 before the absolute value."""
    e11, e12, e21, e22 = chsh_correlations(settings)
    return e11 + e12 + e21 - e22


def chsh_value(settings: ChshSettings) -> float:
    """|E11 + E12 + E21 - E22| on the singlet."""
    return abs(chsh_sum(settings))


def bell_operator(settings: ChshSettings) -> np.ndarray:
    """A1 (x) (B1 + B2) + A2 (x) (B1 - B2) as a 4 x 4 matrix."""
    a1 = spin_observable(settings.a1)
    a2 = spin_observable(settings.a2)
    b1 = spin_observable(settings.b1)
    b2 = spin_observable(settings.b2)
    return tensor(a1, b1 + b2) + tensor(a2, b1 - b2)


def classic_bell_operator() -> np.ndarray:
    """sqrt(2) (sigma_1 (x) sigma_1 + sigma_3 (x) sigma_3), the operator the
    Tsirelson settings produce."""
    return np.sqrt(2.0) * (tensor(SIGMA1, SIGMA1) + tensor(SIGMA3, SIGMA3))


def classic_bell_operator_normalized() -> np.ndarray:
    """Unit-coefficient version (sigma_1 (x) sigma_1 + sigma_3 (x) sigma_3) / sqrt(2)."""
    return classic_bell_operator() / 2.0
