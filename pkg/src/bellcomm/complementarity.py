"""Commutator-norm complementarity of generalized Bell operators.

A generalized Bell operator is a unit-Frobenius combination
sum_{i,j=1}^{d^2-1} alpha_ij T_i (x) T_j over a traceless operator family T:
the Pauli family for qubits with real coefficients, the shift/clock family
otherwise.  The quantity of interest is the Hilbert-Schmidt norm of its
commutator with a product of local observables, maximized over the choices
the coefficients allow.  Closed forms below are always paired with the
direct matrix route so each can audit the other.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .bases import (
    PAULI,
    expand_in_pauli,
    index_successor,
    omega,
    weyl_basis,
)
from .errors import DomainError
from .linalg import commutator, hs_norm, is_unitary, tensor
from .bell import spin_observable, unit_vector

FIELD_KINDS = ("real", "complex")


@dataclass
class CoeffTensor:
    """Coefficient tensor over ordered pairs of non-identity family members.

    alpha is (d^2 - 1) x (d^2 - 1) complex; alpha[i - 1, j - 1] weights
    T_i (x) T_j for 1-based family indices i, j.  field_kind "real" demands
    exactly real entries and selects the Pauli family at d = 2.
    """

    d: int
    alpha: np.ndarray
    field_kind: str = "complex"

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or self.d < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.d!r}")
        if self.field_kind not in FIELD_KINDS:
            raise DomainError(f"field_kind must be one of {FIELD_KINDS}")
        m = self.d * self.d - 1
        a = np.asarray(self.alpha, dtype=complex)
        if a.shape != (m, m):
            raise DomainError(f"alpha must have shape ({m}, {m}), got {a.shape}")
        if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
            raise DomainError("alpha entries must be finite")
        if self.field_kind == "real" and np.any(a.imag != 0):
            raise DomainError("field_kind 'real' requires exactly real entries")
        self.alpha = a

    @property
    def size(self) -> int:
        return self.d * self.d - 1

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.alpha))

    @property
    def is_normalized(self) -> bool:
        return abs(self.frobenius_norm**2 - 1.0) <= 1e-12

    @classmethod
    def normalized(cls, d: int, alpha, field_kind: str = "complex") -> "CoeffTensor":
        """Scale to unit Frobenius norm; the all-zero tensor is rejected."""
        a = np.asarray(alpha, dtype=complex)
        n = np.linalg.norm(a)
        if n < 1e-300:
            raise DomainError("cannot normalize an all-zero tensor")
        return cls(d=d, alpha=a / n, field_kind=field_kind)

    @classmethod
    def unit_entry(
        cls, d: int, i: int, j: int, field_kind: str = "complex"
    ) -> "CoeffTensor":
        """Weight 1 on the single pair (i, j), 1-based."""
        m = d * d - 1
        if not (1 <= i <= m and 1 <= j <= m):
            raise DomainError(f"indices must lie in [1, {m}], got ({i}, {j})")
        a = np.zeros((m, m), dtype=complex)
        a[i - 1, j - 1] = 1.0
        return cls(d=d, alpha=a, field_kind=field_kind)

    def to_json_dict(self) -> dict:
        """Schema: {d, field_kind, entries: [[re, im], ...]} in row-major order."""
        entries = [
            [float(z.real), float(z.imag)] for z in self.alpha.ravel(order="C")
        ]
        return {"d": int(self.d), "field_kind": self.field_kind, "entries": entries}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CoeffTensor":
        try:
            d = int(obj["d"])
            kind = obj["field_kind"]
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed tensor object: {exc}") from exc
        m = d * d - 1
        if len(entries) != m * m:
            raise DomainError(
                f"expected {m * m} entries for d={d}, got {len(entries)}"
            )
        flat = np.array([complex(re, im) for re, im in entries])
        return cls(d=d, alpha=flat.reshape((m, m)), field_kind=kind)


def random_coeff_tensor(
    d: int, rng: np.random.Generator, field_kind: str = "complex"
) -> CoeffTensor:
    """Normalized tensor with standard-normal entry components."""
    m = d * d - 1
    a = rng.standard_normal((m, m))
    if field_kind == "complex":
        a = a + 1j * rng.standard_normal((m, m))
    return CoeffTensor.normalized(d, a, field_kind)


def _require_normalized(t: CoeffTensor) -> None:
    if not t.is_normalized:
        raise DomainError(
            f"tensor must be normalized, got squared norm {t.frobenius_norm**2!r}"
        )


@functools.lru_cache(maxsize=16)
def _family_products(d: int, family: str) -> np.ndarray:
    """Stacked T_i (x) T_j over 1-based pairs, shape (m^2, d^2, d^2)."""
    if family == "pauli":
        ops = PAULI[1:]
    else:
        ops = weyl_basis(d)[1:]
    mats = np.stack([tensor(a, b) for a in ops for b in ops])
    mats.setflags(write=False)
    return mats


def _family_name(t: CoeffTensor) -> str:
    return "pauli" if (t.d == 2 and t.field_kind == "real") else "weyl"


def generalized_bell(t: CoeffTensor) -> np.ndarray:
    """Dense matrix sum_ij alpha_ij T_i (x) T_j."""
    prods = _family_products(t.d, _family_name(t))
    return np.tensordot(t.alpha.ravel(), prods, axes=1)


def local_observable_qubit(r, s) -> np.ndarray:
    """Product observable (r . sigma) (x) (s . sigma)."""
    return tensor(spin_observable(r), spin_observable(s))


@dataclass
class QuditSetting:
    """Local qudit reference: conjugated copies of family member i0 on each side."""

    u_alice: np.ndarray
    u_bob: np.ndarray
    i0: int = 1


def local_observable_qudit(setting: QuditSetting, d: int) -> np.ndarray:
    """(U W_i0 U^dagger) (x) (V W_i0 V^dagger); W_i0 is unitary, not hermitian
    in general, so this is a reference operator rather than an observable."""
    if not (1 <= setting.i0 < d * d):
        raise DomainError(f"reference index must lie in [1, {d * d}), got {setting.i0}")
    for name, u in (("u_alice", setting.u_alice), ("u_bob", setting.u_bob)):
        if u.shape != (d, d):
            raise DomainError(f"{name} must be {d} x {d}, got {u.shape}")
        if not is_unitary(u, 1e-10):
            raise DomainError(f"{name} is not unitary within 1e-10")
    w = weyl_basis(d)[setting.i0]
    a = setting.u_alice @ w @ setting.u_alice.conj().T
    b = setting.u_bob @ w @ setting.u_bob.conj().T
    return tensor(a, b)


def unitary_to_rotation(u: np.ndarray) -> np.ndarray:
    """3 x 3 rotation R with u sigma_i u^dagger = sum_j R_ij sigma_j."""
    if u.shape != (2, 2):
        raise DomainError(f"expected a 2 x 2 matrix, got shape {u.shape}")
    if not is_unitary(u, 1e-10):
        raise DomainError("matrix is not unitary within 1e-10")
    r = np.empty((3, 3))
    for i in range(3):
        coeffs = expand_in_pauli(u @ PAULI[i + 1] @ u.conj().T)
        r[i] = coeffs[1:].real
    return r


def rotation_taking_z_to(r) -> np.ndarray:
    """Some rotation matrix with third row r, det +1."""
    r = unit_vector(r)
    helper = np.array([1.0, 0.0, 0.0])
    if abs(r @ helper) > 0.9:
        helper = np.array([0.0, 1.0, 0.0])
    row1 = helper - (helper @ r) * r
    row1 /= np.linalg.norm(row1)
    row2 = np.cross(r, row1)
    return np.stack([row1, row2, r])


def conjugate_coeffs_qubit(t: CoeffTensor, rot_a: np.ndarray, rot_b: np.ndarray) -> CoeffTensor:
    """Tensor of (U (x) V) A (U (x) V)^dagger when U, V act as rotations rot_a,
    rot_b on the Pauli vector: alpha'_pq = sum_ij alpha_ij rot_a[i,p] rot_b[j,q]."""
    if t.d != 2 or t.field_kind != "real":
        raise DomainError("conjugation of coefficients needs a real qubit tensor")
    for name, rot in (("rot_a", rot_a), ("rot_b", rot_b)):
        if rot.shape != (3, 3):
            raise DomainError(f"{name} must be 3 x 3, got {rot.shape}")
        if np.max(np.abs(rot @ rot.T - np.eye(3))) > 1e-10:
            raise DomainError(f"{name} is not orthogonal within 1e-10")
    alpha = rot_a.T @ t.alpha.real @ rot_b
    return CoeffTensor(d=2, alpha=alpha.astype(complex), field_kind="real")


def qubit_commutator_closed_form(t: CoeffTensor) -> np.ndarray:
    """[A, sigma_3 (x) sigma_3] for a real qubit tensor, via the four-term
    identity 2i (a_23 s1(x)I + a_32 I(x)s1 - a_13 s2(x)I - a_31 I(x)s2)."""
    if t.d != 2 or t.field_kind != "real":
        raise DomainError("closed form applies to real qubit tensors only")
    a = t.alpha.real
    i2 = PAULI[0]
    return 2j * (
        a[1, 2] * tensor(PAULI[1], i2)
        + a[2, 1] * tensor(i2, PAULI[1])
        - a[0, 2] * tensor(PAULI[2], i2)
        - a[2, 0] * tensor(i2, PAULI[2])
    )


def qubit_commutator_norm(t: CoeffTensor) -> float:
    """Closed-form norm 4 sqrt(a_13^2 + a_23^2 + a_31^2 + a_32^2)."""
    if t.d != 2 or t.field_kind != "real":
        raise DomainError("closed form applies to real qubit tensors only")
    _require_normalized(t)
    a = t.alpha.real
    return 4.0 * float(np.sqrt(a[0, 2] ** 2 + a[1, 2] ** 2 + a[2, 0] ** 2 + a[2, 1] ** 2))


def offblock_mass(t: CoeffTensor, r, s) -> float:
    """sqrt(a'_13^2 + a'_23^2 + a'_31^2 + a'_32^2) of the tensor conjugated into
    the frame where the observables along r and s become sigma_3 on each side.

    4 times this equals hs_norm([A, (r . sigma) (x) (s . sigma)]).
    """
    rot_a = rotation_taking_z_to(r)
    rot_b = rotation_taking_z_to(s)
    b = conjugate_coeffs_qubit(t, rot_a.T, rot_b.T).alpha.real
    return float(np.sqrt(b[0, 2] ** 2 + b[1, 2] ** 2 + b[2, 0] ** 2 + b[2, 1] ** 2))


@dataclass
class QubitSupremum:
    """Maximum commutator norm over real qubit tensors and settings, with the
    two certificates that attain it."""

    value: float
    single_term: CoeffTensor
    single_term_r: np.ndarray
    single_term_s: np.ndarray
    classic: CoeffTensor
    classic_r: np.ndarray
    classic_s: np.ndarray


def qubit_max_commutator_norm() -> QubitSupremum:
    """The supremum 4, attained by a single off-block coefficient against
    sigma_3 (x) sigma_3 and by the normalized classic Bell tensor against
    sigma_1 (x) sigma_3."""
    classic = np.zeros((3, 3))
    classic[0, 0] = classic[2, 2] = 1.0 / np.sqrt(2.0)
    return QubitSupremum(
        value=4.0,
        single_term=CoeffTensor.unit_entry(2, 2, 3, "real"),
        single_term_r=np.array([0.0, 0.0, 1.0]),
        single_term_s=np.array([0.0, 0.0, 1.0]),
        classic=CoeffTensor(d=2, alpha=classic.astype(complex), field_kind="real"),
        classic_r=np.array([1.0, 0.0, 0.0]),
        classic_s=np.array([0.0, 0.0, 1.0]),
    )


@functools.lru_cache(maxsize=16)
def commutator_weights(d: int) -> np.ndarray:
    """Weights |1 - w^(floor(i/d) + floor(j/d))| over 1-based pairs, (m, m)."""
    m = d * d - 1
    blocks = np.arange(1, m + 1) // d
    expo = ((blocks[:, None] + blocks[None, :]) % d).astype(float)
    w = np.abs(1.0 - omega(d) ** expo)
    w.setflags(write=False)
    return w


def qudit_commutator_coeffs(t: CoeffTensor, i0: int = 1) -> dict[tuple[int, int], complex]:
    """Expansion of [A, Z (x) Z] over the shift/clock pair family: the pair
    (i, j) contributes alpha_ij (1 - w^(floor(i/d) + floor(j/d))) on the
    successor pair.  Only the reference index 1 (the clock operator) has a
    closed form; other references go through the direct matrix route."""
    if t.field_kind != "complex":
        raise DomainError("shift/clock expansion needs field_kind 'complex'")
    if i0 != 1:
        raise DomainError(f"closed form exists for reference index 1 only, got {i0}")
    d = t.d
    w = omega(d)
    out: dict[tuple[int, int], complex] = {}
    for i in range(1, d * d):
        for j in range(1, d * d):
            c = t.alpha[i - 1, j - 1] * (1.0 - w ** ((i // d + j // d) % d))
            if c != 0:
                out[(index_successor(d, i), index_successor(d, j))] = complex(c)
    return out


def qudit_commutator_norm(t: CoeffTensor) -> float:
    """Closed-form norm d sqrt(sum_ij |alpha_ij|^2 |1 - w^(...)|^2)."""
    if t.field_kind != "complex":
        raise DomainError("shift/clock closed form needs field_kind 'complex'")
    _require_normalized(t)
    w = commutator_weights(t.d)
    mass = float(np.sum((w * w) * (t.alpha.real**2 + t.alpha.imag**2)))
    return t.d * float(np.sqrt(mass))


def commutator_norm_direct(t: CoeffTensor, i0: int = 1) -> float:
    """hs_norm([A, W_i0 (x) W_i0]) by dense matrices; oracle for the closed
    forms and the only route for reference indices other than 1."""
    if t.field_kind != "complex":
        raise DomainError("direct shift/clock route needs field_kind 'complex'")
    if not (1 <= i0 < t.d * t.d):
        raise DomainError(f"reference index must lie in [1, {t.d * t.d}), got {i0}")
    w = weyl_basis(t.d)[i0]
    return hs_norm(commutator(generalized_bell(t), tensor(w, w)))


def commutator_norm_bound(d: int) -> float:
    """Upper bound 2d on the commutator norm of any normalized tensor."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    return 2.0 * d


@dataclass
class ScanResult:
    """Best single-pair value over the exhaustive exponent scan."""

    d: int
    value: float
    i: int
    j: int
    exponent: int

    def tensor(self) -> CoeffTensor:
        return CoeffTensor.unit_entry(self.d, self.i, self.j, "complex")


def best_known_commutator_norm(d: int) -> ScanResult:
    """Exhaustive scan of single-pair tensors: d max_ij |1 - w^(...)|, with the
    lexicographically smallest maximizing pair as certificate.  Saturates the
    2d bound exactly when d is even."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    w = commutator_weights(d)
    best = -1.0
    arg = (0, 0)
    m = d * d - 1
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            v = d * float(w[i - 1, j - 1])
            if v > best + 1e-12:
                best, arg = v, (i, j)
    i, j = arg
    return ScanResult(d=d, value=best, i=i, j=j, exponent=(i // d + j // d) % d)
