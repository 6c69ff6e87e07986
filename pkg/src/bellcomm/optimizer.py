"""Derivative-free maximization over products of spheres and unitary charts.

The search is projected ascent with central finite-difference gradients:
perturb each coordinate by 1e-6, step along the estimated gradient, reproject
onto the constraint set, halve the step on non-improvement.  Restarts draw
independent starting points from per-restart seeds, so a run is fully
deterministic given (seed, config).  Objectives normalize their sphere blocks
internally, which extends them scale-invariantly to the off-sphere points the
finite differences probe.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bases import PAULI
from .complementarity import (
    CoeffTensor,
    commutator_norm_bound,
    commutator_weights,
    generalized_bell,
    local_observable_qudit,
    QuditSetting,
)
from .errors import DomainError, OptimizationError
from .linalg import commutator, hs_norm, tensor

_FD_STEP = 1e-6
_STEP_DECAY = 0.5
_STEP_FLOOR = 1e-15


@dataclass
class OptimizationConfig:
    restarts: int = 32
    max_iters: int = 10000
    step_init: float = 0.1
    tol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise DomainError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iters < 1:
            raise DomainError(f"max_iters must be >= 1, got {self.max_iters}")
        if not (self.step_init > 0 and math.isfinite(self.step_init)):
            raise DomainError(f"step_init must be positive, got {self.step_init}")
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise DomainError(f"tol must be positive, got {self.tol}")
        if not (0 <= self.seed < 2**64):
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class Block:
    """One factor of the search manifold.

    kind "sphere" keeps the sub-vector on the unit sphere of R^size; kind
    "euclidean" is unconstrained and is how unitary factors enter, as real
    parameters of a traceless anti-hermitian generator.
    """

    name: str
    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in ("sphere", "euclidean"):
            raise DomainError(f"unknown block kind {self.kind!r}")
        if self.size < 1:
            raise DomainError(f"block size must be >= 1, got {self.size}")


@dataclass
class OptimizationResult:
    value: float
    argmax: dict[str, np.ndarray]
    iterations_used: int
    converged: bool
    restart_values: list[float] = field(default_factory=list)


def project(blocks: list[Block], x: np.ndarray) -> np.ndarray:
    """Reproject each sphere block onto unit norm; euclidean blocks pass through."""
    out = x.copy()
    pos = 0
    for b in blocks:
        seg = out[pos : pos + b.size]
        if b.kind == "sphere":
            n = np.linalg.norm(seg)
            if n < 1e-300:
                raise OptimizationError("sphere block collapsed to zero", point=x)
            seg /= n
        pos += b.size
    return out


def split_point(blocks: list[Block], x: np.ndarray) -> dict[str, np.ndarray]:
    """Named copies of the block sub-vectors."""
    out = {}
    pos = 0
    for b in blocks:
        out[b.name] = x[pos : pos + b.size].copy()
        pos += b.size
    return out


def _checked(objective, x: np.ndarray) -> float:
    v = objective(x)
    if not math.isfinite(v):
        raise OptimizationError(f"objective returned non-finite value {v!r}", point=x.copy())
    return float(v)


def _gradient(objective, x: np.ndarray, g: np.ndarray) -> np.ndarray:
    for k in range(x.size):
        orig = x[k]
        x[k] = orig + _FD_STEP
        hi = _checked(objective, x)
        x[k] = orig - _FD_STEP
        lo = _checked(objective, x)
        x[k] = orig
        g[k] = (hi - lo) / (2.0 * _FD_STEP)
    return g


def maximize(objective, blocks: list[Block], cfg: OptimizationConfig) -> OptimizationResult:
    """Best projected-ascent run over cfg.restarts independent starts.

    objective maps the flat parameter vector to a float.  The result's argmax
    splits the best point back into named blocks; restart_values records the
    final value of every restart in order.
    """
    dim = sum(b.size for b in blocks)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    best_x = None
    best_v = -math.inf
    best_converged = False
    total_iters = 0
    restart_values: list[float] = []

    for seq in seeds:
        rng = np.random.default_rng(seq)
        x = project(blocks, rng.standard_normal(dim))
        v = _checked(objective, x)
        step = cfg.step_init
        g = _gradient(objective, x, np.empty(dim))
        converged = False
        for _ in range(cfg.max_iters):
            total_iters += 1
            cand = project(blocks, x + step * g)
            cand_v = _checked(objective, cand)
            if cand_v > v:
                gain = cand_v - v
                x, v = cand, cand_v
                if gain < cfg.tol:
                    converged = True
                    break
                _gradient(objective, x, g)
            else:
                step *= _STEP_DECAY
                if step < _STEP_FLOOR:
                    converged = True
                    break
        restart_values.append(v)
        if v > best_v:
            best_v, best_x, best_converged = v, x, converged

    return OptimizationResult(
        value=best_v,
        argmax=split_point(blocks, best_x),
        iterations_used=total_iters,
        converged=best_converged,
        restart_values=restart_values,
    )


def generator_to_unitary(params: np.ndarray, d: int) -> np.ndarray:
    """exp of the traceless anti-hermitian generator encoded by 2 d^2 reals."""
    if params.size != 2 * d * d:
        raise DomainError(f"expected {2 * d * d} parameters, got {params.size}")
    c = params[: d * d].reshape(d, d) + 1j * params[d * d :].reshape(d, d)
    a = (c - c.conj().T) / 2.0
    a -= np.trace(a) / d * np.eye(d)
    # a = i h with h hermitian; exponentiate through the spectral form of h
    h = -1j * a
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T


def _pauli_pair_stack() -> np.ndarray:
    ops = PAULI[1:]
    return np.stack([tensor(a, b) for a in ops for b in ops])


def maximize_m2(
    cfg: OptimizationConfig | None = None, fixed_alpha: np.ndarray | None = None
) -> OptimizationResult:
    """Maximize hs_norm([A, (r . sigma) (x) (s . sigma)]) for two qubits.

    Searches jointly over the real coefficient tensor and both unit vectors;
    pass fixed_alpha to freeze the tensor and search the settings alone.
    The argmax carries "alpha" (3 x 3), "r" and "s".
    """
    cfg = cfg or OptimizationConfig()
    pairs = _pauli_pair_stack()
    sigmas = np.stack(PAULI[1:])
    if fixed_alpha is not None:
        frozen = CoeffTensor.normalized(2, fixed_alpha, "real").alpha.real
        frozen_op = np.tensordot(frozen.ravel(), pairs, axes=1)
        blocks = [Block("r", "sphere", 3), Block("s", "sphere", 3)]
    else:
        frozen = None
        blocks = [Block("alpha", "sphere", 9), Block("r", "sphere", 3), Block("s", "sphere", 3)]

    def objective(x: np.ndarray) -> float:
        if frozen is None:
            a, r, s = x[:9], x[9:12], x[12:15]
            op = np.tensordot(a / np.linalg.norm(a), pairs, axes=1)
        else:
            r, s = x[0:3], x[3:6]
            op = frozen_op
        ar = np.tensordot(r / np.linalg.norm(r), sigmas, axes=1)
        bs = np.tensordot(s / np.linalg.norm(s), sigmas, axes=1)
        loc = np.kron(ar, bs)
        return float(np.linalg.norm(op @ loc - loc @ op))

    result = maximize(objective, blocks, cfg)
    if frozen is not None:
        result.argmax["alpha"] = frozen.copy()
    else:
        result.argmax["alpha"] = result.argmax["alpha"].reshape(3, 3)
    return result


def maximize_md(d: int, cfg: OptimizationConfig | None = None) -> OptimizationResult:
    """Maximize the closed-form commutator norm over normalized complex tensors.

    The argmax carries "alpha" as the (d^2 - 1) square complex tensor.  Values
    can never exceed the 2d bound; the best single-pair scan value is the
    target the search should reproduce.
    """
    if not (2 <= d <= 6):
        raise DomainError(f"dimension must lie in [2, 6], got {d}")
    cfg = cfg or OptimizationConfig()
    m = d * d - 1
    w2 = np.asarray(commutator_weights(d) ** 2).ravel()
    blocks = [Block("alpha", "sphere", 2 * m * m)]

    def objective(x: np.ndarray) -> float:
        re = x[: m * m]
        im = x[m * m :]
        mass = float(w2 @ (re * re) + w2 @ (im * im))
        return d * math.sqrt(mass / float(x @ x))

    result = maximize(objective, blocks, cfg)
    flat = result.argmax["alpha"]
    result.argmax["alpha"] = flat[: m * m].reshape(m, m) + 1j * flat[m * m :].reshape(m, m)
    if result.value > commutator_norm_bound(d) + 1e-9:
        raise OptimizationError(
            f"value {result.value} exceeds the {2 * d} bound", point=flat
        )
    return result


def maximize_md_conjugated(
    d: int, cfg: OptimizationConfig | None = None, i0: int = 1
) -> OptimizationResult:
    """Cross-check path: maximize the direct matrix commutator norm jointly
    over the tensor and a conjugating unitary pair around reference i0."""
    if not (2 <= d <= 6):
        raise DomainError(f"dimension must lie in [2, 6], got {d}")
    cfg = cfg or OptimizationConfig()
    m = d * d - 1
    n_u = 2 * d * d
    blocks = [
        Block("alpha", "sphere", 2 * m * m),
        Block("u_gen", "euclidean", n_u),
        Block("v_gen", "euclidean", n_u),
    ]

    def objective(x: np.ndarray) -> float:
        a = x[: 2 * m * m]
        a = a / np.linalg.norm(a)
        t = CoeffTensor(d, a[: m * m].reshape(m, m) + 1j * a[m * m :].reshape(m, m))
        u = generator_to_unitary(x[2 * m * m : 2 * m * m + n_u], d)
        v = generator_to_unitary(x[2 * m * m + n_u :], d)
        ref = local_observable_qudit(QuditSetting(u_alice=u, u_bob=v, i0=i0), d)
        return hs_norm(commutator(generalized_bell(t), ref))

    result = maximize(objective, blocks, cfg)
    flat = result.argmax["alpha"]
    result.argmax["alpha"] = flat[: m * m].reshape(m, m) + 1j * flat[m * m :].reshape(m, m)
    return result
