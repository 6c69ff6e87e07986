"""Command line interface.

Subcommands: verify (structural identities of the shift/clock family),
chsh (singlet correlations for four settings), mbound (bounds and optimizer
value for one dimension), report (CSV of bounds across dimensions).
All machine output goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 failed check, 2 input error, 3 optimizer non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from .bases import property_suite
from .bell import (
    CLASSICAL_CHSH_BOUND,
    ChshSettings,
    chsh_correlations,
    chsh_value,
)
from .complementarity import (
    CoeffTensor,
    best_known_commutator_norm,
    commutator_norm_bound,
    commutator_norm_direct,
    qudit_commutator_norm,
)
from .errors import DomainError
from .optimizer import OptimizationConfig, maximize_md

SEED_ENV_VAR = "BELLCOMM_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_vector(text: str, normalize: bool) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise DomainError(f"expected three comma-separated components, got {text!r}")
    try:
        v = np.array([float(p) for p in parts])
    except ValueError as exc:
        raise DomainError(f"could not parse vector {text!r}: {exc}") from exc
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise DomainError(f"vector {text!r} has zero norm")
    if not normalize and abs(n - 1.0) > 1e-9:
        raise DomainError(
            f"vector {text!r} has norm {n!r}; pass --normalize to rescale"
        )
    return v / n


def cmd_verify(args) -> int:
    if not (2 <= args.d <= 8):
        print(f"error: --d must lie in [2, 8], got {args.d}", file=sys.stderr)
        return 2
    checks = property_suite(args.d, seed=args.seed)
    payload = {
        "d": args.d,
        "properties": [
            {
                "name": c.name,
                "max_deviation": c.max_deviation,
                "tolerance": c.tolerance,
                "passed": c.passed,
            }
            for c in checks
        ],
        "all_passed": all(c.passed for c in checks),
    }
    _emit(payload)
    return 0 if payload["all_passed"] else 1


def cmd_chsh(args) -> int:
    explicit = [args.a1, args.a2, args.b1, args.b2]
    given = [v for v in explicit if v is not None]
    try:
        if given and len(given) != 4:
            raise DomainError("provide all four of --a1 --a2 --b1 --b2, or none")
        if given:
            settings = ChshSettings(
                a1=_parse_vector(args.a1, args.normalize),
                a2=_parse_vector(args.a2, args.normalize),
                b1=_parse_vector(args.b1, args.normalize),
                b2=_parse_vector(args.b2, args.normalize),
            )
        elif args.preset == "tsirelson":
            settings = ChshSettings.tsirelson()
        else:
            raise DomainError(f"unknown preset {args.preset!r}")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    e11, e12, e21, e22 = chsh_correlations(settings)
    value = chsh_value(settings)
    _emit(
        {
            "correlations": {"a1_b1": e11, "a1_b2": e12, "a2_b1": e21, "a2_b2": e22},
            "chsh_value": value,
            "violates_classical": value > CLASSICAL_CHSH_BOUND,
        }
    )
    return 0


def cmd_mbound(args) -> int:
    if not (2 <= args.d <= 6):
        print(f"error: --d must lie in [2, 6], got {args.d}", file=sys.stderr)
        return 2
    if args.restarts < 1:
        print(f"error: --restarts must be >= 1, got {args.restarts}", file=sys.stderr)
        return 2
    scan = best_known_commutator_norm(args.d)
    cfg = OptimizationConfig(
        restarts=args.restarts, max_iters=args.max_iters, seed=args.seed
    )
    result = maximize_md(args.d, cfg)
    payload = {
        "paper_bound": commutator_norm_bound(args.d),
        "best_known": scan.value,
        "optimizer_value": result.value,
        "certificate": {
            "i": scan.i,
            "j": scan.j,
            "exponent": scan.exponent,
            "tensor": scan.tensor().to_json_dict(),
        },
        "gap": commutator_norm_bound(args.d) - scan.value,
    }
    failed_self_check = False
    if args.self_check:
        t = CoeffTensor.from_json_dict(payload["certificate"]["tensor"])
        closed = qudit_commutator_norm(t)
        direct = commutator_norm_direct(t)
        err = max(abs(closed - scan.value), abs(direct - scan.value))
        payload["self_check"] = {
            "closed_form": closed,
            "direct": direct,
            "max_error": err,
            "passed": err <= 1e-9,
        }
        failed_self_check = not payload["self_check"]["passed"]
    _emit(payload)
    if not result.converged:
        print("warning: optimizer did not converge", file=sys.stderr)
        return 3
    return 1 if failed_self_check else 0


def cmd_report(args) -> int:
    if not (2 <= args.dmax <= 6):
        print(f"error: --dmax must lie in [2, 6], got {args.dmax}", file=sys.stderr)
        return 2
    rows = []
    for d in range(2, args.dmax + 1):
        scan = best_known_commutator_norm(d)
        bound = commutator_norm_bound(d)
        # row invariant: best known <= 2d <= 4d
        if not scan.value <= bound + 1e-9:
            print(f"error: best-known value exceeds the bound at d={d}", file=sys.stderr)
            return 1
        rows.append((d, scan.value, bound, 2 * bound))
    try:
        handle = open(args.out, "w", newline="") if args.out else sys.stdout
    except OSError as exc:
        print(f"error: cannot open {args.out!r}: {exc}", file=sys.stderr)
        return 2
    try:
        writer = csv.writer(handle)
        writer.writerow(["d", "m_best_known", "m_paper_bound_2d", "k_d_bound_4d"])
        for d, best, bound, kd in rows:
            writer.writerow([d, f"{best:.10f}", f"{bound:.10f}", f"{kd:.10f}"])
    finally:
        if handle is not sys.stdout:
            handle.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellcomm",
        description="Commutator norms of generalized Bell operators against local observables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the structural identities at one dimension")
    p.add_argument("--d", type=int, required=True, help="dimension, 2 to 8")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help=f"seed for randomized checks (default from ${SEED_ENV_VAR} or 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chsh", help="singlet correlations and CHSH value for four settings")
    p.add_argument("--preset", default="tsirelson",
                   help="named settings; 'tsirelson' reaches the quantum maximum")
    p.add_argument("--a1", help="first Alice direction, e.g. 1,0,0")
    p.add_argument("--a2", help="second Alice direction")
    p.add_argument("--b1", help="first Bob direction")
    p.add_argument("--b2", help="second Bob direction")
    p.add_argument("--normalize", action="store_true",
                   help="rescale non-unit input vectors instead of rejecting them")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("mbound", help="bounds and optimizer value at one dimension")
    p.add_argument("--d", type=int, required=True, help="dimension, 2 to 6")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help=f"optimizer seed (default from ${SEED_ENV_VAR} or 0)")
    p.add_argument("--restarts", type=int, default=8, help="optimizer restarts")
    p.add_argument("--max-iters", type=int, default=10000, help="iterations per restart")
    p.add_argument("--self-check", action="store_true",
                   help="recompute the certificate through both library routes")
    p.set_defaults(func=cmd_mbound)

    p = sub.add_parser("report", help="CSV of bounds for dimensions 2..dmax")
    p.add_argument("--dmax", type=int, required=True, help="largest dimension, 2 to 6")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
