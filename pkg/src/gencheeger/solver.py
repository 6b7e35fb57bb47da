"""Preconditioned conjugate gradients for singular Laplacian systems.

For a connected graph the Laplacian is nonsingular on the zero-sum
subspace.  The solver keeps the right-hand side, the residual, the
preconditioned residual and the iterate in that subspace, so round-off
cannot drift into the null space.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph

__all__ = ["SolveConfig", "SolveStats", "project_span1_orthogonal", "cg_solve"]

PRECONDITIONERS = ("none", "diagonal")


@dataclass(frozen=True)
class SolveConfig:
    """Stopping rule and preconditioner for :func:`cg_solve`.

    ``max_iterations=None`` means ``10 * n``.
    """

    rel_residual_tol: float = 1e-10
    max_iterations: int | None = None
    preconditioner: str = "diagonal"

    def __post_init__(self):
        if not 0 < self.rel_residual_tol < 1:
            raise InputError(f"rel_residual_tol must lie in (0, 1), got {self.rel_residual_tol}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise InputError("max_iterations must be positive")
        if self.preconditioner not in PRECONDITIONERS:
            raise InputError(f"preconditioner must be one of {PRECONDITIONERS}")


@dataclass(frozen=True)
class SolveStats:
    iterations: int
    final_rel_residual: float
    converged: bool


def project_span1_orthogonal(x) -> np.ndarray:
    """Remove the mean, so the result sums to zero."""
    x = np.asarray(x, dtype=np.float64)
    return x - x.mean()


def cg_solve(
    g: Graph, b, cfg: SolveConfig = SolveConfig()
) -> tuple[np.ndarray, SolveStats]:
    """Zero-sum solution of ``L_G z = P b`` where ``P`` removes the mean of ``b``.

    The relative residual is measured against the projected right-hand
    side, the only part a Laplacian can reach.  Non-convergence is reported
    through ``stats.converged``; it is up to the caller to treat it as an
    error.
    """
    b = np.asarray(b, dtype=np.float64)
    if b.shape != (g.n,):
        raise InputError(f"right-hand side of shape {b.shape} does not match n={g.n}")
    b = project_span1_orthogonal(b)
    bnorm = np.linalg.norm(b)
    if bnorm == 0.0:
        return np.zeros(g.n), SolveStats(0, 0.0, True)

    L = g.laplacian
    tol = cfg.rel_residual_tol * bnorm
    maxit = cfg.max_iterations or 10 * g.n
    if cfg.preconditioner == "diagonal":
        if np.any(g.degrees <= 0):
            raise InputError("diagonal preconditioner needs every degree positive")
        dinv = 1.0 / g.degrees
    else:
        dinv = None

    def precondition(r):
        return r if dinv is None else project_span1_orthogonal(dinv * r)

    x = np.zeros(g.n)
    r = b.copy()
    z = precondition(r)
    p = z.copy()
    rz = r @ z
    it = 0
    while it < maxit:
        it += 1
        Ap = L @ p
        pAp = p @ Ap
        if not pAp > 0:
            break
        alpha = rz / pAp
        x = project_span1_orthogonal(x + alpha * p)
        r = project_span1_orthogonal(r - alpha * Ap)
        if np.linalg.norm(r) <= tol:
            # recursive residual can run ahead of the true one
            r = b - L @ x
            if np.linalg.norm(r) <= tol:
                break
            z = precondition(r)
            p = z.copy()
            rz = r @ z
            continue
        z = precondition(r)
        rz_new = r @ z
        p = z + (rz_new / rz) * p
        rz = rz_new

    rel = float(np.linalg.norm(b - L @ x) / bnorm)
    return x, SolveStats(it, rel, rel <= cfg.rel_residual_tol)
