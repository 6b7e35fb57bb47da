"""Inverse power iteration for the smallest eigenvalue of ``(L_G, L_H)``.

Each round applies ``L_G^+ L_H`` through a CG solve.  The iterate lives in
the zero-sum subspace; reported vectors are shifted to be orthogonal to the
degree vector of ``G`` instead, which leaves every Laplacian Rayleigh
quotient unchanged.  Independent randomized trials, each with its own
child seed, are run and the smallest Rayleigh quotient wins.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateError, InputError, NumericalError
from .graph import Graph, laplacian_quadform, validate_connected
from .solver import SolveConfig, cg_solve, project_span1_orthogonal

__all__ = [
    "EigenConfig",
    "PencilEigenResult",
    "rayleigh",
    "d_orthogonalize",
    "inverse_power_minimize",
]

MAX_RESAMPLES = 5


@dataclass(frozen=True)
class EigenConfig:
    """Accuracy, failure probability and round budget.

    ``max_rounds=None`` resolves to ``max(100, ceil(10 ln(n) / epsilon))``.
    """

    epsilon: float = 0.05
    failure_prob: float = 0.01
    max_rounds: int | None = None
    seed: int = 0
    stagnation_tol: float = 1e-12

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0 < self.failure_prob < 1:
            raise InputError(f"failure_prob must lie in (0, 1), got {self.failure_prob}")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise InputError("max_rounds must be positive")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be an unsigned 64-bit integer")
        if self.stagnation_tol < 0:
            raise InputError("stagnation_tol must be non-negative")

    def rounds_for(self, n: int) -> int:
        if self.max_rounds is not None:
            return self.max_rounds
        return max(100, math.ceil(10 * math.log(n) / self.epsilon))

    @property
    def trials(self) -> int:
        return max(1, math.ceil(math.log2(1 / self.failure_prob)))


@dataclass
class PencilEigenResult:
    lambda_estimate: float
    x: np.ndarray
    rounds_used: int
    restarts_used: int
    trace: list[float]
    seed: int
    converged: bool
    max_rel_residual: float
    trial_lambdas: list[float] = field(default_factory=list)


def rayleigh(g: Graph, h: Graph, x) -> float:
    """``x^T L_G x / x^T L_H x``."""
    qh = laplacian_quadform(h, x)
    if not qh > 0:
        raise DegenerateError("x lies in the null space of L_H")
    return laplacian_quadform(g, x) / qh


def d_orthogonalize(g: Graph, x) -> np.ndarray:
    """Shift ``x`` by a constant so that ``x . d = 0`` for the degrees of ``g``."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise InputError(f"vector of shape {x.shape} does not match n={g.n}")
    if np.ptp(x) == 0:
        raise InputError("a constant vector has no d-orthogonal representative")
    d = g.degrees
    return x - (x @ d) / d.sum()


@dataclass
class _Trial:
    lam: float
    y: np.ndarray
    trace: list[float]
    converged: bool
    residual: float


def _run_trial(g, h, rng, rounds, stagnation_tol, solve_cfg) -> _Trial:
    Lh = h.laplacian
    floor = 1e-14 * float(h.degrees.max())
    for _ in range(MAX_RESAMPLES + 1):
        y = project_span1_orthogonal(rng.standard_normal(g.n))
        ny = np.linalg.norm(y)
        if ny == 0:
            continue
        y /= ny
        trace: list[float] = []
        worst = 0.0
        annihilated = False
        for _ in range(rounds):
            By = Lh @ y
            if np.linalg.norm(By) < floor * np.linalg.norm(y):
                annihilated = True
                break
            z, stats = cg_solve(g, By, solve_cfg)
            if not stats.converged:
                raise NumericalError(
                    f"inner CG did not converge (rel. residual {stats.final_rel_residual:.3e}"
                    f" after {stats.iterations} iterations)"
                )
            worst = max(worst, stats.final_rel_residual)
            y = project_span1_orthogonal(z)
            y /= np.linalg.norm(y)
            lam = rayleigh(g, h, d_orthogonalize(g, y))
            trace.append(lam)
            if len(trace) > 1 and abs(lam - trace[-2]) <= stagnation_tol * lam:
                return _Trial(lam, y, trace, True, worst)
        if annihilated:
            continue
        return _Trial(trace[-1], y, trace, False, worst)
    raise DegenerateError(f"L_H annihilated the iterate after {MAX_RESAMPLES} resamples")


def inverse_power_minimize(
    g: Graph,
    h: Graph,
    cfg: EigenConfig = EigenConfig(),
    solve_cfg: SolveConfig = SolveConfig(),
) -> PencilEigenResult:
    """Approximate ``min x^T L_G x / x^T L_H x`` over ``x . d = 0``.

    Runs ``ceil(log2(1/p))`` independent trials.  A trial stops when two
    consecutive Rayleigh quotients agree to ``stagnation_tol`` (relative)
    or after ``cfg.rounds_for(n)`` rounds.  Ties between trials go to the
    lowest trial index, so the result does not depend on scheduling.
    """
    if g.n != h.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if g.n < 2:
        raise InputError("need n >= 2")
    if h.m == 0:
        raise InputError("second graph has no edges")
    if not validate_connected(g):
        raise InputError("graph is disconnected")

    rounds = cfg.rounds_for(g.n)
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    results: list[_Trial | None] = []
    for child in children:
        try:
            results.append(
                _run_trial(
                    g, h, np.random.default_rng(child), rounds, cfg.stagnation_tol, solve_cfg
                )
            )
        except DegenerateError:
            results.append(None)
    ok = [(t.lam, i) for i, t in enumerate(results) if t is not None]
    if not ok:
        raise NumericalError("every inverse power trial failed")
    best = results[min(ok)[1]]

    x = d_orthogonalize(g, best.y)
    x /= np.linalg.norm(x)
    return PencilEigenResult(
        lambda_estimate=rayleigh(g, h, x),
        x=x,
        rounds_used=len(best.trace),
        restarts_used=len(results),
        trace=best.trace,
        seed=cfg.seed,
        converged=best.converged,
        max_rel_residual=max(t.residual for t in results if t is not None),
        trial_lambdas=[t.lam if t is not None else math.nan for t in results],
    )
