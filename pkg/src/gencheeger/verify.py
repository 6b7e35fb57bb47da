"""Executable checks for the generalized Cheeger inequality and its relatives.

Each check compares two numbers and keeps every quantity it used in
``details``, so a JSON report can be re-verified offline without rerunning
anything.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .eigen import EigenConfig, d_orthogonalize, inverse_power_minimize, rayleigh
from .errors import InputError
from .graph import (
    Graph,
    demand_graph,
    kn_identity_graph,
    laplacian_quadform,
    normalized_quadform,
    st_edge_graph,
)
from .oracles import (
    DEFAULT_LIMIT,
    OracleLimit,
    conductance_exact,
    generalized_conductance_exact,
    isoperimetric_exact,
    min_st_cut_exact,
    pencil_eigen_dense_oracle,
)
from .solver import SolveConfig
from .sweep import conductance_sweep, generalized_sweep

__all__ = [
    "CheckResult",
    "VerificationReport",
    "compare",
    "random_d_orthogonal",
    "check_generalized_cheeger",
    "check_sweep_guarantee",
    "check_mihail",
    "check_reductions",
    "check_eigensolver",
    "run_verification",
    "CHECK_NAMES",
]

RTOL = 1e-9
CHECK_NAMES = ("theorem", "mihail", "reductions", "sweep", "eigensolver")
MAX_DRAWS = 1000


@dataclass
class CheckResult:
    """One inequality or identity.  ``relation`` is ``>=``, ``<=`` or ``=``."""

    name: str
    lhs: float
    rhs: float
    relation: str
    slack: float
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "slack": self.slack,
            "pass": self.passed,
            "details": self.details,
        }


def compare(
    name: str,
    lhs: float,
    relation: str,
    rhs: float,
    details: dict[str, Any] | None = None,
    rtol: float = RTOL,
    atol: float = 0.0,
) -> CheckResult:
    """Build a :class:`CheckResult`.

    ``slack`` is positive when the relation holds with room to spare; the
    check passes when ``slack >= -(rtol * max(|lhs|, |rhs|) + atol)``.
    """
    lhs, rhs = float(lhs), float(rhs)
    if relation == ">=":
        slack = lhs - rhs
    elif relation == "<=":
        slack = rhs - lhs
    elif relation == "=":
        slack = -abs(lhs - rhs)
    else:
        raise ValueError(f"unknown relation {relation!r}")
    allowed = rtol * max(abs(lhs), abs(rhs)) + atol
    details = dict(details or {})
    details.setdefault("rtol", rtol)
    if atol:
        details.setdefault("atol", atol)
    return CheckResult(name, lhs, rhs, relation, slack, bool(slack >= -allowed), details)


@dataclass
class VerificationReport:
    graphs: list[dict[str, Any]]
    checks: list[CheckResult]
    seed: int = 0

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": "verify",
            "seed": self.seed,
            "graphs": self.graphs,
            "checks": [c.to_dict() for c in self.checks],
            "overall_pass": self.overall_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)


def random_d_orthogonal(
    g: Graph, h: Graph, rng: np.random.Generator, floor: float = 1e-12
) -> np.ndarray:
    """Unit vector with ``x . d = 0`` that ``L_H`` does not (nearly) annihilate."""
    for _ in range(MAX_DRAWS):
        x = d_orthogonalize(g, rng.standard_normal(g.n))
        x /= np.linalg.norm(x)
        if laplacian_quadform(h, x) >= floor:
            return x
    raise InputError("could not draw a vector outside the null space of L_H")


def _theorem_bound(phi_gd: float, phi_gh: float) -> float:
    return phi_gd * phi_gh / 4


def check_generalized_cheeger(
    g: Graph,
    h: Graph,
    x_samples: int = 50,
    seed: int = 0,
    limit: OracleLimit = DEFAULT_LIMIT,
) -> list[CheckResult]:
    """Eigenvalue and any-vector forms of the lower bound.

    Emits ``lambda >= phi(G,D_G) phi(G,H) / 4``,
    ``lambda >= phi(G) phi(G,H) / 8`` and, for each sampled d-orthogonal
    ``x``, ``rayleigh(x) >= phi(G,D_G) phi(G,H) / 4``.
    """
    phi_g, _ = conductance_exact(g, limit)
    phi_gd, _ = generalized_conductance_exact(g, demand_graph(g), limit)
    phi_gh, _ = generalized_conductance_exact(g, h, limit)
    lam = pencil_eigen_dense_oracle(g, h)
    bound = _theorem_bound(phi_gd, phi_gh)
    base = {"phi_G_DG": phi_gd, "phi_G_H": phi_gh}
    out = [
        compare("theorem_eigen", lam, ">=", bound, {**base, "lambda_oracle": lam}),
        compare(
            "abstract_eigen",
            lam,
            ">=",
            phi_g * phi_gh / 8,
            {"phi_G": phi_g, "phi_G_H": phi_gh, "lambda_oracle": lam},
        ),
    ]
    rng = np.random.default_rng(seed)
    for i in range(x_samples):
        x = random_d_orthogonal(g, h, rng)
        out.append(
            compare(
                f"theorem_vector[{i}]",
                rayleigh(g, h, x),
                ">=",
                bound,
                {**base, "seed": seed, "sample": i, "x": x.tolist()},
            )
        )
    return out


def check_sweep_guarantee(
    g: Graph,
    h: Graph,
    x,
    phi_gd: float | None = None,
    limit: OracleLimit = DEFAULT_LIMIT,
) -> CheckResult:
    """``sweep(x) <= 4 rayleigh(x) / phi(G,D_G)``.

    The tighter bound without the factor 4 is evaluated too and recorded
    under ``details["constant1_holds"]``; it does not affect ``passed``.
    """
    x = np.asarray(x, dtype=np.float64)
    d = g.degrees
    if abs(x @ d) > 1e-10 * np.linalg.norm(d) * np.linalg.norm(x):
        x = d_orthogonalize(g, x)
    if phi_gd is None:
        phi_gd, _ = generalized_conductance_exact(g, demand_graph(g), limit)
    r = rayleigh(g, h, x)
    sw = generalized_sweep(g, h, x)
    tight = r / phi_gd
    return compare(
        "sweep_guarantee",
        sw.best_value,
        "<=",
        4 * tight,
        {
            "rayleigh": r,
            "phi_G_DG": phi_gd,
            "sweep_cut": [int(v) for v in sw.cut.vertices],
            "constant1_bound": tight,
            "constant1_holds": bool(sw.best_value <= tight * (1 + RTOL)),
        },
    )


def check_mihail(g: Graph, y_samples: int = 100, seed: int = 0) -> list[CheckResult]:
    """``y^T Ltilde y >= phi_sweep(y)^2 / 2`` for random unit ``y`` orthogonal to ``D^{1/2} 1``."""
    rng = np.random.default_rng(seed)
    s = np.sqrt(g.degrees)
    s /= np.linalg.norm(s)
    out = []
    for i in range(y_samples):
        for _ in range(MAX_DRAWS):
            y = rng.standard_normal(g.n)
            y -= (y @ s) * s
            ny = np.linalg.norm(y)
            if ny > 1e-12:
                break
        else:
            raise InputError("projection kept annihilating the sample")
        y /= ny
        sw = conductance_sweep(g, y, "degree_scaled")
        out.append(
            compare(
                f"mihail[{i}]",
                normalized_quadform(g, y),
                ">=",
                sw.best_value**2 / 2,
                {
                    "sweep_conductance": sw.best_value,
                    "sweep_cut": [int(v) for v in sw.cut.vertices],
                    "seed": seed,
                    "sample": i,
                    "y": y.tolist(),
                },
                rtol=0.0,
                atol=1e-9,
            )
        )
    return out


def check_reductions(g: Graph, limit: OracleLimit = DEFAULT_LIMIT) -> list[CheckResult]:
    """Demand-graph and ``K_n`` sandwiches, plus ``mu_st = phi(G, G_st)`` for all pairs."""
    n = g.n
    phi_g, _ = conductance_exact(g, limit)
    phi_gd, _ = generalized_conductance_exact(g, demand_graph(g), limit)
    iso, _ = isoperimetric_exact(g, limit)
    phi_kn, _ = generalized_conductance_exact(g, kn_identity_graph(n), limit)
    dq = {"phi_G": phi_g, "phi_G_DG": phi_gd}
    kq = {"h_G": iso, "phi_G_Kn": phi_kn}
    out = [
        compare("demand_lower", phi_g, "<=", phi_gd, dq),
        compare("demand_upper", phi_gd, "<=", 2 * phi_g, dq),
        compare("iso_lower", iso, "<=", phi_kn, kq),
        compare("iso_upper", phi_kn, "<=", 2 * iso, kq),
    ]
    for s in range(n):
        for t in range(s + 1, n):
            mu, _ = min_st_cut_exact(g, s, t, limit)
            via, _ = generalized_conductance_exact(g, st_edge_graph(n, s, t), limit)
            out.append(
                compare(
                    f"st_identity[{s},{t}]",
                    mu,
                    "=",
                    via,
                    {"s": s, "t": t, "mu_st": mu, "phi_G_Gst": via},
                    rtol=1e-12,
                )
            )
    return out


def check_eigensolver(
    g: Graph,
    h: Graph,
    cfg: EigenConfig = EigenConfig(),
    solve_cfg: SolveConfig = SolveConfig(),
    result=None,
) -> list[CheckResult]:
    """Iterative estimate within ``[lambda(1 - 1e-9), (1 + eps) lambda]`` of the dense oracle.

    Returns the upper and the lower half of the bracket as two checks.
    ``result`` may carry an already computed :class:`PencilEigenResult`.
    """
    lam = pencil_eigen_dense_oracle(g, h)
    res = result if result is not None else inverse_power_minimize(g, h, cfg, solve_cfg)
    details = {
        "lambda_iterative": res.lambda_estimate,
        "lambda_oracle": lam,
        "epsilon": cfg.epsilon,
        "seed": res.seed,
        "rounds": res.rounds_used,
        "restarts": res.restarts_used,
        "converged": res.converged,
        "max_rel_residual": res.max_rel_residual,
    }
    return [
        compare(
            "eigensolver_upper", res.lambda_estimate, "<=", (1 + cfg.epsilon) * lam, details
        ),
        compare("eigensolver_lower", res.lambda_estimate, ">=", lam, details),
    ]


def run_verification(
    g: Graph,
    h: Graph | None = None,
    checks: Iterable[str] | None = None,
    samples: int = 50,
    seed: int = 0,
    eig_cfg: EigenConfig | None = None,
    solve_cfg: SolveConfig = SolveConfig(),
    graphs: Sequence[dict[str, Any]] | None = None,
    limit: OracleLimit = DEFAULT_LIMIT,
) -> VerificationReport:
    """Run the named checks and assemble a report.

    Without ``checks``, every check applicable to the given graphs runs:
    ``mihail`` and ``reductions`` need only ``g``; ``theorem``, ``sweep``
    and ``eigensolver`` need ``h`` as well.
    """
    if checks is None:
        checks = CHECK_NAMES if h is not None else ("mihail", "reductions")
    checks = list(dict.fromkeys(checks))
    bad = [c for c in checks if c not in CHECK_NAMES]
    if bad:
        raise InputError(f"unknown checks {bad}; expected a subset of {CHECK_NAMES}")
    if h is None and any(c in ("theorem", "sweep", "eigensolver") for c in checks):
        raise InputError("theorem, sweep and eigensolver checks need a second graph")
    if h is not None and h.n != g.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    eig_cfg = eig_cfg or EigenConfig(seed=seed)

    results: list[CheckResult] = []
    eig = None
    if "sweep" in checks or "eigensolver" in checks:
        eig = inverse_power_minimize(g, h, eig_cfg, solve_cfg)
    for name in sorted(checks):
        if name == "theorem":
            results += check_generalized_cheeger(g, h, samples, seed, limit)
        elif name == "mihail":
            results += check_mihail(g, samples, seed)
        elif name == "reductions":
            results += check_reductions(g, limit)
        elif name == "sweep":
            c = check_sweep_guarantee(g, h, eig.x, limit=limit)
            c.details["lambda_estimate"] = eig.lambda_estimate
            results.append(c)
        elif name == "eigensolver":
            results += check_eigensolver(g, h, eig_cfg, solve_cfg, result=eig)
    if graphs is None:
        graphs = [{"file": None, "n": g.n, "m": g.m}]
        if h is not None:
            graphs.append({"file": None, "n": h.n, "m": h.m})
    return VerificationReport(list(graphs), results, seed)
