"""Exhaustive and dense ground-truth computations.

Every cut-based quantity is found by enumerating all cuts.  Cuts are
identified with bitmasks (bit ``i`` set means vertex ``i`` is in ``S``);
each unordered cut is visited once, scanned in ascending mask order, and
ties resolve to the lowest mask.

The pencil eigenvalue oracle is a dense reduction that shares no code with
the iterative solver in :mod:`gencheeger.eigen`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
from scipy import linalg

from .errors import DegenerateError, InputError, OracleLimitError
from .graph import CutSet, Graph, validate_connected

__all__ = [
    "OracleLimit",
    "DEFAULT_LIMIT",
    "conductance_exact",
    "generalized_conductance_exact",
    "isoperimetric_exact",
    "min_st_cut_exact",
    "pencil_eigen_dense_oracle",
    "constant_complement_basis",
    "DENSE_MAX_N",
]

CHUNK = 1 << 16
DENSE_MAX_N = 64


@dataclass(frozen=True)
class OracleLimit:
    """Largest vertex count accepted by the exhaustive oracles."""

    max_n: int = 20

    def __post_init__(self):
        if not 2 <= self.max_n <= 30:
            raise InputError(f"max_n must lie in [2, 30], got {self.max_n}")


DEFAULT_LIMIT = OracleLimit()


def _guard(g: Graph, limit: OracleLimit) -> None:
    if g.n > limit.max_n:
        raise OracleLimitError(
            f"n={g.n} exceeds the enumeration guard max_n={limit.max_n}"
        )
    if g.n < 2:
        raise InputError("cuts need at least two vertices")
    if not validate_connected(g):
        raise InputError("graph is disconnected")


def _cut_chunks(
    n: int, inside: tuple[int, ...], outside: tuple[int, ...] = ()
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(masks, bits)`` for proper cuts with fixed vertices pinned.

    Masks come out in ascending order; ``bits`` is the boolean membership
    matrix with one row per mask.
    """
    free = np.array(
        [i for i in range(n) if i not in inside and i not in outside], dtype=np.int64
    )
    weights = np.int64(1) << free
    base = sum(1 << i for i in inside)
    total = 1 << free.size
    for start in range(0, total, CHUNK):
        ks = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        free_bits = ((ks[:, None] >> np.arange(free.size)) & 1).astype(bool)
        bits = np.zeros((ks.size, n), dtype=bool)
        bits[:, free] = free_bits
        bits[:, list(inside)] = True
        proper = ~bits.all(axis=1) & bits.any(axis=1)
        masks = base + free_bits.astype(np.int64) @ weights
        yield masks[proper], bits[proper]


def _caps(g: Graph, bits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    crossing = bits[:, g.u] != bits[:, g.v]
    return crossing.astype(np.float64) @ g.w, crossing.any(axis=1)


def _argmin_scan(
    n: int,
    chunks: Iterator[tuple[np.ndarray, np.ndarray]],
    objective: Callable[[np.ndarray], np.ndarray],
) -> tuple[float, CutSet]:
    best_val, best_mask = np.inf, None
    for masks, bits in chunks:
        if masks.size == 0:
            continue
        vals = objective(bits)
        i = int(np.argmin(vals))
        if vals[i] < best_val:
            best_val, best_mask = float(vals[i]), int(masks[i])
    if best_mask is None:
        raise InputError("no admissible cut")
    return best_val, CutSet.from_mask(n, best_mask)


def conductance_exact(
    g: Graph, limit: OracleLimit = DEFAULT_LIMIT
) -> tuple[float, CutSet]:
    """``min_S cap(S, S-bar) / min(vol S, vol S-bar)`` by enumeration."""
    _guard(g, limit)
    d = g.degrees

    def objective(bits):
        cap, _ = _caps(g, bits)
        vol_in = bits.astype(np.float64) @ d
        vol_out = (~bits).astype(np.float64) @ d
        return cap / np.minimum(vol_in, vol_out)

    return _argmin_scan(g.n, _cut_chunks(g.n, (0,)), objective)


def generalized_conductance_exact(
    g: Graph, h: Graph, limit: OracleLimit = DEFAULT_LIMIT
) -> tuple[float, CutSet]:
    """``min_S cap_G(S) / cap_H(S)`` over cuts that ``h`` actually crosses."""
    if g.n != h.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if h.m == 0:
        raise InputError("second graph has no edges")
    _guard(g, limit)

    def objective(bits):
        cap_g, _ = _caps(g, bits)
        cap_h, crossed = _caps(h, bits)
        out = np.full(cap_g.shape, np.inf)
        np.divide(cap_g, cap_h, out=out, where=crossed)
        return out

    return _argmin_scan(g.n, _cut_chunks(g.n, (0,)), objective)


def isoperimetric_exact(
    g: Graph, limit: OracleLimit = DEFAULT_LIMIT
) -> tuple[float, CutSet]:
    """``min_S cap(S, S-bar) / min(|S|, |S-bar|)``."""
    _guard(g, limit)

    def objective(bits):
        cap, _ = _caps(g, bits)
        size = bits.sum(axis=1)
        return cap / np.minimum(size, g.n - size)

    return _argmin_scan(g.n, _cut_chunks(g.n, (0,)), objective)


def min_st_cut_exact(
    g: Graph, s: int, t: int, limit: OracleLimit = DEFAULT_LIMIT
) -> tuple[float, CutSet]:
    """Minimum capacity over cuts with ``s`` inside and ``t`` outside."""
    if s == t:
        raise InputError("s and t must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise InputError(f"s={s}, t={t} out of range for n={g.n}")
    _guard(g, limit)
    return _argmin_scan(
        g.n, _cut_chunks(g.n, (s,), (t,)), lambda bits: _caps(g, bits)[0]
    )


def constant_complement_basis(n: int) -> np.ndarray:
    """Orthonormal ``n x (n-1)`` basis of the vectors summing to zero.

    Built from the Householder reflector that maps ``e_0`` onto
    ``1/sqrt(n)``; its remaining columns span the complement.
    """
    if n < 2:
        raise InputError("need n >= 2")
    v = np.full(n, 1.0 / np.sqrt(n))
    v[0] -= 1.0
    P = np.eye(n) - 2.0 * np.outer(v, v) / (v @ v)
    return P[:, 1:]


def pencil_eigen_dense_oracle(g: Graph, h: Graph) -> float:
    """Smallest nontrivial eigenvalue of ``L_G x = lambda L_H x``.

    Both Laplacians are restricted to the zero-sum subspace, where ``L_G``
    is positive definite for connected ``g``.  With ``A = R^T R`` the
    reduced problem becomes the symmetric ``R^{-T} B R^{-1}``, whose
    largest eigenvalue ``mu`` gives ``lambda = 1 / mu``.
    """
    if g.n != h.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if g.n > DENSE_MAX_N:
        raise OracleLimitError(f"dense oracle limited to n <= {DENSE_MAX_N}, got {g.n}")
    if g.n < 2:
        raise InputError("need n >= 2")
    if h.m == 0:
        raise InputError("second graph has no edges")
    if not validate_connected(g):
        raise InputError("graph is disconnected")
    Q = constant_complement_basis(g.n)
    A = Q.T @ g.dense_laplacian() @ Q
    B = Q.T @ h.dense_laplacian() @ Q
    R = linalg.cholesky((A + A.T) / 2)
    X = linalg.solve_triangular(R, B, trans="T")
    C = linalg.solve_triangular(R, X.T, trans="T")
    mu = linalg.eigvalsh((C + C.T) / 2)[-1]
    if not mu > 1e-14 * max(1.0, float(np.abs(C).max())):
        raise DegenerateError(f"pencil is degenerate on the zero-sum subspace (mu={mu})")
    return float(1.0 / mu)
