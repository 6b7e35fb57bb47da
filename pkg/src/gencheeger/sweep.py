"""Sweep cuts: the best prefix of the vertices sorted by a vector.

Vertices are sorted ascending by value, ties by vertex index, and the
``n - 1`` proper prefixes are scored.  Prefix capacities are accumulated
from a difference array in exact rational arithmetic, so each one equals
the correctly rounded capacity of its cut: an edge crosses exactly the
prefixes between the sorted positions of its two endpoints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError
from .graph import CutSet, Graph

__all__ = ["SweepResult", "sweep_order", "prefix_capacities", "generalized_sweep", "conductance_sweep"]

ORDERING_MODES = ("raw", "degree_scaled")


@dataclass
class SweepResult:
    """Outcome of a sweep.

    ``prefix_caps_g[k-1]`` is ``cap_G`` of the first ``k`` vertices of
    ``ordering``.  A generalized sweep fills ``prefix_caps_h``; a
    conductance sweep fills ``prefix_min_volumes``.  ``best_index`` is the
    size of the winning prefix.
    """

    ordering: np.ndarray
    prefix_caps_g: np.ndarray
    best_index: int
    best_value: float
    prefix_caps_h: np.ndarray | None = None
    prefix_min_volumes: np.ndarray | None = None

    @property
    def ratios(self) -> np.ndarray:
        den = self.prefix_caps_h if self.prefix_caps_h is not None else self.prefix_min_volumes
        out = np.full(self.prefix_caps_g.shape, np.inf)
        np.divide(self.prefix_caps_g, den, out=out, where=den > 0)
        return out

    @property
    def cut(self) -> CutSet:
        return CutSet.from_vertices(len(self.ordering), self.ordering[: self.best_index])


def sweep_order(values) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    return np.lexsort((np.arange(values.size), values))


def _exact_prefix_sums(increments: list[Fraction]) -> np.ndarray:
    total = Fraction(0)
    out = np.empty(len(increments))
    for i, inc in enumerate(increments):
        total += inc
        out[i] = float(total)
    return out


def prefix_capacities(g: Graph, ordering) -> np.ndarray:
    """``cap_G`` of every proper prefix of ``ordering`` in O(n + m) updates."""
    n = g.n
    pos = np.empty(n, dtype=np.int64)
    pos[np.asarray(ordering)] = np.arange(n)
    diff = [Fraction(0)] * n
    for a, b, w in zip(pos[g.u], pos[g.v], g.w):
        lo, hi = (a, b) if a < b else (b, a)
        fw = Fraction(float(w))
        # crosses prefixes of size lo+1 .. hi
        diff[lo] += fw
        diff[hi] -= fw
    return _exact_prefix_sums(diff[: n - 1])


def _check(g: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise InputError(f"vector of shape {x.shape} does not match n={g.n}")
    if not np.all(np.isfinite(x)):
        raise InputError("vector has non-finite entries")
    if g.n < 2:
        raise InputError("a sweep needs at least two vertices")
    return x


def generalized_sweep(g: Graph, h: Graph, x) -> SweepResult:
    """Best prefix under ``cap_G / cap_H``; prefixes ``h`` does not cross are skipped."""
    if g.n != h.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if h.m == 0:
        raise InputError("second graph has no edges")
    x = _check(g, x)
    order = sweep_order(x)
    cg = prefix_capacities(g, order)
    ch = prefix_capacities(h, order)
    res = SweepResult(order, cg, 0, np.inf, prefix_caps_h=ch)
    ratios = res.ratios
    k = int(np.argmin(ratios))
    if not np.isfinite(ratios[k]):
        raise InputError("no prefix of this ordering is crossed by the second graph")
    res.best_index, res.best_value = k + 1, float(ratios[k])
    return res


def conductance_sweep(g: Graph, y, ordering_mode: str = "degree_scaled") -> SweepResult:
    """Best prefix under ``cap / min(vol S, vol S-bar)``.

    ``raw`` sorts by ``y``; ``degree_scaled`` sorts by ``y / sqrt(d)``.
    """
    if ordering_mode not in ORDERING_MODES:
        raise InputError(f"ordering_mode must be one of {ORDERING_MODES}")
    y = _check(g, y)
    if np.ptp(y) == 0:
        raise InputError("sweep vector is constant")
    d = g.degrees
    if np.any(d <= 0):
        raise InputError("conductance needs every degree positive")
    key = y if ordering_mode == "raw" else y / np.sqrt(d)
    order = sweep_order(key)
    caps = prefix_capacities(g, order)
    fd = [Fraction(float(v)) for v in d[order]]
    total = sum(fd, Fraction(0))
    vol_in = Fraction(0)
    minvol = np.empty(g.n - 1)
    for k in range(g.n - 1):
        vol_in += fd[k]
        minvol[k] = float(min(vol_in, total - vol_in))
    res = SweepResult(order, caps, 0, np.inf, prefix_min_volumes=minvol)
    ratios = res.ratios
    k = int(np.argmin(ratios))
    res.best_index, res.best_value = k + 1, float(ratios[k])
    return res
