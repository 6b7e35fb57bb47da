"""Weighted undirected graphs, Laplacian quadratic forms and cut capacities.

Edges are stored once, canonically as ``(u, v, w)`` with ``u < v`` and
sorted by ``(u, v)``.  A :class:`Graph` is immutable after construction;
its arrays are flagged read-only so they can be shared freely.

Sums over edge sets use :func:`math.fsum`, so a cut capacity computed from
its edge list and the Laplacian form of the cut indicator agree bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import GenerationError, InputError

__all__ = [
    "Graph",
    "CutSet",
    "validate_connected",
    "laplacian_quadform",
    "normalized_quadform",
    "cut_capacity",
    "volume",
    "demand_graph",
    "kn_identity_graph",
    "st_edge_graph",
    "generate",
    "FAMILIES",
]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Weighted undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    edges : iterable of (u, v, w)
        Endpoints may be given in either order; self-loops, duplicate
        pairs, out-of-range endpoints and non-positive or non-finite
        weights are rejected.
    """

    __slots__ = ("n", "u", "v", "w", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]]):
        if int(n) != n or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        seen: dict[tuple[int, int], float] = {}
        for e in edges:
            try:
                a, b, w = e
            except (TypeError, ValueError):
                raise InputError(f"edge must be a (u, v, w) triple, got {e!r}") from None
            if int(a) != a or int(b) != b:
                raise InputError(f"non-integer endpoint in edge {e!r}")
            a, b, w = int(a), int(b), float(w)
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise InputError(f"self-loop at vertex {a}")
            if not (math.isfinite(w) and w > 0):
                raise InputError(f"edge ({a}, {b}) has non-positive weight {w!r}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen[key] = w
        keys = sorted(seen)
        self.n = n
        self.u = _readonly(np.array([k[0] for k in keys], dtype=np.int64))
        self.v = _readonly(np.array([k[1] for k in keys], dtype=np.int64))
        self.w = _readonly(np.array([seen[k] for k in keys], dtype=np.float64))

    @property
    def m(self) -> int:
        return len(self.w)

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        return [(int(a), int(b), float(c)) for a, b, c in zip(self.u, self.v, self.w)]

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.bincount(self.u, self.w, self.n) + np.bincount(self.v, self.w, self.n)
        return _readonly(d)

    @cached_property
    def total_volume(self) -> float:
        return 2.0 * math.fsum(self.w)

    @cached_property
    def laplacian(self) -> sp.csr_matrix:
        """Sparse Laplacian ``D - A`` in CSR form."""
        n = self.n
        rows = np.concatenate([self.u, self.v, np.arange(n)])
        cols = np.concatenate([self.v, self.u, np.arange(n)])
        vals = np.concatenate([-self.w, -self.w, self.degrees])
        return sp.csr_matrix((vals, (rows, cols)), shape=(n, n))

    def dense_laplacian(self) -> np.ndarray:
        L = np.zeros((self.n, self.n))
        L[self.u, self.v] = -self.w
        L[self.v, self.u] = -self.w
        L[np.arange(self.n), np.arange(self.n)] = self.degrees
        return L

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.w, other.w)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class CutSet:
    """Nonempty proper vertex subset ``S``, stored as a boolean indicator."""

    membership: np.ndarray

    def __post_init__(self):
        mem = np.array(self.membership, dtype=bool).ravel()
        if mem.size < 2 or mem.all() or not mem.any():
            raise InputError("a cut must have at least one vertex on each side")
        object.__setattr__(self, "membership", _readonly(mem))

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "CutSet":
        mem = np.zeros(n, dtype=bool)
        for x in vertices:
            if not 0 <= x < n:
                raise InputError(f"vertex {x} out of range for n={n}")
            mem[x] = True
        return cls(mem)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "CutSet":
        """Bit ``i`` of ``mask`` set means vertex ``i`` is in ``S``."""
        return cls(((mask >> np.arange(n)) & 1).astype(bool))

    @property
    def n(self) -> int:
        return self.membership.size

    @property
    def vertices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.membership)]

    @property
    def indicator(self) -> np.ndarray:
        return self.membership.astype(np.float64)

    def complement(self) -> "CutSet":
        return CutSet(~self.membership)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CutSet):
            return NotImplemented
        return np.array_equal(self.membership, other.membership)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"CutSet({self.vertices})"


def _as_vector(g: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise InputError(f"vector of shape {x.shape} does not match n={g.n}")
    return x


def _check_cut(g: Graph, s: CutSet) -> None:
    if s.n != g.n:
        raise InputError(f"cut on {s.n} vertices used with graph on {g.n}")


def validate_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n == 1:
        return True
    ncomp, _ = connected_components(g.laplacian, directed=False)
    return ncomp == 1


def laplacian_quadform(g: Graph, x) -> float:
    """``x^T L_G x = sum_{(u,v)} w(u,v) (x_u - x_v)^2``."""
    x = _as_vector(g, x)
    diff = x[g.u] - x[g.v]
    return math.fsum(g.w * diff * diff)


def normalized_quadform(g: Graph, y) -> float:
    """``y^T D^{-1/2} L D^{-1/2} y``."""
    y = _as_vector(g, y)
    d = g.degrees
    if np.any(d <= 0):
        raise InputError("normalized Laplacian needs every degree positive")
    return laplacian_quadform(g, y / np.sqrt(d))


def cut_capacity(g: Graph, s: CutSet) -> float:
    """Total weight of edges with exactly one endpoint in ``s``."""
    _check_cut(g, s)
    mem = s.membership
    return math.fsum(g.w[mem[g.u] != mem[g.v]])


def volume(g: Graph, s: CutSet) -> float:
    """Sum of the degrees of the vertices in ``s``."""
    _check_cut(g, s)
    return math.fsum(g.degrees[s.membership])


def demand_graph(g: Graph) -> Graph:
    """Complete graph with weights ``d(u) d(v) / vol(V)``.

    Every cut then has capacity ``vol(S) vol(S-bar) / vol(V)``.
    """
    if g.n < 2:
        raise InputError("demand graph needs at least two vertices")
    if not validate_connected(g):
        raise InputError("demand graph needs a connected graph")
    d, vol = g.degrees, g.total_volume
    iu, iv = np.triu_indices(g.n, k=1)
    return Graph(g.n, zip(iu, iv, d[iu] * d[iv] / vol))


def kn_identity_graph(n: int) -> Graph:
    """Complete graph on ``n`` vertices with every weight ``1/n``.

    Its Laplacian acts as the identity on vectors orthogonal to the
    all-ones vector.
    """
    if n < 2:
        raise InputError("K_n needs n >= 2")
    iu, iv = np.triu_indices(n, k=1)
    return Graph(n, ((a, b, 1.0 / n) for a, b in zip(iu, iv)))


def st_edge_graph(n: int, s: int, t: int) -> Graph:
    """Graph on ``n`` vertices whose only edge is ``(s, t)`` with weight 1."""
    if s == t:
        raise InputError("s and t must differ")
    if not (0 <= s < n and 0 <= t < n):
        raise InputError(f"s={s}, t={t} out of range for n={n}")
    return Graph(n, [(s, t, 1.0)])


FAMILIES = ("path", "cycle", "complete", "grid", "gnp")
GNP_MAX_RETRIES = 100


def _weights(rng: np.random.Generator, m: int, weighted: bool) -> np.ndarray:
    if weighted:
        return rng.uniform(0.5, 2.0, size=m)
    return np.ones(m)


def generate(
    family: str,
    *params,
    seed: int = 0,
    weighted: bool | None = None,
) -> Graph:
    """Build a connected benchmark graph.

    Families and their parameters::

        path n | cycle n | complete n | grid rows cols | gnp n p

    ``weighted`` defaults to True for ``gnp`` and False otherwise; weighted
    graphs draw each weight uniformly from ``[0.5, 2.0)``.  The result is a
    deterministic function of the arguments.
    """
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if weighted is None:
        weighted = family == "gnp"
    rng = np.random.default_rng(seed)

    def _int(p, name, lo):
        if isinstance(p, bool) or int(p) != p or p < lo:
            raise InputError(f"{family}: {name} must be an integer >= {lo}, got {p!r}")
        return int(p)

    expected = {"grid": 2, "gnp": 2}.get(family, 1)
    if len(params) != expected:
        raise InputError(f"{family} takes {expected} parameter(s), got {len(params)}")

    if family == "path":
        n = _int(params[0], "n", 2)
        pairs = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        n = _int(params[0], "n", 3)
        pairs = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif family == "complete":
        n = _int(params[0], "n", 2)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif family == "grid":
        rows, cols = _int(params[0], "rows", 1), _int(params[1], "cols", 1)
        n = rows * cols
        if n < 2:
            raise InputError("grid needs at least two vertices")
        pairs = []
        for r in range(rows):
            for c in range(cols):
                k = r * cols + c
                if c + 1 < cols:
                    pairs.append((k, k + 1))
                if r + 1 < rows:
                    pairs.append((k, k + cols))
    else:
        n = _int(params[0], "n", 2)
        p = float(params[1])
        if not 0 < p <= 1:
            raise InputError(f"gnp edge probability must lie in (0, 1], got {p}")
        iu, iv = np.triu_indices(n, k=1)
        for _ in range(GNP_MAX_RETRIES):
            keep = rng.random(iu.size) < p
            g = Graph(n, zip(iu[keep], iv[keep], _weights(rng, int(keep.sum()), weighted)))
            if validate_connected(g):
                return g
        raise GenerationError(
            f"gnp({n}, {p}) stayed disconnected after {GNP_MAX_RETRIES} draws"
        )
    w = _weights(rng, len(pairs), weighted)
    return Graph(n, ((a, b, c) for (a, b), c in zip(pairs, w)))
