"""Line-oriented text formats for graphs and vectors.

Graph files::

    # comment
    p <n> <m>
    e <u> <v> <w>      (m lines, 0 <= u < v < n, w > 0)

Vector files hold one decimal per line in vertex order.  Writers use the
shortest round-trip rendering of each float, so reading a canonical file
and writing it back reproduces it byte for byte.
"""
from __future__ import annotations

import math
import os
from typing import Union

import numpy as np

from .errors import InputError
from .graph import Graph

PathLike = Union[str, "os.PathLike[str]"]


def format_number(x: float) -> str:
    x = float(x)
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "p" or len(tok) != 3:
                raise InputError(f"line {lineno}: expected 'p <n> <m>', got {line!r}")
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise InputError(f"line {lineno}: bad header {line!r}") from None
            if n < 1 or m < 0:
                raise InputError(f"line {lineno}: bad header {line!r}")
            header = (n, m)
            continue
        if tok[0] != "e" or len(tok) != 4:
            raise InputError(f"line {lineno}: expected 'e <u> <v> <w>', got {line!r}")
        try:
            u, v, w = int(tok[1]), int(tok[2]), float(tok[3])
        except ValueError:
            raise InputError(f"line {lineno}: bad edge {line!r}") from None
        if u >= v:
            if u == v:
                raise InputError(f"line {lineno}: self-loop at vertex {u}")
            raise InputError(f"line {lineno}: edge endpoints must satisfy u < v")
        edges.append((u, v, w))
    if header is None:
        raise InputError("missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v} {format_number(w)}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))


def parse_vector(text: str, n: int | None = None) -> np.ndarray:
    vals = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            x = float(line)
        except ValueError:
            raise InputError(f"line {lineno}: not a number: {line!r}") from None
        if not math.isfinite(x):
            raise InputError(f"line {lineno}: non-finite entry")
        vals.append(x)
    if n is not None and len(vals) != n:
        raise InputError(f"vector has {len(vals)} entries, graph has {n} vertices")
    return np.array(vals, dtype=np.float64)


def format_vector(x) -> str:
    return "".join(format_number(v) + "\n" for v in np.asarray(x, dtype=np.float64))


def read_vector(path: PathLike, n: int | None = None) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_vector(fh.read(), n)


def write_vector(x, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_vector(x))
