"""
Graphs, cuts and Laplacian quadratic forms
==========================================

Build a few small graphs, look at cut capacities and volumes, and see
that the capacity of a cut is the Laplacian form of its indicator.
"""
import numpy as np

from gencheeger import (
    CutSet,
    cut_capacity,
    demand_graph,
    generate,
    laplacian_quadform,
    volume,
)

g = generate("grid", 3, 3)
print("grid 3x3:", g.n, "vertices,", g.m, "edges")
print("degrees:", g.degrees)

# the left column of the grid
s = CutSet.from_vertices(g.n, [0, 3, 6])
print("cap(S) =", cut_capacity(g, s))
print("vol(S) =", volume(g, s), " vol(S-bar) =", volume(g, s.complement()))
print("indicator quadform =", laplacian_quadform(g, s.indicator))

# a random weighted graph; gnp redraws until connected
w = generate("gnp", 8, 0.4, seed=3)
print("\ngnp(8, 0.4):", w.m, "edges, total volume", w.total_volume)

# the demand graph puts weight d_u d_v / vol(V) on every pair, so its cut
# capacity is vol(S) vol(S-bar) / vol(V)
dg = demand_graph(w)
s = CutSet.from_mask(w.n, 0b00010111)
print("cap_DG(S)               =", cut_capacity(dg, s))
print("vol(S) vol(S-bar)/vol(V) =", volume(w, s) * volume(w, s.complement()) / w.total_volume)

x = np.random.default_rng(0).standard_normal(w.n)
x -= (x @ w.degrees) / w.total_volume
print("x^T D x =", float(np.sum(w.degrees * x * x)), " x^T L_DG x =", laplacian_quadform(dg, x))
