"""
Rounding a vector to a cut
==========================

Sweep the eigenvector of the pencil to get a cut, and compare its ratio
with the exact generalized conductance.
"""
from gencheeger import (
    EigenConfig,
    conductance_exact,
    conductance_sweep,
    demand_graph,
    generalized_conductance_exact,
    generalized_sweep,
    generate,
    inverse_power_minimize,
)

g = generate("gnp", 14, 0.35, seed=11)
h = generate("gnp", 14, 0.5, seed=12)

eig = inverse_power_minimize(g, h, EigenConfig(seed=0))
sw = generalized_sweep(g, h, eig.x)
best, cut = generalized_conductance_exact(g, h)
phi_gd, _ = generalized_conductance_exact(g, demand_graph(g))

print("sweep cut:", sw.cut.vertices, " ratio", sw.best_value)
print("exact cut:", cut.vertices, " ratio", best)
print("guarantee 4 lambda / phi(G, D_G) =", 4 * eig.lambda_estimate / phi_gd)
print("ratios of every prefix:", sw.ratios.round(3))

# against D_G the pencil eigenvector x gives y = D^{1/2} x, an eigenvector
# of the normalized Laplacian; the conductance sweep orders by y / sqrt(d)
x = inverse_power_minimize(g, demand_graph(g), EigenConfig(seed=0)).x
y = x * g.degrees**0.5
cs = conductance_sweep(g, y)
print("\nconductance sweep:", cs.best_value, " exact phi(G):", conductance_exact(g)[0])
