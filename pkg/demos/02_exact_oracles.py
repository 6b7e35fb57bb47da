"""
Exact cut oracles by enumeration
================================

For small graphs every cut can be scored, which gives ground truth for
conductance, generalized conductance, isoperimetric number and minimum
s-t cuts.
"""
from gencheeger import (
    OracleLimit,
    conductance_exact,
    demand_graph,
    generalized_conductance_exact,
    generate,
    isoperimetric_exact,
    kn_identity_graph,
    min_st_cut_exact,
    pencil_eigen_dense_oracle,
    st_edge_graph,
)

g = generate("cycle", 6)
phi, cut = conductance_exact(g)
print(f"phi(C6) = {phi}  achieved by {cut.vertices}")

phi_d, _ = generalized_conductance_exact(g, demand_graph(g))
print(f"phi(C6, D_G) = {phi_d}   (between phi and 2 phi)")

h_iso, _ = isoperimetric_exact(g)
phi_k, _ = generalized_conductance_exact(g, kn_identity_graph(g.n))
print(f"phi(C6, K_n)/2 = {phi_k / 2:.4f} <= h(C6) = {h_iso:.4f} <= phi(C6, K_n) = {phi_k:.4f}")

# a min s-t cut is the generalized conductance against a single edge
mu, cut = min_st_cut_exact(g, 0, 3)
via_h, _ = generalized_conductance_exact(g, st_edge_graph(g.n, 0, 3))
print(f"mu_03 = {mu}, phi(G, G_03) = {via_h}, cut {cut.vertices}")

# the smallest nonzero eigenvalue of the pencil, computed densely
for name, h in [("demand", demand_graph(g)), ("K_n", kn_identity_graph(g.n))]:
    print(f"lambda(C6, {name}) = {pencil_eigen_dense_oracle(g, h):.6f}")

# enumeration is exponential, so it is guarded
big = generate("path", 24)
try:
    conductance_exact(big)
except Exception as exc:
    print("guarded:", exc)
print("with a larger limit:", conductance_exact(big, OracleLimit(24))[0])
