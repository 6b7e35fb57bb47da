"""
Running the checks
==================

The verification layer evaluates every inequality with explicit slack and
collects the results in a JSON-serializable report.
"""
from gencheeger import demand_graph, generate, run_verification

g = generate("gnp", 9, 0.45, seed=21)
h = generate("gnp", 9, 0.5, seed=22)

report = run_verification(g, h, samples=10, seed=5)
for c in report.checks:
    if "[" in c.name and not c.name.endswith("[0]"):
        continue
    print(f"{'PASS' if c.passed else 'FAIL'} {c.name:<22} {c.lhs:.6g} {c.relation} {c.rhs:.6g}")
print("checks:", len(report.checks), " overall:", report.overall_pass)

# the demand graph as H is the spectral-gap special case
report = run_verification(g, demand_graph(g), checks=["theorem", "sweep"], samples=5)
print("against D_G:", report.overall_pass)
print(report.to_json()[:300], "...")
