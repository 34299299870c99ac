"""Induced-subgraph Betti sums, Alexander duality, and suspensions.

Shows the Hochster-style sum over all induced subgraphs with its closed
forms, plus the complex-level transforms: Alexander dual, the
vertex/facet non-incidence graph, and the resulting suspension identity.
"""

from flagbetti import (
    alexander_dual,
    b_graph,
    beta_complete_closed,
    beta_crown_closed,
    betti,
    bip_graph,
    complete,
    crown,
    hochster_beta,
    total_betti,
)
from flagbetti.complexes import minimal_nonfaces, suspension, write_facet_file
from flagbetti.constructions import fano_complex

print("== Hochster sums with closed forms ==")
for s in range(1, 8):
    rep = hochster_beta(complete(s))
    print(f"K_{s}: beta = {rep.beta_total} (closed form {beta_complete_closed(s)})")
for s in range(2, 5):
    rep = hochster_beta(crown(s))
    print(f"crown_{s}: beta = {rep.beta_total} (closed form {beta_crown_closed(s)})")

print()
print("== the Steiner triangle complex and its transforms ==")
k = fano_complex().complex_
print("facet file:")
print(write_facet_file(k), end="")
print("betti:", dict(betti(k).by_degree))
print("minimal non-faces:", len(minimal_nonfaces(k)))

dual = alexander_dual(k)
print("Alexander dual betti:", dict(betti(dual).by_degree),
      " (degree i maps to n-i-3 =", k.n - 3, "- i)")

g = bip_graph(k)
print(f"non-incidence graph: {g.n} vertices, {g.edge_count()} edges")
print("b(Ind(Bip(K))) =", b_graph(g), "== b(suspension) =",
      total_betti(suspension(k)), "== b(K) =", total_betti(k))
