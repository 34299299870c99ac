"""Total Betti numbers of independence complexes, from first principles.

Walks through the basic objects: graphs as bitmask adjacency rows, their
independence complexes in facet form, and reduced homology over GF(2).
"""

from flagbetti import (
    GF2,
    RATIONALS,
    betti,
    b_graph,
    complete,
    copies,
    crown,
    independence_complex,
    parse_graph6,
    total_betti,
)
from flagbetti.graphs import cycle

print("== single cliques ==")
for s in range(1, 7):
    g = complete(s)
    print(f"b(Ind(K_{s})) = {b_graph(g)}  (a cloud of {s} points, so {s}-1)")

print()
print("== disjoint unions multiply ==")
for copies_count in range(1, 4):
    g = copies(copies_count, complete(5))
    print(f"b(Ind({copies_count} K_5)) = {b_graph(g)} = 4^{copies_count}")

print()
print("== cycles ==")
for n in range(3, 9):
    bv = betti(independence_complex(cycle(n)))
    print(f"Ind(C_{n}): betti vector {dict(bv.by_degree)}")

print()
print("== graph6 input and field choice ==")
g = parse_graph6("D~{")  # K_5 in graph6
print("D~{ decodes to K_5:", b_graph(g, GF2), "over GF(2),",
      b_graph(g, RATIONALS), "over the rationals")

print()
print("== crowns (complete bipartite minus a perfect matching) ==")
for s in range(2, 6):
    print(f"b(Ind(crown_{s})) = {total_betti(independence_complex(crown(s)))}")
