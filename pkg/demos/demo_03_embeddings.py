#!/usr/bin/env python3
"""Walkthrough: searching for complete multipartite and K_r^+ subgraphs.

The searches are exact backtracking with deterministic orderings and a
node-expansion budget.  The three outcomes are distinct: FOUND (with an
independently re-validated embedding), ABSENT (the search completed), and
BUDGET (the limit was hit; nothing is claimed).
"""

from specturan import (
    complete_graph,
    find_complete_multipartite,
    find_kr_plus,
    is_r_partite,
    make_turan,
    make_turan_plus_edge,
)

print("== Complete multipartite targets ==")
res = find_complete_multipartite(make_turan(9, 3), (3, 3, 3))
print(f"K_3(3,3,3) in T_3(9): {res.status.value}, parts {res.embedding.parts}")

res = find_complete_multipartite(complete_graph(5), (2, 2))
print(f"K_2(2,2) in K_5: {res.status.value}, parts {res.embedding.parts}")

res = find_complete_multipartite(make_turan(8, 2), (2, 2, 2))
print(f"K_3(2,2,2) in T_2(8): {res.status.value} (needs a triangle)")

print()
print("== K_r^+ targets (the extra edge rides inside part 1) ==")
res = find_kr_plus(make_turan_plus_edge(15, 3), (2, 2, 2))
emb = res.embedding
print(f"K_3^+(2,2,2) in T_3(15)+e: {res.status.value}, extra edge {emb.extra_edge}, "
      f"parts {emb.parts}")

res = find_kr_plus(make_turan(60, 4), (2, 2, 2, 2))
print(f"K_4^+(2,2,2,2) in T_4(60): {res.status.value} after "
      f"{res.nodes_expanded} node expansions (exhaustive, not budget)")

print()
print("== Budget exhaustion is a third outcome, never conflated ==")
res = find_complete_multipartite(make_turan(40, 4), (3, 3, 3, 3), budget=5)
print(f"budget=5 search: {res.status.value} ({res.nodes_expanded} expansions)")

print()
print("== r-partite testing with witnesses ==")
res = is_r_partite(make_turan(7, 3), 3)
print(f"T_3(7) 3-coloring: {res.status.value}, colors {res.coloring}")
res = is_r_partite(complete_graph(4), 3)
print(f"K_4 3-coloring: {res.status.value}")
