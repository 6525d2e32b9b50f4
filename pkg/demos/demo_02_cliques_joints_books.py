#!/usr/bin/env python3
"""Walkthrough: exact clique counts, joints, and books.

A joint of order r is a set of r-cliques sharing one edge; a book is a set
of (r+1)-cliques sharing an r-clique.  Both are the combinatorial objects
behind the saturation conclusions, and both are computed exactly with
reproducible witnesses.
"""

from specturan import (
    book_size,
    clique_exists,
    complete_graph,
    count_cliques,
    joint_size,
    make_turan,
    make_turan_plus_edge,
)

print("== Clique counts ==")
print(f"k_3(K_5) = {count_cliques(complete_graph(5), 3).count} (C(5,3) = 10)")
print(f"k_3(T_3(6)) = {count_cliques(make_turan(6, 3), 3).count} (2*2*2 = 8)")
print(f"k_3(T_2(6)) = {count_cliques(make_turan(6, 2), 3).count} (bipartite)")
print(f"k_5(K_40) = {count_cliques(complete_graph(40), 5).count} (658008; "
      "counts use arbitrary-precision integers)")

print()
print("== Joints: many cliques through one edge ==")
rep = joint_size(complete_graph(5), 4)
print(f"js_4(K_5) = {rep.size}, witness edge {rep.witness_edge}")
g = make_turan_plus_edge(12, 2)
rep = joint_size(g, 3)
print(f"js_3(T_2(12)+e) = {rep.size}: the added edge {rep.witness_edge} sees "
      "the whole opposite part")

print()
print("== Per-edge joint profile ==")
rep = joint_size(make_turan_plus_edge(6, 2), 3, with_per_edge=True)
for edge, cnt in sorted(rep.per_edge.items()):
    print(f"  edge {edge}: {cnt} triangles through it")

print()
print("== Books: many cliques over one base clique ==")
rep = book_size(make_turan(9, 3), 2)
print(f"book over edges in T_3(9): base {rep.base_clique}, size {rep.size} "
      "(the third part)")
rep = book_size(make_turan(8, 2), 3)
print(f"book over triangles in T_2(8): size {rep.size} (no triangle exists)")

print()
print("== Existence with witnesses ==")
print(f"lex-least triangle in T_2(6)+e: {clique_exists(make_turan_plus_edge(6, 2), 3)}")
print(f"K_6 in T_5(500): {clique_exists(make_turan(500, 5), 6)} "
      "(r-partite hosts certify absence instantly)")
