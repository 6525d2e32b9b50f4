"""Independent brute-force oracles for the test suite.

Everything here enumerates vertex subsets with itertools and checks pairs
with Graph.has_edge only, deliberately sharing no code with the production
counting and search paths.
"""

from __future__ import annotations

import itertools

import numpy as np

from specturan.graph import Graph


def is_clique(g: Graph, vertices: tuple[int, ...]) -> bool:
    return all(
        g.has_edge(u, v) for u, v in itertools.combinations(vertices, 2)
    )


def all_cliques(g: Graph) -> dict[int, list[tuple[int, ...]]]:
    """Every clique of every order, keyed by order."""
    out: dict[int, list[tuple[int, ...]]] = {r: [] for r in range(1, g.n + 1)}
    for r in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            if is_clique(g, combo):
                out[r].append(combo)
    return out


def brute_clique_count(g: Graph, r: int) -> int:
    if r > g.n:
        return 0
    return sum(1 for c in itertools.combinations(range(g.n), r) if is_clique(g, c))


def brute_joint_size(g: Graph, r: int) -> tuple[int, tuple[int, int] | None]:
    """(js_r, lexicographically least witness edge)."""
    edges = list(g.edges())
    if not edges:
        return 0, None
    cliques = [c for c in itertools.combinations(range(g.n), r) if is_clique(g, c)]
    best = -1
    witness = None
    for u, v in edges:
        cnt = sum(1 for c in cliques if u in c and v in c)
        if cnt > best:
            best = cnt
            witness = (u, v)
    return best, witness


def brute_book_size(g: Graph, r: int) -> tuple[int, tuple[int, ...] | None]:
    best = -1
    witness = None
    for combo in itertools.combinations(range(g.n), r):
        if not is_clique(g, combo):
            continue
        common = sum(
            1
            for w in range(g.n)
            if w not in combo and all(g.has_edge(w, v) for v in combo)
        )
        if common > best:
            best = common
            witness = combo
    if best < 0:
        return 0, None
    return best, witness


def eig_mu(g: Graph) -> float:
    """Dense symmetric eigensolver oracle for the spectral radius."""
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.to_numpy())[-1])


def brute_has_multipartite(g: Graph, sizes: tuple[int, ...]) -> bool:
    """Exhaustive test for a complete multipartite subgraph (tiny hosts)."""
    total = sum(sizes)
    if total > g.n:
        return False
    for combo in itertools.combinations(range(g.n), total):
        for perm in _partitions(list(combo), sizes):
            if _cross_complete(g, perm):
                return True
    return False


def _partitions(items: list[int], sizes: tuple[int, ...]):
    if not sizes:
        yield []
        return
    first_size = sizes[0]
    for first in itertools.combinations(items, first_size):
        rest = [x for x in items if x not in first]
        for tail in _partitions(rest, sizes[1:]):
            yield [list(first)] + tail


def _cross_complete(g: Graph, parts: list[list[int]]) -> bool:
    for i, pa in enumerate(parts):
        for pb in parts[i + 1 :]:
            for a in pa:
                for b in pb:
                    if not g.has_edge(a, b):
                        return False
    return True
