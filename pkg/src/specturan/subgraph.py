"""Clique counting, joints, books, multipartite embeddings, r-partiteness.

Everything here is exact and deterministic: fixed vertex orderings
(descending degree, ties by index) make every witness reproducible, and
search budgets are a first-class third outcome (BUDGET), never conflated
with a completed negative search (ABSENT).

Counting uses ordered expansion over bitset intersections, so each clique
is visited once.  Joint sizes reuse the counter on per-edge common
neighborhoods, with two exactness-preserving accelerations: identical
common neighborhoods are counted once (they repeat heavily on structured
hosts), and edges whose Kruskal-Katona upper bound cannot beat the current
maximum are skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .graph import Graph, PartSpec

DEFAULT_BUDGET = 10**8
DEFAULT_COLOR_CAP = 10**7


class SearchStatus(Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET = "budget"


class EmbeddingValidationError(AssertionError):
    """A search produced an embedding that fails independent re-checking."""


@dataclass(frozen=True)
class CliqueCount:
    r: int
    count: int


@dataclass(frozen=True)
class JointReport:
    """Maximum number of r-cliques sharing one edge (js_r) plus witness."""

    r: int
    witness_edge: tuple[int, int] | None
    size: int
    per_edge: dict[tuple[int, int], int] | None = None


@dataclass(frozen=True)
class BookReport:
    """Maximum number of common neighbors over r-cliques, with witness."""

    r: int
    base_clique: tuple[int, ...] | None
    size: int


@dataclass(frozen=True)
class Embedding:
    """Witness for a (possibly augmented) complete multipartite subgraph."""

    parts: tuple[tuple[int, ...], ...]
    extra_edge: tuple[int, int] | None = None

    def vertices(self) -> list[int]:
        return [v for part in self.parts for v in part]


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    embedding: Embedding | None
    nodes_expanded: int


@dataclass(frozen=True)
class ColoringResult:
    status: SearchStatus  # FOUND = proper coloring, ABSENT = proven none, BUDGET = cap
    coloring: tuple[int, ...] | None
    nodes_expanded: int = 0


class _BudgetHit(Exception):
    pass


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _count_cliques_in(adj: Sequence[int], cand: int, r: int) -> int:
    """Number of r-cliques with all vertices inside the `cand` bitset."""
    if r == 0:
        return 1
    if r == 1:
        return cand.bit_count()
    total = 0
    m = cand
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # m now holds only candidates above v, keeping the expansion ordered
        sub = adj[v] & m
        if r == 2:
            total += sub.bit_count()
        elif sub.bit_count() >= r - 1:
            total += _count_cliques_in(adj, sub, r - 1)
    return total


def count_cliques(g: Graph, r: int) -> CliqueCount:
    """Exact k_r(G).  Python integers widen automatically, so counts never
    overflow."""
    if r < 1:
        raise ValueError("clique order must be at least 1")
    if r > g.n:
        return CliqueCount(r, 0)
    full = (1 << g.n) - 1
    return CliqueCount(r, _count_cliques_in(g._adj, full, r))


def _greedy_colorable(g: Graph, colors: int) -> bool:
    """Greedy coloring by vertex index; success proves K_{colors+1}-freeness."""
    if colors <= 0:
        return g.n == 0
    assigned: list[int] = []
    for v in range(g.n):
        row = g.neighbors_mask(v)
        used = 0
        for u in _iter_bits(row & ((1 << v) - 1)):
            used |= 1 << assigned[u]
        c = 0
        while (used >> c) & 1:
            c += 1
        if c >= colors:
            return False
        assigned.append(c)
    return True


def clique_exists(g: Graph, r: int) -> tuple[int, ...] | None:
    """Lexicographically least r-clique, or None after exhaustive search."""
    if r < 1:
        raise ValueError("clique order must be at least 1")
    if r > g.n:
        return None
    if r == 1:
        return (0,)
    # A proper (r-1)-coloring certifies absence without search.
    if _greedy_colorable(g, r - 1):
        return None
    adj = g._adj
    out: list[int] = []

    def rec(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            out.append(v)
            if rec(adj[v] & m, need - 1):
                return True
            out.pop()
        return False

    full = (1 << g.n) - 1
    if rec(full, r):
        return tuple(out)
    return None


def _kruskal_katona_bound(m_edges: int, k: int) -> float:
    """Max number of k-cliques in any graph with m_edges edges (fractional
    Kruskal-Katona / Lovasz form): C(x, k) where C(x, 2) = m_edges."""
    if m_edges == 0:
        return 0.0
    x = 0.5 * (1.0 + math.sqrt(1.0 + 8.0 * m_edges))
    ub = 1.0
    for i in range(k):
        ub *= (x - i) / (i + 1)
        if ub <= 0.0:
            return 0.0
    return ub


def _edges_within(adj: Sequence[int], mask: int) -> int:
    total = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        total += (adj[v] & m).bit_count()
    return total


def joint_size(g: Graph, r: int, with_per_edge: bool = False) -> JointReport:
    """js_r(G): max over edges of the number of r-cliques through the edge.

    Ties break to the lexicographically least witness edge.  With
    `with_per_edge`, the full edge -> count map is computed (no pruning).
    """
    if r < 2:
        raise ValueError("joint order must be at least 2")
    adj = g._adj
    k = r - 2  # cliques of this order are counted inside common neighborhoods
    edges = list(g.edges())
    if not edges:
        return JointReport(r, None, 0, {} if with_per_edge else None)

    memo: dict[int, int] = {}

    def exact_count(cn: int) -> int:
        if k == 0:
            return 1
        pc = cn.bit_count()
        if k == 1:
            return pc
        if pc < k:
            return 0
        cached = memo.get(cn)
        if cached is None:
            cached = _count_cliques_in(adj, cn, k)
            memo[cn] = cached
        return cached

    if with_per_edge:
        per_edge = {e: exact_count(adj[e[0]] & adj[e[1]]) for e in edges}
        best = max(per_edge.values())
        witness = min(e for e, c in per_edge.items() if c == best)
        return JointReport(r, witness, best, per_edge)

    order = sorted(edges, key=lambda e: (-(adj[e[0]] & adj[e[1]]).bit_count(), e))
    best = -1
    witness: tuple[int, int] | None = None
    for u, v in order:
        cn = adj[u] & adj[v]
        cnt: int | None = None
        if k <= 1:
            cnt = exact_count(cn)
        elif cn in memo:
            cnt = memo[cn]
        else:
            pc = cn.bit_count()
            ub = float(math.comb(pc, k)) if pc >= k else 0.0
            if ub > best:
                ub = min(ub, _kruskal_katona_bound(_edges_within(adj, cn), k))
            # Counts are integers, so floor the float bound (with slop up).
            ub_int = int(math.floor(ub + 1e-6))
            skip = ub_int < best or (
                ub_int == best and witness is not None and witness < (u, v)
            )
            if not skip:
                cnt = exact_count(cn)
        if cnt is None:
            continue
        if cnt > best or (cnt == best and (witness is None or (u, v) < witness)):
            best = cnt
            witness = (u, v)
    return JointReport(r, witness, best, None)


def book_size(g: Graph, r: int) -> BookReport:
    """Max |common neighborhood| over r-cliques; witness is the
    lexicographically least maximizing clique."""
    if r < 1:
        raise ValueError("base clique order must be at least 1")
    if r > g.n:
        return BookReport(r, None, 0)
    adj = g._adj
    best = -1
    best_clique: tuple[int, ...] | None = None
    stack: list[int] = []

    def rec(cand: int, common: int, need: int) -> None:
        nonlocal best, best_clique
        if need == 0:
            size = common.bit_count()
            if size > best:
                best = size
                best_clique = tuple(stack)
            return
        if cand.bit_count() < need:
            return
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            stack.append(v)
            rec(adj[v] & m, common & adj[v], need - 1)
            stack.pop()

    full = (1 << g.n) - 1
    rec(full, full, r)
    if best < 0:
        return BookReport(r, None, 0)
    return BookReport(r, best_clique, best)


def validate_embedding(
    g: Graph,
    sizes: Sequence[int],
    emb: Embedding,
    require_extra_edge: bool,
) -> None:
    """Independent re-check of an embedding against the host graph.

    Raises EmbeddingValidationError on any violation; run after every
    successful search.
    """
    if len(emb.parts) != len(sizes):
        raise EmbeddingValidationError("part count mismatch")
    seen: set[int] = set()
    for part, want in zip(emb.parts, sizes):
        if len(part) != want:
            raise EmbeddingValidationError(f"part size {len(part)} != {want}")
        for v in part:
            if not (0 <= v < g.n):
                raise EmbeddingValidationError(f"vertex {v} out of range")
            if v in seen:
                raise EmbeddingValidationError(f"vertex {v} reused")
            seen.add(v)
    for i, part_a in enumerate(emb.parts):
        for part_b in emb.parts[i + 1 :]:
            for a in part_a:
                for b in part_b:
                    if not g.has_edge(a, b):
                        raise EmbeddingValidationError(f"missing cross edge ({a},{b})")
    if require_extra_edge:
        if emb.extra_edge is None:
            raise EmbeddingValidationError("extra edge missing")
        a, b = emb.extra_edge
        if a not in emb.parts[0] or b not in emb.parts[0]:
            raise EmbeddingValidationError("extra edge not inside part 1")
        if not g.has_edge(a, b):
            raise EmbeddingValidationError("extra edge not a host edge")
    elif emb.extra_edge is not None:
        raise EmbeddingValidationError("unexpected extra edge")


class _Embedder:
    """Backtracking part-filler over a degree-sorted relabeling of the host.

    Parts are filled one at a time; the candidate pool for part j is the
    intersection of the neighborhoods of everything placed in parts < j,
    which excludes those vertices automatically.  Exhausted subproblems are
    memoized by (part index, pool), which collapses the symmetric per-edge
    searches on structured hosts.  The expansion budget is shared across
    one public search call.
    """

    def __init__(self, g: Graph, budget: int) -> None:
        self.g = g
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.to_orig = order
        to_new = [0] * g.n
        for new, old in enumerate(order):
            to_new[old] = new
        self.to_new = to_new
        self.adj = [0] * g.n
        for old in range(g.n):
            row = 0
            for u in _iter_bits(g.neighbors_mask(old)):
                row |= 1 << to_new[u]
            self.adj[to_new[old]] = row
        self.budget = budget
        self.nodes = 0
        self.memo_failed: set[tuple[int, int]] = set()

    def _charge(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetHit

    def search(
        self, sizes: Sequence[int], pinned_first: tuple[int, int] | None
    ) -> list[list[int]] | None:
        """Fill parts of the given sizes; part 0 optionally pre-seeded with
        two (new-label) vertices.  Returns new-label parts or None."""
        n = self.g.n
        if sum(sizes) > n:
            return None
        full = (1 << n) - 1
        parts: list[list[int]] = [[] for _ in sizes]
        suffix_need = [0] * (len(sizes) + 1)
        for j in range(len(sizes) - 1, -1, -1):
            suffix_need[j] = suffix_need[j + 1] + sizes[j]
        adj = self.adj

        def fill_part(j: int, base: int) -> bool:
            if j == len(sizes):
                return True
            if base.bit_count() < suffix_need[j]:
                return False
            key = (j, base)
            if key in self.memo_failed:
                return False
            if fill_slots(j, len(parts[j]), base, _intersect_members(j, base), -1):
                return True
            self.memo_failed.add(key)
            return False

        def _intersect_members(j: int, base: int) -> int:
            accum = base
            for w in parts[j]:
                accum &= adj[w]
            return accum

        def fill_slots(j: int, slot: int, base: int, accum: int, last: int) -> bool:
            if slot == sizes[j]:
                return fill_part(j + 1, accum)
            if accum.bit_count() < suffix_need[j + 1]:
                return False
            cand = base & ~((1 << (last + 1)) - 1) if last >= 0 else base
            if cand.bit_count() < sizes[j] - slot:
                return False
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                self._charge()
                parts[j].append(v)
                if fill_slots(j, slot + 1, base, accum & adj[v], v):
                    return True
                parts[j].pop()
            return False

        if pinned_first is not None:
            a, b = pinned_first
            parts[0] = [a, b]
            base0 = full & ~((1 << a) | (1 << b))
            accum0 = adj[a] & adj[b]
            if len(sizes) == 0:
                return None
            if sizes[0] < 2:
                raise ValueError("pinned part needs size >= 2")
            ok = fill_slots(0, 2, base0, accum0, -1)
        else:
            ok = fill_part(0, full)
        if not ok:
            return None
        return [list(p) for p in parts]


def _sorted_spec(sizes: Sequence[int]) -> tuple[list[int], list[int]]:
    """Sizes in decreasing order (stable) plus the original index of each."""
    idx = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    return [sizes[i] for i in idx], idx


def find_complete_multipartite(
    g: Graph, spec: PartSpec | Sequence[int], budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Exact search for K_r(s_1, ..., s_r) as a (not necessarily induced)
    subgraph.  Parts are filled in decreasing size order; candidates are
    tried in descending host degree (ties by index)."""
    spec = spec if isinstance(spec, PartSpec) else PartSpec(tuple(spec))
    emb = _Embedder(g, budget)
    sorted_sizes, idx = _sorted_spec(spec.sizes)
    try:
        parts_new = emb.search(sorted_sizes, None)
    except _BudgetHit:
        return SearchResult(SearchStatus.BUDGET, None, emb.nodes)
    if parts_new is None:
        return SearchResult(SearchStatus.ABSENT, None, emb.nodes)
    parts_orig: list[tuple[int, ...]] = [()] * len(spec.sizes)
    for fill_pos, orig_pos in enumerate(idx):
        parts_orig[orig_pos] = tuple(emb.to_orig[v] for v in parts_new[fill_pos])
    result = Embedding(tuple(parts_orig), None)
    validate_embedding(g, spec.sizes, result, require_extra_edge=False)
    return SearchResult(SearchStatus.FOUND, result, emb.nodes)


def find_kr_plus(
    g: Graph, spec: PartSpec | Sequence[int], budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Exact search for K_r^+(s_1, ..., s_r): complete multipartite plus one
    edge inside part 1.

    Host edges are tried as the part-1 edge in descending order of common
    neighborhood size (ties lexicographic); the remaining parts are filled
    like find_complete_multipartite.  One expansion budget and one
    memoization table span all edge attempts.
    """
    spec = spec if isinstance(spec, PartSpec) else PartSpec(tuple(spec))
    spec.require_first_part_at_least_two()
    emb = _Embedder(g, budget)
    rest_sorted, rest_idx = _sorted_spec(spec.sizes[1:])
    sizes_fill = [spec.sizes[0]] + rest_sorted
    edges = sorted(
        g.edges(),
        key=lambda e: (-(g.neighbors_mask(e[0]) & g.neighbors_mask(e[1])).bit_count(), e),
    )
    try:
        for u, v in edges:
            a, b = emb.to_new[u], emb.to_new[v]
            parts_new = emb.search(sizes_fill, (a, b))
            if parts_new is not None:
                parts_orig: list[tuple[int, ...]] = [()] * spec.r
                parts_orig[0] = tuple(emb.to_orig[w] for w in parts_new[0])
                for fill_pos, orig_pos in enumerate(rest_idx):
                    parts_orig[orig_pos + 1] = tuple(
                        emb.to_orig[w] for w in parts_new[fill_pos + 1]
                    )
                result = Embedding(tuple(parts_orig), (u, v))
                validate_embedding(g, spec.sizes, result, require_extra_edge=True)
                return SearchResult(SearchStatus.FOUND, result, emb.nodes)
    except _BudgetHit:
        return SearchResult(SearchStatus.BUDGET, None, emb.nodes)
    return SearchResult(SearchStatus.ABSENT, None, emb.nodes)


def _two_color(g: Graph) -> tuple[int, ...] | None:
    colors = [-1] * g.n
    for start in range(g.n):
        if colors[start] != -1:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _iter_bits(g.neighbors_mask(v)):
                if colors[u] == -1:
                    colors[u] = 1 - colors[v]
                    queue.append(u)
                elif colors[u] == colors[v]:
                    return None
    return tuple(colors)


def is_r_partite(
    g: Graph, r: int, node_cap: int = DEFAULT_COLOR_CAP
) -> ColoringResult:
    """Exact r-colorability: BFS for r = 2, saturation-ordered backtracking
    with a node cap for r >= 3.  Cap exhaustion is a distinct outcome."""
    if r < 1:
        raise ValueError("color count must be at least 1")
    if g.n == 0:
        return ColoringResult(SearchStatus.FOUND, ())
    if r >= g.n:
        return ColoringResult(SearchStatus.FOUND, tuple(range(g.n)))
    if r == 1:
        if g.edge_count() == 0:
            return ColoringResult(SearchStatus.FOUND, (0,) * g.n)
        return ColoringResult(SearchStatus.ABSENT, None)
    if r == 2:
        coloring = _two_color(g)
        if coloring is None:
            return ColoringResult(SearchStatus.ABSENT, None)
        return ColoringResult(SearchStatus.FOUND, coloring)

    adj = g._adj
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitmask of colors used in each vertex's nbhd
    degrees = g.degrees()
    nodes = 0

    class _CapHit(Exception):
        pass

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1)
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (neighbor_colors[v].bit_count(), degrees[v])
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def rec(done: int, used: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        v = pick()
        limit = min(r, used + 1)  # new colors in first-use order only
        avail = ~neighbor_colors[v] & ((1 << limit) - 1)
        for c in _iter_bits(avail):
            nodes += 1
            if nodes > node_cap:
                raise _CapHit
            colors[v] = c
            touched = []
            for u in _iter_bits(adj[v]):
                if not (neighbor_colors[u] >> c) & 1:
                    neighbor_colors[u] |= 1 << c
                    touched.append(u)
            if rec(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                neighbor_colors[u] &= ~(1 << c)
        return False

    try:
        if rec(0, 0):
            return ColoringResult(SearchStatus.FOUND, tuple(colors), nodes)
        return ColoringResult(SearchStatus.ABSENT, None, nodes)
    except _CapHit:
        return ColoringResult(SearchStatus.BUDGET, None, nodes)
