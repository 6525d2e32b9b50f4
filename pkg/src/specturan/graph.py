"""Dense undirected simple graphs with bitset adjacency rows.

Each vertex's neighborhood is one Python integer used as a bitset, so the
hot operations of this package (neighborhood intersection, popcount) are
single big-int instructions.  Graphs are immutable from the consumer's
point of view: constructors build them, and the editing helpers
(`with_edge`, `without_edge`) return new graphs.

Also provides the structured families the experiments run on (Turan
graphs, complete multipartite graphs, K_r^+), the seeded G(n, m) model,
and the edge-list text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .rng import SplitMix64

MAX_EXHAUSTIVE_N = 8  # exhaustive all-labeled-graph scans stop here


class EdgeListError(ValueError):
    """Malformed edge-list input; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class PartSpec:
    """Ordered part sizes (s_1, ..., s_r) for multipartite targets."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sizes) < 1:
            raise ValueError("need at least one part")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"part sizes must be positive: {self.sizes}")

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def require_first_part_at_least_two(self) -> None:
        if self.sizes[0] < 2:
            raise ValueError(f"first part must have size >= 2, got {self.sizes[0]}")


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1, bitset adjacency."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adjacency_rows: Sequence[int] | None = None) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        if adjacency_rows is None:
            self._adj = [0] * n
        else:
            if len(adjacency_rows) != n:
                raise ValueError("adjacency row count differs from n")
            self._adj = list(adjacency_rows)
            self._check_well_formed()

    def _check_well_formed(self) -> None:
        full = (1 << self.n) - 1
        for v, row in enumerate(self._adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bit_indices(self._adj[v]):
                if not (self._adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g._add_edge(u, v)
        return g

    # Builder-phase only; library consumers use with_edge/without_edge.
    def _add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def min_degree(self) -> int:
        """delta(G); 0 for the empty-vertex graph."""
        if self.n == 0:
            return 0
        return min(row.bit_count() for row in self._adj)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            above = self._adj[u] >> (u + 1)
            for k in _bit_indices(above):
                yield (u, u + 1 + k)

    def with_edge(self, u: int, v: int) -> "Graph":
        g = Graph(self.n, self._adj)
        g._add_edge(u, v)
        return g

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        rows = list(self._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabeled 0..k-1 in the order given."""
        for v in vertices:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertices in subset")
        index = {v: i for i, v in enumerate(vertices)}
        k = len(vertices)
        rows = [0] * k
        for v, i in index.items():
            row = self._adj[v]
            for u in vertices:
                if (row >> u) & 1:
                    rows[i] |= 1 << index[u]
        return Graph(k, rows)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, sorted by minimum vertex."""
        seen = 0
        out: list[list[int]] = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            frontier = 1 << v
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for u in _bit_indices(frontier):
                    nxt |= self._adj[u]
                frontier = nxt & ~comp
            seen |= comp
            out.append(list(_bit_indices(comp)))
        return out

    def to_numpy(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (float64)."""
        if self.n == 0:
            return np.zeros((0, 0))
        nbytes = (self.n + 7) // 8
        buf = bytearray(nbytes * self.n)
        for v, row in enumerate(self._adj):
            buf[v * nbytes : (v + 1) * nbytes] = row.to_bytes(nbytes, "little")
        bits = np.unpackbits(
            np.frombuffer(bytes(buf), dtype=np.uint8).reshape(self.n, nbytes),
            axis=1,
            bitorder="little",
        )
        return bits[:, : self.n].astype(np.float64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def turan_part_sizes(n: int, r: int) -> list[int]:
    """Part sizes of T_r(n): as equal as possible, larger parts first."""
    if r < 1:
        raise ValueError("part count r must be at least 1")
    if n < 0:
        raise ValueError("order must be non-negative")
    q, k = divmod(n, r)
    return [q + 1] * k + [q] * (r - k)


def _complete_multipartite_rows(sizes: Sequence[int]) -> list[int]:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = [0] * n
    start = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << start
        for v in range(start, start + s):
            rows[v] = full & ~part_mask
        start += s
    return rows


def make_turan(n: int, r: int) -> Graph:
    """Turan graph T_r(n); vertices in contiguous blocks, larger parts first."""
    sizes = [s for s in turan_part_sizes(n, r) if s > 0]
    if not sizes:
        return Graph(n)
    return Graph(n, _complete_multipartite_rows(sizes))


def make_complete_multipartite(spec: PartSpec | Sequence[int]) -> Graph:
    """K_r(s_1, ..., s_r); vertices in contiguous blocks per part."""
    spec = spec if isinstance(spec, PartSpec) else PartSpec(tuple(spec))
    return Graph(spec.total, _complete_multipartite_rows(spec.sizes))


def make_kr_plus(spec: PartSpec | Sequence[int]) -> Graph:
    """K_r(s_1, ..., s_r) plus one edge between the two lowest vertices of part 1."""
    spec = spec if isinstance(spec, PartSpec) else PartSpec(tuple(spec))
    spec.require_first_part_at_least_two()
    g = make_complete_multipartite(spec)
    g._add_edge(0, 1)
    return g


def make_turan_plus_edge(n: int, r: int) -> Graph:
    """T_r(n) plus the edge (0, 1) inside the first (largest) part."""
    sizes = turan_part_sizes(n, r)
    if sizes[0] < 2:
        raise ValueError(f"T_{r}({n}) has no part of size >= 2")
    g = make_turan(n, r)
    g._add_edge(0, 1)
    return g


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with n vertices and exactly m edges, deterministic in seed.

    Uses a partial Fisher-Yates shuffle over the lexicographic list of
    vertex pairs, driven by SplitMix64, so the sampled edge set depends
    only on (n, m, seed).
    """
    max_m = n * (n - 1) // 2
    if not (0 <= m <= max_m):
        raise ValueError(f"edge count {m} out of range [0, {max_m}]")
    rng = SplitMix64(seed)
    # Virtual shuffle: remap[i] holds the pair index currently at slot i.
    remap: dict[int, int] = {}
    g = Graph(n)
    for i in range(m):
        j = i + rng.below(max_m - i)
        pick = remap.get(j, j)
        remap[j] = remap.get(i, i)
        u, v = _pair_from_index(n, pick)
        g._add_edge(u, v)
    return g


def _pair_from_index(n: int, idx: int) -> tuple[int, int]:
    # Lexicographic rank over pairs (u, v), u < v.
    u = 0
    row = n - 1
    while idx >= row:
        idx -= row
        u += 1
        row -= 1
    return (u, u + 1 + idx)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph on n vertices from a bitmask over the lexicographic pair list."""
    g = Graph(n)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (mask >> idx) & 1:
                g._add_edge(u, v)
            idx += 1
    return g


def write_edge_list(g: Graph) -> str:
    """Serialize: header "<n> <m>" then one "u v" line per edge, lex sorted."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises EdgeListError with a line number."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListError(1, "missing header")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError(1, f"header must be '<n> <m>', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError(1, f"header must be two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError(1, "n and m must be non-negative")
    g = Graph(n)
    count = 0
    for line_no, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListError(line_no, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"expected integers, got {raw!r}") from None
        if u == v:
            raise EdgeListError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < v < n):
            raise EdgeListError(line_no, f"edge ({u},{v}) violates 0 <= u < v < n={n}")
        if g.has_edge(u, v):
            raise EdgeListError(line_no, f"duplicate edge ({u},{v})")
        g._add_edge(u, v)
        count += 1
    if count != m:
        raise EdgeListError(len(lines), f"header promised {m} edges, found {count}")
    return g


def write_edge_list_file(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(write_edge_list(g))


def read_edge_list_file(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return read_edge_list(fh.read())
