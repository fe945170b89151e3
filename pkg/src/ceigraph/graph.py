"""Simple undirected graphs stored as rows of adjacency bitmasks.

Row ``v`` is an integer whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent.  Graphs are immutable values; every operator returns a new graph
and never touches its inputs.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass


class GraphError(ValueError):
    """Raised for invalid vertices, edges or operator arguments."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
                r ^= low

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee symmetry and an empty diagonal.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for u in _bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph._trusted(self.n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex index out of range 0..{n - 1}: ({u}, {v})")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    if n < 1:
        raise GraphError("star needs at least one vertex")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    if g.has_edge(u, v):
        raise GraphError(f"vertices {u} and {v} are already adjacent")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    if not g.has_edge(u, v):
        raise GraphError(f"vertices {u} and {v} are not adjacent")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, re-indexed in ascending original order."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs a non-empty vertex set")
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        new = 0
        for u in _bits(g.rows[v]):
            if u in index:
                new |= 1 << index[u]
        rows.append(new)
    return Graph._trusted(len(keep), rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(g.n + h.n, list(g.rows) + [r << shift for r in h.rows])


def copies(m: int, g: Graph) -> Graph:
    """``m`` disjoint copies of ``g``; ``copies(0, g)`` is the empty graph K_0."""
    if m < 0:
        raise GraphError(f"number of copies must be non-negative, got {m}")
    out = empty_graph(0)
    for _ in range(m):
        out = disjoint_union(out, g)
    return out


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    shift = g.n
    h_mask = ((1 << h.n) - 1) << shift
    g_mask = (1 << g.n) - 1
    rows = [r | h_mask for r in g.rows] + [(r << shift) | g_mask for r in h.rows]
    return Graph._trusted(g.n + h.n, rows)


def sequential_join(parts: Sequence[Graph]) -> Graph:
    """Chain ``M1 v M2 v ... v Mt``: complete bipartite edges between consecutive parts only.

    Empty parts (K_0) are dropped before composing.
    """
    if not parts:
        raise GraphError("sequential join needs at least one part")
    parts = [p for p in parts if p.n > 0]
    if not parts:
        return empty_graph(0)
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    masks = [((1 << p.n) - 1) << off for p, off in zip(parts, offsets)]
    rows = []
    for i, (p, off) in enumerate(zip(parts, offsets)):
        extra = 0
        if i > 0:
            extra |= masks[i - 1]
        if i + 1 < len(parts):
            extra |= masks[i + 1]
        rows.extend((r << off) | extra for r in p.rows)
    return Graph._trusted(total, rows)


def component_mask(g: Graph, start: int, removed: int = 0) -> int:
    """Bitmask of vertices reachable from ``start`` avoiding the ``removed`` mask."""
    rows = g.rows
    allowed = ~removed
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise GraphError("connectivity is undefined for the empty graph K_0")
    return component_mask(g, 0) == (1 << g.n) - 1
