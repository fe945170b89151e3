"""Canonical labeling for small graphs.

Vertices are first split by an isomorphism-invariant color refinement.
Positions are then filled class by class, keeping the labeling whose
column-major upper-triangle bit string (graph6 order) is lexicographically
largest.  Branches are cut as soon as their prefix falls behind the best
prefix, and interchangeable twins are only tried once per node.
"""
from __future__ import annotations

from collections.abc import Sequence

from . import graph6
from .graph import Graph, GraphError, _bits

DEFAULT_CAP = 10

CanonicalLabel = str


def _compress(keys: Sequence) -> list[int]:
    index = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [index[k] for k in keys]


def refine_colors(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Stable coloring of ``g`` refining ``colors`` (all equal if omitted).

    Color ids are assigned from sorted signatures, so isomorphic colored
    graphs receive corresponding colors.
    """
    n, rows = g.n, g.rows
    base = [0] * n if colors is None else list(colors)
    cur = _compress([(base[v], rows[v].bit_count()) for v in range(n)])
    ncls = max(cur, default=-1) + 1
    while True:
        masks = [0] * ncls
        for v, c in enumerate(cur):
            masks[c] |= 1 << v
        sig = [(cur[v],) + tuple((rows[v] & m).bit_count() for m in masks) for v in range(n)]
        new = _compress(sig)
        new_ncls = max(new, default=-1) + 1
        if new_ncls == ncls:
            return cur
        cur, ncls = new, new_ncls


def _twin_masks(n: int, rows: Sequence[int]) -> list[int]:
    twins = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                twins[u] |= 1 << v
                twins[v] |= 1 << u
    return twins


def canonical_order(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Vertices listed in canonical position order (``order[j]`` sits at position ``j``)."""
    n, rows = g.n, g.rows
    if n == 0:
        return []
    col = refine_colors(g, colors)
    slot = sorted(col)
    cell = [0] * (max(col) + 1)
    for v, c in enumerate(col):
        cell[c] |= 1 << v
    twins = _twin_masks(n, rows)

    best: list[int] = []
    best_order: list[int] = []
    placed = [0] * n
    stamp = [0, -1]  # [version of best, version recorded at last leaf]

    def dfs(j: int, acc: list[int], free: int) -> None:
        if j == n:
            if stamp[0] != stamp[1]:
                best_order[:] = placed
                stamp[1] = stamp[0]
            return
        cands = sorted(((acc[v], v) for v in _bits(cell[slot[j]] & free)), reverse=True)
        tried = 0
        for val, v in cands:
            if twins[v] & tried:
                continue
            tried |= 1 << v
            if len(best) > j:
                if val < best[j]:
                    break
                if val > best[j]:
                    del best[j:]
                    best.append(val)
                    stamp[0] += 1
            else:
                best.append(val)
                stamp[0] += 1
            placed[j] = v
            rv = rows[v]
            dfs(j + 1, [(a << 1) | ((rv >> w) & 1) for w, a in enumerate(acc)], free & ~(1 << v))

    dfs(0, [0] * n, (1 << n) - 1)
    return best_order


def _apply(g: Graph, order: Sequence[int]) -> Graph:
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_graph(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    return _apply(g, canonical_order(g, colors))


def canonical_form(g: Graph, cap: int = DEFAULT_CAP) -> CanonicalLabel:
    """graph6 text of the canonical relabeling; equal exactly for isomorphic graphs."""
    if g.n < 1:
        raise GraphError("canonical form needs at least one vertex")
    if g.n > cap:
        raise GraphError(f"n={g.n} exceeds the canonical-form cap of {cap}")
    return graph6.encode(canonical_graph(g))


def same_orbit(g: Graph, x: int, y: int) -> bool:
    """True iff some automorphism of ``g`` maps ``x`` to ``y``."""
    if x == y:
        return True
    base = refine_colors(g)
    if base[x] != base[y]:
        return False
    ox = canonical_order(g, [v == x for v in range(g.n)])
    oy = canonical_order(g, [v == y for v in range(g.n)])
    return ox.index(x) == oy.index(y) and _apply(g, ox) == _apply(g, oy)
