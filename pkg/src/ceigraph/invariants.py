"""Exact graph invariants: degrees, eccentricities, CEI/ECI, connectivity, independence number."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, _bits, component_mask

# Exact rational in lowest terms; ordering and equality never go through floats.
Rational = Fraction


class DisconnectedGraphError(GraphError):
    pass


def degrees(g: Graph) -> list[int]:
    if g.n < 1:
        raise GraphError("degrees need at least one vertex")
    return [r.bit_count() for r in g.rows]


def _ecc_from(rows: tuple[int, ...], v: int, full: int) -> int:
    seen = 1 << v
    frontier = seen
    ecc = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        ecc += 1
    if seen != full:
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    return ecc


def eccentricities(g: Graph) -> list[int]:
    """One breadth-first search per vertex."""
    if g.n < 1:
        raise GraphError("eccentricities need at least one vertex")
    full = (1 << g.n) - 1
    return [_ecc_from(g.rows, v, full) for v in range(g.n)]


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def _cei(degs: list[int], eccs: list[int]) -> Rational:
    return sum((Fraction(d, e) for d, e in zip(degs, eccs)), Fraction(0))


def cei(g: Graph) -> Rational:
    """Connective eccentricity index: sum of degree / eccentricity over all vertices."""
    if g.n < 2:
        raise GraphError("CEI needs at least two vertices (K_1 has eccentricity 0)")
    return _cei(degrees(g), eccentricities(g))


def eci(g: Graph) -> int:
    """Eccentric connectivity index: sum of degree * eccentricity."""
    return sum(d * e for d, e in zip(degrees(g), eccentricities(g)))


def local_connectivity(g: Graph, s: int, t: int, bound: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths for non-adjacent ``s``, ``t``.

    Unit-capacity augmenting paths on the vertex-split digraph: vertex ``v``
    becomes ``v_in = 2v`` and ``v_out = 2v + 1`` joined by an arc of
    capacity one.  Stops early once ``bound`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise GraphError("local connectivity needs two distinct non-adjacent vertices")
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
        for u in _bits(g.rows[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    limit = n if bound is None else bound
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects ``g`` or leaves one vertex.

    Complete graphs give ``n - 1``.  Otherwise the minimum local connectivity
    is taken over non-adjacent pairs; only sources among the first
    ``kappa + 1`` vertices need to be tried, since one of them lies outside
    any minimum separator.
    """
    n = g.n
    if n < 2:
        raise GraphError("connectivity needs at least two vertices")
    full = (1 << n) - 1
    if component_mask(g, 0) != full:
        raise DisconnectedGraphError("connectivity is computed for connected graphs only")
    if all(r.bit_count() == n - 1 for r in g.rows):
        return n - 1
    best = min(r.bit_count() for r in g.rows)
    i = 0
    while i < best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, local_connectivity(g, i, j, bound=best))
        i += 1
    return best


def _clique_cover_bound(rows: tuple[int, ...], cand: int) -> int:
    cliques = 0
    while cand:
        low = cand & -cand
        common = rows[low.bit_length() - 1] & cand
        cand ^= low
        while common:
            w = common & -common
            cand ^= w
            common &= rows[w.bit_length() - 1]
        cliques += 1
    return cliques


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by branch and bound."""
    if g.n < 1:
        raise GraphError("independence number needs at least one vertex")
    rows = g.rows
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(rows, cand) <= best:
            return
        pick, pick_deg = -1, -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            d = (rows[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
            c ^= low
        if pick_deg == 0:
            best = max(best, size + cand.bit_count())
            return
        bit = 1 << pick
        search(cand & ~(rows[pick] | bit), size + 1)
        search(cand & ~bit, size)

    search((1 << g.n) - 1, 0)
    return best


class ClassKind(str, enum.Enum):
    DIAMETER = "DIAMETER"
    INDEPENDENCE = "INDEPENDENCE"
    MINDEGREE = "MINDEGREE"


class Connectivity(str, enum.Enum):
    AT_LEAST = "at-least"  # k-connected: kappa >= k
    EXACT = "exact"  # fixed connectivity: kappa == k


@dataclass(frozen=True)
class ClassSpec:
    """One of the graph classes G_k(n, d), G_k(n, alpha), G_k(n, delta)."""

    kind: ClassKind
    n: int
    k: int
    value: int
    connectivity: Connectivity = Connectivity.AT_LEAST

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ClassKind(self.kind))
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))
        if self.n < 2:
            raise ValueError(f"class order must be at least 2, got n={self.n}")
        if self.k < 1:
            raise ValueError(f"connectivity parameter must be at least 1, got k={self.k}")
        if self.value < 1:
            raise ValueError(f"{self.kind.value.lower()} parameter must be at least 1, got {self.value}")
        if self.kind is ClassKind.MINDEGREE and self.value < self.k:
            raise ValueError(f"minimum degree {self.value} must be at least k={self.k}")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "connectivity": self.connectivity.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClassSpec:
        return cls(d["kind"], d["n"], d["k"], d["value"], d.get("connectivity", "at-least"))


@dataclass(frozen=True)
class InvariantSummary:
    n: int
    edges: int
    min_degree: int
    max_degree: int
    radius: int
    diameter: int
    connectivity: int
    independence_number: int
    cei: Rational
    eci: int


def summarize(g: Graph) -> InvariantSummary:
    if g.n < 2:
        raise GraphError("summary needs at least two vertices")
    degs = degrees(g)
    eccs = eccentricities(g)
    return InvariantSummary(
        n=g.n,
        edges=sum(degs) // 2,
        min_degree=min(degs),
        max_degree=max(degs),
        radius=min(eccs),
        diameter=max(eccs),
        connectivity=vertex_connectivity(g),
        independence_number=independence_number(g),
        cei=_cei(degs, eccs),
        eci=sum(d * e for d, e in zip(degs, eccs)),
    )


def is_member(g: Graph, spec: ClassSpec) -> bool:
    """Class membership; cheap tests (degrees, eccentricities) run before connectivity and alpha."""
    if g.n != spec.n:
        raise GraphError(f"graph has order {g.n}, class expects {spec.n}")
    if component_mask(g, 0) != (1 << g.n) - 1:
        raise DisconnectedGraphError("class membership is defined for connected graphs")
    delta = min(r.bit_count() for r in g.rows)
    if delta < spec.k:
        return False
    if spec.kind is ClassKind.DIAMETER:
        if diameter(g) != spec.value:
            return False
    elif spec.kind is ClassKind.MINDEGREE:
        if delta < spec.value:
            return False
    elif independence_number(g) != spec.value:
        return False
    kappa = vertex_connectivity(g)
    if spec.connectivity is Connectivity.EXACT:
        return kappa == spec.k
    return kappa >= spec.k
