"""The four extremal families: G(n,k,d), H(n,k,d), S_{n,alpha} and M_{n,delta}.

Vertices are numbered in sequential-join part order, so each construction
has a byte-reproducible graph6 encoding.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, complete_graph, copies, disjoint_union, join, sequential_join


class ParameterError(ValueError):
    """Parameters for which a family formula does not yield a legal member."""


class Family(str, enum.Enum):
    G_NKD = "G_NKD"
    H_NKD = "H_NKD"
    S_NALPHA = "S_NALPHA"
    M_NDELTA = "M_NDELTA"


def _require(ok: bool, msg: str) -> None:
    if not ok:
        raise ParameterError(msg)


@dataclass(frozen=True)
class ConstructionParams:
    family: Family
    n: int
    k: int
    d: int | None = None
    s: int | None = None
    alpha: int | None = None
    delta: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        n, k = self.n, self.k
        _require(k >= 1, f"k >= 1 violated (k={k})")
        fam = self.family
        if fam is Family.G_NKD:
            d = self.d
            _require(d is not None and d >= 4 and d % 2 == 0, f"d must be even >= 4 (d={d})")
            mid = n - k * d + 2 * k - 2
            _require(mid >= k, f"middle layer n-kd+2k-2 >= k violated ({mid} < {k})")
        elif fam is Family.H_NKD:
            d, s = self.d, self.s
            _require(d is not None and d >= 3 and d % 2 == 1, f"d must be odd >= 3 (d={d})")
            _require(s is not None, "split s is required")
            _require(s >= k - 1, f"s >= k-1 = {k - 1} violated (s={s})")
            t = h_split_total(n, k, d) - s
            _require(t >= k - 1, f"t = n-kd+3k-4-s >= k-1 = {k - 1} violated (t={t})")
        elif fam is Family.S_NALPHA:
            a = self.alpha
            _require(a is not None and a >= 2, f"alpha >= 2 violated (alpha={a})")
            _require(n >= k + a, f"n >= k+alpha = {k + a} violated (n={n})")
        else:
            dl = self.delta
            _require(dl is not None and dl >= k, f"delta >= k = {k} violated (delta={dl})")
            _require(n >= k + 2, f"n >= k+2 = {k + 2} violated (n={n})")
            _require(n >= 2 * dl - k + 2, f"n >= 2*delta-k+2 = {2 * dl - k + 2} violated (n={n})")

    def build(self) -> Graph:
        if self.family is Family.G_NKD:
            return build_G_nkd(self.n, self.k, self.d)
        if self.family is Family.H_NKD:
            return build_H_nkd(self.n, self.k, self.d, self.s)
        if self.family is Family.S_NALPHA:
            return build_S_nalpha(self.n, self.k, self.alpha)
        return build_M_ndelta(self.n, self.k, self.delta)


def h_split_total(n: int, k: int, d: int) -> int:
    """The value of s + t for the odd-diameter family."""
    return n - k * d + 3 * k - 4


def g_layers(n: int, k: int, d: int) -> list[int]:
    ConstructionParams(Family.G_NKD, n, k, d=d)
    side = [k] * ((d - 2) // 2)
    return [1, *side, n - k * d + 2 * k - 2, *side, 1]


def h_layers(n: int, k: int, d: int, s: int) -> list[int]:
    ConstructionParams(Family.H_NKD, n, k, d=d, s=s)
    t = h_split_total(n, k, d) - s
    side = [k] * ((d - 3) // 2)
    return [1, *side, s + 1, t + 1, *side, 1]


def _layered(sizes: list[int]) -> Graph:
    return sequential_join([complete_graph(m) for m in sizes])


def build_G_nkd(n: int, k: int, d: int) -> Graph:
    """K_1 v [(d-2)/2]K_k v K_{n-kd+2k-2} v [(d-2)/2]K_k v K_1 for even d >= 4."""
    return _layered(g_layers(n, k, d))


def build_H_nkd(n: int, k: int, d: int, s: int) -> Graph:
    """K_1 v [(d-3)/2]K_k v K_{s+1} v K_{t+1} v [(d-3)/2]K_k v K_1 with t = n-kd+3k-4-s."""
    return _layered(h_layers(n, k, d, s))


def h_splits(n: int, k: int, d: int) -> list[int]:
    """Valid values of ``s`` for H(n,k,d), ascending."""
    if d < 3 or d % 2 == 0:
        raise ParameterError(f"d must be odd >= 3 (d={d})")
    if k < 1:
        raise ParameterError(f"k >= 1 violated (k={k})")
    total = h_split_total(n, k, d)
    splits = list(range(k - 1, total - (k - 1) + 1))
    if not splits:
        raise ParameterError(
            f"H({n},{k},{d}) is empty: s+t = n-kd+3k-4 = {total} < 2(k-1) = {2 * (k - 1)}"
        )
    return splits


def enumerate_H_family(n: int, k: int, d: int) -> list[Graph]:
    """One member per valid split ``s``; isomorphic (s,t)/(t,s) pairs are both kept."""
    return [build_H_nkd(n, k, d, s) for s in h_splits(n, k, d)]


def build_S_nalpha(n: int, k: int, alpha: int) -> Graph:
    """K_k v (K_1 u (K_{n-k-alpha} v (alpha-1)K_1)); K_k v alpha K_1 when n = k + alpha."""
    ConstructionParams(Family.S_NALPHA, n, k, alpha=alpha)
    inner = join(complete_graph(n - k - alpha), copies(alpha - 1, complete_graph(1)))
    return join(complete_graph(k), disjoint_union(complete_graph(1), inner))


def build_M_ndelta(n: int, k: int, delta: int) -> Graph:
    """K_k v (K_{delta-k+1} u K_{n-delta-1})."""
    ConstructionParams(Family.M_NDELTA, n, k, delta=delta)
    sides = disjoint_union(complete_graph(delta - k + 1), complete_graph(n - delta - 1))
    return join(complete_graph(k), sides)
