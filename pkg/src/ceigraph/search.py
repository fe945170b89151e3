"""Isomorphism-free enumeration, exhaustive max-CEI search and theorem verification.

Connected graphs are generated by canonical augmentation: a child of order
``n`` is built from a connected parent of order ``n - 1`` by adding one vertex
joined to a non-empty neighborhood, and is kept only if the new vertex is
(up to automorphism) the distinguished vertex of the child.  The
distinguished vertex is the non-cut vertex of least degree that comes last
in the canonical order.  Removing a non-cut vertex keeps the parent
connected, so every connected graph is reached from exactly one parent.
"""
from __future__ import annotations

import enum
import itertools
import os
import time
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph6
from .canon import CanonicalLabel, canonical_form, canonical_graph, canonical_order, same_orbit
from .constructions import (
    ConstructionParams,
    Family,
    build_G_nkd,
    build_M_ndelta,
    build_S_nalpha,
    enumerate_H_family,
)
from .graph import Graph, GraphError, add_edge, component_mask
from .invariants import ClassKind, ClassSpec, Connectivity, cei, is_member

DEFAULT_CAP = 9
BRUTE_FORCE_CAP = 7


def _resolve_workers(workers: int | None) -> int:
    if workers is None or workers < 1:
        return os.cpu_count() or 1
    return workers


def _chunks(items: Sequence, count: int) -> list[Sequence]:
    """Split into ``count`` contiguous, nearly equal chunks (order preserved)."""
    size, extra = divmod(len(items), count)
    out, start = [], 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        out.append(items[start:end])
        start = end
    return out


def _parallel_map(fn, items: Sequence, workers: int) -> list:
    """Apply ``fn`` to contiguous chunks and concatenate results in chunk order."""
    if workers <= 1 or len(items) < 2 * workers:
        return list(fn(items))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, _chunks(items, workers)))
    return [x for part in parts for x in part]


# -- connected graph generation -------------------------------------------------


def _non_cut_mask(rows: Sequence[int], n: int, candidates: int) -> int:
    g = Graph._trusted(n, rows)
    full = (1 << n) - 1
    out = 0
    c = candidates
    while c:
        low = c & -c
        v = low.bit_length() - 1
        c ^= low
        rest = full ^ low
        start = (rest & -rest).bit_length() - 1
        if component_mask(g, start, removed=low) == rest:
            out |= low
    return out


def _children(parent: Graph) -> list[str]:
    m = parent.n
    n = m + 1
    x = m
    xbit = 1 << x
    prow = parent.rows
    pdeg = [r.bit_count() for r in prow]
    seen: set[str] = set()
    out: list[str] = []
    for nbhd in range(1, 1 << m):
        dx = nbhd.bit_count()
        rows = [r | xbit if (nbhd >> v) & 1 else r for v, r in enumerate(prow)]
        rows.append(nbhd)
        lower = 0
        tied = xbit
        for v in range(m):
            dv = pdeg[v] + ((nbhd >> v) & 1)
            if dv < dx:
                lower |= 1 << v
            elif dv == dx:
                tied |= 1 << v
        if lower and _non_cut_mask(rows, n, lower):
            continue
        child = Graph._trusted(n, rows)
        order = canonical_order(child)
        tied = _non_cut_mask(rows, n, tied)
        mark = next(v for v in reversed(order) if (tied >> v) & 1)
        if mark != x and not same_orbit(child, x, mark):
            continue
        perm = [0] * n
        for pos, v in enumerate(order):
            perm[v] = pos
        label = graph6.encode(child.relabel(perm))
        if label not in seen:
            seen.add(label)
            out.append(label)
    return out


def _children_batch(parents: Sequence[str]) -> list[str]:
    out: list[str] = []
    for p in parents:
        out.extend(_children(graph6.decode(p)))
    return out


_LEVELS: dict[int, tuple[str, ...]] = {1: ("@",)}


def connected_graph6(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> tuple[str, ...]:
    """Canonical graph6 labels of all connected graphs of order ``n``, one per class."""
    if n < 1:
        raise GraphError(f"order must be at least 1, got {n}")
    if n > cap:
        raise GraphError(f"order {n} exceeds the enumeration cap of {cap}")
    m = max(k for k in _LEVELS if k <= n)
    while m < n:
        _LEVELS[m + 1] = tuple(_parallel_map(_children_batch, _LEVELS[m], workers))
        m += 1
    return _LEVELS[n]


def enumerate_connected(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class of connected graphs."""
    for label in connected_graph6(n, cap, workers):
        yield graph6.decode(label)


def enumerate_connected_bruteforce(n: int, cap: int = BRUTE_FORCE_CAP) -> Iterator[Graph]:
    """Reference enumeration: scan every labeled graph, marking whole orbits as seen.

    Independent of canonical labeling; exponential, meant as a test oracle.
    """
    if n < 1 or n > cap:
        raise GraphError(f"brute-force enumeration supports 1 <= n <= {cap}, got {n}")
    pairs = [(u, v) for v in range(n) for u in range(v)]
    perms = list(itertools.permutations(range(n)))
    seen: set[tuple[int, ...]] = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (p for i, p in enumerate(pairs) if (mask >> i) & 1))
        if g.rows in seen or not _connected(g):
            continue
        for p in perms:
            seen.add(g.relabel(p).rows)
        yield g


def _connected(g: Graph) -> bool:
    return component_mask(g, 0) == (1 << g.n) - 1


def graphs_from_stream(lines: Iterable[str], n: int) -> list[Graph]:
    """Connected order-``n`` graphs from a graph6 stream, canonically relabeled, duplicates dropped."""
    out: list[Graph] = []
    seen: set[str] = set()
    for g in graph6.read_lines(lines):
        if g.n != n or not _connected(g):
            continue
        c = canonical_graph(g)
        label = graph6.encode(c)
        if label not in seen:
            seen.add(label)
            out.append(c)
    return out


# -- class search ----------------------------------------------------------------


def _source_labels(spec: ClassSpec, source: Iterable[str] | None, cap: int, workers: int) -> Sequence[str]:
    if source is None:
        return connected_graph6(spec.n, cap, workers)
    return [graph6.encode(g) for g in graphs_from_stream(source, spec.n)]


def _score_batch(args: tuple[dict, Sequence[str]]) -> list[tuple[str, int, int]]:
    spec_d, labels = args
    spec = ClassSpec.from_dict(spec_d)
    out = []
    for label in labels:
        g = graph6.decode(label)
        if is_member(g, spec):
            c = cei(g)
            out.append((label, c.numerator, c.denominator))
    return out


def _scored_members(spec: ClassSpec, labels: Sequence[str], workers: int) -> list[tuple[str, Fraction]]:
    spec_d = spec.to_dict()
    if workers <= 1 or len(labels) < 2 * workers:
        rows = _score_batch((spec_d, labels))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_score_batch, [(spec_d, c) for c in _chunks(labels, workers)])
            rows = [r for part in parts for r in part]
    return [(label, Fraction(p, q)) for label, p, q in rows]


def enumerate_class(
    spec: ClassSpec,
    source: Iterable[str] | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> Iterator[Graph]:
    labels = _source_labels(spec, source, cap, workers)
    for label, _ in _scored_members(spec, labels, workers):
        yield graph6.decode(label)


@dataclass(frozen=True)
class SearchReport:
    spec: ClassSpec
    class_size: int
    max_cei: Fraction | None
    maximizers: tuple[CanonicalLabel, ...]
    runtime_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "class_size": self.class_size,
            "max_cei": None if self.max_cei is None else format_fraction(self.max_cei),
            "maximizers": list(self.maximizers),
        }

    @classmethod
    def from_dict(cls, d: dict, runtime_ms: float = 0.0) -> SearchReport:
        mx = d["max_cei"]
        return cls(
            spec=ClassSpec.from_dict(d["spec"]),
            class_size=d["class_size"],
            max_cei=None if mx is None else Fraction(mx),
            maximizers=tuple(d["maximizers"]),
            runtime_ms=runtime_ms,
        )


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def max_cei_search(
    spec: ClassSpec,
    source: Iterable[str] | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> SearchReport:
    """Exact maximum CEI over the class together with every maximizer up to isomorphism."""
    start = time.perf_counter()
    labels = _source_labels(spec, source, cap, workers)
    scored = _scored_members(spec, labels, workers)
    best = max((c for _, c in scored), default=None)
    maximizers = tuple(sorted(label for label, c in scored if c == best))
    return SearchReport(
        spec=spec,
        class_size=len(scored),
        max_cei=best,
        maximizers=maximizers,
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )


# -- verification ----------------------------------------------------------------


class Theorem(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    LEMMA1 = "LEMMA1"


class Verdict(str, enum.Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    EMPTY_CLASS = "EMPTY_CLASS"


@dataclass(frozen=True)
class VerificationReport:
    theorem: Theorem
    params: dict
    expected: tuple[CanonicalLabel, ...]
    observed: SearchReport
    verdict: Verdict
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "params": dict(self.params),
            "expected": list(self.expected),
            "observed": self.observed.to_dict(),
            "verdict": self.verdict.value,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(
            theorem=Theorem(d["theorem"]),
            params=dict(d["params"]),
            expected=tuple(d["expected"]),
            observed=SearchReport.from_dict(d["observed"]),
            verdict=Verdict(d["verdict"]),
            witness=d.get("witness"),
        )


def _judge(theorem: Theorem, params: dict, expected: Iterable[str], report: SearchReport) -> VerificationReport:
    exp = tuple(sorted(set(expected)))
    if report.class_size == 0:
        return VerificationReport(theorem, params, exp, report, Verdict.EMPTY_CLASS)
    observed = set(report.maximizers)
    if observed == set(exp):
        return VerificationReport(theorem, params, exp, report, Verdict.CONFIRMED)
    extra = sorted(observed - set(exp))
    missing = sorted(set(exp) - observed)
    witness = extra[0] if extra else missing[0]
    return VerificationReport(theorem, params, exp, report, Verdict.REFUTED, witness)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise GraphError(f"order {n} exceeds the enumeration cap of {cap}")


def verify_theorem1(
    n: int,
    k: int,
    d: int,
    source: Iterable[str] | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    connectivity: Connectivity | str = Connectivity.AT_LEAST,
) -> VerificationReport:
    """Maximizers over k-connected order-n graphs of diameter d versus G(n,k,d) or the H(n,k,d) family."""
    if d < 3:
        raise ValueError(f"the diameter theorem needs d >= 3, got d={d}")
    _check_cap(n, cap)
    if d % 2 == 0:
        expected = [canonical_form(build_G_nkd(n, k, d), cap=max(cap, n))]
    else:
        expected = [canonical_form(g, cap=max(cap, n)) for g in enumerate_H_family(n, k, d)]
    spec = ClassSpec(ClassKind.DIAMETER, n, k, d, connectivity)
    report = max_cei_search(spec, source, cap, workers)
    return _judge(Theorem.T1, {"n": n, "k": k, "d": d}, expected, report)


def verify_theorem2(
    n: int,
    k: int,
    alpha: int,
    source: Iterable[str] | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    connectivity: Connectivity | str = Connectivity.EXACT,
) -> VerificationReport:
    """Unique maximizer over connectivity-k order-n graphs with independence number alpha is S_{n,alpha}."""
    ConstructionParams(Family.S_NALPHA, n, k, alpha=alpha)
    _check_cap(n, cap)
    expected = [canonical_form(build_S_nalpha(n, k, alpha), cap=max(cap, n))]
    spec = ClassSpec(ClassKind.INDEPENDENCE, n, k, alpha, connectivity)
    report = max_cei_search(spec, source, cap, workers)
    return _judge(Theorem.T2, {"n": n, "k": k, "alpha": alpha}, expected, report)


def verify_theorem3(
    n: int,
    k: int,
    delta: int,
    source: Iterable[str] | None = None,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    connectivity: Connectivity | str = Connectivity.EXACT,
) -> VerificationReport:
    """Unique maximizer over connectivity-k order-n graphs with minimum degree >= delta is M_{n,delta}."""
    ConstructionParams(Family.M_NDELTA, n, k, delta=delta)
    _check_cap(n, cap)
    expected = [canonical_form(build_M_ndelta(n, k, delta), cap=max(cap, n))]
    spec = ClassSpec(ClassKind.MINDEGREE, n, k, delta, connectivity)
    report = max_cei_search(spec, source, cap, workers)
    return _judge(Theorem.T3, {"n": n, "k": k, "delta": delta}, expected, report)


@dataclass(frozen=True)
class Lemma1Report:
    max_n: int
    graphs_checked: int
    pairs_checked: int
    violations: tuple[tuple[str, int, int], ...]

    @property
    def verdict(self) -> Verdict:
        return Verdict.REFUTED if self.violations else Verdict.CONFIRMED

    def to_dict(self) -> dict:
        return {
            "theorem": Theorem.LEMMA1.value,
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "pairs_checked": self.pairs_checked,
            "violations": [list(v) for v in self.violations],
            "verdict": self.verdict.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Lemma1Report:
        return cls(d["max_n"], d["graphs_checked"], d["pairs_checked"], tuple(tuple(v) for v in d["violations"]))


def check_lemma1(max_n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> Lemma1Report:
    """Adding any missing edge to a connected graph strictly increases CEI, for all orders 2..max_n."""
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    _check_cap(max_n, cap)
    graphs = pairs = 0
    violations = []
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n, cap, workers):
            graphs += 1
            base = cei(g)
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    pairs += 1
                    if not cei(add_edge(g, u, v)) > base:
                        violations.append((graph6.encode(g), u, v))
    return Lemma1Report(max_n, graphs, pairs, tuple(violations))
