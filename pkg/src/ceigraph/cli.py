"""Command-line front end.

    ceigraph compute   [--index cei|eci|all] [--input FILE]
    ceigraph construct g-nkd|h-family|s-alpha|m-delta --n N --k K [--d D] [--s S] [--alpha A] [--delta D]
    ceigraph enumerate --class diam|alpha|delta --n N --k K --value V
    ceigraph verify    t1|t2|t3|lemma1 ...

Exit codes: 0 success / CONFIRMED, 1 usage or input error,
2 REFUTED, 3 EMPTY_CLASS.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__, graph6
from .constructions import (
    ParameterError,
    build_G_nkd,
    build_H_nkd,
    build_M_ndelta,
    build_S_nalpha,
    enumerate_H_family,
)
from .graph import GraphError
from .invariants import ClassKind, ClassSpec, Connectivity, cei, eci, summarize
from .search import (
    DEFAULT_CAP,
    Verdict,
    check_lemma1,
    enumerate_class,
    format_fraction,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)

ENV_PREFIX = "CEIGRAPH_"
EXIT_OK, EXIT_ERROR, EXIT_REFUTED, EXIT_EMPTY = 0, 1, 2, 3
VERDICT_EXIT = {Verdict.CONFIRMED: EXIT_OK, Verdict.REFUTED: EXIT_REFUTED, Verdict.EMPTY_CLASS: EXIT_EMPTY}
CLASS_KINDS = {"diam": ClassKind.DIAMETER, "alpha": ClassKind.INDEPENDENCE, "delta": ClassKind.MINDEGREE}


class UsageError(Exception):
    pass


@dataclass
class ReportDocument:
    command: str
    parameters: dict
    results: dict | list
    version: str = __version__
    timing: dict | None = field(default=None)

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "version": self.version,
        }
        if include_timing and self.timing is not None:
            d["timing"] = self.timing
        return d

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        d = json.loads(text)
        return cls(d["command"], d["parameters"], d["results"], d["version"], d.get("timing"))


def _decimal(x: Fraction) -> str:
    return f"{x.numerator / x.denominator:.6f}"


def compute_record(line: str, index: str) -> dict:
    """Invariant record for one graph6 line; errors become an ``error`` field."""
    rec: dict = {"graph6": line}
    try:
        g = graph6.decode(line)
        rec["n"] = g.n
        rec["edges"] = g.num_edges
        if index == "eci":
            rec["eci"] = eci(g)
        elif index == "cei":
            c = cei(g)
            rec["cei"] = format_fraction(c)
            rec["cei_decimal"] = _decimal(c)
        else:
            s = summarize(g)
            rec.update(
                cei=format_fraction(s.cei),
                cei_decimal=_decimal(s.cei),
                eci=s.eci,
                diameter=s.diameter,
                radius=s.radius,
                min_degree=s.min_degree,
                max_degree=s.max_degree,
                connectivity=s.connectivity,
                independence_number=s.independence_number,
            )
    except (GraphError, ValueError) as exc:
        return {"graph6": line, "error": str(exc)}
    return rec


def cmd_compute(lines: Iterable[str], index: str, out) -> int:
    status = EXIT_OK
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        rec = compute_record(line, index)
        if "error" in rec:
            status = EXIT_ERROR
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    return status


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def cmd_construct(args: argparse.Namespace, out) -> int:
    fam = args.family
    if fam == "g-nkd":
        n, k, d = _need(args, "n", "k", "d")
        graphs = [build_G_nkd(n, k, d)]
    elif fam in ("h-family", "h-nkd"):
        n, k, d = _need(args, "n", "k", "d")
        graphs = enumerate_H_family(n, k, d) if args.s is None else [build_H_nkd(n, k, d, args.s)]
    elif fam == "s-alpha":
        n, k, alpha = _need(args, "n", "k", "alpha")
        graphs = [build_S_nalpha(n, k, alpha)]
    else:
        n, k, delta = _need(args, "n", "k", "delta")
        graphs = [build_M_ndelta(n, k, delta)]
    for g in graphs:
        out.write(graph6.encode(g) + "\n")
    return EXIT_OK


def _open_source(path: str | None) -> list[str] | None:
    if path is None:
        return None
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def cmd_enumerate(args: argparse.Namespace, out, err) -> int:
    n, k, value = _need(args, "n", "k", "value")
    spec = ClassSpec(CLASS_KINDS[args.cls], n, k, value, args.connectivity or Connectivity.AT_LEAST)
    count = 0
    for g in enumerate_class(spec, _open_source(args.input), args.cap, args.workers):
        out.write(graph6.encode(g) + "\n")
        count += 1
    err.write(json.dumps({"count": count, "spec": spec.to_dict()}, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    start = time.perf_counter()
    theorem = args.theorem
    params: dict = {"cap": args.cap, "input": args.input}
    source = _open_source(args.input)
    conn = args.connectivity
    if theorem == "lemma1":
        (max_n,) = _need(args, "max_n")
        params["max_n"] = max_n
        rep = check_lemma1(max_n, args.cap, args.workers)
        results, verdict, search_ms = rep.to_dict(), rep.verdict, None
    else:
        if theorem == "t1":
            d = args.d if args.d is not None else args.value
            if d is None:
                raise UsageError("verify t1 requires --d")
            n, k = _need(args, "n", "k")
            params.update(n=n, k=k, d=d, connectivity=(conn or Connectivity.AT_LEAST.value))
            rep = verify_theorem1(n, k, d, source, args.cap, args.workers, params["connectivity"])
        elif theorem == "t2":
            alpha = args.alpha if args.alpha is not None else args.value
            if alpha is None:
                raise UsageError("verify t2 requires --alpha")
            n, k = _need(args, "n", "k")
            params.update(n=n, k=k, alpha=alpha, connectivity=(conn or Connectivity.EXACT.value))
            rep = verify_theorem2(n, k, alpha, source, args.cap, args.workers, params["connectivity"])
        else:
            delta = args.delta if args.delta is not None else args.value
            if delta is None:
                raise UsageError("verify t3 requires --delta")
            n, k = _need(args, "n", "k")
            params.update(n=n, k=k, delta=delta, connectivity=(conn or Connectivity.EXACT.value))
            rep = verify_theorem3(n, k, delta, source, args.cap, args.workers, params["connectivity"])
        results, verdict, search_ms = rep.to_dict(), rep.verdict, rep.observed.runtime_ms
    timing = {"elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3)}
    if search_ms is not None:
        timing["search_ms"] = round(search_ms, 3)
    doc = ReportDocument(f"verify {theorem}", params, results, timing=timing)
    out.write(doc.to_json(include_timing=not args.no_timing) + "\n")
    return VERDICT_EXIT[verdict]


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 rather than argparse's 2, which means REFUTED here
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ceigraph", description="Connective eccentricity index toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--value", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--alpha", type=int)
        p.add_argument("--delta", type=int)
        p.add_argument("--max-n", dest="max_n", type=int)
        p.add_argument("--cap", type=int, help=f"enumeration order cap (env {ENV_PREFIX}CAP, default {DEFAULT_CAP})")
        p.add_argument("--workers", type=int, help=f"worker processes (env {ENV_PREFIX}WORKERS, default: CPU count)")
        p.add_argument("--input", help=f"graph6 stream, '-' for stdin (env {ENV_PREFIX}INPUT)")
        p.add_argument("--connectivity", choices=[c.value for c in Connectivity])

    p = sub.add_parser("compute", help="invariants for graph6 lines")
    p.add_argument("--index", choices=["cei", "eci", "all"], default="all")
    p.add_argument("--input", help=f"graph6 file, '-' or omitted for stdin (env {ENV_PREFIX}INPUT)")

    p = sub.add_parser("construct", help="emit an extremal construction as graph6")
    p.add_argument("family", choices=["g-nkd", "h-family", "h-nkd", "s-alpha", "m-delta"])
    common(p)

    p = sub.add_parser("enumerate", help="canonical graph6 of every class member")
    p.add_argument("--class", dest="cls", choices=sorted(CLASS_KINDS), required=True)
    common(p)

    p = sub.add_parser("verify", help="exhaustively check a theorem or the edge-addition lemma")
    p.add_argument("theorem", choices=["t1", "t2", "t3", "lemma1"])
    p.add_argument("--no-timing", action="store_true", help="omit the timing section for byte-stable output")
    common(p)
    return parser


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        if getattr(args, "input", None) is None:
            args.input = os.environ.get(ENV_PREFIX + "INPUT") or None
        if args.command == "compute":
            if args.input in (None, "-"):
                return cmd_compute(sys.stdin, args.index, out)
            with open(args.input) as fh:
                return cmd_compute(fh, args.index, out)
        args.cap = args.cap if args.cap is not None else _env_int("CAP", DEFAULT_CAP)
        args.workers = args.workers if args.workers is not None else _env_int("WORKERS", os.cpu_count() or 1)
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out, err)
        return cmd_verify(args, out)
    except (UsageError, ParameterError, GraphError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
