"""Command-line frontend.

Subcommands: analyze, bounds, certify, extract, search, verify-subset.
Each produces a Report rendered as key/value text (default) or JSON
(--json).  Exit codes: 0 ok, 1 a checked structural property failed on the
input, 2 malformed input or parameters.  Rationals are written P/Q on the
command line and in output; bound values additionally carry a rounded
decimal, with the exact form authoritative.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import algebra, bounds, chi_tau, extraction, search
from .core import Hypergraph, is_clique, parse_hypergraph
from .errors import HycliqueError, InputError, PropertyViolation
from .intervals import Interval, decimal_str

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class Report:
    command: str
    status: str  # "ok" | "violation" | "input-error"
    payload: dict[str, Any]
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"command": self.command, "status": self.status,
                "payload": self.payload, "warnings": list(self.warnings)}


def _frac(x: Fraction) -> dict[str, Any]:
    return {"rational": f"{x.numerator}/{x.denominator}",
            "decimal": decimal_str(x)}


def _interval(x: Interval) -> dict[str, Any]:
    return {"lo": f"{x.lo.numerator}/{x.lo.denominator}",
            "hi": f"{x.hi.numerator}/{x.hi.denominator}",
            "decimal": decimal_str(x)}


def _hypergraph(h: Hypergraph) -> dict[str, Any]:
    return {"n": h.n, "v": h.v, "edges": [list(e) for e in h.edges]}


def parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            p, q = text.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected a rational P/Q, got {text!r}") from None


def _load(path: str) -> tuple[Hypergraph, tuple[str, ...]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    parsed = parse_hypergraph(text)
    warnings = ()
    if parsed.duplicate_count:
        warnings = (f"removed {parsed.duplicate_count} duplicate edge line(s)",)
    return parsed.hypergraph, warnings


def _cmd_analyze(args: argparse.Namespace) -> Report:
    h, warnings = _load(args.file)
    verdict = is_clique(h)
    payload: dict[str, Any] = {
        "n": h.n, "v": h.v, "edge_count": h.edge_count,
        "is_clique": verdict.is_clique,
    }
    if verdict.witness is not None:
        payload["disjoint_pair"] = list(verdict.witness)
    coloring = chi_tau.chromatic_number(h, cap=4)
    cover = chi_tau.covering_number(h)
    payload["chi"] = {"value": coloring.chi, "cap": 4}
    payload["tau"] = cover.tau
    payload["transversal"] = sorted(cover.transversal)
    checks: list[dict[str, Any]] = []

    def check(name: str, ok: bool) -> None:
        checks.append({"name": name, "ok": ok})

    if verdict.is_clique:
        check("clique chromatic number is 2 or 3", coloring.chi in (2, 3))
        check(f"covering number at most n = {h.n}", cover.tau <= h.n)
        if coloring.chi == 3:
            check(f"chromatic number 3 forces covering number n = {h.n}",
                  cover.tau == h.n)
            check(f"vertex count within 4^n = {4 ** h.n}",
                  chi_tau.vertex_bound_holds(h))
    payload["checks"] = checks
    status = "ok" if all(c["ok"] for c in checks) else "violation"
    return Report("analyze", status, payload, warnings)


def _cmd_bounds(args: argparse.Namespace) -> Report:
    c = parse_rational(args.c) if args.c is not None else None
    report = bounds.bound_report(args.n, m=args.m, v=args.v, c=c)
    payload: dict[str, Any] = {
        "n": report.n,
        "t1_lower": report.t1_lower,
        "t1_upper": report.t1_upper,
    }
    if report.spectrum is not None:
        s = report.spectrum
        payload["m"] = s.m
        payload["q"] = s.q
        payload["spectrum"] = sorted(s.members)
        payload["tau_amp"] = _frac(s.tau_amp)
        payload["a_value"] = report.a_value
        payload["a_prime"] = _interval(report.a_prime)
        payload["t3_bound"] = report.t3_bound
    if report.t2_form is not None:
        payload["t2_form"] = _interval(report.t2_form)
    if report.theorem4 is not None:
        t4 = report.theorem4
        payload["theorem4"] = {
            "c": _frac(t4.c),
            "d": _interval(t4.d),
            "closed_bound": _interval(t4.closed_bound),
            "a_raw": t4.a_raw,
            "a_clamped": t4.a_clamped,
            "finite_bound": _frac(t4.finite_bound),
        }
    return Report("bounds", "ok", payload)


def _cmd_certify(args: argparse.Namespace) -> Report:
    h, warnings = _load(args.file)
    source = None
    if args.m is not None:
        source = bounds.spectrum(h.n, args.m)
        roots = source.polynomial_roots()
    else:
        try:
            roots = frozenset(int(tok) for tok in args.roots.split(","))
        except ValueError:
            raise InputError(f"--L expects comma-separated integers, got {args.roots!r}") from None
    cert = algebra.rank_certificate(h.edges, roots, h.v, h.n, source=source)
    payload: dict[str, Any] = {
        "family_size": cert.s,
        "v": cert.v,
        "n": cert.n,
        "roots": sorted(cert.roots),
        "rank": cert.rank,
        "independent": cert.independent,
        "diag_ok": cert.diag_ok,
        "dim_bound": cert.dim_bound,
        "size_within_dim_bound": cert.s <= cert.dim_bound,
    }
    if cert.loose_dim_bound is not None:
        payload["loose_dim_bound"] = cert.loose_dim_bound
    if cert.conflict is not None:
        payload["conflict_pair"] = list(cert.conflict)
    return Report("certify", "ok", payload, warnings)


def _step_payload(step: extraction.ExtractionStep) -> dict[str, Any]:
    return {
        "kind": step.kind,
        "added": list(step.added),
        "j_before": step.j_before,
        "j_after": step.j_after,
        "pair": [step.b1, step.b2],
        "intersection_size": step.intersection_size,
        "e1_size": step.e1_size,
        "e2_size": step.e2_size,
        "claimed_factor": _frac(step.claimed_factor),
        "achieved_factor": _frac(step.achieved_factor),
        "split_estimate": _interval(step.split_estimate),
    }


def _cmd_extract(args: argparse.Namespace) -> Report:
    h, warnings = _load(args.file)
    t_num = parse_rational(args.threshold) if args.threshold is not None else None
    trace = extraction.run_extraction(h, args.m, threshold_numerator=t_num)
    payload = {
        "n": trace.n,
        "m": trace.m,
        "edge_count": trace.edge_count,
        "a_value": trace.a_value,
        "k_target": trace.k_target,
        "k": trace.k,
        "w_final": sorted(trace.w_final),
        "j_final": trace.j_final,
        "threshold_used": _frac(trace.threshold_used),
        "assembled_bound": _frac(trace.assembled_bound),
        "bound_holds": trace.edge_count <= trace.assembled_bound,
        "termination": trace.termination,
        "steps": [_step_payload(s) for s in trace.steps],
    }
    return Report("extract", "ok", payload, warnings)


def _cmd_search(args: argparse.Namespace) -> Report:
    budget = search.SearchBudget(seconds=args.budget, max_nodes=args.max_nodes)
    record = search.extremal_search(args.n, args.max_vertices, args.mode,
                                    budget=budget, seed=args.seed)
    payload: dict[str, Any] = {
        "n": record.n,
        "mode": record.mode,
        "v_cap": record.v_cap,
        "seed": record.seed,
        "best_size": record.best_size,
        "exhaustive": record.exhaustive,
        "nodes_explored": record.nodes_explored,
        "elapsed_seconds": round(record.elapsed, 3),
    }
    if record.best_instance is not None:
        payload["best_instance"] = _hypergraph(record.best_instance)
        payload["record_path"] = str(record.record_path)
    return Report("search", "ok", payload)


def _cmd_verify_subset(args: argparse.Namespace) -> Report:
    h, warnings = _load(args.file)
    report = search.verify_subset_bound(h, k_max=args.k_max)
    payload = {
        "n": report.n,
        "k_max": report.k_max,
        "rows": [{"k": r.k, "max_containment": r.max_containment, "cap": r.cap}
                 for r in report.rows],
    }
    return Report("verify-subset", "ok", payload, warnings)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyclique",
        description="Exact toolkit for n-uniform hypergraph cliques")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the report as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="clique / chromatic / covering report for a file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("bounds", parents=[common],
                       help="evaluate the bound catalog at (n, m, v, c)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--c", help="rational P/Q")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("certify", parents=[common],
                       help="rank certificate for the file's edge family")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--L", dest="roots", help="comma-separated intersection sizes")
    group.add_argument("--m", type=int, help="derive the root set from the (n, m) spectrum")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("extract", parents=[common],
                       help="run the extraction chain on a clique file")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--threshold", help="custom threshold numerator P/Q")
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("search", parents=[common],
                       help="extremal search for chi3 / tau-n cliques")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--mode", choices=search.MODES, required=True)
    p.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    p.add_argument("--max-nodes", type=int, help="node budget (reproducible)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("verify-subset", parents=[common],
                       help="check |E(W)| <= n^(n-k) on a chi=3 clique")
    p.add_argument("file")
    p.add_argument("--k-max", type=int)
    p.set_defaults(fn=_cmd_verify_subset)
    return parser


def execute(argv: list[str]) -> tuple[Report, int, bool]:
    """Run one invocation; returns (report, exit code, json flag) without printing."""
    args = _build_parser().parse_args(argv)
    try:
        report = args.fn(args)
    except InputError as exc:
        return Report(args.command, "input-error", {"error": str(exc)}), INPUT_ERROR, args.json
    except PropertyViolation as exc:
        return Report(args.command, "violation", {"error": str(exc)}), VIOLATION, args.json
    except HycliqueError as exc:
        return Report(args.command, "input-error", {"error": str(exc)}), INPUT_ERROR, args.json
    return report, OK if report.status == "ok" else VIOLATION, args.json


def _render_text(report: Report) -> str:
    lines = [f"command: {report.command}", f"status: {report.status}"]

    def emit(key: str, value: Any, indent: int) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            if set(value) == {"rational", "decimal"}:
                lines.append(f"{pad}{key}: {value['rational']} (~{value['decimal']})")
            elif set(value) == {"lo", "hi", "decimal"}:
                lines.append(f"{pad}{key}: [{value['lo']}, {value['hi']}] (~{value['decimal']})")
            else:
                lines.append(f"{pad}{key}:")
                for k2, v2 in value.items():
                    emit(k2, v2, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(value):
                emit(f"[{i}]", item, indent + 1)
        else:
            lines.append(f"{pad}{key}: {value}")

    for key, value in report.payload.items():
        emit(key, value, 1)
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report, code, json_mode = execute(argv)
    if json_mode:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
