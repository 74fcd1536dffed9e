"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 a verification or agreement check
failed, 3 a brute-force size bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import kernels
from .arcs import (
    MAX_WALK_ARCS,
    build_arcs,
    check_structure,
    matrix_B,
    matrix_J,
    matrix_JT,
    matrix_T,
    matrix_to_json,
    matrix_to_text,
)
from .errors import BoundExceededError, GraphFormatError, NotGraphicalError, PoleError
from .graph import Graph, parse_edge_list, random_graph, realize_degree_sequence
from .oracles import verify_minor_expansion, verify_minor_structure, verify_trace_identity
from .stars import dk_combinatorial, reduced_poly_combinatorial
from .zeta import (
    ReducedZetaResult,
    bartholdi_evaluate,
    ihara_reciprocal,
    random_rational_points,
    reduced_bartholdi_det,
    reduced_bartholdi_product,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_BOUND = 0, 1, 2, 3

LEVELS = {
    "quick": {"max_arcs": 12, "k_max": 4, "points": 3},
    "deep": {"max_arcs": 16, "k_max": 6, "points": 20},
}


class InputError(Exception):
    pass


def _parse_degrees(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"bad degree list {text!r}") from None


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "degrees", None):
        return realize_degree_sequence(_parse_degrees(args.degrees)), "degree_sequence"
    if getattr(args, "input", None):
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(str(exc)) from None
        return parse_edge_list(text), "edge_list"
    raise InputError("give --input FILE or --degrees d1,d2,...")


def _warn_md2(g: Graph):
    if g.n and g.min_degree() < 2:
        print(
            "warning: graph has a vertex of degree < 2; the zeta-function reading"
            " assumes minimum degree 2 (polynomials are still exact)",
            file=sys.stderr,
        )


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}") from None


def cmd_reduced(args) -> int:
    g, kind = _load_graph(args)
    _warn_md2(g)
    runners = {
        "det": lambda: reduced_bartholdi_det(g, args.charpoly),
        "stars": lambda: reduced_poly_combinatorial(g),
        "product": lambda: reduced_bartholdi_product(g),
    }
    if args.method != "all":
        r = runners[args.method]()
        payload = r.to_dict()
        payload["input_kind"] = kind
        _emit(args, payload, r.to_text())
        return EXIT_OK

    results = {name: run() for name, run in runners.items()}
    ref = results["det"]
    for name, r in results.items():
        if r.poly != ref.poly:
            mismatch = next(
                k for k in range(2 * g.m + 1) if r.coefficient_d(k) != ref.coefficient_d(k)
            )
            diff = {
                "k": mismatch,
                "det": str(ref.coefficient_d(mismatch)),
                name: str(r.coefficient_d(mismatch)),
            }
            print(f"pipelines disagree at d_{mismatch}: {diff}", file=sys.stderr)
            print(json.dumps({"agreement": False, "mismatch": diff}, indent=2))
            return EXIT_VERIFY
    out = ReducedZetaResult(g.n, g.m, "all", ref.poly)
    payload = out.to_dict()
    payload.update({"agreement": True, "methods": list(results), "input_kind": kind})
    _emit(args, payload, out.to_text() + "\nagreement: true (det, stars, product)")
    return EXIT_OK


def cmd_coeffs(args) -> int:
    g, kind = _load_graph(args)
    _warn_md2(g)
    b = dk_combinatorial(g, args.k, prune=not args.all_partitions)
    payload = b.to_dict()
    payload["input_kind"] = kind
    _emit(args, payload, b.to_table())
    return EXIT_OK


def cmd_ihara(args) -> int:
    g, kind = _load_graph(args)
    _warn_md2(g)
    p = ihara_reciprocal(g, args.charpoly)
    payload = {
        "n": g.n,
        "m": g.m,
        "coeffs_ascending": [str(c) for c in p.coeffs],
        "input_kind": kind,
    }
    _emit(args, payload, p.format("t"))
    return EXIT_OK


def cmd_bartholdi_eval(args) -> int:
    g, _ = _load_graph(args)
    _warn_md2(g)
    ev = bartholdi_evaluate(g, _rational(args.u), _rational(args.t))
    payload = ev.to_dict()
    payload["ihara_at_t"] = str(ihara_reciprocal(g)(ev.t)) if ev.u == 0 else None
    lines = [f"edge form:   {ev.edge_value}", f"vertex form: {ev.vertex_value if ev.vertex_value is not None else 'pole'}"]
    if payload["ihara_at_t"] is not None:
        lines.append(f"ihara(t):    {payload['ihara_at_t']}")
    _emit(args, payload, "\n".join(lines))
    if ev.agree is False:
        print("edge and vertex forms disagree", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def run_verify(g: Graph, level: str, seed: int, max_arcs: int | None = None) -> dict:
    """All consistency checks for one graph, as a JSON-ready dict."""
    cfg = dict(LEVELS[level])
    if max_arcs is not None:
        cfg["max_arcs"] = max_arcs
    a = build_arcs(g)
    T, J = matrix_T(a), matrix_J(g.m)
    reports = [check_structure(T, J, g)]

    det = reduced_bartholdi_det(g)
    polys = {
        "det_faddeev": det.poly,
        "det_berkowitz": reduced_bartholdi_det(g, "berkowitz").poly,
        "stars": reduced_poly_combinatorial(g).poly,
        "product": reduced_bartholdi_product(g).poly,
    }
    pipelines = {"name": "pipelines", "ok": len(set(polys.values())) == 1,
                 "polys": {k: p.format("u") for k, p in polys.items()}}

    evals = []
    for u, t in random_rational_points(cfg["points"], seed):
        ev = bartholdi_evaluate(g, u, t)
        evals.append(ev.to_dict())
    ihara = ihara_reciprocal(g)
    for _, t in random_rational_points(cfg["points"], seed + 1):
        ev = bartholdi_evaluate(g, 0, t)
        evals.append({**ev.to_dict(), "ihara": str(ihara(t)), "ihara_match": ihara(t) == ev.edge_value})
    evals_ok = all(e["agreement"] is not False and e.get("ihara_match", True) for e in evals)

    skipped = {}
    if a.size <= cfg["max_arcs"]:
        reports.append(verify_minor_expansion(g, cfg["max_arcs"]))
        reports.append(verify_minor_structure(T, a, seed, cfg["max_arcs"]))
    else:
        skipped["minors"] = f"{a.size} arcs exceeds bound {cfg['max_arcs']}"
    if a.size <= MAX_WALK_ARCS:
        reports.append(verify_trace_identity(g, cfg["k_max"]))
    else:
        skipped["trace_identity"] = f"{a.size} arcs exceeds walk bound {MAX_WALK_ARCS}"

    out = {
        "n": g.n,
        "m": g.m,
        "level": level,
        "backend": kernels.BACKEND,
        "reports": [r.to_dict() for r in reports],
        "pipelines": pipelines,
        "evaluations": {"ok": evals_ok, "points": evals},
        "skipped": skipped,
    }
    out["ok"] = all(r.ok for r in reports) and pipelines["ok"] and evals_ok
    return out


def cmd_verify(args) -> int:
    g, _ = _load_graph(args)
    _warn_md2(g)
    out = run_verify(g, args.level, args.seed, args.max_arcs)
    if args.require_oracles and out["skipped"]:
        raise BoundExceededError("; ".join(f"{k}: {v}" for k, v in out["skipped"].items()))
    lines = [f"{r['name']}: {'pass' if r['ok'] else 'FAIL'}" for r in out["reports"]]
    lines.append(f"pipelines: {'pass' if out['pipelines']['ok'] else 'FAIL'}")
    lines.append(f"evaluations: {'pass' if out['evaluations']['ok'] else 'FAIL'}")
    lines += [f"{k}: skipped ({v})" for k, v in out["skipped"].items()]
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if out["ok"] else EXIT_VERIFY


def cmd_realize(args) -> int:
    g = realize_degree_sequence(_parse_degrees(args.degrees))
    _emit(args, {"n": g.n, "edges": [list(e) for e in g.edges]}, g.to_edge_list().rstrip("\n"))
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        g = random_graph(args.n, Fraction(args.p), args.seed)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    _emit(args, {"n": g.n, "edges": [list(e) for e in g.edges]}, g.to_edge_list().rstrip("\n"))
    return EXIT_OK


def cmd_matrix(args) -> int:
    g, _ = _load_graph(args)
    a = build_arcs(g)
    M = {"T": lambda: matrix_T(a), "J": lambda: matrix_J(g.m), "B": lambda: matrix_B(a),
         "JT": lambda: matrix_JT(a)}[args.which]()
    if args.format == "json":
        print(matrix_to_json(M))
    else:
        sys.stdout.write(matrix_to_text(M))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bartholdi", description="Exact reduced Bartholdi and Ihara zeta polynomials."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--input", "-i", help="edge-list file ('-' for stdin)")
        src.add_argument("--degrees", help="comma-separated degree sequence (realized by Havel-Hakimi)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.set_defaults(func=func)
        return p

    p = graph_cmd("reduced", cmd_reduced, "reduced Bartholdi polynomial det(T + uJ)")
    p.add_argument("--method", choices=("det", "stars", "product", "all"), default="det")
    p.add_argument("--charpoly", choices=("faddeev", "berkowitz"), default="faddeev")

    p = graph_cmd("coeffs", cmd_coeffs, "per-partition breakdown of d_k")
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--all-partitions", action="store_true",
                   help="list every partition of k, including ones with no legal sets")

    p = graph_cmd("ihara", cmd_ihara, "reciprocal Ihara zeta det(I - tT)")
    p.add_argument("--charpoly", choices=("faddeev", "berkowitz"), default="faddeev")

    p = graph_cmd("bartholdi-eval", cmd_bartholdi_eval, "evaluate the two-variable reciprocal Bartholdi zeta")
    p.add_argument("--u", required=True)
    p.add_argument("--t", required=True)

    p = graph_cmd("verify", cmd_verify, "run structural checks, oracles and pipeline agreement")
    p.add_argument("--level", choices=tuple(LEVELS), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-arcs", type=int, default=None, help="override the brute-force arc bound")
    p.add_argument("--require-oracles", action="store_true",
                   help="exit 3 instead of skipping brute-force checks that exceed their bound")

    p = graph_cmd("matrix", cmd_matrix, "dump T, J, B or JT")
    p.add_argument("--which", choices=("T", "J", "B", "JT"), default="T")

    p = sub.add_parser("realize", help="Havel-Hakimi realization of a degree sequence")
    p.add_argument("--degrees", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("random", help="seeded Erdős–Rényi graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True, help="edge probability, e.g. 1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphFormatError, NotGraphicalError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
