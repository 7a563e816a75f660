"""Command-line surface: parse polynomials, run analyses, emit JSON or DOT.

Exit codes: 0 success, 2 parse error, 3 route not applicable to the input,
4 internal invariant violation (including scan-detected property failures).
JSON payloads are built with fixed key order, so output is byte-deterministic
for a fixed input and version.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .decomp import (
    NotApplicable,
    all_mtos_quochains,
    enumerate_mtos,
    mtos_quochain,
    prime_factorize_small,
    quochains_isomorphic,
    three_vertex_prime_check,
    unique_mtos_decomposition,
)
from .graph import GraphInvariantError, PQGraph, fundamental_graph, q_fact_graph
from .qfact import q_factorization
from .snakes import (
    has_snake_support,
    monochromatic_equivalence_report,
    poly_is_prime_snake,
    poly_is_snake,
)
from .textio import ParseError, parse_poly
from .weights import DrinfeldPolynomial


def _poly_json(p: DrinfeldPolynomial) -> list[dict]:
    return [{"i": w.i, "a": w.a, "m": m} for w, m in p.items()]


def _graph_json(g: PQGraph) -> dict:
    return {
        "diagram": f"A{g.diagram.n}",
        "vertices": [
            {"id": v, "i": k.i, "a": k.a, "r": k.r} for v, k in sorted(g.labels().items())
        ],
        "arrows": sorted([t, h] for t, h in g.arrows),
    }


def _graph_dot(g: PQGraph) -> str:
    lines = ["digraph pqgraph {"]
    for v, k in sorted(g.labels().items()):
        lines.append(f'  v{v} [label="kr({k.i},{k.a},{k.r})#{v}"];')
    for t, h in sorted(g.arrows):
        lines.append(f"  v{t} -> v{h};")
    lines.append("}")
    return "\n".join(lines)


def _graph_of_kind(p: DrinfeldPolynomial, kind: str) -> PQGraph:
    g = fundamental_graph(p) if kind == "fund" else q_fact_graph(p)
    g.verify()
    return g


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _factorization_json(p: DrinfeldPolynomial, result) -> dict:
    return {
        "diagram": f"A{p.diagram.n}",
        "status": result.status,
        "factors": [_poly_json(f) for f in result.factors],
    }


# -- subcommand handlers -----------------------------------------------------


def _cmd_qfact(args) -> int:
    _, p = parse_poly(args.poly)
    _emit(
        {
            "diagram": f"A{p.diagram.n}",
            "qfactors": [{"i": k.i, "a": k.a, "r": k.r} for k in q_factorization(p)],
        }
    )
    return 0


def _cmd_graph(args) -> int:
    _, p = parse_poly(args.poly)
    g = _graph_of_kind(p, args.kind)
    if args.dot:
        print(_graph_dot(g))
    else:
        payload = _graph_json(g)
        payload["kind"] = args.kind
        _emit(payload)
    return 0


def _cmd_is_prime_snake(args) -> int:
    _, p = parse_poly(args.poly)
    _emit({"is_snake": poly_is_snake(p), "is_prime_snake": poly_is_prime_snake(p)})
    return 0


def _cmd_snake_support(args) -> int:
    _, p = parse_poly(args.poly)
    _emit({"snake_support": has_snake_support(p)})
    return 0


def _cmd_mtos(args) -> int:
    _, p = parse_poly(args.poly)
    g = _graph_of_kind(p, args.kind)
    _emit(
        {
            "diagram": f"A{p.diagram.n}",
            "kind": args.kind,
            "mtos": [sorted(s) for s in enumerate_mtos(g)],
        }
    )
    return 0


def _cmd_quochains(args) -> int:
    _, p = parse_poly(args.poly)
    g = _graph_of_kind(p, args.kind)
    if args.all:
        qs = all_mtos_quochains(g, bound=args.bound)
        iso = all(quochains_isomorphic(q, qs[0], g) for q in qs[1:])
        _emit(
            {
                "diagram": f"A{p.diagram.n}",
                "kind": args.kind,
                "count": len(qs),
                "all_isomorphic": iso,
                "quochains": [[sorted(part) for part in q] for q in qs],
            }
        )
    else:
        q = mtos_quochain(g)
        _emit(
            {
                "diagram": f"A{p.diagram.n}",
                "kind": args.kind,
                "quochain": [sorted(part) for part in q],
            }
        )
    return 0


def _cmd_factorize(args) -> int:
    _, p = parse_poly(args.poly)
    result = prime_factorize_small(p)
    if not p.is_identity and result.product() != p:
        raise GraphInvariantError("factor product does not recover the input")
    _emit(_factorization_json(p, result))
    return 0


def _cmd_check3(args) -> int:
    _, p = parse_poly(args.poly)
    result = three_vertex_prime_check(p)
    _emit(_factorization_json(p, result))
    return 0


def _cmd_fuse(args) -> int:
    _, p = parse_poly(args.poly)
    g = _graph_of_kind(p, args.kind)
    if args.v not in g.labels() or args.w not in g.labels():
        raise NotApplicable(f"vertex ids {args.v},{args.w} not in the graph")
    try:
        fused = g.fuse_vertices(args.v, args.w)
    except ValueError as e:
        raise NotApplicable(str(e)) from None
    fused.verify()
    payload = _graph_json(fused)
    payload["kind"] = args.kind
    payload["pure"] = len(fused) < len(g)
    _emit(payload)
    return 0


# -- the property-battery sweep ----------------------------------------------

_BOUND_DEFAULTS = {
    "n": 3,
    "max-factors": 6,
    "center-lo": -8,
    "center-hi": 8,
    "count": 100,
    "schedules": 8,
    "mtos-bound": 12,
    "snake": 0,
}


def _parse_bounds(text: str | None) -> dict:
    bounds = dict(_BOUND_DEFAULTS)
    if not text:
        return bounds
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        if key not in bounds:
            raise ParseError(f"unknown bounds key {key!r}", 0)
        try:
            bounds[key] = int(value)
        except ValueError:
            raise ParseError(f"bounds value for {key!r} must be an integer", 0) from None
    return bounds


def _scan_one(p: DrinfeldPolynomial, seed, bounds, violations, candidates) -> None:
    from .weights import kr_expand_all

    def flag(kind: str, detail: str) -> None:
        violations.append({"kind": kind, "poly": _poly_json(p), "detail": detail})

    qf = q_factorization(p)
    if kr_expand_all(p.diagram, qf) != p:
        flag("qfact-roundtrip", "expansion product differs from input")
    try:
        if oracle.brute_qfact(p, trials=bounds["schedules"], seed=seed) != qf:
            flag("qfact-confluence", "random schedules disagree with worklist order")
    except oracle.ConfluenceError as e:
        flag("qfact-confluence", str(e))

    gf = fundamental_graph(p)
    if len(gf) <= bounds["mtos-bound"]:
        if sorted(enumerate_mtos(gf), key=sorted) != oracle.brute_mtos(gf):
            flag("mtos-oracle", "path enumeration disagrees with subset scan")
        for path in oracle.maximal_directed_paths(gf):
            if not oracle.path_p_bounds_hold(gf, path):
                flag("lineps", f"gap-parameter bounds fail on path {list(path)}")

    gq = q_fact_graph(p)
    if not oracle.divisibility_pairs_incomparable(gq):
        flag("noto", "a dividing q-factor pair is comparable")

    result = prime_factorize_small(p)
    if not p.is_identity and result.product() != p:
        flag("factor-product", f"status {result.status}")
    if result.status in ("prime", "snake-support-route") and has_snake_support(p):
        if not all(poly_is_prime_snake(f) for f in result.factors):
            flag("factor-prime-snake", "a snake-route factor is not a prime snake")

    if len(p.support()) == 1:
        report = monochromatic_equivalence_report(p)
        if not report.all_agree():
            flag("monochrome-equivalence", str(report))
        if result.status == "unknown":
            flag("monochrome-coverage", "single-node input fell through to unknown")
        else:
            expected = sorted(oracle.iterated_bar_factorization(p), key=repr)
            if sorted(result.factors, key=repr) != expected:
                flag("monochrome-oracle", "factors differ from iterated radical peeling")

    if result.status == "unknown" and len(gf) <= bounds["mtos-bound"]:
        if unique_mtos_decomposition(gf, bound=bounds["mtos-bound"]):
            candidates.append(_poly_json(p))


def _cmd_scan(args) -> int:
    bounds = _parse_bounds(args.bounds)
    violations: list[dict] = []
    candidates: list = []
    for idx in range(bounds["count"]):
        sample_seed = f"{args.seed}:{idx}"
        p = oracle.random_drinfeld(
            sample_seed,
            n=bounds["n"],
            max_factors=bounds["max-factors"],
            center_lo=bounds["center-lo"],
            center_hi=bounds["center-hi"],
            snake_support_only=bool(bounds["snake"]),
        )
        _scan_one(p, sample_seed, bounds, violations, candidates)
    _emit(
        {
            "seed": args.seed,
            "bounds": bounds,
            "samples": bounds["count"],
            "violations": violations,
            "mtos_unique_but_unfactored": candidates,
        }
    )
    return 4 if violations else 0


# -- argument plumbing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfgraph",
        description="q-factorization graphs, snake classification, and prime factorization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, poly=True):
        sp = sub.add_parser(name, help=help_text)
        if poly:
            sp.add_argument("poly", help='polynomial text, e.g. "A3; w[1,3] w[2,0] w[3,3]"')
        sp.set_defaults(handler=handler)
        return sp

    add("qfact", _cmd_qfact, "the q-factorization as a JSON list of KR factors")

    sp = add("graph", _cmd_graph, "vertex/arrow JSON or DOT for a factorization graph")
    sp.add_argument("--kind", choices=("fund", "qfact"), default="fund")
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")

    add("is-prime-snake", _cmd_is_prime_snake, "snake / prime-snake verdict for the polynomial")
    add("snake-support", _cmd_snake_support, "whether the radical is a prime snake polynomial")

    sp = add("mtos", _cmd_mtos, "all maximal totally ordered vertex sets")
    sp.add_argument("--kind", choices=("fund", "qfact"), default="fund")

    sp = add("quochains", _cmd_quochains, "greedy or exhaustive mtos-quochains")
    sp.add_argument("--all", action="store_true", help="enumerate all quochains with an isomorphism verdict")
    sp.add_argument("--kind", choices=("fund", "qfact"), default="fund")
    sp.add_argument("--bound", type=int, default=14, help="vertex bound for exhaustive enumeration")

    add("factorize", _cmd_factorize, "prime factorization via the dispatch routes")
    add("check3", _cmd_check3, "three-vertex route only; exits 3 on other inputs")

    sp = add("fuse", _cmd_fuse, "fuse two special-position vertices")
    sp.add_argument("v", type=int)
    sp.add_argument("w", type=int)
    sp.add_argument("--kind", choices=("fund", "qfact"), default="fund")

    sp = sub.add_parser("scan", help="seeded property-battery sweep; reports violations")
    sp.add_argument("--seed", default="0")
    sp.add_argument(
        "--bounds",
        default=None,
        help="comma list of k=v with keys "
        "n, max-factors, center-lo, center-hi, count, schedules, mtos-bound, snake",
    )
    sp.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except NotApplicable as e:
        print(f"not applicable: {e}", file=sys.stderr)
        return 3
    except GraphInvariantError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return 4


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
