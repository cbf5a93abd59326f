"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 construction error, 3 not found.
Every construction subcommand re-verifies its output before printing it.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decomposition import Decomposition, Q2Certificate
from .errors import CircDecompError, ConstructionFailed, InvalidSpec
from .gamma import GammaGraph, to_gamma
from .graph_core import CirculantSpec, MultiGraph, graph_from_json, to_dot, to_edge_list
from .lift import decompose_4regular_full
from .pairing import admissible_pairs, check_property_q
from .product import decompose_product
from .verify import (
    ORACLE_MAX_VERTICES,
    FailureKind,
    brute_force_decomposition,
    find_q2_certificate,
    verify_hamilton_decomposition,
    verify_q1,
    verify_q2_certificate,
)

EXIT_OK, EXIT_INVALID, EXIT_CONSTRUCTION, EXIT_NOT_FOUND = 0, 1, 2, 3


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSpec(f"cannot read {path}: {exc}") from exc


def load_any_graph(path: str) -> tuple[MultiGraph, CirculantSpec | None, GammaGraph | None]:
    """Graph JSON of type circulant, multigraph or gamma ({"alpha", "k", "c"})."""
    data = _read_json(path)
    if isinstance(data, dict) and data.get("type") == "gamma":
        try:
            gg = GammaGraph(int(data["alpha"]), int(data["k"]), int(data["c"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed gamma JSON: {exc}") from exc
        return gg.to_multigraph(), None, gg
    if not isinstance(data, dict):
        raise InvalidSpec("graph JSON must be an object")
    g, spec = graph_from_json(data)
    return g, spec, None


def _emit(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def cmd_pair(args, out) -> int:
    try:
        jumps = [int(x) for x in args.jumps.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidSpec(f"bad --jumps {args.jumps!r}") from exc
    pairing = check_property_q(CirculantSpec.of(args.n, jumps))
    _emit(pairing.to_json(), out)
    return EXIT_OK


def _decompose4_json(n: int, a: int, b: int, trace: bool) -> dict:
    r = decompose_4regular_full(n, a, b)
    report = verify_hamilton_decomposition(r.graph, r.decomposition)
    q1 = verify_q1(r.q1_gamma, r.decomposition.relabeled(r.q1_labels.group_to_pairs))
    q2 = r.certificate is not None and verify_q2_certificate(r.graph, r.decomposition, r.certificate)
    if not (report.ok and q1 and q2):
        raise ConstructionFailed(f"output for Circ({n}, {{{a}, {b}}}) did not re-verify")
    result = {
        "n": n,
        "jumps": [a, b],
        "cycles": [list(c) for c in r.decomposition.cycles],
        "certificate": r.certificate.to_json(),
        "q1_drawing": {"a": r.q1_labels.a, "b": r.q1_labels.b, **r.q1_gamma.to_json()},
    }
    if trace:
        result["trace"] = r.trace
    return result


def cmd_decompose4(args, out) -> int:
    if args.sweep:
        ok, failed = 0, []
        for n in range(6, args.n + 1, 2):
            for a, b in admissible_pairs(n):
                try:
                    _decompose4_json(n, a, b, False)
                    ok += 1
                except CircDecompError as exc:
                    failed.append({"n": n, "a": a, "b": b, "error": type(exc).__name__})
        _emit({"ok": ok, "failed": failed}, out)
        return EXIT_OK if not failed else EXIT_CONSTRUCTION
    if args.a is None or args.b is None:
        raise InvalidSpec("--a and --b are required unless --sweep is given")
    _emit(_decompose4_json(args.n, args.a, args.b, args.trace), out)
    return EXIT_OK


def _load_h_cycles(path: str) -> list[tuple[tuple[int, ...], int]]:
    """{"cycles": [[...], ...], "multiplicities": [...]} (multiplicities default to 1)."""
    data = _read_json(path)
    try:
        cycles = [tuple(int(v) for v in c) for c in data["cycles"]]
        mults = [int(m) for m in data.get("multiplicities", [1] * len(cycles))]
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InvalidSpec(f"malformed H cycles JSON: {exc}") from exc
    if len(mults) != len(cycles):
        raise InvalidSpec("multiplicities and cycles differ in length")
    return list(zip(cycles, mults))


def cmd_product(args, out) -> int:
    _, gspec, _ = load_any_graph(args.g)
    if gspec is None:
        raise InvalidSpec("--g must be a circulant graph")
    h, _, _ = load_any_graph(args.h)
    if args.h_cycles:
        h_cycles = _load_h_cycles(args.h_cycles)
    else:
        if h.vertex_count > ORACLE_MAX_VERTICES:
            raise InvalidSpec(f"--h-cycles required when H has more than {ORACLE_MAX_VERTICES} vertices")
        found = brute_force_decomposition(h)
        if found is None:
            raise InvalidSpec("H has no Hamilton decomposition")
        h_cycles = [(c, 1) for c in found.cycles]
    result = decompose_product(gspec, h, h_cycles)
    if not verify_hamilton_decomposition(result.host, result.cycles).ok:
        raise ConstructionFailed("product output did not re-verify")
    _emit(result.to_json(), out)
    return EXIT_OK


def _gamma_views(g: MultiGraph, spec: CirculantSpec | None, gg: GammaGraph | None):
    """Gamma drawings of the host, each with the map host vertex -> Gamma index.

    A two-jump circulant has two drawings, one per choice of vertical jump;
    Q1 is accepted in either.
    """
    if gg is not None:
        return [(gg, list(range(g.vertex_count)))]
    if spec is None or len(spec.jumps) != 2:
        raise InvalidSpec("--gamma needs a gamma graph or a circulant with two jumps")
    views = []
    for a, b in (spec.jumps, spec.jumps[::-1]):
        gamma, labels = to_gamma(spec.n, a, b)
        views.append((gamma, list(labels.group_to_pairs)))
    return views


def cmd_verify(args, out) -> int:
    g, spec, gg = load_any_graph(args.graph)
    data = _read_json(args.decomp)
    d = Decomposition.from_json(data)
    report = verify_hamilton_decomposition(g, d)
    if report.ok and isinstance(data, dict) and "certificate" in data:
        cert = Q2Certificate.from_json(data["certificate"])
        if not verify_q2_certificate(g, d, cert):
            report.add(FailureKind.Q2_INVALID, f"certificate {cert.to_json()} does not verify")
    if report.ok and args.gamma:
        views = _gamma_views(g, spec, gg)
        if not any(verify_q1(gamma, d.relabeled(to_index)) for gamma, to_index in views):
            drawn = [gamma.to_json() for gamma, _ in views]
            report.add(FailureKind.Q1_VIOLATION, f"Q1 fails in every drawing {drawn}")
    _emit(report.to_json(), out)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_oracle(args, out) -> int:
    g, _, _ = load_any_graph(args.graph)
    d = brute_force_decomposition(g, q2_required=args.q2)
    if d is None:
        _emit({"result": "NotFound"}, out)
        return EXIT_NOT_FOUND
    result = d.to_json()
    if args.q2:
        result["certificate"] = find_q2_certificate(g, d).to_json()
    _emit(result, out)
    return EXIT_OK


def cmd_export(args, out) -> int:
    g, _, _ = load_any_graph(args.graph)
    out.write(to_dot(g) if args.format == "dot" else to_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circdecomp", description="Hamilton decompositions of circulants and their tensor products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="match odd jumps to even jumps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jumps", required=True, help="comma-separated jumps")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("decompose4", help="decompose a 4-regular circulant Circ(n, {a, b})")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--trace", action="store_true", help="include the reduce/transpose steps")
    p.add_argument("--sweep", action="store_true", help="run every admissible pair for even orders 6..n")
    p.set_defaults(func=cmd_decompose4)

    p = sub.add_parser("product", help="decompose Circ x H")
    p.add_argument("--g", required=True, help="circulant graph JSON")
    p.add_argument("--h", required=True, help="graph JSON for H")
    p.add_argument("--h-cycles", help="Hamilton decomposition of H")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="check a Hamilton decomposition")
    p.add_argument("--graph", required=True)
    p.add_argument("--decomp", required=True)
    p.add_argument("--gamma", action="store_true", help="also check Q1 in the Gamma drawing")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force decomposition of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--q2", action="store_true", help="require an odd alternating 4-cycle")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", help="render a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("dot", "edgelist"), default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except CircDecompError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
