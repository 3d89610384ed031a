"""Command-line front end: build products, compute polynomials, run censuses
and verification sweeps over the closed forms.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition violation.  All JSON output carries "schema": 1 and is
byte-deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import spectra
from .core import (
    SignedGraph,
    canonical_marking,
    plurality_marking,
    resolve_marking,
)
from .coronal import coronal
from .cospectral import (
    catalog_lines,
    certify_pair,
    enumerate_signed_graphs,
    find_coronal_pairs,
)
from .exactalg import charpoly_exact
from .graphio import load_signed_graph, parse_signed_graph, serialize_signed_graph
from .matrices import MatrixKind, build_matrix
from .orientation import ROrientation, default_orientation, random_orientation
from .products import ProductKind, build_product
from .spectra import closed_charpoly, verify_theorem
from .structural import balance_of_product, census_report

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


@dataclass
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    product: Optional[ProductKind] = None
    kind: Optional[MatrixKind] = None
    marking: Optional[str] = None
    orientation: str = "default"
    seed: Optional[int] = None
    fmt: str = "text"
    out: Optional[str] = None
    verify: bool = False
    variant: str = "proof"
    max_n: int = 5
    connected_only: bool = True
    g1_spec: str = "c3"
    per_form: int = 50
    n1_max: int = 6
    n2_max: int = 4
    inject_fault: bool = False


class _PreconditionError(Exception):
    pass


_NAMED_GRAPHS = {
    "c3": SignedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]),
    "c4": SignedGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]),
    "k4": SignedGraph(
        4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
    ),
}


def _load(path: str) -> SignedGraph:
    try:
        return load_signed_graph(path)
    except (OSError, ValueError) as exc:
        raise _ParseError(f"{path}: {exc}") from exc


class _ParseError(Exception):
    pass


def _resolve_marking_choice(cfg: RunConfig, g2: SignedGraph) -> Optional[Tuple[int, ...]]:
    choice = cfg.marking
    if choice is None:
        return None
    if choice == "canonical":
        return canonical_marking(g2)
    if choice == "plurality":
        return plurality_marking(g2)
    if choice == "file":
        if g2.marking is None:
            raise _PreconditionError("--marking file requires a marking line in the input")
        return g2.marking
    raise _PreconditionError(f"unknown marking choice {choice!r}")


def _resolve_orientation(cfg: RunConfig, g1: SignedGraph) -> ROrientation:
    if cfg.orientation == "random":
        return random_orientation(g1, seed=cfg.seed)
    return default_orientation(g1)


def _emit(cfg: RunConfig, payload: dict, text_lines: Sequence[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_json(poly) -> List[str]:
    return [str(c) for c in poly.coeffs]


def cmd_build(cfg: RunConfig) -> int:
    g1 = _load(cfg.inputs[0])
    g2 = _load(cfg.inputs[1])
    mu2 = _resolve_marking_choice(cfg, g2)
    th = _resolve_orientation(cfg, g1)
    result = build_product(cfg.product, g1, th, g2, mu2)
    text = serialize_signed_graph(result.graph)
    payload = {
        "schema": 1,
        "product": cfg.product.value,
        "n": result.graph.n,
        "m": result.graph.m,
        "graph": text,
        "layout": result.layout_json(),
    }
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        with open(cfg.out + ".layout.json", "w", encoding="utf-8") as fh:
            json.dump(result.layout_json(), fh, sort_keys=True)
            fh.write("\n")
        _emit(cfg, payload, [f"wrote {result.graph.n} vertices, {result.graph.m} edges to {cfg.out}"])
    else:
        _emit(cfg, payload, [text])
    return EXIT_OK


def cmd_charpoly(cfg: RunConfig) -> int:
    g1 = _load(cfg.inputs[0])
    g2 = _load(cfg.inputs[1])
    mu2 = _resolve_marking_choice(cfg, g2)
    th = _resolve_orientation(cfg, g1)
    if cfg.verify:
        report = verify_theorem(
            cfg.product, cfg.kind, g1, th, g2, mu2, variant=cfg.variant
        )
        payload = {"schema": 1, **report.to_json()}
        lines = [
            f"closed: {report.closed_form}",
            f"direct: {report.direct}",
            f"equal: {str(report.equal).lower()}",
        ]
        _emit(cfg, payload, lines)
        return EXIT_OK if report.equal else EXIT_VERIFICATION
    poly = closed_charpoly(cfg.product, cfg.kind, g1, th, g2, mu2, variant=cfg.variant)
    payload = {
        "schema": 1,
        "product": cfg.product.value,
        "kind": cfg.kind.value,
        "charpoly": _poly_json(poly),
    }
    _emit(cfg, payload, [str(poly), "coeffs low to high: " + ", ".join(_poly_json(poly))])
    return EXIT_OK


def cmd_coronal(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    mu = _resolve_marking_choice(cfg, g)
    fn = coronal(g, mu, cfg.kind)
    num, den = fn.reduced_pair()
    payload = {
        "schema": 1,
        "kind": cfg.kind.value,
        "num": _poly_json(fn.num),
        "den": _poly_json(fn.den),
        "reduced_num": _poly_json(num),
        "reduced_den": _poly_json(den),
    }
    _emit(cfg, payload, [f"({fn.num}) / ({fn.den})", f"reduced: ({num}) / ({den})"])
    return EXIT_OK


def cmd_census(cfg: RunConfig) -> int:
    g1 = _load(cfg.inputs[0])
    g2 = _load(cfg.inputs[1])
    mu2 = _resolve_marking_choice(cfg, g2)
    th = _resolve_orientation(cfg, g1)
    report = census_report(cfg.product, g1, th, g2, mu2)
    payload = {"schema": 1, **report}
    lines = ["row       observed   derived  published"]
    for row in report["rows"]:
        flag = "" if row["published_ok"] else "  <- published differs"
        lines.append(
            f"{row['row']:<9} {row['observed']:>8} {row['derived']:>9} {row['published']:>10}{flag}"
        )
    lines.append(
        "derived formulas match: " + str(report["derived_ok"]).lower()
    )
    _emit(cfg, payload, lines)
    return EXIT_OK if report["derived_ok"] else EXIT_VERIFICATION


def cmd_balance(cfg: RunConfig) -> int:
    g1 = _load(cfg.inputs[0])
    g2 = _load(cfg.inputs[1])
    mu2 = _resolve_marking_choice(cfg, g2)
    verdict = balance_of_product(cfg.product, g1, g2, mu2)
    payload = {
        "schema": 1,
        "product": cfg.product.value,
        "balanced": verdict.balanced,
        "witness": list(verdict.witness) if verdict.witness else None,
    }
    if verdict.balanced:
        lines = ["balanced"]
    else:
        u, v, s, cat = verdict.witness
        sign = "+" if s == 1 else "-"
        lines = [f"unbalanced: edge {u}-{v} ({sign}) violates condition ({cat})"]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_cospectral_search(cfg: RunConfig) -> int:
    if cfg.g1_spec in _NAMED_GRAPHS:
        g1 = _NAMED_GRAPHS[cfg.g1_spec]
    else:
        g1 = _load(cfg.g1_spec)
    graphs = []
    for n in range(1, cfg.max_n + 1):
        graphs.extend(enumerate_signed_graphs(n, cfg.connected_only))
    pairs = find_coronal_pairs(graphs, cfg.kind)
    certificates = []
    for pair in pairs:
        certificates.append(
            certify_pair(g1, None, pair, cfg.product, cfg.kind)
        )
    ok = all(c.certified for c in certificates)
    if cfg.fmt == "json":
        for line in catalog_lines(certificates):
            print(line)
    else:
        print(
            f"{len(pairs)} candidate pair(s), "
            f"{sum(c.certified for c in certificates)} certified"
        )
        for cert in certificates:
            print(
                f"  cospectral={str(cert.cospectral).lower()} "
                f"distinct={str(cert.distinct).lower()} via {cert.method}"
            )
    return EXIT_OK if ok else EXIT_VERIFICATION


def _regular_pool(n1_max: int) -> List[SignedGraph]:
    """Connected-or-not regular underlying graphs up to order n1_max."""
    pool = []
    cycles = {
        3: [(0, 1), (1, 2), (0, 2)],
        4: [(0, 1), (1, 2), (2, 3), (0, 3)],
        5: [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
        6: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
    }
    pool.append(SignedGraph(2, [(0, 1, 1)]))
    for n, edges in cycles.items():
        if n <= n1_max:
            pool.append(SignedGraph(n, [(u, v, 1) for u, v in edges]))
    if n1_max >= 4:
        pool.append(SignedGraph(4, [(0, 1, 1), (2, 3, 1)]))
        pool.append(
            SignedGraph(
                4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
            )
        )
    if n1_max >= 6:
        pool.append(
            SignedGraph(
                6,
                [(u, v, 1) for u, v in cycles[3]]
                + [(u + 3, v + 3, 1) for u, v in cycles[3]],
            )
        )
        pool.append(
            SignedGraph(
                6, [(u, v + 3, 1) for u in range(3) for v in range(3)]
            )
        )
    return pool


def _random_signs(g: SignedGraph, rng: random.Random) -> SignedGraph:
    return SignedGraph(
        g.n, [(u, v, rng.choice((1, -1))) for u, v, _ in g.edges]
    )


def _random_graph(n: int, rng: random.Random, min_edges: int = 0) -> SignedGraph:
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.55:
                    edges.append((u, v, rng.choice((1, -1))))
        if len(edges) >= min_edges:
            return SignedGraph(n, edges)


_SWEEP_FORMS: List[Tuple[ProductKind, MatrixKind]] = [
    (p, k)
    for p in ProductKind
    for k in (
        MatrixKind.ADJACENCY,
        MatrixKind.LAPLACIAN,
        MatrixKind.SIGNLESS_LAPLACIAN,
        MatrixKind.RANDOM_WALK,
    )
]


def run_verification_sweep(
    seed: int = 0,
    per_form: int = 50,
    n1_max: int = 6,
    n2_max: int = 4,
    max_order: int = 40,
) -> dict:
    """Randomized verification matrix over every product and matrix kind.

    Each normalized-kind instance checks both degree-normalized matrices
    (the second via the substitution x -> 1-x), so the three random-walk
    rows cover six closed forms.  Markings alternate between the canonical
    and plurality rules.  Returns a JSON-ready summary with reproducible
    failure records.
    """
    rng = random.Random(seed)
    pool = _regular_pool(n1_max)
    forms: Dict[str, dict] = {}
    failures: List[dict] = []
    total = passed = 0
    for product, kind in _SWEEP_FORMS:
        label = f"{product.value}/{kind.value}"
        count = 0
        checks = 0
        attempts = 0
        while count < per_form and attempts < 50 * per_form:
            attempts += 1
            g1 = _random_signs(rng.choice(pool), rng)
            if product is not ProductKind.SUBDIVISION_VERTEX and g1.m == 0:
                continue
            if kind is MatrixKind.RANDOM_WALK:
                regular2 = [g for g in pool if g.n <= n2_max]
                g2 = _random_signs(rng.choice(regular2), rng)
            else:
                g2 = _random_graph(rng.randint(1, n2_max), rng)
            order = {
                ProductKind.EDGE_CORONA: g1.n + g1.m * g2.n,
                ProductKind.SUBDIVISION_VERTEX: g1.n + g1.m + g1.n * g2.n,
                ProductKind.SUBDIVISION_EDGE: g1.n + g1.m + g1.m * g2.n,
            }[product]
            if order > max_order:
                continue
            marking = (
                canonical_marking(g2) if count % 2 == 0 else plurality_marking(g2)
            )
            th = random_orientation(g1, seed=rng.randrange(1 << 30))
            kinds = (
                (kind,)
                if kind is not MatrixKind.RANDOM_WALK
                else (MatrixKind.RANDOM_WALK, MatrixKind.NORMALIZED_LAPLACIAN)
            )
            count += 1
            for check_kind in kinds:
                report = verify_theorem(
                    product, check_kind, g1, th, g2, marking, variant="proof"
                )
                total += 1
                checks += 1
                if report.equal:
                    passed += 1
                else:
                    failures.append(
                        {
                            "product": product.value,
                            "kind": check_kind.value,
                            "seed": seed,
                            "g1": serialize_signed_graph(g1),
                            "g2": serialize_signed_graph(g2),
                            "marking": list(marking),
                            "theta": [list(t) for t in th.per_edge],
                            "closed": _poly_json(report.closed_form),
                            "direct": _poly_json(report.direct),
                        }
                    )
        forms[label] = {"instances": count, "checks": checks}
    return {
        "schema": 1,
        "seed": seed,
        "per_form": per_form,
        "n1_max": n1_max,
        "n2_max": n2_max,
        "forms": forms,
        "total_checks": total,
        "passed": passed,
        "failures": failures,
        "ok": not failures,
    }


def cmd_verify_all(cfg: RunConfig) -> int:
    if cfg.inject_fault:
        spectra.DEBUG_FLIP_CLOSED_COEFF = True
    try:
        summary = run_verification_sweep(
            seed=cfg.seed if cfg.seed is not None else 0,
            per_form=cfg.per_form,
            n1_max=cfg.n1_max,
            n2_max=cfg.n2_max,
        )
    finally:
        spectra.DEBUG_FLIP_CLOSED_COEFF = False
    lines = [
        f"{label}: {info['instances']} instances"
        for label, info in sorted(summary["forms"].items())
    ]
    lines.append(
        f"checks passed: {summary['passed']}/{summary['total_checks']}"
    )
    if summary["failures"]:
        lines.append(f"failures: {len(summary['failures'])}")
        for rec in summary["failures"][:5]:
            lines.append(json.dumps(rec, sort_keys=True))
    _emit(cfg, summary, lines)
    return EXIT_OK if summary["ok"] else EXIT_VERIFICATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgcorona",
        description="Signed-graph corona-type products and their exact spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graphs: int, product: bool = True, kind: bool = False):
        for i in range(graphs):
            p.add_argument(f"g{i + 1}", help="signed graph file")
        if product:
            p.add_argument(
                "--product",
                required=True,
                type=ProductKind.parse,
                help="edge-corona | subdivision-vertex | subdivision-edge",
            )
        if kind:
            p.add_argument(
                "--kind",
                required=True,
                type=MatrixKind.parse,
                help="A | L | Q | N | P",
            )
        p.add_argument(
            "--marking", choices=("canonical", "plurality", "file"), default=None
        )
        p.add_argument("--orientation", choices=("default", "random"), default="default")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("build", help="construct a product graph")
    add_common(p, 2)
    p.add_argument("-o", "--out", default=None, help="output path (layout sidecar written next to it)")

    p = sub.add_parser("charpoly", help="closed-form characteristic polynomial")
    add_common(p, 2, kind=True)
    p.add_argument("--verify", action="store_true", help="also compute the direct polynomial and compare")
    p.add_argument("--variant", choices=("proof", "statement"), default="proof")

    p = sub.add_parser("coronal", help="signed coronal of one graph")
    add_common(p, 1, product=False, kind=True)

    p = sub.add_parser("census", help="edge and triad census of a product")
    add_common(p, 2)

    p = sub.add_parser("balance", help="balance of a product of balanced factors")
    add_common(p, 2)

    p = sub.add_parser("cospectral-search", help="search and certify cospectral pairs")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--kind", type=MatrixKind.parse, default=MatrixKind.ADJACENCY)
    p.add_argument("--product", type=ProductKind.parse, default=ProductKind.EDGE_CORONA)
    p.add_argument("--g1", default="c3", help="c3 | c4 | k4 | path to a regular signed graph")
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-all", help="randomized verification sweep over all closed forms")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--per-form", type=int, default=50)
    p.add_argument("--n1-max", type=int, default=6)
    p.add_argument("--n2-max", type=int, default=4)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("product", "kind", "marking", "orientation", "seed", "out",
                 "verify", "variant", "per_form", "n1_max", "n2_max",
                 "inject_fault"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "json") and args.json:
        cfg.fmt = "json"
    if hasattr(args, "max_n"):
        cfg.max_n = args.max_n
    if hasattr(args, "include_disconnected"):
        cfg.connected_only = not args.include_disconnected
    if hasattr(args, "g1") and args.command == "cospectral-search":
        cfg.g1_spec = args.g1
    inputs = []
    for name in ("g1", "g2"):
        if hasattr(args, name) and args.command != "cospectral-search":
            inputs.append(getattr(args, name))
    cfg.inputs = tuple(inputs)
    if cfg.orientation == "random" and cfg.seed is None:
        raise _ParseError("--orientation random requires --seed")
    return cfg


_COMMANDS = {
    "build": cmd_build,
    "charpoly": cmd_charpoly,
    "coronal": cmd_coronal,
    "census": cmd_census,
    "balance": cmd_balance,
    "cospectral-search": cmd_cospectral_search,
    "verify-all": cmd_verify_all,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except _ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
