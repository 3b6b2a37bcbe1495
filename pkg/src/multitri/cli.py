"""Command-line frontend.

Exit codes: 0 success, 1 structural/assertion failure (the error name and
witness go to stderr), 2 usage or malformed input, 3 enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import count_report, phi
from .complexes import analyze_complex, complex_report_json
from .conjectures import run_all_checks
from .cylinder import CylinderTriangulation, enumerate_cylinder
from .errors import MultitriError, TooLarge
from .flips import build_flip_graph, flip_graph_dot, flip_graph_json, orbit_flip
from .io import (
    parse_triangulation,
    pipedream_json,
    render_ascii,
    render_svg,
    serialize_triangulation,
)
from .pipedreams import (
    chevron_from_staircase,
    is_n_periodic,
    permutation_target,
    staircase_from_triangulation,
    trace_pipes,
)
from .polygon import enumerate_polygon
from .surfaces import Edge, cylinder, edge_class_of, polygon


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_input(path: str):
    with open(path) as handle:
        return parse_triangulation(json.load(handle))


def cmd_enumerate(args) -> int:
    surface = (polygon if args.surface == "polygon" else cylinder)(args.n, args.k)
    found = (
        enumerate_polygon(surface)
        if args.surface == "polygon"
        else enumerate_cylinder(surface)
    )
    if args.format == "count":
        text = f"{len(found)}\n"
    else:
        text = json.dumps([serialize_triangulation(t) for t in found]) + "\n"
    _emit(text, args.out)
    return 0


def _verify_counts(n: int) -> int:
    reports = [count_report(t) for t in enumerate_cylinder(cylinder(n, 2))]
    print(
        f"{len(reports)} triangulations, every report "
        f"(stars, relevant, total) = ({n - 1}, {2 * (n - 1)}, {2 * (2 * n - 1)})")
    print(json.dumps({
        "suite": "counts", "n": n, "k": 2,
        "triangulations": len(reports), "ok": True,
    }))
    return 0


def _verify_regularity(n: int) -> int:
    graph = build_flip_graph(n)
    want = 2 * (n - 1)
    bad = [i for i, d in enumerate(graph.degrees) if d != want]
    if bad:
        print(
            f"vertex {bad[0]} has degree {graph.degrees[bad[0]]}, expected {want}",
            file=sys.stderr)
        return 1
    print(f"all degrees = {want}")
    print(json.dumps({
        "suite": "regularity", "n": n, "k": 2,
        "vertices": len(graph.vertices), "degree": want,
        "components": graph.component_count, "ok": True,
    }))
    return 0


def _verify_pseudomanifold(n: int, k: int) -> int:
    report = analyze_complex(n, k)
    if not (report.is_pure and report.is_weak_pseudomanifold):
        print(f"complex not pure/pseudomanifold: {report}", file=sys.stderr)
        return 1
    print("every ridge in 2 facets")
    print(json.dumps({"suite": "pseudomanifold", "ok": True} | complex_report_json(report)))
    return 0


def _verify_pipedreams(n: int) -> int:
    m = 4 * n
    target = permutation_target(m, 2)
    checked = 0
    for idx, t in enumerate(enumerate_cylinder(cylinder(n, 2))):
        inner = phi(t).inner
        staircase = staircase_from_triangulation(inner)
        trace = trace_pipes(staircase)
        if trace.permutation != target:
            print(f"triangulation {idx}: permutation {trace.permutation}", file=sys.stderr)
            return 1
        if any(len(cells) > 1 for cells in trace.crossings.values()):
            print(f"triangulation {idx}: staircase not reduced", file=sys.stderr)
            return 1
        chevron = chevron_from_staircase(staircase)
        crossings = trace_pipes(chevron).crossings
        pipes = m - 4
        if len(crossings) != pipes * (pipes - 1) // 2 or any(
            len(cells) != 1 for cells in crossings.values()
        ):
            print(f"triangulation {idx}: chevron pipes do not cross once each",
                  file=sys.stderr)
            return 1
        if not is_n_periodic(chevron, n):
            print(f"triangulation {idx}: chevron not periodic", file=sys.stderr)
            return 1
        checked += 1
    print(f"{checked} staircases reduced with the expected permutation; "
          "chevron pipes pairwise cross once")
    print(json.dumps({"suite": "pipedreams", "n": n, "k": 2,
                      "triangulations": checked, "ok": True}))
    return 0


def _verify_conjectures(n: int, k: int) -> int:
    bundle = run_all_checks(n, k)
    for name, report in bundle["reports"].items():
        verdict = report.get("skipped") or ("holds" if report.get("holds") else "FAILS")
        print(f"{name}: {verdict}")
    print(json.dumps(bundle))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "conjectures":
        return _verify_conjectures(args.n, args.k)
    if args.suite == "pseudomanifold":
        return _verify_pseudomanifold(args.n, args.k)
    if args.k != 2:
        print(f"suite {args.suite} drives the k=2 theorems; got k={args.k}",
              file=sys.stderr)
        return 2
    if args.suite == "counts":
        return _verify_counts(args.n)
    if args.suite == "regularity":
        return _verify_regularity(args.n)
    return _verify_pipedreams(args.n)


def cmd_pipedream(args) -> int:
    t = _load_input(args.input)
    if isinstance(t, CylinderTriangulation):
        t = phi(t).inner
    dream = staircase_from_triangulation(t)
    if args.shape == "chevron":
        dream = chevron_from_staircase(dream)
    if args.format == "ascii":
        text = render_ascii(dream)
    elif args.format == "svg":
        text = render_svg(dream)
    else:
        text = json.dumps(pipedream_json(dream)) + "\n"
    sys.stdout.write(text)
    return 0


def cmd_flip(args) -> int:
    t = _load_input(args.input)
    if not isinstance(t, CylinderTriangulation):
        raise ValueError("flip expects a cylinder triangulation")
    try:
        a, b = (int(part) for part in args.edge.split(","))
    except ValueError:
        raise ValueError(f"--edge wants 'a,b' integers, got {args.edge!r}") from None
    e = edge_class_of(Edge(*sorted((a, b))), t.surface.n)
    flipped, f = orbit_flip(t, e)
    sys.stdout.write(json.dumps(serialize_triangulation(flipped)) + "\n")
    print(f"flipped {e.rep.a},{e.rep.b} to {f.rep.a},{f.rep.b}", file=sys.stderr)
    return 0


def cmd_flipgraph(args) -> int:
    graph = build_flip_graph(args.n)
    if args.format == "dot":
        sys.stdout.write(flip_graph_dot(graph))
    else:
        sys.stdout.write(json.dumps(flip_graph_json(graph)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multitri",
        description="k-triangulations of polygons and the half-cylinder")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all k-triangulations")
    p.add_argument("--surface", choices=["polygon", "cylinder"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["json", "count"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a theorem or conjecture suite")
    p.add_argument(
        "--suite",
        choices=["counts", "regularity", "pseudomanifold", "pipedreams", "conjectures"],
        required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipedream", help="render a triangulation's pipe dream")
    p.add_argument("--input", required=True)
    p.add_argument("--shape", choices=["staircase", "chevron"], default="staircase")
    p.add_argument("--format", choices=["ascii", "svg", "json"], default="ascii")
    p.set_defaults(func=cmd_pipedream)

    p = sub.add_parser("flip", help="orbit-flip one class of a cylinder triangulation")
    p.add_argument("--input", required=True)
    p.add_argument("--edge", required=True, metavar="a,b")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("flip-graph", help="build the orbit-flip graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_flipgraph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"TooLarge: {exc}", file=sys.stderr)
        return 3
    except MultitriError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
