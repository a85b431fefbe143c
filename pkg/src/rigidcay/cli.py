"""Command-line interface: ``rigidcay <subcommand> ...``.

Every subcommand prints one canonical JSON document on stdout. Exit status is
0 on success, 1 when ``--expect`` was given and the verdict disagrees, and 2
on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .errors import RigidCayError
from .families import (
    FAMILY_NAMES,
    abelian_family,
    dense_abelian_family,
    regularity_construction,
    sl_family,
    sl_product_family,
)
from .graphs import SimpleGraph, cayley_graph, complete_graph, cycle_graph, path_graph
from .groups import GeneratorSet, is_generating, parse_descriptor, subgroup_closure, symmetric_closure
from .nac import EdgeColoring, generator_class_coloring, is_good_nac
from .rigidity import classify
from .search import DEFAULT_BUDGET, MODES, search_nac
from .theorems import check_flexible_condition, check_movable_condition, check_pairwise_trivial, check_partition_condition

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def split_elements(text: str) -> list[str]:
    """Split an element list on top-level ';' or ',' (brackets may contain commas)."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch in ";," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _elements(group, text: str) -> list[int]:
    return [group.parse_element(t) for t in split_elements(text)]


def _graph_source(spec: str) -> SimpleGraph:
    for prefix, make in (("complete:", complete_graph), ("cycle:", cycle_graph), ("path:", path_graph)):
        if spec.startswith(prefix):
            try:
                n = int(spec[len(prefix):])
            except ValueError:
                raise UsageError(f"bad graph size in {spec!r}") from None
            return make(n)
    return io.load_graph(spec)


def _coloring(graph: SimpleGraph, args) -> EdgeColoring:
    if args.coloring:
        return io.load_coloring(graph, args.coloring)
    if args.blue_generators:
        if graph.group is None:
            raise UsageError("--blue-generators needs a Cayley graph with a group descriptor")
        return generator_class_coloring(graph, _elements(graph.group, args.blue_generators))
    raise UsageError("give --coloring or --blue-generators")


def _emit(obj, out: str | None = None) -> None:
    text = io.dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _expect(args, actual) -> int:
    expected = getattr(args, "expect", None)
    if expected is None:
        return EXIT_OK
    if str(actual).lower() != expected.lower():
        print(f"expected {expected}, got {actual}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


# -- subcommands -------------------------------------------------------------

def cmd_group(args) -> int:
    group = parse_descriptor(args.group)
    out = {"group": group.descriptor, "order": group.order, "identity": group.label(group.identity)}
    if args.generators:
        gens = _elements(group, args.generators)
        closure = subgroup_closure(group, gens)
        out["generators"] = [group.label(g) for g in gens]
        out["generator_ids"] = gens
        out["generator_orders"] = [group.element_order(g) for g in gens]
        out["closure_order"] = len(closure)
        out["generates"] = len(closure) == group.order
    if args.list and group.order <= 1000:
        out["elements"] = {str(g): group.label(g) for g in group.elements}
    _emit(out)
    return _expect(args, out.get("generates"))


def cmd_cayley(args) -> int:
    group = parse_descriptor(args.group)
    gens = GeneratorSet(group, _elements(group, args.generators))
    if args.symmetrize:
        gens = symmetric_closure(gens)
    graph = cayley_graph(gens)
    if not is_generating(gens):
        print("warning: generators do not generate the group; graph is disconnected", file=sys.stderr)
    _emit(io.graph_to_json(graph), args.out)
    return EXIT_OK


def cmd_check_nac(args) -> int:
    graph = _graph_source(args.graph)
    verdict = is_good_nac(_coloring(graph, args))
    _emit(verdict.as_dict())
    if args.expect is None:
        return EXIT_OK
    actual = {"nac": verdict.is_nac, "good": verdict.is_good}[args.expect]
    return EXIT_OK if actual else EXIT_NEGATIVE


def cmd_search_nac(args) -> int:
    graph = _graph_source(args.graph)
    res = search_nac(graph, args.mode, args.budget, workers=args.workers)
    _emit(res.as_dict())
    if args.expect is None:
        return EXIT_OK
    return EXIT_OK if res.found == (args.expect == "found") else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    graph = _graph_source(args.graph)
    report = classify(graph, args.budget, workers=args.workers)
    _emit(report.as_dict())
    return _expect(args, report.classification.value)


def cmd_theorem_check(args) -> int:
    group = parse_descriptor(args.group)
    S = set(_elements(group, args.generators))
    if args.symmetrize:
        S |= {group.invert(g) for g in S}
    chosen = [args.s is not None, args.partition is not None, args.pairwise]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --s, --partition, --pairwise")
    if args.s is not None:
        s = group.parse_element(args.s)
        reports = {"flexible": check_flexible_condition(group, S, s),
                   "movable": check_movable_condition(group, S, s)}
    elif args.partition is not None:
        rep = check_partition_condition(group, S, _elements(group, args.partition))
        reports = {"flexible": rep.flexible, "movable": rep.movable}
    else:
        reports = {"pairwise": check_pairwise_trivial(group, S)}
    out = {k: r.as_dict(group) for k, r in reports.items()}
    _emit(out)
    if args.expect is None:
        return EXIT_OK
    target = reports.get(args.expect)
    if target is None:
        raise UsageError(f"--expect {args.expect} does not match the chosen check")
    return EXIT_OK if target.holds else EXIT_NEGATIVE


def _moduli(text: str | None) -> list[int]:
    if not text:
        raise UsageError("--moduli is required for this family")
    try:
        return [int(t) for t in split_elements(text)]
    except ValueError:
        raise UsageError(f"bad --moduli {text!r}") from None


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def build_family(args):
    name = args.name
    if name == "abelian-power":
        return abelian_family("power", _need(args.q, "--q"), _need(args.alpha, "--alpha"))
    if name == "abelian-crt":
        return abelian_family("crt", _moduli(args.moduli))
    if name == "abelian-involution":
        return abelian_family("with_involution", _moduli(args.moduli))
    if name == "dense":
        return dense_abelian_family(_need(args.n, "--n"), args.k)
    if name in ("sl-elementary", "sl-triangular"):
        return sl_family(_need(args.n, "--n"), _need(args.p, "--p"), name.split("-")[1])
    if name == "sl-product":
        return sl_product_family(_need(args.n, "--n"), _need(args.p, "--p"), args.k, args.second_p)
    if name == "regularity":
        return regularity_construction(_need(args.r, "--r"))
    raise UsageError(f"unknown family {name!r}")


def cmd_family(args) -> int:
    inst = build_family(args)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        io.save_graph(inst.graph, out / "graph.json")
        (out / "coloring.json").write_text(io.dumps(io.coloring_to_json(inst.coloring)))
        if args.figure:
            from .plotting import save_graph_figure

            save_graph_figure(inst.graph, out / f"graph.{args.figure}", inst.coloring, title=inst.family_name)
    _emit(inst.as_dict())
    return EXIT_OK


def cmd_flex(args) -> int:
    from .flex import build_flex, export_frames, verify_flex

    graph = _graph_source(args.graph)
    coloring = _coloring(graph, args)
    report = verify_flex(build_flex(graph, coloring), graph, args.samples, args.tol, seed=args.seed)
    out = report.as_dict()
    if args.out_dir:
        from .plotting import save_drift_figure, save_frame_figure

        target = Path(args.out_dir)
        target.mkdir(parents=True, exist_ok=True)
        grid = np.linspace(0.0, 2 * np.pi, args.frames, endpoint=False)
        files = []
        for k, frame in enumerate(export_frames(report.realization, grid)):
            stem = target / f"frame_{k:03d}"
            stem.with_suffix(".json").write_text(io.dumps(io.frame_to_json(frame)))
            files.append(stem.with_suffix(".json").name)
            if args.figure:
                save_frame_figure(frame, graph, coloring, stem.with_suffix(f".{args.figure}"))
                files.append(stem.with_suffix(f".{args.figure}").name)
        if args.figure:
            save_drift_figure(report.realization, target / f"drift.{args.figure}")
            files.append(f"drift.{args.figure}")
        out["files"] = files
    _emit(out)
    if args.expect is None:
        return EXIT_OK
    return EXIT_OK if report.passed == (args.expect == "pass") else EXIT_NEGATIVE


def cmd_export(args) -> int:
    graph = _graph_source(args.graph)
    coloring = _coloring(graph, args) if (args.coloring or args.blue_generators) else None
    if args.format == "dot":
        text = io.to_dot(graph, coloring)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        if not args.out:
            raise UsageError(f"--out is required for {args.format} export")
        from .plotting import save_graph_figure

        save_graph_figure(graph, args.out, coloring, title=graph.name)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigidcay", description="Flexibility and movability of Cayley graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, coloring=False):
        p.add_argument("--graph", required=True, help="graph JSON path, or complete:N / cycle:N / path:N")
        if coloring:
            p.add_argument("--coloring", help="coloring JSON path ({'red': [...], 'blue': [...]})")
            p.add_argument("--blue-generators", help="color generator classes blue (Cayley graphs only)")

    p = sub.add_parser("group", help="group order and generated subgroup")
    p.add_argument("--group", required=True, help="cyclic:N, sl:N:P or product:(A,B)")
    p.add_argument("--generators", help="elements separated by ';' or ','")
    p.add_argument("--list", action="store_true", help="list all element labels")
    p.add_argument("--expect", choices=["true", "false"], help="expected value of 'generates'")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("cayley", help="build a Cayley graph")
    p.add_argument("--group", required=True)
    p.add_argument("--generators", required=True)
    p.add_argument("--symmetrize", action="store_true", help="add missing inverses")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("check-nac", help="check a coloring")
    graph_args(p, coloring=True)
    p.add_argument("--expect", choices=["nac", "good"])
    p.set_defaults(func=cmd_check_nac)

    p = sub.add_parser("search-nac", help="search for NAC-colorings")
    graph_args(p)
    p.add_argument("--mode", choices=MODES, default="first-any")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--expect", choices=["found", "none"])
    p.set_defaults(func=cmd_search_nac)

    p = sub.add_parser("classify", help="Rigid / Flexible / Movable verdict")
    graph_args(p)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--expect", choices=["Rigid", "Flexible", "Movable", "FlexibleMovabilityUnknown"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("theorem-check", help="subgroup-intersection conditions")
    p.add_argument("--group", required=True)
    p.add_argument("--generators", required=True)
    p.add_argument("--symmetrize", action="store_true")
    p.add_argument("--s", help="single generator")
    p.add_argument("--partition", help="generator class S1")
    p.add_argument("--pairwise", action="store_true")
    p.add_argument("--expect", choices=["flexible", "movable", "pairwise"], help="condition required to hold")
    p.set_defaults(func=cmd_theorem_check)

    p = sub.add_parser("family", help="build a movable family instance")
    p.add_argument("--name", required=True, choices=FAMILY_NAMES)
    for flag in ("--n", "--q", "--alpha", "--p", "--r", "--second-p"):
        p.add_argument(flag, type=_positive)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--moduli", help="e.g. '4,3' or '2,3'")
    p.add_argument("--out-dir", help="also write graph.json and coloring.json here")
    p.add_argument("--figure", choices=["svg", "png"], help="render a colored graph figure into --out-dir")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("flex", help="build and verify a flex, optionally writing frames")
    graph_args(p, coloring=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.add_argument("--frames", type=_positive, default=36)
    p.add_argument("--out-dir")
    p.add_argument("--figure", choices=["svg", "png"], default="svg")
    p.add_argument("--expect", choices=["pass", "fail"])
    p.set_defaults(func=cmd_flex)

    p = sub.add_parser("export", help="convert graph JSON to DOT or an image")
    graph_args(p, coloring=True)
    p.add_argument("--format", choices=["dot", "svg", "png"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RigidCayError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
