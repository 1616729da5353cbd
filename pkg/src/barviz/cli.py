"""Command line front end.

Exit codes: 0 success, 2 parse or precondition failure, 3 verification
failure, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .bars import BarLayout
from .graph import Graph, GraphError, complete_graph, is_biconnected
from .layout import (
    SMALL_GRAPH_LIMIT,
    VerificationError,
    one_bar_layout,
    small_graph_layout,
    split_pipeline,
    two_bar_layout,
    visibility_bound,
)
from .oracle import verify_representation
from .planarity import bar_visibility_verdict, is_planar
from .render import layout_svg, save_figure
from .split import BudgetExceeded, decompose_into_paths, sigma_exact, validate_split
from .transfer import check_transfer

EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4


class Refused(Exception):
    """Precondition failure reported to the user with exit status 2."""


@dataclass
class RunConfig:
    command: str
    inputs: list[Path]
    output: Path | None = None
    grid: int = 8
    budget: int = 2_000_000
    trace: bool = False
    debug_verify: bool = False
    overlay: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.grid <= 0 or self.budget <= 0:
            raise Refused("--grid and --budget must be positive")
        for p in self.inputs:
            if not p.exists():
                raise Refused(f"{p}: no such file")


def _hist(layout: BarLayout) -> str:
    return "histogram " + " ".join(f"{k}:{v}" for k, v in layout.histogram().items())


def _emit_layout(cfg: RunConfig, layout: BarLayout, target: Graph, t: int, report: list[str], out) -> int:
    """Verify, then write the layout; report lines go to stdout."""
    verdict = verify_representation(layout, target, t)
    lines = verdict.lines() + [f"max-bars {layout.max_bars_per_vertex()}", _hist(layout), *report]
    if verdict.same_owner:
        lines.append(f"same-owner-sightings {verdict.same_owner}")
    if cfg.output is not None:
        cfg.output.write_text(formats.format_layout(layout))
        print("\n".join(lines), file=out)
    else:
        print("\n".join(f"# {x}" for x in lines), file=out)
        out.write(formats.format_layout(layout))
    figure = cfg.extra.get("figure")
    if figure:
        save_figure(layout, figure, overlay=cfg.overlay, title=cfg.inputs[0].stem)
    return EXIT_OK if verdict.ok else EXIT_VERIFY


def cmd_check(cfg: RunConfig, out) -> int:
    g = formats.read_graph(cfg.inputs[0])
    ok, reason = bar_visibility_verdict(g)
    print(f"bar-visibility-graph: {str(ok).lower()} ({reason})", file=out)
    return EXIT_OK


def cmd_layout(cfg: RunConfig, out) -> int:
    g = formats.read_graph(cfg.inputs[0])
    mode = cfg.extra["mode"]
    if mode == "one-bar":
        ok, reason = bar_visibility_verdict(g)
        if not ok:
            raise Refused(reason)
        if g.n <= SMALL_GRAPH_LIMIT:
            layout = small_graph_layout(g, 1, cfg.grid)
            if layout is None:
                raise Refused(f"no one-bar layout within grid {cfg.grid}")
        elif is_biconnected(g):
            layout = one_bar_layout(g)
        else:
            raise Refused("one-bar layouts are built only for 2-connected graphs")
        return _emit_layout(cfg, layout, g, 1, [], out)
    if mode == "two-bar":
        if not is_planar(g):
            raise Refused("nonplanar")
        return _emit_layout(cfg, two_bar_layout(g), g, 2, [], out)
    split = None
    if cfg.extra.get("split"):
        text = Path(cfg.extra["split"]).read_text()
        originals = sorted({tok.split()[1] for tok in text.splitlines() if tok.startswith("c ")})
        split = formats.parse_split(text, complete_graph(originals), cfg.extra["split"])
    report = visibility_bound(g, split, budget=cfg.budget)
    if report.layout is None:
        print(report.line(), file=out)
        return EXIT_OK
    return _emit_layout(cfg, report.layout, g, max(report.bound, report.layout_bars or 0), [report.line()], out)


def cmd_pipeline(cfg: RunConfig, out) -> int:
    base = formats.read_graph(cfg.inputs[0])
    inst = formats.read_split(cfg.inputs[1], base)
    h = formats.read_graph(cfg.inputs[2])
    check = validate_split(inst)
    if not check.ok:
        raise Refused("invalid split: " + check.problems[0])
    if not check.planar:
        raise Refused("split graph is nonplanar")
    trace: list = []
    layout = split_pipeline(inst, h, trace=trace, debug=cfg.debug_verify)
    lines = [s.line() for s in trace] if cfg.trace else []
    return _emit_layout(cfg, layout, h, inst.map.t + 1, lines, out)


def cmd_render(cfg: RunConfig, out) -> int:
    layout = formats.read_layout(cfg.inputs[0])
    if cfg.output is None:
        out.write(layout_svg(layout, cfg.overlay))
    else:
        save_figure(layout, cfg.output, overlay=cfg.overlay)
    return EXIT_OK


def cmd_sigma(cfg: RunConfig, out) -> int:
    g = formats.read_graph(cfg.inputs[0])
    t_max = cfg.extra["tmax"]
    try:
        sigma = sigma_exact(g, t_max, cfg.budget)
    except BudgetExceeded:
        print("sigma unknown", file=out)
        return EXIT_BUDGET
    print(f"sigma {sigma}" if sigma is not None else f"sigma >{t_max}", file=out)
    return EXIT_OK


def cmd_split_verify(cfg: RunConfig, out) -> int:
    base = formats.read_graph(cfg.inputs[0])
    inst = formats.read_split(cfg.inputs[1], base)
    report = validate_split(inst)
    if report.ok:
        print(f"valid {'planar' if report.planar else 'nonplanar'} t={inst.map.t}", file=out)
        return EXIT_OK
    print("invalid", file=out)
    for p in report.problems:
        print(f"problem {p}", file=out)
    return EXIT_VERIFY


def cmd_paths(cfg: RunConfig, out) -> int:
    g = formats.read_graph(cfg.inputs[0])
    paths = decompose_into_paths(g, cfg.extra["k"])
    if paths is None:
        print("none", file=out)
    else:
        for p in paths:
            print("path " + " ".join(p), file=out)
    return EXIT_OK


def cmd_transfer(cfg: RunConfig, out) -> int:
    g = formats.read_graph(cfg.inputs[0])
    report = check_transfer(g, cfg.extra["u"], cfg.extra["v"], lobe_check=g.n <= 10)
    print("\n".join(report.lines()), file=out)
    if cfg.output is not None:
        cfg.output.write_text(formats.format_graph(report.result))
    return EXIT_OK if report.ok else EXIT_VERIFY


COMMANDS = {
    "check": cmd_check,
    "layout": cmd_layout,
    "pipeline": cmd_pipeline,
    "render": cmd_render,
    "sigma": cmd_sigma,
    "split-verify": cmd_split_verify,
    "paths": cmd_paths,
    "transfer": cmd_transfer,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=8, help="coordinate bound for exhaustive layout search")
    common.add_argument("--budget", type=int, default=2_000_000, help="node budget for exhaustive searches")
    common.add_argument("--trace", action="store_true", help="print one line per transfer")
    common.add_argument("--debug-verify", action="store_true", help="revalidate the split after every transfer")
    common.add_argument("--overlay", action="store_true", help="draw visibility channels")
    common.add_argument("-o", "--output", type=Path, help="output file")

    parser = argparse.ArgumentParser(prog="barviz", description="Bar visibility representations of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test whether a graph has a one-bar representation")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("layout", parents=[common], help="build and verify a bar layout")
    p.add_argument("graph", type=Path)
    p.add_argument("--mode", choices=["one-bar", "two-bar", "bound"], default="two-bar")
    p.add_argument("--split", help="split file of K_n for --mode bound")
    p.add_argument("--figure", help="also save a figure (png, pdf or svg)")

    p = sub.add_parser("pipeline", parents=[common], help="layout of a spanning subgraph from a planar split")
    p.add_argument("graph", type=Path)
    p.add_argument("split", type=Path)
    p.add_argument("subgraph", type=Path)
    p.add_argument("--figure", help="also save a figure (png, pdf or svg)")

    p = sub.add_parser("render", parents=[common], help="draw a layout file")
    p.add_argument("layout", type=Path)

    p = sub.add_parser("sigma", parents=[common], help="exact split thickness of a small graph")
    p.add_argument("graph", type=Path)
    p.add_argument("tmax", type=int)

    p = sub.add_parser("split-verify", parents=[common], help="validate a split file against its base graph")
    p.add_argument("graph", type=Path)
    p.add_argument("split", type=Path)

    p = sub.add_parser("paths", parents=[common], help="decompose a small graph into at most k paths")
    p.add_argument("graph", type=Path)
    p.add_argument("k", type=int)

    p = sub.add_parser("transfer", parents=[common], help="apply one transfer and check its properties")
    p.add_argument("graph", type=Path)
    p.add_argument("u")
    p.add_argument("v")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    inputs = [args.graph] if hasattr(args, "graph") else [args.layout]
    extra: dict = {}
    if args.command == "pipeline":
        inputs += [args.split, args.subgraph]
    elif args.command == "split-verify":
        inputs.append(args.split)
    for name in ("mode", "split", "figure", "tmax", "k", "u", "v"):
        if name in vars(args) and name not in extra:
            extra[name] = getattr(args, name)
    if args.command == "layout" and args.split:
        inputs.append(Path(args.split))
    return RunConfig(
        command=args.command,
        inputs=inputs,
        output=args.output,
        grid=args.grid,
        budget=args.budget,
        trace=args.trace,
        debug_verify=args.debug_verify,
        overlay=args.overlay,
        extra=extra,
    )


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[cfg.command](cfg, out)
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (Refused, GraphError) as exc:
        print(f"refused: {exc}", file=out)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=out)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"FAIL {exc}", file=out)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
