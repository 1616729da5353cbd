"""Line-based text formats for graphs, splits and layouts.

Graph:  ``v <id>`` and ``e <id1> <id2>`` lines.
Split:  ``t <int>``, ``c <original> <copy>`` and ``e <copy1> <copy2>`` lines.
Layout: ``b <owner> <y> <xl> <xr>`` lines.
Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .bars import Bar, BarLayout, LayoutError
from .graph import Graph, GraphError, norm_edge
from .split import SplitInstance, SplitMap


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(text: str, source: str = "<input>") -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    seen = set()
    for lineno, tok in _records(text):
        if tok[0] == "v" and len(tok) == 2:
            vertices.append(tok[1])
        elif tok[0] == "e" and len(tok) == 3:
            u, w = tok[1], tok[2]
            if u == w:
                raise ParseError(f"self-loop at {u}", lineno, source)
            key = norm_edge(u, w)
            if key in seen:
                raise ParseError(f"duplicate edge {u} {w}", lineno, source)
            seen.add(key)
            edges.append((u, w))
        else:
            raise ParseError(f"unrecognised line {' '.join(tok)!r}", lineno, source)
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"


def parse_split(text: str, base: Graph, source: str = "<input>") -> SplitInstance:
    t = None
    assignment: dict[str, list[str]] = {}
    copies: list[str] = []
    edges: list[tuple[str, str]] = []
    seen = set()
    for lineno, tok in _records(text):
        if tok[0] == "t" and len(tok) == 2:
            try:
                t = int(tok[1])
            except ValueError:
                raise ParseError(f"t must be an integer, got {tok[1]!r}", lineno, source) from None
        elif tok[0] == "c" and len(tok) == 3:
            assignment.setdefault(tok[1], []).append(tok[2])
            copies.append(tok[2])
        elif tok[0] == "e" and len(tok) == 3:
            key = norm_edge(tok[1], tok[2])
            if tok[1] == tok[2] or key in seen:
                raise ParseError(f"bad or duplicate split edge {tok[1]} {tok[2]}", lineno, source)
            seen.add(key)
            edges.append((tok[1], tok[2]))
        else:
            raise ParseError(f"unrecognised line {' '.join(tok)!r}", lineno, source)
    if t is None:
        raise ParseError("missing 't' line", None, source)
    try:
        sm = SplitMap(t, {u: tuple(cs) for u, cs in assignment.items()})
        sg = Graph(copies, edges)
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None
    return SplitInstance(base, sm, sg)


def format_split(inst: SplitInstance) -> str:
    lines = [f"t {inst.map.t}"]
    for u in sorted(inst.map.assignment):
        lines += [f"c {u} {c}" for c in inst.map.copies(u)]
    lines += [f"e {a} {b}" for a, b in inst.split_graph.edges]
    return "\n".join(lines) + "\n"


def parse_layout(text: str, source: str = "<input>") -> BarLayout:
    bars = []
    for lineno, tok in _records(text):
        if tok[0] != "b" or len(tok) != 5:
            raise ParseError(f"unrecognised line {' '.join(tok)!r}", lineno, source)
        try:
            y, xl, xr = (int(x) for x in tok[2:])
            bars.append(Bar(tok[1], y, xl, xr))
        except (ValueError, LayoutError) as exc:
            raise ParseError(str(exc), lineno, source) from None
    try:
        return BarLayout(bars)
    except LayoutError as exc:
        raise ParseError(str(exc), None, source) from None


def format_layout(layout: BarLayout) -> str:
    return "".join(f"b {b.owner} {b.y} {b.xl} {b.xr}\n" for b in layout)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(), str(path))


def read_layout(path: str | Path) -> BarLayout:
    return parse_layout(Path(path).read_text(), str(path))


def read_split(path: str | Path, base: Graph) -> SplitInstance:
    return parse_split(Path(path).read_text(), base, str(path))
