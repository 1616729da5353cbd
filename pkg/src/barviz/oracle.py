"""Visibility graph of a bar layout under positive-width channel semantics.

Two bars see each other when some open x-interval of positive width lies
under both of them with no third bar crossing the channel between their
levels.  With integer coordinates every such interval contains a unit
column, and the sweep below visits each elementary interval between
consecutive endpoint coordinates exactly once.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .bars import Bar, BarLayout, LayoutError
from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Sighting:
    lower: Bar
    upper: Bar
    x1: int
    x2: int


def sightings(layout: BarLayout) -> list[Sighting]:
    """Every visible bar pair with the first witness interval found by the sweep."""
    bars = layout.bars
    events: dict[int, tuple[list[int], list[int]]] = {}
    for i, b in enumerate(bars):
        events.setdefault(b.xl, ([], []))[0].append(i)
        events.setdefault(b.xr, ([], []))[1].append(i)
    xs = sorted(events)
    active: list[tuple[int, int]] = []  # (y, bar index), kept sorted
    seen: dict[tuple[int, int], Sighting] = {}
    for x, nxt in zip(xs, xs[1:]):
        starts, ends = events[x]
        for i in ends:
            active.remove((bars[i].y, i))
        for i in starts:
            key = (bars[i].y, i)
            pos = bisect.bisect_left(active, key)
            if (pos > 0 and active[pos - 1][0] == key[0]) or (pos < len(active) and active[pos][0] == key[0]):
                raise LayoutError(f"overlapping bars at y={key[0]}")
            active.insert(pos, key)
        for (_, i), (_, j) in zip(active, active[1:]):
            if (i, j) not in seen:
                seen[(i, j)] = Sighting(bars[i], bars[j], x, nxt)
    return list(seen.values())


def visibility_graph(layout: BarLayout) -> Graph:
    return Graph(layout.vertices, ((s.lower.owner, s.upper.owner) for s in sightings(layout) if s.lower.owner != s.upper.owner))


def same_owner_sightings(layout: BarLayout) -> int:
    return sum(1 for s in sightings(layout) if s.lower.owner == s.upper.owner)


@dataclass
class VerifyReport:
    extra: list[Edge] = field(default_factory=list)
    missing: list[Edge] = field(default_factory=list)
    max_bars: int = 0
    t: int = 1
    same_owner: int = 0

    @property
    def ok(self) -> bool:
        return not self.extra and not self.missing and self.max_bars <= self.t

    def lines(self) -> list[str]:
        out = ["PASS" if self.ok else "FAIL"]
        out += [f"extra {u} {w}" for u, w in self.extra]
        out += [f"missing {u} {w}" for u, w in self.missing]
        if self.max_bars > self.t:
            out.append(f"bars {self.max_bars} > {self.t}")
        return out


def verify_representation(layout: BarLayout, target: Graph, t: int) -> VerifyReport:
    owners = set(layout.vertices)
    if owners != set(target.vertices):
        diff = sorted(owners ^ set(target.vertices))
        raise LayoutError(f"layout owners differ from graph vertices: {' '.join(diff[:8])}")
    ss = sightings(layout)
    got = {norm_edge(s.lower.owner, s.upper.owner) for s in ss if s.lower.owner != s.upper.owner}
    want = target.edge_set
    return VerifyReport(
        extra=sorted(got - want),
        missing=sorted(want - got),
        max_bars=layout.max_bars_per_vertex(),
        t=t,
        same_owner=sum(1 for s in ss if s.lower.owner == s.upper.owner),
    )
