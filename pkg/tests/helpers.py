"""Generators and brute-force oracles shared by the test suite.

Nothing here imports the code paths it is used to check: the column scan,
the removal-based cut-vertex test and the rotation enumeration are written
from the definitions.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from pathlib import Path

import networkx as nx

from barviz.bars import Bar, BarLayout
from barviz.graph import Graph, norm_edge

SEED = int(os.environ.get("BARVIZ_SEED", "20240611"))
DATA = Path(__file__).parent / "data"

SAMPLE_H_EDGES = "ad ab be eh gh dg cd ef ah bg".split()
SAMPLE_H = Graph("abcdefgh", [tuple(e) for e in SAMPLE_H_EDGES])
SAMPLE_G = SAMPLE_H.with_edges(add=[("c", "a"), ("h", "f")])


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


# -- generators ------------------------------------------------------------


def random_triangulation(n: int, r: random.Random, flips: int | None = None) -> Graph:
    """Stacked triangulation on n >= 3 vertices followed by random edge flips."""
    names = [f"v{i:02d}" for i in range(n)]
    tris = {frozenset(names[:3])}
    for v in names[3:]:
        t = r.choice(sorted(tris, key=sorted))
        tris.remove(t)
        a, b, c = sorted(t)
        tris |= {frozenset((a, b, v)), frozenset((b, c, v)), frozenset((a, c, v))}
    edges = {norm_edge(*e) for t in tris for e in itertools.combinations(sorted(t), 2)}
    for _ in range(flips if flips is not None else 2 * n):
        inner = sorted(tris, key=sorted)
        if len(inner) < 2:
            break
        t1 = r.choice(inner)
        shared = [t2 for t2 in inner if t2 != t1 and len(t1 & t2) == 2]
        if not shared:
            continue
        t2 = r.choice(shared)
        a, b = sorted(t1 & t2)
        (c,), (d,) = t1 - t2, t2 - t1
        if norm_edge(c, d) in edges:
            continue
        edges.discard(norm_edge(a, b))
        edges.add(norm_edge(c, d))
        tris -= {t1, t2}
        tris |= {frozenset((a, c, d)), frozenset((b, c, d))}
    return Graph(names, edges)


def thin_connected(g: Graph, keep_prob: float, r: random.Random) -> Graph:
    """Delete edges at random while keeping the graph connected."""
    current = g
    for e in r.sample(g.edges, len(g.edges)):
        if r.random() < keep_prob:
            continue
        trial = current.with_edges(remove=[e])
        if trial.is_connected():
            current = trial
    return current


def random_connected_planar(n: int, r: random.Random, keep_prob: float | None = None) -> Graph:
    if n == 1:
        return Graph(["v00"])
    if n == 2:
        return Graph(["v00", "v01"], [("v00", "v01")])
    tri = random_triangulation(n, r)
    return thin_connected(tri, r.uniform(0.0, 0.8) if keep_prob is None else keep_prob, r)


def random_biconnected_planar(n: int, r: random.Random) -> Graph:
    """Thin a triangulation but never below 2-connectivity."""
    current = random_triangulation(n, r)
    for e in r.sample(current.edges, len(current.edges)):
        if r.random() < 0.4:
            continue
        trial = current.with_edges(remove=[e])
        if nx.is_biconnected(trial.to_networkx()):
            current = trial
    return current


def random_spanning_subgraph(g: Graph, r: random.Random) -> Graph:
    p = r.random()
    return Graph(g.vertices, [e for e in g.edges if r.random() < p])


# -- brute-force graph oracles ---------------------------------------------


def component_count(vertices: list[str], edges: set[tuple[str, str]]) -> int:
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return nx.number_connected_components(g) if vertices else 0


def cut_vertices_bf(g: Graph) -> set[str]:
    base = component_count(g.vertices, set(g.edges))
    out = set()
    for v in g.vertices:
        rest = [w for w in g.vertices if w != v]
        es = {e for e in g.edges if v not in e}
        if component_count(rest, es) > base:
            out.add(v)
    return out


def is_biconnected_bf(g: Graph) -> bool:
    return g.n >= 3 and component_count(g.vertices, set(g.edges)) == 1 and not cut_vertices_bf(g)


def rotation_systems(g: Graph, limit: int):
    """Every rotation system of g (neighbour cycles fixed to start at the least neighbour)."""
    per_vertex = []
    for v in g.vertices:
        ns = g.neighbors(v)
        if len(ns) <= 2:
            per_vertex.append([tuple(ns)])
        else:
            per_vertex.append([(ns[0], *rest) for rest in itertools.permutations(ns[1:])])
    total = math.prod(len(x) for x in per_vertex)
    if total > limit:
        return None
    return (dict(zip(g.vertices, combo)) for combo in itertools.product(*per_vertex))


def trace_faces(rotation: dict[str, tuple[str, ...]]) -> list[set[str]]:
    seen = set()
    out = []
    for v, rot in rotation.items():
        for w in rot:
            if (v, w) in seen:
                continue
            verts = set()
            d = (v, w)
            while d not in seen:
                seen.add(d)
                verts.add(d[0])
                a, b = d
                r = rotation[b]
                d = (b, r[(r.index(a) + 1) % len(r)])
            out.append(verts)
    return out


def common_face_bf(g: Graph, limit: int = 50_000) -> bool | None:
    """Does some genus-0 rotation system put all cut-vertices on one face?
    None when the enumeration is too large."""
    if g.m == 0:
        return g.n <= 1
    cuts = cut_vertices_bf(g)
    systems = rotation_systems(g, limit)
    if systems is None:
        return None
    for rot in systems:
        fs = trace_faces(rot)
        if g.n - g.m + len(fs) != 2:
            continue
        if any(cuts <= f for f in fs):
            return True
    return False


# -- brute-force visibility ------------------------------------------------------


def visibility_bf(layout: BarLayout) -> set[tuple[str, str]]:
    """All owner pairs visible through some unit column, by direct scan."""
    bars = list(layout)
    out = set()
    for i, a in enumerate(bars):
        for b in bars[i + 1:]:
            if a.owner == b.owner or a.y == b.y:
                continue
            lo, hi = (a, b) if a.y < b.y else (b, a)
            for c in range(max(a.xl, b.xl), min(a.xr, b.xr)):
                blocked = any(
                    o is not a and o is not b and lo.y < o.y < hi.y and o.xl <= c and c + 1 <= o.xr for o in bars
                )
                if not blocked:
                    out.add(norm_edge(a.owner, b.owner))
                    break
    return out


def random_layout(r: random.Random, nbars: int, grid: int, owners: int) -> BarLayout:
    bars: list[Bar] = []
    levels = max(2, nbars // 2)
    tries = 0
    while len(bars) < nbars and tries < 50 * nbars:
        tries += 1
        y = r.randrange(levels)
        xl = r.randrange(grid)
        xr = r.randrange(xl + 1, grid + 1)
        if any(b.y == y and b.xl < xr and xl < b.xr for b in bars):
            continue
        bars.append(Bar(f"o{r.randrange(owners)}", y, xl, xr))
    return BarLayout(bars)


def atlas_graphs(n: int) -> list[Graph]:
    """Isomorphism class representatives on exactly n vertices (n <= 7)."""
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
