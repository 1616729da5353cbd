"""Bar layout constructions.

``tt_layout`` is the classical face-coordinate construction for a
2-connected planar graph: vertices are numbered bottom to top by an
st-numbering, faces are numbered left to right by longest paths in the
dual, every vertex bar spans from the face on its left to the face on its
right.  ``two_bar_layout`` glues such layouts along the block-cut tree,
giving each cut-vertex one extra "pocket" bar under its child blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .bars import Bar, BarLayout, LayoutError
from .graph import Graph, GraphError, block_cut_tree, complete_graph, is_biconnected
from .oracle import verify_representation
from .planarity import PlanarEmbedding, embed
from .split import SplitInstance, SplitMap, prune_to_subgraph, search_biplanar, split_from_decomposition
from .transfer import TransferStep, reduce_cut_copies

SMALL_GRAPH_LIMIT = 4


class VerificationError(RuntimeError):
    """A constructed layout failed the oracle; always a bug."""


def _require_verified(layout: BarLayout, target: Graph, t: int, what: str) -> BarLayout:
    report = verify_representation(layout, target, t)
    if not report.ok:
        raise VerificationError(f"{what}: " + "; ".join(report.lines()[1:]))
    return layout


# -- st-numbering --------------------------------------------------------


def st_numbering(g: Graph, s: str, t: str) -> dict[str, int]:
    """Number the vertices 1..n so that s is 1, t is n and every other vertex
    has both a lower- and a higher-numbered neighbour."""
    if not g.has_edge(s, t):
        raise GraphError(f"{s}-{t} is not an edge")
    if not is_biconnected(g):
        raise GraphError("st-numbering needs a 2-connected graph")

    # DFS from s whose first tree edge is s-t, then Tarjan's list insertion.
    pre: dict[str, int] = {s: 0}
    parent: dict[str, str] = {}
    low: dict[str, str] = {s: s}
    order = [s]
    stack = [(s, iter([t] + [w for w in g.neighbors(s) if w != t]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in pre:
                pre[w] = len(order)
                order.append(w)
                parent[w] = v
                low[w] = w
                stack.append((w, iter(g.neighbors(w))))
                break
            if w != parent.get(v) and pre[w] < pre[low[v]]:
                low[v] = w
        else:
            stack.pop()
            if v in parent:
                p = parent[v]
                if pre[low[v]] < pre[low[p]]:
                    low[p] = low[v]

    nxt: dict[str, str | None] = {s: t, t: None}
    prv: dict[str, str | None] = {s: None, t: s}
    minus = {s}
    for v in order[2:]:
        p = parent[v]
        if low[v] in minus:
            before = prv[p]
            prv[v], nxt[v] = before, p
            prv[p] = v
            if before is not None:
                nxt[before] = v
            minus.discard(p)
        else:
            after = nxt[p]
            prv[v], nxt[v] = p, after
            nxt[p] = v
            if after is not None:
                prv[after] = v
            minus.add(p)
    head = s
    while prv[head] is not None:
        head = prv[head]
    numbering = {}
    x: str | None = head
    while x is not None:
        numbering[x] = len(numbering) + 1
        x = nxt[x]
    return numbering


def is_st_numbering(g: Graph, numbering: dict[str, int], s: str, t: str) -> bool:
    n = g.n
    if sorted(numbering.values()) != list(range(1, n + 1)) or set(numbering) != set(g.vertices):
        return False
    if numbering[s] != 1 or numbering[t] != n:
        return False
    for v in g.vertices:
        if v in (s, t):
            continue
        ranks = [numbering[w] for w in g.neighbors(v)]
        if min(ranks) > numbering[v] or max(ranks) < numbering[v]:
            return False
    return True


# -- single-block layout ------------------------------------------------------


def tt_layout(g: Graph, s: str, t: str, embedding: PlanarEmbedding | None = None) -> BarLayout:
    """One bar per vertex of a 2-connected planar graph with s lowest and t
    highest; the bars of s and t both span the whole layout."""
    if g.n < 3:
        raise GraphError("tt_layout needs at least three vertices")
    emb = embedding or embed(g)
    if emb is None:
        raise GraphError("graph is nonplanar")
    number = st_numbering(g, s, t)
    fod = emb.face_of_dart

    # Any face through s-t may serve as the outer face.  It is cut in two:
    # its dart on s-t, and the rest of its boundary.
    outer = fod[(t, s)]
    split_id = max(fod.values()) + 1

    def face(dart: tuple[str, str]) -> int:
        f = fod[dart]
        if f == outer and dart not in ((s, t), (t, s)):
            return split_id
        return f

    left: dict[tuple[str, str], int] = {}
    right: dict[tuple[str, str], int] = {}
    succ: dict[int, set[int]] = {}
    indeg: dict[int, int] = {}
    for a, b in g.edges:
        u, v = (a, b) if number[a] < number[b] else (b, a)
        lf, rf = face((u, v)), face((v, u))
        left[(u, v)], right[(u, v)] = lf, rf
        for f in (lf, rf):
            succ.setdefault(f, set())
            indeg.setdefault(f, 0)
        if rf not in succ[lf]:
            succ[lf].add(rf)
            indeg[rf] += 1

    # Longest-path layering of the dual, which is acyclic for a bipolar
    # orientation.
    xpos = {f: 0 for f in succ}
    ready = sorted(f for f, d in indeg.items() if d == 0)
    done = 0
    while ready:
        f = ready.pop()
        done += 1
        for h in sorted(succ[f]):
            xpos[h] = max(xpos[h], xpos[f] + 1)
            indeg[h] -= 1
            if indeg[h] == 0:
                ready.append(h)
    if done != len(succ):
        raise LayoutError("dual graph has a cycle; embedding and numbering disagree")

    lo: dict[str, int] = {}
    hi: dict[str, int] = {}
    for (u, v), lf in left.items():
        xl, xr = xpos[lf], xpos[right[(u, v)]]
        for w in (u, v):
            lo[w] = min(lo.get(w, xl), xl)
            hi[w] = max(hi.get(w, xr), xr)
    bars = [Bar(v, number[v] - 1, lo[v], hi[v]) for v in sorted(g.vertices, key=number.get)]
    layout = BarLayout(bars)
    xmin, xmax, _, _ = layout.extent()
    for end in (s, t):
        b = layout.per_vertex()[end][0]
        if (b.xl, b.xr) != (xmin, xmax):
            raise LayoutError(f"bar of {end!r} does not span the layout")
    return layout


def one_bar_layout(g: Graph) -> BarLayout:
    """tt_layout with a deterministic st edge: least vertex and its least neighbour."""
    s = g.vertices[0]
    return tt_layout(g, s, g.neighbors(s)[0])


# -- block gluing ----------------------------------------------------------


def _block_layout(block: Graph, source: str | None) -> BarLayout:
    """Layout of one block with ``source`` (if given) at the bottom, full width."""
    vs = block.vertices
    if len(vs) == 1:
        return BarLayout([Bar(vs[0], 0, 0, 1)])
    if len(vs) == 2:
        lo_v = source if source is not None else vs[0]
        hi_v = vs[1] if lo_v == vs[0] else vs[0]
        return BarLayout([Bar(lo_v, 0, 0, 1), Bar(hi_v, 1, 0, 1)])
    s = source if source is not None else vs[0]
    return tt_layout(block, s, block.neighbors(s)[0])


def two_bar_layout(g: Graph) -> BarLayout:
    """Non-cut-vertices get one bar, cut-vertices two."""
    if embed(g) is None:
        raise GraphError("graph is nonplanar")
    tree = block_cut_tree(g)
    strips: list[list[Bar]] = []

    placed: set[int] = set()
    for root in range(len(tree.blocks)):
        if root in placed:
            continue
        parent = tree.rooted(root)
        placed.update(parent)
        strips.append(list(_block_layout(tree.block_graph(root), None)))
        # Breadth-first over cut-vertices, each with a pocket under its children.
        queue = [root]
        while queue:
            b = queue.pop(0)
            for c in tree.blocks[b]:
                if c not in tree.cut_vertices or c == parent[b]:
                    continue
                children = [k for k in tree.incidence[c] if parent.get(k) == c]
                pocket: list[Bar] = []
                cursor = 0
                for k in children:
                    child = _block_layout(tree.block_graph(k), c)
                    xmin, xmax, _, _ = child.extent()
                    pocket += [bar.shifted(cursor - xmin) for bar in child if bar.owner != c]
                    cursor += xmax - xmin + 1
                    queue.append(k)
                floor = min(bar.y for bar in pocket) - 1
                pocket.append(Bar(c, floor, 0, cursor - 1))
                strips.append(pocket)

    bars: list[Bar] = []
    cursor = 0
    for strip in strips:
        xmin = min(b.xl for b in strip)
        xmax = max(b.xr for b in strip)
        bars += [b.shifted(cursor - xmin) for b in strip]
        cursor += xmax - xmin + 1
    return BarLayout(bars)


# -- small cases -----------------------------------------------------------------


def small_graph_layout(g: Graph, bars_per_vertex: int = 1, grid_max: int = 8) -> BarLayout | None:
    """Exhaustive search for a one-bar layout with x-endpoints in [0, grid_max].

    Bars are placed bottom to top; a new top bar cannot block anything below
    it, so the visibilities among placed bars are final and prune the search.
    """
    if g.n > SMALL_GRAPH_LIMIT or bars_per_vertex != 1:
        raise GraphError(f"exhaustive layout search limited to {SMALL_GRAPH_LIMIT} vertices and one bar each")
    intervals = [(a, b) for a in range(grid_max + 1) for b in range(a + 1, grid_max + 1)]
    vs = g.vertices

    def place(order, top, placed):
        k = len(placed)
        if k == len(order):
            return placed
        v = order[k]
        below = set(order[:k])
        want = g.neighbor_set(v) & below
        pending = [w for w in order[:k] if g.neighbor_set(w) - below - {v}]
        for xl, xr in intervals:
            seen = {top[c] for c in range(xl, xr) if top[c] is not None}
            if seen != want:
                continue
            new_top = top[:xl] + [v] * (xr - xl) + top[xr:]
            # everything still waiting for a neighbour must stay exposed
            if any(w not in new_top for w in pending):
                continue
            found = place(order, new_top, placed + [Bar(v, k, xl, xr)])
            if found:
                return found
        return None

    for order in permutations(vs):
        found = place(order, [None] * grid_max, [])
        if found is not None:
            return BarLayout(found)
    return None


def k5_layout(h: Graph) -> BarLayout:
    """At most two bars per vertex for any graph on five vertices."""
    if h.n != 5:
        raise GraphError("k5_layout needs exactly five vertices")
    if h.m < 10:
        return two_bar_layout(h)
    u, w = h.edges[0]
    main = one_bar_layout(h.with_edges(remove=[(u, w)]))
    _, xmax, _, _ = main.extent()
    stack = [Bar(u, 0, xmax + 1, xmax + 2), Bar(w, 1, xmax + 1, xmax + 2)]
    return BarLayout([*main, *stack])


# -- split pipeline ------------------------------------------------------------------


def merge_copies(layout: BarLayout, split_map: SplitMap) -> BarLayout:
    try:
        return layout.relabeled(split_map.inverse)
    except KeyError as exc:
        raise GraphError(f"unknown copy identifier {exc.args[0]!r}") from None


def split_pipeline(
    inst: SplitInstance,
    h: Graph,
    *,
    trace: list[TransferStep] | None = None,
    debug: bool = False,
) -> BarLayout:
    """A verified layout of spanning subgraph ``h`` with at most t+1 bars per vertex."""
    pruned = prune_to_subgraph(inst, h)
    reduced = reduce_cut_copies(pruned, trace=trace, debug=debug)
    copies_layout = two_bar_layout(reduced.split_graph)
    layout = merge_copies(copies_layout, reduced.map)
    return _require_verified(layout, h, inst.map.t + 1, "split pipeline")


# -- bound calculator --------------------------------------------------------------------


@dataclass
class BoundReport:
    n: int
    bound: int
    regime: str
    constructive: bool
    layout_bars: int | None
    layout: BarLayout | None = None

    def line(self) -> str:
        bars = "-" if self.layout_bars is None else str(self.layout_bars)
        return f"bound {self.bound} constructive {str(self.constructive).lower()} regime {self.regime} bars {bars}"


def bar_number_bound(n: int) -> int:
    if n <= 4:
        return 1
    if n <= 6:
        return 2
    return math.ceil(n / 6) + 1


def _split_onto(split: SplitInstance, g: Graph) -> SplitInstance:
    """Re-express a split of K_n on g's vertex names (sorted order to sorted order)."""
    base = split.base
    if base.n != g.n or base.m != g.n * (g.n - 1) // 2:
        raise GraphError("split source is not a split of the complete graph on n vertices")
    if base.vertices == g.vertices:
        return split
    rename = dict(zip(base.vertices, g.vertices))
    return split.relabel_originals(rename)


def visibility_bound(g: Graph, split_source: SplitInstance | None = None, *, budget: int = 2_000_000) -> BoundReport:
    n = g.n
    bound = bar_number_bound(n)
    layout: BarLayout | None = None
    if n <= 4:
        regime = "n<=4"
        layout = small_graph_layout(g)
    elif n == 5:
        regime = "n=5"
        layout = k5_layout(g)
    elif n == 6:
        regime = "n=6"
        if embed(g) is not None:
            layout = two_bar_layout(g)
        else:
            split = split_source or _searched_split(complete_graph(g.vertices), budget)
            if split is not None:
                layout = split_pipeline(_split_onto(split, g), g)
    else:
        regime = "n>=7"
        split = split_source
        if split is None and n <= 8:
            split = _searched_split(complete_graph(g.vertices), budget)
        if split is not None:
            if split.map.t > math.ceil(n / 6):
                raise GraphError(f"split source has t={split.map.t}, expected at most {math.ceil(n / 6)}")
            layout = split_pipeline(_split_onto(split, g), g)
    if layout is not None:
        _require_verified(layout, g, max(bound, layout.max_bars_per_vertex()), "bound layout")
    bars = layout.max_bars_per_vertex() if layout is not None else None
    constructive = bars is not None and bars <= bound
    return BoundReport(n, bound, regime, constructive, bars, layout)


def _searched_split(kn: Graph, budget: int) -> SplitInstance | None:
    parts = search_biplanar(kn, budget=budget)
    if parts is None:
        return None
    return split_from_decomposition(kn, list(parts))
