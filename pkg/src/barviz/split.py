"""t-splits: each vertex replaced by up to t independent copies, adjacency kept
in the some-copy-pair sense.  Also the exhaustive searches that produce
them (biplanar decompositions, split thickness) and path decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .graph import Edge, Graph, GraphError, norm_edge
from .planarity import is_planar

PATH_LIMIT = 8


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran out of budget before reaching a verdict."""


def copy_id(original: str, index: int) -> str:
    return f"{original}#{index}"


def original_of(copy: str) -> str:
    head, sep, _ = copy.rpartition("#")
    if not sep:
        raise GraphError(f"copy identifier {copy!r} has no '#'")
    return head


@dataclass(frozen=True)
class SplitMap:
    t: int
    assignment: dict[str, tuple[str, ...]]
    inverse: dict[str, str] = field(init=False, compare=False)

    def __post_init__(self):
        inverse = {}
        for u, copies in self.assignment.items():
            for c in copies:
                if c in inverse:
                    raise GraphError(f"copy {c!r} assigned to both {inverse[c]!r} and {u!r}")
                inverse[c] = u
        object.__setattr__(self, "inverse", inverse)

    def copies(self, u: str) -> tuple[str, ...]:
        return self.assignment[u]


@dataclass(frozen=True)
class SplitInstance:
    base: Graph
    map: SplitMap
    split_graph: Graph

    def with_split_graph(self, g: Graph) -> SplitInstance:
        return SplitInstance(self.base, self.map, g)

    def relabel_originals(self, rename: dict[str, str]) -> SplitInstance:
        """Rename original vertices; copies become ``<new>#<k>`` in order."""
        assignment = {}
        copy_rename = {}
        for u, copies in self.map.assignment.items():
            new = [copy_id(rename[u], k) for k in range(1, len(copies) + 1)]
            assignment[rename[u]] = tuple(new)
            copy_rename.update(zip(copies, new))
        return SplitInstance(
            self.base.relabel(rename),
            SplitMap(self.map.t, assignment),
            self.split_graph.relabel(copy_rename),
        )


@dataclass
class ValidationReport:
    problems: list[str]
    planar: bool

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_split(inst: SplitInstance) -> ValidationReport:
    problems = []
    base, sm, sg = inst.base, inst.map, inst.split_graph
    if sm.t < 1:
        problems.append(f"t={sm.t} is not positive")
    if set(sm.assignment) != set(base.vertices):
        missing = sorted(set(base.vertices) - set(sm.assignment))
        unknown = sorted(set(sm.assignment) - set(base.vertices))
        if missing:
            problems.append("no copies for " + " ".join(missing))
        if unknown:
            problems.append("copies for unknown vertices " + " ".join(unknown))
    for u in sorted(sm.assignment):
        copies = sm.assignment[u]
        if not copies:
            problems.append(f"S({u}) is empty")
        if len(copies) > sm.t:
            problems.append(f"S({u}) has {len(copies)} copies > t={sm.t}")
        if len(set(copies)) != len(copies):
            problems.append(f"S({u}) repeats a copy")
    if set(sm.inverse) != set(sg.vertices):
        extra = sorted(set(sg.vertices) - set(sm.inverse))
        absent = sorted(set(sm.inverse) - set(sg.vertices))
        if extra:
            problems.append("split graph has unassigned vertices " + " ".join(extra[:8]))
        if absent:
            problems.append("copies missing from split graph " + " ".join(absent[:8]))
    for c in sorted(set(sm.inverse) & set(base.vertices)):
        if sm.inverse[c] != c:
            problems.append(f"copy {c!r} of {sm.inverse[c]} shadows an original vertex")

    represented: set[Edge] = set()
    for a, b in sg.edges:
        if a not in sm.inverse or b not in sm.inverse:
            continue
        ua, ub = sm.inverse[a], sm.inverse[b]
        if ua == ub:
            problems.append(f"independence violated: {a}-{b} both copy {ua}")
            continue
        represented.add(norm_edge(ua, ub))
    for u, v in sorted(represented - base.edge_set):
        problems.append(f"adjacency violated: copies of {u},{v} adjacent but {u}{v} is not an edge")
    for u, v in sorted(base.edge_set - represented):
        problems.append(f"adjacency violated: edge {u}{v} has no copy edge")
    return ValidationReport(problems, is_planar(sg))


def identity_split(g: Graph) -> SplitInstance:
    """The 1-split made of one copy per vertex."""
    sm = SplitMap(1, {u: (copy_id(u, 1),) for u in g.vertices})
    return SplitInstance(g, sm, g.relabel({u: copy_id(u, 1) for u in g.vertices}))


def prune_to_subgraph(inst: SplitInstance, h: Graph) -> SplitInstance:
    """Drop copy edges whose originals are not adjacent in the spanning subgraph ``h``."""
    if set(h.vertices) != set(inst.base.vertices):
        raise GraphError("subgraph is not spanning")
    outside = h.edge_set - inst.base.edge_set
    if outside:
        u, v = min(outside)
        raise GraphError(f"edge {u}-{v} is not in the base graph")
    inv = inst.map.inverse
    keep = [(a, b) for a, b in inst.split_graph.edges if h.has_edge(inv[a], inv[b])]
    return SplitInstance(h, inst.map, Graph(inst.split_graph.vertices, keep))


def split_from_decomposition(g: Graph, parts: list[Graph]) -> SplitInstance:
    """Disjoint union of planar parts, part i living on copy i of each vertex."""
    if not parts:
        raise GraphError("need at least one part")
    seen: set[Edge] = set()
    for i, p in enumerate(parts, 1):
        if p.edge_set & seen:
            raise GraphError(f"part {i} repeats an edge of an earlier part")
        if p.edge_set - g.edge_set:
            raise GraphError(f"part {i} has an edge outside the graph")
        if not is_planar(p):
            raise GraphError(f"part {i} is nonplanar")
        seen |= p.edge_set
    if seen != g.edge_set:
        raise GraphError("parts do not cover every edge")
    assignment = {}
    for u in g.vertices:
        used = [i for i, p in enumerate(parts, 1) if any(u in e for e in p.edge_set)]
        assignment[u] = tuple(copy_id(u, i) for i in used or [1])
    edges = [(copy_id(a, i), copy_id(b, i)) for i, p in enumerate(parts, 1) for a, b in p.edges]
    sm = SplitMap(len(parts), assignment)
    return SplitInstance(g, sm, Graph(sm.inverse, edges))


# -- exhaustive searches ------------------------------------------------------


def _planar_nx(g: nx.Graph) -> bool:
    return nx.check_planarity(g, counterexample=False)[0]


def search_biplanar(g: Graph, budget: int = 2_000_000) -> tuple[Graph, Graph] | None:
    """Partition E(g) into two planar graphs, or None if none exists.

    Backtracks over a 2-colouring of the edges in sorted order, part one
    first, so the answer is the lexicographically least colouring.  The
    first edge is fixed into part one.  ``budget`` caps search nodes.
    """
    edges = g.edges
    if not edges:
        return Graph(g.vertices), Graph(g.vertices)
    parts = [nx.Graph(), nx.Graph()]
    colour: list[int] = []
    cap = max(3 * g.n - 6, 1)
    nodes = 0

    def extend(k: int) -> bool:
        nonlocal nodes
        if k == len(edges):
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"biplanar search exceeded {budget} nodes")
        a, b = edges[k]
        for side in ((0,) if k == 0 else (0, 1)):
            p = parts[side]
            if p.number_of_edges() >= cap:
                continue
            p.add_edge(a, b)
            if _planar_nx(p):
                colour.append(side)
                if extend(k + 1):
                    return True
                colour.pop()
            p.remove_edge(a, b)
        return False

    if not extend(0):
        return None
    first = [e for e, c in zip(edges, colour) if c == 0]
    second = [e for e, c in zip(edges, colour) if c == 1]
    return Graph(g.vertices, first), Graph(g.vertices, second)


def find_planar_split(g: Graph, t: int, budget: int = 2_000_000) -> SplitInstance | None:
    """A planar t-split of g with one copy edge per edge of g, or None.

    Each edge picks a pair of copy indices; a vertex may open copy k+1 only
    after using copy k, which removes copy-relabelling symmetry.
    """
    edges = g.edges
    used = {u: 0 for u in g.vertices}
    sg = nx.Graph()
    chosen: list[tuple[int, int]] = []
    nodes = 0

    def extend(k: int) -> bool:
        nonlocal nodes
        if k == len(edges):
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"split search exceeded {budget} nodes")
        a, b = edges[k]
        for i in range(1, min(used[a] + 1, t) + 1):
            for j in range(1, min(used[b] + 1, t) + 1):
                ca, cb = copy_id(a, i), copy_id(b, j)
                sg.add_edge(ca, cb)
                if _planar_nx(sg):
                    saved = used[a], used[b]
                    used[a], used[b] = max(used[a], i), max(used[b], j)
                    chosen.append((i, j))
                    if extend(k + 1):
                        return True
                    chosen.pop()
                    used[a], used[b] = saved
                sg.remove_edge(ca, cb)
        return False

    if not extend(0):
        return None
    assignment = {u: tuple(copy_id(u, k) for k in range(1, max(used[u], 1) + 1)) for u in g.vertices}
    sm = SplitMap(t, assignment)
    split_edges = [(copy_id(a, i), copy_id(b, j)) for (a, b), (i, j) in zip(edges, chosen)]
    return SplitInstance(g, sm, Graph(sm.inverse, split_edges))


def sigma_exact(g: Graph, t_max: int, budget: int = 2_000_000) -> int | None:
    """Split thickness of g if it is at most ``t_max``, else None.

    Raises BudgetExceeded when the search cannot decide within budget.
    """
    if is_planar(g):
        return 1
    for t in range(2, t_max + 1):
        if find_planar_split(g, t, budget) is not None:
            return t
    return None


# -- path decompositions ---------------------------------------------------------


def _paths_through(edge: Edge, remaining: frozenset[Edge], adj: dict[str, set[str]]):
    """All simple paths in ``remaining`` that use ``edge``, longest first."""
    a, b = edge

    def walks(start: str, avoid: frozenset[str]):
        out = [[start]]
        for w in sorted(adj[start]):
            if w not in avoid and norm_edge(start, w) in remaining:
                out += [[start, *rest] for rest in walks(w, avoid | {w})]
        return out

    found = []
    for left in walks(a, frozenset((a, b))):
        used = frozenset(left) | {b}
        for right in walks(b, used):
            found.append(left[::-1] + right)
    found.sort(key=lambda p: (-len(p), p))
    return found


def decompose_into_paths(g: Graph, k: int) -> list[list[str]] | None:
    """At most k edge-disjoint paths covering every edge, or None if impossible."""
    if g.n > PATH_LIMIT:
        raise GraphError(f"path decomposition search limited to {PATH_LIMIT} vertices")
    adj = {v: set(g.neighbor_set(v)) for v in g.vertices}
    n = g.n

    @lru_cache(maxsize=None)
    def solve(remaining: frozenset[Edge], budget: int):
        if not remaining:
            return ()
        if budget == 0 or len(remaining) > budget * max(n - 1, 1):
            return None
        deg: dict[str, int] = {}
        for a, b in remaining:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if sum(d % 2 for d in deg.values()) > 2 * budget:
            return None
        for path in _paths_through(min(remaining), remaining, adj):
            used = frozenset(norm_edge(x, y) for x, y in zip(path, path[1:]))
            rest = solve(remaining - used, budget - 1)
            if rest is not None:
                return (tuple(path), *rest)
        return None

    result = solve(g.edge_set, k)
    return None if result is None else [list(p) for p in result]


def is_path_decomposition(g: Graph, paths: list[list[str]]) -> bool:
    covered: list[Edge] = []
    for p in paths:
        if len(p) < 2 or len(set(p)) != len(p):
            return False
        covered += [norm_edge(x, y) for x, y in zip(p, p[1:])]
    return len(covered) == len(set(covered)) and set(covered) == g.edge_set
