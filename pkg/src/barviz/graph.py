"""Undirected simple graphs over text identifiers, plus biconnectivity.

Every iteration over vertices or neighbours goes through sorted order so
that all algorithms built on top of this module are replayable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

Edge = tuple[str, str]

ISOMORPHISM_LIMIT = 10


class GraphError(ValueError):
    """Raised for malformed graphs or unknown vertices."""


def norm_edge(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph.

    Endpoints of edges are declared implicitly.  Repeated edges in the
    constructor collapse; the text parser is the place that rejects them.
    """

    __slots__ = ("_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        adj: dict[str, set[str]] = {}
        for v in vertices:
            adj.setdefault(str(v), set())
        es: set[Edge] = set()
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
            es.add(norm_edge(u, v))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = frozenset(es)
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> list[str]:
        return sorted(self._adj)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self._edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: str) -> list[str]:
        self._check(v)
        return sorted(self._adj[v])

    def neighbor_set(self, v: str) -> frozenset[str]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: str) -> int:
        self._check(v)
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def _check(self, v: str) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._adj), self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices: Iterable[str]) -> Graph:
        keep = set(vertices)
        for v in keep:
            self._check(v)
        return Graph(keep, (e for e in self._edges if e[0] in keep and e[1] in keep))

    def remove_vertex(self, v: str) -> Graph:
        self._check(v)
        return self.subgraph(w for w in self._adj if w != v)

    def with_edges(self, add: Iterable[tuple[str, str]] = (), remove: Iterable[tuple[str, str]] = ()) -> Graph:
        drop = {norm_edge(u, v) for u, v in remove}
        es = [e for e in self._edges if e not in drop]
        return Graph(self._adj, [*es, *add])

    def relabel(self, mapping: dict[str, str]) -> Graph:
        f = lambda v: mapping.get(v, v)  # noqa: E731
        return Graph((f(v) for v in self._adj), ((f(u), f(v)) for u, v in self._edges))

    def components(self) -> list[list[str]]:
        """Connected components, each sorted, ordered by least vertex."""
        seen: set[str] = set()
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        return cls((str(v) for v in g.nodes), ((str(u), str(v)) for u, v in g.edges))


def complete_graph(names: Iterable[str] | int) -> Graph:
    if isinstance(names, int):
        names = [f"v{i}" for i in range(1, names + 1)]
    vs = list(names)
    return Graph(vs, ((a, b) for i, a in enumerate(vs) for b in vs[i + 1:]))


def path_graph(names: Iterable[str]) -> Graph:
    vs = list(names)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(names: Iterable[str]) -> Graph:
    vs = list(names)
    return Graph(vs, zip(vs, vs[1:] + vs[:1]))


# -- biconnectivity ------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks and cut-vertices of a graph.

    ``blocks[i]`` is a sorted vertex tuple and ``block_edges[i]`` the edges
    of that block; isolated vertices are single-vertex blocks with no edges.
    """

    blocks: tuple[tuple[str, ...], ...]
    block_edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[str]
    incidence: dict[str, tuple[int, ...]] = field(compare=False)

    def blocks_of(self, v: str) -> tuple[int, ...]:
        return self.incidence.get(v, ())

    def block_graph(self, i: int) -> Graph:
        return Graph(self.blocks[i], self.block_edges[i])

    def rooted(self, root: int) -> dict[int, str | None]:
        """Parent cut-vertex of every block in ``root``'s tree (root maps to None)."""
        parent: dict[int, str | None] = {root: None}
        queue = [root]
        while queue:
            b = queue.pop(0)
            for c in self.blocks[b]:
                if c not in self.cut_vertices or c == parent[b]:
                    continue
                for child in self.incidence[c]:
                    if child not in parent:
                        parent[child] = c
                        queue.append(child)
        return parent

    def as_networkx(self) -> nx.Graph:
        """Bipartite block/cut-vertex incidence graph."""
        t = nx.Graph()
        for i in range(len(self.blocks)):
            t.add_node(("B", i))
        for c in self.cut_vertices:
            for i in self.incidence[c]:
                t.add_edge(("C", c), ("B", i))
        return t


def _dfs_biconnected(g: Graph) -> tuple[list[list[Edge]], list[str], set[str]]:
    """One low-point DFS; returns edge lists per block, isolated vertices, cut set."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    blocks: list[list[Edge]] = []
    isolated: list[str] = []
    cuts: set[str] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if g.degree(root) == 0:
            isolated.append(root)
            continue
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(g.neighbors(w))))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent is None:
                    continue
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(norm_edge(*e))
                        if e == (parent, v):
                            break
                    blocks.append(block)
                    if parent == root:
                        root_children += 1
                    else:
                        cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return blocks, isolated, cuts


def cut_vertices(g: Graph) -> frozenset[str]:
    return frozenset(_dfs_biconnected(g)[2])


def block_cut_tree(g: Graph) -> BlockCutTree:
    edge_blocks, isolated, cuts = _dfs_biconnected(g)
    raw = [(tuple(sorted({x for e in es for x in e})), frozenset(es)) for es in edge_blocks]
    raw += [((v,), frozenset()) for v in isolated]
    raw.sort(key=lambda b: b[0])
    incidence: dict[str, list[int]] = {}
    for i, (vs, _) in enumerate(raw):
        for v in vs:
            incidence.setdefault(v, []).append(i)
    return BlockCutTree(
        blocks=tuple(vs for vs, _ in raw),
        block_edges=tuple(es for _, es in raw),
        cut_vertices=frozenset(cuts),
        incidence={v: tuple(ix) for v, ix in incidence.items()},
    )


def is_biconnected(g: Graph) -> bool:
    """2-connected with at least three vertices."""
    return g.n >= 3 and g.is_connected() and not cut_vertices(g)


def lobes(g: Graph, v: str) -> list[Graph]:
    """The subgraphs induced by ``v`` together with each component of g - v."""
    rest = g.remove_vertex(v)
    return [g.subgraph([*comp, v]) for comp in rest.components()]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if max(g1.n, g2.n) > ISOMORPHISM_LIMIT:
        raise GraphError(f"isomorphism test limited to {ISOMORPHISM_LIMIT} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degree(v) for v in g1.vertices) != sorted(g2.degree(v) for v in g2.vertices):
        return False
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())
