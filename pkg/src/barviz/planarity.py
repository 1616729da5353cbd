"""Planar embeddings as rotation systems, face tracing and the bar-visibility test."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .graph import Graph, cut_vertices

Dart = tuple[str, str]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: ``rotation[v]`` lists v's neighbours in clockwise order."""

    rotation: dict[str, tuple[str, ...]]

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.rotation.items())))

    def _next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        rot = self.rotation[v]
        return v, rot[rot.index(u) - 1]

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        """Index into :meth:`faces` of the face traced from every dart."""
        self.validate()
        return self._trace()[1]

    def faces(self) -> list[list[str]]:
        """Closed walks, one per face; each walk lists the tails of its darts."""
        self.validate()
        return self._trace()[0]

    def _trace(self) -> tuple[list[list[str]], dict[Dart, int]]:
        owner: dict[Dart, int] = {}
        walks: list[list[str]] = []
        for v in sorted(self.rotation):
            for w in self.rotation[v]:
                if (v, w) in owner:
                    continue
                walk = []
                d = (v, w)
                while d not in owner:
                    owner[d] = len(walks)
                    walk.append(d[0])
                    d = self._next_dart(d)
                if d != (v, w):
                    raise EmbeddingError("face tracing did not close up")
                walks.append(walk)
        return walks, owner

    def validate(self) -> None:
        for v, rot in self.rotation.items():
            if len(set(rot)) != len(rot):
                raise EmbeddingError(f"repeated neighbour in rotation at {v!r}")
            for w in rot:
                if w not in self.rotation or v not in self.rotation[w]:
                    raise EmbeddingError(f"rotation not symmetric on {v!r}-{w!r}")

    def graph(self) -> Graph:
        return Graph(self.rotation, ((v, w) for v, rot in self.rotation.items() for w in rot))

    def euler_ok(self) -> bool:
        """V - E + F = 2 on every connected component that has an edge."""
        g = self.graph()
        fod = self.face_of_dart
        for comp in g.components():
            if len(comp) == 1:
                continue
            cs = set(comp)
            e = sum(1 for a, _ in g.edge_set if a in cs)
            f = len({i for (a, _), i in fod.items() if a in cs})
            if len(comp) - e + f != 2:
                return False
        return True

    def dump(self) -> str:
        return "".join(f"r {v} {' '.join(self.rotation[v])}".rstrip() + "\n" for v in sorted(self.rotation))


def embed(g: Graph) -> PlanarEmbedding | None:
    """A certified planar embedding of ``g``, or None when ``g`` is nonplanar."""
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) if g.degree(v) else () for v in g.vertices}
    result = PlanarEmbedding(rotation)
    if not result.euler_ok():
        raise EmbeddingError("planarity backend returned an embedding failing the Euler check")
    return result


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(g.to_networkx(), counterexample=False)[0]


def faces(e: PlanarEmbedding) -> list[list[str]]:
    return e.faces()


def _fresh_name(g: Graph, base: str = "apex") -> str:
    name = base
    while name in g:
        name += "'"
    return name


def cutvertices_on_common_face(g: Graph) -> bool:
    """Whether some planar embedding of ``g`` puts every cut-vertex on one face.

    Uses the apex reduction: the cut-vertices share a face iff joining a new
    vertex to all of them keeps the graph planar.
    """
    if not is_planar(g):
        return False
    cuts = cut_vertices(g)
    if len(cuts) <= 1:
        return True
    apex = _fresh_name(g)
    return is_planar(g.with_edges(add=((apex, c) for c in cuts)))


def bar_visibility_verdict(g: Graph) -> tuple[bool, str]:
    if not is_planar(g):
        return False, "nonplanar"
    if not cutvertices_on_common_face(g):
        return False, "cut-vertices not on a common face"
    return True, "planar with all cut-vertices on one face"


def is_bar_visibility_graph(g: Graph) -> bool:
    return bar_visibility_verdict(g)[0]
