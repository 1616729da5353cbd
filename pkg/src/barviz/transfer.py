"""The u,v-transfer and the cut-copy reduction built on it.

A transfer at cut-vertex u hands every edge uw with w outside v's
component of G - u over to v.  Applied between two cut copies of the same
original vertex inside a planar split, it keeps the split planar and valid
while removing one cut-vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, cut_vertices, is_isomorphic, lobes
from .planarity import is_planar
from .split import SplitInstance, validate_split


def transfer(g: Graph, u: str, v: str) -> Graph:
    g.neighbor_set(u)
    g.neighbor_set(v)
    if u == v:
        raise GraphError("transfer needs two distinct vertices")
    if u not in cut_vertices(g):
        raise GraphError(f"{u!r} is not a cut-vertex")
    return _transfer(g, u, v)


def _component_without(g: Graph, u: str, v: str) -> set[str]:
    """Vertex set of the component of g - u that contains v."""
    comp = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in g.neighbor_set(x):
            if y != u and y not in comp:
                comp.add(y)
                stack.append(y)
    return comp


def _transfer(g: Graph, u: str, v: str) -> Graph:
    keep = _component_without(g, u, v)
    moved = [w for w in g.neighbors(u) if w not in keep]
    return g.with_edges(add=[(v, w) for w in moved], remove=[(u, w) for w in moved])


@dataclass
class TransferReport:
    """Outcome of checking the transfer properties; ``failures`` empty means all held."""

    u: str
    v: str
    result: Graph
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"transfer {self.u} {self.v}: {'PASS' if self.ok else 'FAIL'}"]
        out += [f"fail {f}" for f in self.failures]
        out += [f"note {n}" for n in self.notes]
        return out


def check_transfer(g: Graph, u: str, v: str, *, lobe_check: bool = False) -> TransferReport:
    """Transfer u to v in a planar graph and check what must survive.

    (a) the result is planar; (b) u is no longer a cut-vertex; (c) every
    vertex outside {u, v} keeps its cut status; (d) v is a cut-vertex when
    u and v share a component.  With ``lobe_check`` also confirms that each
    u-lobe not containing v reappears as an isomorphic v-lobe.
    """
    if not is_planar(g):
        raise GraphError("graph is nonplanar")
    result = transfer(g, u, v)
    report = TransferReport(u, v, result)
    before = cut_vertices(g)
    after = cut_vertices(result)
    if not is_planar(result):
        report.failures.append("result is nonplanar")
    if u in after:
        report.failures.append(f"{u} is still a cut-vertex")
    changed = sorted(w for w in (before ^ after) - {u, v})
    if changed:
        report.failures.append("cut status changed at " + " ".join(changed))
    if _same_component(g, u, v):
        if v not in after:
            report.failures.append(f"{v} is not a cut-vertex")
    else:
        report.notes.append(f"{u} and {v} lie in different components; {u} is now isolated")
    if lobe_check:
        report.failures += _lobe_failures(g, result, u, v)
    return report


def _same_component(g: Graph, u: str, v: str) -> bool:
    return any(u in comp and v in comp for comp in g.components())


def _lobe_failures(g: Graph, result: Graph, u: str, v: str) -> list[str]:
    keep = _component_without(g, u, v)
    moved = [lobe for lobe in lobes(g, u) if lobe.neighbor_set(u) and not (set(lobe.vertices) & keep)]
    pool = lobes(result, v)
    failures = []
    for lobe in moved:
        match = next((i for i, cand in enumerate(pool) if is_isomorphic(lobe, cand)), None)
        if match is None:
            failures.append(f"u-lobe on {' '.join(lobe.vertices)} has no isomorphic v-lobe")
        else:
            pool.pop(match)
    return failures


@dataclass(frozen=True)
class TransferStep:
    u1: str
    u2: str
    cut_before: int
    cut_after: int

    def line(self) -> str:
        return f"transfer {self.u1} {self.u2} cut_before={self.cut_before} cut_after={self.cut_after}"


class MonovariantError(AssertionError):
    pass


def reduce_cut_copies(
    inst: SplitInstance,
    *,
    trace: list[TransferStep] | None = None,
    debug: bool = False,
) -> SplitInstance:
    """Transfer between cut copies until every S(u) holds at most one cut-vertex.

    Each step must lower the number of cut-vertices by at least one; a step
    that does not raises MonovariantError.
    """
    report = validate_split(inst)
    if not report.ok:
        raise GraphError("invalid split: " + report.problems[0])
    g = inst.split_graph
    cuts = cut_vertices(g)
    limit = len(cuts)
    steps = 0
    while True:
        pick = None
        for u in sorted(inst.map.assignment):
            hit = [c for c in inst.map.copies(u) if c in cuts]
            if len(hit) >= 2:
                pick = hit[0], hit[1]
                break
        if pick is None:
            break
        u1, u2 = pick
        g = _transfer(g, u1, u2)
        new_cuts = cut_vertices(g)
        step = TransferStep(u1, u2, len(cuts), len(new_cuts))
        steps += 1
        if trace is not None:
            trace.append(step)
        if len(new_cuts) >= len(cuts) or u1 in new_cuts or steps > limit:
            raise MonovariantError(f"cut-vertex count did not drop: {step.line()}")
        if debug:
            current = inst.with_split_graph(g)
            check = validate_split(current)
            if not check.ok or not check.planar:
                raise AssertionError(f"transfer broke the split after {step.line()}: {check.problems}")
        cuts = new_cuts
    return inst.with_split_graph(g)
