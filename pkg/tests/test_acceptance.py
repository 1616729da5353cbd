"""Acceptance suite: one test per criterion, each at its stated size and time limit.

Run alone with ``pytest -m acceptance``; the summary prints one line per criterion.
"""

import time

import networkx as nx
import pytest

from barviz.graph import Graph, complete_graph, cut_vertices
from barviz.layout import bar_number_bound, split_pipeline, tt_layout, two_bar_layout, visibility_bound
from barviz.oracle import verify_representation, visibility_graph
from barviz.planarity import is_bar_visibility_graph, is_planar
from barviz.split import (
    SplitInstance,
    decompose_into_paths,
    is_path_decomposition,
    search_biplanar,
    sigma_exact,
    split_from_decomposition,
    validate_split,
)
from barviz.transfer import transfer
from helpers import (
    SAMPLE_G,
    SAMPLE_H,
    atlas_graphs,
    cut_vertices_bf,
    random_biconnected_planar,
    random_connected_planar,
    random_layout,
    random_spanning_subgraph,
    rng,
    visibility_bf,
)

K33 = Graph([], [(a, b) for a in "abc" for b in "xyz"])

# reduce_cut_copies traces gathered by the pipeline suite, audited separately
PIPELINE_TRACES: list[list] = []


def k5_split():
    k5 = complete_graph("abcde")
    e = ("a", "b")
    return split_from_decomposition(k5, [k5.with_edges(remove=[e]), Graph(k5.vertices, [e])])


def searched_split(n):
    kn = complete_graph(n)
    return split_from_decomposition(kn, list(search_biplanar(kn)))


@pytest.mark.acceptance(1, "sample H/G: check verdicts, two-bar H, one-bar G")
def test_criterion_01_sample_graphs():
    start = time.perf_counter()
    assert not is_bar_visibility_graph(SAMPLE_H)
    assert is_bar_visibility_graph(SAMPLE_G)
    layout = two_bar_layout(SAMPLE_H)
    assert verify_representation(layout, SAMPLE_H, 2).ok
    cuts = cut_vertices(SAMPLE_H)
    assert all(k == 1 or v in cuts for v, k in layout.bar_counts().items())
    for s, t in SAMPLE_G.edges:
        assert verify_representation(tt_layout(SAMPLE_G, s, t), SAMPLE_G, 1).ok
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(2, "two-bar layouts of 200 random connected planar graphs")
def test_criterion_02_two_bar_corpus():
    r = rng(1002)
    start = time.perf_counter()
    failures = []
    for i in range(200):
        g = random_connected_planar(r.randint(1, 40), r)
        layout = two_bar_layout(g)
        cuts = cut_vertices_bf(g)
        counts = layout.bar_counts()
        profile = all(counts[v] == 1 if v not in cuts else counts[v] <= 2 for v in g.vertices)
        if visibility_graph(layout) != g or not profile:
            failures.append(i)
    assert failures == []
    assert time.perf_counter() - start < 60


def moved_lobes_reappear_at_v(g, u, v, out):
    """Each component of g-u avoiding v, hung on v instead of u, is a v-lobe of out."""
    rest = nx.Graph(g.remove_vertex(u).to_networkx())
    new_rest = out.remove_vertex(v).to_networkx()
    new_lobes = [out.subgraph([*c, v]).to_networkx() for c in nx.connected_components(new_rest)]
    for comp in nx.connected_components(rest):
        if v in comp:
            continue
        moved = nx.relabel_nodes(g.subgraph([*comp, u]).to_networkx(), {u: v})
        if not any(nx.is_isomorphic(moved, lobe) for lobe in new_lobes):
            return False
    return True


@pytest.mark.acceptance(3, "transfer clauses on 500 random triples, lobes on 100")
def test_criterion_03_transfer_differential():
    r = rng(1003)
    failures = []
    cases = lobe_cases = 0
    while cases < 500:
        g = random_connected_planar(r.randint(3, 12), r, keep_prob=r.choice([None, 0.5]))
        cuts = sorted(cut_vertices_bf(g))
        if not cuts:
            continue
        u = r.choice(cuts)
        v = r.choice([w for w in g.vertices if w != u])
        out = transfer(g, u, v)
        after = cut_vertices_bf(out)
        clauses = [
            is_planar(out),
            u not in after,
            {w for w in after if w not in (u, v)} == {w for w in cuts if w not in (u, v)},
            v in after,
        ]
        if not all(clauses):
            failures.append((g.edges, u, v, clauses))
        if g.n <= 9 and lobe_cases < 100:
            lobe_cases += 1
            if not moved_lobes_reappear_at_v(g, u, v, out):
                failures.append((g.edges, u, v, "lobes"))
        cases += 1
    assert lobe_cases == 100
    assert failures == []


@pytest.mark.acceptance(4, "split pipeline on 100 subgraphs each of K5, K7, K8")
def test_criterion_04_split_pipeline():
    r = rng(1004)
    start = time.perf_counter()
    failures = []
    PIPELINE_TRACES.clear()
    for inst in (k5_split(), searched_split(7), searched_split(8)):
        assert inst.map.t == 2 and validate_split(inst).ok
        for _ in range(100):
            h = random_spanning_subgraph(inst.base, r)
            trace: list = []
            layout = split_pipeline(inst, h, trace=trace)
            PIPELINE_TRACES.append(trace)
            if visibility_graph(layout) != h or layout.max_bars_per_vertex() > 3:
                failures.append(h.edges)
    assert failures == []
    assert time.perf_counter() - start < 300


def mutations(inst: SplitInstance, r, count):
    out = []
    multi = [u for u in inst.map.assignment if len(inst.map.copies(u)) >= 2]
    while len(out) < count:
        sg = inst.split_graph
        if multi and len(out) % 2 == 0:
            # join two copies of the same original
            a, b = r.sample(inst.map.copies(r.choice(multi)), 2)
            sg = sg.with_edges(add=[(a, b)])
        else:
            # drop every copy edge carrying one original edge
            u, w = r.choice(inst.base.edges)
            cu, cw = set(inst.map.copies(u)), set(inst.map.copies(w))
            sg = sg.with_edges(remove=[e for e in sg.edges if {e[0], e[1]} & cu and {e[0], e[1]} & cw])
        out.append(inst.with_split_graph(sg))
    return out


@pytest.mark.acceptance(5, "split thickness values and split validation")
def test_criterion_05_split_oracle():
    assert sigma_exact(complete_graph(4), 3) == 1
    assert sigma_exact(complete_graph(5), 3) == 2
    assert sigma_exact(K33, 3) == 2
    r = rng(1005)
    good = [k5_split(), searched_split(7)]
    for inst in good:
        report = validate_split(inst)
        assert report.ok and report.planar
    bad = mutations(good[0], r, 10) + mutations(good[1], r, 10)
    assert len(bad) == 20
    assert not any(validate_split(b).ok for b in bad)


@pytest.mark.acceptance(6, "every 6-vertex graph splits into three paths")
def test_criterion_06_six_vertex_paths():
    start = time.perf_counter()
    graphs = atlas_graphs(6)
    assert len(graphs) == 156
    failures = []
    for g in graphs:
        paths = decompose_into_paths(g, 3)
        if paths is None or not is_path_decomposition(g, paths):
            failures.append(g.edges)
    assert time.perf_counter() - start < 600
    assert failures == [], f"{len(failures)} graph(s) need more than three paths, e.g. {failures[0]}"


@pytest.mark.acceptance(7, "tt_layout contract on all 2-connected planar n<=7 plus 100 larger")
def test_criterion_07_tt_layout_contract():
    catalog = [g for n in range(3, 8) for g in atlas_graphs(n) if nx.is_biconnected(g.to_networkx()) and is_planar(g)]
    r = rng(1007)
    catalog += [random_biconnected_planar(r.randint(8, 40), r) for _ in range(100)]
    failures = []
    for g in catalog:
        for s, t in g.edges:
            for a, b in ((s, t), (t, s)):
                layout = tt_layout(g, a, b)
                xmin, xmax, ymin, ymax = layout.extent()
                bars = {bar.owner: bar for bar in layout}
                ok = (
                    visibility_graph(layout) == g
                    and layout.max_bars_per_vertex() == 1
                    and bars[a].y == ymin
                    and bars[b].y == ymax
                    and (bars[a].xl, bars[a].xr) == (xmin, xmax) == (bars[b].xl, bars[b].xr)
                )
                if not ok:
                    failures.append((g.edges, a, b))
    assert len(catalog) > 100
    assert failures == []


@pytest.mark.acceptance(8, "cut-copy reduction decreases the cut count each step")
def test_criterion_08_monovariant():
    if not PIPELINE_TRACES:
        test_criterion_04_split_pipeline()
    violations = []
    steps = 0
    for trace in PIPELINE_TRACES:
        if not trace:
            continue
        steps += len(trace)
        if len(trace) > trace[0].cut_before:
            violations.append(trace)
        for i, step in enumerate(trace):
            if step.cut_after >= step.cut_before:
                violations.append(step)
            if i and step.cut_before != trace[i - 1].cut_after:
                violations.append(step)
    assert steps > 0
    assert violations == []


@pytest.mark.acceptance(9, "sweep equals column scan on 500 layouts; translation invariance")
def test_criterion_09_oracle_self_check():
    r = rng(1009)
    bad = 0
    for _ in range(500):
        layout = random_layout(r, r.randint(1, 40), r.randint(1, 64), r.randint(1, 20))
        g = visibility_graph(layout)
        bad += set(g.edges) != visibility_bf(layout)
        dx, dy = r.randint(-100, 100), r.randint(-100, 100)
        bad += visibility_graph(layout.shifted(dx, dy)) != g
    assert bad == 0


@pytest.mark.acceptance(10, "visibility_bound values and constructive flags")
def test_criterion_10_bound_calculator():
    expected = {3: 1, 5: 2, 6: 2, 7: 3, 8: 3, 12: 3, 24: 5}
    constructive = {3: True, 5: True, 6: False, 7: True, 8: True, 12: False, 24: False}
    for n, bound in expected.items():
        rep = visibility_bound(complete_graph(n))
        assert rep.bound == bound == bar_number_bound(n)
        assert rep.constructive is constructive[n], (n, rep.line())
        if rep.layout is not None:
            assert verify_representation(rep.layout, complete_graph(n), max(bound, rep.layout_bars)).ok
