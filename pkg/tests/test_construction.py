import dataclasses

import pytest

from lowcayley import (
    ExtremeEdgeExists,
    Graph,
    IndexOutOfRange,
    NotABaseNonEdge,
    NotOneDofTreeDecomposable,
    StuckConstruction,
    TooFewSteps,
    check_rigidity,
    complete_graph,
    cycle_graph,
    derive_construction,
    extreme_graph,
    find_base_non_edges,
    gen_clique_minor_1path,
    gen_clique_minor_trifree,
    gen_fan,
    gen_lemma57_1a,
    has_one_path_property,
    is_one_path,
    is_tree_decomposable,
    is_triangle_free,
    last_level,
    low_cayley_brute,
    low_cayley_graph,
    maximal_clusters,
    normalize_base_non_edge,
    path_graph,
)
from lowcayley.construction import _last_level

import oracles
from conftest import FIG2A_BASE

P3 = path_graph(3)


def test_find_base_non_edges_examples(fig2a):
    fan = gen_fan(6)
    bnes = find_base_non_edges(fan)
    assert all((i, i + 2) in bnes for i in range(4))
    assert find_base_non_edges(complete_graph(3)) == []
    assert find_base_non_edges(P3) == [(0, 2)]
    assert FIG2A_BASE in find_base_non_edges(fig2a)


def test_derive_p3():
    seq = derive_construction(P3, (0, 2))
    assert len(seq.steps) == 1
    s = seq.steps[0]
    assert s.new_vertex == 1 and s.base_pair == (0, 2) and s.level == 1
    assert seq.to_text() == "base 0 2\nstep 1 0 2 1\n"


def test_derive_fig2a_levels(fig2a):
    seq = derive_construction(fig2a, FIG2A_BASE)
    assert seq.level_sets() == {0: [0, 1], 1: [2, 3, 4, 5], 2: [6, 7], 3: [8], 4: [9]}


def test_derive_trifree_clique_levels():
    g = gen_clique_minor_trifree(3)
    seq = derive_construction(g, (0, 1))
    by_level = {}
    for s in seq.steps:
        by_level.setdefault(s.level, []).append(s.new_vertex)
    assert by_level == {1: [2, 3, 4], 2: [5, 6, 7]}


def test_derive_errors():
    with pytest.raises(NotABaseNonEdge):
        derive_construction(P3, (0, 1))  # an edge
    with pytest.raises(NotABaseNonEdge):
        derive_construction(P3, (0, 0))
    with pytest.raises(StuckConstruction):
        derive_construction(path_graph(4), (0, 3))  # not a base non-edge
    # StuckConstruction is catchable as NotABaseNonEdge
    with pytest.raises(NotABaseNonEdge):
        derive_construction(path_graph(4), (0, 3))


def test_replay_soundness_and_level_recurrence(small_corpus):
    for g, f, _ in small_corpus:
        for bne in find_base_non_edges(g):
            seq = derive_construction(g, bne)
            edges = set()
            covered = set(bne)
            for s in seq.steps:
                u, w = s.base_pair
                assert u in covered and w in covered
                assert s.level == 1 + max(seq.levels[u], seq.levels[w])
                covered.update(s.added_vertices)
                for cid in (s.cluster_a, s.cluster_b):
                    edges.update(seq.clusters.cluster_edges[cid])
            assert covered == set(range(g.n))
            assert edges == set(g.edges)


def test_extreme_graph_examples(fig2a):
    seq = derive_construction(fig2a, FIG2A_BASE)
    s7 = seq.steps[6]
    assert s7.new_vertex == 8
    ref = extreme_graph(seq, 7)
    # graph after six steps plus the step's base pair as an edge
    assert set(ref.original_ids) == set(range(8))
    assert is_tree_decomposable(ref.graph) is not None

    pseq = derive_construction(P3, (0, 2))
    pref = extreme_graph(pseq, 1)
    assert pref.original_ids == (0, 2)
    assert pref.graph.edges == frozenset({(0, 1)})

    g = gen_clique_minor_trifree(3)
    tseq = derive_construction(g, (0, 1))
    s4 = tseq.steps[3]
    assert s4.new_vertex == 5 and s4.base_pair == (2, 3)
    tref = extreme_graph(tseq, 4)
    assert set(tref.original_ids) == {0, 1, 2, 3, 4}
    assert tref.graph.edge_count == 7  # the three-spoke bipartite core plus (u1, u2)
    assert is_tree_decomposable(tref.graph) is not None


def test_extreme_graph_errors(fig2a):
    seq = derive_construction(fig2a, FIG2A_BASE)
    with pytest.raises(IndexOutOfRange):
        extreme_graph(seq, 0)
    with pytest.raises(IndexOutOfRange):
        extreme_graph(seq, len(seq.steps) + 1)
    bad_step = dataclasses.replace(seq.steps[4], base_pair=(0, 2))
    bad = dataclasses.replace(
        seq, steps=seq.steps[:4] + (bad_step,) + seq.steps[5:]
    )
    with pytest.raises(ExtremeEdgeExists):
        extreme_graph(bad, 5)


def test_last_level_examples(fig2a):
    assert last_level(fig2a) == frozenset({6, 9})  # vertex 9 is the closing one
    assert last_level(P3) == frozenset({1})
    g, _ = gen_lemma57_1a()
    assert last_level(g) == frozenset({6})
    with pytest.raises(NotOneDofTreeDecomposable):
        last_level(complete_graph(3))


def test_is_one_path_examples():
    g, f = gen_lemma57_1a()
    assert is_one_path(derive_construction(g, f)) is True
    gt = gen_clique_minor_trifree(3)
    assert is_one_path(derive_construction(gt, (0, 1))) is False
    assert is_one_path(derive_construction(P3, (0, 2))) is True


def test_has_one_path_property_examples():
    fan = gen_fan(4)
    # 1-path from (0, 2) but not from (1, 4): the choice of base matters
    assert (1, 4) in find_base_non_edges(fan)
    lt = _last_level(maximal_clusters(fan))
    assert len(lt - {0, 2}) == 1 and len(lt - {1, 4}) == 2
    assert has_one_path_property(fan) == (0, 2)

    assert has_one_path_property(gen_clique_minor_1path(4)) == (0, 1)
    assert has_one_path_property(gen_clique_minor_trifree(3)) is None
    with pytest.raises(NotOneDofTreeDecomposable):
        has_one_path_property(complete_graph(3))


def test_normalize_base_non_edge(fig2a):
    assert normalize_base_non_edge(fig2a, FIG2A_BASE) == FIG2A_BASE
    # base endpoint 0 sits inside a single triangle cluster, so the
    # second step's base pair takes over
    g = Graph.from_edges(5, [(0, 2), (0, 3), (2, 3), (1, 2), (3, 4), (1, 4)])
    assert (0, 1) in find_base_non_edges(g)
    assert normalize_base_non_edge(g, (0, 1)) == (1, 3)
    with pytest.raises(TooFewSteps):
        normalize_base_non_edge(P3, (0, 2))


def test_derivation_never_sticks_on_base_non_edges(small_corpus):
    for g, _, _ in small_corpus:
        for bne in find_base_non_edges(g):
            derive_construction(g, bne)  # must not raise


def _one_path_from(g, pair):
    return pair in find_base_non_edges(g) and len(
        _last_level(maximal_clusters(g)) - set(pair)
    ) == 1


def test_lemma58_base_endpoint_removal(small_corpus):
    checked = 0
    for g, f, meta in small_corpus:
        if not meta["tf"]:
            continue
        seq = derive_construction(g, f)
        if not is_one_path(seq):
            continue
        l1 = [s.new_vertex for s in seq.steps if s.level == 1]
        if len(l1) != 2:
            continue
        lt = _last_level(seq.clusters)
        ends_in = [v for v in f if v in lt]
        if not ends_in:
            continue
        drop = set(ends_in) if len(ends_in) == 2 else {ends_in[0]}
        g2, remap = oracles.remove_vertices(g, drop)
        p = tuple(sorted((remap[l1[0]], remap[l1[1]])))
        assert is_triangle_free(g2)
        assert _one_path_from(g2, p), (meta, sorted(g.edges))
        checked += 1
    assert checked >= 3


def test_lemma59_characterization(small_corpus):
    checked = 0
    for g, f, meta in small_corpus:
        seq = derive_construction(g, f)
        if len(seq.steps) <= 2 or not is_one_path(seq):
            continue
        actual = low_cayley_brute(g, f).low_complexity
        l1 = [s.new_vertex for s in seq.steps if s.level == 1]
        lt = _last_level(seq.clusters)
        a, b = f
        if len(l1) != 2:
            expected = False
        elif a in lt and b in lt:
            g2, remap = oracles.remove_vertices(g, {a, b})
            p = tuple(sorted((remap[l1[0]], remap[l1[1]])))
            expected = (
                p in find_base_non_edges(g2)
                and low_cayley_brute(g2, p).low_complexity
                and _one_path_from(g2, p)
            )
        elif a in lt or b in lt:
            gone = a if a in lt else b
            stay = b if a in lt else a
            third = seq.steps[2]
            v3 = third.new_vertex
            u1, u2 = third.base_pair
            g2, remap = oracles.remove_vertices(g, {gone})
            try:
                low = low_cayley_graph(g2, brute=True).low_complexity
            except NotOneDofTreeDecomposable:
                low = False
            cand1 = tuple(sorted((remap[u1], remap[u2])))
            cand2 = tuple(sorted((remap[stay], remap[v3])))
            expected = low and (_one_path_from(g2, cand1) or _one_path_from(g2, cand2))
        else:
            expected = False
        assert actual == expected, (meta, sorted(g.edges))
        checked += 1
    assert checked >= 5
