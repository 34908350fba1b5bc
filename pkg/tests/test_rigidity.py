import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowcayley import (
    Graph,
    TooSmall,
    check_rigidity,
    complete_graph,
    cycle_graph,
    exists_rigid_subgraph_containing,
)

import oracles
from conftest import FIG2A_EDGES


def small_graphs(max_n=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        pairs = list(itertools.combinations(range(n), 2))
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])

    return build()


def test_examples():
    v = check_rigidity(complete_graph(3))
    assert v.independent and v.minimally_rigid and v.violating_subgraph is None

    v = check_rigidity(cycle_graph(4))
    assert v.independent and not v.minimally_rigid

    v = check_rigidity(complete_graph(4))
    assert not v.independent and not v.minimally_rigid
    assert v.violating_subgraph == frozenset({0, 1, 2, 3})


def test_too_small():
    with pytest.raises(TooSmall):
        check_rigidity(Graph.from_edges(1, []))


def test_violating_subgraph_breaks_count():
    g = Graph.from_edges(6, list(itertools.combinations(range(4), 2)) + [(3, 4), (4, 5)])
    v = check_rigidity(g)
    assert not v.independent
    s = v.violating_subgraph
    assert oracles.induced_edge_count(g, s) > 2 * len(s) - 3


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_matches_subset_counting(g):
    indep, rigid = oracles.brute_rigidity(g)
    v = check_rigidity(g)
    assert v.independent == indep
    assert v.minimally_rigid == rigid


@given(small_graphs(), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_insertion_order_irrelevant(g, seed):
    a = check_rigidity(g)
    b = check_rigidity(g, order_seed=seed)
    assert a.independent == b.independent and a.minimally_rigid == b.minimally_rigid


def test_exists_rigid_examples(fig2a):
    assert exists_rigid_subgraph_containing(complete_graph(3), 0, 1) is True
    assert exists_rigid_subgraph_containing(cycle_graph(4), 0, 2) is False
    assert exists_rigid_subgraph_containing(fig2a, 0, 1) is False


@given(small_graphs(max_n=6), st.data())
@settings(max_examples=40, deadline=None)
def test_exists_rigid_matches_brute(g, data):
    a = data.draw(st.integers(0, g.n - 1))
    b = data.draw(st.integers(0, g.n - 1))
    if a == b:
        return
    assert exists_rigid_subgraph_containing(g, a, b) == oracles.brute_exists_rigid(g, a, b)
