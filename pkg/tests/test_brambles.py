from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs
from tanglekit.brambles import (
    Subgraph,
    SubgraphFamily,
    min_hitting_set,
    reed_family_from_tangle,
    tangle_from_family,
    touches,
)
from tanglekit.errors import PreconditionError
from tanglekit.generators import complete, fig3, grid, grid_rows, random_graphs
from tanglekit.graph import Graph
from tanglekit.tangles import check_graph_tangle, enumerate_graph_tangles, tangle_core

K4 = complete(4)
K4_TRIANGLES = [Subgraph.induced(K4, t) for t in combinations(range(1, 5), 3)]


def brute_hitting(family, n):
    for size in range(n + 1):
        for s in combinations(range(1, n + 1), size):
            m = sum(1 << (v - 1) for v in s)
            if all(c.vertices & m for c in family.members):
                return size
    return None


def test_touching_examples():
    g = fig3()
    a = Subgraph.induced(g, [2, 7])
    b = Subgraph.induced(g, [1, 2, 3])
    assert touches(g, [a, b], "pairwise")
    gr = grid(3, 3)
    rows = [Subgraph.induced(gr, r) for r in grid_rows(3, 3)]
    assert not touches(gr, rows, "pairwise")
    assert touches(gr, rows[:2], "pairwise")  # adjacent rows span an edge
    assert touches(K4, K4_TRIANGLES, "triplewise")
    with pytest.raises(PreconditionError):
        touches(K4, K4_TRIANGLES, "quadwise")


def test_hitting_set_examples():
    gr = grid(3, 3)
    rows = SubgraphFamily(tuple(Subgraph.induced(gr, r) for r in grid_rows(3, 3)))
    assert min_hitting_set(gr, rows) == 3
    assert min_hitting_set(K4, SubgraphFamily((Subgraph.induced(K4, K4.vertices),))) == 1
    assert min_hitting_set(K4, SubgraphFamily(tuple(K4_TRIANGLES))) == 2
    with pytest.raises(PreconditionError):
        min_hitting_set(K4, SubgraphFamily(()))


@given(st.data())
@settings(max_examples=60)
def test_hitting_set_matches_brute_force(data):
    n = data.draw(st.integers(1, 7))
    g = complete(n)
    sets = data.draw(st.lists(st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True),
                              min_size=1, max_size=6))
    fam = SubgraphFamily(tuple(Subgraph.induced(g, s) for s in sets))
    assert min_hitting_set(g, fam) == brute_hitting(fam, n)


def test_family_validation():
    g = Graph(3, [(1, 2)])
    with pytest.raises(PreconditionError):
        SubgraphFamily((Subgraph(0b101, 0),)).validate(g)  # 1 and 3 are not joined
    with pytest.raises(PreconditionError):
        SubgraphFamily((Subgraph(0b001, 0b1),)).validate(g)  # edge endpoint missing
    with pytest.raises(PreconditionError):
        SubgraphFamily((Subgraph(0, 0),)).validate(g)


def test_reed_family_examples():
    g = fig3()
    t = next(t for t in enumerate_graph_tangles(g, 2) if tangle_core(g, t) == frozenset({2, 7, 8}))
    fam = reed_family_from_tangle(g, t)
    assert min_hitting_set(g, fam) == 2
    (t1,) = enumerate_graph_tangles(g, 1)
    fam1 = reed_family_from_tangle(g, t1)
    assert len(fam1) == 1 and min_hitting_set(g, fam1) == 1
    k6 = complete(6)
    (t4,) = enumerate_graph_tangles(k6, 4)
    assert min_hitting_set(k6, reed_family_from_tangle(k6, t4)) >= 4


def test_tangle_from_family_examples():
    t = tangle_from_family(K4, SubgraphFamily(tuple(K4_TRIANGLES)), 2)
    assert t.order == 2 and check_graph_tangle(K4, t).passed
    g = fig3()
    whole = SubgraphFamily((Subgraph(g.all_vertices, g.all_edges),))
    assert tangle_from_family(g, whole, 1) == enumerate_graph_tangles(g, 1)[0]
    with pytest.raises(PreconditionError, match="hitting set"):
        tangle_from_family(g, whole, 2)
    gr = grid(3, 3)
    rows = SubgraphFamily(tuple(Subgraph.induced(gr, r) for r in grid_rows(3, 3)))
    with pytest.raises(PreconditionError, match="triplewise"):
        tangle_from_family(gr, rows, 2)


def test_round_trip_on_fig3():
    g = fig3()
    for k in (1, 2):
        for t in enumerate_graph_tangles(g, k):
            assert tangle_from_family(g, reed_family_from_tangle(g, t), k) == t


@pytest.mark.parametrize("g", random_graphs(20, seed=3))
def test_round_trip_random(g):
    for k in (1, 2, 3):
        for t in enumerate_graph_tangles(g, k):
            fam = reed_family_from_tangle(g, t)
            assert tangle_from_family(g, fam, k) == t


@given(graphs(max_n=6, max_m=8), st.data())
@settings(max_examples=50)
def test_touching_is_monotone(g, data):
    comps = g.components()
    members = [Subgraph(c, g.edges_within(c)) for c in comps]
    if not touches(g, members, "pairwise"):
        return
    grown = []
    for c in members:
        extra = data.draw(st.sampled_from([0, g.neighbourhood(c.vertices)]))
        v = c.vertices | extra
        grown.append(Subgraph(v, g.edges_within(v)))
    assert touches(g, grown, "pairwise")
