from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import (
    brute_k_blocks,
    brute_min_cut,
    naive_separations,
    nx_biconnected,
    nx_components,
    to_nx,
)
from strategies import graphs
from tanglekit.bits import items_of, mask_of
from tanglekit.errors import BudgetExceeded, ParseError, PreconditionError
from tanglekit.generators import (
    complete,
    connected_catalogue,
    cycle,
    fig3,
    fig3_edge_mask,
    grid,
    hexgrid,
    hexgrid_cells,
    named_graph,
    path,
    random_graphs,
    subdivided_k4,
)
from tanglekit.graph import Graph, format_graph, parse_graph
from tanglekit.separations import (
    enumerate_separations,
    has_proper_separation,
    is_k_connected,
    is_k_inseparable,
    is_quasi_4_connected,
    k_blocks,
    min_vertex_cut,
    torso,
    triconnected_components,
)

BRANCH = frozenset({1, 2, 3, 4})


def triples(seps):
    return {(s.edges_a, s.verts_a, s.verts_b) for s in seps}


# ---------------------------------------------------------------- graphs


def test_graph_is_canonical_and_hashable():
    g = Graph(3, [(3, 1), (2, 1)])
    assert g.edges == ((1, 2), (1, 3))
    assert g == Graph(3, [(1, 2), (1, 3)]) and hash(g) == hash(Graph(3, [(1, 3), (2, 1)]))
    assert g.edge_id[(1, 3)] == 2


@pytest.mark.parametrize("n,edges", [(2, [(1, 1)]), (2, [(1, 3)]), (3, [(1, 2), (2, 1)])])
def test_graph_rejects_non_simple_input(n, edges):
    with pytest.raises(PreconditionError):
        Graph(n, edges)


def test_text_format_roundtrip_and_comments():
    text = "# fig\n4 3\n2 1\n3 4  # tail\n\n1 3\n"
    g = parse_graph(text)
    assert format_graph(g) == "4 3\n1 2\n1 3\n3 4\n"
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n1 2\n", "2 1\n1 x\n", "2 1\n1 1\n", "2 1\n1 2 3\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@given(graphs(max_n=7, max_m=10))
def test_format_parse_roundtrip(g):
    assert parse_graph(format_graph(g)) == g


def test_named_graph_shapes():
    assert (named_graph("grid", [5, 5]).n, named_graph("grid", [5, 5]).m) == (25, 40)
    f = named_graph("fig3", [])
    assert (f.n, f.m) == (8, 10)
    assert named_graph("path", [4]).m == 3
    assert named_graph("complete", [6]).m == 15
    k4 = subdivided_k4()
    assert (k4.n, k4.m) == (10, 12)
    assert sorted(k4.degree(v) for v in k4.vertices) == [2] * 6 + [3] * 4


def test_named_graph_errors():
    with pytest.raises(PreconditionError):
        named_graph("petersen", [])
    with pytest.raises(PreconditionError):
        named_graph("grid", [0, 3])
    with pytest.raises(PreconditionError):
        named_graph("grid", [3])


def test_hexgrid_shapes():
    g, cells = hexgrid_cells(2)
    assert len(cells) == 19
    assert (g.n, g.m) == (36, 54)
    assert all(g.degree(v) == 3 for v in g.vertices)
    raw, raw_cells = hexgrid_cells(2, smooth_boundary=False)
    assert (raw.n, len(raw_cells)) == (54, 19)
    # the raw patch has degree-2 corners and so is not 3-connected
    assert not is_k_connected(raw, 3)
    assert hexgrid(1).n == 12


def test_catalogue_counts():
    # connected graphs with 1..7 edges, up to isomorphism (OEIS A002905)
    cat = connected_catalogue(7)
    counts = [sum(1 for g in cat if g.m == m) for m in range(1, 8)]
    assert counts == [1, 1, 3, 5, 12, 30, 79]


# ---------------------------------------------------------------- separations


def test_separations_of_k3_order_zero():
    seps = enumerate_separations(complete(3), 0)
    assert len(seps) == 2
    assert {(s.verts_a, s.verts_b) for s in seps} == {(0, 0b111), (0b111, 0)}


def test_separations_single_edge_match_naive():
    g = Graph(2, [(1, 2)])
    seps = enumerate_separations(g, 1)
    assert triples(seps) == naive_separations(g, 1)
    # ({ab}, {a, b}) against (empty, {a})
    assert (1, 0b11, 0b01) in triples(seps)


@pytest.mark.parametrize("g", [path(3), cycle(4), complete(4), Graph(4, [(1, 2), (3, 4)]),
                               Graph(5, [(1, 2), (2, 3), (2, 4)])])
@pytest.mark.parametrize("order", [0, 1, 2])
def test_separations_match_naive_enumerator(g, order):
    seps = enumerate_separations(g, order)
    assert triples(seps) == naive_separations(g, order)
    assert len(seps) == len(triples(seps))
    assert seps == sorted(seps, key=lambda s: s.sort_key())


@given(graphs(max_n=4, max_m=4))
@settings(max_examples=40)
def test_separations_match_naive_property(g):
    assert triples(enumerate_separations(g, 1)) == naive_separations(g, 1)


def test_fig3_contains_triangle_cut_at_v2():
    g = fig3()
    tri = fig3_edge_mask("e5", "e6", "e7")
    found = [s for s in enumerate_separations(g, 1)
             if s.edges_a == tri and s.separator == mask_of([2]) and s.verts_a == mask_of([2, 7, 8])]
    assert len(found) == 1


@given(graphs(max_n=6, max_m=8))
@settings(max_examples=40)
def test_separation_invariants(g):
    for s in enumerate_separations(g, 2):
        assert s.edges_a | s.edges_b == g.all_edges and not s.edges_a & s.edges_b
        assert s.verts_a | s.verts_b == g.all_vertices
        assert g.endpoints(s.edges_a) & ~s.verts_a == 0
        assert g.endpoints(s.edges_b) & ~s.verts_b == 0
        assert s.reversed().reversed() == s


def test_separation_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_separations(complete(6), 4, budget=1000)


# ---------------------------------------------------------------- vertex cuts


def test_min_vertex_cut_examples():
    assert min_vertex_cut(cycle(4), 1, 3) == 2
    g = grid(3, 3)
    assert min_vertex_cut(g, 1, 5) == 2 == brute_min_cut(g, 1, 5)
    k4 = subdivided_k4()
    # 5 subdivides 1-2, 10 subdivides 3-4
    assert min_vertex_cut(k4, 5, 10) == 2 == brute_min_cut(k4, 5, 10)


def test_min_vertex_cut_rejects_bad_pairs():
    with pytest.raises(PreconditionError):
        min_vertex_cut(cycle(4), 1, 2)
    with pytest.raises(PreconditionError):
        min_vertex_cut(cycle(4), 1, 1)


@pytest.mark.parametrize("g", random_graphs(40, seed=11, max_vertices=10, max_edges=18))
def test_min_vertex_cut_matches_brute_force(g):
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v):
            continue
        brute = brute_min_cut(g, u, v, limit=4)
        got = min_vertex_cut(g, u, v)
        if brute is None:
            assert got > 4
        else:
            assert got == brute


# ---------------------------------------------------------------- blocks


def test_inseparability_examples():
    k4 = subdivided_k4()
    assert is_k_inseparable(k4, [1, 2, 3, 4], 2)
    assert not is_k_inseparable(k4, k4.vertices, 2)
    assert is_k_inseparable(complete(3), [1, 2, 3], 1)
    assert not is_k_inseparable(complete(3), [1, 2], 2)


def test_fig3_one_blocks():
    assert set(k_blocks(fig3(), 1)) == {frozenset({3, 6}), frozenset({2, 7, 8}), frozenset({1, 2, 3, 4, 5})}


def test_subdivided_k4_two_blocks():
    blocks = k_blocks(subdivided_k4(), 2)
    assert blocks.proper == (BRANCH,)
    # each subdivision vertex with its two branch neighbours is also a 2-block
    assert len(blocks) == 7


def test_k6_two_blocks():
    assert set(k_blocks(complete(6), 2)) == {frozenset(range(1, 7))}


@pytest.mark.parametrize("g", [fig3(), subdivided_k4(), grid(3, 3), path(4), Graph(5, [(1, 2), (3, 4)])])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_k_blocks_match_definition(g, k):
    oracle = brute_k_blocks(g, k, triples(enumerate_separations(g, k)))
    assert set(k_blocks(g, k)) == oracle


@given(graphs(max_n=7, max_m=10))
def test_block_invariants(g):
    for k in (0, 1, 2):
        blocks = list(k_blocks(g, k))
        for a, b in combinations(blocks, 2):
            assert not (a <= b or b <= a)
        for x in blocks:
            assert is_k_inseparable(g, x, k)


@given(graphs(max_n=8, max_m=12))
def test_zero_blocks_are_components(g):
    assert set(k_blocks(g, 0)) == nx_components(g)


@given(graphs(max_n=8, max_m=12))
def test_one_blocks_are_biconnected_components(g):
    expected = {c for c in nx_biconnected(g)}
    assert set(k_blocks(g, 1)) == expected


# ---------------------------------------------------------------- torsos


def test_torso_of_subdivided_k4():
    t = torso(subdivided_k4(), BRANCH)
    assert t.real_edges == ()
    assert len(t.virtual_edges) == 6
    h, _ = t.as_graph()
    assert h == complete(4)


def test_torso_fig3_block_has_no_virtual_edges():
    g = fig3()
    t = torso(g, [1, 2, 3, 4, 5])
    assert t.virtual_edges == ()
    assert set(t.real_edges) == {e for e in g.edges if set(e) <= {1, 2, 3, 4, 5}}


@given(graphs(max_n=7, max_m=10))
def test_torso_of_everything_is_the_graph(g):
    t = torso(g, g.vertices)
    assert t.virtual_edges == () and t.real_edges == g.edges


def test_triconnected_components():
    fig = triconnected_components(fig3())
    assert sorted(sorted(t.base_vertices) for t in fig) == [[1, 2, 3], [2, 7, 8]]
    assert not any(t.proper for t in fig)
    sk4 = [t for t in triconnected_components(subdivided_k4()) if t.proper]
    assert len(sk4) == 1 and sk4[0].as_graph()[0] == complete(4)
    k6 = triconnected_components(complete(6))
    assert len(k6) == 1 and k6[0].proper and k6[0].as_graph()[0] == complete(6)


@given(graphs(max_n=8, max_m=12))
def test_two_block_torsos_have_witness_paths(g):
    for t in triconnected_components(g):
        x = t.base_vertices
        for (v, w), p in t.witness_paths.items():
            assert p[0] == v and p[-1] == w and len(p) >= 3
            assert not set(p[1:-1]) & x
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        # every component outside a 2-block attaches to at most 2 of its vertices
        xm = mask_of(x)
        for c in g.components(g.all_vertices & ~xm):
            assert len(items_of(g.neighbourhood(c))) <= 2


# ---------------------------------------------------------------- connectivity predicates


def test_connectivity_examples():
    assert is_k_connected(complete(6), 5)
    assert not is_k_connected(complete(6), 6)
    assert not is_k_connected(grid(3, 3), 3)
    h = hexgrid(2)
    assert is_k_connected(h, 3) and not is_k_connected(h, 4)


@given(graphs(max_n=6, max_m=9))
@settings(max_examples=60)
def test_k_connected_matches_definition(g):
    for k in range(0, 5):
        by_definition = g.n > k and not has_proper_separation(g, k - 1) if k >= 1 else g.n > 0
        assert is_k_connected(g, k) == by_definition


def test_quasi_4_connectivity():
    assert is_quasi_4_connected(hexgrid(2))
    assert is_quasi_4_connected(complete(6))
    twins = Graph(7, [e for e in combinations(range(1, 6), 2)]
                  + [e for e in combinations([1, 2, 3, 6, 7], 2) if not set(e) <= {1, 2, 3}])
    assert is_k_connected(twins, 3)
    assert not is_quasi_4_connected(twins)
    assert not is_quasi_4_connected(grid(3, 3))


def test_quasi_4_matches_separation_enumeration():
    # brute force on small graphs: 3-connected and every order-3 separation lopsided
    for g in [complete(5), cycle(5), Graph(6, list(combinations(range(1, 5), 2)) + [(5, 1), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4), (5, 6)])]:
        brute = is_k_connected(g, 3) and all(
            min(len(items_of(s.verts_a & ~s.verts_b)), len(items_of(s.verts_b & ~s.verts_a))) <= 1
            for s in enumerate_separations(g, 3) if s.order == 3)
        assert is_quasi_4_connected(g) == brute


def test_networkx_agrees_on_hexgrid_connectivity():
    import networkx as nx
    assert nx.node_connectivity(to_nx(hexgrid(2))) == 3
