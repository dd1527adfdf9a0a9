from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import brute_graph_tangles
from strategies import graphs
from tanglekit.errors import FalsificationError, PreconditionError
from tanglekit.generators import complete, cycle, fig3, grid, grid_rows, path, random_graphs, subdivided_k4
from tanglekit.graph import Graph
from tanglekit.separations import enumerate_separations
from tanglekit.tangles import (
    GraphTangle,
    big_component,
    block_tangle,
    check_graph_tangle,
    confirm_violation,
    correspondence,
    enumerate_graph_tangles,
    example_tangle,
    improper_2block_counterexample,
    is_extension,
    max_graph_tangle_order,
    minimal_separations,
    restrict_to_block,
    tangle_core,
    tangle_of_set,
    truncate,
)

FIG3 = fig3()


def fig3_tangle_at(core):
    for t in enumerate_graph_tangles(FIG3, 2):
        if tangle_core(FIG3, t) == frozenset(core):
            return t
    raise LookupError(core)


# ---------------------------------------------------------------- axioms


def test_k6_full_clique_family_fails_gt2_at_order_5():
    g = complete(6)
    t = tangle_of_set(g, g.vertices, 5)
    report = check_graph_tangle(g, t)
    assert report.violated("GT2")
    trip = report.witness("GT2")
    assert len(trip) == 3
    assert confirm_violation(g, t, report.violations[[v.axiom for v in report.violations].index("GT2")])


def test_fig3_block_tangle_passes():
    t = tangle_of_set(FIG3, [2, 7, 8], 2)
    assert check_graph_tangle(FIG3, t).passed


def test_fig3_cycle_tangle_passes_and_matches_block_tangle():
    t = example_tangle(FIG3, "cycle", [2, 7, 8], 2)
    assert check_graph_tangle(FIG3, t).passed
    assert t.members == tangle_of_set(FIG3, [2, 7, 8], 2).members
    t2 = example_tangle(FIG3, "cycle", [1, 2, 3], 2)
    assert tangle_core(FIG3, t2) == frozenset({1, 2, 3, 4, 5})


def test_checker_reports_each_axiom():
    g = path(3)
    all_seps = frozenset(enumerate_separations(g, 1))
    report = check_graph_tangle(g, GraphTangle(2, all_seps))
    assert report.violated("GT2") and report.violated("GT3")
    report = check_graph_tangle(g, GraphTangle(2, frozenset()))
    assert report.violated("GT1") and not report.violated("GT2")
    big = frozenset(enumerate_separations(g, 2))
    assert check_graph_tangle(g, GraphTangle(2, big)).violated("GT0")
    for v in check_graph_tangle(g, GraphTangle(2, all_seps)).violations:
        assert confirm_violation(g, GraphTangle(2, all_seps), v)


# ---------------------------------------------------------------- enumeration


def test_fig3_tangle_counts():
    assert len(enumerate_graph_tangles(FIG3, 1)) == 1
    order2 = enumerate_graph_tangles(FIG3, 2)
    assert len(order2) == 3
    assert {tangle_core(FIG3, t) for t in order2} == {
        frozenset({3, 6}), frozenset({2, 7, 8}), frozenset({1, 2, 3, 4, 5})}
    assert enumerate_graph_tangles(FIG3, 3) == []


def test_k6_tangles():
    g = complete(6)
    assert [len(enumerate_graph_tangles(g, k)) for k in range(1, 6)] == [1, 1, 1, 1, 0]
    assert max_graph_tangle_order(g) == 4


def test_enumeration_is_deterministic():
    a = enumerate_graph_tangles(FIG3, 2)
    b = enumerate_graph_tangles(FIG3, 2)
    assert [t.members for t in a] == [t.members for t in b]


def test_order_zero_is_rejected():
    with pytest.raises(PreconditionError):
        enumerate_graph_tangles(FIG3, 0)


@pytest.mark.parametrize("g", [complete(3), complete(4), path(4), cycle(4), Graph(4, [(1, 2), (1, 3), (1, 4)]),
                               Graph(4, [(1, 2), (3, 4)]), Graph(3, [(1, 2)])])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumeration_matches_plain_backtracking(g, k):
    seps = enumerate_separations(g, k - 1)
    brute = {f for f in brute_graph_tangles(g, k, seps)}
    got = {t.members for t in enumerate_graph_tangles(g, k)}
    assert got == brute


# ---------------------------------------------------------------- block tangles


def test_block_tangle_examples():
    assert check_graph_tangle(FIG3, block_tangle(FIG3, [2, 7, 8], 2)).passed
    sk4 = subdivided_k4()
    assert check_graph_tangle(sk4, block_tangle(sk4, [1, 2, 3, 4], 3)).passed
    with pytest.raises(PreconditionError, match="3/2"):
        block_tangle(complete(6), range(1, 7), 5)
    with pytest.raises(PreconditionError, match="inseparable"):
        block_tangle(FIG3, [1, 7], 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_clique_tangle_bound(n):
    g = complete(n)
    for k in range(1, -(-2 * n // 3) + 2):
        report = check_graph_tangle(g, tangle_of_set(g, g.vertices, k))
        if 3 * (k - 1) < 2 * n:
            assert report.passed, k
    if n % 3 == 0:
        k = 2 * n // 3 + 1
        assert check_graph_tangle(g, tangle_of_set(g, g.vertices, k)).violated("GT2")


@pytest.mark.parametrize("x", [[2, 7, 8], [1, 2, 3]])
def test_improper_2block_counterexample_fig3(x):
    report = improper_2block_counterexample(FIG3, x)
    trip = report.witness("GT2")
    assert trip is not None and len(trip) == 3
    assert all(s.order == 2 for s in trip)


def test_improper_2block_counterexample_k4_minus_edge():
    g = Graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    from tanglekit.separations import k_blocks
    small = [b for b in k_blocks(g, 2) if len(b) == 3]
    assert small
    for b in small:
        assert improper_2block_counterexample(g, sorted(b)).violated("GT2")


def test_improper_2block_rejects_non_blocks():
    with pytest.raises(PreconditionError):
        improper_2block_counterexample(FIG3, [1, 2, 4])


# ---------------------------------------------------------------- derived objects


def test_big_component_examples():
    t = fig3_tangle_at({2, 7, 8})
    assert big_component(FIG3, t, [2]) == frozenset({7, 8})
    t1 = enumerate_graph_tangles(FIG3, 1)[0]
    assert big_component(FIG3, t1, []) == frozenset(FIG3.vertices)
    k6 = complete(6)
    t4 = block_tangle(k6, range(1, 7), 4)
    for s in combinations(range(1, 7), 3):
        assert big_component(k6, t4, s) == frozenset(set(range(1, 7)) - set(s))
    with pytest.raises(PreconditionError):
        big_component(FIG3, t, [2, 3])


def test_big_component_uniqueness_failure_is_loud():
    # not a tangle: no separation is oriented, so every component qualifies vacuously
    g = Graph(2, [])
    bogus = GraphTangle(1, frozenset())
    with pytest.raises(FalsificationError):
        big_component(g, bogus, [])


def test_core_examples():
    assert tangle_core(FIG3, fig3_tangle_at({2, 7, 8})) == frozenset({2, 7, 8})
    sk4 = subdivided_k4()
    (t,) = enumerate_graph_tangles(sk4, 3)
    assert tangle_core(sk4, t) == frozenset({1, 2, 3, 4})
    k6 = complete(6)
    (t,) = enumerate_graph_tangles(k6, 4)
    assert tangle_core(k6, t) == frozenset(range(1, 7))


def test_truncation_examples():
    k6 = complete(6)
    (t4,) = enumerate_graph_tangles(k6, 4)
    assert truncate(t4, 4) == t4
    assert truncate(t4, 2).members == tangle_of_set(k6, k6.vertices, 2).members
    t = fig3_tangle_at({1, 2, 3, 4, 5})
    (t1,) = enumerate_graph_tangles(FIG3, 1)
    assert truncate(t, 1) == t1 and is_extension(t, t1)
    with pytest.raises(PreconditionError):
        truncate(t, 3)


def test_minimal_separations_examples():
    (k3,) = enumerate_graph_tangles(complete(3), 2)
    mins = minimal_separations(complete(3), k3)
    assert len(mins) == 3 and sorted(s.separator for s in mins) == [1, 2, 4]
    m = minimal_separations(FIG3, fig3_tangle_at({2, 7, 8}))
    assert len(m) == 1 and m[0].separator == 0b10
    (t1,) = enumerate_graph_tangles(FIG3, 1)
    m1 = minimal_separations(FIG3, t1)
    assert len(m1) == 1 and m1[0].separator == 0


def test_restriction_examples():
    g = Graph(6, list(combinations(range(1, 6), 2)) + [(5, 6)])
    (t,) = enumerate_graph_tangles(g, 3)
    r = restrict_to_block(g, t)
    assert r.block == frozenset(range(1, 6))
    assert r.subgraph == complete(5)
    assert r.tangle.members == tangle_of_set(complete(5), range(1, 6), 3).members
    assert tangle_core(g, t) == frozenset(range(1, 6))
    k5 = complete(5)
    (t5,) = enumerate_graph_tangles(k5, 3)
    r5 = restrict_to_block(k5, t5)
    assert r5.block == frozenset(k5.vertices) and r5.tangle == t5
    with pytest.raises(PreconditionError):
        restrict_to_block(FIG3, fig3_tangle_at({2, 7, 8}))


def test_example_tangles():
    assert example_tangle(complete(6), "clique", range(1, 7), 4).order == 4
    g = grid(3, 3)
    t = example_tangle(g, "grid", grid_rows(3, 3), 3)
    assert check_graph_tangle(g, t).passed
    assert enumerate_graph_tangles(g, 3) == [t]
    with pytest.raises(PreconditionError):
        example_tangle(complete(6), "clique", range(1, 7), 5)
    with pytest.raises(PreconditionError):
        example_tangle(FIG3, "cycle", [2, 7, 8], 3)
    with pytest.raises(PreconditionError):
        example_tangle(FIG3, "spiral", [], 2)


# ---------------------------------------------------------------- correspondence


def test_correspondence_examples():
    pairs = correspondence(FIG3, 2)
    assert len(pairs) == 3
    assert correspondence(FIG3, 3) == []
    sk4 = subdivided_k4()
    ((t, core),) = correspondence(sk4, 3)
    assert core == frozenset({1, 2, 3, 4})
    assert t.members == tangle_of_set(sk4, core, 3).members
    with pytest.raises(PreconditionError):
        correspondence(FIG3, 4)


@pytest.mark.parametrize("g", random_graphs(25, seed=5))
def test_correspondence_random(g):
    for k in (1, 2, 3):
        correspondence(g, k)


# ---------------------------------------------------------------- invariants


def _all_tangles(g, top=3):
    for k in range(1, top + 1):
        yield from enumerate_graph_tangles(g, k)


@given(graphs(max_n=6, max_m=8))
@settings(max_examples=40)
def test_tangle_invariants(g):
    for t in _all_tangles(g):
        k = t.order
        assert check_graph_tangle(g, t).passed
        members = t.sorted_members()
        seps = enumerate_separations(g, k - 1)
        for s in seps:
            assert (s in t) != (s.reversed() in t)
            if s.verts_a.bit_count() < k:
                assert s in t
        for a, b in combinations(members, 2):
            assert (a.verts_b & b.verts_b).bit_count() >= k
            j = a.join(b)
            if j.order < k:
                assert j in t
        for k2 in range(1, k + 1):
            tr = truncate(t, k2)
            assert check_graph_tangle(g, tr).passed and is_extension(t, tr)
