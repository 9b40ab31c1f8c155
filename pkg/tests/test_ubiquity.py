"""Containment levels, zigzag witnesses, refutations, exhaustive search."""

import pytest

import whirlgraph as wg
from whirlgraph.core import Path
from whirlgraph.errors import (
    BudgetExceededError,
    GraphError,
    PreconditionError,
)

t = wg.triadic_make


def mixed_path():
    g = wg.graph_upto(2)
    return Path(g, [t(0, 0), t(2, 2), t(1, 2), t(1, 1), t(1, 0)])


def test_minimal_containment_level_examples():
    assert wg.minimal_containment_level(wg.hamilton_path(2)) == 2
    assert wg.minimal_containment_level(wg.hamilton_path(1)) == 1
    assert wg.minimal_containment_level(mixed_path()) == 2
    with pytest.raises(GraphError):
        wg.minimal_containment_level(Path(wg.graph_upto(1), [wg.ZERO]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minimal_containment_level_matches_subgraph_test(n):
    p = wg.hamilton_path(n)
    by_subgraph = next(
        m
        for m in range(1, 5)
        if all(any(e in wg.level_edges(k) for k in range(1, m + 1)) for e in p.edges)
    )
    assert wg.minimal_containment_level(p) == by_subgraph


def test_zigzag_window_mixed_path():
    w = wg.zigzag_window(mixed_path())
    assert (w.level, w.block) == (2, 0)
    assert (w.x, w.y) == (t(0, 0), t(1, 1))
    assert [str(v) for v in w.subpath] == ["0/1", "2/9", "1/9", "1/3"]
    assert w.orientation == "forward"


def test_zigzag_window_whole_level_one():
    w = wg.zigzag_window(wg.hamilton_path(1))
    assert (w.x, w.y) == (wg.ZERO, wg.ONE)
    assert w.subpath == wg.hamilton_path(1)


def test_zigzag_window_hamilton_two_first_block():
    w = wg.zigzag_window(wg.hamilton_path(2))
    assert (w.x, w.y) == (t(0, 0), t(1, 1))
    assert w.level == 2 and w.block == 0


def test_zigzag_window_reversed_orientation():
    w = wg.zigzag_window(wg.hamilton_path(2).reverse())
    assert w is not None
    assert w.orientation == "reversed"
    assert [str(v) for v in w.subpath] == [str(w.x), "8/9", "7/9", str(w.y)]


def test_refute_mixed_path_against_level_three():
    p = mixed_path()
    for q in wg.all_paths(wg.level_graph(3), wg.ZERO, wg.ONE):
        r = wg.refute_compatibility(p, q)
        assert tuple(map(str, r.pair)) == ("1/9", "2/9")
        a, b = r.pair
        assert a in p and b in p and a in q and b in q
        assert p.visits_before(b, a) and q.visits_before(a, b)


def test_refute_hamilton_two_vs_three():
    r = wg.refute_compatibility(wg.hamilton_path(2), wg.hamilton_path(3))
    assert tuple(map(str, r.pair)) == ("1/9", "2/9")
    assert r.as_json() == {
        "pair": ["1/9", "2/9"],
        "orderInP": "2/9 before 1/9",
        "orderInQ": "1/9 before 2/9",
    }


def test_refute_precondition_errors():
    with pytest.raises(PreconditionError):
        wg.refute_compatibility(wg.hamilton_path(1), wg.hamilton_path(2))
    p = wg.hamilton_path(2)
    with pytest.raises(PreconditionError):
        wg.refute_compatibility(p, wg.hamilton_path(2))
    with pytest.raises(PreconditionError):
        wg.refute_compatibility(p.reverse(), wg.hamilton_path(3).reverse())
    with pytest.raises(PreconditionError):
        wg.refute_compatibility(p, wg.hamilton_path(3).reverse())


def test_bruteforce_examples():
    assert wg.exists_compatible_bruteforce(mixed_path(), wg.LevelWindow(3, 3)) is False
    h1 = wg.hamilton_path(1)
    assert wg.exists_compatible_bruteforce(h1, wg.LevelWindow(1, 1)) is True
    assert wg.exists_compatible_bruteforce(h1, wg.LevelWindow(2, 2)) is False


def test_bruteforce_budget_is_distinct_from_false():
    with pytest.raises(BudgetExceededError):
        wg.exists_compatible_bruteforce(
            wg.hamilton_path(2), wg.LevelWindow(2, 3), budget=5
        )


def test_all_paths_respects_length_cap():
    g = wg.whirl_graph(wg.LevelWindow(2, 3))
    capped = list(wg.all_paths(g, wg.ZERO, wg.ONE, max_edges=9))
    assert [p.edge_count for p in capped] == [9]
    wider = list(wg.all_paths(g, wg.ZERO, wg.ONE, max_edges=10))
    assert len(wider) > len(capped)
    assert all(p.edge_count <= 10 for p in wider)


def test_all_paths_budget_counts_expansions():
    g = wg.level_graph(2)
    # the only 0-1 path has 9 edges; 9 expansions are exactly enough
    assert len(list(wg.all_paths(g, wg.ZERO, wg.ONE, budget=9))) == 1
    with pytest.raises(BudgetExceededError):
        list(wg.all_paths(g, wg.ZERO, wg.ONE, budget=8))


def test_zigzag_witness_exists_for_all_grid_endpoint_paths():
    # any path between level-1 grid points inside the [2, 3] window must
    # traverse a full block zigzag of its top level
    g = wg.whirl_graph(wg.LevelWindow(2, 3))
    grid = wg.level_vertices(1)
    swept = 0
    for i in range(len(grid)):
        for j in range(i + 1, len(grid)):
            for p in wg.all_paths(g, grid[i], grid[j], max_edges=8):
                assert wg.zigzag_window(p) is not None
                swept += 1
    assert swept == 37


def test_oracle_agrees_with_refutation_on_windows():
    # whenever refute_compatibility succeeds against every enumerated partner,
    # the exhaustive search must come back empty as well
    for window in (wg.LevelWindow(2, 2), wg.LevelWindow(2, 3)):
        g = wg.whirl_graph(window)
        for p in wg.all_paths(g, wg.ZERO, wg.ONE, max_edges=10):
            top = wg.minimal_containment_level(p)
            nxt = wg.LevelWindow(top + 1, top + 1)
            for q in wg.all_paths(wg.whirl_graph(nxt), wg.ZERO, wg.ONE):
                wg.refute_compatibility(p, q)
            assert wg.exists_compatible_bruteforce(p, nxt) is False
