"""Cantor intervals, the endpoint subgraph, order isomorphisms, the assembly."""

from fractions import Fraction

import pytest

import whirlgraph as wg
from whirlgraph.errors import RangeError

t = wg.triadic_make


def spans(intervals):
    return [(str(i.lo), str(i.hi)) for i in intervals]


def test_cantor_intervals_small_depths():
    assert spans(wg.cantor_intervals(1)) == [("0/1", "1/3"), ("2/3", "1/1")]
    assert spans(wg.cantor_intervals(2)) == [
        ("0/1", "1/9"), ("2/9", "1/3"), ("2/3", "7/9"), ("8/9", "1/1"),
    ]
    assert len(wg.cantor_intervals(5)) == 32
    for depth in range(4):
        for i in wg.cantor_intervals(depth):
            assert i.hi.value - i.lo.value == Fraction(1, 3**depth)


def test_cantor_subgraph_level_one():
    graph, matching = wg.cantor_subgraph(1)
    assert graph.vertices == {t(0, 0), t(1, 1), t(2, 1), t(1, 0)}
    assert graph.edges == wg.level_edges(1)
    assert matching.edges == {frozenset((t(1, 1), t(2, 1)))}


def test_cantor_subgraph_level_two_counts():
    graph, matching = wg.cantor_subgraph(2)
    assert graph.vertex_count == 8
    assert graph.edge_count == 9
    assert len(matching) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cantor_subgraph_counts_and_matching_cover(n):
    graph, matching = wg.cantor_subgraph(n)
    assert graph.vertex_count == 2 ** (n + 1)
    assert graph.edge_count == 3 * (2**n - 1)
    assert len(matching) == 2**n - 1
    assert matching.covered == graph.vertices - {wg.ZERO, wg.ONE}


def test_cantor_subgraph_edges_are_whirl_edges():
    graph, _ = wg.cantor_subgraph(4)
    for e in graph.edges:
        assert 1 <= wg.edge_level(e) <= 4
    whole = wg.graph_upto(4)
    assert graph.edges <= whole.edges


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cantor_vertices_equal_grid_inside_intervals(n):
    # independent route: level-n grid points lying inside some depth-n interval
    graph, _ = wg.cantor_subgraph(n)
    inside = {
        v
        for v in wg.level_vertices(n)
        if any(i.lo <= v <= i.hi for i in wg.cantor_intervals(n))
    }
    assert graph.vertices == inside


def test_halved_farey_iso_level_one():
    vmap = wg.halved_farey_iso(1)
    middle = (t(1, 1), t(2, 1))
    assert vmap[wg.ZERO] == wg.FareyFraction(0, 1)
    assert vmap[wg.ONE] == wg.FareyFraction(1, 1)
    assert vmap[middle] == wg.FareyFraction(1, 2)


def test_halved_farey_iso_level_two_order():
    vmap = wg.halved_farey_iso(2)
    assert [str(vmap[k]) for k in sorted(vmap.domain, key=wg.vertex_key)] == [
        "0/1", "1/3", "1/2", "2/3", "1/1",
    ]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_halved_farey_iso_nesting(n):
    assert wg.halved_farey_iso(n).extends(wg.halved_farey_iso(n - 1))


def test_affine_map_examples():
    left, right = wg.MIDDLE_NINTH_LEFT, wg.MIDDLE_NINTH_RIGHT
    assert left(wg.ZERO) == t(1, 1)
    assert left(wg.ONE) == t(4, 2)
    assert right(wg.ONE) == t(2, 1)
    assert left.inverse()(t(1, 1)) == wg.ZERO


def test_affine_image_of_level_one_cantor_edges():
    graph, _ = wg.cantor_subgraph(1)
    image = wg.affine_image(graph.edges, wg.MIDDLE_NINTH_LEFT)
    assert image == {
        frozenset((t(9, 3), t(11, 3))),
        frozenset((t(10, 3), t(11, 3))),
        frozenset((t(10, 3), t(12, 3))),
    }
    assert image <= wg.level_edges(3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_affine_maps_shift_levels_by_two(k):
    graph, _ = wg.cantor_subgraph(k)
    level_k = {e for e in graph.edges if wg.edge_level(e) == k}
    for amap in (wg.MIDDLE_NINTH_LEFT, wg.MIDDLE_NINTH_RIGHT):
        assert wg.affine_image(level_k, amap) <= wg.level_edges(k + 2)


def test_affine_image_range_error_for_non_triadic_scale():
    bad = wg.AffineMap(Fraction(1, 2), Fraction(0))
    with pytest.raises(RangeError):
        bad(t(1, 1))
    big = wg.AffineMap(Fraction(2), Fraction(0))
    with pytest.raises(RangeError):
        big(t(2, 1))


def test_assembly_level_three():
    result = wg.farey_minor_assembly(3)
    assert result.farey_order == 1
    assert result.contracted.vertex_count == 4
    assert result.contracted.edge_count == 5
    assert result.target == wg.farey_graph(1)
    assert wg.verify_iso(result.iso, result.contracted, result.target)


def test_assembly_level_four_counts():
    result = wg.farey_minor_assembly(4)
    assert result.contracted.vertex_count == 8
    assert result.contracted.edge_count == 13
    m = result.farey_order
    assert result.assembly.edge_count == 2 * 3 * (2**m - 1) + 3


def test_assembly_extra_edges_and_subgraph():
    result = wg.farey_minor_assembly(4)
    extra = [
        frozenset((t(1, 1), t(5, 2))),
        frozenset((t(4, 2), t(2, 1))),
        frozenset((t(1, 1), t(2, 1))),
    ]
    for e in extra:
        assert e in result.assembly.edges
    assert [wg.edge_level(e) for e in extra] == [2, 2, 1]
    assert result.assembly.edges <= wg.graph_upto(4).edges
    assert result.assembly.vertices <= set(wg.level_vertices(4))


def test_assembly_branch_sets_cover_everything_exactly_twice():
    result = wg.farey_minor_assembly(5)
    seen = set()
    for a, b in result.branch_sets:
        assert a != b
        seen.update((a, b))
    assert len(result.branch_sets) * 2 == len(seen)
    assert seen == result.assembly.vertices
    assert result.contracted.vertex_count == len(result.branch_sets)


def test_assembly_halves_are_disjoint():
    result = wg.farey_minor_assembly(4)
    left = {v for v in result.assembly.vertices if v <= t(4, 2)}
    right = {v for v in result.assembly.vertices if v >= t(5, 2)}
    assert left | right == result.assembly.vertices
    assert not left & right


def test_assembly_range_error():
    with pytest.raises(RangeError):
        wg.farey_minor_assembly(2)
