"""Acceptance suite: one test per criterion, each printing a PASS line.

Every criterion is exact (graph counts, set equalities, verified
isomorphisms) and carries the wall-clock bound it must meet; numbers in
here were frozen from the independent oracles exercised by the unit tests
(brute-force cuts, exhaustive path enumeration, traversal walks).
"""

import itertools
import json
import random
import time

import pytest

import whirlgraph as wg
from whirlgraph.cli import run
from whirlgraph.core import Graph

t = wg.triadic_make


def stamp(number, label, started, bound):
    elapsed = time.perf_counter() - started
    print(f"[PASS] criterion {number}: {label} ({elapsed:.2f}s < {bound}s)")
    assert elapsed < bound, f"criterion {number} exceeded {bound}s"


def test_criterion_1_whirl_structure():
    started = time.perf_counter()
    seen = set()
    for n in range(1, 9):
        grid = wg.level_vertices(n)
        level = wg.level_edges(n)
        assert len(grid) == 3**n + 1
        assert len(level) == 3**n
        assert not (level & seen)
        seen |= level
        upto = wg.graph_upto(n)
        assert upto.edge_count == (3 ** (n + 1) - 3) // 2
        if n >= 2:
            assert upto.edge_count <= 3 * upto.vertex_count - 6
        single = wg.level_graph(n)
        degrees = sorted(single.degree(v) for v in single.vertices)
        assert degrees == [1, 1] + [2] * (3**n - 1)
        assert single.degree(wg.ZERO) == 1 and single.degree(wg.ONE) == 1
        assert single.is_connected()
        path = wg.hamilton_path(n)
        assert path.start == wg.ZERO and path.end == wg.ONE
        assert len(path) == single.vertex_count
        coarse = set(wg.level_vertices(n - 1))
        trace = [v for v in path if v in coarse]
        assert trace == sorted(trace, key=wg.vertex_key)
    stamp(1, "whirl structure for n = 1..8", started, 5)


def test_criterion_2_edge_connectivity_scale():
    started = time.perf_counter()
    for n in range(1, 7):
        g = wg.graph_upto(n)
        system = wg.max_edge_disjoint(g, wg.ZERO, wg.ONE)
        assert system.size == n
        assert g.degree(wg.ZERO) == n
    stamp(2, "max edge-disjoint 0-1 systems equal n for n = 1..6", started, 10)


def test_criterion_3_compatible_systems_two_routes():
    started = time.perf_counter()
    g = wg.graph_upto(4)
    rng = random.Random(2024)
    verts = g.sorted_vertices()
    for _ in range(200):
        u, v = rng.sample(verts, 2)
        bound = wg.max_edge_disjoint(g, u, v).size
        k = rng.randint(1, bound)
        minimal = wg.min_edge_system(g, u, v, k)
        assert minimal.size == k
        assert wg.validate_system(minimal).ok
        raw = wg.random_edge_disjoint_system(g, u, v, k, rng)
        repaired = wg.uncross(raw)  # raises unless every step strictly shrinks
        assert repaired.size == k
        assert wg.validate_system(repaired).ok
        assert minimal.total_edges <= repaired.total_edges <= raw.total_edges
    stamp(3, "200 seeded instances in level-4 truncation, both routes", started, 60)


def brute_min_cut(g, u, v):
    def connected(removed):
        keep = [e for e in g.edges if e not in removed]
        return any(u in c and v in c for c in Graph(g.vertices, keep).components())

    if not connected(frozenset()):
        return 0
    edges = sorted(g.edges, key=lambda e: sorted(wg.vertex_key(x) for x in e))
    for size in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            if not connected(set(combo)):
                return size
    return len(edges)


def test_criterion_4_menger_oracle():
    started = time.perf_counter()
    base = wg.graph_upto(2)
    pool = base.sorted_edges()
    rng = random.Random(451)
    for _ in range(50):
        chosen = rng.sample(pool, rng.randint(4, 12))
        verts = set()
        for a, b in chosen:
            verts.update((a, b))
        sub = Graph(verts, chosen)
        u, v = rng.sample(sorted(verts, key=wg.vertex_key), 2)
        assert wg.max_edge_disjoint(sub, u, v).size == brute_min_cut(sub, u, v)
    stamp(4, "flow sizes equal brute-force minimum cuts on 50 subgraphs", started, 30)


def test_criterion_5_interval_traversal_sweep():
    started = time.perf_counter()
    g = wg.whirl_graph(wg.LevelWindow(2, 3))
    grid = wg.level_vertices(1)
    swept = 0
    for i in range(len(grid)):
        for j in range(i + 1, len(grid)):
            u, v = grid[i], grid[j]
            for p in wg.all_paths(g, u, v, max_edges=10, budget=10**6):
                report = wg.check_interval_traversal(p, u, v, 2)
                assert report.ok, (u, v, p, report)
                swept += 1
    assert swept > 0
    stamp(5, f"containment and order hold on {swept} enumerated paths", started, 60)


def test_criterion_6_no_compatible_partner_above_top_level():
    started = time.perf_counter()
    budget = 10**6
    swept = 0
    for window in (wg.LevelWindow(2, 2), wg.LevelWindow(2, 3)):
        g = wg.whirl_graph(window)
        for p in wg.all_paths(g, wg.ZERO, wg.ONE, max_edges=10, budget=budget):
            assert wg.zigzag_window(p) is not None
            top = wg.minimal_containment_level(p)
            above = wg.LevelWindow(top + 1, top + 1)
            partners = 0
            for q in wg.all_paths(wg.whirl_graph(above), wg.ZERO, wg.ONE, budget=budget):
                refutation = wg.refute_compatibility(p, q)
                a, b = refutation.pair
                assert p.visits_before(b, a) and q.visits_before(a, b)
                partners += 1
            assert partners >= 1
            assert wg.exists_compatible_bruteforce(p, above, budget=budget) is False
            swept += 1
    stamp(6, f"refutations and empty searches for {swept} swept paths", started, 300)


def test_criterion_7_farey_cross_validation():
    started = time.perf_counter()
    for n in range(0, 11):
        colored = wg.halved_farey(n)
        assert colored.graph.vertex_count == 2**n + 1
        assert colored.graph.edge_count == 2 ** (n + 1) - 1
        assert len(colored.blue) == 2**n
        path = wg.blue_order(colored)
        assert len(path) == colored.graph.vertex_count
        if n:
            coarse = wg.blue_order(wg.halved_farey(n - 1)).sequence
            assert [v for v in path if v in set(coarse)] == list(coarse)
        assert wg.stern_brocot_check(n).ok
    stamp(7, "recursion counts, blue paths, determinant match for n = 0..10", started, 10)


def test_criterion_8_halved_farey_isos():
    started = time.perf_counter()
    previous = None
    for n in range(1, 11):
        vmap = wg.halved_farey_iso(n)  # raises unless the iso verifies
        assert len(vmap) == 2**n + 1
        if previous is not None:
            assert vmap.extends(previous)
        previous = vmap
    stamp(8, "contraction isomorphisms verify and nest for n = 1..10", started, 10)


def test_criterion_9_assembly_verifies():
    started = time.perf_counter()
    for n in range(3, 11):
        result = wg.farey_minor_assembly(n)
        for e in result.assembly.edges:
            assert 1 <= wg.edge_level(e) <= n
        assert all(v.exponent <= n for v in result.assembly.vertices)
        assert wg.verify_iso(result.iso, result.contracted, result.target)
        assert result.target == wg.farey_graph(n - 2)
        covered = set()
        for a, b in result.branch_sets:
            assert a != b
            covered.update((a, b))
        assert covered == result.assembly.vertices
        assert len(result.branch_sets) * 2 == len(covered)
    stamp(9, "assemblies contract onto Farey truncations for n = 3..10", started, 30)


CLI_CASES = [
    ["verify", "lemma22", "--level", "2", "--samples", "5", "--seed", "11"],
    ["verify", "kneip", "--level", "3", "--trials", "5", "--seed", "11"],
    ["verify", "theorem1", "--level", "3", "--budget", "1000000"],
    ["verify", "lemma31", "--order", "6"],
    ["verify", "theorem2", "--level", "5"],
    ["verify", "sternbrocot", "--order", "6"],
]


def test_criterion_10_cli_determinism(capsys):
    started = time.perf_counter()
    for argv in CLI_CASES:
        first = run(list(argv))
        out_first = capsys.readouterr().out
        second = run(list(argv))
        out_second = capsys.readouterr().out
        assert first.exit_code == 0, argv
        assert second.exit_code == 0
        assert out_first == out_second, argv
        assert json.loads(out_first)["ok"] is True
    assert run(["gen-whirl", "--low", "2"]).exit_code == 2
    capsys.readouterr()
    assert run(["verify", "theorem1", "--level", "3", "--budget", "5"]).exit_code == 3
    capsys.readouterr()
    elapsed = time.perf_counter() - started
    print(f"[PASS] criterion 10: byte-identical seeded reports, exit-code contract ({elapsed:.2f}s)")
