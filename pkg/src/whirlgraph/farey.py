"""Farey graphs two ways: determinant adjacency and the blue-edge recursion.

The number-theoretic graph joins reduced fractions a/b and c/d exactly when
|ad - bc| = 1 (infinity counts as 1/0). The combinatorial one grows from a
single blue edge by hanging one new vertex on every blue edge per step; its
vertices acquire mediant labels, and the two definitions are cross-checked
on every truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FareyFraction, Graph, Path, RationalLabel
from .errors import FractionError, RangeError, StructureError


def farey_adjacent(a, b):
    """Determinant test: reduced fractions are adjacent iff |ps - qr| = 1."""
    for f in (a, b):
        if not isinstance(f, RationalLabel):
            raise FractionError(f"not a fraction label: {f!r}")
    return abs(a.p * b.q - a.q * b.p) == 1


def mediant(a, b):
    """Componentwise sum (p+r, q+s) of two raw numerator/denominator pairs."""
    return (a[0] + b[0], a[1] + b[1])


@dataclass(frozen=True)
class ColoredGraph:
    """Graph with a blue edge subset and the two base vertices; rest is black."""

    graph: Graph
    blue: frozenset
    ends: tuple

    def __post_init__(self):
        if not self.blue <= self.graph.edges:
            raise StructureError("blue edges must belong to the graph")

    @property
    def black(self):
        return self.graph.edges - self.blue

    def as_json(self):
        from .core import graph_to_json, vertex_str

        blue_pairs = sorted(
            (sorted((vertex_str(a), vertex_str(b))) for a, b in self.blue),
        )
        return graph_to_json(self.graph, extra={"blue": blue_pairs})


def _canon(raw):
    return FareyFraction(raw[0], raw[1])


def halved_farey(n, seeds=((0, 1), (1, 1))):
    """Order-n halved Farey graph grown from two adjacent seed fractions.

    Order 0 is a single blue edge. Each step hangs the mediant of every blue
    edge on its two endvertices with two blue edges and recolours the old
    edges black. Mediant labels of adjacent fractions are automatically in
    lowest terms; the label constructor would reject anything else.
    """
    if n < 0:
        raise RangeError(f"order must be >= 0, got {n}")
    raw_a, raw_b = seeds
    blue_raw = [(raw_a, raw_b)]
    vertices = {_canon(raw_a), _canon(raw_b)}
    black = set()
    for _ in range(n):
        grown = []
        for pa, pb in blue_raw:
            m = mediant(pa, pb)
            vertices.add(_canon(m))
            black.add(frozenset((_canon(pa), _canon(pb))))
            grown.append((pa, m))
            grown.append((m, pb))
        blue_raw = grown
    blue = frozenset(frozenset((_canon(pa), _canon(pb))) for pa, pb in blue_raw)
    graph = Graph(vertices, blue | frozenset(black))
    return ColoredGraph(graph, blue, (_canon(raw_a), _canon(raw_b)))


def blue_order(colored):
    """The Hamilton path formed by the blue edges, oriented end to end.

    Rederived by walking the blue edges from the first base vertex; anything
    other than a spanning path raises, so the recursion's path property is
    checked rather than assumed.
    """
    adj = {}
    for e in colored.blue:
        a, b = e
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start, goal = colored.ends
    seq = [start]
    prev = None
    while True:
        nbrs = [x for x in adj.get(seq[-1], ()) if x != prev]
        if not nbrs:
            break
        if len(nbrs) > 1:
            raise StructureError("blue edges do not form a path")
        prev = seq[-1]
        seq.append(nbrs[0])
    if seq[-1] != goal or len(seq) != colored.graph.vertex_count:
        raise StructureError("blue edges do not form a spanning path")
    return Path(colored.graph, seq)


def farey_graph(n):
    """Order-n Farey truncation: two halved copies glued along the base edge.

    The first copy grows from 0/1 and 1/0, the second from 0/1 and -1/0;
    (+-1)/0 are one vertex, so the copies share exactly the base edge.
    """
    pos = halved_farey(n, seeds=((0, 1), (1, 0)))
    neg = halved_farey(n, seeds=((0, 1), (-1, 0)))
    return pos.graph.union(neg.graph)


@dataclass(frozen=True)
class SternBrocotReport:
    """Edge-set comparison between the recursion and determinant adjacency."""

    order: int
    halved_edges: int
    halved_det_pairs: int
    halved_match: bool
    farey_edges: int
    farey_det_pairs: int
    farey_match: bool

    @property
    def ok(self):
        return self.halved_match and self.farey_match

    def as_json(self):
        return {
            "order": self.order,
            "halvedEdges": self.halved_edges,
            "halvedDetPairs": self.halved_det_pairs,
            "halvedMatch": self.halved_match,
            "fareyEdges": self.farey_edges,
            "fareyDetPairs": self.farey_det_pairs,
            "fareyMatch": self.farey_match,
            "ok": self.ok,
        }


def _det_pairs(graph):
    labels = graph.sorted_vertices()
    nums = [(v.p, v.q) for v in labels]
    pairs = set()
    for i in range(len(labels)):
        p, q = nums[i]
        for j in range(i + 1, len(labels)):
            r, s = nums[j]
            d = p * s - q * r
            if d == 1 or d == -1:
                pairs.add(frozenset((labels[i], labels[j])))
    return pairs


def stern_brocot_check(n):
    """Label truncations by mediants and compare edges with determinant pairs.

    The halved graph keeps its default 0/1, 1/1 seeds; the full graph uses
    the two-copy labelling of farey_graph. Exhaustive over all label pairs.
    """
    halved = halved_farey(n).graph
    halved_det = _det_pairs(halved)
    full = farey_graph(n)
    full_det = _det_pairs(full)
    return SternBrocotReport(
        order=n,
        halved_edges=halved.edge_count,
        halved_det_pairs=len(halved_det),
        halved_match=halved_det == halved.edges,
        farey_edges=full.edge_count,
        farey_det_pairs=len(full_det),
        farey_match=full_det == full.edges,
    )
