"""Cantor-guided subgraph of the whirl graph and the Farey-minor assembly.

Middle-thirds interval endpoints select a whirl subgraph whose per-interval
middle edges form a matching; contracting that matching yields the halved
Farey graph minus its base edge, certified by the unique order isomorphism.
Two affine copies of the construction, squeezed into the middle ninths
[3/9, 4/9] and [5/9, 6/9] and glued by three explicit edges, contract onto
the full Farey truncation with every branch set of size exactly two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ONE,
    ZERO,
    Graph,
    Matching,
    TriadicRational,
    VertexMap,
    contract,
    verify_iso,
    vertex_key,
    vertex_str,
)
from .errors import RangeError, StructureError
from .farey import blue_order, farey_graph, halved_farey
from .whirl import edge_level


@dataclass(frozen=True)
class Interval:
    lo: TriadicRational
    hi: TriadicRational

    def __post_init__(self):
        if not self.lo < self.hi:
            raise RangeError("interval endpoints out of order")

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _triadic(fr):
    return TriadicRational.from_fraction(fr)


def cantor_intervals(n):
    """Depth-n middle-thirds family: 2**n closed intervals of length 3**-n."""
    if n < 0:
        raise RangeError(f"depth must be >= 0, got {n}")
    intervals = [Interval(ZERO, ONE)]
    for _ in range(n):
        grown = []
        for it in intervals:
            lo, hi = it.lo.value, it.hi.value
            third = (hi - lo) / 3
            grown.append(Interval(_triadic(lo), _triadic(lo + third)))
            grown.append(Interval(_triadic(hi - third), _triadic(hi)))
        intervals = grown
    return intervals


def cantor_subgraph(n):
    """Whirl subgraph on Cantor endpoints plus its middle matching.

    For every depth-(k-1) interval [a, a+d], level k contributes the three
    zigzag edges over a, a+d/3, a+2d/3, a+d; the middle edge of each triple
    joins the two interior points and goes into the matching, which ends up
    perfect on everything except 0 and 1.
    """
    if n < 1:
        raise RangeError(f"level must be >= 1, got {n}")
    edges = []
    matched = []
    for k in range(1, n + 1):
        for it in cantor_intervals(k - 1):
            lo = it.lo.value
            third = (it.hi.value - lo) / 3
            a = it.lo
            b = _triadic(lo + third)
            c = _triadic(lo + 2 * third)
            d = it.hi
            edges.append((a, c))
            edges.append((b, c))
            edges.append((b, d))
            matched.append((b, c))
    vertices = set()
    for e in edges:
        vertices.update(e)
    return Graph(vertices, edges), Matching(matched)


@dataclass(frozen=True)
class AffineMap:
    """Exact affine relabeling x -> scale*x + shift over triadic labels."""

    scale: Fraction
    shift: Fraction

    def __call__(self, v):
        return _triadic(self.scale * v.value + self.shift)

    def inverse(self):
        return AffineMap(1 / self.scale, -self.shift / self.scale)


MIDDLE_NINTH_LEFT = AffineMap(Fraction(1, 9), Fraction(1, 3))
MIDDLE_NINTH_RIGHT = AffineMap(Fraction(1, 9), Fraction(5, 9))


def affine_image(obj, amap):
    """Rename every vertex of a graph, matching, or edge set through the map.

    Images must stay triadic rationals in [0, 1]; anything else raises.
    """
    if isinstance(obj, Graph):
        return Graph(
            [amap(v) for v in obj.vertices],
            [(amap(a), amap(b)) for a, b in obj.sorted_edges()],
        )
    if isinstance(obj, Matching):
        return Matching([(amap(a), amap(b)) for a, b in obj.sorted_edges()])
    return frozenset(frozenset((amap(a), amap(b))) for a, b in obj)


def _contracted_order_key(v):
    # 0 first, matching pairs by their smaller endpoint, 1 last
    if isinstance(v, tuple):
        return (1, vertex_key(v))
    if v == ZERO:
        return (0, ())
    return (2, ())


def halved_farey_iso(n):
    """The unique order isomorphism certifying the contraction's shape.

    Contracting the level-n Cantor subgraph by its matching leaves the
    vertices {0, 1} plus one vertex per matching edge; ordering those with 0
    least, 1 greatest and pairs by smaller endpoint, then matching them
    positionally with the blue path of the halved Farey graph, gives a map
    that is verified to be a graph isomorphism onto the halved graph minus
    its base edge before it is returned. The maps nest as n grows.
    """
    if n < 1:
        raise RangeError(f"level must be >= 1, got {n}")
    graph, matching = cantor_subgraph(n)
    contracted, _ = contract(graph, matching)
    domain = sorted(contracted.vertices, key=_contracted_order_key)
    colored = halved_farey(n)
    targets = blue_order(colored).sequence
    if len(domain) != len(targets):
        raise StructureError("contracted and halved vertex counts differ")
    vmap = VertexMap(zip(domain, targets))
    base_edge = frozenset(colored.ends)
    target = Graph(colored.graph.vertices, colored.graph.edges - {base_edge})
    if not verify_iso(vmap, contracted, target):
        raise StructureError("order map is not a graph isomorphism")
    return vmap


@dataclass(frozen=True)
class AssemblyResult:
    """Verified double-copy assembly contracting onto a Farey truncation."""

    level: int
    farey_order: int
    assembly: Graph
    contraction_matching: Matching
    contracted: Graph
    target: Graph
    iso: VertexMap
    branch_sets: tuple

    def as_json(self):
        return {
            "level": self.level,
            "fareyOrder": self.farey_order,
            "verified": True,
            "branchSets": [
                [vertex_str(a), vertex_str(b)] for a, b in self.branch_sets
            ],
        }


def farey_minor_assembly(n):
    """Assemble and verify the level-n Farey minor with size-two branch sets.

    Both middle-ninth copies of the level-(n-2) Cantor subgraph are joined by
    the three explicit edges {1/3, 5/9}, {4/9, 2/3}, {1/3, 2/3}; contracting
    the two copied matchings plus the first two of those edges is certified
    isomorphic to the order-(n-2) Farey graph via the per-copy order
    isomorphisms glued on the shared base vertices.
    """
    if n < 3:
        raise RangeError(f"level must be >= 3, got {n}")
    m = n - 2
    graph, matching = cantor_subgraph(m)
    left_graph = affine_image(graph, MIDDLE_NINTH_LEFT)
    right_graph = affine_image(graph, MIDDLE_NINTH_RIGHT)
    glue0 = (MIDDLE_NINTH_LEFT(ZERO), MIDDLE_NINTH_RIGHT(ZERO))
    glue1 = (MIDDLE_NINTH_LEFT(ONE), MIDDLE_NINTH_RIGHT(ONE))
    base = (glue0[0], glue1[1])
    assembly = Graph(
        left_graph.vertices | right_graph.vertices,
        list(left_graph.edges) + list(right_graph.edges) + [glue0, glue1, base],
    )
    dmatch = (
        affine_image(matching, MIDDLE_NINTH_LEFT)
        .union(affine_image(matching, MIDDLE_NINTH_RIGHT))
        .union(Matching([glue0, glue1]))
    )
    for e in assembly.edges:
        if edge_level(e) > n:
            raise StructureError("assembly edge above the level window")
    for v in assembly.vertices:
        if v.exponent > n:
            raise StructureError("assembly vertex outside the level grid")
    if not dmatch.edges <= assembly.edges:
        raise StructureError("contraction edges must lie in the assembly")
    if dmatch.covered != assembly.vertices:
        raise StructureError("branch sets must cover every assembly vertex")
    contracted, _ = contract(assembly, dmatch)

    half_iso = halved_farey_iso(m)
    default_path = blue_order(halved_farey(m)).sequence
    pos_path = blue_order(halved_farey(m, seeds=((0, 1), (1, 0)))).sequence
    neg_path = blue_order(halved_farey(m, seeds=((0, 1), (-1, 0)))).sequence
    relabel_pos = dict(zip(default_path, pos_path))
    relabel_neg = dict(zip(default_path, neg_path))
    left_inverse = {MIDDLE_NINTH_LEFT(v): v for v in graph.vertices}
    right_inverse = {MIDDLE_NINTH_RIGHT(v): v for v in graph.vertices}
    glue0_name = tuple(sorted(glue0, key=vertex_key))
    glue1_name = tuple(sorted(glue1, key=vertex_key))
    pairs = {}
    for w in contracted.vertices:
        if w == glue0_name:
            pairs[w] = relabel_pos[default_path[0]]
        elif w == glue1_name:
            pairs[w] = relabel_pos[default_path[-1]]
        elif w[0] in left_inverse:
            pre = tuple(
                sorted((left_inverse[w[0]], left_inverse[w[1]]), key=vertex_key)
            )
            pairs[w] = relabel_pos[half_iso[pre]]
        else:
            pre = tuple(
                sorted((right_inverse[w[0]], right_inverse[w[1]]), key=vertex_key)
            )
            pairs[w] = relabel_neg[half_iso[pre]]
    iso = VertexMap(pairs)
    target = farey_graph(m)
    if not verify_iso(iso, contracted, target):
        raise StructureError("contracted assembly is not the Farey truncation")
    branch_sets = tuple(
        sorted(
            (tuple(sorted(e, key=vertex_key)) for e in dmatch.edges),
            key=vertex_key,
        )
    )
    return AssemblyResult(
        level=n,
        farey_order=m,
        assembly=assembly,
        contraction_matching=dmatch,
        contracted=contracted,
        target=target,
        iso=iso,
        branch_sets=branch_sets,
    )
