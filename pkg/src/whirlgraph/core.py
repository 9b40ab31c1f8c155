"""Exact rational labels, graphs, paths, matchings, maps, and structural checks."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from .errors import (
    CoverageError,
    FractionError,
    GraphError,
    MapError,
    MatchingError,
    RangeError,
)


class RationalLabel:
    """Reduced fraction p/q used as a vertex label; q = 0 encodes infinity.

    Equality, hashing and ordering go by the reduced pair, so labels created
    by different subclasses are interchangeable as graph vertices.
    """

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        self.p = p
        self.q = q

    @property
    def key(self):
        if self.q == 0:
            return (1, Fraction(0))
        return (0, Fraction(self.p, self.q))

    @property
    def value(self):
        if self.q == 0:
            raise FractionError("infinity has no rational value")
        return Fraction(self.p, self.q)

    def __eq__(self, other):
        return (
            isinstance(other, RationalLabel)
            and self.p == other.p
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.p, self.q))

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __str__(self):
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"{type(self).__name__}({self.p}, {self.q})"


class TriadicRational(RationalLabel):
    """Canonical fraction k/3**n in [0, 1]: the whirl-graph vertex universe."""

    __slots__ = ("exponent",)

    def __init__(self, numerator, exponent):
        if exponent < 0:
            raise RangeError(f"exponent must be >= 0, got {exponent}")
        if numerator < 0 or numerator > 3**exponent:
            raise RangeError(f"numerator {numerator} outside [0, 3^{exponent}]")
        while exponent > 0 and numerator % 3 == 0:
            numerator //= 3
            exponent -= 1
        super().__init__(numerator, 3**exponent)
        self.exponent = exponent

    @property
    def numerator(self):
        return self.p

    @classmethod
    def from_fraction(cls, value):
        """Exact conversion; the denominator must be a power of three."""
        f = Fraction(value)
        if f < 0 or f > 1:
            raise RangeError(f"{f} outside [0, 1]")
        den = f.denominator
        exponent = 0
        while den % 3 == 0:
            den //= 3
            exponent += 1
        if den != 1:
            raise RangeError(f"{f} is not a triadic rational")
        return cls(f.numerator, exponent)


def triadic_make(numerator, exponent):
    """Canonical triadic rational numerator / 3**exponent."""
    return TriadicRational(numerator, exponent)


ZERO = TriadicRational(0, 0)
ONE = TriadicRational(1, 0)


class FareyFraction(RationalLabel):
    """Reduced p/q with q >= 0; both (1, 0) and (-1, 0) name infinity."""

    __slots__ = ()

    def __init__(self, p, q):
        if q < 0:
            raise FractionError(f"denominator must be >= 0, got {q}")
        if q == 0:
            if p not in (1, -1):
                raise FractionError("only (+-1)/0 denotes infinity")
            p = 1
        elif gcd(abs(p), q) != 1:
            raise FractionError(f"{p}/{q} is not in lowest terms")
        super().__init__(p, q)

    @property
    def is_infinity(self):
        return self.q == 0


def vertex_key(v):
    """Total-order sort key for vertex labels, including contracted pairs."""
    if isinstance(v, tuple):
        out = []
        for part in v:
            out.extend(vertex_key(part))
        return tuple(out)
    if isinstance(v, RationalLabel):
        return (v.key,)
    return ((0, v),)


def vertex_str(v):
    if isinstance(v, tuple):
        return "|".join(vertex_str(part) for part in v)
    return str(v)


def parse_label(text):
    """Parse "p/q" into a triadic rational when possible, else a Farey fraction."""
    parts = str(text).split("/")
    if len(parts) != 2:
        raise FractionError(f"bad label {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise FractionError(f"bad label {text!r}") from exc
    if q >= 1 and 0 <= p <= q:
        den, exponent = q, 0
        while den % 3 == 0:
            den //= 3
            exponent += 1
        if den == 1:
            return TriadicRational(p, exponent)
    return FareyFraction(p, q)


class Graph:
    """Finite simple undirected graph over totally ordered labels."""

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices, edges=()):
        vs = frozenset(vertices)
        adj = {v: set() for v in vs}
        es = set()
        for edge in edges:
            a, b = edge
            if a == b:
                raise GraphError(f"loop at {vertex_str(a)}")
            if a not in adj or b not in adj:
                raise GraphError(
                    f"edge endpoint missing from vertex set: "
                    f"{vertex_str(a)} -- {vertex_str(b)}"
                )
            es.add(frozenset((a, b)))
            adj[a].add(b)
            adj[b].add(a)
        self._vertices = vs
        self._edges = frozenset(es)
        self._adj = {v: tuple(sorted(nb, key=vertex_key)) for v, nb in adj.items()}

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def vertex_count(self):
        return len(self._vertices)

    @property
    def edge_count(self):
        return len(self._edges)

    def has_vertex(self, v):
        return v in self._vertices

    def has_edge(self, a, b):
        return frozenset((a, b)) in self._edges

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def sorted_vertices(self):
        return sorted(self._vertices, key=vertex_key)

    def sorted_edges(self):
        pairs = [tuple(sorted(e, key=vertex_key)) for e in self._edges]
        pairs.sort(key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))
        return pairs

    def union(self, other):
        return Graph(
            self._vertices | other._vertices,
            list(self._edges) + list(other._edges),
        )

    def without_vertex(self, v):
        if v not in self._vertices:
            raise GraphError(f"{vertex_str(v)} is not a vertex")
        return Graph(
            self._vertices - {v},
            [e for e in self._edges if v not in e],
        )

    def components(self):
        """Connected components as frozensets, ordered by smallest member."""
        seen = set()
        comps = []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


class Path:
    """Oriented simple path; consecutive vertices must be adjacent in the host."""

    __slots__ = ("host", "sequence", "_pos")

    def __init__(self, host, sequence):
        seq = tuple(sequence)
        if not seq:
            raise GraphError("a path needs at least one vertex")
        pos = {}
        for i, v in enumerate(seq):
            if not host.has_vertex(v):
                raise GraphError(f"{vertex_str(v)} not in host graph")
            if v in pos:
                raise GraphError(f"repeated vertex {vertex_str(v)}")
            pos[v] = i
        for a, b in zip(seq, seq[1:]):
            if not host.has_edge(a, b):
                raise GraphError(
                    f"{vertex_str(a)} -- {vertex_str(b)} is not a host edge"
                )
        self.host = host
        self.sequence = seq
        self._pos = pos

    @property
    def start(self):
        return self.sequence[0]

    @property
    def end(self):
        return self.sequence[-1]

    @property
    def edges(self):
        return tuple(
            frozenset(pair) for pair in zip(self.sequence, self.sequence[1:])
        )

    @property
    def edge_count(self):
        return len(self.sequence) - 1

    def position(self, v):
        return self._pos[v]

    def visits_before(self, x, y):
        return self._pos[x] < self._pos[y]

    def reverse(self):
        return Path(self.host, self.sequence[::-1])

    def __contains__(self, v):
        return v in self._pos

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def __eq__(self, other):
        return isinstance(other, Path) and self.sequence == other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def __repr__(self):
        return "Path(" + " ".join(vertex_str(v) for v in self.sequence) + ")"


class Matching:
    """Set of pairwise endpoint-disjoint edges."""

    __slots__ = ("_edges", "_covered")

    def __init__(self, edges):
        es = set()
        seen = set()
        for edge in edges:
            a, b = edge
            if a == b:
                raise MatchingError("loops cannot be matched")
            e = frozenset((a, b))
            if e in es:
                continue
            if a in seen or b in seen:
                raise MatchingError(
                    f"shared endpoint between matching edges at "
                    f"{vertex_str(a)} -- {vertex_str(b)}"
                )
            es.add(e)
            seen.add(a)
            seen.add(b)
        self._edges = frozenset(es)
        self._covered = frozenset(seen)

    @property
    def edges(self):
        return self._edges

    @property
    def covered(self):
        return self._covered

    def sorted_edges(self):
        pairs = [tuple(sorted(e, key=vertex_key)) for e in self._edges]
        pairs.sort(key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))
        return pairs

    def union(self, other):
        return Matching(list(self._edges) + list(other.edges))

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(self._edges)

    def __contains__(self, e):
        return frozenset(e) in self._edges

    def __eq__(self, other):
        return isinstance(other, Matching) and self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)


class VertexMap:
    """Injective vertex correspondence used to certify isomorphisms."""

    __slots__ = ("_map",)

    def __init__(self, pairs):
        m = dict(pairs)
        if len(set(m.values())) != len(m):
            raise MapError("map is not injective")
        self._map = m

    def __getitem__(self, v):
        return self._map[v]

    def __contains__(self, v):
        return v in self._map

    def __len__(self):
        return len(self._map)

    @property
    def domain(self):
        return frozenset(self._map)

    @property
    def image(self):
        return frozenset(self._map.values())

    def items(self):
        return self._map.items()

    def inverse(self):
        return VertexMap((b, a) for a, b in self._map.items())

    def extends(self, other):
        """True when this map agrees with `other` on all of other's domain."""
        return all(
            v in self._map and self._map[v] == w for v, w in other.items()
        )

    def __eq__(self, other):
        return isinstance(other, VertexMap) and self._map == other._map


def contract(graph, matching):
    """Contract the matching edges that are present in the graph.

    Each contracted edge becomes one vertex named by the sorted pair of its
    endpoints; parallel edges collapse and loops vanish, so the result is
    simple. Matching edges that are not graph edges are ignored. Returns the
    contracted graph together with the old-to-new vertex mapping (a plain
    dict: the quotient map is not injective).
    """
    mapping = {v: v for v in graph.vertices}
    for e in matching.edges:
        a, b = sorted(e, key=vertex_key)
        if graph.has_edge(a, b):
            mapping[a] = mapping[b] = (a, b)
    new_edges = set()
    for e in graph.edges:
        x, y = e
        fx, fy = mapping[x], mapping[y]
        if fx != fy:
            new_edges.add(frozenset((fx, fy)))
    return Graph(set(mapping.values()), new_edges), mapping


def verify_iso(vmap, g, h):
    """Check that vmap certifies an isomorphism between g and h.

    Raises MapError when the map is not total on g or leaves h; returns False
    when it is not a bijection onto h or fails the edge condition.
    """
    if vmap.domain != g.vertices:
        raise MapError("map is not total on the first graph")
    if not vmap.image <= h.vertices:
        raise MapError("map image leaves the second graph")
    if vmap.image != h.vertices or g.edge_count != h.edge_count:
        return False
    for e in g.edges:
        a, b = e
        if not h.has_edge(vmap[a], vmap[b]):
            return False
    return True


def is_separation(graph, side_a, side_b):
    """Decide whether {A, B} separates the graph; returns (verdict, A ∩ B)."""
    a = frozenset(side_a)
    b = frozenset(side_b)
    if a | b != graph.vertices:
        raise CoverageError("the two sides must cover the vertex set exactly")
    only_a = a - b
    only_b = b - a
    for e in graph.edges:
        x, y = e
        if (x in only_a and y in only_b) or (x in only_b and y in only_a):
            return False, a & b
    return True, a & b


def graph_to_json(graph, extra=None):
    """Shared JSON object: value-sorted vertices, internally sorted edges."""
    data = {
        "vertices": [vertex_str(v) for v in graph.sorted_vertices()],
        "edges": [
            [vertex_str(a), vertex_str(b)] for a, b in graph.sorted_edges()
        ],
    }
    if extra:
        data.update(extra)
    return data


def graph_from_json(data):
    try:
        vertices = [parse_label(s) for s in data["vertices"]]
        edges = [(parse_label(a), parse_label(b)) for a, b in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph object: {exc}") from exc
    return Graph(vertices, edges)


def dumps_canonical(data):
    """Deterministic JSON text for reports and artifacts."""
    return json.dumps(data, sort_keys=True, indent=2)
