"""Level-windowed truncations of the whirl graph and their structural checks.

Every edge of the whirl graph lives at exactly one level n >= 1; the three
edges of block k at level n join the four consecutive level-n grid points
3k, 3k+1, 3k+2, 3k+3 (over denominator 3**n) in the zigzag pattern
3k -- 3k+2 -- 3k+1 -- 3k+3. A window [low, high] stands in for the infinite
union of all levels >= low: any finite path in that union fits into some
window, so every check here is finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ONE, ZERO, Graph, Path, TriadicRational, vertex_key, vertex_str
from .errors import (
    DomainError,
    NotAnEdgeError,
    PreconditionError,
    RangeError,
    StructureError,
)


@dataclass(frozen=True)
class LevelWindow:
    """Inclusive level range [low, high]."""

    low: int
    high: int

    def __post_init__(self):
        if not 1 <= self.low <= self.high:
            raise RangeError(f"bad window [{self.low}, {self.high}]")


def level_vertices(n):
    """V_n: all i/3**n for i = 0..3**n, canonical and ascending."""
    if n < 0:
        raise RangeError(f"level must be >= 0, got {n}")
    return tuple(TriadicRational(i, n) for i in range(3**n + 1))


def level_edges(n):
    """The 3**n level-n edges, three per block."""
    if n < 1:
        raise RangeError(f"level must be >= 1, got {n}")
    edges = []
    for k in range(3 ** (n - 1)):
        base = 3 * k
        a = TriadicRational(base, n)
        b = TriadicRational(base + 1, n)
        c = TriadicRational(base + 2, n)
        d = TriadicRational(base + 3, n)
        edges.append(frozenset((a, c)))
        edges.append(frozenset((b, c)))
        edges.append(frozenset((b, d)))
    return frozenset(edges)


def whirl_graph(window):
    """Graph on V_high whose edge set is the union of the window's levels."""
    edges = []
    for n in range(window.low, window.high + 1):
        edges.extend(level_edges(n))
    return Graph(level_vertices(window.high), edges)


def graph_upto(n):
    """The truncation carrying every level from 1 to n."""
    return whirl_graph(LevelWindow(1, n))


def level_graph(n):
    """The single-level graph (V_n, E_n)."""
    return Graph(level_vertices(n), level_edges(n))


def hamilton_path(n):
    """The unique 0-1 Hamilton path of (V_n, E_n), oriented from 0 to 1."""
    if n < 1:
        raise RangeError(f"level must be >= 1, got {n}")
    seq = [TriadicRational(0, n)]
    for k in range(3 ** (n - 1)):
        base = 3 * k
        seq.append(TriadicRational(base + 2, n))
        seq.append(TriadicRational(base + 1, n))
        seq.append(TriadicRational(base + 3, n))
    return Path(level_graph(n), seq)


def edge_level(edge):
    """The unique level whose zigzag template contains the given edge."""
    a, b = sorted(edge, key=vertex_key)
    for v in (a, b):
        if not isinstance(v, TriadicRational):
            raise NotAnEdgeError(f"{vertex_str(v)} is not a triadic label")
    n = max(a.exponent, b.exponent)
    if n >= 1:
        i = a.p * 3 ** (n - a.exponent)
        j = b.p * 3 ** (n - b.exponent)
        diff = j - i
        if (i % 3 == 0 and diff == 2) or (i % 3 == 1 and diff in (1, 2)):
            return n
    raise NotAnEdgeError(
        f"{vertex_str(a)} -- {vertex_str(b)} matches no level template"
    )


@dataclass(frozen=True)
class IntervalTraversalReport:
    """Per-clause verdicts for the containment/ordering facts of a window path.

    For a u-v path P whose edges all sit at level >= n (with u < v both on
    the level-(n-1) grid), the three clauses assert: every grid point of
    V_{n-1} inside [u, v] lies on P; every vertex of P lies inside [u, v];
    and P meets those grid points in increasing rational order.
    """

    grid_contained: bool
    inside_interval: bool
    ascending: bool
    missing: tuple = ()
    outside: tuple = ()
    inversion: tuple | None = None

    @property
    def ok(self):
        return self.grid_contained and self.inside_interval and self.ascending

    def as_json(self):
        return {
            "gridContained": self.grid_contained,
            "insideInterval": self.inside_interval,
            "ascending": self.ascending,
            "ok": self.ok,
        }


def check_interval_traversal(path, u, v, n):
    """Check the three interval clauses for a path living above level n - 1."""
    if n <= 1:
        raise PreconditionError("n > 1")
    if not u < v:
        raise PreconditionError("u < v")
    if u.exponent > n - 1 or v.exponent > n - 1:
        raise PreconditionError("u, v in V_{n-1}")
    if path.start != u or path.end != v:
        raise PreconditionError("P is a u-v path")
    for e in path.edges:
        if edge_level(e) < n:
            raise PreconditionError("edges of P have level >= n")
    grid = [x for x in level_vertices(n - 1) if u <= x <= v]
    grid_set = set(grid)
    on_path = set(path.sequence)
    missing = tuple(x for x in grid if x not in on_path)
    outside = tuple(x for x in path.sequence if not u <= x <= v)
    walk = [x for x in path.sequence if x in grid_set]
    inversion = None
    for a, b in zip(walk, walk[1:]):
        if not a < b:
            inversion = (a, b)
            break
    return IntervalTraversalReport(
        grid_contained=not missing,
        inside_interval=not outside,
        ascending=inversion is None,
        missing=missing,
        outside=outside,
        inversion=inversion,
    )


def cutvertex_split(x, window):
    """Delete a grid point from a window graph and return the two sides.

    Every x on the level-(window.low - 1) grid other than 0 and 1 cuts the
    window graph into the vertices below x and the vertices above x; the
    split is recomputed by component search and cross-checked.
    """
    n = window.low
    if n <= 1:
        raise PreconditionError("window.low > 1")
    if (
        not isinstance(x, TriadicRational)
        or x.exponent > n - 1
        or x in (ZERO, ONE)
    ):
        raise DomainError(f"{vertex_str(x)} is not an interior V_{{{n - 1}}} point")
    g = whirl_graph(window)
    comps = g.without_vertex(x).components()
    left = frozenset(v for v in g.vertices if v < x)
    right = frozenset(v for v in g.vertices if v > x)
    if len(comps) != 2 or set(comps) != {left, right}:
        raise StructureError("deletion did not split into the two expected sides")
    return left, right


def whirl_dot(graph):
    """DOT text with vertices positioned at (value, -level) for plotting."""
    lines = ["graph whirl {", "  node [shape=point];"]
    for v in graph.sorted_vertices():
        x = v.p / (3**v.exponent)
        lines.append(f'  "{v}" [pos="{x:.6f},{-v.exponent}!"];')
    for a, b in graph.sorted_edges():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
