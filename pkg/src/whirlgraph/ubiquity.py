"""Why no path admits order-compatible partners above its own top level.

Any u-v path P through levels >= N (endpoints on the level-(N-1) grid) must
traverse the full four-vertex zigzag of some block at its top level M. Every
u-v path Q living strictly above level M meets the level-M grid points of
[u, v] in ascending order, so the zigzag forces a common vertex pair that P
and Q traverse oppositely. An exhaustive bounded search plays the
independent oracle for the same statement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Path, TriadicRational, vertex_str
from .errors import (
    BudgetExceededError,
    GraphError,
    PreconditionError,
    StructureError,
    VertexError,
)
from .pathsys import order_compatible
from .whirl import edge_level, whirl_graph


def minimal_containment_level(path):
    """Largest edge level on the path: the least M with the path below level M."""
    if path.edge_count == 0:
        raise GraphError("path has no edges")
    return max(edge_level(e) for e in path.edges)


def _block_of(edge, level):
    i = min(v.p * 3 ** (level - v.exponent) for v in edge)
    return i // 3


@dataclass(frozen=True)
class ZigzagWitness:
    """A top-level block zigzag contained contiguously in a path.

    x and y are the consecutive level-(M-1) grid points bounding block k;
    the subpath is the canonical zigzag x, (3k+2)/3^M, (3k+1)/3^M, y, and
    the orientation records how it sits inside the carrying path.
    """

    level: int
    block: int
    x: TriadicRational
    y: TriadicRational
    subpath: Path
    orientation: str

    def as_json(self):
        return {
            "level": self.level,
            "block": self.block,
            "x": vertex_str(self.x),
            "y": vertex_str(self.y),
            "subpath": [vertex_str(v) for v in self.subpath.sequence],
            "orientation": self.orientation,
        }


def zigzag_window(path):
    """First top-level block zigzag contained contiguously in the path.

    Scans the path's edges in traversal order and returns the witness of the
    first top-level edge whose full block zigzag sits inside the path,
    forward or reversed; None when no block qualifies (possible only when
    the endpoint/level preconditions of the refutation argument fail).
    """
    m = minimal_containment_level(path)
    for e in path.edges:
        if edge_level(e) != m:
            continue
        k = _block_of(e, m)
        z = tuple(TriadicRational(3 * k + d, m) for d in (0, 2, 1, 3))
        if not all(v in path for v in z):
            continue
        idx = [path.position(v) for v in z]
        if idx == list(range(idx[0], idx[0] + 4)):
            orientation = "forward"
        elif idx == list(range(idx[0], idx[0] - 4, -1)):
            orientation = "reversed"
        else:
            continue
        return ZigzagWitness(
            level=m,
            block=k,
            x=z[0],
            y=z[3],
            subpath=Path(path.host, z),
            orientation=orientation,
        )
    return None


@dataclass(frozen=True)
class Refutation:
    """A common vertex pair traversed in opposite orders by two paths."""

    pair: tuple
    order_in_p: str
    order_in_q: str
    witness: ZigzagWitness

    def as_json(self):
        return {
            "pair": [vertex_str(self.pair[0]), vertex_str(self.pair[1])],
            "orderInP": self.order_in_p,
            "orderInQ": self.order_in_q,
        }


def refute_compatibility(p, q):
    """Exhibit a concrete order conflict between P and any higher-level Q.

    Preconditions (each violation raises, naming the clause): P and Q run
    from u to v with u < v; P's top level M reaches at least the least
    integer N > 1 with u, v on the level-(N-1) grid; every vertex of P lies
    inside [u, v]; every edge of Q lies strictly above level M. Under these
    the conflict pair is read off P's zigzag witness, validated against both
    paths, and returned; there is no pass outcome.
    """
    if p.start != q.start or p.end != q.end:
        raise PreconditionError("P and Q share oriented endpoints")
    u, v = p.start, p.end
    if not u < v:
        raise PreconditionError("u < v")
    base = max(2, max(u.exponent, v.exponent) + 1)
    m = minimal_containment_level(p)
    if m < base:
        raise PreconditionError("M >= N")
    for x in p.sequence:
        if not u <= x <= v:
            raise PreconditionError("V(P) inside [u, v]")
    for e in q.edges:
        if edge_level(e) <= m:
            raise PreconditionError("Q lies in levels >= M+1")
    witness = zigzag_window(p)
    if witness is None:
        raise StructureError("zigzag subpath missing despite preconditions")
    lowmid = TriadicRational(3 * witness.block + 1, witness.level)
    highmid = TriadicRational(3 * witness.block + 2, witness.level)
    if witness.orientation == "forward":
        a, b = lowmid, highmid
    else:
        a, b = witness.x, witness.y
    for z in (a, b):
        if z not in q:
            raise StructureError("grid vertex missing from the later-level path")
    if not (p.visits_before(b, a) and q.visits_before(a, b)):
        raise StructureError("constructed refutation pair is not inverted")
    return Refutation(
        pair=(a, b),
        order_in_p=f"{vertex_str(b)} before {vertex_str(a)}",
        order_in_q=f"{vertex_str(a)} before {vertex_str(b)}",
        witness=witness,
    )


def all_paths(graph, u, v, max_edges=None, budget=10**6):
    """Yield every simple u-v path by depth-first search, budget-guarded.

    Neighbours are explored in ascending label order. The budget counts
    vertex expansions (each candidate step onto a vertex not currently on
    the partial path); exceeding it raises rather than truncating silently.
    """
    for x in (u, v):
        if not graph.has_vertex(x):
            raise VertexError(f"{vertex_str(x)} is not a vertex of the graph")
    spent = 0
    seq = [u]
    on_path = {u}
    stack = [iter(graph.neighbors(u))]
    while stack:
        advanced = False
        for y in stack[-1]:
            if y in on_path:
                continue
            spent += 1
            if spent > budget:
                raise BudgetExceededError(f"expansion budget {budget} exhausted")
            if y == v:
                if max_edges is None or len(seq) <= max_edges:
                    yield Path(graph, seq + [y])
                continue
            if max_edges is not None and len(seq) >= max_edges:
                continue
            seq.append(y)
            on_path.add(y)
            stack.append(iter(graph.neighbors(y)))
            advanced = True
            break
        if not advanced:
            stack.pop()
            on_path.discard(seq.pop())


def exists_compatible_bruteforce(path, window, budget=10**6):
    """Exhaustively search the window for a path order-compatible with `path`.

    True as soon as one compatible u-v path exists in the window graph,
    False after complete enumeration; a drained budget raises and is thereby
    kept distinct from a genuine False.
    """
    g = whirl_graph(window)
    for q in all_paths(g, path.start, path.end, budget=budget):
        if order_compatible(path, q):
            return True
    return False
