"""Edge-disjoint u-v path systems and the order-compatibility machinery.

Two u-v paths are order-compatible when they traverse their common vertices
in the same order. Two constructive routes produce pairwise compatible
systems of k edge-disjoint paths: a global one (minimum total edge count via
unit-capacity min-cost flow) and a local one (repeatedly uncrossing an
incompatible pair, which strictly lowers the total edge count).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Path, vertex_key, vertex_str
from .errors import (
    InfeasibilityError,
    OrientationError,
    PathSystemError,
    PreconditionError,
    StructureError,
    VertexError,
)


def _check_same_orientation(p, q):
    if p.start != q.start or p.end != q.end:
        raise OrientationError("paths must share oriented endpoints")


def order_compatible(p, q):
    """True when the two u-v paths traverse their common vertices alike."""
    _check_same_orientation(p, q)
    common = set(p.sequence) & set(q.sequence)
    last = -1
    for v in p.sequence:
        if v not in common:
            continue
        i = q.position(v)
        if i < last:
            return False
        last = i
    return True


def first_incompatible_witness(p, q):
    """First (x, y) in label order with x before y on P but y before x on Q."""
    _check_same_orientation(p, q)
    common = sorted(set(p.sequence) & set(q.sequence), key=vertex_key)
    for x in common:
        for y in common:
            if x != y and p.visits_before(x, y) and q.visits_before(y, x):
                return x, y
    return None


class PathSystem:
    """Edge-disjoint u-v paths sharing both oriented endpoints."""

    __slots__ = ("u", "v", "paths")

    def __init__(self, u, v, paths):
        paths = tuple(paths)
        for p in paths:
            if p.start != u or p.end != v:
                raise PathSystemError(
                    f"path not oriented {vertex_str(u)} -> {vertex_str(v)}: {p!r}"
                )
        used = set()
        for p in paths:
            for e in p.edges:
                if e in used:
                    a, b = sorted(e, key=vertex_key)
                    raise PathSystemError(
                        f"edge {vertex_str(a)} -- {vertex_str(b)} used twice"
                    )
                used.add(e)
        self.u = u
        self.v = v
        self.paths = paths

    @property
    def size(self):
        return len(self.paths)

    @property
    def total_edges(self):
        return sum(p.edge_count for p in self.paths)

    def as_json(self):
        return {
            "u": vertex_str(self.u),
            "v": vertex_str(self.v),
            "paths": [[vertex_str(x) for x in p.sequence] for p in self.paths],
        }

    def __eq__(self, other):
        return (
            isinstance(other, PathSystem)
            and self.u == other.u
            and self.v == other.v
            and self.paths == other.paths
        )

    def __repr__(self):
        return f"PathSystem({self.size} paths, {self.total_edges} edges)"


@dataclass(frozen=True)
class SystemReport:
    """Verdicts from validate_system."""

    shared_endpoints: bool
    edge_disjoint: bool
    pairwise_compatible: bool
    duplicate_edge: tuple | None = None
    incompatible_pair: tuple | None = None

    @property
    def ok(self):
        return self.shared_endpoints and self.edge_disjoint and self.pairwise_compatible

    def as_json(self):
        return {
            "sharedEndpoints": self.shared_endpoints,
            "edgeDisjoint": self.edge_disjoint,
            "pairwiseCompatible": self.pairwise_compatible,
            "ok": self.ok,
        }


def validate_system(paths, u=None, v=None):
    """Report endpoint, disjointness and compatibility verdicts for raw paths."""
    if isinstance(paths, PathSystem):
        u, v, paths = paths.u, paths.v, paths.paths
    paths = list(paths)
    if paths and u is None:
        u = paths[0].start
    if paths and v is None:
        v = paths[0].end
    shared = all(p.start == u and p.end == v for p in paths)
    duplicate = None
    used = set()
    for p in paths:
        for e in p.edges:
            if e in used and duplicate is None:
                duplicate = tuple(sorted(e, key=vertex_key))
            used.add(e)
    compatible = shared
    bad = None
    if shared:
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                if not order_compatible(paths[i], paths[j]):
                    compatible = False
                    bad = (i, j)
                    break
            if bad:
                break
    return SystemReport(shared, duplicate is None, compatible, duplicate, bad)


def _require_vertices(graph, u, v):
    for x in (u, v):
        if not graph.has_vertex(x):
            raise VertexError(f"{vertex_str(x)} is not a vertex of the graph")
    if u == v:
        raise PreconditionError("u != v")


class _FlowNet:
    """Unit-capacity directed expansion of an undirected graph.

    Each undirected edge yields four arcs (two forward/residual pairs, one
    per direction); partner arcs sit at index i ^ 1. Arc insertion follows
    the sorted edge order, so every search below is deterministic.
    """

    def __init__(self, graph):
        self.verts = graph.sorted_vertices()
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.n = len(self.verts)
        self.head = [[] for _ in range(self.n)]
        self.tail = []
        self.to = []
        self.cap = []
        for a, b in graph.sorted_edges():
            ia, ib = self.index[a], self.index[b]
            self._arc_pair(ia, ib)
            self._arc_pair(ib, ia)

    def _arc_pair(self, x, y):
        for tail, to, cap in ((x, y, 1), (y, x, 0)):
            self.head[tail].append(len(self.to))
            self.tail.append(tail)
            self.to.append(to)
            self.cap.append(cap)

    def _augment(self, t, parent_arc):
        x = t
        while parent_arc[x] is not None:
            arc = parent_arc[x]
            self.cap[arc] -= 1
            self.cap[arc ^ 1] += 1
            x = self.tail[arc]

    def bfs_augment(self, s, t):
        """Push one unit along a shortest residual path; False if none exists."""
        parent_arc = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for arc in self.head[x]:
                y = self.to[arc]
                if self.cap[arc] > 0 and y not in parent_arc:
                    parent_arc[y] = arc
                    queue.append(y)
        if t not in parent_arc:
            return False
        self._augment(t, parent_arc)
        return True

    def cheapest_augment(self, s, t):
        """Push one unit along a minimum-cost residual path (unit arc costs).

        Residual reverse arcs carry cost -1, so distances come from a
        Bellman-Ford sweep; no negative cycles exist while the flow stays
        cost-minimal for its value.
        """
        big = float("inf")
        dist = [big] * self.n
        dist[s] = 0
        parent_arc = [None] * self.n
        for _ in range(self.n):
            changed = False
            for arc in range(len(self.to)):
                if self.cap[arc] <= 0:
                    continue
                x = self.tail[arc]
                if dist[x] == big:
                    continue
                nd = dist[x] + (1 if arc % 2 == 0 else -1)
                if nd < dist[self.to[arc]]:
                    dist[self.to[arc]] = nd
                    parent_arc[self.to[arc]] = arc
                    changed = True
            if not changed:
                break
        if dist[t] == big:
            return False
        self._augment(t, parent_arc)
        return True

    def net_out_lists(self, rng=None):
        """Directed adjacency of the net flow, one entry per used edge."""
        out = [[] for _ in range(self.n)]
        for m in range(0, len(self.to), 4):
            a, b = self.tail[m], self.to[m]
            net = (1 - self.cap[m]) - (1 - self.cap[m + 2])
            if net > 0:
                out[a].append(b)
            elif net < 0:
                out[b].append(a)
        for lst in out:
            lst.sort(key=lambda i: vertex_key(self.verts[i]))
            if rng is not None:
                rng.shuffle(lst)
        return [deque(lst) for lst in out]

    def decompose(self, s, t, value, rng=None):
        """Split the net flow into `value` simple s-t vertex sequences.

        Walks consume net-flow arcs, always taking the smallest-labelled
        admissible out-neighbour (or a seeded shuffle); any closed loop met
        along the way is excised, which only discards a flow cycle.
        """
        out = self.net_out_lists(rng)
        paths = []
        for _ in range(value):
            walk = [s]
            pos = {s: 0}
            while walk[-1] != t:
                x = walk[-1]
                nxt = out[x].popleft()
                if nxt in pos:
                    k = pos[nxt]
                    for dropped in walk[k + 1 :]:
                        del pos[dropped]
                    del walk[k + 1 :]
                else:
                    pos[nxt] = len(walk)
                    walk.append(nxt)
            paths.append([self.verts[i] for i in walk])
        return paths

    def random_augment(self, s, t, rng):
        """Depth-first residual search with seeded neighbour shuffling."""
        parent_arc = {s: None}
        stack = [s]
        found = False
        while stack and not found:
            x = stack.pop()
            arcs = [
                arc
                for arc in self.head[x]
                if self.cap[arc] > 0 and self.to[arc] not in parent_arc
            ]
            rng.shuffle(arcs)
            for arc in arcs:
                y = self.to[arc]
                if y in parent_arc:
                    continue
                parent_arc[y] = arc
                if y == t:
                    found = True
                    break
                stack.append(y)
        if not found:
            return False
        self._augment(t, parent_arc)
        return True


def max_edge_disjoint(graph, u, v):
    """A maximum system of pairwise edge-disjoint u-v paths.

    Unit-capacity augmentation; the size equals the minimum u-v edge cut.
    """
    _require_vertices(graph, u, v)
    net = _FlowNet(graph)
    s, t = net.index[u], net.index[v]
    value = 0
    while net.bfs_augment(s, t):
        value += 1
    seqs = net.decompose(s, t, value)
    return PathSystem(u, v, [Path(graph, seq) for seq in seqs])


def min_edge_system(graph, u, v, k):
    """k edge-disjoint u-v paths of minimum total edge count.

    Computed as a min-cost flow of value k; such a system is always pairwise
    order-compatible (an incompatible pair could be uncrossed into strictly
    fewer edges), and that is asserted before returning.
    """
    _require_vertices(graph, u, v)
    if k < 0:
        raise InfeasibilityError(f"system size must be >= 0, got {k}")
    net = _FlowNet(graph)
    s, t = net.index[u], net.index[v]
    for done in range(k):
        if not net.cheapest_augment(s, t):
            raise InfeasibilityError(
                f"only {done} edge-disjoint paths exist, {k} requested"
            )
    system = PathSystem(u, v, [Path(graph, seq) for seq in net.decompose(s, t, k)])
    for i in range(len(system.paths)):
        for j in range(i + 1, len(system.paths)):
            if not order_compatible(system.paths[i], system.paths[j]):
                raise StructureError("edge-minimal system is not order-compatible")
    return system


def random_edge_disjoint_system(graph, u, v, k, rng):
    """A seeded random system of k edge-disjoint u-v paths."""
    _require_vertices(graph, u, v)
    net = _FlowNet(graph)
    s, t = net.index[u], net.index[v]
    for done in range(k):
        if not net.random_augment(s, t, rng):
            raise InfeasibilityError(
                f"only {done} edge-disjoint paths exist, {k} requested"
            )
    seqs = net.decompose(s, t, k, rng=rng)
    return PathSystem(u, v, [Path(graph, seq) for seq in seqs])


def _segment_edges(path, a, b):
    """Edges of the subpath from a to b along the path (a must come first)."""
    ia, ib = path.position(a), path.position(b)
    if ia > ib:
        raise StructureError("segment endpoints out of order")
    return set(
        frozenset(pair)
        for pair in zip(path.sequence[ia:ib], path.sequence[ia + 1 : ib + 1])
    )


def _bfs_path(edges, s, t, host):
    """Shortest s-t path inside an edge set, smallest-vertex tie-breaking."""
    adj = {}
    for e in edges:
        a, b = e
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for lst in adj.values():
        lst.sort(key=vertex_key)
    parent = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in adj.get(x, ()):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if t not in parent:
        raise StructureError("witness unions must connect the endpoints")
    seq = [t]
    while parent[seq[-1]] is not None:
        seq.append(parent[seq[-1]])
    return Path(host, seq[::-1])


def uncross(system):
    """Repair order-incompatible pairs until the system is pairwise compatible.

    A witness (x, y) with x before y on P but y before x on Q splits P ∪ Q
    into the two edge-disjoint connected unions uPx ∪ xQv and uQy ∪ yPv; one
    u-v path is taken inside each (BFS, smallest-vertex tie-breaking). The
    pair swap never reuses the edges of xPy or yQx, so the total edge count
    drops strictly and the loop terminates. Size and endpoints never change.
    """
    paths = list(system.paths)
    u, v = system.u, system.v
    while True:
        hit = None
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                w = first_incompatible_witness(paths[i], paths[j])
                if w is not None:
                    hit = (i, j, w)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, (x, y) = hit
        p, q = paths[i], paths[j]
        before = p.edge_count + q.edge_count
        new_p = _bfs_path(
            _segment_edges(p, u, x) | _segment_edges(q, x, v), u, v, p.host
        )
        new_q = _bfs_path(
            _segment_edges(q, u, y) | _segment_edges(p, y, v), u, v, q.host
        )
        if new_p.edge_count + new_q.edge_count >= before:
            raise StructureError("uncrossing step failed to reduce edge count")
        paths[i], paths[j] = new_p, new_q
    return PathSystem(u, v, paths)
