#!/usr/bin/env python3
"""Walk through the level structure of the whirl graph.

Builds the first few truncations, shows the per-level zigzag pattern and the
Hamilton path it forms, and demonstrates that every interior grid point of
the previous level cuts a window graph into its two interval sides.
"""

import whirlgraph as wg

t = wg.triadic_make

print("=" * 72)
print("LEVEL EDGES")
print("=" * 72)
for n in (1, 2):
    edges = sorted(
        (tuple(sorted(e, key=wg.vertex_key)) for e in wg.level_edges(n)),
        key=lambda p: (wg.vertex_key(p[0]), wg.vertex_key(p[1])),
    )
    print(f"level {n}: {len(edges)} edges")
    for a, b in edges[:6]:
        print(f"  {a} -- {b}")
    if len(edges) > 6:
        print(f"  ... and {len(edges) - 6} more")

print()
print("Each level n contributes 3^n edges in blocks of three; the blocks chain")
print("into a single 0-1 Hamilton path of (V_n, E_n):")
for n in (1, 2):
    print(f"  n={n}: " + " ".join(str(v) for v in wg.hamilton_path(n)))

print()
print("=" * 72)
print("TRUNCATIONS")
print("=" * 72)
for n in range(1, 6):
    g = wg.graph_upto(n)
    print(
        f"levels 1..{n}: {g.vertex_count:5d} vertices, {g.edge_count:6d} edges,"
        f" Euler slack {3 * g.vertex_count - 6 - g.edge_count}"
    )

print()
print("The Hamilton path of level n visits the previous grid in ascending")
print("order -- its restriction to V_(n-1) is sorted:")
path = wg.hamilton_path(3)
coarse = set(wg.level_vertices(2))
trace = [str(v) for v in path if v in coarse]
print("  restriction to V_2:", " ".join(trace[:8]), "...")

print()
print("=" * 72)
print("CUTVERTICES")
print("=" * 72)
left, right = wg.cutvertex_split(t(1, 1), wg.LevelWindow(2, 3))
print("deleting 1/3 from the [2,3] window leaves two components:")
print(f"  below: {len(left)} vertices, all < 1/3")
print(f"  above: {len(right)} vertices, all > 1/3")

print()
print("DOT export for plotting (vertices at (value, -level)):")
print("\n".join(wg.whirl_dot(wg.graph_upto(1)).splitlines()[:6]))
print("  ...")
