#!/usr/bin/env python3
"""Minimum cuts as instance selectors.

A depth-q fractal has exactly 2**q minimum terminal cuts, each with one edge
per boundary; removing the cut for gap i splits the deepest boundary between
vertices i-1 and i.  This is the mechanism the composers use to select one
embedded input instance per cut.
"""

from fractalcut import (bfs_distance, build_fractal, cut_for_instance,
                        enumerate_min_cuts, min_cut, selected_instance)

f = build_fractal(3)
print(f"max-flow min cut value: {min_cut(f.graph, f.sigma, f.tau).total_cost}")

cuts = enumerate_min_cuts(f)
print(f"enumerated {len(cuts)} minimum cuts of sizes "
      f"{sorted({len(c.edges) for c in cuts})}")

for i, cert in enumerate(cuts, start=1):
    dead = frozenset(cert.edges)
    left = [v for v in range(f.graph.n)
            if bfs_distance(f.graph, f.sigma, v, dead) != float("inf")]
    assert selected_instance(f, cert) == i
    print(f"gap {i}: cut {sorted(cert.edges)}, sigma side {left}")

print("\nthe inverse map recovers the gap from the cut:")
cert = cut_for_instance(f, 5)
print(f"cut_for_instance(5) -> edges {cert.edges} -> "
      f"selected_instance = {selected_instance(f, cert)}")
