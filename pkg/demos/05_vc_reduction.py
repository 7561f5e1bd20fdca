#!/usr/bin/env python3
"""Vertex cover on planar cubic graphs, reduced to planar length-bounded cut.

Every spine vertex becomes a three-strand gadget whose two short strands
carry a single deletable middle edge each; input edges become page-routed
connector paths.  Covering a vertex means deleting its two middle edges,
which forces traffic onto the longer spine strand, so a k-cover raises the
end-to-end distance to exactly the target threshold.
"""

from fractalcut import reduce_vc_to_planar_lbec, solve_fpt, solve_vc_bruteforce
from fractalcut.fixtures import VC_FIXTURES

for fx in VC_FIXTURES:
    for k in (2, 3):
        inst = fx.instance(k)
        cover = solve_vc_bruteforce(inst)
        reduced = reduce_vc_to_planar_lbec(inst, fx.embedding())
        lbec = solve_fpt(reduced)
        mark = "==" if cover == lbec.answer else "!="
        print(f"{fx.name:8s} n={fx.n} k={k}: cover {cover!s:5s} {mark} "
              f"cut {lbec.answer!s:5s}  "
              f"(k'={reduced.k}, ell'={reduced.ell}, "
              f"{len(reduced.graph.edges)} edges, {lbec.nodes} leaves)")
        assert cover == lbec.answer
