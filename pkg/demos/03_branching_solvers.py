#!/usr/bin/env python3
"""The three deletion problems and their branching solvers.

Each solver repeatedly finds a too-short structure (a path or a cycle) and
branches over deleting one of its edges, so the search tree stays within
(ell-1)**k or ell**k leaves.  The exhaustive oracle double-checks every
verdict here.
"""

import random

from fractalcut import (Graph, ProblemInstance, check_witness,
                        solve_bruteforce, solve_dsct_fpt, solve_fpt,
                        solve_lbec_fpt, solve_mded_fpt)
from fractalcut.generators import random_solver_instance

print("== length-bounded cut ==")
triangle = Graph(False, 3, [(0, 1), (0, 2), (1, 2)])
inst = ProblemInstance("lbec", triangle, s=0, t=1, k=1, ell=2)
v = solve_lbec_fpt(inst)
print(f"triangle, k=1, ell=2: {v.answer}, witness {v.witness_pairs(triangle)}, "
      f"{v.nodes} leaves")

print("\n== diameter raising ==")
c4 = Graph(False, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
inst = ProblemInstance("mded", c4, k=1, ell=3)
v = solve_mded_fpt(inst)
print(f"4-cycle, k=1, ell=3: {v.answer}, witness {v.witness_pairs(c4)} "
      f"(one deletion turns the square into a diameter-3 path)")

print("\n== short-cycle transversal ==")
c3 = Graph(True, 3, [(0, 1), (1, 2), (2, 0)])
for k, ell in ((0, 2), (0, 3), (1, 3)):
    v = solve_dsct_fpt(ProblemInstance("dsct", c3, k=k, ell=ell))
    print(f"directed 3-cycle, k={k}, ell={ell}: {v.answer}")

print("\n== oracle agreement on random instances ==")
rnd = random.Random(0)
for kind in ("lbec", "mded", "dsct"):
    agree = 0
    for _ in range(50):
        inst = random_solver_instance(rnd, kind)
        fpt = solve_fpt(inst)
        brute = solve_bruteforce(inst)
        assert fpt.answer == brute.answer
        if fpt.answer:
            assert check_witness(inst, fpt.witness)
        agree += 1
    print(f"{kind}: {agree}/50 verdicts match the exhaustive oracle")
