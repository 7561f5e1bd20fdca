#!/usr/bin/env python3
"""OR-composition: many instances in, one instance out.

The composed instance embeds p = 2**q inputs into the gaps of a cost-carrying
fractal.  Any solution must pay for a minimum selector cut, which isolates
exactly one input; the leftover budget then has to solve that input.  The
composed answer is therefore the OR of the input answers, which we check
against brute force below.
"""

import random

from fractalcut import (compose_dsct, compose_lbec, compose_mded,
                        pad_to_power_of_two, solve_bruteforce,
                        solve_bruteforce_costaware)
from fractalcut.generators import (random_dag_lbec_input, random_lbec_input,
                                   random_uncuttable_lbec_input)

rnd = random.Random(0)

print("== cut-problem composition, four inputs (one padded) ==")
inputs = [random_lbec_input(rnd, n=rnd.randint(3, 5), m=rnd.randint(3, 6),
                            k=1, ell=3) for _ in range(3)]
padded = pad_to_power_of_two(inputs)
truths = [solve_bruteforce(i).answer for i in padded]
art = compose_lbec(padded)
print(f"input answers: {truths} (last one is the padding no-instance)")
print(f"parameters: {art.params}")
verdict = solve_bruteforce_costaware(art.composed)
print(f"composed answer {verdict.answer} == OR {any(truths)}")

print("\n== simple mode: costs realized by subdivision, thresholds doubled ==")
art_simple = compose_lbec(padded, mode="simple")
simple_verdict = solve_bruteforce_costaware(art_simple.composed)
print(f"simple-mode graph is simple: {art_simple.composed.graph.is_simple}, "
      f"threshold {art_simple.params['ell_prime']}, "
      f"answer {simple_verdict.answer}")

print("\n== short-cycle composition over directed acyclic inputs ==")
dags = [random_dag_lbec_input(rnd, n=4, m=5, k=2, ell=3) for _ in range(2)]
art = compose_dsct(dags)
print(f"back arc cost {art.params['back_arc_cost']} tops the budget "
      f"{art.params['k_prime']}, threshold {art.params['ell_prime']}")
print(f"composed answer {solve_bruteforce_costaware(art.composed).answer} == "
      f"OR {any(solve_bruteforce(i).answer for i in dags)}")

print("\n== diameter composition ==")
ins = [random_uncuttable_lbec_input(rnd, n=4, m=5, k=2, ell=3)
       for _ in range(2)]
art = compose_mded(ins)
print(f"appended path length L = {art.params['L']}, "
      f"threshold {art.params['ell_prime']}")
print(f"composed answer {solve_bruteforce_costaware(art.composed).answer} == "
      f"OR {any(solve_bruteforce(i).answer for i in ins)}")
