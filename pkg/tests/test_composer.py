"""Composer: equivalence classes, padding, embeddings, parameter arithmetic,
or-semantics, and the regressions that shaped the construction."""

import random

import pytest

from fractalcut import (EquivalenceError, Graph, InputError, ProblemInstance,
                        bfs_distance, check_equivalent, check_witness,
                        compose_dsct, compose_lbec, compose_mded, construct1,
                        construct2, cut_for_instance, is_strongly_connected,
                        pad_to_power_of_two, solve_bruteforce,
                        solve_bruteforce_costaware, trivial_no_instance)
from fractalcut.composer import _is_acyclic
from fractalcut.generators import (random_dag_lbec_input,
                                   random_lbec_input,
                                   random_uncuttable_lbec_input)


def lbec_on(graph, k=2, ell=3, s=0, t=None):
    return ProblemInstance("lbec", graph, s=s, t=graph.n - 1 if t is None else t,
                           k=k, ell=ell)


def petite(k=2, ell=3, directed=False):
    if directed:
        return ProblemInstance("lbec", Graph(True, 3, [(0, 1), (1, 2), (0, 2)]),
                               s=0, t=2, k=k, ell=ell)
    return ProblemInstance("lbec", Graph(False, 3, [(0, 1), (1, 2), (0, 2)]),
                           s=0, t=2, k=k, ell=ell)


# -- equivalence classes --------------------------------------------------------

def test_equivalence_same_parameters():
    cls = check_equivalent([petite(2, 3), petite(2, 3)])
    assert (cls.k, cls.ell, cls.bad) == (2, 3, False)


def test_equivalence_bad_class():
    big = ProblemInstance("lbec", Graph(False, 3, [(0, 1), (1, 2)]), s=0, t=2,
                          k=3, ell=9)  # both parameters exceed |E| = 2
    other = ProblemInstance("lbec", Graph(False, 3, [(0, 1), (1, 2)]), s=0, t=2,
                            k=5, ell=7)
    assert check_equivalent([big, other]).bad


def test_equivalence_mismatch_names_pair():
    with pytest.raises(EquivalenceError, match="0 and 1"):
        check_equivalent([petite(1, 3), petite(2, 3)])


# -- padding ---------------------------------------------------------------------

def test_pad_three_to_four_appends_a_no_instance():
    inputs = [petite(1, 3) for _ in range(3)]
    padded = pad_to_power_of_two(inputs)
    assert len(padded) == 4
    extra = padded[3]
    assert (extra.k, extra.ell) == (1, 3)
    assert not extra.is_bad
    assert not solve_bruteforce(extra).answer


def test_pad_power_of_two_unchanged():
    inputs = [petite(1, 3) for _ in range(4)]
    assert pad_to_power_of_two(inputs) == inputs


def test_pad_gadget_arithmetic():
    gadget = trivial_no_instance(2, 4)
    assert gadget.graph.n == 5          # 2 terminals + 3 midpoints
    assert len(gadget.graph.edges) == 6
    assert not solve_bruteforce(gadget).answer


def test_pad_gadget_stays_out_of_bad_class_for_large_ell():
    gadget = trivial_no_instance(1, 5)
    assert not gadget.is_bad
    assert not solve_bruteforce(gadget).answer


def test_pad_rejects_tiny_threshold():
    with pytest.raises(InputError):
        pad_to_power_of_two([petite(2, 3), petite(2, 2)])
    with pytest.raises(InputError):
        trivial_no_instance(2, 2)


# -- constructions -----------------------------------------------------------------

def test_construct1_merge_arithmetic():
    g, f = construct1([petite(), petite()], cost=4)
    assert g.n == 5  # 3 fractal vertices + one interior per input
    assert f.depth == 1
    # fractal edges first, at unchanged indices, carrying the deletion cost
    for idx in range(len(f.graph.edges)):
        assert g.edges[idx].cost == 4
    assert all(e.cost == 1 for e in g.edges[len(f.graph.edges):])


def test_construct1_degenerate_single_input():
    g, f = construct1([petite()], cost=2)
    assert f.depth == 0
    assert g.n == 3  # the input glued across the single fractal edge


def test_construct1_eight_gaps():
    inputs = [petite() for _ in range(8)]
    g, f = construct1(inputs, cost=4)
    assert f.depth == 3
    assert g.n == (8 + 1) + 8 * 1


def test_construct1_rejects_non_power_of_two():
    with pytest.raises(InputError):
        construct1([petite(), petite(), petite()], cost=2)
    with pytest.raises(InputError):
        construct1([], cost=2)


def test_construct2_three_vertex_inputs():
    g, f = construct2([petite(directed=True), petite(directed=True)], cost=4)
    assert g.n == 5
    assert _is_acyclic(g)


def test_construct2_single_arc_inputs():
    arc = ProblemInstance("lbec", Graph(True, 2, [(0, 1)]), s=0, t=1, k=1, ell=1)
    g, f = construct2([arc, arc], cost=2)
    assert g.n == 3  # no interior vertices to add


def test_construct2_rejects_cyclic_input():
    cyc = ProblemInstance("lbec", Graph(True, 3, [(0, 1), (1, 2), (2, 0)]),
                          s=0, t=2, k=1, ell=1)
    with pytest.raises(InputError, match="cyclic"):
        construct2([cyc, cyc], cost=2)


def test_construct2_gap_spanning():
    ins = [petite(directed=True), petite(directed=True)]
    g, f = construct2(ins, cost=4)
    fcount = len(f.graph.edges)
    # each gap's instance edges connect only vertices of that gap's embedding
    first = [g.edges[i] for i in range(fcount, fcount + 3)]
    assert all({e.u, e.v} <= {0, 1, 3} for e in first)
    second = [g.edges[i] for i in range(fcount + 3, fcount + 6)]
    assert all({e.u, e.v} <= {1, 2, 4} for e in second)


# -- parameter arithmetic -------------------------------------------------------------

def test_lbec_parameters_k2_p4():
    inputs = [petite(2, 3) for _ in range(4)]
    art = compose_lbec(inputs)
    assert art.params["c"] == 4
    assert art.params["k_prime"] == 14   # 4 * (2 + 1) + 2
    assert art.params["ell_prime"] == 5  # 3 + log2(4)
    assert art.composed.s == 0 and art.composed.t == 4


def test_lbec_parameters_degenerate_budget():
    # k = 1 takes edge cost k + 1 = 2 rather than k**2 = 1: a unit-cost
    # selector lets the leftover budget delete extra fractal edges and chain
    # neighboring inputs, faking a yes out of two no inputs.
    art = compose_lbec([petite(1, 3), petite(1, 3)])
    assert art.params["c"] == 2
    assert art.params["k_prime"] == 5
    assert art.params["ell_prime"] == 4


def test_lbec_simple_mode_doubles_threshold():
    art = compose_lbec([petite(2, 3), petite(2, 3)], mode="simple")
    assert art.params["ell_prime"] == 8  # 2 * (3 + 1)
    assert art.composed.graph.is_simple


def test_selector_is_identity_bijection():
    art = compose_lbec([petite(2, 3) for _ in range(4)])
    assert art.selector == {1: 1, 2: 2, 3: 3, 4: 4}


def test_mded_parameters_from_stated_example():
    rnd = random.Random(3)
    ins = [random_uncuttable_lbec_input(rnd, n=4, m=5, k=1, ell=3)
           for _ in range(2)]
    art = compose_mded(ins)
    assert art.params["L"] == 21        # 4 * (2*1 + 3) + 1
    assert art.params["ell_prime"] == 46  # 2*21 + 1 + 3


def test_mded_directed_parameters_from_stated_example():
    rnd = random.Random(3)
    ins = [random_dag_lbec_input(rnd, n=4, m=5, k=1, ell=3) for _ in range(2)]
    art = compose_mded(ins, directed=True)
    assert art.params["L"] == 61        # 3 * 4 * (2*1 + 3) + 1
    assert art.params["ell_prime"] == 126
    assert is_strongly_connected(art.composed.graph)


def test_dsct_back_arc_and_acyclic_remainder():
    ins = [petite(2, 3, directed=True), petite(2, 3, directed=True)]
    art = compose_dsct(ins)
    g = art.composed.graph
    back = len(g.edges) - 1
    assert g.edges[back].cost == art.params["k_prime"] + 1
    assert (g.edges[back].u, g.edges[back].v) == (2, 0)
    assert not _is_acyclic(g)
    assert _is_acyclic(g.delete_edges([back]))
    assert art.params["ell_prime"] == 4  # ell + log p under the at-most reading


def test_parameters_polynomial_in_input_size_plus_logp():
    rnd = random.Random(8)
    for p in (2, 4, 8):
        ins = [random_lbec_input(rnd, n=5, m=6, k=2, ell=3) for _ in range(p)]
        art = compose_lbec(ins)
        bound = (5 + 6 + p.bit_length()) ** 3
        assert art.params["k_prime"] <= bound
        assert art.params["ell_prime"] <= bound


# -- composed semantics -----------------------------------------------------------------

def test_distance_accounting_in_composed_graph():
    rnd = random.Random(21)
    for p in (2, 4, 8):
        ins = [random_lbec_input(rnd, n=4, m=5, k=2, ell=3) for _ in range(p)]
        art = compose_lbec(ins)
        g = art.composed.graph
        q = art.params["q"]
        for i in range(1, p + 1):
            dead = frozenset(cut_for_instance(art.fractal, i).edges)
            s_i, t_i = i - 1, i
            assert (bfs_distance(g, 0, s_i, dead)
                    + bfs_distance(g, t_i, p, dead)) == q


def test_or_semantics_spot_checks():
    rnd = random.Random(1234)
    for _ in range(10):
        ins = [random_lbec_input(rnd, n=4, m=5, k=2, ell=3) for _ in range(2)]
        expected = any(solve_bruteforce(i).answer for i in ins)
        for mode in ("weighted", "simple"):
            art = compose_lbec(ins, mode=mode)
            got = solve_bruteforce_costaware(art.composed)
            assert got.answer == expected
            if got.answer:
                assert check_witness(art.composed, got.witness)


def test_chaining_regression_all_problems():
    # With a unit selector cost this graph pair composed to a yes although
    # both inputs are no: deleting all depth-1 fractal edges chains the two
    # inputs into one long path.  The raised degenerate-case edge cost keeps
    # it a no.
    g = Graph(True, 4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
    inst = ProblemInstance("lbec", g, s=0, t=3, k=1, ell=3)
    assert not solve_bruteforce(inst).answer
    for art in (compose_lbec([inst, inst]),
                compose_dsct([inst, inst]),
                compose_mded([inst, inst], directed=True)):
        assert not solve_bruteforce_costaware(art.composed).answer


def test_costaware_symmetry_matches_raw_on_subdivided_instances():
    # Subdivided composed graphs are the corridor-heavy case for the
    # cost-aware oracle's quotients; the raw enumeration is the ground truth.
    rnd = random.Random(2024)
    checked = 0
    for trial in range(8):
        ell = rnd.choice((3, 4))
        n = 3 if ell == 3 else 4
        if trial % 2 == 0:
            ins = [random_lbec_input(rnd, n=n, m=max(ell, 3), k=1, ell=ell)
                   for _ in range(2)]
            art = compose_lbec(ins, mode="simple")
        else:
            ins = [random_dag_lbec_input(rnd, n=n, m=max(ell, 3), k=1, ell=ell)
                   for _ in range(2)]
            art = compose_dsct(ins, mode="simple")
        fast = solve_bruteforce_costaware(art.composed, symmetry=True)
        raw = solve_bruteforce_costaware(art.composed, symmetry=False)
        assert fast.answer == raw.answer, trial
        checked += 1
    assert checked == 8


def test_mded_rejects_cuttable_inputs():
    tri = ProblemInstance("lbec", Graph(False, 3, [(0, 1), (1, 2), (0, 2)]),
                          s=0, t=2, k=2, ell=3)  # terminal cut of size 2 <= k
    with pytest.raises(InputError, match="min-cut"):
        compose_mded([tri, tri])


def test_mded_rejects_disconnected_inputs():
    g = Graph(False, 4, [(0, 3), (0, 3)])
    with pytest.raises(InputError):
        Graph(False, 4, [(0, 3), (0, 3)]) and compose_mded(
            [lbec_on(g, 1, 3), lbec_on(g, 1, 3)])


def test_compose_rejects_bad_class_and_low_threshold():
    bad = ProblemInstance("lbec", Graph(False, 3, [(0, 1), (1, 2)]), s=0, t=2,
                          k=7, ell=9)
    with pytest.raises(InputError):
        compose_lbec([bad, bad])
    with pytest.raises(InputError):
        compose_lbec([petite(2, 2), petite(2, 2)])


def test_mded_directed_augmentation_preserves_answers():
    rnd = random.Random(5)
    for _ in range(10):
        inst = random_dag_lbec_input(rnd, n=4, m=5, k=1, ell=3)
        from fractalcut.composer import _augment_directed_input
        aug = _augment_directed_input(inst)
        assert _is_acyclic(aug.graph)
        assert solve_bruteforce(inst).answer == solve_bruteforce(aug).answer


def test_diameter_realized_at_appended_tips():
    # The reduction from the diameter question to the sigma-tau distance
    # rests on this identity; the directed case needs the extra wrap arcs
    # for it (without them, pairs wrapping through the one-way chains exceed
    # it already with zero deletions).
    from fractalcut.solvers import _alive_adj, _bfs_all, _connected_after
    rnd = random.Random(424)
    for directed in (False, True):
        if directed:
            ins = [random_dag_lbec_input(rnd, n=4, m=5, k=1, ell=3)
                   for _ in range(2)]
            art = compose_mded(ins, directed=True)
        else:
            ins = [random_uncuttable_lbec_input(rnd, n=4, m=5, k=2, ell=3)
                   for _ in range(2)]
            art = compose_mded(ins)
        g = art.composed.graph
        L, q = art.params["L"], art.params["q"]
        tau = 1 << q
        deletable = [i for i, e in enumerate(g.edges)
                     if e.cost <= art.params["k_prime"]]
        samples = [()] + [tuple(rnd.sample(deletable, rnd.randint(1, 3)))
                          for _ in range(12)]
        for dead in samples:
            if g.total_cost(dead) > art.params["k_prime"]:
                continue
            if not _connected_after(g, frozenset(dead)):
                continue
            adj = _alive_adj(g, frozenset(dead))
            diam = max(max(_bfs_all(adj, v, g.n)) for v in range(g.n))
            want = 2 * L + bfs_distance(g, 0, tau, frozenset(dead))
            assert diam == want, (directed, dead)


def test_mded_undirected_or_spot():
    rnd = random.Random(77)
    for _ in range(5):
        ins = [random_uncuttable_lbec_input(rnd, n=4, m=5, k=2, ell=3)
               for _ in range(2)]
        expected = any(solve_bruteforce(i).answer for i in ins)
        art = compose_mded(ins)
        assert solve_bruteforce_costaware(art.composed).answer == expected


def test_simple_mode_mded_uses_parallel_copies():
    rnd = random.Random(9)
    ins = [random_uncuttable_lbec_input(rnd, n=4, m=5, k=2, ell=3)
           for _ in range(2)]
    art = compose_mded(ins, mode="simple")
    g = art.composed.graph
    assert g.is_unit
    assert art.params["ell_prime"] == compose_mded(ins).params["ell_prime"]
    # each fractal edge is realized as c parallel unit copies
    for idx in range(len(art.fractal.graph.edges)):
        replacements = art.expanded_edges[idx]
        assert len(replacements) == art.params["c"]
        pairs = {(g.edges[i].u, g.edges[i].v) for i in replacements}
        assert len(pairs) == 1
