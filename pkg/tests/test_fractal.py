"""Fractal construction, boundaries, dual tree, and cut enumeration."""

import itertools

import pytest

from fractalcut import (InputError, build_fractal, cut_for_instance,
                        dual_tree, enumerate_min_cuts, is_edge_cut,
                        is_minimal_edge_cut, selected_instance)
from fractalcut.graph import bfs_distance


def test_depth_zero():
    f = build_fractal(0)
    assert f.graph.n == 2 and len(f.graph.edges) == 1
    assert f.sigma == 0 and f.tau == 1
    assert f.boundaries == ((0,),)


def test_depth_three_counts():
    f = build_fractal(3)
    assert f.graph.n == 9
    assert len(f.graph.edges) == 15
    assert [len(b) for b in f.boundaries] == [1, 2, 4, 8]


def test_depth_four_max_degree():
    f = build_fractal(4)
    assert max(f.graph.degree(v) for v in range(f.graph.n)) == 8


def test_invalid_parameters():
    with pytest.raises(InputError):
        build_fractal(-1)
    with pytest.raises(InputError):
        build_fractal(2, cost=0)


def test_boundaries_partition_edges_and_form_terminal_paths():
    for q in range(0, 7):
        f = build_fractal(q)
        seen = [i for b in f.boundaries for i in b]
        assert sorted(seen) == list(range(len(f.graph.edges)))
        for boundary in f.boundaries:
            at = f.sigma
            for idx in boundary:
                e = f.graph.edges[idx]
                assert at in (e.u, e.v)
                at = e.v if e.u == at else e.u
            assert at == f.tau


def test_directed_terminal_degrees():
    for q in range(0, 7):
        f = build_fractal(q, directed=True)
        g = f.graph
        assert g.in_degree(f.sigma) == 0
        assert len(g.out_neighbors(f.sigma)) == q + 1
        assert len(g.out_neighbors(f.tau)) == 0
        assert g.in_degree(f.tau) == q + 1
        # position labeling is a topological order
        assert all(e.u < e.v for e in g.edges)


# -- dual tree -----------------------------------------------------------------

def test_dual_tree_depth_zero():
    f = build_fractal(0)
    d = dual_tree(f)
    assert len(d.leaf_order) == 1
    leaf = d.leaf_order[0]
    assert d.edge_map[(0, leaf)] == 0  # the single tree edge maps to {sigma, tau}


def test_dual_tree_leaf_counts_and_gaps():
    for q in range(0, 7):
        d = dual_tree(build_fractal(q))
        assert len(d.leaf_order) == 1 << q
        assert sorted(d.leaf_gap.values()) == list(range(1, (1 << q) + 1))


def test_dual_tree_edge_map_bijection():
    for q in range(0, 6):
        f = build_fractal(q)
        d = dual_tree(f)
        mapped = sorted(d.edge_map.values())
        assert mapped == list(range(len(f.graph.edges)))


def test_root_leaf_paths_have_one_edge_per_boundary():
    f = build_fractal(2)
    d = dual_tree(f)
    for leaf in d.leaf_order:
        path = d.root_leaf_edges(leaf)
        assert len(path) == 3
        for boundary, idx in zip(f.boundaries, path):
            assert idx in boundary


def test_internal_nodes_have_two_children():
    for q in range(0, 6):
        d = dual_tree(build_fractal(q))
        leaves = set(d.leaf_order)
        for node in range(1, d.node_count):
            if node not in leaves:
                assert len(d.children[node]) == 2
        assert len(d.children[0]) == 1  # root hangs off the depth-0 edge


# -- minimum cut enumeration -----------------------------------------------------

def closed_form_cut(f, i):
    """Independent oracle: boundary level l contributes its ceil(i / 2**(q-l))-th
    edge, counting from one; derived from the interval nesting of the
    position labeling rather than from the dual tree."""
    q = f.depth
    edges = []
    for level in range(q + 1):
        j = -(-i // (1 << (q - level)))  # ceil division
        edges.append((1 << level) - 1 + (j - 1))
    return tuple(sorted(edges))


def test_cut_for_instance_matches_closed_form():
    for q in range(0, 7):
        f = build_fractal(q)
        for i in range(1, (1 << q) + 1):
            assert cut_for_instance(f, i).edges == closed_form_cut(f, i)


def test_depth_one_first_cut():
    f = build_fractal(1)
    cert = cut_for_instance(f, 1)
    pairs = set(cert.pairs(f.graph))
    # apex u has id 1 under the position labeling; sigma = 0, tau = 2
    assert pairs == {(0, 2), (0, 1)}


def test_enumeration_counts_and_structure():
    for q in range(0, 7):
        f = build_fractal(q)
        cuts = enumerate_min_cuts(f)
        assert len(cuts) == 1 << q
        assert len({c.edges for c in cuts}) == len(cuts)
        for cert in cuts:
            assert len(cert.edges) == q + 1
            assert cert.total_cost == q + 1
            for boundary in f.boundaries:
                assert len(set(cert.edges) & set(boundary)) == 1


def test_enumeration_equals_exhaustive_minimal_cuts():
    # The minimum cut has q+1 edges, so every disconnecting (q+1)-subset is
    # a minimum (hence minimal) cut; enumerate them all.
    for q in range(0, 5):
        f = build_fractal(q)
        m = len(f.graph.edges)
        found = {c for c in itertools.combinations(range(m), q + 1)
                 if is_edge_cut(f.graph, f.sigma, f.tau, c)}
        assert found == {c.edges for c in enumerate_min_cuts(f)}


def test_cuts_are_minimal_disconnecting_sets():
    for q in range(0, 6):
        f = build_fractal(q)
        for cert in enumerate_min_cuts(f):
            assert is_minimal_edge_cut(f.graph, f.sigma, f.tau, cert.edges)


def test_selected_instance_inverts_cut_for_instance():
    for q in range(0, 7):
        f = build_fractal(q)
        for i in range(1, (1 << q) + 1):
            assert selected_instance(f, cut_for_instance(f, i)) == i


def test_cut_component_orientation():
    # gap i leaves deepest-boundary vertex i-1 on sigma's side and i on tau's
    for q in range(1, 6):
        f = build_fractal(q)
        for i in range(1, (1 << q) + 1):
            dead = frozenset(cut_for_instance(f, i).edges)
            assert bfs_distance(f.graph, f.sigma, i - 1, dead) != float("inf")
            assert bfs_distance(f.graph, i, f.tau, dead) != float("inf")
            assert bfs_distance(f.graph, f.sigma, i, dead) == float("inf")


def test_index_out_of_range():
    f = build_fractal(2)
    with pytest.raises(InputError):
        cut_for_instance(f, 0)
    with pytest.raises(InputError):
        cut_for_instance(f, 5)


def test_distance_split_at_cuts():
    for q in range(0, 6):
        for directed in (False, True):
            f = build_fractal(q, directed=directed)
            deepest = set(f.boundaries[-1])
            for cert in enumerate_min_cuts(f):
                dead = frozenset(cert.edges)
                (bq,) = [e for e in cert.edges if e in deepest]
                x, y = f.graph.edges[bq].u, f.graph.edges[bq].v
                assert (bfs_distance(f.graph, f.sigma, x, dead)
                        + bfs_distance(f.graph, y, f.tau, dead)) == q
