"""OR-composition of many cut instances into one, with a fractal selector.

Given p = 2**q input instances sharing one parameter class, the composers
embed them into the gaps of a depth-q fractal whose edges carry a deletion
cost c exceeding the class budget k: input i's terminals are merged onto
deepest-boundary vertices i-1 and i.  Every minimum sigma-tau cut of the
fractal then "selects" exactly one input; the composed budget
k' = c (log p + 1) + k pays for exactly one such cut (c > k keeps the
leftover from buying further selector edges) plus a solution of the selected
input.  The composed instance is yes precisely when at least one input is
yes, which the test suite checks against brute force at desk scale.

Two output modes exist.  Weighted mode keeps cost-annotated edges and counts
the composed budget in deletion cost.  Simple mode rebuilds the instance
over a unit-cost graph: for the cut and cycle-transversal targets the whole
graph is expanded and subdivided (a cost-c edge becomes c parallel two-hop
paths, a unit edge one such path), which doubles every distance and
threshold; the diameter target instead lays down c parallel unit copies,
because a severed two-hop path would strand its midpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import EquivalenceError, InputError
from .fractal import TFractal, build_fractal
from .graph import (Graph, UNREACHABLE, bfs_distance, is_connected,
                    is_strongly_connected, min_cut)
from .solvers import ProblemInstance


@dataclass(frozen=True)
class EquivalenceClass:
    """Shared parameter class: equal (k, ell), or the single class of bad
    instances (parameters exceeding the edge count or negative)."""

    k: int
    ell: int
    bad: bool


def check_equivalent(instances: Sequence[ProblemInstance]) -> EquivalenceClass:
    """The common class of the given instances, or an error naming the first
    offending pair.

    Two instances are equivalent iff they agree on (k, ell) or are both bad.
    """
    if not instances:
        raise InputError("need at least one instance")
    kind = instances[0].kind
    for i, inst in enumerate(instances):
        if inst.kind != kind:
            raise EquivalenceError(
                f"instances 0 and {i} have different kinds ({kind} vs {inst.kind})")
    if all(inst.is_bad for inst in instances):
        return EquivalenceClass(instances[0].k, instances[0].ell, True)
    first = instances[0]
    for i, inst in enumerate(instances[1:], start=1):
        if (inst.k, inst.ell) != (first.k, first.ell):
            raise EquivalenceError(
                f"instances 0 and {i} are inequivalent: "
                f"(k={first.k}, ell={first.ell}) vs (k={inst.k}, ell={inst.ell})")
    return EquivalenceClass(first.k, first.ell, all(inst.is_bad for inst in instances))


def trivial_no_instance(k: int, ell: int, directed: bool = False) -> ProblemInstance:
    """A provably-no padding instance in class (k, ell).

    Two terminals joined by max(k+1, ceil(ell/2)) internally disjoint paths
    of length 2: the minimum cut exceeds k, so after any k deletions a
    two-hop path survives and 2 < ell.  The path count beyond k+1 only keeps
    the edge count at least ell, so the instance stays out of the bad class.
    """
    if ell < 3:
        raise InputError("no-instance gadget needs ell >= 3 (2-hop paths survive)")
    if k < 0:
        raise InputError("budget must be non-negative")
    paths = max(k + 1, (ell + 1) // 2)
    edges = []
    for j in range(paths):
        mid = 2 + j
        edges.append((0, mid))
        edges.append((mid, 1))
    g = Graph(directed, 2 + paths, edges)
    return ProblemInstance("lbec", g, s=0, t=1, k=k, ell=ell)


def pad_to_power_of_two(instances: Sequence[ProblemInstance],
                        kind: str = "lbec") -> list[ProblemInstance]:
    """Append in-class no-instances until the count is a power of two."""
    if kind != "lbec":
        raise InputError("padding is defined for lbec input instances")
    cls = check_equivalent(instances)
    if cls.bad:
        raise InputError("cannot pad the bad class")
    if cls.ell < 3:
        raise InputError("cannot build an in-class no-instance for ell <= 2")
    p = len(instances)
    target = 1
    while target < p:
        target *= 2
    directed = instances[0].graph.directed
    out = list(instances)
    while len(out) < target:
        out.append(trivial_no_instance(cls.k, cls.ell, directed))
    return out


# -- the two embedding constructions ----------------------------------------


@dataclass(frozen=True)
class _Construction:
    graph: Graph
    fractal: TFractal
    # Per input instance: original-vertex -> composed-vertex map and the
    # composed edge indices of its embedded edges.
    vertex_maps: tuple[dict, ...] = field(compare=False)
    edge_ranges: tuple[tuple[int, int], ...] = ()


def _reaches(g: Graph, a: int, b: int) -> bool:
    return bfs_distance(g, a, b) != UNREACHABLE


def _is_acyclic(g: Graph) -> bool:
    indeg = [0] * g.n
    for e in g.edges:
        indeg[e.v] += 1
    stack = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w, _ in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == g.n


def _check_power_of_two(p: int) -> int:
    if p < 1 or p & (p - 1):
        raise InputError(f"need a power-of-two instance count, got {p}")
    return p.bit_length() - 1


def _embed(instances: Sequence[ProblemInstance], cost: int,
           directed: bool) -> _Construction:
    q = _check_power_of_two(len(instances))
    if cost < 1:
        raise InputError("fractal edge cost must be positive")
    for i, inst in enumerate(instances):
        if inst.kind != "lbec":
            raise InputError(f"input {i} is not an lbec instance")
        if inst.graph.directed != directed:
            want = "directed" if directed else "undirected"
            raise InputError(f"input {i} must be {want}")
        if not inst.graph.is_simple:
            raise InputError(f"input {i} must be a simple unit graph")
        if directed:
            if not _is_acyclic(inst.graph):
                raise InputError(f"input {i} is cyclic")
            if _reaches(inst.graph, inst.t, inst.s):
                raise InputError(
                    f"input {i} has a path from its sink back to its source")

    fractal = build_fractal(q, directed=directed, cost=cost)
    p = 1 << q
    edges: list[tuple[int, int, int, int]] = [
        (e.u, e.v, e.cost, e.length) for e in fractal.graph.edges]
    next_id = p + 1
    vertex_maps = []
    edge_ranges = []
    for i, inst in enumerate(instances, start=1):
        vmap = {inst.s: i - 1, inst.t: i}
        for v in range(inst.graph.n):
            if v not in vmap:
                vmap[v] = next_id
                next_id += 1
        start = len(edges)
        for e in inst.graph.edges:
            edges.append((vmap[e.u], vmap[e.v], 1, 1))
        vertex_maps.append(vmap)
        edge_ranges.append((start, len(edges)))
    g = Graph(directed, next_id, edges, labels={0: "sigma", p: "tau"})
    if directed and not _is_acyclic(g):
        raise RuntimeError("composed graph unexpectedly cyclic")
    return _Construction(g, fractal, tuple(vertex_maps), tuple(edge_ranges))


def construct1(instances: Sequence[ProblemInstance],
               cost: int) -> tuple[Graph, TFractal]:
    """Merge p undirected terminal instances onto the deepest boundary of a
    cost-c fractal: input i's source lands on vertex i-1 and its sink on
    vertex i, so consecutive inputs share a vertex."""
    con = _embed(instances, cost, directed=False)
    return con.graph, con.fractal


def construct2(instances: Sequence[ProblemInstance],
               cost: int) -> tuple[Graph, TFractal]:
    """Directed-acyclic variant of construct1 on the directed fractal; the
    composed graph is again acyclic."""
    con = _embed(instances, cost, directed=True)
    return con.graph, con.fractal


# -- composition artifacts ---------------------------------------------------


@dataclass(frozen=True)
class CompositionArtifact:
    """Composed instance plus the selector map and parameter arithmetic.

    ``selector`` maps fractal gap i (1-based) to the index of the input
    instance occupying it.  ``params`` records the arithmetic of the
    generating construction.  In weighted mode the fractal's edge indices
    are also valid composed-graph indices (fractal edges come first), so the
    fractal's minimum cuts can be deleted from the composed graph directly;
    in simple mode ``expanded_edges`` maps each pre-expansion edge index to
    its replacement unit edges.
    """

    composed: ProblemInstance
    selector: dict[int, int] = field(compare=False)
    params: dict = field(compare=False)
    mode: str = "weighted"
    fractal: TFractal = None
    vertex_maps: tuple = field(default=(), compare=False)
    edge_ranges: tuple = ()
    expanded_edges: Optional[dict] = field(default=None, compare=False)


def _expand_marked(g: Graph, marked: set[int],
                   subdivide: bool = True) -> tuple[Graph, dict]:
    """Realize the deletion cost of each marked edge with unit edges.

    With ``subdivide`` (the default), a cost-c edge becomes c parallel
    two-hop paths through fresh midpoints, doubling its endpoints' distance.
    Without it, it becomes c parallel unit edges, leaving distances alone;
    the directed diameter composition needs this flavor because a severed
    two-hop path would strand its midpoint and break strong connectivity.
    Unmarked edges are kept as they are.  Returns the new graph and a map
    from old edge index to the tuple of replacement edge indices.
    """
    edges: list[tuple[int, int, int, int]] = []
    mapping: dict[int, tuple[int, ...]] = {}
    mid = g.n
    for idx, e in enumerate(g.edges):
        if idx in marked:
            new_ids = []
            for _ in range(e.cost):
                if subdivide:
                    new_ids.append(len(edges))
                    edges.append((e.u, mid, 1, 1))
                    new_ids.append(len(edges))
                    edges.append((mid, e.v, 1, 1))
                    mid += 1
                else:
                    new_ids.append(len(edges))
                    edges.append((e.u, e.v, 1, 1))
            mapping[idx] = tuple(new_ids)
        else:
            mapping[idx] = (len(edges),)
            edges.append((e.u, e.v, e.cost, e.length))
    return Graph(g.directed, mid, edges, g.labels), mapping


def _common_class(instances: Sequence[ProblemInstance]) -> tuple[int, int]:
    cls = check_equivalent(instances)
    if cls.bad:
        raise InputError("cannot compose the bad equivalence class")
    if cls.ell < 3:
        raise InputError("composition assumes ell >= 3")
    if cls.k < 1:
        raise InputError("composition assumes a positive budget k")
    return cls.k, cls.ell


def _selector_cost(k: int) -> int:
    """Fractal edge cost: k**2, raised to k+1 in the degenerate k = 1 case.

    Soundness needs the leftover budget after paying for a minimum selector
    cut (exactly k) to be smaller than the edge cost, or the budget buys
    extra selector edges: deleting all three depth-1 fractal edges chains
    the two adjacent inputs into one long path and fakes a yes from two no
    inputs.  k < k**2 holds for every k except 1.
    """
    return k * k if k >= 2 else k + 1


def _check_mode(mode: str) -> None:
    if mode not in ("weighted", "simple"):
        raise InputError(f"unknown mode {mode!r}")


def compose_lbec(instances: Sequence[ProblemInstance],
                 mode: str = "weighted") -> CompositionArtifact:
    """Compose p length-bounded cut instances into one.

    Selector edge cost c (k**2, see _selector_cost), budget
    k' = c (log p + 1) + k counted in deletion cost, threshold
    ell' = ell + log p in weighted mode and twice that in simple mode.
    Directed-acyclic inputs go through the directed fractal, undirected
    inputs through the undirected one.
    """
    _check_mode(mode)
    k, ell = _common_class(instances)
    directed = instances[0].graph.directed
    c = _selector_cost(k)
    con = _embed(instances, c, directed)
    p = len(instances)
    q = p.bit_length() - 1
    k_prime = c * (q + 1) + k
    params = {"p": p, "q": q, "c": c, "k": k, "ell": ell,
              "k_prime": k_prime, "n_max": max(i.graph.n for i in instances),
              "L": None}
    if mode == "weighted":
        ell_prime = ell + q
        inst = ProblemInstance("lbec", con.graph, s=0, t=1 << q,
                               k=k_prime, ell=ell_prime)
        expanded = None
    else:
        # Subdividing the whole graph makes every deletion question exactly
        # the weighted one with all distances doubled.  Expanding only the
        # fractal edges is not sound: instance hops then stay undoubled and
        # the non-cut distance ceiling 2(|D|+1) meets ell + 2 log p already
        # at ell <= 4.
        ell_prime = 2 * (ell + q)
        g2, expanded = _expand_marked(con.graph,
                                      set(range(len(con.graph.edges))))
        inst = ProblemInstance("lbec", g2, s=0, t=1 << q,
                               k=k_prime, ell=ell_prime)
    params["ell_prime"] = ell_prime
    return CompositionArtifact(
        composed=inst, selector={i: i for i in range(1, p + 1)},
        params=params, mode=mode, fractal=con.fractal,
        vertex_maps=con.vertex_maps, edge_ranges=con.edge_ranges,
        expanded_edges=expanded)


def compose_dsct(instances: Sequence[ProblemInstance],
                 mode: str = "weighted") -> CompositionArtifact:
    """Compose p directed-acyclic cut instances into a short-cycle instance.

    On top of the directed embedding, one arc from tau back to sigma with
    cost k'+1 closes the graph: it participates in every cycle and the budget
    cannot pay for it, so short cycles must be lengthened by stretching the
    sigma-tau distance.  The shortest surviving cycle is that distance plus
    one back-arc hop, the transversal question asks for no cycle of length
    *at most* the threshold, and so ell' = ell + log p in weighted mode;
    simple mode subdivides everything and doubles it to 2 (ell + log p).
    """
    _check_mode(mode)
    k, ell = _common_class(instances)
    if not instances[0].graph.directed:
        raise InputError("short-cycle composition takes directed acyclic inputs")
    c = _selector_cost(k)
    con = _embed(instances, c, directed=True)
    p = len(instances)
    q = p.bit_length() - 1
    k_prime = c * (q + 1) + k
    tau = 1 << q
    edges = [(e.u, e.v, e.cost, e.length) for e in con.graph.edges]
    edges.append((tau, 0, k_prime + 1, 1))
    g = Graph(True, con.graph.n, edges, con.graph.labels)
    params = {"p": p, "q": q, "c": c, "k": k, "ell": ell,
              "k_prime": k_prime, "n_max": max(i.graph.n for i in instances),
              "L": None, "back_arc_cost": k_prime + 1}
    if mode == "weighted":
        ell_prime = ell + q
        inst = ProblemInstance("dsct", g, k=k_prime, ell=ell_prime)
        expanded = None
    else:
        # Whole-graph subdivision, as for the cut composition: every cycle
        # length doubles, so the threshold does too.
        ell_prime = 2 * (ell + q)
        g2, expanded = _expand_marked(g, set(range(len(g.edges))))
        inst = ProblemInstance("dsct", g2, k=k_prime, ell=ell_prime)
    params["ell_prime"] = ell_prime
    return CompositionArtifact(
        composed=inst, selector={i: i for i in range(1, p + 1)},
        params=params, mode=mode, fractal=con.fractal,
        vertex_maps=con.vertex_maps, edge_ranges=con.edge_ranges,
        expanded_edges=expanded)


def _augment_directed_input(inst: ProblemInstance) -> ProblemInstance:
    """Shadow every arc (v, w) with a parallel directed path of length ell.

    The detours keep every vertex reachable after arc deletions without ever
    offering a shorter route, so the instance's answer is unchanged; minimal
    solutions never touch the detours.
    """
    g = inst.graph
    edges = [(e.u, e.v, 1, 1) for e in g.edges]
    nid = g.n
    for e in g.edges:
        prev = e.u
        for step in range(inst.ell - 1):
            edges.append((prev, nid, 1, 1))
            prev = nid
            nid += 1
        edges.append((prev, e.v, 1, 1))
    return ProblemInstance("lbec", Graph(True, nid, edges), s=inst.s,
                           t=inst.t, k=inst.k, ell=inst.ell)


def compose_mded(instances: Sequence[ProblemInstance], directed: bool = False,
                 mode: str = "weighted") -> CompositionArtifact:
    """Compose p cut instances into one diameter instance.

    A path of length L hangs off sigma (ending in sigma') and another off
    tau (ending in tau'); L is large enough that sigma' and tau' always
    realize the diameter, so the diameter question reduces to the sigma-tau
    distance question inside the selector.  The directed variant first
    shadows every input arc with an ell-hop detour, attaches directed paths,
    then closes the graph with the arc (tau', sigma') plus three wrap arcs
    priced above the whole budget (see the inline note on why the one-way
    chains need short ways around).
    """
    _check_mode(mode)
    k, ell = _common_class(instances)
    p = len(instances)
    q = _check_power_of_two(p)
    n_max = max(i.graph.n for i in instances)
    c = _selector_cost(k)
    k_prime = c * (q + 1) + k

    if not directed:
        for i, inst in enumerate(instances):
            if inst.graph.directed:
                raise InputError(f"input {i} must be undirected")
            if not is_connected(inst.graph):
                raise InputError(f"input {i} must be connected")
            # Standing assumption of the cut problems: the budget stays below
            # every terminal cut.  An input whose witnesses must sever its
            # terminals would disconnect the composed graph, which the
            # diameter problem forbids, so such (trivially yes) inputs would
            # break the or-semantics here.
            if min_cut(inst.graph, inst.s, inst.t).total_cost <= k:
                raise InputError(
                    f"input {i} has a terminal cut within budget; the diameter "
                    f"composition needs min-cut(s, t) > k")
        L = n_max * (2 * q + 3) + 1
        con = _embed(instances, c, directed=False)
    else:
        for i, inst in enumerate(instances):
            if not inst.graph.directed:
                raise InputError(f"input {i} must be directed")
            for v in range(inst.graph.n):
                if bfs_distance(inst.graph, inst.s, v) == UNREACHABLE:
                    raise InputError(f"input {i}: source does not reach vertex {v}")
                if bfs_distance(inst.graph, v, inst.t) == UNREACHABLE:
                    raise InputError(f"input {i}: vertex {v} does not reach the sink")
        L = ell * n_max * (2 * q + 3) + 1
        con = _embed([_augment_directed_input(i) for i in instances], c,
                     directed=True)

    tau = 1 << q
    edges = [(e.u, e.v, e.cost, e.length) for e in con.graph.edges]
    nid = con.graph.n

    def attach_path(anchor: int, toward_anchor: bool) -> int:
        nonlocal nid
        prev = anchor
        for _ in range(L):
            cur = nid
            nid += 1
            if directed and toward_anchor:
                edges.append((cur, prev, 1, 1))
            else:
                edges.append((prev, cur, 1, 1))
            prev = cur
        return prev

    sigma_tip = attach_path(0, toward_anchor=True)
    tau_tip = attach_path(tau, toward_anchor=False)
    wrap_arcs: list[int] = []
    if directed:
        edges.append((tau_tip, sigma_tip, 1, 1))
        # Budget-priced wrap arcs.  (tau, sigma) closes the big cycle as in
        # the undirected case.  The other two give the one-way appended
        # chains a short way around: without them, a vertex one step into
        # tau's chain reaches a detour interior only by traversing both
        # chains (2L + dist(sigma, y) hops), which exceeds dist(sigma', tau')
        # whenever some vertex lies farther from sigma than tau does, and
        # detour interiors always do -- the composed instance would be a yes
        # with zero deletions.  With them, every pair except (sigma', tau')
        # stays below 2L + dist(sigma, tau), so the diameter question reduces
        # to the sigma-tau distance exactly as intended.
        for arc in ((tau, 0), (tau, sigma_tip), (tau_tip, 0)):
            wrap_arcs.append(len(edges))
            edges.append((arc[0], arc[1], k_prime + 1, 1))
    labels = dict(con.graph.labels or {})
    labels[sigma_tip] = "sigma_tip"
    labels[tau_tip] = "tau_tip"
    g = Graph(directed, nid, edges, labels)

    if directed:
        if not is_strongly_connected(g):
            raise RuntimeError("directed diameter composition must be strongly connected")
    elif not is_connected(g):
        raise RuntimeError("diameter composition must be connected")

    params = {"p": p, "q": q, "c": c, "k": k, "ell": ell,
              "k_prime": k_prime, "n_max": n_max, "L": L}
    ell_prime = 2 * L + q + ell
    if mode == "weighted":
        inst = ProblemInstance("mded", g, k=k_prime, ell=ell_prime)
        expanded = None
    else:
        # Parallel unit copies only, never subdivision: a severed two-hop
        # path strands its midpoint, which the directed variant's strong
        # connectivity outright forbids, and in the undirected variant a
        # pair of pendant midpoints realizes distances up to two beyond the
        # doubled originals, spoiling the diameter threshold.  Copies leave
        # every distance unchanged, so the threshold stays the weighted one.
        marked = set(range(len(con.fractal.graph.edges))) | set(wrap_arcs)
        g2, expanded = _expand_marked(g, marked, subdivide=False)
        inst = ProblemInstance("mded", g2, k=k_prime, ell=ell_prime)
    params["ell_prime"] = ell_prime
    return CompositionArtifact(
        composed=inst, selector={i: i for i in range(1, p + 1)},
        params=params, mode=mode, fractal=con.fractal,
        vertex_maps=con.vertex_maps, edge_ranges=con.edge_ranges,
        expanded_edges=expanded)
