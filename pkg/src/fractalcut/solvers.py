"""Deciders for the three length-bounded deletion problems.

LBEC: delete at most k edges so the s-t distance becomes at least ell.
MDED: delete at most k edges keeping the graph (strongly) connected while
      raising the diameter to at least ell.
DSCT: delete at most k arcs so no directed cycle of length at most ell
      remains (shortest directed cycles are chordless, so checking all
      cycles and checking induced cycles decide the same instances).

Each problem gets a fixed-parameter branching solver and an exhaustive
brute-force oracle.  The brute force exists to check the branchers and the
composers, so it stays dumb: it enumerates deletion sets outright.  The
cost-aware variant additionally applies a few symmetry quotients and
exclusions that are proved in their docstrings and cross-checked against the
raw enumeration in the test suite; they never change a verdict, only the
amount of enumeration.

Budgets count deletion cost.  On unit graphs (every solver's input) that is
the same as cardinality; cost-annotated graphs are only ever handed to the
cost-aware brute force.

Solvers accept parallel edges: the NP-hardness reduction emits bundles of
parallel edges to make them effectively undeletable, and the branchers
handle that with a sound prune (never branch on a bundle whose multiplicity
exceeds the remaining budget; partially deleted bundles leave every distance
unchanged).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InputError, ResourceBudgetError
from .graph import Graph, UNREACHABLE, bfs_distance, min_cut

KINDS = ("lbec", "mded", "dsct")


@dataclass(frozen=True)
class ProblemInstance:
    """Tagged union of LBEC / MDED / DSCT instances.

    ``k`` is the deletion budget (counted in deletion cost), ``ell`` the
    length threshold.  ``s``/``t`` are set for LBEC only.
    """

    kind: str
    graph: Graph
    s: Optional[int] = None
    t: Optional[int] = None
    k: int = 0
    ell: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown problem kind {self.kind!r}")
        if self.kind == "lbec":
            if self.s is None or self.t is None:
                raise InputError("lbec instance needs terminals s and t")
            for v in (self.s, self.t):
                if not (0 <= v < self.graph.n):
                    raise InputError(f"terminal {v} out of range")
            if self.s == self.t:
                raise InputError("lbec terminals must be distinct")
        else:
            if self.s is not None or self.t is not None:
                raise InputError(f"{self.kind} instance carries no terminals")
        if self.kind == "dsct" and not self.graph.directed:
            raise InputError("dsct instance requires a directed graph")

    @property
    def is_bad(self) -> bool:
        """Degenerate parameter combination, grouped into one equivalence class."""
        m = len(self.graph.edges)
        return max(self.k, self.ell) > m or min(self.k, self.ell) < 0


@dataclass(frozen=True)
class Verdict:
    """Decision plus a replayable witness.

    ``nodes`` counts explored branching leaves (for the diameter solver: the
    maximum over vertex pairs); the brute-force solvers report the number of
    deletion sets tested instead.
    """

    answer: bool
    witness: Optional[tuple[int, ...]] = None
    nodes: int = 0

    def witness_pairs(self, g: Graph) -> Optional[list[list[int]]]:
        if self.witness is None:
            return None
        return [[g.edges[i].u, g.edges[i].v] for i in self.witness]


# -- reference predicate (replay grade, no cleverness) ---------------------


def _alive_adj(g: Graph, dead: frozenset[int]):
    adj = [[] for _ in range(g.n)]
    for idx, e in enumerate(g.edges):
        if idx in dead:
            continue
        adj[e.u].append(e.v)
        if not g.directed:
            adj[e.v].append(e.u)
    return adj


def _radj_of(g: Graph, dead: frozenset[int]):
    radj = [[] for _ in range(g.n)]
    for idx, e in enumerate(g.edges):
        if idx not in dead:
            radj[e.v].append(e.u)
    return radj


def _bfs_all(adj, src: int, n: int):
    dist = [UNREACHABLE] * n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _diameter(g: Graph, dead: frozenset[int]) -> float:
    """Maximum shortest-path length over ordered pairs; inf if some pair is
    unreachable (directed: not strongly connected)."""
    if g.n <= 1:
        return 0
    adj = _alive_adj(g, dead)
    worst = 0
    for v in range(g.n):
        dist = _bfs_all(adj, v, g.n)
        worst = max(worst, max(dist))
        if worst == UNREACHABLE:
            return UNREACHABLE
    return worst


def _girth_directed(g: Graph, dead: frozenset[int]) -> float:
    """Length of the shortest directed cycle; inf when acyclic."""
    best = UNREACHABLE
    adj = _alive_adj(g, dead)
    for idx, e in enumerate(g.edges):
        if idx in dead:
            continue
        dist = _bfs_all(adj, e.v, g.n)
        best = min(best, dist[e.u] + 1)
    return best


def _connected_after(g: Graph, dead: frozenset[int]) -> bool:
    if g.n <= 1:
        return True
    adj = _alive_adj(g, dead)
    und = adj
    if g.directed:
        und = [list(nbrs) for nbrs in adj]
        for idx, e in enumerate(g.edges):
            if idx not in dead:
                und[e.v].append(e.u)
    dist = _bfs_all(und, 0, g.n)
    if any(d == UNREACHABLE for d in dist):
        return False
    if not g.directed:
        return True
    fwd = _bfs_all(adj, 0, g.n)
    bwd = _bfs_all(_radj_of(g, dead), 0, g.n)
    return all(d != UNREACHABLE for d in fwd) and all(d != UNREACHABLE for d in bwd)


def instance_predicate(inst: ProblemInstance, deleted: Iterable[int]) -> bool:
    """Does deleting these edge indices satisfy the instance's question?"""
    dead = frozenset(deleted)
    g = inst.graph
    if inst.kind == "lbec":
        return bfs_distance(g, inst.s, inst.t, dead) >= inst.ell
    if inst.kind == "mded":
        # _connected_after already means strong connectivity for directed
        # graphs; _diameter would report infinity in that case anyway.
        if not _connected_after(g, dead):
            return False
        return _diameter(g, dead) >= inst.ell
    return _girth_directed(g, dead) > inst.ell


def check_witness(inst: ProblemInstance, edges: Iterable[int]) -> bool:
    """Replay a witness: cost within budget and predicate satisfied."""
    edges = tuple(edges)
    if inst.graph.total_cost(edges) > inst.k:
        return False
    return instance_predicate(inst, edges)


# -- shared branching state -------------------------------------------------


class _SlotState:
    """Multigraph adjacency grouped into parallel-edge slots.

    A slot is one (u, v) adjacency pair; ``mult[sid]`` counts surviving
    copies.  Deleting a copy only changes distances once the slot is empty,
    which is what makes the multiplicity-versus-budget prune sound.
    """

    __slots__ = ("n", "directed", "slots", "slot_edges", "mult", "orig",
                 "adj", "radj")

    def __init__(self, g: Graph):
        if not g.is_unit:
            raise InputError("branching solvers require unit costs and lengths")
        self.n = g.n
        self.directed = g.directed
        by_pair: dict[tuple[int, int], list[int]] = {}
        for idx, e in enumerate(g.edges):
            by_pair.setdefault((e.u, e.v), []).append(idx)
        # Slot ids in order of first appearance keeps everything deterministic.
        pairs = sorted(by_pair, key=lambda p: by_pair[p][0])
        self.slots = pairs
        self.slot_edges = [tuple(sorted(by_pair[p])) for p in pairs]
        self.mult = [len(by_pair[p]) for p in pairs]
        self.orig = tuple(self.mult)
        adj = [[] for _ in range(g.n)]
        radj = [[] for _ in range(g.n)] if g.directed else adj
        for sid, (u, v) in enumerate(pairs):
            adj[u].append((v, sid))
            if g.directed:
                radj[v].append((u, sid))
            else:
                adj[v].append((u, sid))
        for lst in adj:
            lst.sort()
        if g.directed:
            for lst in radj:
                lst.sort()
        self.adj = adj
        self.radj = radj

    def delete_copy(self, sid: int) -> int:
        """Remove one copy, returning the concrete edge index it stands for."""
        used = self.orig[sid] - self.mult[sid]
        self.mult[sid] -= 1
        return self.slot_edges[sid][used]

    def restore_copy(self, sid: int) -> None:
        self.mult[sid] += 1

    # BFS over surviving slots.

    def shortest_path_slots(self, s: int, t: int, limit: int):
        """Slot ids of a shortest s-t path if its length is <= limit, else None.

        Ties are broken toward smaller vertex ids (adjacency is sorted), so
        branching order is reproducible.
        """
        if s == t:
            return []
        mult = self.mult
        par_slot = [-1] * self.n
        par_vert = [-1] * self.n
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier and d < limit:
            nxt = []
            for u in frontier:
                for v, sid in self.adj[u]:
                    if mult[sid] <= 0 or dist[v] >= 0:
                        continue
                    dist[v] = d + 1
                    par_slot[v] = sid
                    par_vert[v] = u
                    if v == t:
                        path = []
                        cur = t
                        while cur != s:
                            path.append(par_slot[cur])
                            cur = par_vert[cur]
                        path.reverse()
                        return path
                    nxt.append(v)
            frontier = nxt
            d += 1
        return None

    def support_connected(self, skip_sid: int = -1, strong: bool = False) -> bool:
        """Connectivity of the surviving support, optionally without one slot."""
        if self.n <= 1:
            return True
        mult = self.mult

        def sweep(adj, backward_too):
            seen = bytearray(self.n)
            seen[0] = 1
            queue = deque([0])
            count = 1
            while queue:
                u = queue.popleft()
                for v, sid in adj[u]:
                    if sid == skip_sid or mult[sid] <= 0 or seen[v]:
                        continue
                    seen[v] = 1
                    count += 1
                    queue.append(v)
                if backward_too:
                    for v, sid in self.radj[u]:
                        if sid == skip_sid or mult[sid] <= 0 or seen[v]:
                            continue
                        seen[v] = 1
                        count += 1
                        queue.append(v)
            return count == self.n

        if not self.directed:
            return sweep(self.adj, False)
        if not strong:
            return sweep(self.adj, True)
        return sweep(self.adj, False) and sweep(self.radj, False)

    def shortest_cycle_slots(self, limit: int):
        """Slots of a shortest directed cycle of length <= limit, else None.

        For each vertex v this runs the vertex-split search: v is replaced by
        v_in (receiving v's in-arcs) and v_out (emitting v's out-arcs) joined
        by an arc (v_in, v_out), and the shortest v_out-v_in path is the
        shortest cycle through v.  The split graph is kept implicit: a BFS
        starts at v's out-neighbors and looks for an in-neighbor of v; the
        artificial (v_in, v_out) arc is never a branching candidate.
        """
        if limit < 2:
            return None
        best_len = None
        best = None
        mult = self.mult
        for v in range(self.n):
            in_slot = {}
            for u, sid in self.radj[v]:
                if mult[sid] > 0 and u not in in_slot:
                    in_slot[u] = sid
            if not in_slot:
                continue
            dist = [-1] * self.n
            par_slot = [-1] * self.n
            par_vert = [-1] * self.n
            frontier = []
            hit = None
            for x, sid in self.adj[v]:
                if mult[sid] <= 0 or dist[x] >= 0:
                    continue
                dist[x] = 1
                par_slot[x] = sid
                par_vert[x] = v
                if x in in_slot and hit is None:
                    hit = x
                frontier.append(x)
            d = 1
            cap = limit if best_len is None else min(limit, best_len - 1)
            while hit is None and frontier and d + 1 <= cap - 1:
                nxt = []
                for u in frontier:
                    for w, sid in self.adj[u]:
                        if mult[sid] <= 0 or dist[w] >= 0 or w == v:
                            continue
                        dist[w] = d + 1
                        par_slot[w] = sid
                        par_vert[w] = u
                        if w in in_slot and hit is None:
                            hit = w
                        nxt.append(w)
                    if hit is not None:
                        break
                frontier = nxt
                d += 1
            if hit is None:
                continue
            length = dist[hit] + 1
            if length <= cap and (best_len is None or length < best_len):
                path = []
                cur = hit
                while cur != v:
                    path.append(par_slot[cur])
                    cur = par_vert[cur]
                path.reverse()
                path.append(in_slot[hit])
                best_len = length
                best = path
        return best


def split_vertex(g: Graph, v: int) -> tuple[Graph, int, int]:
    """Explicit vertex-split helper: returns (G_v, v_in, v_out).

    Vertex v is removed; v_in (= old id v) receives the former in-arcs,
    v_out (= fresh id n) emits the former out-arcs, and the arc
    (v_in, v_out) is added.  The shortest v_out-v_in path length equals the
    shortest directed cycle length through v in g.
    """
    if not g.directed:
        raise InputError("split_vertex needs a directed graph")
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range")
    v_in, v_out = v, g.n
    edges = []
    for e in g.edges:
        if e.u == v and e.v == v:
            continue
        u = v_out if e.u == v else e.u
        w = v_in if e.v == v else e.v
        edges.append((u, w, e.cost, e.length))
    edges.append((v_in, v_out, 1, 1))
    return Graph(True, g.n + 1, edges), v_in, v_out


# -- branching solvers -------------------------------------------------------


def _require_solvable(inst: ProblemInstance, kind: str) -> None:
    if inst.kind != kind:
        raise InputError(f"expected a {kind} instance, got {inst.kind}")
    if inst.is_bad:
        raise InputError("instance is bad: parameters exceed the edge count "
                         "or are negative")
    if not inst.graph.is_unit:
        raise InputError("branching solvers take unit-cost graphs; use the "
                         "cost-aware brute force for weighted instances")


def _branch_distance(state: _SlotState, s: int, t: int, ell: int, budget: int,
                     keep_connected: bool):
    """Core brancher: raise dist(s, t) to >= ell with <= budget deletions.

    At each node: if a shortest s-t path of length < ell exists, branch on
    deleting one surviving copy of each of its slots (skipping slots whose
    multiplicity exceeds the remaining budget: they cannot be emptied, and a
    partial deletion changes no distance).  With connectivity enforcement, a
    branch that would disconnect the surviving support is skipped, which is
    exactly the diameter problem's requirement.

    Returns (witness edge list or None, leaves explored).
    """
    leaves = 0
    deleted: list[int] = []

    def rec(budget_left: int):
        nonlocal leaves
        path = state.shortest_path_slots(s, t, ell - 1)
        if path is None:
            leaves += 1
            return list(deleted)
        if budget_left == 0:
            leaves += 1
            return None
        branched = False
        for sid in path:
            if state.mult[sid] > budget_left:
                continue
            if keep_connected and state.mult[sid] == 1 and \
                    not state.support_connected(skip_sid=sid,
                                                strong=state.directed):
                continue
            branched = True
            deleted.append(state.delete_copy(sid))
            res = rec(budget_left - 1)
            state.restore_copy(sid)
            deleted.pop()
            if res is not None:
                return res
        if not branched:
            leaves += 1
        return None

    return rec(budget), leaves


def solve_lbec_fpt(inst: ProblemInstance) -> Verdict:
    """Branching decider for the length-bounded cut question.

    Explores at most (ell-1)**k leaves.  When the budget covers a minimum
    s-t cut the answer is immediately yes with that cut as witness (cutting
    makes the distance infinite).
    """
    _require_solvable(inst, "lbec")
    if inst.ell <= 1:
        return Verdict(True, (), 0)  # s != t, so the distance is always >= 1
    cert = min_cut(inst.graph, inst.s, inst.t)
    if cert.total_cost <= inst.k:
        return Verdict(True, cert.edges, 0)
    state = _SlotState(inst.graph)
    witness, leaves = _branch_distance(state, inst.s, inst.t, inst.ell,
                                       inst.k, keep_connected=False)
    if witness is None:
        return Verdict(False, None, leaves)
    return Verdict(True, tuple(sorted(witness)), leaves)


def solve_mded_fpt(inst: ProblemInstance) -> Verdict:
    """Branching decider for the diameter question.

    Some vertex pair must end up at distance >= ell, so the brancher runs
    once per pair (ordered pairs for directed graphs, unordered otherwise)
    with connectivity-preserving deletions only.  ``nodes`` reports the
    per-pair maximum of explored leaves, which is bounded by (ell-1)**k.
    """
    _require_solvable(inst, "mded")
    g = inst.graph
    if g.directed:
        from .graph import is_strongly_connected
        if not is_strongly_connected(g):
            raise InputError("directed diameter instance must be strongly connected")
    else:
        from .graph import is_connected
        if not is_connected(g):
            raise InputError("diameter instance must be connected")
    if inst.ell <= 0:
        return Verdict(True, (), 0)
    if inst.ell == 1:
        return Verdict(g.n >= 2, () if g.n >= 2 else None, 0)
    state = _SlotState(g)
    if g.directed:
        pairs = [(v, w) for v in range(g.n) for w in range(g.n) if v != w]
    else:
        pairs = [(v, w) for v in range(g.n) for w in range(v + 1, g.n)]
    worst = 0
    for v, w in pairs:
        witness, leaves = _branch_distance(state, v, w, inst.ell, inst.k,
                                           keep_connected=True)
        worst = max(worst, leaves)
        if witness is not None:
            return Verdict(True, tuple(sorted(witness)), worst)
    return Verdict(False, None, worst)


def solve_dsct_fpt(inst: ProblemInstance) -> Verdict:
    """Branching decider for the short-cycle transversal question.

    Finds a shortest directed cycle via the vertex-split search; while one of
    length <= ell exists, branches over deleting each of its <= ell arcs.
    Explores at most ell**k leaves.
    """
    _require_solvable(inst, "dsct")
    if inst.ell <= 0:
        return Verdict(True, (), 0)
    state = _SlotState(inst.graph)
    leaves = 0
    deleted: list[int] = []

    def rec(budget_left: int):
        nonlocal leaves
        cycle = state.shortest_cycle_slots(inst.ell)
        if cycle is None:
            leaves += 1
            return list(deleted)
        if budget_left == 0:
            leaves += 1
            return None
        branched = False
        for sid in cycle:
            if state.mult[sid] > budget_left:
                continue
            branched = True
            deleted.append(state.delete_copy(sid))
            res = rec(budget_left - 1)
            state.restore_copy(sid)
            deleted.pop()
            if res is not None:
                return res
        if not branched:
            leaves += 1
        return None

    witness = rec(inst.k)
    if witness is None:
        return Verdict(False, None, leaves)
    return Verdict(True, tuple(sorted(witness)), leaves)


def solve_fpt(inst: ProblemInstance) -> Verdict:
    """Dispatch to the matching branching solver."""
    if inst.kind == "lbec":
        return solve_lbec_fpt(inst)
    if inst.kind == "mded":
        return solve_mded_fpt(inst)
    return solve_dsct_fpt(inst)


# -- brute force -------------------------------------------------------------


def solve_bruteforce(inst: ProblemInstance, max_subsets: int = 10_000_000) -> Verdict:
    """Exhaustive oracle: test every edge subset of size <= k.

    Subsets are enumerated by ascending size, lexicographically within each
    size, and the first satisfying subset is returned, which makes the
    witness canonical.  ``nodes`` reports how many subsets were tested.
    Raises ResourceBudgetError instead of ever guessing.
    """
    if inst.kind not in KINDS:
        raise InputError(f"unknown kind {inst.kind}")
    if not inst.graph.is_unit:
        raise InputError("solve_bruteforce enumerates by cardinality and "
                         "requires unit costs; use solve_bruteforce_costaware")
    m = len(inst.graph.edges)
    tested = 0
    for size in range(0, min(inst.k, m) + 1):
        for combo in itertools.combinations(range(m), size):
            tested += 1
            if tested > max_subsets:
                raise ResourceBudgetError(
                    f"brute force exceeded {max_subsets} subsets")
            if instance_predicate(inst, combo):
                return Verdict(True, combo, tested)
    return Verdict(False, None, tested)


# -- cost-aware brute force --------------------------------------------------


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class _CostAwareSearch:
    """Exhaustive decision over deletion sets of bounded total cost.

    The enumeration unit is the *severance*: removing every parallel copy
    joining one vertex pair.  This is exhaustive because all three problem
    predicates depend only on which adjacencies survive (unit hop lengths),
    so a deletion set that leaves some copy of a pair alive decides exactly
    like the same set with those wasted copies returned; hence only full
    severances matter, and a severance costs the summed cost of the pair.

    With ``symmetry`` enabled, three further verdict-preserving reductions
    shrink the universe:

    * exclusions -- pairs that can never appear usefully in a deletion set:
      support bridges for the undirected diameter problem (removing one
      disconnects, and any superset stays disconnected), strong bridges for
      the directed diameter problem, and arcs on no directed cycle for the
      transversal problem (they bound no cycle, so severing them never
      removes one);
    * chain quotient (distance and transversal problems only) -- along a
      maximal corridor of degree-2 interior vertices (terminals excluded),
      severing any one pair kills exactly the through-traffic and leaves
      dead-end stubs no simple s-t path or cycle can use, so one canonical
      cheapest severance per corridor suffices and two severances in one
      corridor are never both useful;
    * parallel-corridor bundles -- corridors with identical endpoints,
      length and cost are interchangeable under a graph automorphism fixing
      everything else, so only how many of them are severed matters.

    The diameter problem keeps every non-bridge pair individually: corridor
    stubs change eccentricities, so the chain quotient does not apply to it.
    """

    def __init__(self, inst: ProblemInstance, symmetry: bool = True):
        g = inst.graph
        if any(e.length != 1 for e in g.edges):
            raise InputError("cost-aware search requires unit hop lengths")
        self.inst = inst
        self.n = g.n
        self.directed = g.directed
        by_pair: dict[tuple[int, int], list[int]] = {}
        for idx, e in enumerate(g.edges):
            by_pair.setdefault((e.u, e.v), []).append(idx)
        self.pairs = sorted(by_pair, key=lambda p: by_pair[p][0])
        self.pair_edges = [tuple(sorted(by_pair[p])) for p in self.pairs]
        self.pair_cost = [sum(g.edges[i].cost for i in idxs)
                          for idxs in self.pair_edges]
        self.pair_id = {p: i for i, p in enumerate(self.pairs)}

        # Bitset support adjacency (mutated during the search via apply/undo).
        self.out_masks = [0] * g.n
        self.in_masks = [0] * g.n
        for (u, v) in self.pairs:
            self.out_masks[u] |= 1 << v
            self.in_masks[v] |= 1 << u
            if not self.directed:
                self.out_masks[v] |= 1 << u
                self.in_masks[u] |= 1 << v
        self.full_mask = (1 << g.n) - 1

        excluded = self._excluded_pairs() if symmetry else set()
        if symmetry and inst.kind in ("lbec", "dsct"):
            chains = self._find_chains(excluded)
        else:
            chains = []
        in_chain = {pid for ch, _, _ in chains for pid in ch}

        # Units: (cost, effect pair ids, witness edge indices, symmetry key).
        units = []
        for ch, head, tail in chains:
            costs = [self.pair_cost[p] for p in ch]
            best = min(range(len(ch)), key=lambda i: (costs[i], ch[i]))
            if not self.directed:
                head, tail = min(head, tail), max(head, tail)
            key = ("chain", head, tail, len(ch), costs[best])
            units.append((costs[best], tuple(ch),
                          self.pair_edges[ch[best]], key))
        for pid in range(len(self.pairs)):
            if pid in in_chain or pid in excluded:
                continue
            units.append((self.pair_cost[pid], (pid,),
                          self.pair_edges[pid], ("pair", pid)))

        # Merge identical parallel corridors into one all-or-nothing unit:
        # severing some but not all of them leaves the endpoint adjacency
        # intact through the survivors, so every distance is unchanged and
        # the partial severance is wasted.  Only the full severance (total
        # cost) matters, which also retires over-budget parallel bundles
        # (for example a back arc realized as budget+1 parallel paths).
        merged: dict = {}
        order = []
        for cost, pids, wit, key in units:
            if key not in merged:
                merged[key] = [0, [], []]
                order.append(key)
            merged[key][0] += cost
            merged[key][1].extend(pids)
            merged[key][2].extend(wit)
        self.units = []
        for key in order:
            cost, pids, wit = merged[key]
            self.units.append((cost, tuple(pids), tuple(sorted(wit))))
        self.units.sort(key=lambda u: u[2][0])

    # ---- structural preprocessing

    def _excluded_pairs(self) -> set[int]:
        kind = self.inst.kind
        excluded = set()
        if kind == "mded":
            strong = self.directed
            for pid in range(len(self.pairs)):
                if not self._support_connected_without(pid, strong):
                    excluded.add(pid)
        elif kind == "dsct":
            # Arcs inside a strongly connected component lie on a cycle;
            # all others never do.
            comp = self._scc_ids()
            for pid, (u, v) in enumerate(self.pairs):
                if comp[u] != comp[v]:
                    excluded.add(pid)
        return excluded

    def _support_connected_without(self, pid: int, strong: bool) -> bool:
        if self.n <= 1:
            return True
        u0, v0 = self.pairs[pid]

        def sweep(masks, skip_u, skip_v, both_ways):
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for i in _bits(frontier):
                    mask = masks[i]
                    if i == skip_u:
                        mask &= ~(1 << skip_v)
                    if both_ways and i == skip_v:
                        mask &= ~(1 << skip_u)
                    nxt |= mask
                frontier = nxt & ~seen
                seen |= nxt
            return seen == self.full_mask

        if not self.directed:
            return sweep(self.out_masks, u0, v0, True)
        if strong:
            return (sweep(self.out_masks, u0, v0, False)
                    and sweep(self.in_masks, v0, u0, False))
        raise InputError("weak connectivity exclusion is not used for directed graphs")

    def _scc_ids(self) -> list[int]:
        n = self.n
        comp = [-1] * n
        order = []
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            stack = [(start, iter(_bits(self.out_masks[start])))]
            seen[start] = True
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if not seen[w]:
                        seen[w] = True
                        stack.append((w, iter(_bits(self.out_masks[w]))))
                        advanced = True
                        break
                if not advanced:
                    order.append(v)
                    stack.pop()
        cid = 0
        for v in reversed(order):
            if comp[v] >= 0:
                continue
            stack = [v]
            comp[v] = cid
            while stack:
                x = stack.pop()
                for w in _bits(self.in_masks[x]):
                    if comp[w] < 0:
                        comp[w] = cid
                        stack.append(w)
            cid += 1
        return comp

    def _find_chains(self, excluded: set[int]):
        """Maximal corridors of degree-2 interiors (terminals protected).

        Returns (pair ids along the corridor, head vertex, tail vertex); the
        termini are the walk's stopping points, which is what identifies two
        corridors as parallel.
        """
        protected = set()
        if self.inst.kind == "lbec":
            protected = {self.inst.s, self.inst.t}
        if self.directed:
            def interior(v):
                return (v not in protected
                        and self.in_masks[v].bit_count() == 1
                        and self.out_masks[v].bit_count() == 1)
        else:
            def interior(v):
                return v not in protected and self.out_masks[v].bit_count() == 2

        chains = []
        used_pairs: set[int] = set()
        for pid, (u, v) in enumerate(self.pairs):
            if pid in used_pairs or pid in excluded:
                continue
            # Grow a corridor through interior vertices in both directions.
            chain = deque([pid])
            # forward from v
            prev, cur = u, v
            while interior(cur):
                if self.directed:
                    nxt = next(_bits(self.out_masks[cur]))
                else:
                    nbrs = [w for w in _bits(self.out_masks[cur])]
                    nxt = nbrs[0] if nbrs[1] == prev else nbrs[1]
                np = self.pair_id.get((cur, nxt) if self.directed
                                      else (min(cur, nxt), max(cur, nxt)))
                if np is None or np in used_pairs or np == pid or np in excluded:
                    break
                chain.append(np)
                used_pairs.add(np)
                prev, cur = cur, nxt
            tail = cur
            # backward from u
            prev, cur = v, u
            while interior(cur):
                if self.directed:
                    nxt = next(_bits(self.in_masks[cur]))
                else:
                    nbrs = [w for w in _bits(self.out_masks[cur])]
                    nxt = nbrs[0] if nbrs[1] == prev else nbrs[1]
                np = self.pair_id.get((nxt, cur) if self.directed
                                      else (min(cur, nxt), max(cur, nxt)))
                if np is None or np in used_pairs or np == pid or np in excluded:
                    break
                chain.appendleft(np)
                used_pairs.add(np)
                prev, cur = cur, nxt
            head = cur
            if len(chain) > 1:
                used_pairs.add(pid)
                chains.append((list(chain), head, tail))
        return chains

    # ---- incremental pair toggling

    def _apply_pairs(self, pids, undo):
        for pid in pids:
            u, v = self.pairs[pid]
            undo.append((u, self.out_masks[u], self.in_masks[u],
                         v, self.out_masks[v], self.in_masks[v]))
            self.out_masks[u] &= ~(1 << v)
            self.in_masks[v] &= ~(1 << u)
            if not self.directed:
                self.out_masks[v] &= ~(1 << u)
                self.in_masks[u] &= ~(1 << v)

    def _undo(self, undo, count):
        for _ in range(count):
            u, omu, imu, v, omv, imv = undo.pop()
            self.out_masks[u] = omu
            self.in_masks[u] = imu
            self.out_masks[v] = omv
            self.in_masks[v] = imv

    # ---- predicates on the current masks

    def _predicate(self) -> bool:
        kind = self.inst.kind
        if kind == "lbec":
            return not self._reaches_within(self.inst.s, self.inst.t,
                                            self.inst.ell - 1)
        if kind == "dsct":
            return not self._has_cycle_within(self.inst.ell)
        return self._mded_predicate()

    def _reaches_within(self, s: int, t: int, limit: int) -> bool:
        """True iff dist(s, t) <= limit on the surviving support."""
        if s == t:
            return True
        if limit <= 0:
            return False
        seen = 1 << s
        frontier = seen
        tbit = 1 << t
        for _ in range(limit):
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.out_masks[i]
            if nxt & tbit:
                return True
            frontier = nxt & ~seen
            if not frontier:
                return False
            seen |= frontier
        return False

    def _has_cycle_within(self, limit: int) -> bool:
        if limit < 2:
            return False
        for v in range(self.n):
            ins = self.in_masks[v]
            if not ins or not self.out_masks[v]:
                continue
            seen = 0
            frontier = self.out_masks[v]
            vbit = 1 << v
            for _ in range(limit - 1):
                frontier &= ~seen
                frontier &= ~vbit
                if not frontier:
                    break
                if frontier & ins:
                    return True
                seen |= frontier
                nxt = 0
                for i in _bits(frontier):
                    nxt |= self.out_masks[i]
                frontier = nxt
        return False

    def _ecc_at_least(self, src: int, target: int) -> bool:
        seen = 1 << src
        frontier = seen
        d = 0
        while True:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.out_masks[i]
            frontier = nxt & ~seen
            if not frontier:
                return d >= target
            d += 1
            if d >= target:
                return True
            seen |= frontier

    def _mded_predicate(self) -> bool:
        n = self.n
        if n == 0:
            return self.inst.ell <= 0
        # Connectivity first (strong for directed graphs).
        if self.directed:
            for masks in (self.out_masks, self.in_masks):
                seen = 1
                frontier = 1
                while frontier:
                    nxt = 0
                    for i in _bits(frontier):
                        nxt |= masks[i]
                    frontier = nxt & ~seen
                    seen |= nxt
                if seen != self.full_mask:
                    return False
        else:
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for i in _bits(frontier):
                    nxt |= self.out_masks[i]
                frontier = nxt & ~seen
                seen |= nxt
            if seen != self.full_mask:
                return False
        if n == 1:
            return self.inst.ell <= 0
        # Eccentricity scan from a reduced source set (see docstrings below).
        for src in self._diameter_sources():
            if self._ecc_at_least(src, self.inst.ell):
                return True
        return False

    def _diameter_sources(self) -> list[int]:
        """Sources whose eccentricities realize the diameter.

        Undirected: a diametral endpoint inside a pendant tree can be pushed
        to one of the tree's leaves, so the 2-core plus all degree-1 vertices
        suffice.  Directed (strongly connected): if v has a unique in-neighbor
        u and u has out-degree one, every path out of u starts u -> v, so
        dist(u, y) = 1 + dist(v, y) for y != u and the out-eccentricity of u
        dominates that of v (for y = u, the predecessor of u on a longest
        path out of v realizes the same value); dropping all such v is
        therefore safe, and if it drops everything the graph is one directed
        cycle where any single source suffices.
        """
        n = self.n
        if self.directed:
            srcs = []
            for v in range(n):
                if self.in_masks[v].bit_count() != 1:
                    srcs.append(v)
                    continue
                u = next(_bits(self.in_masks[v]))
                if self.out_masks[u].bit_count() != 1:
                    srcs.append(v)
            return srcs if srcs else [0]
        deg = [self.out_masks[v].bit_count() for v in range(n)]
        removed = bytearray(n)
        stack = [v for v in range(n) if deg[v] == 1]
        work = deg[:]
        while stack:
            v = stack.pop()
            if removed[v] or work[v] > 1:
                continue
            removed[v] = 1
            for u in _bits(self.out_masks[v]):
                if not removed[u]:
                    work[u] -= 1
                    if work[u] == 1:
                        stack.append(u)
        return [v for v in range(n) if not removed[v] or deg[v] == 1]

    # ---- enumeration

    def solve(self, budget: int, max_states: int) -> Verdict:
        tested = 0
        chosen: list[int] = []
        units = [u for u in self.units if u[0] <= budget]
        result: Optional[tuple[int, ...]] = None

        def rec(start: int, budget_left: int) -> bool:
            nonlocal tested, result
            tested += 1
            if tested > max_states:
                raise ResourceBudgetError(
                    f"cost-aware search exceeded {max_states} states")
            if self._predicate():
                out = []
                for ui in chosen:
                    out.extend(units[ui][2])
                result = tuple(sorted(out))
                return True
            for ui in range(start, len(units)):
                cost, pids, _ = units[ui]
                if cost > budget_left:
                    continue
                undo: list = []
                self._apply_pairs(pids, undo)
                chosen.append(ui)
                ok = rec(ui + 1, budget_left - cost)
                chosen.pop()
                self._undo(undo, len(undo))
                if ok:
                    return True
            return False

        found = rec(0, budget)
        if found:
            return Verdict(True, result, tested)
        return Verdict(False, None, tested)


def solve_bruteforce_costaware(inst: ProblemInstance, *, symmetry: bool = True,
                               max_states: int = 50_000_000) -> Verdict:
    """Exhaustive decision over deletion sets of total cost <= k.

    This is the composer-verification oracle: it works on cost-annotated
    graphs and counts the budget in deletion cost.  ``symmetry=False``
    disables every reduction except the severance quotient itself and is
    used to cross-check the reductions on small instances.
    """
    if inst.kind not in KINDS:
        raise InputError(f"unknown kind {inst.kind}")
    return _CostAwareSearch(inst, symmetry=symmetry).solve(inst.k, max_states)
