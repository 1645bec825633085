"""Finiteness decisions: global dimension, growth, generation, chains.

All four invariants of the cohomology algebra reduce to properties of
the annihilator graph.  Global dimension is finite exactly when the
graph is acyclic.  Growth is the largest number of cycle components met
by a single walk, infinite when two circuits share a vertex.  Finite
generation reduces to decomposability of all anchored walks at two
consecutive bounded lengths, checked by a pruned search; a negative
answer carries the indecomposable walk and, when one of its repeats
certifies, an eventually periodic walk on which no decomposition
mechanism fires.  The chain conditions are local: every
circuit vertex must have unique continuation on the relevant side and
every circuit edge must be admissible.
"""

import math
from dataclasses import dataclass

from .graph import build_marked_graph, circuits_and_sccs, graph_params
from .monomial import MonomialIdeal, left_min_annihilating_suffix
from .presentation import format_word
from .walks import (EventuallyPeriodicWalk, WalkCapExceeded,
                    greedy_parse, is_decomposable, is_dense, walk_cap)

__all__ = [
    "INFINITY",
    "GlobalDimensionResult",
    "FgVerdict",
    "NoetherianVerdict",
    "AnalysisReport",
    "global_dimension",
    "gk_dimension",
    "finitely_generated",
    "noetherian",
    "check_tail_conditions",
    "analyze",
    "report_to_json",
]

INFINITY = math.inf

GLDIM_NOTE = ("convention: an acyclic graph whose longest anchored walk has "
              "length n has cohomology vanishing above degree n+1, so the "
              "global dimension reported is n+1")


def _fmt_dim(v):
    return "infinity" if v == INFINITY else v


def _fmt_edge(e):
    return {"source": format_word(e[0]), "target": format_word(e[1])}


@dataclass(frozen=True)
class GlobalDimensionResult:
    value: object          # int or INFINITY
    witness: tuple | None  # longest anchored walk when finite, else a circuit
    note: str = GLDIM_NOTE

    def to_json(self):
        return {
            "value": _fmt_dim(self.value),
            "witness": [format_word(v) for v in self.witness] if self.witness else None,
            "note": self.note,
        }


def global_dimension(g):
    summary = circuits_and_sccs(g)
    if summary.has_cycle:
        witness = summary.circuits[0] if summary.circuits else None
        return GlobalDimensionResult(INFINITY, witness)
    depth = {}
    succ = {}

    def walk_depth(v):
        if v in depth:
            return depth[v]
        best, pick = 0, None
        for t in g.out[v]:
            d = walk_depth(t) + 1
            if d > best:
                best, pick = d, t
        depth[v] = best
        succ[v] = pick
        return best

    start = max(g.g0, key=walk_depth)
    path = [start]
    while succ.get(path[-1]):
        path.append(succ[path[-1]])
    return GlobalDimensionResult(len(path), tuple(path))


def gk_dimension(g):
    """Largest number of cycle components any one walk can visit."""
    summary = circuits_and_sccs(g)
    if summary.shared_vertex:
        return INFINITY
    comp_of = {}
    is_cycle_comp = {}
    for idx, comp in enumerate(summary.sccs):
        members = set(comp)
        cyclic = len(comp) > 1 or (comp[0], comp[0]) in g.edge_word
        for v in comp:
            comp_of[v] = idx
        is_cycle_comp[idx] = cyclic
    best = {}

    def score(idx):
        if idx in best:
            return best[idx]
        base = 1 if is_cycle_comp[idx] else 0
        members = set(summary.sccs[idx])
        succ = 0
        for v in members:
            for t in g.out[v]:
                if comp_of[t] != idx:
                    succ = max(succ, score(comp_of[t]))
        best[idx] = base + succ
        return best[idx]

    return max((score(i) for i in range(len(summary.sccs))), default=0)


@dataclass(frozen=True)
class FgVerdict:
    value: bool
    method: str
    bound_n: int | None = None
    checked_lengths: tuple | None = None
    generator_degree_bound: object = None
    witness_walk: tuple | None = None
    witness_circuit: tuple | None = None
    witness_periodic: EventuallyPeriodicWalk | None = None

    def to_json(self):
        out = {"value": self.value, "method": self.method}
        if self.bound_n is not None:
            out["bound_N"] = self.bound_n
        if self.checked_lengths is not None:
            out["checked_lengths"] = list(self.checked_lengths)
        if self.generator_degree_bound is not None:
            out["generator_degree_bound"] = _fmt_dim(self.generator_degree_bound)
        witness = {}
        if self.witness_walk is not None:
            witness["indecomposable_walk"] = [format_word(v) for v in self.witness_walk]
        if self.witness_circuit is not None:
            witness["circuit"] = [format_word(v) for v in self.witness_circuit]
        if self.witness_periodic is not None:
            witness["periodic_walk"] = self.witness_periodic.to_json()
        out["witness"] = witness or None
        return out


def check_tail_conditions(g, w):
    """True when an eventually periodic walk defeats finite generation.

    The tail must contain no dense admissible edge and no two admissible
    edges of opposite index parity.  Positions past the prefix repeat
    with the cycle, so a window of the prefix plus two full turns covers
    every tail edge and both parities of every cycle position.
    """
    a = len(w.prefix) - 1
    window = a + 2 * w.cycle_length
    adm = [i for i in range(1, window)
           if g.admissible[(w.vertex(i), w.vertex(i + 1))]]
    if not adm:
        return True
    if any(i % 2 != adm[0] % 2 for i in adm):
        return False
    return not any(is_dense(g, w, i) for i in adm)


def _circuit_avoiding_generators(g):
    """A closed cycle through no degree-1 vertex, or None."""
    allowed = {v for v in g.vertices if len(v) > 1}
    color = {}

    def dfs(v, stack, on_path):
        color[v] = 1
        stack.append(v)
        on_path.add(v)
        for t in g.out[v]:
            if t not in allowed:
                continue
            if t in on_path:
                i = stack.index(t)
                return stack[i:] + [t]
            if color.get(t, 0) == 0:
                cyc = dfs(t, stack, on_path)
                if cyc:
                    return cyc
        stack.pop()
        on_path.discard(v)
        color[v] = 2
        return None

    for v in sorted(allowed, key=g.ideal.sort_key):
        if color.get(v, 0) == 0:
            cyc = dfs(v, [], set())
            if cyc:
                return tuple(cyc)
    return None


def _access_path(g, targets):
    """Shortest path from a degree-1 vertex to `targets`, no interior
    degree-1 vertices."""
    from collections import deque
    targets = set(targets)
    parent = {}
    queue = deque()
    for v in g.g0:
        parent.setdefault(v, None)
        queue.append(v)
    while queue:
        v = queue.popleft()
        if v in targets:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for t in g.out[v]:
            if len(t) == 1 or t in parent:
                continue
            parent[t] = v
            queue.append(t)
    raise AssertionError("every vertex is reachable from the generators")


def _pump(g, circuit):
    """Eventually periodic walk entering the circuit and looping forever."""
    path = _access_path(g, set(circuit))
    entry = path[-1]
    k = circuit.index(entry)
    cycle = circuit[k:] + circuit[1:k + 1] if k else circuit
    return EventuallyPeriodicWalk(path, cycle)


def _search_indecomposable(g, targets, cap):
    """Depth-first hunt for an indecomposable anchored walk at a target
    length.  A branch is cut when every completion is certainly
    decomposable: a degree-1 vertex would leave an anchored suffix in
    every completion, and a rejoined partner chain grafts onto any
    continuation, keeping the suffix at its edge admissible forever.
    Survivors at a target length get the honest decomposability check.

    Each admissible tail edge carries its own partner chain (j, ell, r):
    the anchored partner of the length-ell extension of the edge at j,
    with r the partner's top vertex.  A chain whose carried word falls
    into the ideal is dropped for good: no suffix from that edge ever
    parses again, of either parity.
    """
    ideal = g.ideal
    horizon = max(targets)
    target_set = set(targets)
    budget = [cap]

    def extend(walk, chains):
        budget[0] -= 1
        if budget[0] < 0:
            raise WalkCapExceeded(cap)
        n = len(walk) - 1
        if n in target_set and not is_decomposable(g, walk):
            return tuple(walk)
        if n == horizon:
            return None
        for t in g.out[walk[-1]]:
            if len(t) == 1:
                continue  # anchored suffix in every completion
            j = n  # index of the new edge; tail edges start at index 1
            new_chains = list(chains)
            if j >= 1 and g.admissible[(walk[-1], t)]:
                pair = greedy_parse(ideal, t + walk[-1], 1)
                assert pair is not None, "admissible edge words always parse"
                new_chains.append((j, 1, pair[1]))
            walk.append(t)
            pruned = False
            advanced = []
            for pj, ell, r in new_chains:
                dead = False
                while pj + ell + 2 <= len(walk) - 1:
                    nxt = walk[pj + ell + 1]
                    s = left_min_annihilating_suffix(ideal, nxt, r)
                    if s == nxt:
                        pruned = True  # even-offset rejoin
                        break
                    r = walk[pj + ell + 2] + nxt[:len(nxt) - len(s)]
                    if ideal.contains(r):
                        dead = True
                        break
                    ell += 2
                if pruned:
                    break
                if not dead:
                    advanced.append((pj, ell, r))
            if not pruned:
                found = extend(walk, advanced)
                if found is not None:
                    walk.pop()
                    return found
            walk.pop()
        return None

    for start in g.g0:
        found = extend([start], [])
        if found is not None:
            return found
    return None


def _periodic_witness(g, q, attempts=400):
    """Eventually periodic walk certifying the failure, or None.

    Candidates come from repeated vertices of the indecomposable walk:
    cutting at a repeat closes a cycle the walk already traverses.
    Repeats an even distance apart are tried first since they keep the
    parity pattern of admissible edges stable under pumping.  Each
    candidate must pass the full tail check; a walk whose repeats all
    fail it yields no certificate.
    """
    n = len(q) - 1
    positions = {}
    for idx in range(1, n + 1):
        positions.setdefault(q[idx], []).append(idx)
    candidates = []
    for parity in (0, 1):
        for a in range(1, n):
            for b in positions.get(q[a], []):
                if b > a and (b - a) % 2 == parity:
                    candidates.append((a, b))
    for a, b in candidates[:attempts]:
        w = EventuallyPeriodicWalk(q[:a + 1], q[a:b + 1])
        if check_tail_conditions(g, w):
            return w
    return None


def finitely_generated(g, params=None, cap=None):
    if cap is None:
        cap = walk_cap()
    if params is None:
        params = graph_params(g)
    summary = circuits_and_sccs(g)
    if not summary.has_cycle:
        gd = global_dimension(g)
        return FgVerdict(True, "finite_global_dimension",
                         generator_degree_bound=gd.value)
    circuit = _circuit_avoiding_generators(g)
    if circuit is None:
        # Every tail of every infinite walk revisits a degree-1 vertex,
        # and edges leaving degree-1 vertices are admissible and dense.
        return FgVerdict(True, "all_circuits_meet_generators",
                         bound_n=params.bound_N,
                         generator_degree_bound=params.bound_N + 1)
    # Pumping the circuit certifies failure only when every admissible
    # edge leaves a degree-1 vertex: then the pumped tail has none.  The
    # simple-path statistic L cannot stand in for this premise, since an
    # admissible edge on a circuit can be invisible to simple paths (the
    # single relation xyxy puts an admissible loop on xy while L = 1).
    if all(g.is_g0(src) for (src, dst) in g.edges
           if g.admissible[(src, dst)]):
        witness = _pump(g, circuit)
        assert check_tail_conditions(g, witness), \
            "pumped circuit witness must defeat both mechanisms"
        return FgVerdict(False, "circuit_avoiding_generators",
                         bound_n=params.bound_N,
                         witness_circuit=circuit,
                         witness_periodic=witness)
    targets = (params.bound_N, params.bound_N + 1)
    found = _search_indecomposable(g, targets, cap)
    if found is None:
        return FgVerdict(True, "no_indecomposables_at_bound",
                         bound_n=params.bound_N, checked_lengths=targets,
                         generator_degree_bound=params.bound_N + 1)
    # best effort: the verdict stands on the indecomposable walk alone
    witness = _periodic_witness(g, found)
    return FgVerdict(False, "indecomposable_at_bound",
                     bound_n=params.bound_N, checked_lengths=targets,
                     witness_walk=found, witness_periodic=witness)


@dataclass(frozen=True)
class NoetherianVerdict:
    side: str
    value: bool
    reason: str
    witness_vertex: tuple | None = None
    witness_edge: tuple | None = None

    def to_json(self):
        out = {"side": self.side, "value": self.value, "reason": self.reason}
        if self.witness_vertex is not None:
            out["witness_vertex"] = format_word(self.witness_vertex)
        if self.witness_edge is not None:
            out["witness_edge"] = _fmt_edge(self.witness_edge)
        return out


def noetherian(g, side):
    """Chain condition on one side: every circuit vertex must continue
    uniquely (out-edges for left, in-edges for right) and every circuit
    edge must be admissible.  The degree test runs first; once it holds,
    the cycle components are simple cycles and their edges enumerable.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    summary = circuits_and_sccs(g)
    circuit_vertices = [v for comp in summary.sccs
                        if len(comp) > 1 or (comp[0], comp[0]) in g.edge_word
                        for v in comp]
    if not circuit_vertices:
        return NoetherianVerdict(side, True, "acyclic_graph")
    adj = g.out if side == "left" else g.inc
    for v in sorted(circuit_vertices, key=g.ideal.sort_key):
        if len(adj[v]) != 1:
            return NoetherianVerdict(side, False, "circuit_vertex_with_branching",
                                     witness_vertex=v)
    assert not summary.shared_vertex, \
        "unique continuation forces simple cycle components"
    for comp in summary.sccs:
        members = set(comp)
        if len(comp) == 1 and (comp[0], comp[0]) not in g.edge_word:
            continue
        for s in comp:
            for t in g.out[s]:
                if t in members and not g.admissible[(s, t)]:
                    return NoetherianVerdict(side, False,
                                             "non_admissible_circuit_edge",
                                             witness_edge=(s, t))
    return NoetherianVerdict(side, True, "unique_admissible_circuits")


@dataclass(frozen=True)
class AnalysisReport:
    graph: object
    params: object
    gldim: GlobalDimensionResult
    gk_dim: object
    fg: FgVerdict
    noetherian_left: NoetherianVerdict
    noetherian_right: NoetherianVerdict
    notes: tuple


def analyze(presentation, cap=None):
    g = build_marked_graph(MonomialIdeal(presentation))
    params = graph_params(g)
    gldim = global_dimension(g)
    gk = gk_dimension(g)
    fg = finitely_generated(g, params, cap)
    noeth_l = noetherian(g, "left")
    noeth_r = noetherian(g, "right")

    # cross checks between the decisions
    if noeth_l.value or noeth_r.value:
        assert gk != INFINITY and gk <= 1, "chain conditions force linear growth"
    if gldim.value != INFINITY:
        assert fg.value, "finite global dimension forces finite generation"
    if not fg.value:
        assert gldim.value == INFINITY

    notes = [GLDIM_NOTE]
    if params.l_defaulted:
        notes.append("no anchored simple path ends in an admissible edge with "
                     "non-admissible interior; the path bound defaulted to 1")
    summary = circuits_and_sccs(g)
    if summary.circuits_refused:
        notes.append("circuit enumeration refused: two circuits share a vertex")
    return AnalysisReport(g, params, gldim, gk, fg, noeth_l, noeth_r, tuple(notes))


def report_to_json(report):
    params = report.params
    return {
        "gldim": report.gldim.to_json(),
        "gk_dim": _fmt_dim(report.gk_dim),
        "finitely_generated": report.fg.to_json(),
        "noetherian_left": report.noetherian_left.to_json(),
        "noetherian_right": report.noetherian_right.to_json(),
        "params": {
            "edge_count": params.edge_count,
            "max_edge_class": params.max_edge_class,
            "max_leading_path": params.max_leading_path,
            "bound_N": params.bound_N,
            "weak_bound": params.weak_bound,
        },
        "notes": list(report.notes),
    }
