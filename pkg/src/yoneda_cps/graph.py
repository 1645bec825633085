"""The annihilator graph of a monomial algebra.

Vertices are the generators together with every minimal left-annihilator
word reachable from them; there is an edge m1 -> m2 exactly when m2 is a
minimal left annihilator of m1.  The graph is finite (annihilator words
are shorter than the longest relation) and is built by fixed-point
iteration from the generators.

An edge is admissible when its edge word (target tensor source) is one
of the defining relations; walk-level admissibility lives in `walks`.
"""

from dataclasses import dataclass, replace

from .monomial import MonomialIdeal, annihilator_generators
from .presentation import format_word

__all__ = [
    "CpsGraph",
    "GraphParams",
    "CircuitSummary",
    "build_graph",
    "mark_admissible_edges",
    "build_marked_graph",
    "graph_params",
    "circuits_and_sccs",
    "export_dot",
    "export_json",
]


@dataclass(frozen=True)
class CpsGraph:
    ideal: MonomialIdeal
    vertices: tuple    # letter tuples, sorted by (degree, index sequence)
    generation: dict   # vertex -> first generation index (generators are 0)
    g0: tuple          # the degree-1 vertices, always the whole alphabet
    edges: tuple       # (source, target) pairs, sorted
    admissible: dict   # edge -> bool; empty until mark_admissible_edges
    edge_word: dict    # edge -> target + source letters
    out: dict          # vertex -> tuple of successors, sorted
    inc: dict          # vertex -> tuple of predecessors, sorted

    @property
    def marked(self):
        return len(self.admissible) == len(self.edges)

    def is_g0(self, v):
        return len(v) == 1

    def display(self, v):
        return format_word(v)


def build_graph(ideal):
    """Grow the vertex set from the generators to its fixed point.

    Each generation step adds the annihilator sets of the previous
    step's new vertices; termination is guaranteed because annihilator
    words have degree at most (max relation degree) - 1.
    """
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal(ideal)
    g0 = tuple((name,) for name in ideal.presentation.generator_names)
    generation = {v: 0 for v in g0}
    edges = []
    frontier = list(g0)
    step = 0
    while frontier:
        step += 1
        new = []
        for m in frontier:
            for w in annihilator_generators(ideal, m):
                edges.append((m, w))
                if w not in generation:
                    generation[w] = step
                    new.append(w)
        frontier = new

    vertices = tuple(sorted(generation, key=ideal.sort_key))
    edges = tuple(sorted(set(edges), key=lambda e: (ideal.sort_key(e[0]), ideal.sort_key(e[1]))))
    edge_word = {(s, t): t + s for s, t in edges}
    out = {v: tuple(t for s, t in edges if s == v) for v in vertices}
    inc = {v: tuple(s for s, t in edges if t == v) for v in vertices}
    return CpsGraph(ideal, vertices, generation, g0, edges, {}, edge_word, out, inc)


def mark_admissible_edges(g):
    """Flag each edge whose edge word is literally a relation."""
    relations = set(g.ideal.relations)
    admissible = {e: (g.edge_word[e] in relations) for e in g.edges}
    # Generator-sourced edges always straddle a whole relation.
    for (s, t), flag in admissible.items():
        if len(s) == 1:
            assert flag, f"generator edge {format_word(s)}->{format_word(t)} must be admissible"
    return replace(g, admissible=admissible)


def build_marked_graph(presentation_or_ideal):
    ideal = presentation_or_ideal
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal(ideal)
    return mark_admissible_edges(build_graph(ideal))


@dataclass(frozen=True)
class GraphParams:
    edge_count: int        # script-E, the number of edges
    max_edge_class: int    # M, size of the largest equal-edge-word class
    max_leading_path: int  # L, longest anchored simple path whose last edge
                           # is admissible and whose interior edges are not
    bound_N: int           # smallest even integer >= 2E(M-1)+L+1
    weak_bound: int        # the cruder 2E^2+E+1 bound, for comparison
    l_defaulted: bool      # no qualifying path existed; L fell back to 1


def graph_params(g):
    assert g.marked, "mark_admissible_edges first"
    e_count = len(g.edges)
    classes = {}
    for e in g.edges:
        classes.setdefault(g.edge_word[e], []).append(e)
    m = max((len(c) for c in classes.values()), default=1)

    # L: DFS over anchored simple paths.  A path dies once any edge at
    # positions 1..k-2 is admissible, since that edge stays interior in
    # every extension.
    best = 0

    def extend(path, visited, last_edge_admissible_idx):
        nonlocal best
        v = path[-1]
        k = len(path) - 1  # current edge count
        for t in g.out[v]:
            if t in visited:
                continue
            adm = g.admissible[(v, t)]
            # the old last edge (index k-1) becomes interior if k-1 >= 1
            interior_bad = last_edge_admissible_idx is not None and last_edge_admissible_idx >= 1
            if interior_bad:
                continue
            if adm and k + 1 > best:
                best = k + 1
            extend(path + [t], visited | {t}, k if adm else None)

    for start in g.g0:
        extend([start], {start}, None)

    l_defaulted = best == 0
    l_value = 1 if l_defaulted else best
    raw = 2 * e_count * (m - 1) + l_value + 1
    bound_n = raw if raw % 2 == 0 else raw + 1
    weak = 2 * e_count * e_count + e_count + 1
    return GraphParams(e_count, m, l_value, bound_n, weak, l_defaulted)


@dataclass(frozen=True)
class CircuitSummary:
    sccs: tuple            # tuple of vertex tuples, each sorted, whole partition
    circuits: tuple        # one closed vertex cycle per nontrivial SCC, or ()
    shared_vertex: bool    # some SCC is not a simple cycle
    circuits_refused: bool # enumeration skipped because it may be exponential

    @property
    def has_cycle(self):
        return any(len(c) > 0 for c in self.circuits) or self.shared_vertex


def _tarjan_sccs(vertices, out):
    index = {}
    low = {}
    on_stack = set()
    stack = []
    sccs = []
    counter = [0]

    for root in vertices:
        if root in index:
            continue
        # iterative Tarjan: (vertex, iterator position)
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            succs = out[v]
            while pi < len(succs):
                w = succs[pi]
                pi += 1
                if w not in index:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(tuple(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return sccs


def circuits_and_sccs(g):
    """SCC partition, plus circuit enumeration when it is safe.

    shared_vertex is true when some strongly connected component is not
    a simple cycle; two distinct circuits then meet at a vertex and the
    circuit count may be exponential, so enumeration is refused
    (flagged, not raised).
    """
    sccs = _tarjan_sccs(g.vertices, g.out)
    key = g.ideal.sort_key
    nontrivial = []
    for comp in sccs:
        if len(comp) > 1 or (g.vertices and (comp[0], comp[0]) in g.edge_word):
            nontrivial.append(comp)

    shared = False
    for comp in nontrivial:
        members = set(comp)
        for v in comp:
            internal_out = sum(1 for t in g.out[v] if t in members)
            internal_in = sum(1 for s in g.inc[v] if s in members)
            if internal_out != 1 or internal_in != 1:
                shared = True
                break
        if shared:
            break

    circuits = []
    if not shared:
        for comp in nontrivial:
            members = set(comp)
            start = min(comp, key=key)
            cyc = [start]
            v = start
            while True:
                v = next(t for t in g.out[v] if t in members)
                cyc.append(v)
                if v == start:
                    break
            circuits.append(tuple(cyc))
        circuits.sort(key=lambda c: (len(c), [key(v) for v in c]))

    sccs_sorted = tuple(sorted((tuple(sorted(c, key=key)) for c in sccs),
                               key=lambda c: (len(c), [key(v) for v in c])))
    return CircuitSummary(sccs_sorted, tuple(circuits), shared, shared)


def export_dot(g):
    assert g.marked, "mark_admissible_edges first"
    lines = ["digraph annihilator_graph {"]
    for v in g.vertices:
        lines.append(f'  "{g.display(v)}";')
    for (s, t) in g.edges:
        style = "solid" if g.admissible[(s, t)] else "dashed"
        lines.append(f'  "{g.display(s)}" -> "{g.display(t)}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g):
    assert g.marked, "mark_admissible_edges first"
    return {
        "vertices": [
            {"word": g.display(v), "degree": len(v), "in_g0": len(v) == 1}
            for v in g.vertices
        ],
        "edges": [
            {
                "source": g.display(s),
                "target": g.display(t),
                "word": format_word(g.edge_word[(s, t)]),
                "admissible": g.admissible[(s, t)],
            }
            for (s, t) in g.edges
        ],
    }
