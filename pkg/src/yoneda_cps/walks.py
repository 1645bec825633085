"""Walk calculus on the annihilator graph.

A walk of length n is a vertex sequence p_0 .. p_n along edges.  Its
word is the reversed concatenation p_n (x) ... (x) p_0; two walks are
equivalent when they share both length and word.  Anchored walks start
at a degree-1 vertex and index a cohomology basis: length n walks sit
in cohomological degree n+1.

A walk is admissible when an equivalent anchored walk exists.  That
partner is unique and is found by a greedy right-to-left parse of the
word: each step takes the shortest normal suffix of the unconsumed part
that annihilates the previous vertex.
"""

import os
from dataclasses import dataclass

from .monomial import concat, left_min_annihilating_suffix
from .presentation import format_word

__all__ = [
    "Walk",
    "AnchoredWalk",
    "EventuallyPeriodicWalk",
    "WalkCapExceeded",
    "vertices_of",
    "word_of",
    "equivalent",
    "greedy_parse",
    "canonical_anchored",
    "is_admissible",
    "is_decomposable",
    "enumerate_anchored",
    "enumerate_walks",
    "equivalence_classes",
    "is_dense",
    "first_admissible_tail_edge",
    "display_walk",
    "parse_display_walk",
    "validate_walk",
]

DEFAULT_WALK_CAP = 10 ** 7


class WalkCapExceeded(RuntimeError):
    def __init__(self, cap):
        super().__init__(
            f"walk enumeration exceeded the cap of {cap}"
            " (raise YONEDA_CPS_MAX_WALK_CAP to allow more)")
        self.cap = cap


def walk_cap():
    raw = os.environ.get("YONEDA_CPS_MAX_WALK_CAP")
    return int(raw) if raw else DEFAULT_WALK_CAP


@dataclass(frozen=True)
class Walk:
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))

    @property
    def length(self):
        return len(self.vertices) - 1


@dataclass(frozen=True)
class AnchoredWalk(Walk):
    @property
    def internal_degree(self):
        return sum(len(v) for v in self.vertices)

    @property
    def cohomological_degree(self):
        return self.length + 1


def vertices_of(w):
    if isinstance(w, Walk):
        return w.vertices
    return tuple(tuple(v) for v in w)


def word_of(w):
    vs = vertices_of(w)
    out = ()
    for v in reversed(vs):
        out += v
    return out


def equivalent(p, q):
    p, q = vertices_of(p), vertices_of(q)
    return len(p) == len(q) and word_of(p) == word_of(q)


def display_walk(w):
    return [format_word(v) for v in vertices_of(w)]


def parse_display_walk(g, items):
    lookup = {format_word(v): v for v in g.vertices}
    out = []
    for item in items:
        if item not in lookup:
            raise ValueError(f"unknown vertex {item!r}; graph vertices are "
                             + ", ".join(sorted(lookup)))
        out.append(lookup[item])
    return tuple(out)


def validate_walk(g, w):
    vs = vertices_of(w)
    if not vs:
        raise ValueError("a walk needs at least one vertex")
    vertex_set = set(g.vertices)
    for v in vs:
        if v not in vertex_set:
            raise ValueError(f"{format_word(v)} is not a vertex of the graph")
    for a, b in zip(vs, vs[1:]):
        if (a, b) not in g.edge_word:
            raise ValueError(f"{format_word(a)} -> {format_word(b)} is not an edge")
    return vs


def greedy_parse(ideal, word, length, seed=None):
    """Right-to-left parse of `word` into a walk of the given length.

    Returns the vertex sequence in walk order (first vertex consumes the
    right end of the word) or None.  With a seed, the first vertex is
    forced; otherwise it is the last letter, so a successful unseeded
    parse is anchored.  Each later vertex is the shortest normal suffix
    of the unconsumed part annihilating its predecessor; the scan stops
    early once a suffix falls in the ideal, since every longer suffix
    then contains it.
    """
    word = tuple(word)
    if seed is None:
        if not word:
            return None
        q = [word[-1:]]
        rest = len(word) - 1
    else:
        seed = tuple(seed)
        if not seed or len(seed) > len(word) or word[len(word) - len(seed):] != seed:
            return None
        q = [seed]
        rest = len(word) - len(seed)
    for _ in range(length):
        prev = q[-1]
        cap = min(rest, ideal.max_relation_degree - 1)
        found = None
        for k in range(1, cap + 1):
            s = word[rest - k: rest]
            if ideal.contains(s):
                break
            if ideal.contains(s + prev):
                found = s
                break
        if found is None:
            return None
        q.append(found)
        rest -= len(found)
    if rest != 0:
        return None
    return tuple(q)


def canonical_anchored(g, w):
    """The unique anchored walk equivalent to `w`, or None.

    Every vertex the parse produces is a minimal annihilator of its
    predecessor reached from a generator, so the result is automatically
    a walk of the graph.
    """
    vs = vertices_of(w)
    return greedy_parse(g.ideal, word_of(vs), len(vs) - 1)


def is_admissible(g, w):
    return canonical_anchored(g, w) is not None


def is_decomposable(g, w):
    """Whether the class of an anchored walk is a product of lower ones.

    True exactly when some proper suffix walk is admissible, the
    length-0 suffix counting when the last vertex is a generator.  A
    suffix whose first edge is not admissible never parses, but an
    admissible first edge is not enough when relation degrees mix:
    an annihilator two steps up can concatenate into the ideal and
    kill the parse, so every candidate suffix is parsed outright,
    shortest first.
    """
    vs = validate_walk(g, w)
    n = len(vs) - 1
    if n < 1:
        raise ValueError("decomposability needs length at least 1")
    if len(vs[0]) != 1:
        raise ValueError("walk is not anchored")
    for j in range(1, n + 1):
        if len(vs[j]) == 1:
            return True
    for j in range(n - 1, 0, -1):
        if not g.admissible[(vs[j], vs[j + 1])]:
            continue
        if greedy_parse(g.ideal, word_of(vs[j:]), n - j) is not None:
            return True
    return False


def enumerate_anchored(g, max_length, cap=None):
    """Yield all anchored walks of length 0..max_length, shortest first.

    Deterministic: generators in alphabet order, successors in sorted
    order.  Counts every constructed walk against the cap.
    """
    if cap is None:
        cap = walk_cap()
    count = 0
    layer = [(v,) for v in g.g0]
    for n in range(max_length + 1):
        count += len(layer)
        if count > cap:
            raise WalkCapExceeded(cap)
        for vs in layer:
            yield AnchoredWalk(vs)
        if n == max_length:
            break
        layer = [vs + (t,) for vs in layer for t in g.out[vs[-1]]]


def enumerate_walks(g, length, cap=None):
    """All walks (any start vertex) of exactly the given length."""
    if cap is None:
        cap = walk_cap()
    count = 0
    layer = [(v,) for v in g.vertices]
    for _ in range(length):
        layer = [vs + (t,) for vs in layer for t in g.out[vs[-1]]]
        count += len(layer)
        if count > cap:
            raise WalkCapExceeded(cap)
    return layer


def equivalence_classes(g, length, cap=None):
    """Group all length-n walks by word; a class is {word, members}."""
    groups = {}
    for vs in enumerate_walks(g, length, cap):
        groups.setdefault(word_of(vs), []).append(vs)
    key = g.ideal.sort_key
    return [
        {"word": word, "members": sorted(members, key=lambda vs: [key(v) for v in vs])}
        for word, members in sorted(groups.items(), key=lambda kv: key(kv[0]))
    ]


@dataclass(frozen=True)
class EventuallyPeriodicWalk:
    """An infinite walk given as a finite prefix plus a repeating cycle.

    The prefix runs p_0 .. p_a; the cycle c_0 .. c_L is closed and
    spliced at c_0 == c_L == p_a, so vertex a+k is c_(k mod L).
    """
    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(tuple(v) for v in self.prefix))
        object.__setattr__(self, "cycle", tuple(tuple(v) for v in self.cycle))
        if not self.prefix:
            raise ValueError("prefix must contain at least the splice vertex")
        if len(self.cycle) < 2:
            raise ValueError("cycle must contain at least one edge")
        if self.cycle[0] != self.cycle[-1]:
            raise ValueError("cycle must be closed")
        if self.prefix[-1] != self.cycle[0]:
            raise ValueError("last prefix vertex must equal the cycle start")

    @property
    def splice(self):
        return self.prefix[-1]

    @property
    def cycle_length(self):
        return len(self.cycle) - 1

    def vertex(self, i):
        a = len(self.prefix) - 1
        if i <= a:
            return self.prefix[i]
        k = (i - a - 1) % self.cycle_length
        return self.cycle[k + 1]

    def unroll(self, length):
        return tuple(self.vertex(i) for i in range(length + 1))

    def to_json(self):
        return {
            "prefix": [format_word(v) for v in self.prefix],
            "cycle": [format_word(v) for v in self.cycle],
        }


def validate_periodic(g, w):
    validate_walk(g, w.prefix)
    validate_walk(g, w.cycle)
    return w


def first_admissible_tail_edge(g, w, start=1):
    """Index of the first admissible edge at position >= start, or None.

    Positions at and beyond the prefix repeat with the cycle, so
    scanning one full cycle past the splice covers every edge class.
    """
    a = len(w.prefix) - 1
    for i in range(start, a + w.cycle_length + 1):
        if g.admissible[(w.vertex(i), w.vertex(i + 1))]:
            return i
    return None


def is_dense(g, w, edge_index):
    """Whether the admissible edge at edge_index has admissible
    even-length extensions along the walk arbitrarily far.

    Tracks the anchored partner of the growing extension: the partner of
    the edge alone, then two more vertices per step.  The extension is
    admissible exactly when the partner rejoins the walk at an even
    offset.  If the carried partner word falls into the ideal, no longer
    extension of either parity parses (it would have the failed one as
    an odd prefix); if the partner state repeats at the same point of
    the cycle without rejoining, it never will.
    """
    ideal = g.ideal
    u, v = w.vertex(edge_index), w.vertex(edge_index + 1)
    if (u, v) not in g.edge_word:
        raise ValueError(f"{format_word(u)} -> {format_word(v)} is not an edge")
    if not g.admissible[(u, v)]:
        raise ValueError(
            f"edge {format_word(u)} -> {format_word(v)} is not admissible")
    partner = greedy_parse(ideal, concat(v, u), 1)
    assert partner is not None, "admissible edge must parse"
    if partner[0] == u:
        return True
    r = partner[1]
    a = len(w.prefix) - 1
    cyc = w.cycle_length
    ell = 1
    seen = set()
    while True:
        pos = edge_index + ell
        if pos >= a:
            state = (r, (pos - a) % cyc)
            if state in seen:
                return False
            seen.add(state)
        x = w.vertex(pos)
        # partner vertices at odd offsets extend the walk's on the right
        assert len(r) >= len(x) and r[:len(x)] == x, "partner lost the walk"
        nxt = w.vertex(pos + 1)
        s = left_min_annihilating_suffix(ideal, nxt, r)
        if s == nxt:
            return True
        r = concat(w.vertex(pos + 2), nxt[:len(nxt) - len(s)])
        if ideal.contains(r):
            return False
        ell += 2
