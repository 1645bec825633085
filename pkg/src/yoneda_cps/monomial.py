"""Word arithmetic and ideal-theoretic primitives for monomial ideals.

A word lies in the ideal exactly when some relation occurs in it as a
contiguous factor.  Factor containment is answered by an Aho-Corasick
automaton over the relation set, built once per ideal; everything else
(minimal annihilating suffixes, the annihilator sets that become graph
edges) reduces to repeated membership queries on short words.
"""

from .presentation import Presentation, Word, format_word, letters_of, make_presentation

__all__ = [
    "MonomialIdeal",
    "PreconditionError",
    "concat",
    "in_ideal",
    "is_minimal_generator",
    "left_min_annihilating_suffix",
    "annihilator_generators",
]


class PreconditionError(ValueError):
    """An operation precondition failed; `clause` names which one."""

    def __init__(self, clause, message):
        super().__init__(message)
        self.clause = clause


def concat(u, v):
    """u tensor v: degrees add, letters concatenate."""
    return letters_of(u) + letters_of(v)


class _Automaton:
    """Aho-Corasick matcher over the relation words.

    States are integers; state 0 is the root.  `hits[s]` lists the
    lengths of relations ending at state s (following suffix links), so
    scanning a text yields every occurrence endpoint in one pass.
    """

    def __init__(self, patterns):
        self.goto = [{}]
        self.fail = [0]
        self.hits = [()]
        for pat_index, pat in enumerate(patterns):
            s = 0
            for ch in pat:
                if ch not in self.goto[s]:
                    self.goto.append({})
                    self.fail.append(0)
                    self.hits.append(())
                    self.goto[s][ch] = len(self.goto) - 1
                s = self.goto[s][ch]
            self.hits[s] = self.hits[s] + ((len(pat), pat_index),)

        # BFS to fill failure links and merge hit sets down suffix chains.
        queue = list(self.goto[0].values())
        for s in queue:
            self.fail[s] = 0
        i = 0
        while i < len(queue):
            s = queue[i]
            i += 1
            for ch, t in self.goto[s].items():
                f = self.fail[s]
                while f and ch not in self.goto[f]:
                    f = self.fail[f]
                self.fail[t] = self.goto[f].get(ch, 0) if self.goto[f].get(ch, 0) != t else 0
                self.hits[t] = self.hits[t] + self.hits[self.fail[t]]
                queue.append(t)

    def step(self, state, ch):
        while state and ch not in self.goto[state]:
            state = self.fail[state]
        return self.goto[state].get(ch, 0)

    def scan(self, text):
        """Yield (end_position, pattern_length, pattern_index) for every occurrence."""
        s = 0
        for pos, ch in enumerate(text):
            s = self.step(s, ch)
            for length, pat_index in self.hits[s]:
                yield pos + 1, length, pat_index

    def has_match(self, text):
        s = 0
        for ch in text:
            s = self.step(s, ch)
            if self.hits[s]:
                return True
        return False


class MonomialIdeal:
    """The two-sided ideal generated by a presentation's relations.

    Immutable after construction; all queries are read-only.
    """

    def __init__(self, presentation):
        if not isinstance(presentation, Presentation):
            raise TypeError("MonomialIdeal expects a Presentation")
        self.presentation = presentation
        self.relations = tuple(r.letters for r in presentation.relations)
        self.max_relation_degree = max((len(r) for r in self.relations), default=0)
        self.factor_index = _Automaton(self.relations)
        self._alphabet = presentation.generator_names
        self._gen_index = {name: i for i, name in enumerate(self._alphabet)}

    @classmethod
    def from_relations(cls, generator_names, relations):
        return cls(make_presentation(generator_names, relations))

    def contains(self, word):
        return self.factor_index.has_match(letters_of(word))

    def occurrences(self, word):
        """All relation occurrences in word as (start, rel_index), sorted."""
        word = letters_of(word)
        occ = [(end - length, ri) for end, length, ri in self.factor_index.scan(word)]
        occ.sort()
        return occ

    def sort_key(self, word):
        """Deterministic word order: (degree, generator index sequence)."""
        word = letters_of(word)
        return (len(word), tuple(self._gen_index[c] for c in word))

    def normal_count(self, degree):
        """dim of the degree-j component: number of words avoiding all relations.

        DP over automaton states, never stepping into a state that
        completes a relation.
        """
        auto = self.factor_index
        counts = {0: 1}
        for _ in range(degree):
            nxt = {}
            for state, c in counts.items():
                for ch in self._alphabet:
                    t = auto.step(state, ch)
                    if auto.hits[t]:
                        continue
                    nxt[t] = nxt.get(t, 0) + c
            counts = nxt
        return sum(counts.values())


def in_ideal(ideal, w):
    return ideal.contains(w)


def is_minimal_generator(ideal, w):
    """True iff w is in the ideal and no proper factor of w is.

    Since the presentation's relation set is minimal, this is the same
    as w being literally one of the relations.
    """
    w = letters_of(w)
    return w in ideal.relations


def left_min_annihilating_suffix(ideal, w, m):
    """L(w, m): the shortest suffix w' of w with w' tensor m in the ideal.

    Preconditions (each reported by name when violated): m not in the
    ideal, w not in the ideal, and w tensor m in the ideal.
    """
    w, m = letters_of(w), letters_of(m)
    if ideal.contains(m):
        raise PreconditionError("m_in_ideal", f"m = {format_word(m)} lies in the ideal")
    if ideal.contains(w):
        raise PreconditionError("w_in_ideal", f"w = {format_word(w)} lies in the ideal")
    for k in range(1, len(w) + 1):
        suffix = w[len(w) - k:]
        if ideal.contains(suffix + m):
            return suffix
    raise PreconditionError(
        "concat_not_in_ideal",
        f"w tensor m = {format_word(w + m)} does not lie in the ideal",
    )


def annihilator_generators(ideal, m):
    """The set of minimal left annihilators of m, as a sorted tuple.

    Every w tensor m in the ideal (w normal) contains a relation
    straddling the w/m boundary, so each candidate is the left part of
    a relation split r = u tensor v with v a nonempty prefix of m.  The
    candidates are then filtered by the defining conditions: u normal
    and no proper suffix of u already annihilates m.
    """
    m = letters_of(m)
    if ideal.contains(m):
        raise PreconditionError("m_in_ideal", f"m = {format_word(m)} lies in the ideal")
    found = set()
    for r in ideal.relations:
        for split in range(1, min(len(r), len(m) + 1)):
            # v = last `split` letters of r must be a prefix of m
            if r[len(r) - split:] != m[:split]:
                continue
            u = r[:len(r) - split]
            if not u or u in found or ideal.contains(u):
                continue
            if left_min_annihilating_suffix(ideal, u, m) == u:
                found.add(u)
    for u in found:
        # Each annihilator sits inside a single straddling relation, so
        # its degree is capped by the largest relation degree minus one.
        assert len(u) <= ideal.max_relation_degree - 1
    return tuple(sorted(found, key=ideal.sort_key))
