"""Independent cohomology dimensions via word-graded complexes.

The bigraded dimensions are computed one word at a time: the complex of
a word has a basis in homological degree n for every splitting into n
nonempty parts none of which lies in the ideal, and the differential
merges adjacent parts, killing splittings whose merged part falls into
the ideal.  Only words covered by overlapping chains of relations
contribute, and those are enumerable by extending each relation through
overlaps; everything else has contractible complex.

A much slower degree-by-degree syzygy computation over the same field
is kept as a second, structurally different route for small windows.
"""

from dataclasses import dataclass

from .linalg import gf2_rank, gfp_rank
from .monomial import MonomialIdeal
from .walks import enumerate_anchored

__all__ = [
    "GradedVectorBasis",
    "BettiTable",
    "algebra_basis",
    "chain_words",
    "word_homology",
    "minimal_resolution",
    "minimal_resolution_dense",
    "cross_validate",
]


@dataclass(frozen=True)
class GradedVectorBasis:
    degree: int
    basis: tuple  # normal words, sorted

    def to_json(self):
        from .presentation import format_word
        return {"degree": self.degree,
                "basis": [format_word(w) for w in self.basis]}


def algebra_basis(ideal, degree):
    """All normal words of the given degree, in sorted order."""
    names = ideal.presentation.generator_names
    words = [()]
    for _ in range(degree):
        words = [w + (x,) for w in words for x in names
                 if not ideal.contains(w + (x,))]
    return GradedVectorBasis(degree, tuple(sorted(words, key=ideal.sort_key)))


@dataclass(frozen=True)
class BettiTable:
    entries: dict        # (i, j) -> dimension, zeros omitted
    max_i: int
    max_j: int
    field_char: int
    truncation_reached: bool  # some chain word fell beyond max_j

    def to_json(self):
        return {
            "max_i": self.max_i,
            "max_j": self.max_j,
            "field_char": self.field_char,
            "truncation_reached": self.truncation_reached,
            "entries": [
                {"i": i, "j": j, "dim": d}
                for (i, j), d in sorted(self.entries.items())
            ],
        }

    def to_text(self):
        cols = list(range(self.max_i + 1))
        lines = ["    " + "".join(f"{i:>6}" for i in cols)]
        for j in range(self.max_j + 1):
            row = [self.entries.get((i, j), 0) for i in cols]
            if any(row):
                lines.append(f"{j:>4}" + "".join(
                    f"{d:>6}" if d else "     ." for d in row))
        return "\n".join(lines)


def chain_words(ideal, max_len):
    """Words coverable by an overlapping chain of relation occurrences.

    Starting from each relation, extend by any relation that starts
    inside the word, matches the overlap, and runs past the end.  Words
    not coverable this way have contractible complexes: any uncrossed
    internal position splits them.  Returns (words, truncated).
    """
    relations = ideal.relations
    truncated = False
    words = set()
    stack = []
    for r in relations:
        if len(r) > max_len:
            truncated = True
        else:
            stack.append(r)
    while stack:
        w = stack.pop()
        if w in words:
            continue
        words.add(w)
        for r in relations:
            for s in range(max(1, len(w) - len(r) + 1), len(w)):
                overlap = len(w) - s
                if w[s:] == r[:overlap]:
                    new = w + r[overlap:]
                    if len(new) > max_len:
                        truncated = True
                    elif new not in words:
                        stack.append(new)
    return sorted(words, key=ideal.sort_key), truncated


def _min_occurrence_end(ideal, word):
    """m[a] = least end of a relation occurrence starting at or past a."""
    n = len(word)
    inf = n + 1
    m = [inf] * (n + 1)
    ends = {}
    for start, rel in ideal.occurrences(word):
        end = start + len(ideal.relations[rel])
        ends[start] = min(ends.get(start, inf), end)
    for a in range(n - 1, -1, -1):
        m[a] = min(ends.get(a, inf), m[a + 1])
    return m


def word_homology(ideal, word, max_i, field_char):
    """Homology dimensions {n: dim} of the word's splitting complex."""
    word = tuple(word)
    n_len = len(word)
    if n_len == 0:
        return {0: 1}
    min_end = _min_occurrence_end(ideal, word)
    max_parts = min(n_len, max_i + 1)

    layers = {n: [] for n in range(1, max_parts + 1)}

    def rec(a, cuts):
        parts = len(cuts) + 1
        if n_len < min_end[a]:
            layers[parts].append(cuts)
        if parts == max_parts:
            return
        for b in range(a + 1, min(min_end[a], n_len)):
            rec(b, cuts + (b,))

    rec(0, ())

    index = {n: {cuts: k for k, cuts in enumerate(layer)}
             for n, layer in layers.items()}
    ranks = {}
    for n in range(2, max_parts + 1):
        target = index[n - 1]
        rows = []
        for cuts in layers[n]:
            ext = (0,) + cuts + (n_len,)
            if field_char == 2:
                row = 0
                for t in range(1, n):
                    if min_end[ext[t - 1]] > ext[t + 1]:
                        row ^= 1 << target[cuts[:t - 1] + cuts[t:]]
            else:
                row = {}
                for t in range(1, n):
                    if min_end[ext[t - 1]] > ext[t + 1]:
                        col = target[cuts[:t - 1] + cuts[t:]]
                        row[col] = row.get(col, 0) + (1 if t % 2 else -1)
            rows.append(row)
        if field_char == 2:
            ranks[n] = gf2_rank(rows)
        else:
            ranks[n] = gfp_rank(rows, field_char)

    out = {}
    for n in range(1, min(n_len, max_i) + 1):
        dim = len(layers[n]) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        assert dim >= 0
        if dim:
            out[n] = dim
    return out


def _resolve_word(args):
    names, relations, word, max_i, field_char = args
    ideal = _worker_ideal(names, relations)
    return word, word_homology(ideal, word, max_i, field_char)


_WORKER_CACHE = {}


def _worker_ideal(names, relations):
    key = (names, relations)
    if key not in _WORKER_CACHE:
        _WORKER_CACHE[key] = MonomialIdeal.from_relations(names, relations)
    return _WORKER_CACHE[key]


def minimal_resolution(ideal, field_char=2, max_i=8, max_j=16, jobs=1,
                       progress=None):
    """Bigraded dimensions (i, j) -> dim for i <= max_i, j <= max_j."""
    assert field_char >= 2, "field characteristic"
    words, truncated = chain_words(ideal, max_j)
    names = tuple(ideal.presentation.generator_names)
    entries = {(0, 0): 1, (1, 1): len(names)}

    args = [(names, ideal.relations, w, max_i, field_char) for w in words]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_resolve_word, args, chunksize=8))
    else:
        results = []
        for k, a in enumerate(args):
            results.append(_resolve_word(a))
            if progress and (k + 1) % 50 == 0:
                progress(f"{k + 1}/{len(args)} words resolved")
    for word, hom in results:
        for n, dim in hom.items():
            key = (n, len(word))
            entries[key] = entries.get(key, 0) + dim
    if progress:
        progress(f"{len(args)} words resolved")
    return BettiTable(entries, max_i, max_j, field_char, truncated)


def cross_validate(g, table, cap=None):
    """Compare anchored walk counts against a Betti table.

    Walks of cohomological degree i <= max_i and internal degree
    j <= max_j must match the table exactly; walks outside the window
    are excluded rather than reported.  Returns mismatch records.
    """
    counts = {(0, 0): 1}
    for w in enumerate_anchored(g, table.max_i - 1, cap):
        i, j = w.cohomological_degree, w.internal_degree
        if j <= table.max_j:
            counts[(i, j)] = counts.get((i, j), 0) + 1
    keys = set(counts) | {k for k in table.entries
                          if k[0] <= table.max_i and k[1] <= table.max_j}
    mismatches = []
    for key in sorted(keys):
        walks = counts.get(key, 0)
        betti = table.entries.get(key, 0)
        if walks != betti:
            mismatches.append({"i": key[0], "j": key[1],
                               "walk_count": walks, "betti": betti})
    return mismatches


def minimal_resolution_dense(ideal, field_char, max_i, max_j):
    """Degree-by-degree syzygy route, structurally independent of the
    splitting complexes.  Exponential in max_j; use small windows.

    Modules are free with recorded generator degrees; kernels are found
    degree by degree, and new generators are kernel vectors independent
    of letter multiples of lower-degree kernel elements.  Minimality is
    asserted: no new generator may have a scalar component.
    """
    p = field_char
    names = ideal.presentation.generator_names
    basis = {0: [()]}
    for j in range(1, max_j + 1):
        basis[j] = [w + (x,) for w in basis[j - 1] for x in names
                    if not ideal.contains(w + (x,))]
    index = {j: {w: t for t, w in enumerate(ws)} for j, ws in basis.items()}

    entries = {(0, 0): 1}
    cur_gdegs = [0]
    cur_diff = None  # None marks the augmentation P_0 -> k

    def layer(gdegs, j):
        out = []
        for t, d in enumerate(gdegs):
            if 0 <= j - d:
                out.extend((t, w) for w in basis[j - d])
        return out

    for i in range(max_i):
        new_gdegs = []
        new_diff = []
        kernel_by_degree = {}
        for j in range(max_j + 1):
            dom = layer(cur_gdegs, j)
            if not dom:
                kernel_by_degree[j] = []
                continue
            if cur_diff is None:
                kernel = [] if j == 0 else [{bw: 1} for bw in dom]
            else:
                cod = layer(prev_gdegs, j)
                cod_index = {bw: k for k, bw in enumerate(cod)}
                images = []
                for (t, w) in dom:
                    img = {}
                    for (s, u), c in cur_diff[t].items():
                        prod = w + u
                        if ideal.contains(prod):
                            continue
                        k = cod_index[(s, prod)]
                        img[k] = (img.get(k, 0) + c) % p
                    images.append(img)
                # kernel of the map: null space of the cod x dom matrix
                from .linalg import gfp_nullspace
                mat = [[0] * len(dom) for _ in range(len(cod))]
                for d_idx, img in enumerate(images):
                    for k, c in img.items():
                        mat[k][d_idx] = c
                null = gfp_nullspace(mat, len(dom), p)
                kernel = [{dom[t]: v for t, v in enumerate(vec) if v}
                          for vec in null]
            kernel_by_degree[j] = kernel

            # span of letter multiples of the lower-degree kernel
            dom_index = {bw: k for k, bw in enumerate(dom)}
            span_rows = []
            for z in kernel_by_degree.get(j - 1, []):
                for x in names:
                    vec = [0] * len(dom)
                    ok = True
                    for (t, w), c in z.items():
                        prod = (x,) + w
                        if ideal.contains(prod):
                            continue
                        # left letter multiple shifts the word
                        key = (t, prod)
                        if key not in dom_index:
                            ok = False
                            break
                        vec[dom_index[key]] = (vec[dom_index[key]] + c) % p
                    if ok and any(vec):
                        span_rows.append(vec)
            # eliminate, then pick kernel vectors outside the span
            pivots = {}

            def reduce_vec(vec):
                vec = vec[:]
                for col in range(len(vec)):
                    if vec[col] % p and col in pivots:
                        f = vec[col]
                        vec = [(a - f * b) % p for a, b in zip(vec, pivots[col])]
                return vec

            def insert(vec):
                vec = reduce_vec(vec)
                lead = next((c for c in range(len(vec)) if vec[c] % p), None)
                if lead is None:
                    return False
                inv = pow(vec[lead], p - 2, p)
                pivots[lead] = [(a * inv) % p for a in vec]
                return True

            for row in span_rows:
                insert(row)
            for z in kernel:
                vec = [0] * len(dom)
                for bw, c in z.items():
                    vec[dom_index[bw]] = c
                if insert(vec):
                    # a genuinely new generator in degree j
                    for (t, w), c in z.items():
                        assert len(w) > 0 or c % p == 0, \
                            "minimality: no scalar components in new generators"
                    entries[(i + 1, j)] = entries.get((i + 1, j), 0) + 1
                    new_gdegs.append(j)
                    new_diff.append(dict(z))
        prev_gdegs = cur_gdegs
        cur_gdegs = new_gdegs
        cur_diff = new_diff
        if not cur_gdegs:
            break
    return BettiTable(entries, max_i, max_j, p,
                      truncation_reached=True)
