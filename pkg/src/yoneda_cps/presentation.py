"""Monomial presentations of connected graded algebras.

A presentation is an alphabet of degree-1 generators together with a
finite set of monomial relations (words of degree >= 2).  The quotient
of the free tensor algebra by the two-sided ideal generated by the
relations is the algebra every other module works with.

Words are represented two ways: the `Word` dataclass at API boundaries,
and plain tuples of generator names ("letter tuples") inside the hot
paths.  `letters_of` coerces either form, plus plain strings for
single-letter alphabets, which keeps tests readable.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json

__all__ = [
    "Generator",
    "Word",
    "Presentation",
    "PresentationError",
    "MinimalityViolation",
    "LeadingWordsResult",
    "LEADING_WORDS_CAVEAT",
    "letters_of",
    "format_word",
    "parse_presentation",
    "serialize_presentation",
    "validate_minimality",
    "leading_words",
    "make_presentation",
]


class PresentationError(ValueError):
    """Raised for malformed presentation input.

    For syntax errors in JSON text, `line` and `column` locate the
    problem; both are None for structural errors.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Generator:
    name: str
    index: int


@dataclass(frozen=True)
class Word:
    """A monomial: a tuple of generator names, leftmost tensor factor first."""

    letters: tuple
    degree: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "degree", len(self.letters))

    def __str__(self):
        return format_word(self.letters)


def letters_of(w):
    """Coerce a Word, letter tuple/list, or bare string into a letter tuple.

    Strings split into characters, so "abc" means a (x) b (x) c.  Only
    safe for single-character generator names, which all fixtures use.
    """
    if isinstance(w, Word):
        return w.letters
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def format_word(letters):
    """Display form of a letter tuple: plain join for one-char alphabets."""
    letters = letters_of(letters)
    if not letters:
        return "1"
    if all(len(name) == 1 for name in letters):
        return "".join(letters)
    return "*".join(letters)


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple          # of Generator, in index order
    relations: tuple         # of Word, sorted by (degree, index sequence)
    relation_degrees: tuple  # degrees aligned with relations

    @property
    def generator_names(self):
        return tuple(g.name for g in self.alphabet)

    def index_of(self, name):
        for g in self.alphabet:
            if g.name == name:
                return g.index
        raise KeyError(name)


@dataclass(frozen=True)
class MinimalityViolation:
    """A relation made redundant by another relation occurring inside it."""

    redundant: Word
    witness: Word
    position: int


def _index_map(names):
    return {name: i for i, name in enumerate(names)}


def _sort_key(letters, index):
    return (len(letters), tuple(index[c] for c in letters))


def _contains_factor(haystack, needle):
    """First position where needle occurs contiguously in haystack, else None."""
    n, m = len(haystack), len(needle)
    for start in range(n - m + 1):
        if haystack[start:start + m] == needle:
            return start
    return None


def _prune_nonminimal(relation_tuples):
    """Drop relations that properly contain another relation as a factor.

    Relations equal to each other were deduplicated before this runs, so
    "contains a different relation" is the only redundancy left.
    """
    kept = []
    for r in relation_tuples:
        redundant = False
        for other in relation_tuples:
            if other is r or len(other) >= len(r):
                continue
            if _contains_factor(r, other) is not None:
                redundant = True
                break
        if not redundant:
            kept.append(r)
    return kept


def make_presentation(generator_names, relation_letter_tuples):
    """Build a validated Presentation from raw pieces.

    Deduplicates, prunes non-minimal relations, and sorts by
    (degree, index sequence).  Raises PresentationError on an empty
    alphabet, unknown generator tokens, or relations of degree < 2.
    """
    names = list(generator_names)
    if not names:
        raise PresentationError("empty alphabet")
    if len(set(names)) != len(names):
        raise PresentationError("duplicate generator names")
    index = _index_map(names)

    cleaned = []
    for rel in relation_letter_tuples:
        rel = letters_of(rel)
        for tok in rel:
            if tok not in index:
                raise PresentationError(f"unknown generator {tok!r} in relation {format_word(rel)}")
        if len(rel) < 2:
            raise PresentationError(f"relation {format_word(rel) if rel else '1'} has degree {len(rel)} < 2")
        cleaned.append(rel)

    cleaned = sorted(set(cleaned), key=lambda r: _sort_key(r, index))
    cleaned = _prune_nonminimal(cleaned)

    alphabet = tuple(Generator(name, i) for i, name in enumerate(names))
    relations = tuple(Word(r) for r in cleaned)
    degrees = tuple(len(r) for r in cleaned)
    return Presentation(alphabet, relations, degrees)


def parse_presentation(source):
    """Parse the input schema into a Presentation.

    Accepts JSON text or an already-decoded dict:

        {"generators": ["a", "b"], "relations": [["a", "b"]],
         "generator_order": ["a", "b"]}        # optional

    generator_order, when present, must be a permutation of generators
    and fixes the index order used for sorting and for deg-lex in
    leading_words.
    """
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise PresentationError(f"syntax error: {e.msg}", line=e.lineno, column=e.colno) from e
    else:
        data = source

    if not isinstance(data, dict):
        raise PresentationError("top-level value must be an object")
    unknown = set(data) - {"generators", "relations", "generator_order"}
    if unknown:
        raise PresentationError(f"unknown keys {sorted(unknown)}")
    gens = data.get("generators")
    rels = data.get("relations")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise PresentationError("generators must be an array of tokens")
    if not isinstance(rels, list) or not all(isinstance(r, list) for r in rels):
        raise PresentationError("relations must be an array of token arrays")

    order = data.get("generator_order")
    if order is not None:
        if sorted(order) != sorted(gens):
            raise PresentationError("generator_order must be a permutation of generators")
        gens = order
    return make_presentation(gens, [tuple(r) for r in rels])


def serialize_presentation(p):
    """Inverse of parse_presentation: emit the input schema as a dict."""
    return {
        "generators": list(p.generator_names),
        "relations": [list(r.letters) for r in p.relations],
    }


def validate_minimality(p):
    """List every relation containing another relation (or a duplicate).

    Empty on anything parse_presentation produced, since the parser
    prunes; useful for hand-built Presentation values.
    """
    violations = []
    rels = [r.letters for r in p.relations]
    for i, r in enumerate(rels):
        for k, other in enumerate(rels):
            if i == k:
                continue
            if other == r and k < i:
                violations.append(MinimalityViolation(Word(r), Word(other), 0))
                break
            if len(other) < len(r):
                pos = _contains_factor(r, other)
                if pos is not None:
                    violations.append(MinimalityViolation(Word(r), Word(other), pos))
                    break
    return violations


LEADING_WORDS_CAVEAT = (
    "leading words generate the associated monomial ideal only if the "
    "supplied polynomials are a Groebner basis for their ideal; no "
    "completion is performed"
)


@dataclass(frozen=True)
class LeadingWordsResult:
    presentation: Presentation
    caveat: str


def _deglex_key(letters, index):
    # Larger key = larger word.  Degree first, then letter indices left
    # to right, where a larger generator index means a larger letter.
    return (len(letters), tuple(index[c] for c in letters))


def leading_words(generator_names, polynomials, order=None):
    """Extract deg-lex leading words from homogeneous polynomial relations.

    Each polynomial is a list of (coefficient, word) terms; coefficients
    are rationals (int, Fraction, or numeric strings), words are token
    lists.  `order` lists generators from smallest to largest; defaults
    to generator_names order.  Returns a LeadingWordsResult whose
    presentation is the pruned monomial presentation of the leading
    words and whose caveat always carries the Groebner-basis warning.

    Raises PresentationError on a zero polynomial (after merging like
    terms) or a non-homogeneous polynomial.
    """
    names = list(order) if order is not None else list(generator_names)
    if sorted(names) != sorted(generator_names):
        raise PresentationError("order must be a permutation of generators")
    index = _index_map(names)

    leads = []
    for poly_num, poly in enumerate(polynomials):
        merged = {}
        for coeff, word in poly:
            word = letters_of(word)
            for tok in word:
                if tok not in index:
                    raise PresentationError(f"unknown generator {tok!r} in polynomial {poly_num}")
            merged[word] = merged.get(word, Fraction(0)) + Fraction(coeff)
        terms = [(w, c) for w, c in merged.items() if c != 0]
        if not terms:
            raise PresentationError(f"polynomial {poly_num} is zero")
        degrees = {len(w) for w, _ in terms}
        if len(degrees) != 1:
            raise PresentationError(f"polynomial {poly_num} is not homogeneous (degrees {sorted(degrees)})")
        lead = max((w for w, _ in terms), key=lambda w: _deglex_key(w, index))
        leads.append(lead)

    presentation = make_presentation(names, leads)
    return LeadingWordsResult(presentation, LEADING_WORDS_CAVEAT)
