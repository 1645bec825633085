import pytest

from conftest import W, graph
from yoneda_cps.monomial import MonomialIdeal
from yoneda_cps.presentation import make_presentation
from yoneda_cps.walks import (AnchoredWalk, EventuallyPeriodicWalk,
                              WalkCapExceeded, canonical_anchored,
                              display_walk, enumerate_anchored,
                              enumerate_walks, equivalence_classes,
                              equivalent, first_admissible_tail_edge,
                              greedy_parse, is_admissible, is_decomposable,
                              is_dense, parse_display_walk, validate_periodic,
                              validate_walk, walk_cap, word_of)


def mixed_graph():
    """Relations of mixed degree where suffix grafting can die."""
    from yoneda_cps.graph import build_marked_graph
    p = make_presentation("xy", [("y", "x"), ("x", "x", "x"), ("x", "x", "y")])
    return build_marked_graph(MonomialIdeal(p))


def test_word_of_reverses_vertex_order():
    assert word_of(W("b", "cda")) == ("c", "d", "a", "b")
    assert word_of(W("c", "ab", "cd")) == ("c", "d", "a", "b", "c")


def test_equivalent_needs_length_and_word():
    assert equivalent(W("b", "cda", "ab"), W("ab", "cd", "ab"))
    assert equivalent(W("b", "cda"), W("ab", "cd"))
    assert not equivalent(W("c", "ab"), W("ab", "cd"))
    assert not equivalent(W("b", "cda", "ab"), W("ab", "cd"))


def test_validate_walk_errors():
    g = graph("abc_cdab")
    with pytest.raises(ValueError, match="at least one vertex"):
        validate_walk(g, ())
    with pytest.raises(ValueError, match="not a vertex"):
        validate_walk(g, W("abc"))
    with pytest.raises(ValueError, match="not an edge"):
        validate_walk(g, W("b", "ab"))


def test_parse_display_walk():
    g = graph("abc_cdab")
    assert parse_display_walk(g, ["b", "cda"]) == W("b", "cda")
    with pytest.raises(ValueError, match="unknown vertex"):
        parse_display_walk(g, ["b", "nope"])
    assert display_walk(W("b", "cda")) == ["b", "cda"]


def test_greedy_parse_unseeded_is_anchored():
    ideal = graph("abc_cdab").ideal
    assert greedy_parse(ideal, "cdab", 1) == W("b", "cda")
    assert greedy_parse(ideal, "cdabc", 2) == W("c", "ab", "cd")
    assert greedy_parse(ideal, "bcda", 1) is None   # nothing annihilates a
    assert greedy_parse(ideal, "cdab", 2) is None   # word too short
    assert greedy_parse(ideal, "", 0) is None


def test_greedy_parse_seeded():
    ideal = graph("abc_cdab").ideal
    assert greedy_parse(ideal, "cdabc", 2, seed=("c",)) == W("c", "ab", "cd")
    assert greedy_parse(ideal, "cdabc", 1, seed=("c",)) is None  # leftover cd
    # seed must be a suffix of the word
    assert greedy_parse(ideal, "cdab", 1, seed=("a",)) is None
    assert greedy_parse(ideal, "cdab", 0, seed=("a", "b")) is None


def test_greedy_parse_stops_when_suffix_enters_ideal():
    g = mixed_graph()
    # third step would need a suffix of yx, but yx itself is a relation
    assert greedy_parse(g.ideal, "yxxxxx", 3) is None
    assert greedy_parse(g.ideal, "xxx", 1) == W("x", "xx")


def test_canonical_anchored_known_values():
    g = graph("abc_cdab")
    assert canonical_anchored(g, W("ab", "cd")) == W("b", "cda")
    assert canonical_anchored(g, W("cd", "ab")) is None
    assert canonical_anchored(g, W("b", "cda")) == W("b", "cda")
    assert canonical_anchored(g, W("ab", "cd", "ab")) == W("b", "cda", "ab")


def test_admissibility_of_single_edges():
    ga, gb = graph("abc_cdab"), graph("abc_cdab_bcda")
    assert is_admissible(ga, W("ab", "cd"))
    assert is_admissible(gb, W("ab", "cd"))
    assert not is_admissible(ga, W("cd", "ab"))
    assert not is_admissible(gb, W("cd", "ab"))


def test_admissible_prefix_with_inadmissible_extension():
    g = mixed_graph()
    assert is_admissible(g, W("xx", "x"))
    assert not is_admissible(g, W("xx", "x", "xx"))
    assert not is_admissible(g, W("xx", "x", "xx", "y"))


def test_anchored_walks_are_admissible():
    for name in ("abc_cdab", "abc_cdab_bcda", "x2y_family"):
        g = graph(name)
        for w in enumerate_anchored(g, 5):
            assert canonical_anchored(g, w.vertices) == w.vertices


def test_is_decomposable_known_values():
    g = graph("abc_cdab")
    assert is_decomposable(g, W("c", "ab", "cd", "ab"))
    assert not is_decomposable(g, W("b", "cda", "ab"))
    assert not is_decomposable(g, W("b", "cda"))
    assert is_decomposable(g, W("c", "ab", "cd", "ab", "cd"))


def test_is_decomposable_requires_anchored_positive_length():
    g = graph("abc_cdab")
    with pytest.raises(ValueError, match="length at least 1"):
        is_decomposable(g, W("b"))
    with pytest.raises(ValueError, match="not anchored"):
        is_decomposable(g, W("ab", "cd"))


def test_is_decomposable_parses_suffixes_outright():
    """An admissible first suffix edge whose parse later dies must not count."""
    from yoneda_cps.graph import build_marked_graph
    p = make_presentation("xy", [("x", "y", "x"), ("x", "y", "y", "x"),
                                 ("y", "x", "x", "y"), ("y", "x", "y", "y")])
    g = build_marked_graph(MonomialIdeal(p))
    walk = W("x", "xyy", "yx", "xy", "xy", "xy")
    validate_walk(g, walk)
    assert not is_decomposable(g, walk)


def test_enumerate_anchored_counts_and_order():
    g = graph("abc_cdab")
    walks = list(enumerate_anchored(g, 7))
    by_len = {}
    for w in walks:
        assert isinstance(w, AnchoredWalk)
        by_len.setdefault(w.length, []).append(w.vertices)
    assert {n: len(v) for n, v in by_len.items()} == \
        {0: 4, 1: 2, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2}
    assert by_len[1] == [W("b", "cda"), W("c", "ab")]
    assert by_len[2] == [W("b", "cda", "ab"), W("c", "ab", "cd")]


def test_anchored_walk_degrees():
    w = AnchoredWalk(W("b", "cda"))
    assert w.length == 1
    assert w.cohomological_degree == 2
    assert w.internal_degree == 4


def test_enumerate_walks_and_classes():
    g = graph("abc_cdab")
    walks = enumerate_walks(g, 2)
    assert sorted(walks) == sorted([
        W("b", "cda", "ab"), W("c", "ab", "cd"), W("ab", "cd", "ab"),
        W("cd", "ab", "cd"), W("cda", "ab", "cd"),
    ])
    classes = equivalence_classes(g, 2)
    by_word = {c["word"]: c["members"] for c in classes}
    assert by_word[tuple("abcdab")] == [W("b", "cda", "ab"), W("ab", "cd", "ab")]
    assert len(by_word) == 4


def test_equivalence_invariants_exhaustive_small():
    """Same word and length force the expected shared structure."""
    for name in ("abc_cdab", "abc_cdab_bcda"):
        g = graph(name)
        anchored = {n: set() for n in range(7)}
        for w in enumerate_anchored(g, 6):
            anchored[w.length].add(w.vertices)
        for n in range(1, 7):
            for cls in equivalence_classes(g, n):
                members = cls["members"]
                first = members[0]
                steps = [first[2 * k + 1] + first[2 * k] for k in range((n + 1) // 2)]
                for vs in members[1:]:
                    if n % 2 == 0:
                        assert vs[-1] == first[-1]
                    assert [vs[2 * k + 1] + vs[2 * k]
                            for k in range((n + 1) // 2)] == steps
                assert sum(1 for vs in members if vs in anchored[n]) <= 1


def test_walk_cap_env(monkeypatch):
    monkeypatch.delenv("YONEDA_CPS_MAX_WALK_CAP", raising=False)
    assert walk_cap() == 10 ** 7
    monkeypatch.setenv("YONEDA_CPS_MAX_WALK_CAP", "10")
    assert walk_cap() == 10
    g = graph("abc_cdab")
    with pytest.raises(WalkCapExceeded):
        list(enumerate_anchored(g, 6))
    with pytest.raises(WalkCapExceeded):
        enumerate_walks(g, 8)


def test_explicit_cap_argument():
    g = graph("abc_cdab")
    with pytest.raises(WalkCapExceeded) as e:
        list(enumerate_anchored(g, 6, cap=3))
    assert "3" in str(e.value)


def test_periodic_walk_validation():
    with pytest.raises(ValueError, match="prefix"):
        EventuallyPeriodicWalk((), (("a",), ("a",)))
    with pytest.raises(ValueError, match="at least one edge"):
        EventuallyPeriodicWalk((("a",),), (("a",),))
    with pytest.raises(ValueError, match="closed"):
        EventuallyPeriodicWalk((("a",),), (("a",), ("b",)))
    with pytest.raises(ValueError, match="splice|cycle start"):
        EventuallyPeriodicWalk((("a",),), (("b",), ("b",)))


def test_periodic_walk_indexing():
    w = EventuallyPeriodicWalk(W("c", "ab"), W("ab", "cd", "ab"))
    assert w.splice == ("a", "b")
    assert w.cycle_length == 2
    assert [w.vertex(i) for i in range(6)] == \
        list(W("c", "ab", "cd", "ab", "cd", "ab"))
    assert w.unroll(3) == W("c", "ab", "cd", "ab")
    assert w.to_json() == {"prefix": ["c", "ab"], "cycle": ["ab", "cd", "ab"]}


def test_validate_periodic_needs_real_edges():
    g = graph("abc_cdab")
    w = EventuallyPeriodicWalk(W("c", "ab"), W("ab", "cd", "ab"))
    assert validate_periodic(g, w) is w
    bogus = EventuallyPeriodicWalk(W("b", "cda"), W("cda", "cda"))
    with pytest.raises(ValueError, match="not an edge"):
        validate_periodic(g, bogus)


def test_first_admissible_tail_edge():
    g = graph("abc_cdab")
    w = EventuallyPeriodicWalk(W("c", "ab"), W("ab", "cd", "ab"))
    assert first_admissible_tail_edge(g, w) == 1
    assert first_admissible_tail_edge(g, w, start=2) == 3
    g0 = graph("x_square")
    loop = EventuallyPeriodicWalk(W("x"), W("x", "x"))
    assert first_admissible_tail_edge(g0, loop) == 1


def test_density_flips_between_the_two_examples():
    w = EventuallyPeriodicWalk(W("c", "ab"), W("ab", "cd", "ab"))
    assert is_dense(graph("abc_cdab"), w, 1)
    assert not is_dense(graph("abc_cdab_bcda"), w, 1)


def test_density_on_the_two_chain_graph():
    g = graph("two_chain_overlap")
    pump = EventuallyPeriodicWalk(W("p", "wxyz"), W("wxyz", "pq", "wxyz"))
    assert is_dense(g, pump, 1)
    alternating = EventuallyPeriodicWalk(
        W("p", "wxyz"), W("wxyz", "pq", "WXYZ", "pq", "wxyz"))
    assert not is_dense(g, alternating, 1)
    assert not is_dense(g, alternating, 3)


def test_density_rejects_bad_edges():
    g = graph("abc_cdab")
    w = EventuallyPeriodicWalk(W("c", "ab"), W("ab", "cd", "ab"))
    with pytest.raises(ValueError, match="not admissible"):
        is_dense(g, w, 2)
    with pytest.raises(ValueError, match="not an edge"):
        is_dense(g, EventuallyPeriodicWalk(W("c", "c"), W("c", "c")), 0)


def test_density_partner_death_returns_false():
    """A partner word falling into the ideal ends all longer extensions."""
    g = mixed_graph()
    w = EventuallyPeriodicWalk(W("xx"), W("xx", "x", "xx", "y", "xx"))
    validate_periodic(g, w)
    assert not is_dense(g, w, 0)


def test_density_anchored_edge_is_dense():
    g = graph("x_square")
    loop = EventuallyPeriodicWalk(W("x"), W("x", "x"))
    assert is_dense(g, loop, 0)
