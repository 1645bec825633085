import pytest

from conftest import W, graph
from yoneda_cps.ext import (ext_class, generators_up_to, hilbert_series,
                            poincare_table, yoneda_mul)
from yoneda_cps.walks import enumerate_anchored


def cls(name, *words):
    return ext_class(graph(name), W(*words))


def test_ext_class_fields():
    c = cls("abc_cdab", "b", "cda")
    assert c.walk.vertices == W("b", "cda")
    assert c.cohomological_degree == 2
    assert c.internal_degree == 4
    assert c.to_json() == {"walk": ["b", "cda"], "i": 2, "j": 4}


def test_ext_class_rejects_inadmissible():
    g = graph("abc_cdab")
    with pytest.raises(ValueError):
        ext_class(g, W("cd", "ab"))


def test_ext_class_canonicalizes():
    c = cls("abc_cdab", "ab", "cd")
    assert c.walk.vertices == W("b", "cda")


def test_product_with_a_generator():
    g = graph("abc_cdab")
    got = yoneda_mul(g, cls("abc_cdab", "b", "cda"), cls("abc_cdab", "c"))
    assert got.walk.vertices == W("c", "ab", "cd")
    assert got.cohomological_degree == 3
    assert got.internal_degree == 5


def test_product_zero():
    g = graph("abc_cdab")
    left = cls("abc_cdab", "ab", "cd")     # canonical form b -> cda
    right = cls("abc_cdab", "c", "ab")
    assert yoneda_mul(g, left, right) is None


def test_product_square_of_a_two_step_class():
    g = graph("abc_cdab")
    c = cls("abc_cdab", "b", "cda")
    got = yoneda_mul(g, c, c)
    assert got.walk.vertices == W("b", "cda", "ab", "cd")


def test_product_grading_is_additive():
    g = graph("abc_cdab")
    classes = [ext_class(g, w.vertices) for w in enumerate_anchored(g, 4)]
    for p in classes:
        for q in classes:
            got = yoneda_mul(g, p, q)
            if got is None:
                continue
            assert got.cohomological_degree == \
                p.cohomological_degree + q.cohomological_degree
            assert got.internal_degree == p.internal_degree + q.internal_degree


def test_identity_like_degree_zero():
    # no degree-0 class exists in this model; products start at generators
    g = graph("x_square")
    x = ext_class(g, W("x"))
    got = yoneda_mul(g, x, x)
    assert got.walk.vertices == W("x", "x")
    assert (got.cohomological_degree, got.internal_degree) == (2, 2)


def test_generators_up_to_known_list():
    g = graph("abc_cdab")
    out = [(c.cohomological_degree, display(c)) for c in generators_up_to(g, 6)]
    assert out == [
        (1, ["a"]), (1, ["b"]), (1, ["c"]), (1, ["d"]),
        (2, ["b", "cda"]), (2, ["c", "ab"]),
        (3, ["b", "cda", "ab"]),
    ]


def display(c):
    return ["".join(v) for v in c.walk.vertices]


def test_generators_enlarged_example_keep_appearing():
    """New indecomposable classes appear at every even degree here."""
    g = graph("abc_cdab_bcda")
    out = generators_up_to(g, 8)
    per_degree = {}
    for c in out:
        per_degree[c.cohomological_degree] = per_degree.get(c.cohomological_degree, 0) + 1
    assert per_degree == {1: 4, 2: 3, 4: 1, 6: 1, 8: 1}


def test_poincare_table_first_example():
    table = poincare_table(graph("abc_cdab"), 8)
    expect = {(0, 0): 1, (1, 1): 4}
    for i in range(2, 9):
        expect[(i, 2 * i - 1)] = 1
        expect[(i, 2 * i)] = 1
    assert table.entries == expect
    assert table.to_json() == {
        "truncation": 8,
        "entries": [{"i": i, "j": j, "dim": d}
                    for (i, j), d in sorted(expect.items())],
    }


def test_hilbert_series_first_example():
    h = hilbert_series(graph("abc_cdab"))
    assert str(h) == "(1 + 3*y - 2*y^2) / (1 - y)"
    assert h.series(12) == [1, 4] + [2] * 11


def test_hilbert_series_enlarged_example():
    h = hilbert_series(graph("abc_cdab_bcda"))
    assert str(h) == "(1 + 3*y - y^2) / (1 - y)"
    assert h.series(6) == [1, 4, 3, 3, 3, 3, 3]


def test_hilbert_series_polynomial_case():
    h = hilbert_series(graph("xy_single"))
    assert str(h) == "1 + 2*y + y^2"
    assert h.series(5) == [1, 2, 1, 0, 0, 0]


def test_hilbert_series_matches_table_on_every_fixture():
    for name in ("x_square", "xy_single", "abc_cdab", "abc_cdab_bcda",
                 "x2y_family", "two_chain_overlap", "sklyanin_leading"):
        g = graph(name)
        coeffs = hilbert_series(g).series(9)
        table = poincare_table(g, 9)
        by_i = {}
        for (i, _), d in table.entries.items():
            by_i[i] = by_i.get(i, 0) + d
        assert coeffs == [by_i.get(i, 0) for i in range(10)], name


def test_series_json_shape():
    out = hilbert_series(graph("abc_cdab")).to_json()
    assert out == {"numerator": [1, 3, -2], "denominator": [1, -1]}
