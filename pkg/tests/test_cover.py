import random
from fractions import Fraction

import pytest

from indcut import generators
from indcut.cover import (CoverInvariantError, QuasiCover, Windmill, alpha, auto_cover,
                          build_windmills, check_quasi_cover, dense_bound, dense_cover,
                          format_cover, min_degree_bound, parse_cover, windmill_bound,
                          windmill_cover)
from indcut.graph import Graph, triangles
from shapes import complete, cycle, friendship2, prism


def fs(*groups):
    return tuple(frozenset(g) for g in groups)


# --- bounds ---------------------------------------------------------------------


@pytest.mark.parametrize("delta, expected", [(3, Fraction(1, 6)), (4, Fraction(1, 10)),
                                             (5, Fraction(1, 10)), (6, Fraction(1, 14))])
def test_alpha(delta, expected):
    assert alpha(delta) == expected


def test_bound_values():
    assert windmill_bound(10, 4) == 4 and windmill_bound(10, 5) == 4
    assert dense_bound(10, 3) == 1
    assert min_degree_bound(0.75) == 4
    with pytest.raises(ValueError):
        min_degree_bound(0.5)


# --- quasi-cover check ----------------------------------------------------------


def test_check_examples():
    assert check_quasi_cover(complete(4), QuasiCover(fs({0, 1, 2}), "windmill"))
    assert not check_quasi_cover(prism(), QuasiCover(fs({0, 1, 2}), "windmill"))
    assert check_quasi_cover(cycle(6), QuasiCover((), "windmill"))


# --- windmill cover -------------------------------------------------------------


def test_windmill_examples():
    c = windmill_cover(prism())
    assert c.groups == fs({0, 1, 2}, {3, 4, 5}) and len(c) == windmill_bound(6, 3)
    c = windmill_cover(complete(4))
    assert len(c) == 1 and len(c) <= windmill_bound(4, 3)
    c = windmill_cover(friendship2())
    assert len(c.windmills) == 1 and c.windmills[0].p == 2
    assert len(c) == 2 == windmill_bound(5, 4)


def test_windmill_type_checks():
    g = friendship2()
    Windmill(0, ((1, 2), (3, 4))).check(g)
    with pytest.raises(CoverInvariantError):
        Windmill(0, ((1, 3),)).check(g)
    with pytest.raises(CoverInvariantError):
        Windmill(0, ((1, 2), (1, 2))).check(g)
    with pytest.raises(CoverInvariantError):
        Windmill(0, ()).check(g)


def test_windmill_repair_cases():
    # path of triangles 0-1-2, 2-3-4, 4-5-6: greedy grabs {0,1,2} and {4,5,6};
    # the middle one touches both and is quasi-covered already
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
    assert check_quasi_cover(g, windmill_cover(g, validate=True))
    # a triangle hanging off a leaf forces re-centring
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert check_quasi_cover(g, windmill_cover(g, validate=True))


def test_windmills_are_disjoint_on_random_graphs():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(3, 20)
        g = generators.triangle_soup(n, rng.randint(3, 6), rng)
        mills = build_windmills(g, validate=True)
        seen = set()
        for w in mills:
            assert not (w.vertices & seen)
            seen |= w.vertices
        c = windmill_cover(g)
        assert check_quasi_cover(g, c)
        assert all(len(grp) == 3 and tuple(sorted(grp)) in set(triangles(g)) for grp in c.groups)
        assert len(c) <= windmill_bound(g.n, g.max_degree())


# --- dense cover ----------------------------------------------------------------


def test_dense_examples():
    assert dense_cover(complete(5)).groups == fs(range(5))
    assert len(dense_cover(complete(5))) == dense_bound(10, 3)
    assert dense_cover(prism()).groups == fs({0, 1, 2}, {3, 4, 5})
    assert dense_cover(cycle(7)).groups == ()


def test_dense_groups_share_no_triangle_edge():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(3, 16)
        g = generators.gnp(n, rng.uniform(0.2, 0.9), rng)
        c = dense_cover(g)
        assert check_quasi_cover(g, c)
        owner = {}
        for i, grp in enumerate(c.groups):
            for a, b, d in triangles(g):
                if {a, b, d} <= grp:
                    for e in ((a, b), (a, d), (b, d)):
                        assert owner.setdefault(e, i) == i


# --- auto and serialization -------------------------------------------------------


def test_auto_picks_smaller_with_ties_to_windmill():
    assert auto_cover(complete(5)).method == "dense"
    assert auto_cover(prism()).method == "windmill"


def test_auto_on_sparse_random_graph():
    g = generators.maxdeg(40, 4, 0.5, seed=0)
    assert len(auto_cover(g)) <= 16


def test_format_roundtrip():
    c = windmill_cover(prism())
    text = format_cover(c)
    assert text.splitlines()[0] == "method windmill"
    assert text.splitlines()[1] == "1 2 3"
    back = parse_cover(text)
    assert back.groups == c.groups and back.method == "windmill"
    with pytest.raises(ValueError):
        parse_cover("1 2 3\n")
