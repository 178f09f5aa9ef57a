from importlib import resources

import pytest

from polyneigh import construct
from polyneigh.construct import (
    EXAMPLE_FACETS,
    FIXTURE_FILES,
    cyclic,
    example,
    join,
    join_family,
    join_family_counts,
    load_fixture,
    pyramid,
    pyramid_over_cyclic,
    pyramid_over_cyclic_counts,
    simplex,
)
from polyneigh.errors import BadRange, UnknownExample
from polyneigh.hull import Polytope, enumerate_facets

from conftest import analyze


@pytest.mark.parametrize("name", sorted(FIXTURE_FILES))
def test_fixture_bytes_match_constants(name):
    shipped = resources.files("polyneigh").joinpath("fixtures", FIXTURE_FILES[name]).read_text()
    assert shipped == construct.fixture_text(name)
    assert load_fixture(name) == example(name)


def test_example_lookup():
    assert example("p46") == example("P46")
    assert {n: example(n).n_vertices for n in EXAMPLE_FACETS} == {
        "P46": 6, "P58": 8, "P59": 9, "P610": 10}
    with pytest.raises(UnknownExample):
        example("P99")
    with pytest.raises(UnknownExample):
        load_fixture("nope")


def test_examples_are_01():
    for name in EXAMPLE_FACETS:
        assert all(x in (0, 1) for v in example(name).vertices for x in v)


@pytest.mark.parametrize("d, n, facets", [(2, 5, 5), (3, 6, 8), (4, 6, 9), (4, 8, 20), (5, 8, 20)])
def test_cyclic_facets(d, n, facets):
    assert len(enumerate_facets(cyclic(d, n))) == facets


def test_cyclic_bad_range():
    with pytest.raises(BadRange):
        cyclic(4, 4)
    with pytest.raises(BadRange):
        cyclic(1, 5)


def test_simplex():
    for d in range(1, 6):
        fs = enumerate_facets(simplex(d))
        assert len(fs) == d + 1
        assert all(len(s) == d for s in fs.incident_sets)


def test_pyramid_counts():
    tri = Polytope(2, ((0, 0), (1, 0), (0, 1)))
    assert len(enumerate_facets(pyramid(tri))) == 4
    p = example("P46")
    for r, facets in ((1, 10), (2, 11), (3, 12)):
        q = pyramid(p, r)
        assert q.ambient_dim == 4 + r and q.n_vertices == 6 + r
        assert len(enumerate_facets(q)) == facets
    with pytest.raises(BadRange):
        pyramid(p, 0)


def test_join_counts():
    seg = Polytope(1, ((0,), (1,)))
    fs = enumerate_facets(join(seg, seg))
    assert len(fs) == 4 and all(len(s) == 3 for s in fs.incident_sets)

    p = example("P46")
    q = join(p, p)
    assert (q.ambient_dim, q.n_vertices) == (9, 12)
    assert len(enumerate_facets(q)) == 18

    s4 = simplex(4)
    fs = enumerate_facets(join(s4, s4))
    assert len(fs) == 10 and all(len(s) == 9 for s in fs.incident_sets)


def test_join_family_counts():
    assert join_family_counts(6, 1) == construct.JoinFamilyCounts(6, 1, 9, 12, 18)
    assert join_family_counts(5, 1) == construct.JoinFamilyCounts(5, 1, 9, 10, 10)
    assert join_family_counts(6, 2) == construct.JoinFamilyCounts(6, 2, 19, 24, 36)
    assert join_family_counts(7, 0) == construct.JoinFamilyCounts(7, 0, 4, 7, 14)
    # Joins add vertex and facet counts, dimensions add plus one.
    for n in range(5, 9):
        prev = join_family_counts(n, 0)
        for m in range(1, 4):
            cur = join_family_counts(n, m)
            assert cur.d == 2 * prev.d + 1
            assert cur.f0 == 2 * prev.f0
            assert cur.f_facets == 2 * prev.f_facets
            prev = cur
    with pytest.raises(BadRange):
        join_family_counts(4, 1)


@pytest.mark.parametrize("n, m", [(5, 0), (6, 0), (5, 1), (6, 1), (7, 1)])
def test_join_family_built(n, m):
    p = join_family(n, m)
    c = join_family_counts(n, m)
    assert (p.ambient_dim, p.n_vertices) == (c.d, c.f0)
    assert len(analyze(p)[0]) == c.f_facets


@pytest.mark.parametrize("d, v, facets", [(5, 7, 10), (6, 8, 11), (5, 9, 21)])
def test_pyramid_over_cyclic_counts(d, v, facets):
    assert pyramid_over_cyclic_counts(d, v) == facets


def test_pyramid_over_cyclic_hull():
    for d, v in ((5, 7), (6, 8), (5, 8)):
        p = pyramid_over_cyclic(d, v)
        assert (p.ambient_dim, p.n_vertices) == (d, v)
        assert len(enumerate_facets(p)) == pyramid_over_cyclic_counts(d, v)


def test_pyramid_over_cyclic_excess():
    for d in range(5, 9):
        for v in range(d + 2, d + 7):
            assert pyramid_over_cyclic_counts(d, v) - v == (v + 4 - d) * (v - d - 1) // 2
    with pytest.raises(BadRange):
        pyramid_over_cyclic_counts(4, 8)
    with pytest.raises(BadRange):
        pyramid_over_cyclic(5, 6)
