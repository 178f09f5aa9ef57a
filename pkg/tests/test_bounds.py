import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyneigh import bounds
from polyneigh.bounds import (
    BoundReport,
    KnownBound,
    barnette,
    binomial_representation,
    dim5_average_bound,
    dim5_lower_bound,
    f_from_g,
    g_from_f,
    g_theorem_face_bound,
    is_m_sequence,
    m_matrix,
    mn_known,
    msn,
    neighborly_max_facets,
    pseudopower,
    report_known,
    table1,
    vandermonde,
)
from polyneigh.construct import cyclic, simplex
from polyneigh.errors import BadRange, FvectorInconsistent, NotMSequence
from polyneigh.hull import enumerate_facets

from conftest import analyze


def test_m4_rows():
    ctx = m_matrix(4)
    assert ctx.matrix == ((1, 5, 10, 10, 5), (0, 1, 4, 6, 3), (0, 0, 1, 2, 1))


@pytest.mark.parametrize("d", range(2, 11))
def test_m_matrix_shape(d):
    ctx = m_matrix(d)
    assert ctx.rows == d // 2 + 1
    assert all(len(r) == d + 1 for r in ctx.matrix)
    # Row 0 is the f-vector of the d-simplex.
    assert ctx.matrix[0] == tuple(math.comb(d + 1, j) for j in range(d + 1))
    for i in range(ctx.rows):
        assert ctx.entry(i, i) == 1
        assert all(ctx.entry(i, j) == 0 for j in range(i))


def test_g_from_f_examples():
    _, st4 = analyze(cyclic(4, 6))
    assert g_from_f((1, *st4.f_vector), 4).g == (1, 1, 1)
    _, sx = analyze(simplex(5))
    assert g_from_f((1, *sx.f_vector), 5).g == (1, 0, 0)
    _, c610 = analyze(cyclic(6, 10))
    assert g_from_f((1, *c610.f_vector), 6).g == (1, 3, 6, 10)


def test_g_from_f_errors():
    with pytest.raises(FvectorInconsistent):
        g_from_f((1, 6, 15, 18, 10), 4)
    with pytest.raises(NotMSequence):
        g_from_f(f_from_g((1, 1, 3), 4), 4)
    with pytest.raises(BadRange):
        g_from_f((1, 6, 15), 4)


@given(st.integers(2, 9), st.lists(st.integers(0, 30), min_size=1, max_size=5))
def test_f_from_g_round_trip(d, tail):
    g = [1] + tail[: d // 2]
    f = f_from_g(g, d)
    g_padded = tuple(g + [0] * (d // 2 + 1 - len(g)))
    if is_m_sequence(g_padded):
        assert g_from_f(f, d).g == g_padded
    else:
        with pytest.raises(NotMSequence):
            g_from_f(f, d)


def test_binomial_representation():
    assert binomial_representation(6, 2) == [(4, 2)]
    assert binomial_representation(7, 2) == [(4, 2), (1, 1)]
    for a in range(0, 60):
        for i in range(1, 5):
            terms = binomial_representation(a, i)
            assert sum(math.comb(t, k) for t, k in terms) == a
            tops = [t for t, _ in terms]
            assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
            assert all(t >= k for t, k in terms)


def test_is_m_sequence_examples():
    assert is_m_sequence((1, 3, 6, 10))
    assert not is_m_sequence((1, 3, 6, 11))
    assert not is_m_sequence((1, 2, 4))
    assert is_m_sequence((1, 2, 3))
    assert not is_m_sequence((1, 0, 1))
    assert not is_m_sequence((2, 1))
    assert not is_m_sequence((1, -1))
    assert is_m_sequence((1,))


def _monomials(nvars, degree):
    return list(itertools.combinations_with_replacement(range(nvars), degree))


def _max_next(a, degree, nvars):
    """Largest number of degree+1 monomials whose degree-`degree` divisors all
    lie in some set of `a` degree-`degree` monomials."""
    low = _monomials(nvars, degree)
    high = _monomials(nvars, degree + 1)
    divisors = {m: {m[:k] + m[k + 1:] for k in range(len(m))} for m in high}
    best = 0
    for chosen in itertools.combinations(low, a):
        cs = set(chosen)
        best = max(best, sum(divisors[m] <= cs for m in high))
    return best


@pytest.mark.parametrize("nvars", [1, 2, 3])
@pytest.mark.parametrize("degree", [1, 2, 3])
def test_pseudopower_matches_order_ideal_oracle(nvars, degree):
    for a in range(0, math.comb(nvars + degree - 1, degree) + 1):
        assert pseudopower(a, degree) == _max_next(a, degree, nvars)


def test_g_theorem_face_bound():
    assert g_theorem_face_bound(4, 6, 2, 3) == 9
    assert g_theorem_face_bound(4, 7, 2, 3) == 14
    assert g_theorem_face_bound(5, 8, 2, 4) == 20
    with pytest.raises(BadRange):
        g_theorem_face_bound(4, 6, 3, 3)
    with pytest.raises(BadRange):
        g_theorem_face_bound(4, 5, 2, 3)
    with pytest.raises(BadRange):
        g_theorem_face_bound(4, 6, 2, 4)


@pytest.mark.parametrize("d", range(4, 9))
def test_g_theorem_bound_equals_matrix_product(d):
    for n in range(d + 2, d + 6):
        for k in range(1, d // 2 + 1):
            g = [math.comb(n - d - 2 + i, i) for i in range(k + 1)]
            f = f_from_g(g, d)
            for j in range(d):
                assert g_theorem_face_bound(d, n, k, j) == f[j + 1]


def test_msn_values():
    assert msn(4, 6) == 9
    assert msn(5, 8) == 20
    for d in range(4, 11):
        assert msn(d, d + 1) == d + 1
        vals = [msn(d, v) for v in range(d + 1, d + 10)]
        assert vals == sorted(vals)
    with pytest.raises(BadRange):
        msn(3, 6)
    with pytest.raises(BadRange):
        msn(5, 5)


@pytest.mark.parametrize("d, v", [(4, 6), (4, 7), (4, 8), (5, 7), (5, 8), (5, 9)])
def test_msn_matches_cyclic_hull(d, v):
    # In dimensions 4 and 5 every simplicial 2-neighborly polytope is
    # neighborly, so the cyclic polytope realizes the minimum.
    assert msn(d, v) == len(enumerate_facets(cyclic(d, v)))


def test_barnette():
    assert barnette(3, 6) == 8
    assert barnette(5, 10) == 22
    for d in range(2, 9):
        assert barnette(d, d + 1) == d + 1
    with pytest.raises(BadRange):
        barnette(3, 3)


def test_neighborly_max_facets():
    assert neighborly_max_facets(2, 6) == 9
    assert neighborly_max_facets(2, 8) == 20
    assert neighborly_max_facets(3, 7) == 7
    for n in range(5, 15):
        assert neighborly_max_facets(2, n) == n * (n - 3) // 2
    assert neighborly_max_facets(3, 9) == len(enumerate_facets(cyclic(6, 9)))
    with pytest.raises(BadRange):
        neighborly_max_facets(2, 4)


def _dim5_oracle(v):
    best = None
    for n in range(5, v + 1):
        val = max(Fraction(v * (v - 1), n), Fraction(n * (n - 3), 2) + 1)
        best = val if best is None else min(best, val)
    return math.ceil(best)


def test_dim5_lower_bound():
    assert dim5_lower_bound(8) == 10
    assert dim5_lower_bound(9) == 12
    for v in range(6, 120):
        assert dim5_lower_bound(v) == _dim5_oracle(v)
    vals = [dim5_lower_bound(v) for v in range(6, 200)]
    assert vals == sorted(vals)
    with pytest.raises(BadRange):
        dim5_lower_bound(5)


def test_dim5_average_bound():
    assert dim5_average_bound(8, 5) == Fraction(56, 5)
    with pytest.raises(BadRange):
        dim5_average_bound(8, 0)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_vandermonde(alpha, beta, gamma):
    if gamma > beta:
        with pytest.raises(BadRange):
            vandermonde(alpha, beta, gamma)
    else:
        lhs, rhs = vandermonde(alpha, beta, gamma)
        assert lhs == rhs


def test_mn_known_examples():
    assert mn_known(4, 10) == KnownBound(4, 10, 35, 35, True, "neighborly-formula")
    kb = mn_known(5, 8)
    assert kb.exact and kb.lower == 12
    kb = mn_known(5, 9)
    assert kb.exact and kb.lower == 16
    kb = mn_known(6, 10)
    assert (kb.lower, kb.upper, kb.exact) == (13, 14, False)
    assert mn_known(7, 8).lower == 8 and mn_known(7, 8).exact
    assert mn_known(7, 9).lower == 12
    with pytest.raises(BadRange):
        mn_known(3, 6)


def test_mn_known_d_plus_4():
    for d in (7, 8, 9):
        kb = mn_known(d, d + 4)
        assert (kb.lower, kb.upper) == (d + 7, d + 8)


def test_mn_known_consistency():
    for (d, v), kb in table1(max_d=9, columns=6).items():
        assert kb.lower <= kb.upper
        assert kb.upper <= msn(d, v)
        if v >= d + 3:
            assert kb.lower >= d + 7
        if d >= 5:
            assert kb.upper <= bounds.pyramid_over_cyclic_counts(d, v)


def test_known_bound_validation():
    with pytest.raises(ValueError):
        KnownBound(5, 10, 20, 15, False, "x")
    with pytest.raises(ValueError):
        KnownBound(5, 10, 15, 16, True, "x")


def test_bound_report_shapes():
    assert BoundReport("msn", {"d": 5, "v": 8}, value=20).to_dict() == {
        "name": "msn", "params": {"d": 5, "v": 8}, "value": 20}
    exact = report_known(5, 8).to_dict()
    assert exact["value"] == 12 and exact["exact"] is True
    ranged = report_known(6, 10).to_dict()
    assert (ranged["lower"], ranged["upper"], ranged["exact"]) == (13, 14, False)
    assert "value" not in ranged
