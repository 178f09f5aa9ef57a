"""Closed-form face-count bounds and the table of known minimal facet counts
of 2-neighborly polytopes.

Everything here works on plain integers; no geometry is involved.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .construct import pyramid_over_cyclic_counts
from .errors import BadRange, FvectorInconsistent, NotMSequence

comb = math.comb


@dataclass(frozen=True)
class GTheoremContext:
    d: int
    matrix: tuple  # rows i = 0..floor(d/2), columns j = 0..d

    @property
    def rows(self) -> int:
        return len(self.matrix)

    def entry(self, i: int, j: int) -> int:
        return self.matrix[i][j]


def m_matrix(d: int) -> GTheoremContext:
    """Matrix with entries ``C(d+1-i, d+1-j) - C(i, d+1-j)`` mapping g-vectors
    to f-vectors ``(f_{-1}, ..., f_{d-1})``."""
    if d < 2:
        raise BadRange(f"d must be >= 2, got {d}")
    rows = tuple(
        tuple(comb(d + 1 - i, d + 1 - j) - comb(i, d + 1 - j) for j in range(d + 1))
        for i in range(d // 2 + 1)
    )
    return GTheoremContext(d, rows)


def binomial_representation(a: int, i: int) -> list:
    """The i-binomial expansion ``a = C(a_i, i) + C(a_{i-1}, i-1) + ...``
    as a list of ``(a_k, k)`` pairs with ``a_i > a_{i-1} > ... >= k >= 1``."""
    if a < 0 or i < 1:
        raise BadRange("need a >= 0 and i >= 1")
    terms = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        terms.append((top, k))
        a -= comb(top, k)
        k -= 1
    return terms


def pseudopower(a: int, i: int) -> int:
    """Macaulay's ``a^<i>``: raise every binomial in the expansion by one."""
    return sum(comb(top + 1, k + 1) for top, k in binomial_representation(a, i))


def is_m_sequence(g: Sequence[int]) -> bool:
    """``g_0 = 1``, nonnegative entries, and ``g_{i+1} <= g_i^<i>`` for i >= 1."""
    if not g or g[0] != 1 or any(x < 0 for x in g):
        return False
    return all(g[i + 1] <= pseudopower(g[i], i) for i in range(1, len(g) - 1))


@dataclass(frozen=True)
class GVector:
    g: tuple

    def __iter__(self):
        return iter(self.g)

    def __len__(self):
        return len(self.g)


def f_from_g(g: Sequence[int], d: int) -> tuple:
    """``(f_{-1}, f_0, ..., f_{d-1}) = g . M_d``; missing g entries are zero."""
    ctx = m_matrix(d)
    g = list(g) + [0] * (ctx.rows - len(g))
    return tuple(sum(g[i] * ctx.matrix[i][j] for i in range(ctx.rows)) for j in range(d + 1))


def g_from_f(f: Sequence[int], d: int) -> GVector:
    """Recover the g-vector of a simplicial d-polytope from its f-vector.

    ``f`` includes the leading ``f_{-1} = 1``.  The triangular part of the
    system fixes g; the remaining columns and the M-sequence condition are
    then verified.
    """
    if len(f) != d + 1:
        raise BadRange(f"f must have length d+1 = {d + 1} (including f_-1), got {len(f)}")
    ctx = m_matrix(d)
    g = []
    for k in range(ctx.rows):
        g.append(f[k] - sum(g[i] * ctx.matrix[i][k] for i in range(k)))
    rebuilt = f_from_g(g, d)
    if tuple(f) != rebuilt:
        bad = next(j for j in range(d + 1) if f[j] != rebuilt[j])
        raise FvectorInconsistent(
            f"f_{bad - 1} = {f[bad]} but g . M_d gives {rebuilt[bad]} (g = {g})"
        )
    if not is_m_sequence(g):
        raise NotMSequence(f"g = {g} is not an M-sequence")
    return GVector(tuple(g))


def g_theorem_face_bound(d: int, n: int, k: int, j: int) -> int:
    """Lower bound on ``f_j`` of a simplicial k-neighborly d-polytope with n
    vertices."""
    if not (2 <= 2 * k <= d and n >= d + 2 and 0 <= j <= d - 1):
        raise BadRange(f"need 2 <= 2k <= d, n >= d+2, 0 <= j <= d-1; got d={d}, n={n}, k={k}, j={j}")
    return sum(
        (comb(d + 1 - i, d - j) - comb(i, d - j)) * comb(n - d - 2 + i, i) for i in range(k + 1)
    )


def msn(d: int, v: int) -> int:
    """Minimal facet count of a simplicial 2-neighborly d-polytope with v
    vertices."""
    if not v >= d + 1 >= 5:
        raise BadRange(f"need v >= d+1 >= 5, got d={d}, v={v}")
    delta = v - d - 1
    return delta * (delta * (d - 3) + 3 * d - 5) // 2 + d + 1


def barnette(d: int, v: int) -> int:
    """Lower bound on facets of any simplicial d-polytope with v vertices."""
    if not v >= d + 1 >= 3:
        raise BadRange(f"need v >= d+1 >= 3, got d={d}, v={v}")
    return (d - 1) * (v - d) + 2


def neighborly_max_facets(k: int, n: int) -> int:
    """Facets of a neighborly 2k-polytope with n vertices."""
    if not n >= 2 * k + 1 >= 5:
        raise BadRange(f"need n >= 2k+1 >= 5, got k={k}, n={n}")
    value = Fraction(n, n - k) * comb(n - k, k)
    assert value.denominator == 1, "neighborly facet count must be an integer"
    return value.numerator


def dim5_lower_bound(v: int) -> int:
    """``min_n max(ceil(v(v-1)/n), n(n-3)/2 + 1)`` over ``5 <= n <= v``."""
    if v < 6:
        raise BadRange(f"need v >= 6, got {v}")
    return min(
        max(-(-v * (v - 1) // n), n * (n - 3) // 2 + 1) for n in range(5, v + 1)
    )


def dim5_average_bound(v: int, avg_facet_size) -> Fraction:
    """``v(v-1) / x`` where x is the average number of vertices per facet."""
    x = Fraction(avg_facet_size)
    if v < 6 or x <= 0:
        raise BadRange("need v >= 6 and a positive average facet size")
    return Fraction(v * (v - 1)) / x


def vandermonde(alpha: int, beta: int, gamma: int) -> tuple:
    """Both sides of ``sum_i C(alpha+i, i) C(beta-i, gamma-i) = C(alpha+beta+1, gamma)``.

    Restricted to ``0 <= gamma <= beta`` so every binomial is an ordinary one.
    """
    if min(alpha, beta, gamma) < 0 or gamma > beta:
        raise BadRange("need alpha, beta, gamma >= 0 and gamma <= beta")
    lhs = sum(comb(alpha + i, i) * comb(beta - i, gamma - i) for i in range(gamma + 1))
    return lhs, comb(alpha + beta + 1, gamma)


# (d, v) -> minimal facet count found among 2-neighborly 0/1-polytopes,
# taken from the enumeration; lower dims are covered by exact rules.
ZERO_ONE_WITNESSES = {
    (4, 6): (9, "fig1-witness"),
    (5, 8): (12, "fig1-witness"),
    (5, 9): (16, "fig1-witness"),
    (5, 10): (22, "aichholzer-enumeration"),
    (6, 10): (14, "fig1-witness"),
    (6, 11): (17, "aichholzer-enumeration"),
    (6, 12): (21, "aichholzer-enumeration"),
    (6, 13): (26, "aichholzer-enumeration"),
}

# Entries proven exact by exhaustive enumeration of combinatorial types.
EXACT_ENTRIES = {(5, 9): (16, "type-enumeration")}


@dataclass(frozen=True)
class KnownBound:
    d: int
    v: int
    lower: int
    upper: Optional[int]
    exact: bool
    source: str

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"inconsistent bound [{self.lower}, {self.upper}]")
        if self.exact and self.lower != self.upper:
            raise ValueError("exact bound needs lower == upper")

    def to_dict(self) -> dict:
        return asdict(self)


def _exact(d, v, value, source):
    return KnownBound(d, v, value, value, True, source)


def _upper_candidates(d: int, v: int) -> list:
    out = []
    if d >= 5 and v >= d + 2:
        out.append((pyramid_over_cyclic_counts(d, v), "pyramid-construction"))
    for (d0, v0), (f0, tag) in ZERO_ONE_WITNESSES.items():
        r = d - d0
        if r >= 0 and v - v0 == r:
            out.append((f0 + r, tag if r == 0 else "pyramid-construction"))
    if v >= d + 1:
        out.append((msn(d, v), "simplicial-g-theorem"))
    return out


def mn_known(d: int, v: int) -> KnownBound:
    """What is known about the minimal facet count of a 2-neighborly
    d-polytope with v vertices."""
    if d < 4 or v < d + 1:
        raise BadRange(f"need d >= 4 and v >= d+1, got d={d}, v={v}")
    if v == d + 1:
        return _exact(d, v, d + 1, "simplex")
    if d == 4:
        return _exact(d, v, v * (v - 3) // 2, "neighborly-formula")
    if v == d + 2:
        return _exact(d, v, d + 5, "d-plus-2-classification")
    if v == d + 3:
        return _exact(d, v, d + 7, "gale-diagram-enumeration")
    if (d, v) in EXACT_ENTRIES:
        value, tag = EXACT_ENTRIES[(d, v)]
        return _exact(d, v, value, tag)

    lowers = [(d + 7, "lower-bound-d-plus-7")]
    if d == 5:
        lowers.append((dim5_lower_bound(v), "dim5-min-max"))
    if d == 6:
        # Equality f = v needs a simplex or at least 27 vertices.
        lowers.append((v if v >= 27 else v + 1, "dim6-facets-at-least-vertices"))
    lower, lower_tag = max(lowers)
    upper, upper_tag = min(_upper_candidates(d, v))
    if lower == upper:
        return _exact(d, v, lower, f"{lower_tag}+{upper_tag}")
    return KnownBound(d, v, lower, upper, False, f"{lower_tag}; {upper_tag}")


def table1(max_d: int = 6, columns: int = 4) -> dict:
    """The known-values grid for ``d = 4..max_d`` and ``v = d+2 .. d+1+columns``."""
    return {
        (d, v): mn_known(d, v)
        for d in range(4, max_d + 1)
        for v in range(d + 2, d + 2 + columns)
    }


@dataclass(frozen=True)
class BoundReport:
    """A named bound evaluated at specific parameters."""

    name: str
    params: dict
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    exact: Optional[bool] = None
    source: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "params": dict(self.params)}
        if self.value is not None:
            out["value"] = self.value
        else:
            out["lower"] = self.lower
            out["upper"] = self.upper
        if self.exact is not None:
            out["exact"] = self.exact
        if self.source is not None:
            out["source"] = self.source
        return out


def report_known(d: int, v: int) -> BoundReport:
    kb = mn_known(d, v)
    params = {"d": d, "v": v}
    if kb.exact:
        return BoundReport("mn-known", params, value=kb.lower, exact=True, source=kb.source)
    return BoundReport("mn-known", params, lower=kb.lower, upper=kb.upper, exact=False, source=kb.source)
