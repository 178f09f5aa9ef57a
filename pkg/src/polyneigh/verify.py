"""Reproduction checks: every concrete count, formula and inequality the
source results state, evaluated on constructed instances.

Each check carries a stable id and an anchor naming the statement it tests,
so a failure points straight at the claim it contradicts.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import bounds, classify, construct, faces, hull

comb = math.comb


@dataclass
class Check:
    check_id: str
    expected: object
    actual: object
    passed: bool
    paper_anchor: str

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "passed": self.passed,
            "paper_anchor": self.paper_anchor,
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "summary": {"passed": self.passed, "failed": self.failed},
        }

    def table(self) -> str:
        width = max((len(c.check_id) for c in self.checks), default=8)
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{status}  {c.check_id:<{width}}  expected={_jsonable(c.expected)!s:<14} "
                f"actual={_jsonable(c.actual)!s:<14} [{c.paper_anchor}]"
            )
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines)


class _Analyzer:
    """Facet and face computations memoized per polytope for one run."""

    def __init__(self):
        self._cache = {}

    def __call__(self, p: hull.Polytope):
        key = (p.ambient_dim, p.vertices)
        if key not in self._cache:
            fs = hull.enumerate_facets(p)
            self._cache[key] = (fs, faces.all_faces(fs, p), p.label)
        fs, st, _ = self._cache[key]
        return fs, st

    def structures(self):
        return [(label, st) for _, st, label in self._cache.values()]


class _Suite:
    def __init__(self, fixtures_dir=None):
        self.fixtures_dir = fixtures_dir
        self.analyze = _Analyzer()
        self.report = VerificationReport()

    def add(self, check_id, expected, actual_fn: Callable, anchor, compare=None):
        try:
            actual = actual_fn()
            passed = compare(actual) if compare else actual == expected
        except Exception as exc:  # a crashing check is a failed check
            actual, passed = f"{type(exc).__name__}: {exc}", False
        self.report.checks.append(Check(check_id, expected, actual, bool(passed), anchor))

    def fixture(self, name):
        return construct.load_fixture(name, self.fixtures_dir)


def _fig1(s: _Suite):
    for name, expected in construct.EXAMPLE_FACETS.items():
        s.add(f"fig1.fixture.{name}", True,
              lambda n=name: s.fixture(n).vertices == construct.example(n).vertices,
              "published example coordinates")
        s.add(f"fig1.facets.{name}", expected,
              lambda n=name: len(s.analyze(s.fixture(n))[0]),
              f"published facet count f={expected}")
    for name in construct.EXAMPLE_FACETS:
        def edges(n=name):
            fs, st = s.analyze(s.fixture(n))
            return st.f_vector[1], comb(st.f_vector[0], 2), classify.is_k_neighborly(st, fs, 2)
        s.add(f"fig1.neighborly.{name}", "f_1 = C(f_0,2) and 2-neighborly",
              edges, "2-neighborly 0/1-polytopes",
              compare=lambda a: a[0] == a[1] and a[2])


def _cyclic(s: _Suite):
    for n in range(6, 11):
        def run(n=n):
            fs, st = s.analyze(construct.cyclic(4, n))
            return len(fs), classify.is_k_neighborly(st, fs, 2), bounds.neighborly_max_facets(2, n)
        expected = n * (n - 3) // 2
        s.add(f"cyclic.d4.n{n}", (expected, True, expected), run,
              "f_3 = f_0(f_0-3)/2; neighborly facet formula")


def _pyramid(s: _Suite):
    base = construct.example("P46")
    for r in range(1, 4):
        def run(r=r):
            q = construct.pyramid(base, r)
            fs, st = s.analyze(q)
            return q.ambient_dim, q.n_vertices, len(fs), classify.is_k_neighborly(st, fs, 2)
        d = 4 + r
        s.add(f"pyramid.P46.r{r}", (d, d + 2, d + 5, True), run, "mn(d, d+2) = d+5 witness")
    for d in range(5, 8):
        for v in range(d + 2, d + 4):
            s.add(f"pyramid.cyclic.d{d}.v{v}", construct.pyramid_over_cyclic_counts(d, v),
                  lambda d=d, v=v: len(s.analyze(construct.pyramid_over_cyclic(d, v))[0]),
                  "pyramids over cyclic 4-polytopes")
            lhs = construct.pyramid_over_cyclic_counts(d, v) - v
            s.add(f"eq4.d{d}.v{v}", (v + 4 - d) * (v - d - 1) // 2, lambda lhs=lhs: lhs,
                  "f_{d-1} - f_0 = (f_0+4-d)(f_0-d-1)/2")


def _join(s: _Suite):
    def run():
        p46 = construct.example("P46")
        q = construct.join(p46, p46)
        fs, st = s.analyze(q)
        return q.ambient_dim, q.n_vertices, len(fs), classify.is_k_neighborly(st, fs, 2)
    c = construct.join_family_counts(6, 1)
    s.add("join.P46xP46", (c.d, c.f0, c.f_facets, True), run, "join counts; P_n^m formulas")
    for n in range(5, 8):
        for m in (0, 1):
            def fam(n=n, m=m):
                q = construct.join_family(n, m)
                fs, st = s.analyze(q)
                return q.ambient_dim, q.n_vertices, len(fs)
            c = construct.join_family_counts(n, m)
            s.add(f"join.family.n{n}.m{m}", (c.d, c.f0, c.f_facets), fam,
                  "d = 5*2^m - 1, f_0 = 2^m n, f_{d-1} = 2^{m-1} n(n-3)")


def _gtheorem(s: _Suite):
    for d in (4, 5, 6):
        for n in range(d + 2, 11):
            def run(d=d, n=n):
                fs, st = s.analyze(construct.cyclic(d, n))
                f = (1,) + st.f_vector
                g = bounds.g_from_f(f, d)
                return g.g, bounds.f_from_g(g.g, d) == f
            expected = tuple(comb(n - d - 2 + j, j) for j in range(d // 2 + 1))
            s.add(f"gtheorem.cyclic.d{d}.n{n}", (expected, True), run,
                  "g_j = C(n-d-2+j, j); f = g M_d")


def _msn(s: _Suite):
    def agree():
        bad = [(d, v) for d in range(4, 11) for v in range(d + 2, d + 9)
               if bounds.msn(d, v) != bounds.g_theorem_face_bound(d, v, 2, d - 1)]
        return bad
    s.add("msn.closed-form", [], agree, "msn(d,v) closed form vs g-theorem sum")
    s.add("msn.P46", 9, lambda: bounds.msn(4, 6), "msn(4,6) vs P46")
    s.add("msn.P46.facets", bounds.msn(4, 6),
          lambda: len(s.analyze(s.fixture("P46"))[0]), "msn(4,6) vs P46")


def _lemma2(s: _Suite):
    for name in ("P58", "P59"):
        def run(n=name):
            fs, _ = s.analyze(s.fixture(n))
            return min(faces.facets_at_vertex(fs, v) for v in range(fs.n_vertices))
        f0 = len(construct.EXAMPLES[name][1])
        s.add(f"lemma2.{name}", f">= {f0 - 1}", run, "f_P(v) >= |vert P| - 1",
              compare=lambda a, f0=f0: a >= f0 - 1)


def _incidence(s: _Suite):
    polys = [(n, lambda n=n: s.fixture(n)) for n in construct.EXAMPLE_FACETS]
    polys += [("cyclic(5,8)", lambda: construct.cyclic(5, 8)),
              ("cyclic(6,9)", lambda: construct.cyclic(6, 9))]
    for label, make in polys:
        def run(make=make):
            _, st = s.analyze(make())
            return [row for row in faces.check_incidence_inequality(st, st.dim, 3) if not row[3]]
        s.add(f"eq6.{label}", [], run, "(d-i+1) f_{i-1} <= (i+1) f_i, i <= 3")
    for label, make in polys:
        def lemma1(make=make):
            _, st = s.analyze(make())
            return faces.check_simplex_bound(st, st.dim, 3)[2]
        if label in ("P610", "cyclic(6,9)"):
            s.add(f"lemma1.{label}", True, lemma1, "f_3 >= f_2 for d = 6")


def _dim6(s: _Suite):
    def run():
        fs, st = s.analyze(s.fixture("P610"))
        return st.f_vector[5], st.f_vector[0], classify.is_dual_2neighborly(st, fs)
    s.add("dim6.P610", (14, 10, False), run, "f_5 >= f_0 for 2-neighborly 6-polytopes")


def _dim5(s: _Suite):
    for v, name, expected in ((8, "P58", 10), (9, "P59", 12)):
        def run(v=v, n=name):
            fs, _ = s.analyze(s.fixture(n))
            return bounds.dim5_lower_bound(v), len(fs)
        s.add(f"dim5.bound.v{v}", f"{expected} <= facets({name})", run,
              "min-max lower bound in dimension 5",
              compare=lambda a, e=expected: a[0] == e and a[0] <= a[1])
    def growth():
        ratios = [bounds.dim5_lower_bound(v) / v ** (4 / 3) for v in range(20, 201)]
        return round(min(ratios), 4), round(max(ratios), 4)
    s.add("dim5.growth", "within [0.3, 1.5]", growth, "f_4 = Omega(f_0^{4/3})",
          compare=lambda a: 0.3 <= a[0] and a[1] <= 1.5)


def _mn_bracket(s: _Suite):
    for d in (7, 8):
        def run(d=d):
            q = construct.pyramid(s.fixture("P610"), d - 6)
            fs, _ = s.analyze(q)
            kb = bounds.mn_known(d, d + 4)
            return q.n_vertices, len(fs), (kb.lower, kb.upper)
        s.add(f"mn.d+4.d{d}", (d + 4, d + 8, (d + 7, d + 8)), run, "d+7 <= mn(d, d+4) <= d+8")


def random_01_polytopes(count: int = 50, seed: int = 20180321, max_dim: int = 5, max_vertices: int = 10):
    """Seeded full-dimensional 0/1-polytopes (all 0/1 points are in convex
    position, so every sampled point is a vertex)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, max_dim)
        cube = list(itertools.product((0, 1), repeat=d))
        v = rng.randint(d + 1, min(max_vertices, len(cube)))
        pts = rng.sample(cube, v)
        p = hull.Polytope(d, tuple(pts), f"random01-{len(out)}")
        if hull.affine_dim(p.vertices) == d:
            out.append(p)
    return out


def _oracle_equivalence(s: _Suite):
    polys = [s.fixture(n) for n in construct.EXAMPLE_FACETS]
    polys += random_01_polytopes()

    def run():
        return [p.label for p in polys
                if hull.enumerate_facets(p, "oracle") != hull.enumerate_facets(p, "incremental")]
    s.add("oracle.equivalence", [], run, "incremental hull equals brute-force oracle")


def _euler(s: _Suite):
    for label, st in s.analyze.structures():
        s.add(f"euler.{label}", 1 - (-1) ** st.dim, st.euler_characteristic, "Euler relation")
        s.add(f"ridges.{label}", True, lambda st=st: faces.ridges_in_two_facets(st),
              "every ridge lies in exactly two facets")


GROUPS = (
    ("fig1", _fig1),
    ("cyclic", _cyclic),
    ("pyramid", _pyramid),
    ("join", _join),
    ("gtheorem", _gtheorem),
    ("msn", _msn),
    ("lemma2", _lemma2),
    ("incidence", _incidence),
    ("dim6", _dim6),
    ("dim5", _dim5),
    ("mn", _mn_bracket),
    ("oracle", _oracle_equivalence),
    ("euler", _euler),
)


def run_checks(fixtures_dir=None, only: Optional[str] = None) -> VerificationReport:
    """Run all check groups, or only those whose name starts with ``only``.

    The Euler/ridge group always runs last over every face structure the
    other groups computed.
    """
    suite = _Suite(fixtures_dir)
    for name, fn in GROUPS:
        if only and not name.startswith(only) and name != "euler":
            continue
        fn(suite)
    return suite.report
