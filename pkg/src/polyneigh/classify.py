"""Neighborliness, simpliciality and simplicity tests on a computed face
structure."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

from .errors import BadRange
from .faces import FaceStructure, closure
from .hull import FacetSet


@dataclass(frozen=True)
class ClassificationReport:
    max_neighborly_k: int
    simplicial_upto_m: int
    simple_upto_m: int
    is_dual_2neighborly: bool

    def to_dict(self) -> dict:
        return asdict(self)


def is_k_neighborly(struct: FaceStructure, fs: FacetSet, k: int) -> bool:
    """True iff every k-subset of vertices is the vertex set of a face."""
    n = fs.n_vertices
    if not 1 <= k <= n:
        raise BadRange(f"k must be in 1..{n}, got {k}")
    return all(closure(s, fs) == frozenset(s) for s in itertools.combinations(range(n), k))


def max_neighborliness(struct: FaceStructure, fs: FacetSet) -> int:
    """Largest proper k (k < f_0) for which the polytope is k-neighborly.

    A d-simplex reports d.
    """
    best = 1
    for k in range(2, fs.n_vertices):
        if not is_k_neighborly(struct, fs, k):
            break
        best = k
    return best


def _check_m(struct: FaceStructure, m: int) -> None:
    if not 0 <= m <= struct.dim - 1:
        raise BadRange(f"m must be in 0..{struct.dim - 1}, got {m}")


def is_m_simplicial(struct: FaceStructure, m: int) -> bool:
    _check_m(struct, m)
    return all(len(f) == j + 1 for j in range(m + 1) for f in struct.by_dim[j])


def is_m_simple(struct: FaceStructure, m: int) -> bool:
    """Every (d-1-m)-face lies in exactly m+1 facets."""
    _check_m(struct, m)
    facets = [frozenset(f) for f in struct.facets]
    for face in struct.by_dim[struct.dim - 1 - m]:
        face = frozenset(face)
        if sum(face <= f for f in facets) != m + 1:
            return False
    return True


def dual_incidence(fs: FacetSet) -> list:
    """For each vertex, the sorted tuple of facet indices containing it."""
    rows = [[] for _ in range(fs.n_vertices)]
    for fi, s in enumerate(fs.incident_sets):
        for v in s:
            rows[v].append(fi)
    return [tuple(r) for r in rows]


def is_dual_2neighborly(struct: FaceStructure, fs: FacetSet) -> bool:
    """Every pair of facets meets in a ridge."""
    if struct.dim < 2:
        return True
    ridges = {frozenset(r) for r in struct.by_dim[struct.dim - 2]}
    sets = fs.incident_sets
    return all((a & b) in ridges for a, b in itertools.combinations(sets, 2))


def classification_report(struct: FaceStructure, fs: FacetSet) -> ClassificationReport:
    d = struct.dim
    simplicial = max(m for m in range(d) if is_m_simplicial(struct, m))
    simple = max(m for m in range(d) if is_m_simple(struct, m))
    return ClassificationReport(
        max_neighborly_k=max_neighborliness(struct, fs),
        simplicial_upto_m=simplicial,
        simple_upto_m=simple,
        is_dual_2neighborly=is_dual_2neighborly(struct, fs),
    )
