"""Face lattice from vertex-facet incidences.

Every proper face of a polytope is an intersection of facets, so the face
vertex sets are exactly the nonempty intersections of facet incident sets.
Dimensions come from the affine rank of the vertex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BadRange, IndexOutOfRange
from .exactcore import affine_dim
from .hull import FacetSet, Polytope


@dataclass(frozen=True)
class FaceStructure:
    """Proper nonempty faces grouped by dimension.

    ``by_dim[j]`` is a sorted tuple of sorted vertex-index tuples.
    """

    dim: int
    by_dim: tuple

    @property
    def f_vector(self) -> tuple:
        return tuple(len(level) for level in self.by_dim)

    @property
    def facets(self) -> tuple:
        return self.by_dim[self.dim - 1]

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * f for j, f in enumerate(self.f_vector))

    def satisfies_euler(self) -> bool:
        return self.euler_characteristic() == 1 - (-1) ** self.dim

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "f_vector": list(self.f_vector),
            "faces": {str(j): [list(f) for f in level] for j, level in enumerate(self.by_dim)},
        }

    @classmethod
    def from_dict(cls, data) -> "FaceStructure":
        dim = int(data["dim"])
        by_dim = tuple(
            tuple(sorted(tuple(sorted(f)) for f in data["faces"][str(j)])) for j in range(dim)
        )
        return cls(dim, by_dim)


def _check_indices(s: Iterable[int], n: int) -> frozenset:
    s = frozenset(s)
    bad = [i for i in s if not 0 <= i < n]
    if bad:
        raise IndexOutOfRange(f"vertex index {min(bad)} outside 0..{n - 1}")
    return s


def closure(s: Iterable[int], fs: FacetSet) -> frozenset:
    """Smallest face containing the vertex set ``s``.

    Returns all vertex indices when no facet contains ``s``.
    """
    s = _check_indices(s, fs.n_vertices)
    out = None
    for inc in fs.incident_sets:
        if s <= inc:
            out = inc if out is None else out & inc
    return frozenset(range(fs.n_vertices)) if out is None else out


def all_faces(fs: FacetSet, p: Polytope) -> FaceStructure:
    facets = list(dict.fromkeys(fs.incident_sets))
    seen = set(facets)
    frontier = list(facets)
    while frontier:
        nxt = []
        for face in frontier:
            for g in facets:
                h = face & g
                if h and h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt

    d = p.ambient_dim
    levels = [[] for _ in range(d)]
    for face in seen:
        j = affine_dim([p.vertices[i] for i in sorted(face)])
        levels[j].append(tuple(sorted(face)))
    return FaceStructure(d, tuple(tuple(sorted(level)) for level in levels))


def f_vector(fs: FacetSet, p: Polytope) -> tuple:
    return all_faces(fs, p).f_vector


def facets_at_vertex(fs: FacetSet, vertex: int) -> int:
    """Number of facets containing ``vertex``."""
    _check_indices([vertex], fs.n_vertices)
    return sum(vertex in s for s in fs.incident_sets)


def average_facet_size(fs: FacetSet) -> Fraction:
    """Mean number of vertices per facet, as an exact fraction."""
    return Fraction(sum(len(s) for s in fs.incident_sets), len(fs))


def check_incidence_inequality(struct: FaceStructure, d: int, m: int) -> list:
    """For each ``0 < i <= m`` compare ``(d-i+1) f_{i-1}`` with ``(i+1) f_i``.

    The inequality only has to hold when the polytope is m-simplicial; this
    function reports, it does not assume.
    """
    if not 0 < m <= d - 1:
        raise BadRange(f"m must satisfy 0 < m <= d-1, got m={m}, d={d}")
    f = struct.f_vector
    rows = []
    for i in range(1, m + 1):
        lhs = (d - i + 1) * f[i - 1]
        rhs = (i + 1) * f[i]
        rows.append((i, lhs, rhs, lhs <= rhs))
    return rows


def check_simplex_bound(struct: FaceStructure, d: int, m: int) -> tuple:
    """``(f_m, f_{d-m-1}, f_m >= f_{d-m-1})`` for ``d/2 <= m <= d-1``."""
    if 2 * m < d or m > d - 1:
        raise BadRange(f"need d/2 <= m <= d-1, got m={m}, d={d}")
    f = struct.f_vector
    return f[m], f[d - m - 1], f[m] >= f[d - m - 1]


def ridges_in_two_facets(struct: FaceStructure) -> bool:
    """Whether every ridge lies in exactly two facets."""
    if struct.dim < 2:
        return True
    facets = [frozenset(f) for f in struct.facets]
    for r in struct.by_dim[struct.dim - 2]:
        r = frozenset(r)
        if sum(r <= f for f in facets) != 2:
            return False
    return True


def is_intersection_closed(struct: FaceStructure) -> bool:
    faces = {frozenset(f) for level in struct.by_dim for f in level}
    for a in faces:
        for b in faces:
            c = a & b
            if c and c not in faces:
                return False
    return True
