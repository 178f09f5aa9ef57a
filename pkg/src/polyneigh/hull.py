"""Facet enumeration for full-dimensional polytopes given by vertices.

Two algorithms share one contract:

``oracle``
    Every ``d``-subset of vertices that spans a hyperplane is tried; the
    hyperplane is kept when all vertices lie weakly on one side.
``incremental``
    Beneath-beyond insertion.  Only used as a faster path and always checked
    against the oracle in the test suite.

Both return the same canonically ordered :class:`FacetSet`.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DegenerateInput,
    DuplicateVertex,
    EmptyInput,
    IndexOutOfRange,
    MixedDimensions,
    NotFullDimensional,
    OnHyperplane,
    ParseError,
    RedundantPoint,
)
from .exactcore import (
    Hyperplane,
    affine_dim,
    as_point,
    format_rational,
    hyperplane_through,
    parse_rational,
)

ALGORITHMS = ("oracle", "incremental")
THREADS_ENV = "POLYNEIGH_THREADS"


@dataclass(frozen=True)
class Polytope:
    """A V-described polytope with exact coordinates."""

    ambient_dim: int
    vertices: tuple
    label: Optional[str] = None

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise MixedDimensions("ambient_dim must be >= 1")
        if not self.vertices:
            raise EmptyInput("polytope has no vertices")
        pts = tuple(as_point(v) for v in self.vertices)
        for i, v in enumerate(pts):
            if len(v) != self.ambient_dim:
                raise MixedDimensions(
                    f"vertex {i} has {len(v)} coordinates, expected {self.ambient_dim}"
                )
        object.__setattr__(self, "vertices", pts)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def centroid(self) -> tuple:
        n = len(self.vertices)
        return tuple(sum(c) / n for c in zip(*self.vertices))

    def to_dict(self) -> dict:
        out = {"ambient_dim": self.ambient_dim}
        if self.label is not None:
            out["label"] = self.label
        out["vertices"] = [[format_rational(x) for x in v] for v in self.vertices]
        return out

    @classmethod
    def from_dict(cls, data) -> "Polytope":
        if not isinstance(data, dict):
            raise ParseError("polytope JSON must be an object")
        try:
            dim = data["ambient_dim"]
            raw = data["vertices"]
        except KeyError as exc:
            raise ParseError(f"missing key {exc.args[0]!r}") from None
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ParseError("ambient_dim must be an integer")
        if not isinstance(raw, list) or not all(isinstance(v, list) for v in raw):
            raise ParseError("vertices must be a list of coordinate lists")
        label = data.get("label")
        if label is not None and not isinstance(label, str):
            raise ParseError("label must be a string")
        verts = tuple(tuple(parse_rational(x) for x in v) for v in raw)
        return cls(dim, verts, label)


@dataclass(frozen=True)
class Facet:
    hyperplane: Hyperplane
    vertices: tuple  # sorted incident vertex indices

    def to_dict(self) -> dict:
        d = self.hyperplane.to_dict()
        d["vertices"] = list(self.vertices)
        return d


@dataclass(frozen=True)
class FacetSet:
    """Facets of a polytope in canonical order (by sorted incident set)."""

    facets: tuple
    n_vertices: int
    ambient_dim: int
    _sets: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.facets, key=lambda f: (f.vertices, f.hyperplane.sort_key())))
        object.__setattr__(self, "facets", ordered)
        object.__setattr__(self, "_sets", tuple(frozenset(f.vertices) for f in ordered))

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    @property
    def incident_sets(self) -> tuple:
        """Incident vertex sets as frozensets, in facet order."""
        return self._sets

    def to_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "n_vertices": self.n_vertices,
            "facets": [f.to_dict() for f in self.facets],
        }

    @classmethod
    def from_dict(cls, data) -> "FacetSet":
        if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
            raise ParseError("facet set JSON must be an object with a 'facets' list")
        facets = []
        for raw in data["facets"]:
            try:
                normal = tuple(_parse_int(a) for a in raw["normal"])
                offset = _parse_int(raw["offset"])
                verts = tuple(sorted(int(i) for i in raw["vertices"]))
            except (KeyError, TypeError) as exc:
                raise ParseError(f"malformed facet entry: {raw!r}") from exc
            facets.append(Facet(Hyperplane(normal, offset), verts))
        if "ambient_dim" in data:
            dim = int(data["ambient_dim"])
        else:
            dim = len(facets[0].hyperplane.normal) if facets else 0
        if "n_vertices" in data:
            n = int(data["n_vertices"])
        else:
            n = 1 + max((max(f.vertices) for f in facets if f.vertices), default=-1)
        return cls(tuple(facets), n, dim)


def _parse_int(text) -> int:
    q = parse_rational(text)
    if q.denominator != 1:
        raise ParseError(f"expected an integer, got {text!r}")
    return q.numerator


def thread_count() -> int:
    """Worker count from ``POLYNEIGH_THREADS``: unset means serial, 0 means
    one per CPU."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    if n <= 0:
        return os.cpu_count() or 1
    return n


def _validate(p: Polytope) -> None:
    if len(set(p.vertices)) != len(p.vertices):
        seen = {}
        for i, v in enumerate(p.vertices):
            if v in seen:
                raise DuplicateVertex(f"vertices {seen[v]} and {i} coincide")
            seen[v] = i
    dim = affine_dim(p.vertices)
    if dim != p.ambient_dim:
        raise NotFullDimensional(
            f"affine hull has dimension {dim}, ambient dimension is {p.ambient_dim}"
        )


def _incident(h: Hyperplane, vertices) -> Optional[tuple]:
    """Indices on ``h`` if every vertex satisfies it, else None."""
    on = []
    for i, v in enumerate(vertices):
        s = h.value(v)
        if s > 0:
            return None
        if s == 0:
            on.append(i)
    return tuple(on)


def _try_subset(subset, vertices, inside):
    pts = [vertices[i] for i in subset]
    try:
        h = hyperplane_through(pts, inside)
    except DegenerateInput:
        return None
    except OnHyperplane:
        # Cuts through the interior, so not a supporting hyperplane.
        return None
    inc = _incident(h, vertices)
    return None if inc is None else Facet(h, inc)


def _scan_chunk(args):
    subsets, vertices, inside = args
    found = {}
    for s in subsets:
        f = _try_subset(s, vertices, inside)
        if f is not None:
            found[f.hyperplane] = f
    return list(found.values())


def _oracle(p: Polytope, workers: int) -> list:
    verts = p.vertices
    inside = p.centroid()
    combos = itertools.combinations(range(len(verts)), p.ambient_dim)
    if workers > 1:
        combos = list(combos)
        size = max(1, len(combos) // (workers * 4))
        chunks = [(combos[i:i + size], verts, inside) for i in range(0, len(combos), size)]
        found = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, chunks):
                for f in part:
                    found[f.hyperplane] = f
        return list(found.values())
    found = {}
    covered = []
    for s in combos:
        ss = set(s)
        if any(ss <= c for c in covered):
            continue
        f = _try_subset(s, verts, inside)
        if f is not None and f.hyperplane not in found:
            found[f.hyperplane] = f
            covered.append(frozenset(f.vertices))
    return list(found.values())


def _incremental(p: Polytope) -> list:
    verts = p.vertices
    dim = p.ambient_dim
    # Greedy initial simplex: first points raising the affine rank.
    start = [0]
    for i in range(1, len(verts)):
        if affine_dim([verts[j] for j in start] + [verts[i]]) == len(start):
            start.append(i)
            if len(start) == dim + 1:
                break
    inside = tuple(sum(c) / len(start) for c in zip(*(verts[i] for i in start)))

    inserted = list(start)
    facets = {}
    for omit in start:
        pts = [verts[i] for i in start if i != omit]
        h = hyperplane_through(pts, inside)
        facets[h] = frozenset(i for i in start if i != omit)

    rest = [i for i in range(len(verts)) if i not in set(start)]
    for idx in rest:
        x = verts[idx]
        sides = {h: h.value(x) for h in facets}
        visible = [h for h, s in sides.items() if s > 0]
        if not visible:
            # Inside the current hull: cannot be a vertex, reported below.
            continue
        inserted.append(idx)
        kept = {h: s for h, s in facets.items() if sides[h] <= 0}
        new = {}
        for h, inc in kept.items():
            new[h] = inc | {idx} if sides[h] == 0 else inc
        for hv in visible:
            vinc = facets[hv]
            for hn, ninc in kept.items():
                if sides[hn] == 0:
                    continue
                ridge = sorted(vinc & ninc)
                if len(ridge) < dim - 1:
                    continue
                basis = _affine_basis([verts[i] for i in ridge], dim - 1)
                if basis is None:
                    continue
                h = hyperplane_through(basis + [x], inside)
                if h not in new:
                    new[h] = frozenset(i for i in inserted if h.contains(verts[i]))
        facets = new
    out = []
    for h in facets:
        out.append(Facet(h, tuple(i for i, v in enumerate(verts) if h.contains(v))))
    return out


def _affine_basis(points, want: int):
    """``want`` affinely independent points from ``points``, or None."""
    chosen = [points[0]]
    for q in points[1:]:
        if affine_dim(chosen + [q]) == len(chosen):
            chosen.append(q)
            if len(chosen) == want:
                return chosen
    return chosen if len(chosen) == want else None


def _check_vertices(fs: FacetSet) -> None:
    for i in range(fs.n_vertices):
        containing = [s for s in fs.incident_sets if i in s]
        if not containing or frozenset.intersection(*containing) != {i}:
            raise RedundantPoint(i)


def enumerate_facets(p: Polytope, algorithm: str = "oracle", workers: Optional[int] = None) -> FacetSet:
    """All facets of ``p`` with their incident vertex sets.

    Raises NotFullDimensional, DuplicateVertex or RedundantPoint when the
    input is not a proper vertex list of a full-dimensional polytope.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    _validate(p)
    if algorithm == "oracle":
        facets = _oracle(p, thread_count() if workers is None else workers)
    else:
        facets = _incremental(p)
    fs = FacetSet(tuple(facets), p.n_vertices, p.ambient_dim)
    _check_vertices(fs)
    return fs


def incidence_matrix(fs: FacetSet, n_vertices: int) -> list:
    """Facets x vertices boolean matrix; entry ``[i][j]`` is vertex j on facet i."""
    for f in fs.facets:
        if f.vertices and max(f.vertices) >= n_vertices:
            raise IndexOutOfRange(
                f"facet references vertex {max(f.vertices)} but n_vertices={n_vertices}"
            )
    return [tuple(j in s for j in range(n_vertices)) for s in fs.incident_sets]


def column_sums(matrix: Sequence[Sequence[bool]]) -> list:
    return [sum(col) for col in zip(*matrix)]
