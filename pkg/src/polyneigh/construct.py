"""Constructors: cyclic polytopes, iterated pyramids, joins, the four small
2-neighborly 0/1-polytopes, and the iterated-join family with its predicted
counts."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import jsonio
from .errors import BadRange, UnknownExample
from .hull import Polytope

# Vertex lists of the minimal-facet 2-neighborly 0/1-polytopes.
EXAMPLES = {
    "P46": (4, (
        (0, 0, 0, 0),
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (1, 0, 0, 1),
        (1, 1, 1, 0),
    )),
    "P58": (5, (
        (0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0),
        (0, 0, 1, 0, 0),
        (0, 1, 0, 0, 1),
        (0, 1, 1, 1, 0),
        (1, 0, 0, 1, 0),
        (1, 0, 1, 0, 1),
    )),
    "P59": (5, (
        (0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0),
        (0, 0, 1, 0, 1),
        (0, 1, 0, 1, 0),
        (0, 1, 1, 0, 0),
        (1, 0, 0, 1, 1),
        (1, 0, 1, 0, 0),
        (1, 1, 0, 0, 0),
    )),
    "P610": (6, (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 1, 1),
        (1, 0, 1, 1, 0, 0),
        (1, 1, 0, 1, 0, 1),
        (1, 1, 1, 0, 1, 0),
    )),
}

# Facet counts stated alongside the coordinates.
EXAMPLE_FACETS = {"P46": 9, "P58": 12, "P59": 16, "P610": 14}

FIXTURE_FILES = {"P46": "p46.json", "P58": "p58.json", "P59": "p59.json", "P610": "p610.json"}


def cyclic(d: int, n: int) -> Polytope:
    """Convex hull of the moment curve ``(t, t^2, ..., t^d)`` at ``t = 1..n``."""
    if d < 2 or n <= d:
        raise BadRange(f"cyclic polytope needs n > d >= 2, got d={d}, n={n}")
    verts = tuple(tuple(Fraction(t) ** e for e in range(1, d + 1)) for t in range(1, n + 1))
    return Polytope(d, verts, f"cyclic({d},{n})")


def simplex(d: int) -> Polytope:
    """Standard d-simplex: the origin and the unit vectors."""
    if d < 1:
        raise BadRange("simplex dimension must be >= 1")
    verts = [tuple(0 for _ in range(d))]
    verts += [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return Polytope(d, tuple(verts), f"simplex({d})")


def pyramid(p: Polytope, r: int = 1) -> Polytope:
    """r-fold pyramid: base at height 0, apex ``e_{d+i}`` for each new axis."""
    if r < 1:
        raise BadRange(f"pyramid needs r >= 1, got {r}")
    d = p.ambient_dim
    pad = (Fraction(0),) * r
    verts = [v + pad for v in p.vertices]
    for i in range(r):
        verts.append((Fraction(0),) * d + tuple(Fraction(int(i == j)) for j in range(r)))
    label = f"pyramid^{r}({p.label})" if p.label else None
    return Polytope(d + r, tuple(verts), label)


def join(p: Polytope, q: Polytope) -> Polytope:
    """``conv({(x, 0, 0)} ∪ {(0, y, 1)})`` in dimension ``d + d' + 1``."""
    d, e = p.ambient_dim, q.ambient_dim
    zero, one = Fraction(0), Fraction(1)
    verts = [x + (zero,) * e + (zero,) for x in p.vertices]
    verts += [(zero,) * d + y + (one,) for y in q.vertices]
    label = f"({p.label} * {q.label})" if p.label and q.label else None
    return Polytope(d + e + 1, tuple(verts), label)


def example(name: str) -> Polytope:
    key = name.upper()
    if key not in EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    d, verts = EXAMPLES[key]
    return Polytope(d, verts, key)


def fixture_text(name: str) -> str:
    """Serialized form of an example, byte-identical to the shipped fixture."""
    return dumps_polytope(example(name))


def dumps_polytope(p: Polytope) -> str:
    return jsonio.dumps(p.to_dict())


def load_fixture(name: str, directory=None) -> Polytope:
    """Read an example from ``directory`` (default: the packaged fixtures)."""
    key = name.upper()
    if key not in FIXTURE_FILES:
        raise UnknownExample(f"unknown example {name!r}")
    if directory is None:
        text = resources.files("polyneigh").joinpath("fixtures", FIXTURE_FILES[key]).read_text()
    else:
        text = (Path(directory) / FIXTURE_FILES[key]).read_text()
    return Polytope.from_dict(json.loads(text))


@dataclass(frozen=True)
class JoinFamilyCounts:
    n: int
    m: int
    d: int
    f0: int
    f_facets: int


def join_family_counts(n: int, m: int) -> JoinFamilyCounts:
    """Predicted dimension, vertex and facet counts of the m-th iterated
    self-join of a 2-neighborly 4-polytope with n vertices."""
    if n < 5 or m < 0:
        raise BadRange(f"need n >= 5, m >= 0; got n={n}, m={m}")
    d = 5 * 2 ** m - 1
    f0 = 2 ** m * n
    if m == 0:
        facets = n * (n - 3) // 2
    else:
        facets = 2 ** (m - 1) * n * (n - 3)
    return JoinFamilyCounts(n, m, d, f0, facets)


def join_family(n: int, m: int) -> Polytope:
    """Build the family member from ``cyclic(4, n)`` by repeated self-join."""
    if n < 5 or m < 0:
        raise BadRange(f"need n >= 5, m >= 0; got n={n}, m={m}")
    p = cyclic(4, n)
    for _ in range(m):
        p = join(p, p)
    return Polytope(p.ambient_dim, p.vertices, f"P_{n}^{m}")


def pyramid_over_cyclic_counts(d: int, v: int) -> int:
    """Facet count of the (d-4)-fold pyramid over ``cyclic(4, v-d+4)``."""
    if d < 5 or v < d + 2:
        raise BadRange(f"need d >= 5 and v >= d+2, got d={d}, v={v}")
    return (v + 4 - d) * (v + 1 - d) // 2 + d - 4


def pyramid_over_cyclic(d: int, v: int) -> Polytope:
    if d < 5 or v < d + 2:
        raise BadRange(f"need d >= 5 and v >= d+2, got d={d}, v={v}")
    return pyramid(cyclic(4, v - d + 4), d - 4)
