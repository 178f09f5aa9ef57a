"""Exact rational scalars, points, and the small amount of linear algebra the
rest of the package needs (rank, affine dimension, hyperplane through points).

Scalars are :class:`fractions.Fraction`; it already keeps every value in
lowest terms with a positive denominator.  Points are plain tuples of
fractions so they hash and compare exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateInput,
    EmptyInput,
    MixedDimensions,
    OnHyperplane,
    ParseError,
)

Rational = Fraction
Point = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"3"``, ``"-3/4"`` (or a plain ``int``) into a Fraction.

    Decimals, signs other than a leading minus, and zero denominators are
    rejected.
    """
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_point(coords: Iterable) -> Point:
    return tuple(c if isinstance(c, Fraction) else parse_rational(c) for c in coords)


@dataclass(frozen=True)
class Hyperplane:
    """Inequality ``normal . x <= offset`` with a primitive integer normal."""

    normal: tuple
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise DegenerateInput("hyperplane normal is zero")

    def value(self, point: Sequence) -> Fraction:
        """``normal . point - offset``; non-positive on the polytope side."""
        return sum(a * x for a, x in zip(self.normal, point) if a) - self.offset

    def contains(self, point: Sequence) -> bool:
        return self.value(point) == 0

    def sort_key(self):
        return (self.normal, self.offset)

    def to_dict(self) -> dict:
        return {
            "normal": [str(a) for a in self.normal],
            "offset": str(self.offset),
        }


def _check_rectangular(rows) -> int:
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise MixedDimensions(f"rows have differing lengths {sorted(widths)}")
    return widths.pop() if widths else 0


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix.

    Rows are scaled to integers (rank is unchanged) and eliminated
    fraction-free; each pivot is the entry of largest magnitude in its column.
    """
    rows = [list(r) for r in matrix]
    width = _check_rectangular(rows)
    work = [r for r in _integer_rows(rows) if any(r)]
    r = 0
    for col in range(width):
        if r == len(work):
            break
        piv = max(range(r, len(work)), key=lambda i: abs(work[i][col]))
        if work[piv][col] == 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][col]
        prow = work[r]
        for i in range(r + 1, len(work)):
            a = work[i][col]
            if a:
                row = [p * x - a * y for x, y in zip(work[i], prow)]
                g = math.gcd(*row)
                work[i] = [x // g for x in row] if g > 1 else row
        r += 1
    return r


def _differences(points: Sequence[Sequence]) -> list[list[Fraction]]:
    if not points:
        raise EmptyInput("no points given")
    _check_rectangular(points)
    base = points[0]
    return [[a - b for a, b in zip(p, base)] for p in points[1:]]


def affine_dim(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points``."""
    diffs = _differences(points)
    return rank(diffs) if diffs else 0


def nullspace(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right null space.

    Fraction-free Gauss-Jordan on integer-scaled rows; fractions appear only
    when reading off the basis vectors.
    """
    rows = [list(r) for r in matrix]
    width = _check_rectangular(rows) if rows else 0
    work = [r for r in _integer_rows(rows) if any(r)]
    pivots = []
    r = 0
    for col in range(width):
        if r == len(work):
            break
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        p = prow[col]
        for i in range(len(work)):
            a = work[i][col]
            if i != r and a:
                row = [p * x - a * y for x, y in zip(work[i], prow)]
                g = math.gcd(*row)
                work[i] = [x // g for x in row] if g > 1 else row
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for fc in (c for c in range(width) if c not in pivot_set):
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = Fraction(-work[i][fc], work[i][pc])
        basis.append(vec)
    return basis


def primitive(vector: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers (sign preserved)."""
    scale = math.lcm(*(Fraction(x).denominator for x in vector))
    ints = [int(Fraction(x) * scale) for x in vector]
    g = math.gcd(*ints)
    return [x // g for x in ints] if g else ints


def hyperplane_through(points: Sequence[Sequence], inside_point: Sequence) -> Hyperplane:
    """The canonical hyperplane through ``D`` affinely independent points in
    ambient dimension ``D``, oriented so ``inside_point`` is strictly on the
    ``<=`` side."""
    if not points:
        raise EmptyInput("no points given")
    dim = len(points[0])
    _check_rectangular(list(points) + [inside_point])
    if len(points) != dim:
        raise DegenerateInput(f"need exactly {dim} points in dimension {dim}, got {len(points)}")
    diffs = _differences(points)
    kernel = nullspace(diffs) if diffs else [[Fraction(1)]]
    if len(kernel) != 1:
        raise DegenerateInput("points are affinely dependent")
    normal = kernel[0]
    offset = sum(a * x for a, x in zip(normal, points[0]))
    coeffs = primitive(normal + [offset])
    normal_i, offset_i = coeffs[:-1], coeffs[-1]
    side = sum(a * x for a, x in zip(normal_i, inside_point)) - offset_i
    if side == 0:
        raise OnHyperplane("inside point lies on the hyperplane")
    if side > 0:
        normal_i = [-a for a in normal_i]
        offset_i = -offset_i
    return Hyperplane(tuple(normal_i), offset_i)
