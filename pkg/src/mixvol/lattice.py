"""Lattice-point counts and the lattice formula for mixed volumes of prisms."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import ceil, factorial, floor
from typing import Sequence, Union

from .errors import DimensionError, UnboundedDifferenceError, UnboundedError
from .linalg import dot
from .pairs import PolyhedronPair, _threshold, _truncate, mixed_volume_pairs, prism
from .polyhedron import Polyhedron, convex_union, minkowski_sum, mixed_volume, point, positive_covector

Entry = Union[Polyhedron, PolyhedronPair]


def count_points(P: Polyhedron) -> int:
    """Number of integer points in a bounded polyhedron (box scan)."""
    if P.is_empty:
        return 0
    if not P.is_bounded:
        raise UnboundedError("lattice count of an unbounded polyhedron")
    lo = [ceil(min(v[i] for v in P.vertices)) for i in range(P.dim)]
    hi = [floor(max(v[i] for v in P.vertices)) for i in range(P.dim)]
    if any(a > b for a, b in zip(lo, hi)):
        return 0
    ineqs = P.inequalities
    eqs = P.equations
    count = 0
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(dot(e, x) == c for e, c in eqs) and all(dot(a, x) >= b for a, b in ineqs):
            count += 1
    return count


def count_points_pair(p: PolyhedronPair) -> int:
    """``I(A - B) - I(B - A)`` for a pair with bounded difference."""
    if p.is_empty:
        return 0
    if not p.has_bounded_difference:
        raise UnboundedDifferenceError()
    if p.A.is_bounded:
        return count_points(p.A) - count_points(p.B)
    g0 = positive_covector(p.rays, p.dim)
    m = _threshold([p.A, p.B], g0)
    return count_points(_truncate(p.A, g0, m)) - count_points(_truncate(p.B, g0, m))


def _count(x: Entry) -> int:
    return count_points_pair(x) if isinstance(x, PolyhedronPair) else count_points(x)


def _add(x: Entry, y: Entry) -> Entry:
    if isinstance(x, PolyhedronPair):
        if x.is_empty or y.is_empty:
            return PolyhedronPair(Polyhedron.empty(x.dim), Polyhedron.empty(x.dim))
        return x + y
    return minkowski_sum(x, y)


def _union(items: list[Entry], dim: int, pairs: bool) -> Entry:
    if pairs:
        live = [p for p in items if not p.is_empty]
        if not live:
            return PolyhedronPair(Polyhedron.empty(dim), Polyhedron.empty(dim))
        return PolyhedronPair(convex_union([p.A for p in live]), convex_union([p.B for p in live]))
    return convex_union(items)


def _zero(dim: int, pairs: bool) -> Entry:
    return PolyhedronPair(point(dim), point(dim)) if pairs else point(dim)


def _shape(B: Sequence[Sequence[Entry]]) -> tuple[int, int, int, bool]:
    n = len(B)
    if n == 0 or not B[0]:
        raise DimensionError("empty prism array")
    k = len(B[0])
    if any(len(row) != k for row in B):
        raise DimensionError("prism array rows have different lengths")
    m = B[0][0].dim
    if any(x.dim != m for row in B for x in row):
        raise DimensionError("prism entries live in different dimensions")
    if m != k - n + 1:
        raise DimensionError(f"need m = k - n + 1, got m={m}, k={k}, n={n}")
    pairs = isinstance(B[0][0], PolyhedronPair)
    if any(isinstance(x, PolyhedronPair) != pairs for row in B for x in row):
        raise DimensionError("mix of polyhedra and pairs in one prism array")
    return n, k, m, pairs


def prism_lattice_terms(B: Sequence[Sequence[Entry]]) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Signed terms ``(J, b, (-1)^{k-|J|} I(...))`` of the lattice formula.

    ``B[i][j]`` is row ``i`` (simplex vertex) and column ``j`` (prism index).
    """
    n, k, m, pairs = _shape(B)
    out = []
    for size in range(k + 1):
        sign = -1 if (k - size) % 2 else 1
        for J in combinations(range(k), size):
            groups: dict[tuple[int, ...], list[Entry]] = {}
            for assign in product(range(n), repeat=size):
                b = tuple(assign.count(i) for i in range(n))
                acc = _zero(m, pairs)
                for j, i in zip(J, assign):
                    acc = _add(acc, B[i][j])
                groups.setdefault(b, []).append(acc)
            for b in sorted(groups):
                val = _count(_union(groups[b], m, pairs))
                if val:
                    out.append((J, b, sign * val))
    return out


def prism_mixed_volume_lattice(B: Sequence[Sequence[Entry]]) -> Fraction:
    """Mixed volume of the prisms ``B[0][j] * ... * B[n-1][j]`` (``j < k``)
    from lattice counts of convex unions of partition sums."""
    n, k, m, pairs = _shape(B)
    return Fraction(sum(t[2] for t in prism_lattice_terms(B)), factorial(k))


def prism_columns(B: Sequence[Sequence[Entry]]) -> list[Entry]:
    n, k, m, pairs = _shape(B)
    return [prism([B[i][j] for i in range(n)]) for j in range(k)]


def prism_mixed_volume_direct(B: Sequence[Sequence[Entry]], method: str = "face_formula") -> Fraction:
    """The same mixed volume computed on the prisms themselves."""
    n, k, m, pairs = _shape(B)
    cols = prism_columns(B)
    if pairs:
        return mixed_volume_pairs(cols, method)
    if any(P.is_empty for P in cols):
        return Fraction(0)
    return mixed_volume(cols)
