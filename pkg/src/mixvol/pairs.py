"""Volumes and mixed volumes of pairs of polyhedra with a common support cone.

A pair ``(A, B)`` with equal recession cones and bounded symmetric
difference has volume ``vol(A - B) - vol(B - A)``.  Its symmetric
multilinear extension is computed three ways (polarization, the facet
formula, and truncation to bounded polyhedra); the routes share only the
polyhedron core, so they check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial, lcm
from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    EmptyPolyhedronError,
    NotConvenientError,
    SupportConeMismatch,
    UnboundedDifferenceError,
    UnboundedError,
)
from .linalg import IntVec, dot, integer_kernel, solve
from .polyhedron import (
    Polyhedron,
    bounded_facet_normals,
    convex_hull,
    convex_union,
    faces,
    intersect,
    minkowski_sum,
    mixed_volume,
    normal_cone_point,
    point,
    positive_covector,
    product_with_point,
    recession_cone,
    support_face,
    support_value,
    volume,
)

METHODS = ("face_formula", "polarization", "truncation")


@dataclass(frozen=True)
class PolyhedronPair:
    """Ordered pair ``(A, B)`` of polyhedra with identical recession cones.

    Both components may be empty together (the empty pair); a single empty
    component is rejected.
    """

    A: Polyhedron
    B: Polyhedron

    def __post_init__(self):
        if self.A.dim != self.B.dim:
            raise DimensionError("pair components live in different dimensions")
        if self.A.is_empty != self.B.is_empty:
            raise EmptyPolyhedronError("exactly one component of the pair is empty")
        if not self.A.is_empty and self.A.rays != self.B.rays and recession_cone(self.A) != recession_cone(self.B):
            raise SupportConeMismatch("pair components have different recession cones")

    @property
    def dim(self) -> int:
        return self.A.dim

    @property
    def is_empty(self) -> bool:
        return self.A.is_empty

    @property
    def rays(self) -> tuple[IntVec, ...]:
        return self.A.rays

    def __add__(self, other: "PolyhedronPair") -> "PolyhedronPair":
        return PolyhedronPair(minkowski_sum(self.A, other.A), minkowski_sum(self.B, other.B))

    @cached_property
    def has_bounded_difference(self) -> bool:
        if self.is_empty or not self.rays:
            return True
        g0 = positive_covector(self.rays, self.dim)
        m = _threshold([self.A, self.B], g0)
        # above every vertex the slices move by the same recession increments,
        # so the difference is bounded iff one high slice agrees
        eq = [(g0, m)]
        return intersect(self.A, equations=eq) == intersect(self.B, equations=eq)

    def swap(self) -> "PolyhedronPair":
        return PolyhedronPair(self.B, self.A)

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json()}


def _threshold(polys: Iterable[Polyhedron], g0: Sequence[int]) -> Fraction:
    vals = [dot(g0, v) for P in polys for v in P.vertices]
    return 1 + max(vals, default=Fraction(0))


def _truncate(P: Polyhedron, g0: Sequence[int], m: Fraction) -> Polyhedron:
    if P.is_empty or P.is_bounded:
        return P
    return intersect(P, inequalities=[(tuple(-x for x in g0), -m)])


def sum_pairs(pairs: Sequence[PolyhedronPair], dim: int) -> PolyhedronPair:
    acc = PolyhedronPair(point(dim), point(dim))
    for p in pairs:
        acc = acc + p
    return acc


def pair_volume(p: PolyhedronPair) -> Fraction:
    """``vol(A - B) - vol(B - A)`` in the lattice normalization of ``R^dim``."""
    if p.is_empty:
        return Fraction(0)
    if not p.has_bounded_difference:
        raise UnboundedDifferenceError()
    n = p.dim
    if p.A.is_bounded:
        return volume(p.A, n) - volume(p.B, n)
    g0 = positive_covector(p.rays, n)
    m = _threshold([p.A, p.B], g0)
    return volume(_truncate(p.A, g0, m), n) - volume(_truncate(p.B, g0, m), n)


def _check_pairs(pairs: Sequence[PolyhedronPair]) -> int:
    n = len(pairs)
    if any(p.dim != n for p in pairs):
        raise DimensionError(f"mixed volume needs {n} pairs in R^{n}")
    live = [p for p in pairs if not p.is_empty]
    for p in live[1:]:
        if p.rays != live[0].rays and recession_cone(p.A) != recession_cone(live[0].A):
            raise SupportConeMismatch("pairs have different support cones")
    for p in live:
        if not p.has_bounded_difference:
            raise UnboundedDifferenceError()
    return n


def mixed_volume_pairs(pairs: Sequence[PolyhedronPair], method: str = "face_formula") -> Fraction:
    """Mixed volume of ``n`` pairs in ``R^n``.

    ``method`` is one of ``face_formula`` (default), ``polarization`` and
    ``truncation``; all three give the same rational.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    n = _check_pairs(pairs)
    if n == 0:
        return Fraction(1)
    if any(p.is_empty for p in pairs):
        return Fraction(0)
    if method == "polarization":
        return _polarization(pairs, n)
    if method == "truncation":
        return _truncation(pairs, n)
    return sum((t.value for t in face_formula_terms(pairs)), Fraction(0))


def _polarization(pairs: Sequence[PolyhedronPair], n: int) -> Fraction:
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for subset in combinations(range(n), size):
            total += sign * pair_volume(sum_pairs([pairs[i] for i in subset], n))
    return total / factorial(n)


def _truncation(pairs: Sequence[PolyhedronPair], n: int) -> Fraction:
    rays = pairs[0].rays
    if not rays:
        return mixed_volume([p.A for p in pairs]) - mixed_volume([p.B for p in pairs])
    g0 = positive_covector(rays, n)
    m = _threshold([P for p in pairs for P in (p.A, p.B)], g0)
    a = [_truncate(p.A, g0, m) for p in pairs]
    b = [_truncate(p.B, g0, m) for p in pairs]
    return mixed_volume(a) - mixed_volume(b)


@dataclass(frozen=True)
class FaceTerm:
    """One summand of the facet formula: slot ``k`` and normal ``gamma``."""

    k: int
    gamma: IntVec
    support_gap: Fraction
    face_mixed_volume: Fraction

    @property
    def value(self) -> Fraction:
        return self.support_gap * self.face_mixed_volume / len(self.gamma)


def face_formula_terms(pairs: Sequence[PolyhedronPair]) -> list[FaceTerm]:
    """Nonzero summands ``(B_k(g) - A_k(g)) * Vol(A_1^g..A_{k-1}^g, B_{k+1}^g..B_n^g) / n``."""
    n = _check_pairs(pairs)
    if any(p.is_empty for p in pairs):
        return []
    total = sum_pairs(pairs, n)
    P = minkowski_sum(total.A, total.B)
    if not P.is_full_dimensional:
        return []
    out = []
    for gamma, _ in bounded_facet_normals(P):
        lattice = integer_kernel([gamma], n)
        for k in range(n):
            gap = support_value(pairs[k].B, gamma) - support_value(pairs[k].A, gamma)
            if gap == 0:
                continue
            ops = [support_face(pairs[i].A, gamma) for i in range(k)]
            ops += [support_face(pairs[i].B, gamma) for i in range(k + 1, n)]
            mv = _mixed_volume_in_hyperplane(ops, lattice)
            if mv:
                out.append(FaceTerm(k, gamma, gap, mv))
    return out


def _mixed_volume_in_hyperplane(ops: list[Polyhedron], lattice: list[IntVec]) -> Fraction:
    """Mixed volume of polytopes lying in translates of the span of ``lattice``,
    measured in the coordinates of that lattice basis."""
    if not ops:
        return Fraction(1)
    k = len(lattice)
    charted = []
    for F in ops:
        v0 = F.vertices[0]
        pts = [solve(lattice, [a - b for a, b in zip(v, v0)]) if k else () for v in F.vertices]
        charted.append(convex_hull(pts, (), k))
    return mixed_volume(charted)


# --- prisms and Cayley polyhedra ---------------------------------------------------


def simplex_vertex(i: int, size: int) -> tuple[int, ...]:
    """Vertex ``b_i`` (0-based) of the standard simplex in ``R^size``:
    ``b_0`` is the origin and ``b_i = e_i`` otherwise."""
    return tuple(int(j == i - 1) for j in range(size))


def _prism_polyhedron(ops: Sequence[Polyhedron], total: int, offset: int) -> Polyhedron:
    m = ops[0].dim
    pieces = []
    for i, P in enumerate(ops):
        b = [0] * total
        if i > 0:
            b[offset + i - 1] = 1
        pieces.append(product_with_point(P, b))
    return convex_union(pieces) if pieces else Polyhedron.empty(total + m)


def prism(operands: Sequence, total_simplex_dim: int | None = None, offset: int = 0):
    """Prism ``D_1 * ... * D_c`` of polyhedra or of pairs (componentwise).

    The result lives in ``R^s + R^m`` where ``s = total_simplex_dim``
    (default ``c - 1``); the simplex factor occupies coordinates
    ``offset .. offset + c - 2`` and the remaining simplex coordinates are 0.
    Empty operands are skipped.
    """
    if not operands:
        raise DimensionError("prism of an empty list")
    c = len(operands)
    s = c - 1 if total_simplex_dim is None else total_simplex_dim
    if offset + c - 1 > s:
        raise DimensionError("prism simplex factor does not fit at the given offset")
    if isinstance(operands[0], PolyhedronPair):
        if len({p.dim for p in operands}) != 1:
            raise DimensionError("prism operands have different dimensions")
        a = _prism_polyhedron([p.A for p in operands], s, offset)
        b = _prism_polyhedron([p.B for p in operands], s, offset)
        return PolyhedronPair(a, b)
    if len({P.dim for P in operands}) != 1:
        raise DimensionError("prism operands have different dimensions")
    return _prism_polyhedron(list(operands), s, offset)


def cayley_polyhedron(points: Sequence[Sequence[int]], polys: Sequence[Polyhedron]) -> Polyhedron:
    """``conv(U_a {a} x D_a)`` in ``R^N + R^n`` for a point configuration and
    one polyhedron per point."""
    if not points:
        raise EmptyPolyhedronError("empty point configuration")
    if len(points) != len(polys):
        raise DimensionError("one polyhedron per configuration point is required")
    if len({P.dim for P in polys}) != 1:
        raise DimensionError("Cayley components have different dimensions")
    return convex_union([product_with_point(P, a) for a, P in zip(points, polys)])


# --- convenience and stable mixed volumes -------------------------------------------------


def _check_support_cones(polys: Sequence[Polyhedron]) -> None:
    cones = {recession_cone(P) for P in polys}
    if len(cones) != 1:
        raise SupportConeMismatch("polyhedra have different support cones")


def convenience_report(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron], strict: bool = True,
                       strict_off_zero: bool = False, exclude_first_off_zero: bool = False):
    """Check the convenience condition and return ``(ok, witness)``.

    For every covector class ``g`` on the boundary of the support cone and
    every interior class ``d``, some nonempty set ``I`` of indices with
    ``N_i(g) = D_i(g)`` must satisfy ``dim sum_{i in I} (N_i^g)^d < |I|``
    (``<=`` when ``strict`` is false).  ``witness`` is the first failing
    ``(g, d)`` or ``None``.
    """
    if len(deltas) != len(ns):
        raise DimensionError("need one N_i per D_i")
    polys = list(deltas) + list(ns)
    _check_support_cones(polys)
    dim = polys[0].dim
    P = point(dim)
    for Q in polys:
        P = minkowski_sum(P, Q)
    eq_normals = [e for e, _ in P.equations]
    all_faces = faces(P)
    bounded = [f for f in all_faces if f.polyhedron.is_bounded]
    for F in all_faces:
        if F.polyhedron.is_bounded:
            continue
        gamma = normal_cone_point(P, F)
        gens = [P.inequalities[k][0] for k in F.facet_ids]
        gens += eq_normals + [tuple(-x for x in e) for e in eq_normals]
        eligible = [
            i for i in range(len(ns))
            if all(support_value(ns[i], g) == support_value(deltas[i], g) for g in gens + [gamma])
        ]
        if exclude_first_off_zero and any(gamma):
            eligible = [i for i in eligible if i != 0]
        sharp = strict or (strict_off_zero and any(gamma))
        fv = set(F.polyhedron.vertices)
        for G in bounded:
            if not set(G.polyhedron.vertices) <= fv:
                continue
            delta = normal_cone_point(P, G)
            pieces = {i: support_face(ns[i], delta) for i in eligible}
            if not _has_small_subset(pieces, dim, sharp):
                return False, (gamma, delta)
    return True, None


def _has_small_subset(pieces: dict[int, Polyhedron], dim: int, strict: bool) -> bool:
    idx = sorted(pieces)
    for size in range(1, len(idx) + 1):
        for subset in combinations(idx, size):
            S = point(dim)
            for i in subset:
                S = minkowski_sum(S, pieces[i])
            d = S.affine_dim
            if d < size or (not strict and d == size):
                return True
    return False


def is_convenient(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron], strict: bool = True) -> bool:
    return convenience_report(deltas, ns, strict=strict)[0]


def is_very_convenient(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron]) -> bool:
    return convenience_report(deltas, ns, strict=False, strict_off_zero=True)[0]


def is_cone_convenient(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron]) -> bool:
    D1 = deltas[0]
    if D1.is_empty or D1.vertices != ((Fraction(0),) * D1.dim,) and not _is_cone(D1):
        return False
    return convenience_report(deltas, ns, strict=False, strict_off_zero=True, exclude_first_off_zero=True)[0]


def _is_cone(P: Polyhedron) -> bool:
    return len(P.vertices) == 1 and P == recession_cone(P).translate(P.vertices[0])


def truncated_pairs(pairs: Sequence[PolyhedronPair], gamma0: Sequence[int], m) -> list[PolyhedronPair]:
    """Pairs ``(D_i, conv(N_i u (D_i n {gamma0 >= m})))``."""
    out = []
    for p in pairs:
        high = intersect(p.A, inequalities=[(tuple(gamma0), m)])
        out.append(PolyhedronPair(p.A, convex_union([p.B, high])))
    return out


def stability_threshold(pairs: Sequence[PolyhedronPair], gamma0: Sequence[int]) -> int:
    """A level beyond which the truncated values form one polynomial in ``m``.

    Past every vertex level, each vertex of every truncation (and of their
    Minkowski sums) is affine in ``m``, so breakpoints are roots of integer
    polynomials in ``m`` given by orientation determinants.  Their
    coefficients are bounded from the candidate points below, and Cauchy's
    root bound turns that into a threshold.
    """
    n = len(pairs)
    fixed = [v for p in pairs for P in (p.A, p.B) for v in P.vertices]
    rays = pairs[0].rays
    top = max(dot(gamma0, v) for v in fixed)
    den = 1
    a_max = b_max = Fraction(0)
    for v in fixed:
        for r in rays:
            g = dot(gamma0, r)
            for r2 in rays:
                g2 = dot(gamma0, r2)
                # v + ((m - gamma0(v)) / g) r, optionally lifted one level by r2
                a = [x - Fraction(dot(gamma0, v) * y, g) + Fraction(z, g2) for x, y, z in zip(v, r, r2)]
                b = [Fraction(y, g) for y in r]
                for c in a + b + list(v):
                    den = lcm(den, Fraction(c).denominator)
                a_max = max(a_max, max(abs(c) for c in a), max(abs(Fraction(c)) for c in v))
                b_max = max(b_max, max(abs(c) for c in b))
    size = max(den, int(n * den * (a_max + b_max + 1)))
    cauchy = 1 + factorial(n + 1) * size ** (n + 1)
    return max(cauchy, int(top) + 2)


def stable_mixed_volume_pairs(pairs: Sequence[PolyhedronPair], gamma0: Sequence[int] | None = None,
                              method: str = "face_formula") -> Fraction:
    """Stable mixed volume of pairs ``(D_i, N_i)``.

    The pairs need not have bounded differences.  Beyond
    :func:`stability_threshold` the truncated value is a polynomial of degree
    at most ``n`` in the level, so ``n + 1`` consecutive evaluations decide
    whether it is constant; if not, :class:`NotConvenientError` is raised.
    """
    n = len(pairs)
    if any(p.dim != n for p in pairs):
        raise DimensionError(f"stable mixed volume needs {n} pairs in R^{n}")
    rays = pairs[0].rays
    _check_support_cones([P for p in pairs for P in (p.A, p.B)])
    if not rays:
        return mixed_volume_pairs(pairs, method)
    if gamma0 is None:
        gamma0 = positive_covector(rays, n)
    gamma0 = tuple(int(x) for x in gamma0)
    if len(gamma0) != n or any(dot(gamma0, r) <= 0 for r in rays) or not any(gamma0):
        raise UnboundedError("gamma0 is not in the interior of the support cone")
    if any(p.is_empty for p in pairs):
        raise EmptyPolyhedronError("stable mixed volume of an empty polyhedron")
    m = stability_threshold(pairs, gamma0)
    values = {mixed_volume_pairs(truncated_pairs(pairs, gamma0, m + j), method) for j in range(n + 1)}
    if len(values) != 1:
        raise NotConvenientError()
    return values.pop()
