"""Exact rational convex polyhedra in V-representation.

A :class:`Polyhedron` is ``conv(vertices) + cone(rays)`` with a pointed
recession cone.  Every instance is built through :func:`convex_hull`, which
makes the generator lists irredundant and caches the facet description, so
two polyhedra are equal exactly when their canonical generator lists agree.

Volumes are lattice normalized: the unit cube has volume 1, and a polyhedron
spanning a k-dimensional affine subspace is measured against the lattice of
integer vectors parallel to that subspace.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from itertools import combinations
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from .cones import cone_generators
from .errors import DimensionError, EmptyPolyhedronError, NotPointedError, UnboundedError
from .linalg import IntVec, RatVec, det_int, dot, integer_kernel, integerize, primitive, rank, solve

MINUS_INFINITY = -math.inf


def max_dim() -> int:
    return int(os.environ.get("MIXVOL_MAX_DIM", "8"))


def _rat(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """Rational polyhedron ``conv(vertices) + cone(rays)`` in ``R^dim``.

    Construct with :func:`convex_hull` (or :meth:`empty`); the constructor
    itself trusts its arguments to be canonical.
    """

    dim: int
    vertices: tuple[RatVec, ...]
    rays: tuple[IntVec, ...]
    inequalities: tuple[tuple[IntVec, int], ...] = field(default=(), repr=False)
    equations: tuple[tuple[IntVec, int], ...] = field(default=(), repr=False)

    @classmethod
    def empty(cls, dim: int) -> "Polyhedron":
        return cls(dim, (), ())

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    @cached_property
    def affine_dim(self) -> int:
        if self.is_empty:
            return -1
        return self.dim - rank([e for e, _ in self.equations]) if self.equations else self.dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def has_integer_vertices(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    @cached_property
    def _scaled_vertices(self) -> tuple[int, tuple[IntVec, ...]]:
        # common denominator and integer numerators, for fast support queries
        den = reduce(lcm, (x.denominator for v in self.vertices for x in v), 1)
        return den, tuple(tuple(int(x * den) for x in v) for v in self.vertices)

    def _key(self):
        return (self.dim, self.vertices, self.rays)

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_empty:
            return f"Polyhedron.empty({self.dim})"
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        rs = ", ".join(str(r) for r in self.rays)
        return f"Polyhedron(dim={self.dim}, vertices=[{vs}], rays=[{rs}])"

    def __contains__(self, point) -> bool:
        if self.is_empty:
            return False
        x = tuple(_rat(c) for c in point)
        return all(dot(a, x) >= b for a, b in self.inequalities) and all(
            dot(e, x) == b for e, b in self.equations
        )

    def translate(self, shift: Sequence) -> "Polyhedron":
        if self.is_empty:
            return self
        s = tuple(_rat(c) for c in shift)
        return convex_hull([tuple(a + b for a, b in zip(v, s)) for v in self.vertices], self.rays, self.dim)

    def scale(self, factor: int) -> "Polyhedron":
        """Dilation by a positive integer factor."""
        if self.is_empty:
            return self
        return convex_hull([tuple(factor * a for a in v) for v in self.vertices], self.rays, self.dim)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[_fmt(x) for x in v] for v in self.vertices],
            "rays": [list(r) for r in self.rays],
        }


def _fmt(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _homogenize(point: RatVec) -> IntVec:
    den = reduce(lcm, (x.denominator for x in point), 1)
    return (den,) + tuple(int(x * den) for x in point)


def convex_hull(points: Iterable[Sequence], rays: Iterable[Sequence[int]] = (), dim: int | None = None) -> Polyhedron:
    """The smallest polyhedron containing ``points`` and closed under adding ``rays``.

    >>> convex_hull([(7, 0), (2, 4), (5, 3), (0, 7)], [(1, 0), (0, 1)]).vertices
    ((Fraction(0, 1), Fraction(7, 1)), (Fraction(2, 1), Fraction(4, 1)), (Fraction(7, 1), Fraction(0, 1)))
    """
    pts = sorted({tuple(_rat(c) for c in p) for p in points})
    rys = sorted({primitive([int(c) for c in r]) for r in rays if any(r)})
    if dim is None:
        if pts:
            dim = len(pts[0])
        elif rys:
            dim = len(rys[0])
        else:
            raise DimensionError("cannot infer the ambient dimension of an empty point set")
    if any(len(p) != dim for p in pts) or any(len(r) != dim for r in rys):
        raise DimensionError("generators have inconsistent dimensions")
    if dim > max_dim():
        raise DimensionError(f"ambient dimension {dim} exceeds the supported maximum {max_dim()}")
    if not pts:
        return Polyhedron.empty(dim)
    return _hull(tuple(pts), tuple(rys), dim)


@lru_cache(maxsize=8192)
def _hull(pts: tuple[RatVec, ...], rys: tuple[IntVec, ...], dim: int) -> Polyhedron:
    if rys and not is_pointed(rys, dim):
        raise NotPointedError("unbounded in opposite directions")

    gens = [_homogenize(p) for p in pts] + [(0,) + r for r in rys]
    cone_facets, lineality = cone_generators(gens, dim + 1)
    keep_pts = []
    keep_rays = []
    for g, src in zip(gens, pts + rys):
        tight = [c for c in cone_facets if dot(c, g) == 0]
        if rank(tight + lineality) == dim:
            (keep_pts if g[0] else keep_rays).append(src)
    vertex_gens = [g for g in gens if g[0]]
    inequalities = []
    for c in cone_facets:
        # a cone facet is a facet of the polyhedron only if it touches a vertex
        if any(dot(c, g) == 0 for g in vertex_gens):
            inequalities.append((tuple(c[1:]), -c[0]))
    equations = [(tuple(e[1:]), -e[0]) for e in lineality]
    return Polyhedron(dim, tuple(keep_pts), tuple(keep_rays), tuple(sorted(inequalities)), tuple(equations))


def is_pointed(rays: Sequence[IntVec], dim: int) -> bool:
    if not rays:
        return True
    dual_rays, dual_lin = cone_generators(rays, dim)
    return rank(list(dual_rays) + dual_lin) == dim


def positive_covector(rays: Sequence[IntVec], dim: int) -> IntVec:
    """An integer covector strictly positive on ``cone(rays)`` minus the origin."""
    if not rays:
        return tuple([0] * dim)
    dual_rays, dual_lin = cone_generators(rays, dim)
    if rank(list(dual_rays) + dual_lin) != dim:
        raise NotPointedError("unbounded in opposite directions")
    total = [sum(c[i] for c in dual_rays) for i in range(dim)]
    return primitive(total)


def from_inequalities(dim: int, inequalities: Iterable[tuple[Sequence, object]],
                      equations: Iterable[tuple[Sequence, object]] = ()) -> Polyhedron:
    """Polyhedron ``{x : a.x >= b for (a, b) in inequalities, e.x == c for (e, c) in equations}``.

    The system must describe a pointed polyhedron (possibly empty).
    """
    rows = [tuple([0] * 0)]
    rows = [(1,) + (0,) * dim]
    for a, b in inequalities:
        rows.append(integerize((-_rat(b),) + tuple(_rat(x) for x in a)))
    for e, c in equations:
        row = integerize((-_rat(c),) + tuple(_rat(x) for x in e))
        rows.append(row)
        rows.append(tuple(-x for x in row))
    ext, lin = cone_generators(rows, dim + 1)
    if lin:
        raise NotPointedError("constraint system has a lineality space")
    pts = [tuple(Fraction(x, y[0]) for x in y[1:]) for y in ext if y[0] > 0]
    rys = [y[1:] for y in ext if y[0] == 0]
    if not pts:
        return Polyhedron.empty(dim)
    return convex_hull(pts, rys, dim)


def intersect(P: Polyhedron, inequalities=(), equations=()) -> Polyhedron:
    """``P`` cut by extra constraints ``a.x >= b`` and ``e.x == c``."""
    if P.is_empty:
        return P
    return from_inequalities(
        P.dim,
        list(P.inequalities) + list(inequalities),
        list(P.equations) + list(equations),
    )


def minkowski_sum(P: Polyhedron, Q: Polyhedron) -> Polyhedron:
    if P.dim != Q.dim:
        raise DimensionError(f"Minkowski sum of polyhedra in R^{P.dim} and R^{Q.dim}")
    if P.is_empty or Q.is_empty:
        return Polyhedron.empty(P.dim)
    pts = {tuple(a + b for a, b in zip(u, v)) for u in P.vertices for v in Q.vertices}
    return convex_hull(pts, P.rays + Q.rays, P.dim)


def minkowski_sum_all(polys: Sequence[Polyhedron], dim: int) -> Polyhedron:
    """Sum of a list of polyhedra; the empty sum is the origin."""
    acc = point(dim)
    for P in polys:
        acc = minkowski_sum(acc, P)
    return acc


def point(dim: int, coords: Sequence | None = None) -> Polyhedron:
    return convex_hull([coords if coords is not None else (0,) * dim], (), dim)


def orthant(dim: int) -> Polyhedron:
    """The positive orthant ``R^dim_+``."""
    return newton_polyhedron([(0,) * dim])


def newton_polyhedron(exponents: Iterable[Sequence[int]]) -> Polyhedron:
    """``conv(exponents) + R^n_+``."""
    exps = [tuple(e) for e in exponents]
    if not exps:
        raise EmptyPolyhedronError("a Newton polyhedron needs at least one exponent")
    n = len(exps[0])
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return convex_hull(exps, unit, n)


def simplex_complement(dim: int, scale: int = 1) -> Polyhedron:
    """``{x in R^dim_+ : sum(x) >= scale}``, the Newton polyhedron of a generic
    homogeneous polynomial of degree ``scale``."""
    return newton_polyhedron([tuple(scale * int(i == j) for j in range(dim)) for i in range(dim)])


def convex_union(polys: Sequence[Polyhedron]) -> Polyhedron:
    """Convex hull of a union; empty members are ignored."""
    if not polys:
        raise DimensionError("convex union of an empty list")
    dims = {P.dim for P in polys}
    if len(dims) != 1:
        raise DimensionError("convex union of polyhedra with different ambient dimensions")
    dim = dims.pop()
    pts = [v for P in polys for v in P.vertices]
    rys = [r for P in polys if not P.is_empty for r in P.rays]
    if not pts:
        return Polyhedron.empty(dim)
    return convex_hull(pts, rys, dim)


def _int_covector(gamma: Sequence) -> IntVec | None:
    if all(type(c) is int for c in gamma):
        return tuple(gamma)
    if all(Fraction(c).denominator == 1 for c in gamma):
        return tuple(int(c) for c in gamma)
    return None


def _vertex_values(P: Polyhedron, gamma: Sequence) -> list:
    g = _int_covector(gamma)
    if g is None:
        g = tuple(_rat(c) for c in gamma)
        return [dot(g, v) for v in P.vertices]
    den, scaled = P._scaled_vertices
    return [Fraction(dot(g, v), den) for v in scaled]


def support_value(P: Polyhedron, gamma: Sequence):
    """``min_{x in P} gamma(x)``, or :data:`MINUS_INFINITY` outside the support cone."""
    if P.is_empty:
        raise EmptyPolyhedronError("support function of the empty polyhedron")
    if any(dot(gamma, r) < 0 for r in P.rays):
        return MINUS_INFINITY
    return min(_vertex_values(P, gamma))


def support_face(P: Polyhedron, gamma: Sequence) -> Polyhedron:
    if P.is_empty:
        raise EmptyPolyhedronError("support function of the empty polyhedron")
    if any(dot(gamma, r) < 0 for r in P.rays):
        raise UnboundedError("covector lies outside the support cone")
    vals = _vertex_values(P, gamma)
    val = min(vals)
    verts = [v for v, x in zip(P.vertices, vals) if x == val]
    rys = [r for r in P.rays if dot(gamma, r) == 0]
    return convex_hull(verts, rys, P.dim)


def recession_cone(P: Polyhedron) -> Polyhedron:
    return convex_hull([(0,) * P.dim], P.rays, P.dim)


def same_recession_cone(P: Polyhedron, Q: Polyhedron) -> bool:
    if P.dim != Q.dim:
        return False
    return recession_cone(P) == recession_cone(Q)


# --- faces -----------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    polyhedron: Polyhedron
    facet_ids: frozenset[int]  # indices into the parent's inequality list


def faces(P: Polyhedron) -> list[Face]:
    """All nonempty faces of ``P`` (``P`` itself included)."""
    if P.is_empty:
        return []
    nv, nr = len(P.vertices), len(P.rays)
    inc = []
    for a, b in P.inequalities:
        vs = frozenset(i for i, v in enumerate(P.vertices) if dot(a, v) == b)
        rs = frozenset(j for j, r in enumerate(P.rays) if dot(a, r) == 0)
        inc.append((vs, rs))
    top = (frozenset(range(nv)), frozenset(range(nr)))
    seen = {top}
    queue = [top]
    while queue:
        vs, rs = queue.pop()
        for fv, fr in inc:
            sub = (vs & fv, rs & fr)
            if sub[0] and sub not in seen:
                seen.add(sub)
                queue.append(sub)
    out = []
    for vs, rs in seen:
        ids = frozenset(k for k, (fv, fr) in enumerate(inc) if vs <= fv and rs <= fr)
        poly = convex_hull([P.vertices[i] for i in vs], [P.rays[j] for j in rs], P.dim)
        out.append(Face(poly, ids))
    out.sort(key=lambda f: (f.polyhedron.affine_dim, f.polyhedron._key()))
    return out


def normal_cone_point(P: Polyhedron, face: Face) -> IntVec:
    """A covector in the relative interior of the normal cone of ``face``
    (sum of the primitive normals of the facets containing it)."""
    total = [0] * P.dim
    for k in face.facet_ids:
        a = primitive(P.inequalities[k][0])
        total = [x + y for x, y in zip(total, a)]
    return tuple(total)


def facets_with_normals(P: Polyhedron) -> list[tuple[IntVec, Fraction]]:
    """Facet inequalities ``gamma(x) >= offset`` with primitive ``gamma``."""
    out = []
    for a, b in P.inequalities:
        g = reduce(gcd, a, 0)
        out.append((tuple(x // g for x in a), Fraction(b, g)))
    return out


def bounded_facet_normals(P: Polyhedron) -> list[tuple[IntVec, Polyhedron]]:
    """Primitive normals of the bounded facets of a full-dimensional ``P``.

    These are the covectors in the interior of the support cone whose
    support face is a facet.
    """
    if P.is_empty:
        return []
    if not P.is_full_dimensional:
        raise DimensionError("bounded facet normals need a full-dimensional polyhedron")
    out = []
    for gamma, _ in facets_with_normals(P):
        if all(dot(gamma, r) > 0 for r in P.rays):
            out.append((gamma, support_face(P, gamma)))
    out.sort(key=lambda t: t[0])
    return out


def restrict_to_axes(P: Polyhedron, axes: Sequence[int]) -> Polyhedron:
    """``P`` intersected with the coordinate subspace spanned by ``axes``
    (0-based indices), expressed in the coordinates of that subspace.

    An empty intersection comes back as ``Polyhedron.empty(len(axes))``.
    """
    axes = sorted(set(axes))
    dropped = [i for i in range(P.dim) if i not in axes]
    eqs = [(tuple(int(j == i) for j in range(P.dim)), 0) for i in dropped]
    cut = intersect(P, equations=eqs)
    if cut.is_empty:
        return Polyhedron.empty(len(axes))
    return convex_hull(
        [tuple(v[i] for i in axes) for v in cut.vertices],
        [tuple(r[i] for i in axes) for r in cut.rays],
        len(axes),
    )


def embed(P: Polyhedron, dim: int, coords: Sequence[int], offset: Sequence | None = None) -> Polyhedron:
    """Place ``P`` into ``R^dim``: coordinate ``i`` of ``P`` goes to ``coords[i]``,
    the remaining coordinates are taken from ``offset`` (default zero)."""
    base = [Fraction(0)] * dim if offset is None else [_rat(c) for c in offset]

    def lift(v, fill):
        out = list(fill)
        for x, c in zip(v, coords):
            out[c] = x
        return tuple(out)

    if P.is_empty:
        return Polyhedron.empty(dim)
    return convex_hull([lift(v, base) for v in P.vertices], [lift(r, [0] * dim) for r in P.rays], dim)


def product_with_point(P: Polyhedron, pt: Sequence, first: bool = True) -> Polyhedron:
    """``{pt} x P`` (or ``P x {pt}`` when ``first`` is false)."""
    pt = tuple(_rat(c) for c in pt)
    k = len(pt)
    if P.is_empty:
        return Polyhedron.empty(P.dim + k)
    z = (0,) * k
    if first:
        return convex_hull([pt + v for v in P.vertices], [z + r for r in P.rays], P.dim + k)
    return convex_hull([v + pt for v in P.vertices], [r + z for r in P.rays], P.dim + k)


# --- volumes -----------------------------------------------------------------


def direction_lattice(P: Polyhedron) -> list[IntVec]:
    """Z-basis of the integer vectors parallel to the affine span of ``P``."""
    if not P.equations:
        return [tuple(int(i == j) for j in range(P.dim)) for i in range(P.dim)]
    return integer_kernel([e for e, _ in P.equations], P.dim)


def lattice_chart(P: Polyhedron) -> tuple[RatVec, list[IntVec]]:
    """An origin in ``P`` and a lattice basis of its direction space."""
    return P.vertices[0], direction_lattice(P)


def to_chart(x: Sequence, origin: RatVec, basis: list[IntVec]) -> RatVec:
    diff = tuple(_rat(a) - b for a, b in zip(x, origin))
    if not basis:
        return ()
    return solve(basis, diff)


def lattice_volume(P: Polyhedron) -> Fraction:
    """Lattice-normalized volume of a bounded polyhedron in its own affine span."""
    if P.is_empty:
        raise EmptyPolyhedronError("volume of the empty polyhedron")
    if not P.is_bounded:
        raise UnboundedError("volume of an unbounded polyhedron")
    k = P.affine_dim
    if k == 0:
        return Fraction(1)
    if k == P.dim:
        return _fulldim_volume(P)
    origin, basis = lattice_chart(P)
    Q = convex_hull([to_chart(v, origin, basis) for v in P.vertices], (), k)
    return _fulldim_volume(Q)


def volume(P: Polyhedron, k: int | None = None) -> Fraction:
    """``k``-dimensional lattice volume (default ``k = P.dim``); zero when
    ``P`` is empty or spans fewer than ``k`` dimensions."""
    if k is None:
        k = P.dim
    if P.is_empty or P.affine_dim < k:
        return Fraction(0)
    if P.affine_dim > k:
        raise DimensionError(f"{P.affine_dim}-dimensional polyhedron has no finite {k}-volume")
    return lattice_volume(P)


def _fulldim_volume(P: Polyhedron) -> Fraction:
    d = P.dim
    den, verts = P._scaled_vertices
    facet_sets = [frozenset(i for i, v in enumerate(verts) if dot(a, v) == b * den) for a, b in P.inequalities]
    memo: dict[frozenset[int], list[tuple[int, ...]]] = {}

    def triangulate(face: frozenset[int]) -> list[tuple[int, ...]]:
        if face in memo:
            return memo[face]
        if len(face) == 1:
            memo[face] = [tuple(face)]
            return memo[face]
        cands = {face & fs for fs in facet_sets if not face <= fs and face & fs}
        maximal = [c for c in cands if not any(c < o for o in cands)]
        w = min(face)
        out = []
        for sub in maximal:
            if w in sub:
                continue
            for s in triangulate(sub):
                out.append((w,) + s)
        memo[face] = out
        return out

    total = 0
    for simplex in triangulate(frozenset(range(len(verts)))):
        v0 = verts[simplex[0]]
        m = [[a - b for a, b in zip(verts[i], v0)] for i in simplex[1:]]
        total += abs(det_int(m))
    return Fraction(total, factorial(d) * den ** d)


def mixed_volume(polys: Sequence[Polyhedron]) -> Fraction:
    """Classical mixed volume of ``n`` bounded polyhedra in ``R^n``,
    normalized so that ``mixed_volume([P] * n) == volume(P)``."""
    n = len(polys)
    if n == 0:
        return Fraction(1)
    if any(P.dim != n for P in polys):
        raise DimensionError(f"mixed volume needs {n} polyhedra in R^{n}")
    if any(not P.is_bounded for P in polys):
        raise UnboundedError("mixed volume of an unbounded polyhedron")
    return _inclusion_exclusion(polys, n, lambda S: volume(S, n))


def mixed_volume_in_span(polys: Sequence[Polyhedron], k: int) -> Fraction:
    """Mixed volume of ``k`` bounded polyhedra lying in translates of one
    ``k``-dimensional rational subspace, in that subspace's induced lattice."""
    if k == 0:
        return Fraction(1)
    return _inclusion_exclusion(polys, k, lambda S: volume_k(S, k))


def volume_k(P: Polyhedron, k: int) -> Fraction:
    if P.is_empty or P.affine_dim < k:
        return Fraction(0)
    return lattice_volume(P)


def _inclusion_exclusion(polys, n, vol) -> Fraction:
    dim = polys[0].dim
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for subset in combinations(range(n), size):
            S = minkowski_sum_all([polys[i] for i in subset], dim)
            total += sign * vol(S)
    return total / factorial(n)


def parse_polyhedron(obj: dict) -> Polyhedron:
    """Read the JSON literal ``{"dim", "vertices", "rays"}`` or the shorthand
    ``{"newton": {"dim", "exponents"}}``."""
    if "newton" in obj:
        newton = obj["newton"]
        exps = [tuple(int(x) for x in e) for e in newton["exponents"]]
        P = newton_polyhedron(exps)
        if "dim" in newton and P.dim != int(newton["dim"]):
            raise DimensionError("newton shorthand: exponent length does not match dim")
        return P
    dim = int(obj["dim"])
    verts = [tuple(_rat(x) for x in v) for v in obj.get("vertices", [])]
    rays = [tuple(int(x) for x in r) for r in obj.get("rays", [])]
    if not verts:
        return Polyhedron.empty(dim)
    return convex_hull(verts, rays, dim)
