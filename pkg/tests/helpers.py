"""Random instance generators and independent oracles shared by the tests.

The oracles avoid the package's own hull and face code: they use brute-force
plane enumeration, Pick-style counting, and sympy Groebner bases.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

import sympy as sp

from mixvol import PolyhedronPair, convex_hull, newton_polyhedron, orthant


# ---------------------------------------------------------------- generators

def random_newton(rng: random.Random, n: int, top: int = 5, extra: int = 2):
    """Newton polyhedron meeting every axis, with a few interior exponents."""
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = rng.randint(1, top)
        pts.append(tuple(e))
    for _ in range(rng.randint(0, extra)):
        pts.append(tuple(rng.randint(0, top) for _ in range(n)))
    return newton_polyhedron(pts)


def random_polytope(rng: random.Random, n: int, top: int = 5, count: int | None = None):
    count = count or rng.randint(1, n + 2)
    return convex_hull([tuple(rng.randint(0, top) for _ in range(n)) for _ in range(count)], dim=n)


def random_pair(rng: random.Random, n: int, top: int = 5) -> PolyhedronPair:
    """Either a bounded pair of polytopes or an orthant-type pair."""
    kind = rng.random()
    if kind < 0.35:
        return PolyhedronPair(random_polytope(rng, n, top), random_polytope(rng, n, top))
    if kind < 0.6:
        return PolyhedronPair(orthant(n), random_newton(rng, n, top))
    return PolyhedronPair(random_newton(rng, n, top), random_newton(rng, n, top))


def random_pairs(rng: random.Random, n: int, top: int = 5) -> list[PolyhedronPair]:
    if rng.random() < 0.35:
        return [PolyhedronPair(random_polytope(rng, n, top), random_polytope(rng, n, top)) for _ in range(n)]
    out = []
    for _ in range(n):
        if rng.random() < 0.5:
            out.append(PolyhedronPair(orthant(n), random_newton(rng, n, top)))
        else:
            out.append(PolyhedronPair(random_newton(rng, n, top), random_newton(rng, n, top)))
    return out


# ------------------------------------------------------------------ geometry

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def monotone_chain(points):
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def shoelace(points) -> Fraction:
    h = monotone_chain(points)
    if len(h) < 3:
        return Fraction(0)
    s = sum(h[i][0] * h[(i + 1) % len(h)][1] - h[(i + 1) % len(h)][0] * h[i][1] for i in range(len(h)))
    return Fraction(abs(s), 2)


def brute_facets(points):
    """Halfspaces ``a.x >= b`` of the hull of 3D points, from every plane
    through three of them that has all points on one side."""
    pts = sorted(set(tuple(p) for p in points))
    out = set()
    for p, q, r in combinations(pts, 3):
        u = [q[i] - p[i] for i in range(3)]
        v = [r[i] - p[i] for i in range(3)]
        a = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        if a == (0, 0, 0):
            continue
        b = sum(a[i] * p[i] for i in range(3))
        vals = [sum(a[i] * x[i] for i in range(3)) - b for x in pts]
        if all(x >= 0 for x in vals):
            out.add((a, b))
        elif all(x <= 0 for x in vals):
            out.add((tuple(-c for c in a), -b))
    return out


def brute_count(points, dim: int) -> int:
    """Integer points of conv(points) for full-dimensional hulls in dim 1..3."""
    pts = [tuple(p) for p in points]
    lo = [min(p[i] for p in pts) for i in range(dim)]
    hi = [max(p[i] for p in pts) for i in range(dim)]
    if dim == 1:
        return hi[0] - lo[0] + 1
    if dim == 2:
        h = monotone_chain(pts)
        if len(h) < 3:
            raise ValueError("degenerate")
        edges = [(h[i], h[(i + 1) % len(h)]) for i in range(len(h))]
        return sum(1 for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
                   if all(_cross(e0, e1, x) >= 0 for e0, e1 in edges))
    facets = brute_facets(pts)
    return sum(1 for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
               if all(sum(a[i] * x[i] for i in range(3)) >= b for a, b in facets))


def ehrhart_volume(points, dim: int) -> Fraction:
    """Leading coefficient of the Ehrhart polynomial from ``dim + 1`` brute counts."""
    ts = list(range(1, dim + 2))
    counts = [brute_count([tuple(t * c for c in p) for p in points], dim) for t in ts]
    t = sp.symbols("t")
    poly = sp.interpolate(list(zip(ts, counts)), t)
    return Fraction(str(sp.Poly(poly, t).LC()))


# ------------------------------------------------------------------- algebra

def local_length(polys, gens) -> int:
    """Length of the local algebra at the origin: ``dim C[x]/(I + m^N)`` for
    growing ``N`` until two consecutive values agree (Nakayama)."""
    prev = None
    N = 1
    while True:
        m = [sp.Mul(*[g ** e for g, e in zip(gens, exps)])
             for exps in product(range(N + 1), repeat=len(gens)) if sum(exps) == N]
        G = sp.groebner(list(polys) + m, *gens, order="grevlex")
        cur = standard_monomial_count(G, gens, N)
        if cur == prev:
            return cur
        prev = cur
        N += 1


def standard_monomial_count(G, gens, bound: int) -> int:
    leads = [sp.Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for exps in product(range(bound + 1), repeat=len(gens)):
        if not any(all(e >= l for e, l in zip(exps, lead)) for lead in leads):
            count += 1
    return count


def global_length(polys, gens, bound: int = 40) -> int:
    G = sp.groebner(list(polys), *gens, order="grevlex")
    return standard_monomial_count(G, gens, bound)


def resultant_exponents(degrees: list[list[int]]):
    """Exponent vectors (over all coefficients) of the univariate resultant
    of two generic polynomials with the given exponent supports."""
    x = sp.symbols("x")
    coeffs = []
    polys = []
    for j, sup in enumerate(degrees):
        cs = sp.symbols(f"c{j}_0:{len(sup)}")
        coeffs.extend(cs)
        polys.append(sum(c * x ** d for c, d in zip(cs, sup)))
    res = sp.expand(sp.resultant(polys[0], polys[1], x))
    return [tuple(m) for m in sp.Poly(res, *coeffs).monoms()]
