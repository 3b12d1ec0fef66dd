import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from mixvol import (DimensionError, PolyhedronPair, UnboundedDifferenceError, UnboundedError, convex_hull,
                    count_points, count_points_pair, minkowski_sum, newton_polyhedron, orthant,
                    prism_mixed_volume_direct, prism_mixed_volume_lattice)
from mixvol.lattice import prism_lattice_terms
from mixvol.polyhedron import Polyhedron


def ray_pair(a: int) -> PolyhedronPair:
    return PolyhedronPair(orthant(1), newton_polyhedron([(a,)]))


def test_count_examples():
    assert count_points(convex_hull([(0, 0), (2, 0), (0, 2)])) == 6
    cube = convex_hull(list(product((0, 1), repeat=3)))
    assert count_points(cube) == 8
    assert count_points(convex_hull([(Fraction(1, 2), Fraction(1, 2))])) == 0
    assert count_points(Polyhedron.empty(2)) == 0
    with pytest.raises(UnboundedError):
        count_points(orthant(2))


def test_count_pair_examples():
    assert count_points_pair(ray_pair(2)) == 2
    assert count_points_pair(PolyhedronPair(orthant(2), newton_polyhedron([(2, 0), (0, 3)]))) == 5
    P = newton_polyhedron([(1, 1)])
    assert count_points_pair(PolyhedronPair(P, P)) == 0
    with pytest.raises(UnboundedDifferenceError):
        count_points_pair(PolyhedronPair(orthant(2), newton_polyhedron([(1, 0)])))


def test_count_is_additive_on_a_split():
    rng = random.Random(31)
    for _ in range(30):
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(5)]
        P = convex_hull(pts)
        c = rng.randint(0, 6)
        from mixvol.polyhedron import intersect
        low = intersect(P, inequalities=[((-1, 0), -c)])
        high = intersect(P, inequalities=[((1, 0), c + 1)])
        assert count_points(P) == count_points(low) + count_points(high)


def test_prism_lattice_examples():
    B = [[ray_pair(1), ray_pair(3)], [ray_pair(2), ray_pair(1)]]
    assert prism_mixed_volume_lattice(B) == 1
    assert prism_mixed_volume_direct(B) == 1
    assert sum(t[2] for t in prism_lattice_terms(B) if len(t[0]) == 1) == -7
    assert sum(t[2] for t in prism_lattice_terms(B) if len(t[0]) == 2) == 9
    same = [[ray_pair(1)] * 2] * 2
    assert prism_mixed_volume_lattice(same) == 1


def test_prism_degenerate_single_row():
    from mixvol import mixed_volume_pairs
    R2 = orthant(2)
    row = [PolyhedronPair(R2, newton_polyhedron([(2, 0), (0, 3)])), PolyhedronPair(R2, newton_polyhedron([(1, 0), (0, 1)]))]
    assert prism_mixed_volume_lattice([row]) == mixed_volume_pairs(row)


def test_prism_empty_entries():
    B = [[ray_pair(1), ray_pair(2)], [PolyhedronPair(Polyhedron.empty(1), Polyhedron.empty(1)), ray_pair(1)]]
    assert prism_mixed_volume_lattice(B) == prism_mixed_volume_direct(B)


def test_prism_shape_errors():
    with pytest.raises(DimensionError):
        prism_mixed_volume_lattice([[ray_pair(1)] * 3] * 2)


def test_bounded_prisms_agree():
    rng = random.Random(32)
    for _ in range(10):
        B = [[convex_hull([(rng.randint(0, 3),), (rng.randint(0, 3),)]) for _ in range(2)] for _ in range(2)]
        assert prism_mixed_volume_lattice(B) == prism_mixed_volume_direct(B)


def _simplex_faces(q: int):
    verts = [tuple(int(i == j) for j in range(q)) for i in range(q)] + [(0,) * q]
    for size in range(1, q + 2):
        yield from combinations(verts, size)


def _points(P: Polyhedron):
    lo = [min(int(v[i]) for v in P.vertices) for i in range(P.dim)]
    hi = [max(int(v[i]) for v in P.vertices) for i in range(P.dim)]
    return {x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))) if x in P}


@pytest.mark.parametrize("q", [1, 2, 3])
def test_lattice_sum_property_for_simplex_faces(q):
    rng = random.Random(40 + q)
    faces = list(_simplex_faces(q))
    for F, G in product(faces, repeat=2):
        s, t = [tuple(rng.randint(-2, 2) for _ in range(q)) for _ in range(2)]
        A = convex_hull([tuple(a + b for a, b in zip(v, s)) for v in F])
        B = convex_hull([tuple(a + b for a, b in zip(v, t)) for v in G])
        sums = {tuple(a + b for a, b in zip(x, y)) for x in _points(A) for y in _points(B)}
        assert sums == _points(minkowski_sum(A, B))
