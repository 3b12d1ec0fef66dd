import random
from fractions import Fraction

import sympy as sp

from mixvol.linalg import (det, det_int, integer_kernel, integerize, lattice_index, nullspace,
                           primitive, rank, solve)


def test_primitive_and_integerize():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert integerize((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


def test_det_matches_sympy():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        expected = int(sp.Matrix(m).det())
        assert det_int(m) == expected
        assert det(m) == expected


def test_rank_and_nullspace_match_sympy():
    rng = random.Random(6)
    for _ in range(150):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        m = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        assert rank(m) == sp.Matrix(m).rank()
        ker = nullspace(m, c)
        assert len(ker) == c - sp.Matrix(m).rank()
        for v in ker:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_solve():
    y = solve([(1, 0), (1, 1)], (3, 5))
    assert y == (Fraction(-2), Fraction(5))


def test_integer_kernel_is_saturated():
    ker = integer_kernel([[2, 4, 6]], 3)
    assert len(ker) == 2
    assert lattice_index([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == 1
    # the kernel lattice of (2,4,6) is spanned by (2,-1,0),(3,0,-1) with index 1 in its span
    for v in ker:
        assert 2 * v[0] + 4 * v[1] + 6 * v[2] == 0


def test_lattice_index():
    assert lattice_index([(2, 0), (0, 3)], 2) == 6
    assert lattice_index([(1, 1), (1, -1)], 2) == 2
    assert lattice_index([(1, 1)], 2) == 0
