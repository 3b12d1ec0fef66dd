import json
import random
from itertools import permutations
from math import factorial
from pathlib import Path

import pytest
import sympy as sp

from helpers import local_length, random_newton
from mixvol import (DimensionError, PreconditionError, UnsupportedError, chi_compatible_faces,
                    collection_multiplicity, det_multiplicity, determinant_encoding, euler_char_det, gz_index,
                    milnor_number, mixed_volume_pairs, newton_polyhedron, orthant, radial_index_det, res_eg,
                    resultant_support, resultantal_multiplicity, simplex_complement,
                    stable_mixed_volume_pairs)
from mixvol.invariants import mu, one_form_polyhedra, tilde

FIXTURES = json.loads((Path(__file__).parent / "fixtures" / "local_algebra.json").read_text())
O2 = orthant(2)
S2, S3 = simplex_complement(2), simplex_complement(3)
DA = newton_polyhedron([(2, 0), (0, 3)])
DB = newton_polyhedron([(5, 0), (0, 4)])


def nw(*exps):
    return newton_polyhedron(exps)


def test_mu_examples():
    assert mu([DA]) == -6
    assert mu([nw((2,))]) == 2
    assert mu([simplex_complement(3, 2)]) == 8


def test_milnor_examples():
    assert milnor_number([DA]) == FIXTURES["milnor"]["x2+y3"] == 2
    assert milnor_number([simplex_complement(3, 2)]) == 1
    Q = simplex_complement(2, 2)
    assert milnor_number([Q, Q]) == 3


def test_milnor_rejects_unbounded_complement():
    with pytest.raises(PreconditionError):
        milnor_number([nw((1, 1))])


def _generic(N, gens, rng, bound):
    # dense random coefficients on every exponent of N up to the bound
    n = len(gens)
    terms = []
    for e in sp.utilities.iterables.iproduct(*[range(bound + 1)] * n):
        if e in N:
            terms.append(rng.randint(1, 9) * sp.Mul(*[g ** a for g, a in zip(gens, e)]))
    return sp.Add(*terms)


def test_milnor_matches_local_algebra_on_random_curves():
    x, y = sp.symbols("x y")
    rng = random.Random(51)
    for _ in range(4):
        N = random_newton(rng, 2, top=4, extra=1)
        f = _generic(N, (x, y), rng, 4)
        assert milnor_number([N]) == local_length([sp.diff(f, x), sp.diff(f, y)], (x, y))


def test_res_eg_properties():
    assert res_eg([], [orthant(1)]) == 0
    assert res_eg([], [O2, O2]) == 0
    assert res_eg([nw((1,))], [nw((1,))]) == res_eg([nw((1,))], [nw((1,))], variant=True)
    A, B = DA, nw((1, 2), (3, 0), (0, 4))
    forms = [O2, S2]
    assert res_eg([A, B], forms) == res_eg([B, A], forms)


def test_gz_index_examples():
    forms = one_form_polyhedra([O2, O2])
    assert gz_index([DA], forms) == FIXTURES["gz_index"]["x2+y3"] == 3
    assert gz_index([nw((2, 0), (0, 2))], forms) == 2
    with pytest.raises(UnsupportedError):
        gz_index([], forms)
    with pytest.raises(PreconditionError):
        gz_index([nw((1, 1), (2, 0))], forms)


def test_det_multiplicity_examples():
    assert det_multiplicity(2, 2, 3, [S2] * 3) == 3
    assert det_multiplicity(3, 2, 3, [S3] * 3) == 3
    with pytest.raises(DimensionError):
        det_multiplicity(2, 3, 3, [S2] * 3)


def test_det_multiplicity_square_case_is_pair_volume():
    rng = random.Random(52)
    for _ in range(10):
        cols = [random_newton(rng, 2, 4, 1) for _ in range(2)]
        expected = factorial(2) * mixed_volume_pairs([tilde(P) for P in cols])
        assert det_multiplicity(2, 1, 2, cols) == expected
        assert stable_mixed_volume_pairs([tilde(P) for P in cols]) * 2 == expected


def test_collection_examples():
    assert collection_multiplicity([[[DA] * 3, [DB] * 3]]) == FIXTURES["collection_34"] == 34
    assert collection_multiplicity([[[nw((2, 0), (0, 2)), nw((3, 0), (0, 3))]]]) == 6
    assert collection_multiplicity([[[S2]], [[S2]]]) == 1
    with pytest.raises(DimensionError):
        collection_multiplicity([[[S2, S2, S2]]])


def test_resultantal_examples():
    mat = [[DA] * 3, [DB] * 3]
    sigmas, comps = determinant_encoding(mat)
    assert resultantal_multiplicity(sigmas, comps) == 34
    segs = [[(0,), (1,)]] * 2
    rng = random.Random(53)
    for _ in range(8):
        g = [[rng.randint(0, 4) for _ in range(2)] for _ in range(2)]
        comps = [[nw((g[i][a],)) for a in range(2)] for i in range(2)]
        assert resultantal_multiplicity(segs, comps) == resultant_support(segs, g)


def test_chi_examples():
    assert chi_compatible_faces([O2], [DA]) == -1
    assert chi_compatible_faces([O2], [S2]) == 1
    assert chi_compatible_faces([O2], [nw((2, 0), (0, 2))]) == 0
    with pytest.raises(PreconditionError):
        chi_compatible_faces([S2], [S2])


def test_euler_and_radial_examples():
    Q3 = simplex_complement(3, 2)
    assert euler_char_det(3, 1, 2, [S3] * 3) == 1
    assert euler_char_det(3, 1, 2, [Q3, S3, S3]) == 2
    assert radial_index_det(3, 1, 2, [S3] * 3) == 0
    assert radial_index_det(3, 1, 2, [Q3, S3, S3]) == -1
    with pytest.raises(DimensionError):
        euler_char_det(3, 2, 2, [S3] * 3)
    with pytest.raises(DimensionError):
        radial_index_det(3, 2, 2, [S3] * 3)


def test_outputs_are_integers():
    rng = random.Random(54)
    for _ in range(6):
        N = random_newton(rng, 2, 4, 2)
        for v in (milnor_number([N]), chi_compatible_faces([O2], [N]), det_multiplicity(2, 1, 2, [N, S2])):
            assert v.denominator == 1


def test_milnor_symmetric_in_equations():
    rng = random.Random(55)
    for _ in range(4):
        Ns = [random_newton(rng, 3, 3, 1) for _ in range(2)]
        vals = {milnor_number(list(p)) for p in permutations(Ns)}
        assert len(vals) == 1
