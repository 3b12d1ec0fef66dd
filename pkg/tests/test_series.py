from fractions import Fraction

import pytest

from mixvol import PairPolynomial, PolyhedronPair, PreconditionError, newton_polyhedron, orthant
from mixvol.errors import DimensionError
from mixvol.series import eval_pair_function, prod_x_over_one_plus_x

R2 = orthant(2)
CUSP = PolyhedronPair(R2, newton_polyhedron([(2, 0), (0, 3)]))
DB = PolyhedronPair(R2, newton_polyhedron([(5, 0), (0, 4)]))


def test_series_of_geometric_denominator():
    f = PairPolynomial(1, {(1,): Fraction(1)}, {(0,): Fraction(1), (1,): Fraction(1)})
    assert f.series(4) == {(1,): 1, (2,): -1, (3,): 1, (4,): -1}


def test_eval_examples():
    x = PairPolynomial.variable(0, 1)
    one = PairPolynomial.constant(1, 1)
    assert eval_pair_function(x / (one + x), [CUSP], 2) == -3
    xy = PairPolynomial.variable(0, 2) * PairPolynomial.variable(1, 2)
    assert eval_pair_function(xy, [CUSP, DB], 2) == 4
    assert eval_pair_function(PairPolynomial.constant(1, 1), [CUSP], 2) == 0


def test_product_of_fractions_expansion():
    f = prod_x_over_one_plus_x(2)
    # degree-2 part of XY/((1+X)(1+Y)) is XY alone
    assert f.degree_part(2) == {(1, 1): 1}
    assert f.degree_part(3) == {(2, 1): -1, (1, 2): -1}


def test_denominator_must_start_with_one():
    with pytest.raises(PreconditionError):
        PairPolynomial(1, {(1,): Fraction(1)}, {(0,): Fraction(2)})


def test_binding_count_checked():
    with pytest.raises(DimensionError):
        eval_pair_function(prod_x_over_one_plus_x(2), [CUSP], 2)


def test_from_json():
    f = PairPolynomial.from_json({"variables": 1, "numerator": [{"coef": "1", "exp": [1]}],
                                  "denominator": [{"coef": 1, "exp": [0]}, {"coef": 1, "exp": [1]}]})
    assert eval_pair_function(f, [CUSP], 2) == -3
