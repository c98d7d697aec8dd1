import pytest
from hypothesis import given, settings, strategies as st

from deltaring import constructors as C
from deltaring.limits import limits
from deltaring.ring import ComplexityRefusal
from deltaring.skewpoly import (NotAnAutomorphism, RingAutomorphism, SkewPolynomial, all_coefficient_vectors,
                                armendariz_witness, identity_automorphism, is_nilpotent_poly, nilpotency_index_poly,
                                poly_nilpotent_coefficient_check, poly_nilpotent_mismatch, swap_automorphism)


def poly(R, sigma, values):
    return SkewPolynomial.from_values(R, sigma, values)


def test_zero_polynomial_and_degree():
    R = C.zmod(4)
    sigma = identity_automorphism(R)
    zero = poly(R, sigma, [0, 0])
    assert zero.is_zero()
    assert zero.degree is None
    f = poly(R, sigma, [1, 2, 0])
    assert f.degree == 1
    assert f.coefficient(5) == R.zero
    assert str(f) == '[1, 2]'


def test_commutative_multiplication():
    R = C.zmod(4)
    sigma = identity_automorphism(R)
    f = poly(R, sigma, [1, 2])
    assert f * f == poly(R, sigma, [1])
    assert (f + poly(R, sigma, [3])) ** 2 == poly(R, sigma, [])
    assert is_nilpotent_poly(poly(R, sigma, [2, 2]))
    assert not is_nilpotent_poly(f)


def test_idempotent_polynomial_over_triangular_ring(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    sigma = identity_automorphism(R)
    # A = e11 + e12 x
    A = poly(R, sigma, [[[1, 0], [0, 0]], [[0, 1], [0, 0]]])
    assert A * A == A
    assert A.degree == 1


def test_armendariz_witness_over_triangular_ring(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    f, g, i, j = armendariz_witness(R, 1)
    assert (f * g).is_zero()
    assert R.times(f.coefficient(i), g.coefficient(j)) != R.zero


@pytest.mark.parametrize('text', ['Z4', 'Z5', 'prod(Z2,Z3)'])
def test_no_armendariz_witness(evaluator, text):
    assert armendariz_witness(evaluator.evaluate(text), 1) is None


def test_armendariz_budget(evaluator):
    R = evaluator.evaluate('M(2,Z2)')
    with pytest.raises(ComplexityRefusal):
        armendariz_witness(R, 1, budget=1000)


def test_swap_square_zero(evaluator):
    R = evaluator.evaluate('prod(Z3,Z3)')
    sigma = swap_automorphism(R)
    f = poly(R, sigma, [(0, 0), (1, 0)])
    assert (f * f).is_zero()
    assert nilpotency_index_poly(f) == 2
    # (1,1) is a unit, so (1,1)x is not nilpotent
    assert not is_nilpotent_poly(poly(R, sigma, [(0, 0), (1, 1)]))


def test_swap_needs_square_product(evaluator):
    with pytest.raises(NotAnAutomorphism):
        swap_automorphism(evaluator.evaluate('prod(Z2,Z3)'))
    with pytest.raises(NotAnAutomorphism):
        swap_automorphism(evaluator.evaluate('Z4'))


def test_automorphism_must_preserve_operations():
    R = C.zmod(3)
    RingAutomorphism(R, [0, 1, 2])
    with pytest.raises(NotAnAutomorphism):
        RingAutomorphism(R, [0, 2, 1])
    with pytest.raises(NotAnAutomorphism):
        RingAutomorphism(R, [0, 0, 1])


def test_mixing_automorphisms_is_rejected(evaluator):
    R = evaluator.evaluate('prod(Z2,Z2)')
    f = poly(R, identity_automorphism(R), [(1, 0)])
    g = poly(R, swap_automorphism(R), [(1, 0)])
    with pytest.raises(ValueError):
        f * g


def test_coefficient_vectors():
    R = C.zmod(3)
    vectors = all_coefficient_vectors(R, 1)
    assert vectors.shape == (9, 2)
    assert vectors[0].tolist() == [0, 0]
    assert vectors[-1].tolist() == [2, 2]


@pytest.mark.parametrize('text', ['Z4', 'Z8', 'Z6', 'prod(Z2,Z4)'])
def test_nilpotent_polynomials_over_commutative_rings(evaluator, text):
    assert poly_nilpotent_coefficient_check(evaluator.evaluate(text), 1)


def test_nilpotent_coefficient_check_needs_commutative_ring(evaluator):
    with pytest.raises(ValueError):
        poly_nilpotent_coefficient_check(evaluator.evaluate('U(2,Z2)'), 1)


def test_nilpotent_mismatch_over_matrix_ring(evaluator):
    R = evaluator.evaluate('M(2,Z2)')
    f = poly_nilpotent_mismatch(R, 1)
    assert f is not None
    # e12 + e21 x has nilpotent coefficients and squares to x
    g = poly(R, identity_automorphism(R), [[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    assert g * g == poly(R, g.sigma, [[[0, 0], [0, 0]], [[1, 0], [0, 1]]])


def test_no_nilpotent_mismatch_over_triangular_ring(evaluator):
    assert poly_nilpotent_mismatch(evaluator.evaluate('U(2,Z2)'), 1) is None


def test_power_bound_override():
    R = C.zmod(16)
    f = poly(R, identity_automorphism(R), [2])
    with limits.override(power_bound=2):
        assert not is_nilpotent_poly(f)
    assert nilpotency_index_poly(f) == 4


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 3), max_size=3), min_size=3, max_size=3))
def test_skew_multiplication_is_associative(coefficients):
    R = C.zmod(2)
    P = C.direct_product([R, R])
    sigma = swap_automorphism(P)
    f, g, h = (SkewPolynomial(P, sigma, c) for c in coefficients)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
