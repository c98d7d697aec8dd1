import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deltaring import constructors as C
from deltaring.limits import limits
from deltaring.ring import (AxiomViolation, ElementError, OrderCapExceeded, ShapeError, RightIdeal, TwoSidedIdeal,
                            build_table_ring, canonical, center, cyclic_left_ideal, cyclic_right_ideal,
                            idempotent_elements, is_direct_summand, is_left_ideal, is_right_ideal, is_two_sided,
                            left_ideal_closure, nilpotency_index, nilpotent_elements, right_ideal_closure, subset_sum,
                            two_sided_closure, units, verify_axioms)

Z2_TABLES = ([[0, 1], [1, 0]], [[0, 0], [0, 1]])

BROKEN_TABLES = [
    ('non-commutative addition', [[0, 1], [0, 1]], [[0, 0], [0, 0]], ShapeError),
    ('left distributivity', [[0, 1], [1, 0]], [[1, 1], [1, 1]], AxiomViolation),
    ('bad shape', [[0, 1], [1, 0]], [[0, 0, 0], [0, 1, 0]], ShapeError),
    ('out of range', [[0, 1], [1, 2]], [[0, 0], [0, 1]], ShapeError),
]

NILPOTENTS = [
    ('Z8', {0, 2, 4, 6}),
    ('Z12', {0, 6}),
    ('Z5', {0}),
]

RINGS = ['Z6', 'prod(Z2,Z3)', 'U(2,Z2)', 'M(2,Z2)', 'D(3,Z2)', 'V(3,Z2)', 'grpring(Z2,C3)', 'freealg16',
         'dorroh(Z2,sgT)', 'Hst(1,1,Z2)', 'K(0,Z2)', 'S(Z4)', 'quot(Z16,{4})']


def test_build_table_ring_z2():
    R = build_table_ring(*Z2_TABLES, one=1, name='Z2')
    assert R.order == 2
    assert R.unital
    assert R.zero == 0
    assert R.one == 1
    assert R.char == 2
    assert R.labels == ['0', '1']


def test_build_table_ring_without_identity_is_nonunital():
    R = build_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 0]])
    assert not R.unital


@pytest.mark.parametrize('what, add, mul, error', BROKEN_TABLES, ids=[v[0] for v in BROKEN_TABLES])
def test_broken_tables_are_rejected(what, add, mul, error):
    with pytest.raises((error, AxiomViolation)):
        build_table_ring(add, mul)


def test_wrong_identity_is_rejected():
    with pytest.raises(AxiomViolation):
        build_table_ring(*Z2_TABLES, one=0)


def test_order_cap():
    with limits.override(max_order=8):
        with pytest.raises(OrderCapExceeded):
            C.zmod(9)


@pytest.mark.parametrize('text, expected', NILPOTENTS, ids=[v[0] for v in NILPOTENTS])
def test_nilpotent_elements(evaluator, text, expected):
    R = evaluator.evaluate(text)
    assert {R.value(x) for x in nilpotent_elements(R)} == expected


def test_nilpotency_index():
    R = C.zmod(16)
    assert nilpotency_index(R, R.index(2)) == 4
    assert nilpotency_index(R, R.index(8)) == 2
    assert nilpotency_index(R, R.index(3)) is None


def test_idempotents_units_center_of_z6():
    R = C.zmod(6)
    assert {R.value(x) for x in idempotent_elements(R)} == {0, 1, 3, 4}
    assert {R.value(x) for x in units(R)} == {1, 5}
    assert len(center(R)) == 6


def test_center_of_matrix_ring_is_scalars(evaluator):
    R = evaluator.evaluate('M(2,Z3)')
    scalars = {canonical([[k, 0], [0, k]]) for k in range(3)}
    assert {canonical(R.value(x)) for x in center(R)} == scalars


def test_element_literals(evaluator):
    R = evaluator.evaluate('M(2,Z4)')
    e = R.index([[0, 0], [3, 1]])
    assert R.label(e) == '[[0,0],[3,1]]'
    assert R.index(R.label(e)) == e
    with pytest.raises(ElementError):
        R.index([[0, 0], [5, 1]])


def test_subset_algebra():
    R = C.zmod(12)
    evens = R.subset([R.index(v) for v in range(0, 12, 2)])
    multiples_of_three = R.subset([R.index(v) for v in range(0, 12, 3)])
    assert {R.value(x) for x in evens & multiples_of_three} == {0, 6}
    assert len(evens | multiples_of_three) == 8
    assert R.zero_ideal() < evens <= R.full()
    assert not evens <= multiples_of_three
    assert R.zero_ideal().is_zero()


def test_subsets_of_different_rings_do_not_mix():
    with pytest.raises(ValueError):
        C.zmod(4).full() <= C.zmod(4).full()


def test_cyclic_ideals_in_triangular_ring(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    e11 = R.index([[1, 0], [0, 0]])
    right = cyclic_right_ideal(R, e11)
    left = cyclic_left_ideal(R, e11)
    assert isinstance(right, RightIdeal)
    assert len(right) == 4
    assert len(left) == 2
    assert is_right_ideal(R, right)
    assert is_left_ideal(R, left)
    assert not is_two_sided(R, left)


def test_closures():
    R = C.zmod(12)
    I = right_ideal_closure(R, [R.index(8)])
    assert {R.value(x) for x in I} == {0, 4, 8}
    J = two_sided_closure(R, [R.index(6), R.index(4)])
    assert isinstance(J, TwoSidedIdeal)
    assert {R.value(x) for x in J} == set(range(0, 12, 2))
    assert {R.value(x) for x in subset_sum(I, cyclic_right_ideal(R, R.index(3)))} == set(range(12))


def test_left_closure_and_summands(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    e11, e12 = R.index([[1, 0], [0, 0]]), R.index([[0, 1], [0, 0]])
    assert left_ideal_closure(R, [e11]) == cyclic_left_ideal(R, e11)
    assert len(left_ideal_closure(R, [e11, e12])) == 4
    assert is_direct_summand(R, cyclic_right_ideal(R, e11))
    assert is_direct_summand(R, R.zero_ideal())
    assert not is_direct_summand(R, cyclic_right_ideal(R, e12))


@pytest.mark.parametrize('text', RINGS)
def test_constructed_rings_satisfy_axioms(evaluator, text):
    R = evaluator.evaluate(text)
    assert verify_axioms(R.add, R.mul, R.one if R.unital else None) == R.zero


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(RINGS), st.data())
def test_ring_laws_on_random_triples(evaluator, text, data):
    R = evaluator.evaluate(text)
    a, b, c = (data.draw(st.integers(0, R.order - 1)) for _ in range(3))
    assert R.times(R.times(a, b), c) == R.times(a, R.times(b, c))
    assert R.times(a, R.plus(b, c)) == R.plus(R.times(a, b), R.times(a, c))
    assert R.times(R.plus(a, b), c) == R.plus(R.times(a, c), R.times(b, c))
    assert R.minus(R.plus(a, b), b) == a


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(RINGS), st.data())
def test_closure_is_monotone(evaluator, text, data):
    R = evaluator.evaluate(text)
    small = data.draw(st.lists(st.integers(0, R.order - 1), max_size=3))
    large = small + data.draw(st.lists(st.integers(0, R.order - 1), max_size=3))
    assert right_ideal_closure(R, small) <= right_ideal_closure(R, large)
    assert np.all(right_ideal_closure(R, small).bits[small])
