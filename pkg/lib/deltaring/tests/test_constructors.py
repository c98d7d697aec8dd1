import os

import pytest

from deltaring import constructors as C
from deltaring.expr import Evaluator, Manifest
from deltaring.radicals import delta
from deltaring.ring import ShapeError, cyclic_left_ideal, is_two_sided, verify_axioms

here = os.path.dirname(__file__)

ORDERS = [
    ('Z6', 6),
    ('GF5', 5),
    ('prod(Z2,Z3)', 6),
    ('M(2,Z2)', 16),
    ('U(2,Z2)', 8),
    ('U(3,Z2)', 64),
    ('D(3,Z2)', 16),
    ('V(3,Z2)', 8),
    ('sgring(Z2,LZ2)', 4),
    ('grpring(Z3,C2)', 9),
    ('freealg16', 16),
    ('dorroh(Z2,sgT)', 8),
    ('dorroh(Z2,matT)', 8),
    ('H3(2,Z2)', 32),
    ('Hst(1,1,Z2)', 8),
    ('K(0,Z2)', 16),
    ('S(Z4)', 8),
    ('corner(U(2,Z2),[[0,0],[0,1]])', 2),
    ('quot(Z16,{4})', 4),
    ('quot(U(2,Z2),delta)', 2),
    ('quot(freealg16,jacobson)', 8),
]


@pytest.mark.parametrize('text, order', ORDERS, ids=[v[0] for v in ORDERS])
def test_construction_orders(evaluator, text, order):
    R = evaluator.evaluate(text)
    assert R.order == order
    assert R.name == text


def test_unital_constructions_have_identity(evaluator):
    for text in ('M(2,Z2)', 'dorroh(Z2,sgT)', 'Hst(1,1,Z2)', 'S(Z4)', 'quot(Z16,{4})'):
        R = evaluator.evaluate(text)
        assert R.unital
        assert verify_axioms(R.add, R.mul, R.one) == R.zero


def test_galois_field_needs_prime():
    with pytest.raises(ValueError):
        C.galois_field(4)


def test_quotient_projection():
    R = C.zmod(16)
    I = delta(R)
    Q = C.quotient(R, I)
    assert Q.order == 2
    assert Q.parent is R
    assert Q.projection[R.index(7)] == Q.one
    assert Q.projection[R.index(6)] == Q.zero
    # elements of R name their cosets
    assert Q.index(7) == Q.one


def test_quotient_needs_two_sided_ideal(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    left = cyclic_left_ideal(R, R.index([[1, 0], [0, 0]]))
    assert not is_two_sided(R, left)
    with pytest.raises(C.NotTwoSided):
        C.quotient(R, left)


def test_corner_has_idempotent_as_identity(evaluator):
    R = evaluator.evaluate('M(2,Z4)')
    e = R.index([[1, 0], [0, 0]])
    S = C.corner(R, e)
    assert S.order == 4
    assert S.embedding[S.one] == e
    with pytest.raises(C.NotIdempotent):
        C.corner(R, R.index([[0, 1], [0, 0]]))
    with pytest.raises(C.NotIdempotent):
        C.corner(R, R.zero)


def test_pair_subring(evaluator):
    R = evaluator.evaluate('Z4')
    S = evaluator.evaluate('S(Z4)')
    assert S.parts == [R, R]
    assert {S.value(x) for x in range(S.order)} == {(r, s) for r in range(4) for s in range(4) if (r - s) % 2 == 0}


def test_cayley_tables():
    tables = C.builtin_tables()
    assert tables['C3'].is_group()
    assert tables['V4'].is_group()
    assert not tables['LZ2'].is_group()
    assert tables['LZ2'].identity is None

    monoid = tables['LZ2'].with_identity()
    assert monoid.elements == ['1', 'a', 'b']
    assert monoid.identity == 0


def test_non_associative_table_is_rejected():
    # x·y = x - y mod 3 is not associative
    with pytest.raises(C.NonAssociativeTable):
        C.CayleyTable(['0', '1', '2'], [[(i - j) % 3 for j in range(3)] for i in range(3)])


def test_malformed_cayley_table():
    with pytest.raises(ShapeError):
        C.CayleyTable(['a', 'b'], [[0, 1]])
    with pytest.raises(ShapeError):
        C.CayleyTable(['a', 'b'], [[0, 2], [1, 0]])


def test_group_ring_needs_group():
    with pytest.raises(C.NotAGroup):
        C.group_ring(C.zmod(2), C.builtin_tables()['LZ2'])


def test_group_ring_is_commutative_for_cyclic_group(evaluator):
    R = evaluator.evaluate('grpring(Z2,C3)')
    assert (R.mul == R.mul.T).all()
    assert R.label(R.one) == 'g0'


def test_semigroup_ring_without_identity(evaluator):
    R = evaluator.evaluate('sgring(Z2,LZ2)')
    assert not R.unital


def test_free_algebra_relations(evaluator):
    R = evaluator.evaluate('freealg16')
    a, b = R.index('a'), R.index('b')
    assert R.times(a, a) == a
    assert R.times(b, b) == b
    assert R.times(a, b) == R.zero
    assert R.label(R.times(b, a)) == 'ba'


def test_dorroh_extension_parts(evaluator):
    D = evaluator.evaluate('dorroh(Z2,sgT)')
    T = C.algebra_part(D)
    assert len(T) == 4
    assert is_two_sided(D, T)
    assert len(C.base_part(D)) == 2
    assert D.value(D.one) == (1, '0')


def test_dorroh_needs_compatible_actions(evaluator):
    M = evaluator.evaluate('M(2,Z2)')
    algebra = evaluator.manifest.algebra('matT', M, evaluator)
    with pytest.raises(C.ActionIncompatible):
        C.dorroh(M, algebra)


def test_dorroh_from_manifest():
    evaluator = Evaluator(Manifest.from_file(os.path.join(here, 'data', 'manifest.yaml')))
    D = evaluator.evaluate('dorroh(Z2,sgR)')
    assert D.order == 8
    diagonal = evaluator.evaluate('dorroh(Z2,diagT)')
    assert diagonal.order == 4


def test_h3_characteristic():
    with pytest.raises(C.CharacteristicMismatch):
        C.h3(3, C.zmod(2))


def test_hst_needs_central_units():
    R = C.zmod(4)
    with pytest.raises(C.NotCentralUnit):
        C.hst(R.index(2), R.index(1), R)


def test_ks_needs_central_element(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    with pytest.raises(C.NotCentral):
        C.ks(R.index([[1, 0], [0, 0]]), R)


def test_ks_zero_twist(evaluator):
    K = evaluator.evaluate('K(0,Z2)')
    x = K.index([[0, 1], [0, 0]])
    y = K.index([[0, 0], [1, 0]])
    # xy picks up the factor s = 0
    assert K.times(x, y) == K.zero
