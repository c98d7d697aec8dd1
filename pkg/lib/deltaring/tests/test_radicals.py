import pytest

from deltaring import constructors as C
from deltaring.catalog import Catalog
from deltaring.radicals import (LatticeExplosion, all_right_ideals, delta, delta_of_right_ideal_as_module,
                                delta_routes, is_delta_small, is_essential, jacobson, maximal_right_ideals,
                                is_semiprime_ideal, minimal_right_ideals, routes_agree, semiprime_witness, socle)
from deltaring.ring import RightIdeal, TwoSidedIdeal, canonical

RADICALS = [
    # ring, |δ|, |J|, |Soc|
    ('Z16', 8, 8, 2),
    ('Z6', 6, 1, 6),
    ('Z8', 4, 4, 2),
    ('U(2,Z2)', 4, 2, 4),
    ('M(2,Z2)', 16, 1, 16),
    ('M(2,Z4)', 16, 16, 16),
    ('prod(Z2,Z4)', 4, 2, 4),
]


def values(R, S):
    return {canonical(R.value(x)) for x in S}


@pytest.mark.parametrize('text, d, j, s', RADICALS, ids=[v[0] for v in RADICALS])
def test_radical_sizes(evaluator, text, d, j, s):
    R = evaluator.evaluate(text)
    assert (len(delta(R)), len(jacobson(R)), len(socle(R))) == (d, j, s)


def test_delta_of_z16_is_the_even_residues():
    R = C.zmod(16)
    assert values(R, delta(R)) == set(range(0, 16, 2))
    assert isinstance(delta(R), TwoSidedIdeal)


def test_delta_of_triangular_ring(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    assert all(R.value(x)[0][0] == 0 for x in delta(R))
    assert jacobson(R) <= delta(R)
    # δ(R) = J(R) + Soc(R) holds here
    assert values(R, delta(R)) == values(R, jacobson(R)) | values(R, socle(R))


def test_delta_of_matrix_ring_over_z4(evaluator):
    R = evaluator.evaluate('M(2,Z4)')
    assert all(v % 2 == 0 for x in delta(R) for row in R.value(x) for v in row)


def test_delta_of_right_ideal_as_module():
    R = C.zmod(16)
    I = RightIdeal(R, R.subset([R.index(v) for v in (0, 4, 8, 12)]).bits)
    assert values(R, delta_of_right_ideal_as_module(R, I)) == {0, 8}


def test_semisimple_ring_has_no_essential_maximal_ideals(evaluator):
    R = evaluator.evaluate('M(2,Z2)')
    assert not any(is_essential(R, M) for M in maximal_right_ideals(R))
    assert delta(R) == R.full()


def test_ideal_lattice_of_z12():
    R = C.zmod(12)
    lattice = all_right_ideals(R)
    assert len(lattice) == 6
    assert sorted(len(M) for M in lattice.maximal_ideals()) == [4, 6]
    assert sorted(len(M) for M in lattice.minimal_ideals()) == [2, 3]
    assert sorted(len(M) for M in minimal_right_ideals(R)) == [2, 3]


def test_lattice_cap():
    R = C.zmod(12)
    with pytest.raises(LatticeExplosion):
        all_right_ideals(R, cap=2)


def test_delta_is_delta_small(evaluator):
    for text in ('Z16', 'U(2,Z2)', 'M(2,Z4)'):
        R = evaluator.evaluate(text)
        assert is_delta_small(R, delta(R))


def test_delta_routes_on_z16():
    R = C.zmod(16)
    routes = dict(delta_routes(R))
    assert set(routes) == {'essential-maximal', 'summand', 'socle-lift', 'semisimple-complement'}
    assert all(S == delta(R) for S in routes.values())


def test_delta_routes_agree_on_small_tier(evaluator):
    for text, R in Catalog(evaluator, tier='small').rings():
        if R.unital:
            assert routes_agree(R), text


def test_semiprime_witness():
    R = C.zmod(16)
    assert R.value(semiprime_witness(R, R.zero_ideal())) == 4
    assert semiprime_witness(R, delta(R)) is None
    Z6 = C.zmod(6)
    assert semiprime_witness(Z6, Z6.zero_ideal()) is None
    assert is_semiprime_ideal(Z6, Z6.zero_ideal())
    assert not is_semiprime_ideal(R, R.zero_ideal())
