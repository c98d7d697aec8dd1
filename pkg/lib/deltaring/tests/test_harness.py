import pytest

from deltaring.catalog import Catalog
from deltaring.harness import Instance, PredicateSpec, TheoremReport, check_implication, search, verify_characterization
from deltaring.predicates import UnknownPredicate


@pytest.fixture(scope='module')
def small(evaluator):
    return Catalog(evaluator, tier='small')


def counterexample_rings(report):
    return [instance.ring for instance in report.with_verdict('counterexample')]


def test_report_verdict_precedence():
    report = TheoremReport('demo', 'a statement')
    assert report.verdict == 'refused'
    report.add(Instance('Z2', 'refused'))
    assert report.verdict == 'refused'
    report.add(Instance('Z2', 'confirmed'))
    assert report.verdict == 'confirmed'
    assert report.evidence == 'confirmation-evidence'
    report.add(Instance('Z4', 'divergence', claimed=[0], computed=[0, 2]))
    assert report.verdict == 'divergence'
    report.add(Instance('Z8', 'counterexample'))
    assert report.verdict == 'counterexample'
    assert report.evidence == 'refutation-definitive'
    report.add(Instance('Z16', 'error'))
    assert report.verdict == 'error'
    document = report.to_dict()
    assert document['id'] == 'demo'
    assert [instance['verdict'] for instance in document['instances']] == \
        ['refused', 'confirmed', 'divergence', 'counterexample', 'error']


def test_instance_rejects_unknown_verdict():
    with pytest.raises(ValueError):
        Instance('Z2', 'maybe')


def test_predicate_spec():
    spec = PredicateSpec('zhou_right_e_reduced@1')
    assert spec.id == 'zhou_right_e_reduced'
    assert spec.at_one
    assert not PredicateSpec('reduced').at_one
    with pytest.raises(ValueError):
        PredicateSpec('zhou_right_e_reduced@2')
    with pytest.raises(UnknownPredicate):
        PredicateSpec('noetherian')


def test_quasi_duo_rings_have_nilpotents_in_delta(small):
    report = check_implication('right_quasi_duo', 'zhou_right_e_reduced@1', catalog=small)
    assert report.verdict == 'confirmed'
    assert len(report.instances) == len(small.entries())


def test_nilpotents_in_delta_does_not_make_quasi_duo(small):
    report = check_implication('zhou_right_e_reduced@1', 'right_quasi_duo', catalog=small)
    assert report.verdict == 'counterexample'
    assert 'M(2,Z2)' in counterexample_rings(report)


def test_zhou_reduced_does_not_make_semicommutative(small):
    report = check_implication('zhou_e_reduced', 'semicommutative', catalog=small)
    assert report.verdict == 'counterexample'
    assert 'U(2,Z2)' in counterexample_rings(report)
    assert 'Z4' not in counterexample_rings(report)


def test_implication_refusals(small):
    report = check_implication('reduced', 'commutative', catalog=small, budget=1)
    assert report.verdict == 'refused'


CHARACTERIZATIONS = [
    ('H11-nilpotent', 'Z2'),
    ('H11-delta', 'Z2'),
    ('H11-idempotent', 'Z4'),
    ('K0-nilpotent', 'Z4'),
    ('K0-delta', 'Z4'),
    ('K0-idempotent', 'Z2'),
    ('H3-nilpotent', 'Z2'),
]


@pytest.mark.parametrize('lemma, text', CHARACTERIZATIONS, ids=['%s-%s' % v for v in CHARACTERIZATIONS])
def test_characterizations(evaluator, lemma, text):
    report = verify_characterization(lemma, evaluator.evaluate(text))
    assert report.verdict == 'confirmed'
    assert report.id == 'characterization:%s' % (lemma,)


def test_unknown_characterization(evaluator):
    with pytest.raises(ValueError):
        verify_characterization('H22-nilpotent', evaluator.evaluate('Z2'))


def test_pasting_search_finds_matrix_ring(evaluator):
    catalog = Catalog(evaluator, tier='medium', entries=[('Z4', 4), ('M(2,Z4)', 256)])
    report = search('pasting', catalog=catalog)
    assert report.id == 'search:pasting'
    assert counterexample_rings(report) == ['M(2,Z4)']
    instance = report.with_verdict('counterexample')[0]
    assert instance.computed['failing']


def test_search_arguments(small):
    with pytest.raises(ValueError):
        search('implication', catalog=small)
    with pytest.raises(ValueError):
        search('exhaustive', catalog=small)
    report = search('implication', catalog=small, p='reduced', q='commutative')
    assert report.verdict == 'confirmed'
