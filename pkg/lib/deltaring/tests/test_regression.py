import pytest

from deltaring.catalog import Catalog
from deltaring.harness import TheoremReport
from deltaring.regression import RegressionContext, TheoremBase, regression_entries

VERDICTS = [
    ('ideal-delta-z16', 'confirmed'),
    ('dorroh-z2-listing', 'confirmed'),
    ('corner-pasting-counterexample', 'confirmed'),
    ('maschke', 'confirmed'),
    ('non-maschke', 'confirmed'),
    ('polynomial-idempotent', 'confirmed'),
    ('swap-square-zero', 'confirmed'),
    ('triangular-one-sided', 'confirmed'),
    ('k0-z7-example', 'confirmed'),
    ('dorroh-delta-formula', 'divergence'),
    ('swap-nilpotents', 'counterexample'),
    ('ideal-delta-maximal', 'counterexample'),
]


@pytest.fixture(scope='module')
def context(evaluator):
    return RegressionContext(Catalog(evaluator, tier='small'))


def run(context, kind):
    entry, = regression_entries([kind])
    return entry.report(context)


def test_required_classattrs_in_subclasses():
    for kind, subclass in TheoremBase.__subclasses__.items():
        assert subclass.__kind__ == kind
        assert subclass.statement


def test_entries_keep_registration_order():
    kinds = [entry.__kind__ for entry in regression_entries()]
    assert kinds == list(TheoremBase.__subclasses__)
    assert [entry.__kind__ for entry in regression_entries(['maschke', 'delta-routes'])] == \
        ['delta-routes', 'maschke']


def test_unknown_entries_are_rejected():
    with pytest.raises(ValueError):
        regression_entries(['nope'])


@pytest.mark.parametrize('kind, verdict', VERDICTS, ids=[v[0] for v in VERDICTS])
def test_entry_verdicts(context, kind, verdict):
    report = run(context, kind)
    assert isinstance(report, TheoremReport)
    assert report.id == kind
    assert report.verdict == verdict, report.to_dict()


def test_dorroh_formula_divergence_is_explained(context):
    report = run(context, 'dorroh-delta-formula')
    divergent = report.with_verdict('divergence')
    assert 'dorroh(Z2,sgT)' in [instance.ring for instance in divergent]
    assert all(instance.claimed is not None and instance.computed is not None for instance in divergent)


def test_swap_nilpotents_keeps_the_forward_direction(context):
    report = run(context, 'swap-nilpotents')
    verdicts = {instance.params['part']: instance.verdict for instance in report.instances}
    assert verdicts['identities'] == 'confirmed'
    assert verdicts['nilpotent ⇒ a0 = 0'] == 'confirmed'
    assert verdicts['a0 = 0 ⇒ nilpotent'] == 'counterexample'


def test_maximal_ideal_equality_fails_on_z4(context):
    report = run(context, 'ideal-delta-maximal')
    first = report.with_verdict('counterexample')[0]
    assert first.ring == 'Z4'
    assert first.params == {'I': ['0', '2']}
    assert first.claimed == ['0', '2']
    assert first.computed == ['0']


def test_matrix_dorroh_example_records_refusal(context):
    report = run(context, 'dorroh-matrix-example')
    refused = report.with_verdict('refused')
    assert [instance.ring for instance in refused] == ['dorroh(M(2,Z2),matT)']
    assert report.verdict == 'confirmed'


def test_huge_tier_is_refused_when_disabled(context):
    report = run(context, 'free-algebra-socle')
    assert 'U(2,freealg16)' in [instance.ring for instance in report.with_verdict('refused')]


def test_context_caches_shared_rings(context):
    calls = []

    def build():
        calls.append(1)
        return object()

    first = context.cached('demo', build)
    assert context.cached('demo', build) is first
    assert len(calls) == 1
    assert all(text in [entry.text for entry in context.catalog.entries()] for text in context.sweep(16))
