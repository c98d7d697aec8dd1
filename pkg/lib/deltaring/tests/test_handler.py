import os

import pytest

from deltaring import storage
from deltaring.catalog import Catalog
from deltaring.handler import EntryState, Report
from deltaring.harness import Instance, TheoremReport
from deltaring.regression import RegressionContext, TheoremBase, regression_entries, run_regression
from deltaring.reporters import ReporterBase
from deltaring.storage import CacheMiniDBStorage, YamlConfigStorage

here = os.path.dirname(__file__)


def test_required_classattrs_in_subclasses():
    for base in (TheoremBase, ReporterBase):
        for kind, subclass in base.__subclasses__.items():
            assert subclass.__kind__ == kind
    for subclass in ReporterBase.__subclasses__.values():
        assert subclass.__doc__


def test_load_config_yaml():
    config = YamlConfigStorage(os.path.join(here, 'data', 'deltaring.yaml'))
    assert config.config == storage.DEFAULT_CONFIG


def test_partial_config_is_merged(tmp_path):
    filename = tmp_path / 'deltaring.yaml'
    filename.write_text('limits:\n  max_order: 64\n')
    config = YamlConfigStorage(str(filename)).config
    assert config['limits']['max_order'] == 64
    assert config['limits']['lattice_cap'] == storage.DEFAULT_CONFIG['limits']['lattice_cap']
    assert config['report'] == storage.DEFAULT_CONFIG['report']


def test_config_must_be_a_mapping(tmp_path):
    filename = tmp_path / 'deltaring.yaml'
    filename.write_text('- just\n- a list\n')
    with pytest.raises(ValueError):
        YamlConfigStorage(str(filename))


def test_write_default_config(tmp_path):
    filename = str(tmp_path / 'sub' / 'deltaring.yaml')
    YamlConfigStorage.write_default_config(filename)
    assert YamlConfigStorage(filename).config == storage.DEFAULT_CONFIG


@pytest.mark.parametrize('verdicts, code', [
    ([], 0),
    (['confirmed'], 0),
    (['confirmed', 'refused'], 3),
    (['refused', 'divergence'], 1),
    (['counterexample', 'confirmed'], 1),
    (['counterexample', 'error'], 2),
])
def test_report_exit_code(verdicts, code):
    report = Report(storage.DEFAULT_CONFIG)
    for i, verdict in enumerate(verdicts):
        report.add_report(TheoremReport('entry-%d' % (i,), 'statement', [Instance('Z2', verdict)]))
    assert report.verbs() == verdicts
    assert report.exit_code() == code


def test_failing_entry_becomes_error(evaluator, monkeypatch):
    entry, = regression_entries(['maschke'])

    def broken(context):
        raise KeyError('broken')

    monkeypatch.setattr(entry, 'instances', broken)
    state = EntryState(None, entry, RegressionContext(Catalog(evaluator, tier='small'))).process()
    assert state.verdict == 'error'
    assert isinstance(state.exception, KeyError)
    assert 'KeyError' in state.traceback
    report = Report(storage.DEFAULT_CONFIG)
    report.add(state)
    assert report.exit_code() == 2


def test_regression_history(evaluator, tmp_path):
    cache_storage = CacheMiniDBStorage(str(tmp_path / 'verdicts.db'))
    context = RegressionContext(Catalog(evaluator, tier='small'))
    ids = ['ideal-delta-z16', 'swap-nilpotents']
    try:
        first = run_regression(context, Report(storage.DEFAULT_CONFIG), cache_storage, ids=ids)
        assert [state.guid for state in first.states] == ids
        assert [state.old_verdict for state in first.states] == [None, None]
        assert first.exit_code() == 1

        second = run_regression(context, Report(storage.DEFAULT_CONFIG), cache_storage, ids=ids)
        assert [state.old_verdict for state in second.states] == ['confirmed', 'counterexample']
        assert not any(state.changed for state in second.states)

        assert sorted(cache_storage.get_guids()) == sorted(ids)
        assert len(cache_storage.get_history('ideal-delta-z16', count=5)) == 2
        cache_storage.clean('ideal-delta-z16')
        assert len(cache_storage.get_history('ideal-delta-z16', count=5)) == 1
    finally:
        cache_storage.close()


def test_reports_render_in_every_format():
    report = Report(storage.DEFAULT_CONFIG)
    report.add_report(TheoremReport('demo', 'A statement', [
        Instance('Z4', 'divergence', {'set': 'delta'}, claimed=['0'], computed=['0', '2'], note='differs'),
    ]))
    text = report.finish('text')
    assert 'demo' in text
    assert 'divergence' in text
    assert 'demo' in report.finish('yaml')
    assert '"verdict": "divergence"' in report.finish('json')
    with pytest.raises(ValueError):
        report.finish('html')
