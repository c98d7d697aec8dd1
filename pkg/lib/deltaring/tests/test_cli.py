import json

import pytest

from deltaring import cli
from deltaring.limits import limits


@pytest.fixture
def files(tmp_path):
    saved = limits.as_dict()
    yield ['--config', str(tmp_path / 'deltaring.yaml'), '--cache', str(tmp_path / 'verdicts.db')]
    limits.update(**saved)


def run(files, *args):
    with pytest.raises(SystemExit) as info:
        cli.main(files + list(args))
    return info.value.code


EXIT_CODES = [
    (['delta', 'Z16'], 0),
    (['check', 'reduced', 'Z5'], 0),
    (['check', 'commutative', 'U(2,Z2)'], 1),
    (['check', 'zhou_right_e_reduced', 'M(2,Z4)', '--e', '[[0,0],[3,1]]'], 1),
    (['check', 'zhou_right_e_reduced', 'Z4', '--e', '1'], 0),
    (['check', 'noetherian', 'Z2'], 2),
    (['check', 'zhou_e_reduced', 'Z6', '--e', '2'], 2),
    (['eval', 'M(2,Z4'], 2),
    (['eval', 'GF4'], 2),
    (['elements', 'Z8'], 0),
    (['radical', 'U(2,Z2)'], 0),
    (['catalog'], 0),
    (['--tier', 'small', 'regress', 'ideal-delta-z16'], 0),
    (['--tier', 'small', 'regress', 'swap-nilpotents'], 1),
    (['--tier', 'small', 'regress', 'no-such-entry'], 2),
]


@pytest.mark.parametrize('args, code', EXIT_CODES, ids=[' '.join(v[0]) for v in EXIT_CODES])
def test_exit_codes(files, args, code):
    assert run(files, *args) == code


def test_delta_output(files, capsys):
    assert run(files, 'delta', 'Z16') == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'δ = {0,2,4,6,8,10,12,14}'
    assert out[1] == 'routes: agree'


def test_json_output(files, capsys):
    assert run(files, '--format', 'json', 'delta', 'Z16') == 0
    document = json.loads(capsys.readouterr().out)
    assert document['ring'] == 'Z16'
    assert document['size'] == 8
    assert document['routes_agree']


def test_check_prints_witness(files, capsys):
    assert run(files, 'check', 'zhou_right_e_reduced', 'M(2,Z4)', '--e', '[[0,0],[3,1]]') == 1
    out = capsys.readouterr().out
    assert 'false' in out
    assert 'witness: ' in out


def test_budget_refusal(files, tmp_path):
    (tmp_path / 'deltaring.yaml').write_text('limits:\n  predicate_budget: 10\n')
    assert run(files, 'check', 'reduced', 'Z16') == 3


def test_broken_config(files, tmp_path):
    (tmp_path / 'deltaring.yaml').write_text('- not\n- a mapping\n')
    assert run(files, 'delta', 'Z2') == 2


def test_unknown_limit_in_config(files, tmp_path):
    (tmp_path / 'deltaring.yaml').write_text('limits:\n  patience: 3\n')
    assert run(files, 'delta', 'Z2') == 2


def test_verb_is_required(files):
    assert run(files) == 2


def test_features_listing(files, capsys):
    assert run(files, 'catalog', '--features') == 0
    out = capsys.readouterr().out
    assert 'zhou_e_reduced' in out
    assert 'ideal-delta-z16' in out
    assert 'dorroh(' in out


def test_history_marks_changes(files, tmp_path, capsys):
    assert run(files, '--tier', 'small', 'regress', 'ideal-delta-z16') == 0
    assert run(files, '--tier', 'small', 'regress', 'ideal-delta-z16') == 0
    out = capsys.readouterr().out
    assert 'CONFIRMED: ideal-delta-z16' in out
    assert '(was ' not in out


def test_eval_saves_a_table_file(files, tmp_path, capsys):
    target = tmp_path / 'u2.yaml'
    assert run(files, 'eval', 'U(2,Z2)', '--save', str(target)) == 0
    assert capsys.readouterr().out.splitlines()[-1] == 'saved to %s' % (target,)
    assert target.read_text().startswith('order: 8\none: ')

    copy = tmp_path / 'copy.yaml'
    assert run(files, 'eval', 'table(%s)' % (target,), '--save', str(copy)) == 0
    assert capsys.readouterr().out.splitlines()[0].endswith(': order 8')
    assert copy.read_bytes() == target.read_bytes()
