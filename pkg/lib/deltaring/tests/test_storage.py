import glob
import os

import numpy as np
import pytest
import yaml

from deltaring import constructors as C
from deltaring.expr import Evaluator
from deltaring.storage import AlgebraYaml, CayleyTableYaml, ManifestYaml, RingTableYaml

here = os.path.dirname(__file__)


def resave_ring(src, dst):
    RingTableYaml(dst).save(RingTableYaml(src).load())


def resave_cayley(src, dst):
    CayleyTableYaml(dst).save(CayleyTableYaml(src).load())


def resave_algebra(src, dst):
    data = AlgebraYaml(src).load()
    base = Evaluator().evaluate(data['base'])
    AlgebraYaml(dst).save(C.BimoduleAlgebra(base, data['algebra'], data['left'], data['right']))


TABLE_FILES = {
    'z3.yaml': resave_ring,
    'rz2.yaml': resave_cayley,
    'sgt-z2.yaml': resave_algebra,
}


def test_every_table_file_is_covered():
    for filename in glob.glob(os.path.join(here, 'data', '*.yaml')):
        with open(filename) as fp:
            data = yaml.safe_load(fp)
        if isinstance(data, dict) and ('add' in data or 'elements' in data):
            assert os.path.basename(filename) in TABLE_FILES


@pytest.mark.parametrize('name', sorted(TABLE_FILES))
def test_load_then_save_is_identity(name, tmp_path):
    src = os.path.join(here, 'data', name)
    dst = tmp_path / name
    TABLE_FILES[name](src, str(dst))
    with open(src, 'rb') as fp:
        assert dst.read_bytes() == fp.read()


@pytest.mark.parametrize('text', [
    'add: [[0, 1], [1, 0]]\nmul: [[0, 0], [0, 1]]\none: 1\n',
    'order: 2\nadd: [[0, 1], [1, 0]]\nmul: [[0, 0], [0, 0]]\none: null\n',
    'order: 2\none: 1\nadd: [[0, 1], [1, 0]]\nmul: [[0, 0], [0, 1]]\nlabels: [zero, unit]\n',
    'labels: [o, i]\nmul: [[0, 0], [0, 1]]\nadd: [[0, 1], [1, 0]]\n',
])
def test_ring_file_keeps_its_keys(text, tmp_path):
    (tmp_path / 'in.yaml').write_text(text)
    resave_ring(str(tmp_path / 'in.yaml'), str(tmp_path / 'out.yaml'))
    assert (tmp_path / 'out.yaml').read_text() == text


def test_fresh_ring_uses_the_default_layout(tmp_path):
    RingTableYaml(str(tmp_path / 'z3.yaml')).save(C.zmod(3))
    with open(os.path.join(here, 'data', 'z3.yaml')) as fp:
        assert (tmp_path / 'z3.yaml').read_text() == fp.read()


def test_matrix_ring_keeps_its_labels(tmp_path):
    R = Evaluator().evaluate('U(2,Z2)')
    filename = str(tmp_path / 'u2.yaml')
    RingTableYaml(filename).save(R)
    S = RingTableYaml(filename).load()
    assert S.labels == R.labels
    assert S.one == R.one
    assert np.array_equal(S.add, R.add)
    assert np.array_equal(S.mul, R.mul)


def test_unknown_key_is_rejected(tmp_path):
    (tmp_path / 'extra.yaml').write_text('add: [[0]]\nmul: [[0]]\ncomment: trivial\n')
    with pytest.raises(ValueError):
        RingTableYaml(str(tmp_path / 'extra.yaml')).load()


def test_manifest_survives_save(tmp_path):
    data = ManifestYaml(os.path.join(here, 'data', 'manifest.yaml')).load()
    ManifestYaml(str(tmp_path / 'manifest.yaml')).save(data)
    assert ManifestYaml(str(tmp_path / 'manifest.yaml')).load() == data
