import docutils.nodes
import docutils.parsers.rst
import docutils.utils
import docutils.frontend

import os
import shlex
import yaml
import pytest

from deltaring import constructors as C
from deltaring.config import CommandConfig
from deltaring.expr import Evaluator, Manifest, parse_ring_expr
from deltaring.ring import build_table_ring
from deltaring.storage import DEFAULT_CONFIG

root = os.path.join(os.path.dirname(__file__), '..', '..', '..')
here = os.path.dirname(__file__)


# https://stackoverflow.com/a/48719723/1047040
# https://stackoverflow.com/a/75996218/1047040
def parse_rst(text):
    parser = docutils.parsers.rst.Parser()
    if hasattr(docutils.frontend, 'get_default_settings'):
        # docutils >= 0.18
        settings = docutils.frontend.get_default_settings(docutils.parsers.rst.Parser)
    else:
        # docutils < 0.18
        settings = docutils.frontend.OptionParser(components=(docutils.parsers.rst.Parser,)).get_default_values()
    document = docutils.utils.new_document('<rst-doc>', settings=settings)
    parser.parse(text, document)
    return document


class CodeBlockVisitor(docutils.nodes.NodeVisitor):
    def __init__(self, doc):
        super().__init__(doc)
        self.yaml_blocks = []
        self.commands = []

    def visit_literal_block(self, node):
        if 'yaml' in node.attributes['classes']:
            self.yaml_blocks.append(yaml.safe_load(node.astext()))
        else:
            self.commands.extend(line.strip() for line in node.astext().splitlines()
                                 if line.strip().startswith('deltaring '))

    def unknown_visit(self, node: docutils.nodes.Node) -> None:
        ...


def load_code_blocks(filename):
    with open(os.path.join(root, 'docs', 'source', filename)) as f:
        doc = parse_rst(f.read())
    visitor = CodeBlockVisitor(doc)
    doc.walk(visitor)
    return visitor


def unknown_keys(document, defaults, prefix=''):
    for key, value in document.items():
        if key not in defaults:
            yield prefix + key
        elif isinstance(value, dict) and isinstance(defaults[key], dict):
            yield from unknown_keys(value, defaults[key], prefix + key + '.')


CONFIG_BLOCKS = load_code_blocks('configuration.rst').yaml_blocks
EXPRESSIONS = load_code_blocks('expressions.rst')


@pytest.mark.parametrize('block', CONFIG_BLOCKS, ids=[','.join(block) for block in CONFIG_BLOCKS])
def test_configuration_keys(block):
    assert list(unknown_keys(block, DEFAULT_CONFIG)) == []


def test_configuration_defaults_are_documented():
    documented = {}
    for block in CONFIG_BLOCKS:
        documented.update(block)
    assert documented['limits'] == DEFAULT_CONFIG['limits']
    assert documented['catalog'] == DEFAULT_CONFIG['catalog']
    assert documented['harness'] == DEFAULT_CONFIG['harness']


def blocks_with(key):
    return [block for block in EXPRESSIONS.yaml_blocks if key in block]


def test_manifest_example():
    manifest, = blocks_with('algebras')
    evaluator = Evaluator(Manifest(manifest['tables'], manifest['algebras'], basedir=os.path.join(here, 'data')))
    assert evaluator.evaluate('sgring(Z2,RZ2)').order == 4
    assert evaluator.evaluate('dorroh(Z2,sgT3)').order == 8
    assert evaluator.evaluate('dorroh(Z2,diagT)').order == 4


def test_cayley_table_example():
    block, = blocks_with('elements')
    table = C.CayleyTable(block['elements'], block['table'], name='example')
    assert len(table.elements) == 2


def test_ring_table_example():
    block, = blocks_with('add')
    R = build_table_ring(block['add'], block['mul'], block.get('one'))
    assert R.order == block['order']
    assert R.one == 1


@pytest.mark.parametrize('command', EXPRESSIONS.commands)
def test_command_examples(command):
    config = CommandConfig(shlex.split(command)[1:], 'deltaring', here, 'deltaring.yaml', 'verdicts.db')
    assert str(parse_ring_expr(config.ring))
