import concurrent.futures
import os
import threading
import time

import pytest
from hypothesis import given, settings, strategies as st

from deltaring.expr import (Evaluator, ExpressionError, ExpressionSyntaxError, Manifest, parse_element,
                            parse_ring_expr)
from deltaring.ring import ElementError, ShapeError
from deltaring.worker import run_parallel

here = os.path.dirname(__file__)

CANONICAL = [
    ('Z16', 'Z16'),
    ('GF5', 'GF5'),
    ('M(2, Z4)', 'M(2,Z4)'),
    ('prod(Z2,  Z3, Z5)', 'prod(Z2,Z3,Z5)'),
    ('quot(Z16, {4})', 'quot(Z16,{4})'),
    ('quot(U(2,Z3), delta)', 'quot(U(2,Z3),delta)'),
    ('quot(M(2,Z4), {[[2, 0], [0, 0]], [[0,2],[0,0]]})', 'quot(M(2,Z4),{[[2,0],[0,0]],[[0,2],[0,0]]})'),
    ('corner(U(2,Z2), [[0,0],[0,1]])', 'corner(U(2,Z2),[[0,0],[0,1]])'),
    ('corner(prod(Z2,Z3), (1,0))', 'corner(prod(Z2,Z3),(1,0))'),
    ('dorroh(Z2, sgT)', 'dorroh(Z2,sgT)'),
    ('grpring(Z2, C3)', 'grpring(Z2,C3)'),
    ('Hst(1, 1, Z4)', 'Hst(1,1,Z4)'),
    ('K(0, Z7)', 'K(0,Z7)'),
    ('H3(2, Z2)', 'H3(2,Z2)'),
    ('S(U(2,Z2))', 'S(U(2,Z2))'),
    ('U(2, freealg16)', 'U(2,freealg16)'),
    ('corner(freealg16, 1+a)', 'corner(freealg16,1+a)'),
    ('table( rings/z3.yaml )', 'table(rings/z3.yaml)'),
    ('table(/tmp/z3-ring.yaml)', 'table(/tmp/z3-ring.yaml)'),
]

SYNTAX_ERRORS = [
    # text, position
    ('M(2,Z4', 6),
    ('foo(Z2)', 0),
    ('Z2 Z3', 3),
    ('M(x,Z2)', 2),
    ('Z4$', 2),
    ('quot(Z4,radical)', 8),
    ('', 0),
]

ELEMENTS = [
    ('3', 3),
    ('-1', -1),
    ('[[0,0],[3,1]]', [[0, 0], [3, 1]]),
    ('(1, [0,1])', (1, [0, 1])),
    ('1+a+ba', '1+a+ba'),
    ('2g0+g1', '2g0+g1'),
]


@pytest.mark.parametrize('text, expected', CANONICAL, ids=[v[1] for v in CANONICAL])
def test_canonical_form(text, expected):
    assert str(parse_ring_expr(text)) == expected


@pytest.mark.parametrize('text, position', SYNTAX_ERRORS, ids=[v[0] or 'empty' for v in SYNTAX_ERRORS])
def test_syntax_error_positions(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_ring_expr(text)
    assert info.value.position == position
    assert str(info.value).endswith(' ' * position + '^')


@pytest.mark.parametrize('text, expected', ELEMENTS, ids=[v[0] for v in ELEMENTS])
def test_element_literals(text, expected):
    assert parse_element(text) == expected


def test_unknown_names_are_reported(evaluator):
    with pytest.raises(ExpressionError):
        evaluator.evaluate('dorroh(Z2,nosuchalgebra)')
    with pytest.raises(ExpressionError):
        evaluator.evaluate('grpring(Z2,Q8)')
    with pytest.raises(ExpressionError):
        evaluator.evaluate('GF6')
    with pytest.raises(ExpressionError):
        evaluator.evaluate('M(0,Z2)')
    with pytest.raises(ElementError):
        evaluator.evaluate('corner(Z4,7)')


def test_shared_subexpressions(evaluator):
    R = evaluator.evaluate('U(2,Z2)')
    assert evaluator.evaluate('U(2, Z2)') is R
    assert evaluator.evaluate('S(U(2,Z2))').parent is R


def test_distinct_rings_build_concurrently(monkeypatch):
    evaluator = Evaluator()
    started, release = threading.Event(), threading.Event()
    build = evaluator._build

    def held_build(expr):
        if str(expr) == 'Z3':
            started.set()
            assert release.wait(5)
        return build(expr)

    monkeypatch.setattr(evaluator, '_build', held_build)
    with concurrent.futures.ThreadPoolExecutor(max_workers=1) as executor:
        pending = executor.submit(evaluator.evaluate, 'Z3')
        assert started.wait(5)
        assert evaluator.evaluate('Z2').order == 2
        release.set()
        assert pending.result().order == 3


def test_concurrent_requests_share_one_build(monkeypatch):
    evaluator = Evaluator()
    calls = []
    build = evaluator._build

    def counted_build(expr):
        calls.append(str(expr))
        time.sleep(0.05)
        return build(expr)

    monkeypatch.setattr(evaluator, '_build', counted_build)
    rings = run_parallel(evaluator.evaluate, ['U(2,Z2)'] * 4, max_workers=4)
    assert all(R is rings[0] for R in rings)
    assert calls.count('U(2,Z2)') == 1
    assert calls.count('Z2') == 1


def test_table_ring_from_file():
    evaluator = Evaluator(Manifest(basedir=os.path.join(here, 'data')))
    R = evaluator.evaluate('table(z3.yaml)')
    assert R.order == 3
    assert R.one == 1
    assert evaluator.evaluate('M(2,table(z3.yaml))').order == 81


def test_table_ring_with_bad_shape(tmp_path):
    (tmp_path / 'bad.yaml').write_text('order: 3\nadd: [[0, 1], [1, 0]]\nmul: [[0, 0], [0, 1]]\n')
    evaluator = Evaluator(Manifest(basedir=str(tmp_path)))
    with pytest.raises(ShapeError):
        evaluator.evaluate('table(bad.yaml)')


def test_manifest_rejects_unknown_sections():
    with pytest.raises(ValueError):
        Manifest.from_file(os.path.join(here, 'data', 'broken-manifest.yaml'))


def ring_expressions():
    base = st.sampled_from(['Z2', 'Z3', 'Z4', 'GF5', 'freealg16'])

    def extend(inner):
        return st.one_of(
            st.tuples(st.sampled_from('MUDV'), st.integers(1, 3), inner).map(lambda t: '%s(%d,%s)' % t),
            st.lists(inner, min_size=1, max_size=3).map(lambda args: 'prod(%s)' % (','.join(args),)),
            inner.map(lambda r: 'S(%s)' % (r,)),
            inner.map(lambda r: 'quot(%s,delta)' % (r,)),
            st.tuples(inner, st.integers(0, 3)).map(lambda t: 'K(%d,%s)' % (t[1], t[0])),
        )
    return st.recursive(base, extend, max_leaves=4)


@settings(max_examples=100, deadline=None)
@given(ring_expressions())
def test_printed_expressions_parse_back(text):
    expr = parse_ring_expr(text)
    assert str(expr) == text
    assert parse_ring_expr(str(expr)) == expr
