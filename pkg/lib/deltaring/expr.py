# -*- coding: utf-8 -*-
#
# This file is part of deltaring (https://github.com/deltaring/deltaring).
# Copyright (c) 2024-2026 The deltaring developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions
# are met:
#
# 1. Redistributions of source code must retain the above copyright
#    notice, this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright
#    notice, this list of conditions and the following disclaimer in the
#    documentation and/or other materials provided with the distribution.
# 3. The name of the author may not be used to endorse or promote products
#    derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE AUTHOR ``AS IS'' AND ANY EXPRESS OR
# IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED WARRANTIES
# OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE DISCLAIMED.
# IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY DIRECT, INDIRECT,
# INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT
# NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE,
# DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY
# THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF
# THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.


import logging
import os
import re
import threading

from . import constructors as C
from .ring import RingError, two_sided_closure
from .radicals import delta, jacobson, socle
from .storage import RingTableYaml, CayleyTableYaml, AlgebraYaml, ManifestYaml

logger = logging.getLogger(__name__)


class ExpressionSyntaxError(RingError):
    """A ring expression does not follow the grammar"""

    def __init__(self, message, text, position):
        RingError.__init__(self)
        self.message = message
        self.text = text
        self.position = position

    def __str__(self):
        return '%s at position %d\n  %s\n  %s^' % (self.message, self.position, self.text, ' ' * self.position)


class ExpressionError(RingError):
    """A well-formed expression names something unknown or out of range"""
    ...


class Scanner(object):
    TOKENS = [
        ('WS', r'\s+'),
        ('WORD', r'\d+[A-Za-z_][A-Za-z0-9_]*'),
        ('INT', r'\d+'),
        ('NAME', r'[A-Za-z_][A-Za-z0-9_]*'),
        ('LPAREN', r'\('),
        ('RPAREN', r'\)'),
        ('LBRACK', r'\['),
        ('RBRACK', r'\]'),
        ('LBRACE', r'\{'),
        ('RBRACE', r'\}'),
        ('COMMA', r','),
        ('PLUS', r'\+'),
        ('MINUS', r'-'),
    ]
    PATTERN = re.compile('|'.join('(?P<%s>%s)' % pair for pair in TOKENS))

    def __init__(self, text):
        self.text = text
        self.index = 0
        self.token = None
        self.lexeme = None
        self.position = 0

    def lex(self):
        while True:
            self.position = self.index
            if self.index >= len(self.text):
                self.token, self.lexeme = None, None
                return
            match = self.PATTERN.match(self.text, self.index)
            if match is None:
                raise ExpressionSyntaxError('unexpected %r' % (self.text[self.index],), self.text, self.index)
            self.index = match.end()
            if match.lastgroup != 'WS':
                self.token, self.lexeme = match.lastgroup, match.group()
                return

    def raw_until(self, closing):
        """Raw text after the current token up to the closing character"""
        start = self.index
        end = self.text.find(closing, start)
        if end < 0:
            raise ExpressionSyntaxError('expected %r' % (closing,), self.text, len(self.text))
        if not self.text[start:end].strip():
            raise ExpressionSyntaxError('expected a path', self.text, start)
        self.index = end
        self.lex()
        return self.text[start:end].strip()


class Literal(object):
    """A structured element literal: int, word, list (matrix rows) or tuple (product components)"""

    def __init__(self, value):
        self.value = value

    def __eq__(self, other):
        return isinstance(other, Literal) and _same_shape(self.value, other.value)

    def __hash__(self):
        return hash(str(self))

    def __str__(self):
        return _format_literal(self.value)

    __repr__ = __str__


def _same_shape(a, b):
    if type(a) is not type(b):
        return False
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(_same_shape(x, y) for x, y in zip(a, b))
    return a == b


def _format_literal(value):
    if isinstance(value, list):
        return '[%s]' % (','.join(_format_literal(v) for v in value),)
    if isinstance(value, tuple):
        return '(%s)' % (','.join(_format_literal(v) for v in value),)
    return str(value)


class RingExpr(object):
    """Abstract syntax tree of a ring construction"""

    def __init__(self, kind, *args):
        self.kind = kind
        self.args = args

    def __eq__(self, other):
        return isinstance(other, RingExpr) and self.kind == other.kind and self.args == other.args

    def __hash__(self):
        return hash(str(self))

    def __str__(self):
        if self.kind in ('Z', 'GF'):
            return '%s%d' % (self.kind, self.args[0])
        if self.kind == 'freealg16':
            return self.kind
        if self.kind == 'table':
            return 'table(%s)' % (self.args[0],)
        return '%s(%s)' % (self.kind, ','.join(_format_arg(a) for a in self.args))

    def __repr__(self):
        return '<RingExpr %s>' % (self,)


class Gens(object):
    """Generators of a two-sided ideal: element literals or one of the radical keywords"""

    KEYWORDS = ('delta', 'jacobson', 'socle')

    def __init__(self, elements=None, keyword=None):
        self.elements = tuple(elements or ())
        self.keyword = keyword

    def __eq__(self, other):
        return isinstance(other, Gens) and (self.elements, self.keyword) == (other.elements, other.keyword)

    def __hash__(self):
        return hash(str(self))

    def __str__(self):
        if self.keyword:
            return self.keyword
        return '{%s}' % (','.join(str(e) for e in self.elements),)


def _format_arg(arg):
    return str(arg)


# Constructor name -> argument shapes
SIGNATURES = {
    'M': ('int', 'expr'),
    'U': ('int', 'expr'),
    'D': ('int', 'expr'),
    'V': ('int', 'expr'),
    'quot': ('expr', 'gens'),
    'corner': ('expr', 'elem'),
    'S': ('expr',),
    'dorroh': ('expr', 'name'),
    'sgring': ('expr', 'name'),
    'grpring': ('expr', 'name'),
    'H3': ('int', 'expr'),
    'Hst': ('elem', 'elem', 'expr'),
    'K': ('elem', 'expr'),
}


class Parser(object):
    def __init__(self, text):
        self.text = text
        self.scanner = Scanner(text)

    def parse(self):
        self.scanner.lex()
        expr = self._expr()
        if self.scanner.token is not None:
            self._unexpected()
        return expr

    def parse_element(self):
        self.scanner.lex()
        value = self._elem()
        if self.scanner.token is not None:
            self._unexpected()
        return value

    def peek(self, token):
        return self.scanner.token == token

    def accept(self, token):
        if self.peek(token):
            lexeme = self.scanner.lexeme
            self.scanner.lex()
            return lexeme if lexeme is not None else True
        return None

    def expect(self, token):
        lexeme = self.accept(token)
        if lexeme is None:
            what = 'end of input' if self.scanner.token is None else repr(self.scanner.lexeme)
            raise ExpressionSyntaxError('expected %s, found %s' % (token, what), self.text, self.scanner.position)
        return lexeme

    def _unexpected(self):
        what = 'end of input' if self.scanner.token is None else repr(self.scanner.lexeme)
        raise ExpressionSyntaxError('unexpected %s' % (what,), self.text, self.scanner.position)

    def _expr(self):
        position = self.scanner.position
        name = self.expect('NAME')
        match = re.fullmatch(r'(Z|GF)(\d+)', name)
        if match:
            return RingExpr(match.group(1), int(match.group(2)))
        if name == 'freealg16':
            return RingExpr(name)
        if not self.peek('LPAREN'):
            raise ExpressionSyntaxError('unknown ring %r' % (name,), self.text, position)
        if name == 'table':
            # paths are not tokens
            path = self.scanner.raw_until(')')
            self.expect('RPAREN')
            return RingExpr('table', path)
        self.expect('LPAREN')
        if name == 'prod':
            args = [self._expr()]
            while self.accept('COMMA'):
                args.append(self._expr())
            self.expect('RPAREN')
            return RingExpr('prod', *args)
        if name not in SIGNATURES:
            raise ExpressionSyntaxError('unknown constructor %r' % (name,), self.text, position)
        args = []
        for i, shape in enumerate(SIGNATURES[name]):
            if i:
                self.expect('COMMA')
            args.append(self._arg(shape))
        self.expect('RPAREN')
        return RingExpr(name, *args)

    def _arg(self, shape):
        if shape == 'int':
            return int(self.expect('INT'))
        if shape == 'expr':
            return self._expr()
        if shape == 'name':
            return self.expect('NAME')
        if shape == 'elem':
            return Literal(self._elem())
        if shape == 'gens':
            if self.peek('NAME'):
                position = self.scanner.position
                keyword = self.expect('NAME')
                if keyword not in Gens.KEYWORDS:
                    raise ExpressionSyntaxError('unknown ideal %r' % (keyword,), self.text, position)
                return Gens(keyword=keyword)
            self.expect('LBRACE')
            elements = []
            if not self.accept('RBRACE'):
                elements.append(Literal(self._elem()))
                while self.accept('COMMA'):
                    elements.append(Literal(self._elem()))
                self.expect('RBRACE')
            return Gens(elements)
        raise ValueError(shape)

    def _sequence(self, closing):
        items = [self._elem()]
        while self.accept('COMMA'):
            items.append(self._elem())
        self.expect(closing)
        return items

    def _elem(self):
        if self.accept('LBRACK'):
            return self._sequence('RBRACK')
        if self.accept('LPAREN'):
            return tuple(self._sequence('RPAREN'))
        if self.accept('MINUS'):
            return -int(self.expect('INT'))
        terms = [self._term()]
        while self.accept('PLUS'):
            terms.append(self._term())
        if len(terms) == 1 and isinstance(terms[0], int):
            return terms[0]
        return '+'.join(str(t) for t in terms)

    def _term(self):
        # 2a, 2g0: an integer coefficient glued to a basis name
        word = self.accept('WORD')
        if word is not None:
            return word
        number = self.accept('INT')
        if number is not None:
            return int(number)
        if self.peek('NAME'):
            return self.expect('NAME')
        self._unexpected()


def parse_ring_expr(text):
    return Parser(text).parse()


def parse_element(text):
    """A structured element literal: an integer, a label sum, [..] or (..)"""
    return Parser(text).parse_element()


BUILTIN_ALGEBRAS = {
    'sgT': {'semigroup': 'LZ2'},
    'matT': {'ambient': 'M(2,Z2)', 'subring': [[[1, 1], [1, 1]], [[1, 1], [0, 0]], [[0, 0], [1, 1]]]},
}


class Manifest(object):
    """Named Cayley tables and bimodule algebras that expressions refer to"""

    def __init__(self, tables=None, algebras=None, basedir='.'):
        self.tables = C.builtin_tables()
        self.algebras = dict(BUILTIN_ALGEBRAS)
        self.basedir = basedir
        self._files = {}
        for name, spec in (tables or {}).items():
            self.tables[name] = spec
        for name, spec in (algebras or {}).items():
            self.algebras[name] = spec

    @classmethod
    def from_file(cls, filename):
        data = ManifestYaml(filename).load()
        return cls(data.get('tables'), data.get('algebras'), os.path.dirname(os.path.abspath(filename)))

    def path(self, filename):
        return os.path.join(self.basedir, os.path.expanduser(filename))

    def table(self, name):
        spec = self.tables.get(name)
        if spec is None:
            raise ExpressionError('Unknown Cayley table %r (known: %s)' % (name, ', '.join(sorted(self.tables))))
        if isinstance(spec, C.CayleyTable):
            return spec
        if 'file' not in spec:
            raise ExpressionError('Cayley table %r needs a file' % (name,))
        table = CayleyTableYaml(self.path(spec['file'])).load(name)
        self.tables[name] = table
        return table

    def algebra(self, name, base, evaluator):
        spec = self.algebras.get(name)
        if spec is None:
            raise ExpressionError('Unknown algebra %r (known: %s)' % (name, ', '.join(sorted(self.algebras))))
        if 'semigroup' in spec:
            return C.semigroup_algebra(base, self.table(spec['semigroup']), name=name)
        if 'subring' in spec:
            ambient = evaluator.evaluate(parse_ring_expr(spec['ambient']))
            gens = [ambient.index(value) for value in spec['subring']]
            return C.subring_algebra(base, ambient, gens, name=name)
        if 'file' in spec:
            data = AlgebraYaml(self.path(spec['file'])).load()
            expected = str(parse_ring_expr(data['base']))
            if expected != base.name:
                raise ExpressionError('Algebra %r is defined over %s, not %s' % (name, expected, base.name))
            T = data['algebra']
            T.name = name
            return C.BimoduleAlgebra(base, T, data['left'], data['right'], name=name)
        raise ExpressionError('Algebra %r needs one of semigroup, subring or file' % (name,))


class Evaluator(object):
    """Builds rings from expressions; equal subexpressions yield the same ring object

    Each expression has its own build lock, so distinct rings build in parallel while a second
    request for a ring under construction waits for it. A ring only waits on its own subexpressions,
    which keeps the lock order acyclic.
    """

    def __init__(self, manifest=None):
        self.manifest = manifest or Manifest()
        self._rings = {}
        self._building = {}
        self._lock = threading.Lock()

    def evaluate(self, expr):
        if isinstance(expr, str):
            expr = parse_ring_expr(expr)
        key = str(expr)
        with self._lock:
            ring = self._rings.get(key)
            if ring is not None:
                return ring
            build_lock = self._building.setdefault(key, threading.Lock())

        with build_lock:
            with self._lock:
                ring = self._rings.get(key)
            if ring is None:
                logger.debug('Building %s', key)
                ring = self._build(expr)
                ring.name = key
                with self._lock:
                    ring = self._rings.setdefault(key, ring)
                    self._building.pop(key, None)
        return ring

    def element(self, R, literal):
        return R.index(literal.value)

    def _positive(self, n, what):
        if n < 1:
            raise ExpressionError('%s must be positive, got %d' % (what, n))
        return n

    def _build(self, expr):
        kind, args = expr.kind, expr.args
        if kind == 'Z':
            return C.zmod(self._positive(args[0], 'Z_n modulus'))
        if kind == 'GF':
            try:
                return C.galois_field(args[0])
            except ValueError as e:
                raise ExpressionError(str(e))
        if kind == 'freealg16':
            return C.free_algebra_example()
        if kind == 'table':
            return RingTableYaml(self.manifest.path(args[0])).load()
        if kind == 'prod':
            return C.direct_product([self.evaluate(a) for a in args])
        if kind in ('M', 'U', 'D', 'V'):
            build = {'M': C.matrix_full, 'U': C.matrix_upper, 'D': C.matrix_D, 'V': C.matrix_V}[kind]
            return build(self._positive(args[0], 'Matrix size'), self.evaluate(args[1]))
        if kind == 'H3':
            return C.h3(self._positive(args[0], 'H3 modulus'), self.evaluate(args[1]))

        R = self.evaluate(args[-1] if kind in ('Hst', 'K') else args[0])
        if kind == 'quot':
            gens = args[1]
            if gens.keyword:
                ideal = {'delta': delta, 'jacobson': jacobson, 'socle': socle}[gens.keyword](R)
            else:
                ideal = two_sided_closure(R, [self.element(R, e) for e in gens.elements])
            return C.quotient(R, ideal)
        if kind == 'corner':
            return C.corner(R, self.element(R, args[1]))
        if kind == 'S':
            return C.pair_subring_S(R)
        if kind == 'dorroh':
            return C.dorroh(R, self.manifest.algebra(args[1], R, self))
        if kind == 'sgring':
            return C.semigroup_ring(R, self.manifest.table(args[1]))
        if kind == 'grpring':
            return C.group_ring(R, self.manifest.table(args[1]))
        if kind == 'Hst':
            return C.hst(self.element(R, args[0]), self.element(R, args[1]), R)
        if kind == 'K':
            return C.ks(self.element(R, args[0]), R)
        raise ExpressionError('Unknown construction %r' % (kind,))


def evaluate(text, manifest=None):
    return Evaluator(manifest).evaluate(text)
