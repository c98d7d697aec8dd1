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
from functools import reduce

import numpy as np

from .ring import (RingError, ShapeError, ElementSubset, TwoSidedIdeal, build_table_ring, check_order,
                   format_value, is_two_sided, idempotent_elements, center, units, additive_span)

logger = logging.getLogger(__name__)

# Pairs tabulated per numpy pass
CHUNK = 2 ** 20


class NotIdempotent(RingError):
    """A corner needs a nonzero idempotent"""
    ...


class NotCentral(RingError):
    """A twisting scalar must commute with every element"""
    ...


class NotCentralUnit(RingError):
    """The parameters of Hst must be central units"""
    ...


class NotTwoSided(RingError):
    """Quotients are taken by two-sided ideals only"""
    ...


class CharacteristicMismatch(RingError):
    """The integer part of H3 needs char(R) to divide m"""
    ...


class NotAGroup(RingError):
    """A group ring needs a group table"""
    ...


class NonAssociativeTable(RingError):
    """A Cayley table fails associativity"""

    def __init__(self, witness):
        RingError.__init__(self)
        self.witness = tuple(int(x) for x in witness)

    def __str__(self):
        return 'Cayley table is not associative at %r' % (self.witness,)


class ActionIncompatible(RingError):
    """Left/right actions on an algebra break a bimodule law"""

    def __init__(self, law, witness):
        RingError.__init__(self)
        self.law = law
        self.witness = tuple(int(x) for x in witness)

    def __str__(self):
        return 'Action law violated: %s (witness %r)' % (self.law, self.witness)


def _first(mask):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(x) for x in hits[0])


def _tabulate(coords, op, encode):
    """Operation table of a coordinate ring: op maps coordinate rows (X, Y) to result rows"""
    n = len(coords)
    table = np.empty((n, n), dtype=np.int64)
    step = max(1, CHUNK // n)
    for start in range(0, n, step):
        rows = coords[start:start + step]
        X = np.repeat(rows, n, axis=0)
        Y = np.tile(coords, (len(rows), 1))
        table[start:start + len(rows)] = encode(op(X, Y)).reshape(len(rows), n)
    return table


def _vsum(R, terms):
    return reduce(lambda acc, x: R.add[acc, x], terms)


class Coordinates(object):
    """Mixed-radix numbering of tuples of component indices, first component most significant"""

    def __init__(self, parts):
        self.parts = list(parts)
        self.orders = [p.order for p in self.parts]
        self.order = int(np.prod(self.orders, dtype=object))
        strides = [1] * len(self.orders)
        for i in range(len(self.orders) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.orders[i + 1]
        self.strides = np.array(strides, dtype=np.int64)

    def all(self):
        return np.indices(self.orders).reshape(len(self.orders), -1).T.astype(np.int64)

    def encode(self, Z):
        return (np.asarray(Z, dtype=np.int64) * self.strides).sum(axis=1)

    def add(self, X, Y):
        return np.stack([p.add[X[:, c], Y[:, c]] for c, p in enumerate(self.parts)], axis=1)


def coordinate_ring(parts, mul, one, render, name):
    """Tabulate and verify a ring whose elements are tuples over the given component rings"""
    layout = Coordinates(parts)
    check_order(layout.order, name)
    coords = layout.all()
    logger.debug('Tabulating %s over %d coordinates (order %d)', name, len(parts), layout.order)
    add = _tabulate(coords, layout.add, layout.encode)
    product = _tabulate(coords, mul, layout.encode)
    one_idx = None if one is None else int(layout.encode(np.array([one]))[0])
    ring = build_table_ring(add, product, one_idx, values=[render(row) for row in coords], name=name)
    ring.parts = layout.parts
    ring.coords = coords
    return ring


def zmod(n):
    """Z_n"""
    if n < 1:
        raise ValueError('Z_n needs n >= 1, got %r' % (n,))
    check_order(n, 'Z%d' % (n,))
    idx = np.arange(n)
    add = np.add.outer(idx, idx) % n
    mul = np.multiply.outer(idx, idx) % n
    return build_table_ring(add, mul, 1 % n, name='Z%d' % (n,))


def galois_field(p):
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError('GF(p) is built for primes only, got %r' % (p,))
    ring = zmod(p)
    ring.name = 'GF%d' % (p,)
    return ring


def direct_product(rings, name=None):
    if not rings:
        raise ValueError('A direct product needs at least one factor')
    name = name or 'prod(%s)' % (','.join(r.name for r in rings),)

    def mul(X, Y):
        return np.stack([r.mul[X[:, c], Y[:, c]] for c, r in enumerate(rings)], axis=1)

    one = [r.one for r in rings] if all(r.unital for r in rings) else None
    return coordinate_ring(rings, mul, one,
                           lambda row: tuple(r.values[x] for r, x in zip(rings, row)), name)


def component_subset(R, sets):
    """Subset of a coordinate ring whose components lie in the given per-component subsets"""
    bits = np.ones(R.order, dtype=bool)
    for c, S in enumerate(sets):
        bits &= S.bits[R.coords[:, c]]
    return ElementSubset(R, bits)


def _matrix_mul(R, n, X, Y):
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(_vsum(R, [R.mul[X[:, i * n + k], Y[:, k * n + j]] for k in range(n)]))
    return np.stack(entries, axis=1)


def _matrix_value(R, n, full_row):
    return [[R.values[full_row[i * n + j]] for j in range(n)] for i in range(n)]


def matrix_ring(n, R, pattern, name):
    """Subring of M_n(R) cut out by a pattern: pattern[i][j] is a parameter number or None for zero

    A parameter may occupy several positions; its value is read back from the first one.
    """
    if n < 1:
        raise ValueError('Matrix size must be positive, got %r' % (n,))
    params = sorted({p for row in pattern for p in row if p is not None})
    first = {}
    for i in range(n):
        for j in range(n):
            p = pattern[i][j]
            if p is not None:
                first.setdefault(p, i * n + j)

    def expand(P):
        full = np.full((len(P), n * n), R.zero, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if pattern[i][j] is not None:
                    full[:, i * n + j] = P[:, pattern[i][j]]
        return full

    def mul(X, Y):
        Z = _matrix_mul(R, n, expand(X), expand(Y))
        return np.stack([Z[:, first[p]] for p in params], axis=1)

    def render(row):
        return _matrix_value(R, n, expand(row[None, :])[0])

    one = None
    if R.unital:
        ident = np.zeros(n * n, dtype=bool)
        ident[[i * n + i for i in range(n)]] = True
        one = [R.one if ident[first[p]] else R.zero for p in params]
    ring = coordinate_ring([R] * len(params), mul, one, render, name)
    ring.expand = expand
    return ring


def matrix_full(n, R):
    return matrix_ring(n, R, [[i * n + j for j in range(n)] for i in range(n)], 'M(%d,%s)' % (n, R.name))


def matrix_upper(n, R):
    params = {}
    pattern = [[params.setdefault((i, j), len(params)) if j >= i else None for j in range(n)] for i in range(n)]
    return matrix_ring(n, R, pattern, 'U(%d,%s)' % (n, R.name))


def matrix_D(n, R):
    """Upper triangular matrices with one repeated diagonal entry"""
    params = {'diag': 0}
    pattern = [[(0 if i == j else params.setdefault((i, j), len(params))) if j >= i else None
                for j in range(n)] for i in range(n)]
    return matrix_ring(n, R, pattern, 'D(%d,%s)' % (n, R.name))


def matrix_V(n, R):
    """Upper triangular Toeplitz matrices: a_ij = a_(i+1)(j+1)"""
    return matrix_ring(n, R, [[j - i if j >= i else None for j in range(n)] for i in range(n)],
                       'V(%d,%s)' % (n, R.name))


def restrict(R, indices, one=None, name=None):
    """The subring of R on the given elements, as a ring of its own"""
    idx = np.unique(np.asarray(list(indices), dtype=np.int64))
    local = np.full(R.order, -1, dtype=np.int64)
    local[idx] = np.arange(len(idx))
    add = local[R.add[np.ix_(idx, idx)]]
    mul = local[R.mul[np.ix_(idx, idx)]]
    if (add < 0).any() or (mul < 0).any():
        raise ValueError('Elements do not form a subring of %s' % (R.name,))
    ring = build_table_ring(add, mul, None if one is None else int(local[one]),
                            labels=[R.labels[i] for i in idx], values=[R.values[i] for i in idx],
                            name=name or 'sub(%s)' % (R.name,))
    ring.parent = R
    ring.embedding = idx
    return ring


def subring(R, gens, name=None):
    """Subring generated by gens (no identity adjoined)"""
    bits = additive_span(R, gens)
    while True:
        members = np.flatnonzero(bits)
        grown = additive_span(R, np.unique(R.mul[np.ix_(members, members)]), start=bits)
        if np.array_equal(grown, bits):
            break
        bits = grown
    return restrict(R, np.flatnonzero(bits), name=name)


def quotient(R, I, name=None):
    """R/I, with ring.projection sending each element of R to its coset"""
    if not is_two_sided(R, I):
        raise NotTwoSided('%s is not a two-sided ideal of %s' % (I, R.name))
    reps = R.add[:, I.indices].min(axis=1)
    classes = np.unique(reps)
    local = np.full(R.order, -1, dtype=np.int64)
    local[classes] = np.arange(len(classes))
    projection = local[reps]
    add = projection[R.add[np.ix_(classes, classes)]]
    mul = projection[R.mul[np.ix_(classes, classes)]]
    one = int(projection[R.one]) if R.unital else None
    ring = build_table_ring(add, mul, one, labels=[R.labels[i] for i in classes],
                            values=[R.values[i] for i in classes],
                            name=name or 'quot(%s,{%s})' % (R.name, ','.join(I.labels())))
    for x in range(R.order):
        ring.alias(R.values[x], projection[x])
    ring.parent = R
    ring.projection = projection
    return ring


def corner(R, e, name=None):
    """eRe, a ring with identity e"""
    e = int(e)
    if e == R.zero or e not in idempotent_elements(R):
        raise NotIdempotent('%s is not a nonzero idempotent of %s' % (R.label(e), R.name))
    carrier = np.unique(R.mul[R.mul[e, :], e])
    return restrict(R, carrier, one=e, name=name or 'corner(%s,%s)' % (R.name, R.label(e)))


def pair_subring_S(R, name=None):
    """S = {(r, s) in R×R : r - s in δ(R)}"""
    from .radicals import delta

    d = delta(R).bits
    n = R.order
    differences = R.add[np.arange(n)[:, None], R.neg[None, :]]
    pairs = np.argwhere(d[differences]).astype(np.int64)
    check_order(len(pairs), 'S(%s)' % (R.name,))
    lookup = np.full(n * n, -1, dtype=np.int64)
    lookup[pairs[:, 0] * n + pairs[:, 1]] = np.arange(len(pairs))

    def encode(Z):
        return lookup[Z[:, 0] * n + Z[:, 1]]

    def add(X, Y):
        return np.stack([R.add[X[:, 0], Y[:, 0]], R.add[X[:, 1], Y[:, 1]]], axis=1).astype(np.int64)

    def mul(X, Y):
        return np.stack([R.mul[X[:, 0], Y[:, 0]], R.mul[X[:, 1], Y[:, 1]]], axis=1).astype(np.int64)

    ring = build_table_ring(_tabulate(pairs, add, encode), _tabulate(pairs, mul, encode),
                            int(lookup[R.one * n + R.one]),
                            values=[(R.values[r], R.values[s]) for r, s in pairs],
                            name=name or 'S(%s)' % (R.name,))
    ring.parts = [R, R]
    ring.coords = pairs
    ring.parent = R
    return ring


class CayleyTable(object):
    """A finite semigroup given by a multiplication table over named elements"""

    def __init__(self, elements, table, name=None):
        self.elements = [str(x) for x in elements]
        self.name = name
        self.document_keys = None
        try:
            table = np.array(table, dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise ShapeError('Cayley table must be an integer matrix: %s' % (e,))
        k = len(self.elements)
        if table.shape != (k, k) or (k and (table.min() < 0 or table.max() >= k)):
            raise ShapeError('Cayley table for %d elements must be %dx%d with entries below %d' % (k, k, k, k))
        hit = _first(_associativity_defect(table))
        if hit is not None:
            raise NonAssociativeTable(hit)
        self.table = table
        idx = np.arange(k)
        ids = [u for u in range(k) if (table[u, :] == idx).all() and (table[:, u] == idx).all()]
        self.identity = ids[0] if ids else None

    def is_group(self):
        return self.identity is not None and bool((self.table == self.identity).any(axis=1).all())

    def with_identity(self, symbol='1'):
        """S¹: the semigroup with a fresh identity adjoined in front"""
        k = len(self.elements)
        table = np.zeros((k + 1, k + 1), dtype=np.int64)
        table[0, :] = np.arange(k + 1)
        table[:, 0] = np.arange(k + 1)
        table[1:, 1:] = self.table + 1
        return CayleyTable([symbol] + self.elements, table, name='%s1' % (self.name or 'S',))

    def __repr__(self):
        return '<CayleyTable %s: %s>' % (self.name, ', '.join(self.elements))


def _associativity_defect(table):
    """(xy)z != x(yz) as a k×k×k mask"""
    return table[table, :] != table[:, table]


def builtin_tables():
    tables = {
        'LZ2': CayleyTable(['a', 'b'], [[0, 0], [1, 1]], name='LZ2'),
        'V4': CayleyTable(['e', 'x', 'y', 'z'], [[i ^ j for j in range(4)] for i in range(4)], name='V4'),
    }
    for n in (2, 3, 4):
        tables['C%d' % (n,)] = CayleyTable(['g%d' % (i,) for i in range(n)],
                                           [[(i + j) % n for j in range(n)] for i in range(n)], name='C%d' % (n,))
    return tables


def linear_combination(F, names, row):
    """Render a coefficient vector over F as a formal sum such as 1+a+ba or 2g0+g1"""
    terms = []
    for name, c in zip(names, row):
        if c == F.zero:
            continue
        if F.unital and c == F.one:
            terms.append(name)
            continue
        value = F.values[c]
        if name == '1':
            terms.append(format_value(value))
        elif isinstance(value, int):
            terms.append('%d%s' % (value, name))
        else:
            terms.append('%s*%s' % (format_value(value), name))
    return '+'.join(terms) or '0'


def structure_algebra(F, basis, constants, one=None, name=None):
    """Free F-module on basis with b_i b_j = Σ constants[i][j][l] b_l (integer structure constants)"""
    C = np.array(constants, dtype=np.int64)
    k = len(basis)
    if C.shape != (k, k, k):
        raise ShapeError('Structure constants must be %dx%dx%d, got %r' % (k, k, k, C.shape))
    multiples = {int(c): np.array([F.multiple(int(c), x) for x in range(F.order)], dtype=np.int64)
                 for c in np.unique(C) if c != 0}

    def mul(X, Y):
        out = []
        for l in range(k):
            terms = [multiples[int(C[i, j, l])][F.mul[X[:, i], Y[:, j]]]
                     for i in range(k) for j in range(k) if C[i, j, l]]
            out.append(_vsum(F, terms) if terms else np.full(len(X), F.zero, dtype=np.int64))
        return np.stack(out, axis=1)

    return coordinate_ring([F] * k, mul, one, lambda row: linear_combination(F, basis, row), name)


def semigroup_ring(F, cayley, name=None):
    """F-linear combinations of semigroup elements with the convolution product

    Unital exactly when the semigroup has a two-sided identity.
    """
    k = len(cayley.elements)
    C = np.zeros((k, k, k), dtype=np.int64)
    for s in range(k):
        for t in range(k):
            C[s, t, cayley.table[s, t]] = 1
    one = None
    if cayley.identity is not None and F.unital:
        one = [F.one if s == cayley.identity else F.zero for s in range(k)]
    return structure_algebra(F, cayley.elements, C, one,
                             name or 'sgring(%s,%s)' % (F.name, cayley.name or 'S'))


def group_ring(F, cayley, name=None):
    if not cayley.is_group():
        raise NotAGroup('%r is not a group table' % (cayley,))
    return semigroup_ring(F, cayley, name or 'grpring(%s,%s)' % (F.name, cayley.name or 'G'))


FREE_ALGEBRA_BASIS = ['1', 'a', 'b', 'ba']

# Products of basis words modulo a² = a, b² = b, ab = 0
FREE_ALGEBRA_PRODUCTS = {
    ('a', 'a'): 'a', ('a', 'b'): None, ('a', 'ba'): None,
    ('b', 'a'): 'ba', ('b', 'b'): 'b', ('b', 'ba'): 'ba',
    ('ba', 'a'): 'ba', ('ba', 'b'): None, ('ba', 'ba'): None,
}


def free_algebra_example():
    """The 16-element Z2-algebra on a, b with a² = a, b² = b and ab = 0"""
    F = zmod(2)
    k = len(FREE_ALGEBRA_BASIS)
    C = np.zeros((k, k, k), dtype=np.int64)
    for i, u in enumerate(FREE_ALGEBRA_BASIS):
        for j, v in enumerate(FREE_ALGEBRA_BASIS):
            if u == '1' or v == '1':
                w = v if u == '1' else u
            else:
                w = FREE_ALGEBRA_PRODUCTS[(u, v)]
            if w is not None:
                C[i, j, FREE_ALGEBRA_BASIS.index(w)] = 1
    return structure_algebra(F, FREE_ALGEBRA_BASIS, C, [1, 0, 0, 0], 'freealg16')


def _central(R, s):
    return int(s) in center(R)


def _scalar_indices(R, m):
    """n·1_R for n in Z_m"""
    return np.array([R.multiple(n, R.one) for n in range(m)], dtype=np.int64)


def h3(m, R, name=None):
    """[[n, a1, a2], [0, a3, a4], [0, 0, n]] with n in Z_m acting through n·1_R"""
    if R.multiple(m, R.one) != R.zero:
        raise CharacteristicMismatch('char(%s) = %d does not divide %d' % (R.name, R.char, m))
    Zm = zmod(m)
    check_order(m * R.order ** 4, name or 'H3(%d,%s)' % (m, R.name))
    scalars = _scalar_indices(R, m)

    def mul(X, Y):
        n1, a1, a2, a3, a4 = (X[:, c] for c in range(5))
        n2, b1, b2, b3, b4 = (Y[:, c] for c in range(5))
        return np.stack([
            Zm.mul[n1, n2],
            R.add[R.mul[scalars[n1], b1], R.mul[a1, b3]],
            _vsum(R, [R.mul[scalars[n1], b2], R.mul[a1, b4], R.mul[a2, scalars[n2]]]),
            R.mul[a3, b3],
            R.add[R.mul[a3, b4], R.mul[a4, scalars[n2]]],
        ], axis=1)

    def render(row):
        n, a1, a2, a3, a4 = (int(x) for x in row)
        v = R.values
        return [[n, v[a1], v[a2]], [0, v[a3], v[a4]], [0, 0, n]]

    return coordinate_ring([Zm, R, R, R, R], mul, [1 % m, R.zero, R.zero, R.one, R.zero], render,
                           name or 'H3(%d,%s)' % (m, R.name))


def hst(s, t, R, name=None):
    """[[a, 0, 0], [c, d, f], [0, 0, g]] in M_3(R) with a - d = sc and d - g = tf"""
    s, t = int(s), int(t)
    U = units(R)
    for x in (s, t):
        if x not in U or not _central(R, x):
            raise NotCentralUnit('%s is not a central unit of %s' % (R.label(x), R.name))
    s_inv = int(np.flatnonzero(R.mul[s, :] == R.one)[0])
    t_inv = int(np.flatnonzero(R.mul[t, :] == R.one)[0])

    def expand(P):
        a, d, g = P[:, 0], P[:, 1], P[:, 2]
        zero = np.full(len(P), R.zero, dtype=np.int64)
        c = R.mul[s_inv, R.add[a, R.neg[d]]]
        f = R.mul[t_inv, R.add[d, R.neg[g]]]
        return np.stack([a, zero, zero, c, d, f, zero, zero, g], axis=1)

    def mul(X, Y):
        Z = _matrix_mul(R, 3, expand(X), expand(Y))
        return Z[:, [0, 4, 8]]

    ring = coordinate_ring([R, R, R], mul, [R.one] * 3,
                           lambda row: _matrix_value(R, 3, expand(row[None, :])[0]),
                           name or 'Hst(%s,%s,%s)' % (R.label(s), R.label(t), R.name))
    ring.expand = expand
    return ring


def ks(s, R, name=None):
    """Generalized matrix ring: 2x2 arrays over R, products twisted by the central element s"""
    s = int(s)
    if not _central(R, s):
        raise NotCentral('%s is not central in %s' % (R.label(s), R.name))

    def mul(X, Y):
        a1, x1, y1, b1 = (X[:, c] for c in range(4))
        a2, x2, y2, b2 = (Y[:, c] for c in range(4))
        return np.stack([
            R.add[R.mul[a1, a2], R.mul[s, R.mul[x1, y2]]],
            R.add[R.mul[a1, x2], R.mul[x1, b2]],
            R.add[R.mul[y1, a2], R.mul[b1, y2]],
            R.add[R.mul[s, R.mul[y1, x2]], R.mul[b1, b2]],
        ], axis=1)

    def render(row):
        a, x, y, b = (R.values[int(c)] for c in row)
        return [[a, x], [y, b]]

    return coordinate_ring([R] * 4, mul, [R.one, R.zero, R.zero, R.one], render,
                           name or 'K(%s,%s)' % (R.label(s), R.name))


class BimoduleAlgebra(object):
    """A ring T, possibly without identity, that is an (R, R)-bimodule compatible with its product

    envelope, when known, is a unital ring U with maps base -> U and algebra -> U under which both
    actions become multiplication in U; it gives a meaning to sums a + t.
    """

    def __init__(self, base, algebra, left, right, envelope=None, name=None):
        self.base = base
        self.algebra = algebra
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.envelope = envelope
        self.name = name or algebra.name
        self._verify()

    def __repr__(self):
        return '<BimoduleAlgebra %s over %s>' % (self.name, self.base.name)

    def _verify(self):
        R, T, L, Rt = self.base, self.algebra, self.left, self.right
        if L.shape != (R.order, T.order) or Rt.shape != (T.order, R.order):
            raise ShapeError('Action tables must be %dx%d and %dx%d' % (R.order, T.order, T.order, R.order))
        if L.min() < 0 or L.max() >= T.order or Rt.min() < 0 or Rt.max() >= T.order:
            raise ShapeError('Action tables hold indices outside the algebra')

        checks = [
            ('left additivity in R', lambda r: L[R.add[r, :], :] != T.add[L[r, :][None, :], L]),
            ('left additivity in T', lambda r: L[r, T.add] != T.add[L[r, :][:, None], L[r, :][None, :]]),
            ('right additivity in R', lambda r: Rt[:, R.add[r, :]] != T.add[Rt[:, r][:, None], Rt]),
            ('right additivity in T', lambda r: Rt[T.add, r] != T.add[Rt[:, r][:, None], Rt[:, r][None, :]]),
            ('a(ts) = (at)s', lambda r: L[r, T.mul] != T.mul[L[r, :], :]),
            ('t(as) = (ta)s', lambda r: T.mul[:, L[r, :]] != T.mul[Rt[:, r], :]),
            ('(ts)a = t(sa)', lambda r: Rt[T.mul, r] != T.mul[:, Rt[:, r]]),
            ('(ab)t = a(bt)', lambda r: L[R.mul[r, :], :] != L[r, :][L]),
            ('t(ab) = (ta)b', lambda r: Rt[:, R.mul[r, :]] != Rt[Rt[:, r], :]),
            ('(at)b = a(tb)', lambda r: Rt[L[r, :], :] != L[r, :][Rt]),
        ]
        for law, defect in checks:
            for r in range(R.order):
                hit = _first(defect(r))
                if hit is not None:
                    raise ActionIncompatible(law, (r,) + hit)
        if R.unital:
            idx = np.arange(T.order)
            hit = _first((L[R.one, :] != idx) | (Rt[:, R.one] != idx))
            if hit is not None:
                raise ActionIncompatible('identity acts trivially', (R.one,) + hit)

        if self.envelope is not None:
            U, base_map, algebra_map = self.envelope
            lhs = algebra_map[L]
            if _first(lhs != U.mul[base_map[:, None], algebra_map[None, :]]) is not None or \
                    _first(algebra_map[Rt] != U.mul[algebra_map[:, None], base_map[None, :]]) is not None:
                raise ActionIncompatible('envelope', ())


def _integer_multiples(R):
    """For a ring generated additively by its identity, the integer k with r = k·1 for every r"""
    k_of = np.full(R.order, -1, dtype=np.int64)
    x = R.zero
    for k in range(R.order):
        if k_of[x] >= 0:
            break
        k_of[x] = k
        x = int(R.add[x, R.one])
    if (k_of < 0).any():
        raise ActionIncompatible('scalar action needs a base generated by 1', (int(np.flatnonzero(k_of < 0)[0]),))
    return k_of


def scalar_algebra(base, T, envelope=None, name=None):
    """T as an algebra over Z_n: r·t = t·r = k·t for r = k·1"""
    k_of = _integer_multiples(base)
    for t in range(T.order):
        if T.multiple(base.char, t) != T.zero:
            raise ActionIncompatible('char(%s) annihilates the algebra' % (base.name,), (t,))
    left = np.array([[T.multiple(int(k_of[r]), t) for t in range(T.order)] for r in range(base.order)],
                    dtype=np.int64)
    return BimoduleAlgebra(base, T, left, left.T.copy(), envelope, name)


def semigroup_algebra(base, cayley, name=None):
    """The semigroup ring base[S] with coefficientwise actions; its envelope is base[S¹]"""
    T = semigroup_ring(base, cayley, name)
    k = len(cayley.elements)
    layout = Coordinates([base] * k)
    coords = T.coords
    left = np.stack([layout.encode(base.mul[r, coords]) for r in range(base.order)])
    right = np.stack([layout.encode(base.mul[coords, r]) for r in range(base.order)], axis=1)

    envelope = None
    if cayley.identity is None and base.unital:
        U = semigroup_ring(base, cayley.with_identity(), '%s1' % (T.name,))
        hull = Coordinates([base] * (k + 1))
        base_map = hull.encode(np.array([[r] + [base.zero] * k for r in range(base.order)], dtype=np.int64))
        algebra_map = hull.encode(np.hstack([np.full((T.order, 1), base.zero, dtype=np.int64), coords]))
        envelope = (U, base_map, algebra_map)
    return BimoduleAlgebra(base, T, left, right, envelope, name or T.name)


def subring_algebra(base, ambient, gens, name=None):
    """Subring of ambient generated by gens, acted on by base

    When base is the ambient ring itself the actions are its multiplication, otherwise base must be
    some Z_n acting by integer multiples.
    """
    T = subring(ambient, gens, name)
    emb = T.embedding
    if base is ambient or base.name == ambient.name:
        local = np.full(ambient.order, -1, dtype=np.int64)
        local[emb] = np.arange(T.order)
        left = local[base.mul[:, emb]]
        right = local[base.mul[emb, :]]
        for law, table in (('left action stays in the algebra', left), ('right action stays in the algebra', right)):
            hit = _first(table < 0)
            if hit is not None:
                raise ActionIncompatible(law, hit)
        envelope = (base, np.arange(base.order), emb) if base.unital else None
        return BimoduleAlgebra(base, T, left, right, envelope, name)
    envelope = None
    if ambient.unital:
        k_of = _integer_multiples(base)
        envelope = (ambient, np.array([ambient.multiple(int(k), ambient.one) for k in k_of]), emb)
    return scalar_algebra(base, T, envelope, name)


def dorroh(R, A, name=None):
    """D(R, T) = R×T with (a1, t1)(a2, t2) = (a1a2, a1t2 + t1a2 + t1t2) and identity (1, 0)"""
    if A.base is not R and A.base.name != R.name:
        raise ValueError('Algebra %r is not over %s' % (A, R.name))
    T, L, Rt = A.algebra, A.left, A.right

    def mul(X, Y):
        r1, t1 = X[:, 0], X[:, 1]
        r2, t2 = Y[:, 0], Y[:, 1]
        return np.stack([R.mul[r1, r2], _vsum(T, [L[r1, t2], Rt[t1, r2], T.mul[t1, t2]])], axis=1)

    ring = coordinate_ring([R, T], mul, [R.one, T.zero],
                           lambda row: (R.values[row[0]], T.values[row[1]]),
                           name or 'dorroh(%s,%s)' % (R.name, A.name))
    ring.algebra = A
    return ring


def base_part(D):
    """{(r, 0)}: the copy of R inside D(R, T)"""
    return ElementSubset(D, D.coords[:, 1] == D.parts[1].zero)


def algebra_part(D):
    """{(0, t)}: T as a two-sided ideal of D(R, T)"""
    return TwoSidedIdeal(D, D.coords[:, 0] == D.parts[0].zero)
