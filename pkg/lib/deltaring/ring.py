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
import threading

import numpy as np

from .limits import limits

logger = logging.getLogger(__name__)


class RingError(Exception):
    """Base class for everything deltaring raises about rings and their elements"""
    ...


class ShapeError(RingError):
    """Operation tables are not square, not equal-sized or hold out-of-range indices"""
    ...


class AxiomViolation(RingError):
    """A ring axiom fails on the given tables"""

    def __init__(self, kind, witness):
        RingError.__init__(self)
        self.kind = kind
        self.witness = tuple(int(x) for x in witness)

    def __str__(self):
        return 'Axiom violated: %s (witness %s)' % (self.kind, ', '.join(str(x) for x in self.witness) or '-')


class OrderCapExceeded(RingError):
    """The ring to be built is larger than the configured order cap"""

    def __init__(self, order, cap, what='ring'):
        RingError.__init__(self)
        self.order = order
        self.cap = cap
        self.what = what

    def __str__(self):
        return '%s of order %d exceeds the configured cap of %d' % (self.what, self.order, self.cap)


class ComplexityRefusal(RingError):
    """An exhaustive evaluation would exceed the configured budget"""

    def __init__(self, what, cost, budget):
        RingError.__init__(self)
        self.what = what
        self.cost = cost
        self.budget = budget

    def __str__(self):
        return 'Refusing %s: %d evaluations exceed the budget of %d' % (self.what, self.cost, self.budget)


class ElementError(RingError):
    """A structured literal does not name an element of the ring"""
    ...


def check_order(order, what='ring'):
    if order > limits.max_order:
        raise OrderCapExceeded(order, limits.max_order, what)


def table_dtype(order):
    return np.uint16 if order <= 2 ** 16 else np.int64


def canonical(value):
    """Hashable form of a structured element value; lists and tuples are interchangeable"""
    if isinstance(value, (list, tuple)):
        return tuple(canonical(v) for v in value)
    if isinstance(value, (np.integer, bool)):
        return int(value)
    if isinstance(value, str) and value.lstrip('-').isdigit():
        return int(value)
    return value


def format_value(value):
    if isinstance(value, list):
        return '[%s]' % (','.join(format_value(v) for v in value),)
    if isinstance(value, tuple):
        return '(%s)' % (','.join(format_value(v) for v in value),)
    return str(value)


def _first(mask):
    """Lexicographically first True position of a boolean array, or None"""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


class NonunitalFiniteRing(object):
    """A finite associative ring, not necessarily with identity, given by operation tables"""

    unital = False

    def __init__(self, add, mul, zero, labels=None, values=None, name=None):
        self.order = add.shape[0]
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.elements = np.arange(self.order)
        self.neg = np.argmax(add == self.zero, axis=1)
        self.values = list(values) if values is not None else list(range(self.order))
        self.labels = list(labels) if labels is not None else [format_value(v) for v in self.values]
        self.name = name or 'table(%d)' % (self.order,)

        # Filled in by constructors: where the ring came from and how its elements decompose
        self.parent = None
        self.embedding = None
        self.projection = None
        self.parts = None
        self.coords = None
        self.algebra = None
        # Keys of the table file this ring was loaded from, in file order
        self.document_keys = None

        for table in (self.add, self.mul, self.neg):
            table.flags.writeable = False

        self._codes = {}
        for idx, value in enumerate(self.values):
            self._codes.setdefault(canonical(value), idx)
        for idx, label in enumerate(self.labels):
            self._codes.setdefault(label, idx)

        self._cache = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return '<%s %s order=%d>' % (self.__class__.__name__, self.name, self.order)

    def cached(self, key, func):
        # Lattices and element sets are computed once; the lock makes the first writer win
        with self._lock:
            if key not in self._cache:
                self._cache[key] = func()
            return self._cache[key]

    def alias(self, value, index):
        self._codes.setdefault(canonical(value), int(index))

    def index(self, value):
        """Element index for a structured literal (or a label)"""
        key = canonical(value)
        if key in self._codes:
            return self._codes[key]
        if isinstance(value, int) and not isinstance(value, bool) and str(value) in self._codes:
            return self._codes[str(value)]
        raise ElementError('%s is not an element of %s' % (format_value(value), self.name))

    def label(self, idx):
        return self.labels[int(idx)]

    def value(self, idx):
        return self.values[int(idx)]

    def plus(self, *xs):
        result = self.zero
        for x in xs:
            result = int(self.add[result, x])
        return result

    def minus(self, a, b):
        return int(self.add[a, self.neg[b]])

    def negate(self, a):
        return int(self.neg[a])

    def times(self, *xs):
        if not xs:
            raise ValueError('Empty product in %s' % (self.name,))
        result = int(xs[0])
        for x in xs[1:]:
            result = int(self.mul[result, x])
        return result

    def power(self, a, k):
        if k < 1:
            raise ValueError('Power %d needs an identity' % (k,))
        return self.times(*([a] * k))

    def multiple(self, k, a):
        """The additive multiple k·a for an integer k"""
        if k < 0:
            return self.multiple(-k, self.negate(a))
        return self.plus(*([a] * k))

    def subset(self, indices):
        return ElementSubset.from_indices(self, indices)

    def full(self):
        return TwoSidedIdeal(self, np.ones(self.order, dtype=bool))

    def zero_ideal(self):
        bits = np.zeros(self.order, dtype=bool)
        bits[self.zero] = True
        return TwoSidedIdeal(self, bits)


class FiniteRing(NonunitalFiniteRing):
    """A finite associative ring with identity"""

    unital = True

    def __init__(self, add, mul, zero, one, labels=None, values=None, name=None):
        super().__init__(add, mul, zero, labels, values, name)
        self.one = int(one)
        self.char = 1
        x = self.one
        while x != self.zero:
            x = int(self.add[x, self.one])
            self.char += 1


class ElementSubset(object):
    """A set of elements of one ring, stored as a dense boolean vector over element indices"""

    def __init__(self, ring, bits):
        bits = np.array(bits, dtype=bool)
        if bits.shape != (ring.order,):
            raise ValueError('Subset of %r needs %d bits, got shape %r' % (ring, ring.order, bits.shape))
        bits.flags.writeable = False
        self.ring = ring
        self.bits = bits
        self._mask = None

    @classmethod
    def from_indices(cls, ring, indices):
        bits = np.zeros(ring.order, dtype=bool)
        bits[np.asarray(list(indices), dtype=np.int64)] = True
        return cls(ring, bits)

    @property
    def indices(self):
        return np.flatnonzero(self.bits)

    @property
    def mask(self):
        if self._mask is None:
            self._mask = int.from_bytes(np.packbits(self.bits, bitorder='little').tobytes(), 'little')
        return self._mask

    def __len__(self):
        return int(self.bits.sum())

    def __iter__(self):
        return iter(int(x) for x in self.indices)

    def __contains__(self, idx):
        return bool(self.bits[int(idx)])

    def _check_ring(self, other):
        if other.ring is not self.ring:
            raise ValueError('Subsets belong to different rings: %r, %r' % (self.ring, other.ring))

    def __eq__(self, other):
        if not isinstance(other, ElementSubset):
            return NotImplemented
        return other.ring is self.ring and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash((id(self.ring), self.mask))

    def __le__(self, other):
        self._check_ring(other)
        return not bool((self.bits & ~other.bits).any())

    def __lt__(self, other):
        return self <= other and len(self) < len(other)

    def __and__(self, other):
        return subset_intersect(self, other)

    def __or__(self, other):
        self._check_ring(other)
        return ElementSubset(self.ring, self.bits | other.bits)

    def labels(self):
        return [self.ring.label(x) for x in self]

    def is_zero(self):
        return len(self) == 1 and self.ring.zero in self

    def __str__(self):
        return '{%s}' % (', '.join(self.labels()),)

    def __repr__(self):
        return '<%s of %s: %s>' % (self.__class__.__name__, self.ring.name, self)


class RightIdeal(ElementSubset):
    """Contains zero, closed under addition and under right multiplication by the ring"""
    ...


class LeftIdeal(ElementSubset):
    """Contains zero, closed under addition and under left multiplication by the ring"""
    ...


class TwoSidedIdeal(RightIdeal, LeftIdeal):
    ...


def _ideal_class(a, b):
    for cls in (TwoSidedIdeal, RightIdeal, LeftIdeal):
        if isinstance(a, cls) and isinstance(b, cls):
            return cls
    return ElementSubset


def verify_axioms(add, mul, one=None):
    """Check the ring axioms on square tables; return the index of zero

    Associativity and distributivity are tested against an additive generating
    set: Light's test for the additive group, and additivity of the remaining
    defect in each argument for the multiplicative laws. Together with the
    group laws this decides the axioms for every triple of elements.
    """
    n = add.shape[0]
    idx = np.arange(n)

    hit = _first(add != add.T)
    if hit is not None:
        raise AxiomViolation('additive commutativity', hit)

    zeros = np.flatnonzero((add == idx[None, :]).all(axis=1))
    if len(zeros) == 0:
        raise AxiomViolation('additive identity', ())
    zero = int(zeros[0])

    hit = _first(~(add == zero).any(axis=1))
    if hit is not None:
        raise AxiomViolation('additive inverse', hit)

    gens = additive_generators(add, zero)

    for g in gens:
        # (x + g) + y == x + (g + y)
        hit = _first(add[add[:, g], :] != add[:, add[g, :]])
        if hit is not None:
            raise AxiomViolation('additive associativity', (hit[0], g, hit[1]))

    for g in gens:
        # a(b + g) == ab + ag
        hit = _first(mul[:, add[:, g]] != add[mul, mul[:, g][:, None]])
        if hit is not None:
            raise AxiomViolation('left distributivity', (hit[0], hit[1], g))
        # (b + g)a == ba + ga
        hit = _first(mul[add[:, g], :] != add[mul, mul[g, :][None, :]])
        if hit is not None:
            raise AxiomViolation('right distributivity', (hit[0], g, hit[1]))

    for g in gens:
        # (ab)g == a(bg)
        hit = _first(mul[mul, g] != mul[:, mul[:, g]])
        if hit is not None:
            raise AxiomViolation('multiplicative associativity', (hit[0], hit[1], g))

    if one is not None:
        hit = _first((mul[one, :] != idx) | (mul[:, one] != idx))
        if hit is not None:
            raise AxiomViolation('identity', (one, hit[0]))

    return zero


def additive_generators(add, zero):
    """Greedy generating set of the additive structure, in index order"""
    n = add.shape[0]
    covered = np.zeros(n, dtype=bool)
    covered[zero] = True
    gens = []
    for x in range(n):
        if covered[x]:
            continue
        gens.append(x)
        covered[x] = True
        frontier = np.array([x])
        while len(frontier):
            sums = add[np.ix_(frontier, np.flatnonzero(covered))].ravel()
            fresh = np.unique(sums[~covered[sums]])
            covered[fresh] = True
            frontier = fresh
    return gens


def build_table_ring(add, mul, one=None, labels=None, values=None, name=None):
    """Verify operation tables and wrap them as a ring value

    Returns a FiniteRing when one is given, a NonunitalFiniteRing otherwise.
    """
    try:
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise ShapeError('Tables must be integer matrices: %s' % (e,))

    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape[0] < 1:
        raise ShapeError('Addition table must be a non-empty square matrix, got shape %r' % (add.shape,))
    if mul.shape != add.shape:
        raise ShapeError('Multiplication table has shape %r, expected %r' % (mul.shape, add.shape))

    n = add.shape[0]
    check_order(n)
    for what, table in (('add', add), ('mul', mul)):
        if table.min() < 0 or table.max() >= n:
            raise ShapeError('Table %s holds indices outside 0..%d' % (what, n - 1))
    if one is not None and not 0 <= int(one) < n:
        raise ShapeError('Identity index %r outside 0..%d' % (one, n - 1))
    for what, items in (('labels', labels), ('values', values)):
        if items is not None and len(items) != n:
            raise ShapeError('Expected %d %s, got %d' % (n, what, len(items)))

    zero = verify_axioms(add, mul, None if one is None else int(one))

    dtype = table_dtype(n)
    add = add.astype(dtype)
    mul = mul.astype(dtype)
    if one is None:
        ring = NonunitalFiniteRing(add, mul, zero, labels, values, name)
    else:
        ring = FiniteRing(add, mul, zero, one, labels, values, name)
    logger.debug('Built %r', ring)
    return ring


def nilpotent_elements(R):
    """N(R), by repeated squaring: a^(2^s) for 2^s beyond the order reaches zero iff a is nilpotent"""
    def compute():
        cur = np.arange(R.order)
        for _ in range(R.order.bit_length()):
            cur = R.mul[cur, cur]
        return ElementSubset(R, cur == R.zero)
    return R.cached('nilpotent', compute)


def nilpotency_index(R, a):
    """Least m with a^m = 0, or None"""
    cur = int(a)
    for m in range(1, R.order + 1):
        if cur == R.zero:
            return m
        cur = int(R.mul[cur, a])
    return None


def idempotent_elements(R):
    return R.cached('idempotent', lambda: ElementSubset(R, R.mul[R.elements, R.elements] == R.elements))


def nonzero_idempotents(R):
    return [e for e in idempotent_elements(R) if e != R.zero]


def _require_unital(R, what):
    if not R.unital:
        raise ValueError('%s needs a ring with identity, got %r' % (what, R))


def units(R):
    _require_unital(R, 'units')

    def compute():
        hits = R.mul == R.one
        return ElementSubset(R, hits.any(axis=1) & hits.any(axis=0))
    return R.cached('units', compute)


def center(R):
    return R.cached('center', lambda: ElementSubset(R, (R.mul == R.mul.T).all(axis=1)))


def _join_cyclic(R, bits, g):
    """H + <g> for an additive subgroup H given as bits"""
    result = bits.copy()
    members = np.flatnonzero(bits)
    y = int(g)
    while not bits[y]:
        result[R.add[members, y]] = True
        y = int(R.add[y, g])
    return result


def additive_span(R, indices, start=None):
    """Smallest additive subgroup containing the given elements (and start, a subgroup)"""
    if start is None:
        bits = np.zeros(R.order, dtype=bool)
        bits[R.zero] = True
    else:
        bits = np.array(start, dtype=bool)
    for g in indices:
        if not bits[g]:
            bits = _join_cyclic(R, bits, g)
    return bits


def _subgroup_sum(R, bits, other):
    """H + S for an additive subgroup H and any subset S, both as bits"""
    result = bits.copy()
    members = np.flatnonzero(bits)
    for s in np.flatnonzero(other):
        if not result[s]:
            result[R.add[members, s]] = True
    return result


def cyclic_right_ideal(R, a):
    """aR, or for rings without identity the closure Za + aR"""
    a = int(a)

    def compute():
        row = R.mul[a, :]
        if R.unital:
            bits = np.zeros(R.order, dtype=bool)
            bits[row] = True
        else:
            bits = additive_span(R, [a], start=additive_span(R, np.unique(row)))
        return RightIdeal(R, bits)
    return R.cached(('cyclic-right', a), compute)


def cyclic_left_ideal(R, a):
    """Ra, or Za + Ra without identity"""
    a = int(a)

    def compute():
        col = R.mul[:, a]
        if R.unital:
            bits = np.zeros(R.order, dtype=bool)
            bits[col] = True
        else:
            bits = additive_span(R, [a], start=additive_span(R, np.unique(col)))
        return LeftIdeal(R, bits)
    return R.cached(('cyclic-left', a), compute)


def _greedy_closure(R, seed_bits, cyclic):
    bits = np.zeros(R.order, dtype=bool)
    bits[R.zero] = True
    for x in np.flatnonzero(seed_bits):
        if not bits[x]:
            bits = _subgroup_sum(R, bits, cyclic(R, x).bits)
    return bits


def _as_bits(R, S):
    if isinstance(S, ElementSubset):
        if S.ring is not R:
            raise ValueError('Subset %r does not belong to %r' % (S, R))
        return S.bits
    bits = np.zeros(R.order, dtype=bool)
    bits[np.asarray(list(S), dtype=np.int64)] = True
    return bits


def right_ideal_closure(R, S):
    """Smallest right ideal containing S"""
    return RightIdeal(R, _greedy_closure(R, _as_bits(R, S), cyclic_right_ideal))


def left_ideal_closure(R, S):
    return LeftIdeal(R, _greedy_closure(R, _as_bits(R, S), cyclic_left_ideal))


def two_sided_closure(R, S):
    bits = _greedy_closure(R, _as_bits(R, S), cyclic_right_ideal)
    while True:
        grown = _greedy_closure(R, _greedy_closure(R, bits, cyclic_left_ideal), cyclic_right_ideal)
        if np.array_equal(grown, bits):
            return TwoSidedIdeal(R, bits)
        bits = grown


def is_additive_subgroup(R, S):
    idx = S.indices
    if R.zero not in S:
        return False
    return bool(S.bits[R.add[np.ix_(idx, idx)]].all() and S.bits[R.neg[idx]].all())


def is_right_ideal(R, S):
    return is_additive_subgroup(R, S) and bool(S.bits[R.mul[S.indices, :]].all())


def is_left_ideal(R, S):
    return is_additive_subgroup(R, S) and bool(S.bits[R.mul[:, S.indices]].all())


def is_two_sided(R, S):
    return is_right_ideal(R, S) and is_left_ideal(R, S)


def subset_sum(I, J):
    """{i + j : i ∈ I, j ∈ J}"""
    I._check_ring(J)
    R = I.ring
    if isinstance(I, (RightIdeal, LeftIdeal)):
        bits = _subgroup_sum(R, I.bits, J.bits)
    else:
        bits = np.zeros(R.order, dtype=bool)
        bits[R.add[np.ix_(I.indices, J.indices)]] = True
    return _ideal_class(I, J)(R, bits)


def subset_intersect(I, J):
    I._check_ring(J)
    return _ideal_class(I, J)(I.ring, I.bits & J.bits)


def idempotent_summands(R):
    """Masks of the right ideals eR, e idempotent: exactly the direct summands of R_R"""
    _require_unital(R, 'direct summands')
    return R.cached('summand-masks', lambda: frozenset(cyclic_right_ideal(R, e).mask
                                                       for e in idempotent_elements(R)))


def is_direct_summand(R, K):
    """True iff K ⊕ L = R for some right ideal L

    A right ideal is a summand of R_R exactly when it is generated by an idempotent.
    """
    return K.mask in idempotent_summands(R)


def ring_tables(R):
    """Every field of the table file format as plain lists; writers pick the keys they need"""
    d = {
        'order': R.order,
        'add': R.add.astype(np.int64).tolist(),
        'mul': R.mul.astype(np.int64).tolist(),
    }
    if R.unital:
        d['one'] = R.one
    d['labels'] = list(R.labels)
    return d
