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

import numpy as np

from .limits import limits
from .ring import (RingError, ComplexityRefusal, ElementSubset, nilpotent_elements, idempotent_elements, units,
                   center, cyclic_right_ideal, cyclic_left_ideal, two_sided_closure)
from .radicals import delta, jacobson, socle, maximal_right_ideals, maximal_left_ideals
from .constructors import NotIdempotent, quotient
from .util import TrackSubClasses, kind_documentation

logger = logging.getLogger(__name__)


class UnknownPredicate(RingError):
    """No predicate is registered under this id"""
    ...


class MissingParameter(RingError):
    """The predicate is parameterized by an idempotent e that was not given"""
    ...


class PredicateReport(object):
    """Verdict of one predicate on one ring, with the first violating tuple when it fails"""

    def __init__(self, predicate, ring, params, verdict, witness=None, cost=0):
        self.predicate = predicate
        self.ring = ring
        self.params = params
        self.verdict = verdict
        self.witness = witness
        self.cost = cost

    def __repr__(self):
        return '<PredicateReport %s on %s: %s>' % (self.predicate, self.ring.name, self.verdict)

    def _label(self, value):
        if isinstance(value, ElementSubset):
            return str(value)
        return self.ring.label(value)

    def witness_labels(self):
        if self.witness is None:
            return None
        return {name: self._label(value) for name, value in self.witness.items()}

    def params_labels(self):
        return {name: self.ring.label(value) for name, value in self.params.items()}

    def to_dict(self):
        return {
            'predicate': self.predicate,
            'ring': self.ring.name,
            'params': self.params_labels(),
            'verdict': self.verdict,
            'witness': self.witness_labels(),
            'cost': self.cost,
        }


def _first(mask):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(x) for x in hits[0])


class PredicateBase(object, metaclass=TrackSubClasses):
    """Ring classes decided by exhaustive quantifier evaluation"""

    __subclasses__ = {}

    # Number of nested element quantifiers, bounds the work at order ** depth
    depth = 1
    needs_e = False

    def __init__(self, ring, e=None):
        self.ring = ring
        self.e = e
        R = ring
        self.M = R.mul
        self.z = R.zero
        self.idx = R.elements

    @classmethod
    def predicate_documentation(cls):
        return kind_documentation(cls)

    @classmethod
    def cost(cls, R):
        return R.order ** cls.depth

    def refuse_if_too_costly(self, budget):
        cost = self.cost(self.ring)
        if cost > budget:
            raise ComplexityRefusal('%s on %s' % (self.__kind__, self.ring.name), cost, budget)

    def evaluate(self):
        """None when the ring satisfies the predicate, otherwise the witness dict"""
        raise NotImplementedError()

    def violated_by(self, witness):
        """Replay a witness against the definition"""
        raise NotImplementedError()

    # Shorthands for replays
    def times(self, *xs):
        return self.ring.times(*xs)

    def nil(self, x):
        return int(x) in nilpotent_elements(self.ring)

    def _named(self, names, hit):
        return dict(zip(names, hit))


class Reduced(PredicateBase):
    """N(R) = 0"""

    __kind__ = 'reduced'

    def evaluate(self):
        hit = _first(nilpotent_elements(self.ring).bits & (self.idx != self.z))
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return w['a'] != self.z and self.nil(w['a'])


class EReducedRight(PredicateBase):
    """N(R)e = 0"""

    __kind__ = 'e_reduced_right'
    needs_e = True

    def evaluate(self):
        hit = _first(nilpotent_elements(self.ring).bits & (self.M[:, self.e] != self.z))
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return self.nil(w['a']) and self.times(w['a'], self.e) != self.z


class EReducedLeft(PredicateBase):
    """eN(R) = 0"""

    __kind__ = 'e_reduced_left'
    needs_e = True

    def evaluate(self):
        hit = _first(nilpotent_elements(self.ring).bits & (self.M[self.e, :] != self.z))
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return self.nil(w['a']) and self.times(self.e, w['a']) != self.z


class CentralReduced(PredicateBase):
    """Every nilpotent is central"""

    __kind__ = 'central_reduced'
    depth = 2

    def evaluate(self):
        N = nilpotent_elements(self.ring).bits
        hit = _first(N[:, None] & (self.M != self.M.T))
        return None if hit is None else self._named('ar', hit)

    def violated_by(self, w):
        return self.nil(w['a']) and self.times(w['a'], w['r']) != self.times(w['r'], w['a'])


class QuasiReduced(PredicateBase):
    """ab = 0 implies aR ∩ Rb ⊆ C(R)"""

    __kind__ = 'quasi_reduced'
    depth = 4

    def evaluate(self):
        R = self.ring
        noncentral = ~center(R).bits
        for a in range(R.order):
            aR = cyclic_right_ideal(R, a).bits
            for b in np.flatnonzero(self.M[a, :] == self.z):
                hit = _first(aR & cyclic_left_ideal(R, b).bits & noncentral)
                if hit is not None:
                    return {'a': a, 'b': int(b), 'x': hit[0]}
        return None

    def violated_by(self, w):
        R = self.ring
        return (self.times(w['a'], w['b']) == self.z and w['x'] in cyclic_right_ideal(R, w['a'])
                and w['x'] in cyclic_left_ideal(R, w['b']) and w['x'] not in center(R))


class JReduced(PredicateBase):
    """N(R) ⊆ J(R)"""

    __kind__ = 'j_reduced'

    def evaluate(self):
        hit = _first(nilpotent_elements(self.ring).bits & ~jacobson(self.ring).bits)
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return self.nil(w['a']) and w['a'] not in jacobson(self.ring)


class TripleBase(PredicateBase):
    """abc-style conditions, evaluated one a at a time over (b, c) planes"""

    depth = 3
    names = 'abc'

    def plane(self, a):
        """Boolean (b, c) violations for a fixed a"""
        raise NotImplementedError()

    def evaluate(self):
        for a in range(self.ring.order):
            hit = _first(self.plane(a))
            if hit is not None:
                return self._named(self.names, (a,) + hit)
        return None

    def products(self, a):
        """abc and acb as (b, c) arrays"""
        M = self.M
        ab = M[a, :]
        abc = M[ab[:, None], self.idx[None, :]]
        acb = M[M[a, :][None, :], self.idx[:, None]]
        return abc, acb


class Symmetric(TripleBase):
    """abc = 0 implies acb = 0"""

    __kind__ = 'symmetric'

    def plane(self, a):
        abc, acb = self.products(a)
        return (abc == self.z) & (acb != self.z)

    def violated_by(self, w):
        a, b, c = w['a'], w['b'], w['c']
        return self.times(a, b, c) == self.z and self.times(a, c, b) != self.z


class WeakSymmetric(TripleBase):
    """abc ∈ N(R) implies acb ∈ N(R)"""

    __kind__ = 'weak_symmetric'

    def plane(self, a):
        N = nilpotent_elements(self.ring).bits
        abc, acb = self.products(a)
        return N[abc] & ~N[acb]

    def violated_by(self, w):
        a, b, c = w['a'], w['b'], w['c']
        return self.nil(self.times(a, b, c)) and not self.nil(self.times(a, c, b))


class ESymmetric(TripleBase):
    """abc = 0 implies acbe = 0"""

    __kind__ = 'e_symmetric'
    needs_e = True

    def plane(self, a):
        abc, acb = self.products(a)
        return (abc == self.z) & (self.M[acb, self.e] != self.z)

    def violated_by(self, w):
        a, b, c = w['a'], w['b'], w['c']
        return self.times(a, b, c) == self.z and self.times(a, c, b, self.e) != self.z


class WeakESymmetric(TripleBase):
    """abc = 0 implies eacbe = 0"""

    __kind__ = 'weak_e_symmetric'
    needs_e = True

    def plane(self, a):
        abc, acb = self.products(a)
        return (abc == self.z) & (self.M[self.M[self.e, acb], self.e] != self.z)

    def violated_by(self, w):
        a, b, c = w['a'], w['b'], w['c']
        return self.times(a, b, c) == self.z and self.times(self.e, a, c, b, self.e) != self.z


class WeaklySymmetric(PredicateBase):
    """abc ∈ N(R) implies Racrb ⊆ N(R)"""

    __kind__ = 'weakly_symmetric'
    depth = 5

    def refuse_if_too_costly(self, budget):
        cap = limits.weakly_symmetric_max_order
        if self.ring.order > cap:
            raise ComplexityRefusal('weakly_symmetric on %s' % (self.ring.name,), self.cost(self.ring), cap ** 5)
        super().refuse_if_too_costly(budget)

    def evaluate(self):
        M, idx = self.M, self.idx
        N = nilpotent_elements(self.ring).bits
        # Rx ⊆ N(R)
        left_nil = N[M].all(axis=0)
        for a in range(self.ring.order):
            abc = M[M[a, :][:, None], idx[None, :]]
            acr = M[M[a, :][:, None], idx[None, :]]
            acrb = M[acr[None, :, :], idx[:, None, None]]
            hit = _first(N[abc][:, :, None] & ~left_nil[acrb])
            if hit is not None:
                b, c, r = hit
                s = int(np.flatnonzero(~N[M[:, acrb[b, c, r]]])[0])
                return {'a': a, 'b': b, 'c': c, 'r': r, 's': s}
        return None

    def violated_by(self, w):
        a, b, c, r, s = (w[k] for k in 'abcrs')
        return self.nil(self.times(a, b, c)) and not self.nil(self.times(s, a, c, r, b))


class SemicommutativeBase(PredicateBase):
    """ab = 0 implies a condition on every arb, scanned as (a, b, r)"""

    depth = 3

    def bad(self, arb):
        raise NotImplementedError()

    def evaluate(self):
        M = self.M
        for a in range(self.ring.order):
            zero_b = M[a, :] == self.z
            if not zero_b.any():
                continue
            # arb indexed (b, r)
            arb = M[M[a, :][None, :], self.idx[:, None]]
            hit = _first(zero_b[:, None] & self.bad(arb))
            if hit is not None:
                return {'a': a, 'b': hit[0], 'r': hit[1]}
        return None

    def violated_by(self, w):
        a, b, r = w['a'], w['b'], w['r']
        return self.times(a, b) == self.z and bool(self.bad(np.array([self.times(a, r, b)]))[0])


class Semicommutative(SemicommutativeBase):
    """ab = 0 implies aRb = 0"""

    __kind__ = 'semicommutative'

    def bad(self, arb):
        return arb != self.z


class CentralSemicommutative(SemicommutativeBase):
    """ab = 0 implies aRb ⊆ C(R)"""

    __kind__ = 'central_semicommutative'
    depth = 4

    def bad(self, arb):
        return ~center(self.ring).bits[arb]


class ESemicommutativeRight(SemicommutativeBase):
    """ab = 0 implies aRbe = 0"""

    __kind__ = 'e_semicommutative_right'
    needs_e = True

    def bad(self, arb):
        return self.M[arb, self.e] != self.z


class ESemicommutativeLeft(SemicommutativeBase):
    """ab = 0 implies eaRb = 0"""

    __kind__ = 'e_semicommutative_left'
    needs_e = True

    def bad(self, arb):
        return self.M[self.e, arb] != self.z


class JSemicommutative(SemicommutativeBase):
    """ab = 0 implies aRb ⊆ J(R)"""

    __kind__ = 'j_semicommutative'

    def bad(self, arb):
        return ~jacobson(self.ring).bits[arb]


class ZhouRightEReduced(PredicateBase):
    """N(R)e ⊆ δ(R)"""

    __kind__ = 'zhou_right_e_reduced'
    needs_e = True

    def evaluate(self):
        ae = self.M[:, self.e]
        hit = _first(nilpotent_elements(self.ring).bits & ~delta(self.ring).bits[ae])
        return None if hit is None else {'a': hit[0], 'ae': int(ae[hit[0]])}

    def violated_by(self, w):
        return self.nil(w['a']) and self.times(w['a'], self.e) not in delta(self.ring)


class ZhouLeftEReduced(PredicateBase):
    """eN(R) ⊆ δ(R)"""

    __kind__ = 'zhou_left_e_reduced'
    needs_e = True

    def evaluate(self):
        ea = self.M[self.e, :]
        hit = _first(nilpotent_elements(self.ring).bits & ~delta(self.ring).bits[ea])
        return None if hit is None else {'a': hit[0], 'ea': int(ea[hit[0]])}

    def violated_by(self, w):
        return self.nil(w['a']) and self.times(self.e, w['a']) not in delta(self.ring)


class ZhouEReduced(PredicateBase):
    """Zhou right and left e-reduced"""

    __kind__ = 'zhou_e_reduced'
    needs_e = True

    def evaluate(self):
        return (ZhouRightEReduced(self.ring, self.e).evaluate()
                or ZhouLeftEReduced(self.ring, self.e).evaluate())

    def violated_by(self, w):
        side = ZhouRightEReduced if 'ae' in w else ZhouLeftEReduced
        return side(self.ring, self.e).violated_by(w)


class RightDuo(PredicateBase):
    """Every right ideal is two-sided"""

    __kind__ = 'right_duo'
    depth = 2

    def evaluate(self):
        for a in range(self.ring.order):
            hit = _first(~cyclic_right_ideal(self.ring, a).bits[self.M[:, a]])
            if hit is not None:
                return {'a': a, 'r': hit[0]}
        return None

    def violated_by(self, w):
        return self.times(w['r'], w['a']) not in cyclic_right_ideal(self.ring, w['a'])


class LeftDuo(PredicateBase):
    """Every left ideal is two-sided"""

    __kind__ = 'left_duo'
    depth = 2

    def evaluate(self):
        for a in range(self.ring.order):
            hit = _first(~cyclic_left_ideal(self.ring, a).bits[self.M[a, :]])
            if hit is not None:
                return {'a': a, 'r': hit[0]}
        return None

    def violated_by(self, w):
        return self.times(w['a'], w['r']) not in cyclic_left_ideal(self.ring, w['a'])


class RightQuasiDuo(PredicateBase):
    """Every maximal right ideal is two-sided"""

    __kind__ = 'right_quasi_duo'
    depth = 2

    def evaluate(self):
        for I in maximal_right_ideals(self.ring):
            # r·x for x in I, indexed (x, r)
            hit = _first(I.bits[:, None] & ~I.bits[self.M.T])
            if hit is not None:
                return {'ideal': I, 'x': hit[0], 'r': hit[1]}
        return None

    def violated_by(self, w):
        return w['x'] in w['ideal'] and self.times(w['r'], w['x']) not in w['ideal']


class LeftQuasiDuo(PredicateBase):
    """Every maximal left ideal is two-sided"""

    __kind__ = 'left_quasi_duo'
    depth = 2

    def evaluate(self):
        for I in maximal_left_ideals(self.ring):
            hit = _first(I.bits[:, None] & ~I.bits[self.M])
            if hit is not None:
                return {'ideal': I, 'x': hit[0], 'r': hit[1]}
        return None

    def violated_by(self, w):
        return w['x'] in w['ideal'] and self.times(w['x'], w['r']) not in w['ideal']


class Abelian(PredicateBase):
    """Every idempotent is central"""

    __kind__ = 'abelian'
    depth = 2

    def evaluate(self):
        hit = _first(idempotent_elements(self.ring).bits[:, None] & (self.M != self.M.T))
        return None if hit is None else self._named('xr', hit)

    def violated_by(self, w):
        x, r = w['x'], w['r']
        return x in idempotent_elements(self.ring) and self.times(x, r) != self.times(r, x)


class Semisimple(PredicateBase):
    """Soc(R_R) = R"""

    __kind__ = 'semisimple'

    def evaluate(self):
        hit = _first(~socle(self.ring).bits)
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return w['a'] not in socle(self.ring)


class Commutative(PredicateBase):
    """ab = ba"""

    __kind__ = 'commutative'
    depth = 2

    def evaluate(self):
        hit = _first(self.M != self.M.T)
        return None if hit is None else self._named('ab', hit)

    def violated_by(self, w):
        return self.times(w['a'], w['b']) != self.times(w['b'], w['a'])


class DivisionRing(PredicateBase):
    """1 ≠ 0 and every nonzero element is a unit"""

    __kind__ = 'division_ring'

    def evaluate(self):
        R = self.ring
        if R.order == 1:
            return {'a': R.zero}
        hit = _first((self.idx != self.z) & ~units(R).bits)
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        R = self.ring
        return R.order == 1 or (w['a'] != self.z and w['a'] not in units(R))


class Simple(PredicateBase):
    """1 ≠ 0 and no two-sided ideals besides 0 and R"""

    __kind__ = 'simple'
    depth = 2

    def evaluate(self):
        R = self.ring
        if R.order == 1:
            return {'a': R.zero, 'ideal': R.full()}
        for a in range(R.order):
            if a == self.z:
                continue
            I = two_sided_closure(R, [a])
            if len(I) < R.order:
                return {'a': a, 'ideal': I}
        return None

    def violated_by(self, w):
        R = self.ring
        return R.order == 1 or (w['a'] != self.z and len(two_sided_closure(R, [w['a']])) < R.order)


class Local(PredicateBase):
    """1 ≠ 0 and the non-units are closed under addition (R/J(R) a division ring)"""

    __kind__ = 'local'
    depth = 2

    def evaluate(self):
        R = self.ring
        if R.order == 1:
            return {'a': R.zero, 'b': R.zero}
        U = units(R).bits
        hit = _first(~U[:, None] & ~U[None, :] & U[R.add])
        return None if hit is None else self._named('ab', hit)

    def violated_by(self, w):
        R = self.ring
        U = units(R)
        return R.order == 1 or (w['a'] not in U and w['b'] not in U and R.plus(w['a'], w['b']) in U)


class NilpotentsInDelta(PredicateBase):
    """N(R) ⊆ δ(R), that is Zhou right 1-reduced"""

    __kind__ = 'n_in_delta'

    def evaluate(self):
        hit = _first(nilpotent_elements(self.ring).bits & ~delta(self.ring).bits)
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        return self.nil(w['a']) and w['a'] not in delta(self.ring)


class DeltaReduced(PredicateBase):
    """R/δ(R) is reduced"""

    __kind__ = 'delta_reduced'

    def evaluate(self):
        R = self.ring
        Q = quotient(R, delta(R))
        bad = nilpotent_elements(Q).bits & (Q.elements != Q.zero)
        hit = _first(bad[Q.projection])
        return None if hit is None else self._named('a', hit)

    def violated_by(self, w):
        R = self.ring
        d = delta(R)
        if w['a'] in d:
            return False
        x = w['a']
        for _ in range(R.order):
            x = R.times(x, w['a'])
            if x in d:
                return True
        return False


def predicate_class(predicate_id):
    try:
        return PredicateBase.__subclasses__[predicate_id]
    except KeyError:
        raise UnknownPredicate('Unknown predicate: %r' % (predicate_id,))


def predicate_ids():
    return sorted(PredicateBase.__subclasses__)


def check(predicate_id, R, params=None, allow_zero_e=False, budget=None):
    """Decide one predicate on R; params carries the idempotent e for e-parameterized ids"""
    cls = predicate_class(predicate_id)
    params = dict(params or {})
    e = None
    if cls.needs_e:
        if params.get('e') is None:
            raise MissingParameter('%s needs an idempotent e' % (predicate_id,))
        e = int(params['e'])
        if e not in idempotent_elements(R):
            raise NotIdempotent('%s is not an idempotent of %s' % (R.label(e), R.name))
        if e == R.zero and not allow_zero_e:
            raise NotIdempotent('%s needs a nonzero idempotent' % (predicate_id,))
        params = {'e': e}
    else:
        params = {}

    predicate = cls(R, e)
    predicate.refuse_if_too_costly(limits.predicate_budget if budget is None else budget)
    witness = predicate.evaluate()
    logger.debug('%s on %s (%r): %s', predicate_id, R.name, params, 'holds' if witness is None else witness)
    return PredicateReport(predicate_id, R, params, witness is None, witness, cls.cost(R))


def replay(report):
    """True when the report's witness violates the definition it was found for"""
    predicate = predicate_class(report.predicate)(report.ring, report.params.get('e'))
    return predicate.violated_by(report.witness)


def check_for_all_idempotents(predicate_id, R, budget=None):
    """One report per nonzero idempotent (a single report when the predicate takes no e)"""
    if not predicate_class(predicate_id).needs_e:
        return [check(predicate_id, R, budget=budget)]
    return [check(predicate_id, R, {'e': e}, budget=budget)
            for e in idempotent_elements(R) if e != R.zero]
